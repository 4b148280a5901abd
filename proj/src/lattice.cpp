#include "burnside/lattice.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace burnside {

// ---------------------------------------------------------------------------
// PrimeSet

namespace {
bool is_prime(int n) {
  if (n < 2) return false;
  for (int d = 2; static_cast<long>(d) * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}
}  // namespace

PrimeSet PrimeSet::all() {
  PrimeSet p;
  p.all_mode_ = true;
  return p;
}

PrimeSet PrimeSet::none() { return PrimeSet{}; }

PrimeSet PrimeSet::of(std::vector<int> primes) {
  PrimeSet p;
  for (int q : primes)
    if (!is_prime(q))
      throw std::invalid_argument("not a prime: " + std::to_string(q));
  std::sort(primes.begin(), primes.end());
  primes.erase(std::unique(primes.begin(), primes.end()), primes.end());
  p.primes_ = std::move(primes);
  return p;
}

PrimeSet PrimeSet::parse(const std::string& text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  if (s == "all") return all();
  if (s == "none" || s.empty()) return none();
  std::vector<int> ps;
  size_t start = 0;
  for (size_t i = 0; i <= s.size(); ++i) {
    if (i == s.size() || s[i] == ',') {
      const std::string tok = s.substr(start, i - start);
      start = i + 1;
      if (tok.empty()) throw std::invalid_argument("empty entry in primes list");
      size_t pos = 0;
      int v;
      try {
        v = std::stoi(tok, &pos);
      } catch (const std::exception&) {
        throw std::invalid_argument("bad primes entry '" + tok + "'");
      }
      if (pos != tok.size()) throw std::invalid_argument("bad primes entry '" + tok + "'");
      ps.push_back(v);
    }
  }
  return of(std::move(ps));
}

const std::vector<int>& PrimeSet::primes() const {
  if (all_mode_)
    throw std::logic_error("PrimeSet in 'all' mode must be normalized before use");
  return primes_;
}

bool PrimeSet::contains(int p) const {
  if (all_mode_) return true;
  return std::binary_search(primes_.begin(), primes_.end(), p);
}

PrimeSet PrimeSet::normalized(long group_order) const {
  if (!all_mode_) return *this;
  return of(prime_divisors(group_order));
}

std::string PrimeSet::to_string() const {
  if (all_mode_) return "all";
  if (primes_.empty()) return "none";
  std::string out;
  for (size_t i = 0; i < primes_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(primes_[i]);
  }
  return out;
}

bool PrimeSet::operator==(const PrimeSet& o) const {
  return all_mode_ == o.all_mode_ && primes_ == o.primes_;
}

long PrimeSet::part_of(long n) const {
  long m = 1;
  for (int p : primes()) {
    while (n % p == 0) {
      n /= p;
      m *= p;
    }
  }
  return m;
}

bool PrimeSet::is_number(long n) const {
  for (int p : primes())
    while (n % p == 0) n /= p;
  return n == 1;
}

std::vector<int> prime_divisors(long n) {
  std::vector<int> out;
  for (long d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(static_cast<int>(d));
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(static_cast<int>(n));
  return out;
}

// ---------------------------------------------------------------------------
// Raw element-set helpers

std::vector<int> closure_set(const FiniteGroup& g, std::vector<int> seed) {
  std::vector<char> dedup(g.order(), 0);
  std::vector<int> gens;
  for (int s : seed)
    if (s != g.identity() && !std::exchange(dedup[s], 1)) gens.push_back(s);
  std::vector<char> mask(g.order(), 0);
  std::vector<int> list{g.identity()};
  mask[g.identity()] = 1;
  for (size_t pos = 0; pos < list.size(); ++pos) {
    for (int s : gens) {
      int y = g.mul(list[pos], s);
      if (!mask[y]) {
        mask[y] = 1;
        list.push_back(y);
      }
    }
  }
  std::sort(list.begin(), list.end());
  return list;
}

std::vector<int> derived_set(const FiniteGroup& g, const std::vector<int>& elems) {
  std::vector<char> seen(g.order(), 0);
  std::vector<int> comms;
  for (int a : elems) {
    for (int b : elems) {
      int c = g.mul(g.mul(g.inv(a), g.inv(b)), g.mul(a, b));
      if (!std::exchange(seen[c], 1)) comms.push_back(c);
    }
  }
  return closure_set(g, comms);
}

std::vector<int> solvable_residual_set(const FiniteGroup& g, std::vector<int> elems) {
  while (true) {
    std::vector<int> next = derived_set(g, elems);
    if (next.size() == elems.size()) return elems;
    elems = std::move(next);
  }
}

bool is_solvable_set(const FiniteGroup& g, const std::vector<int>& elems) {
  return solvable_residual_set(g, elems).size() == 1;
}

// ---------------------------------------------------------------------------
// SubgroupLattice

SubgroupLattice::SubgroupLattice(const FiniteGroup& g) : g_(g) {
  enumerate();
  classify();
  derived_.assign(count(), -2);
  normalizer_.assign(count(), -2);
}

std::vector<int> SubgroupLattice::closure_elements(const std::vector<int>& seed) const {
  return closure_set(g_, seed);
}

void SubgroupLattice::enumerate() {
  const int n = g_.order();
  std::set<std::vector<int>> found;
  std::vector<std::vector<int>> queue;
  auto add = [&](std::vector<int> v) {
    if (found.insert(v).second) queue.push_back(std::move(v));
  };

  add({g_.identity()});
  for (int a = 1; a < n; ++a) {
    std::vector<int> cyc;
    int x = a;
    while (x != g_.identity()) {
      cyc.push_back(x);
      x = g_.mul(x, a);
    }
    cyc.push_back(g_.identity());
    std::sort(cyc.begin(), cyc.end());
    add(std::move(cyc));
  }

  // Perfect subgroups cannot be reached by cyclic extension from below, so
  // they are seeded explicitly.  Every nonsolvable subgroup contains a
  // nonsolvable 2-generated subgroup (Thompson), every perfect subgroup is a
  // join of solvable residuals of such, and joins of perfect subgroups are
  // perfect; hence the closure below finds all of them.
  std::vector<int> everything(n);
  std::iota(everything.begin(), everything.end(), 0);
  std::vector<int> big_residual = solvable_residual_set(g_, everything);
  if (big_residual.size() > 1) {
    std::set<std::vector<int>> perfect;
    for (size_t ai = 0; ai < big_residual.size(); ++ai) {
      for (size_t bi = ai + 1; bi < big_residual.size(); ++bi) {
        int a = big_residual[ai], b = big_residual[bi];
        if (a == g_.identity() || b == g_.identity()) continue;
        std::vector<int> two = closure_set(g_, {a, b});
        std::vector<int> res = solvable_residual_set(g_, two);
        if (res.size() > 1) perfect.insert(std::move(res));
      }
    }
    bool grew = true;
    while (grew) {
      grew = false;
      std::vector<std::vector<int>> snapshot(perfect.begin(), perfect.end());
      for (size_t i = 0; i < snapshot.size(); ++i) {
        for (size_t j = i + 1; j < snapshot.size(); ++j) {
          std::vector<int> u = snapshot[i];
          u.insert(u.end(), snapshot[j].begin(), snapshot[j].end());
          std::vector<int> joined = closure_set(g_, u);
          if (perfect.insert(std::move(joined)).second) grew = true;
        }
      }
    }
    for (const auto& p : perfect) add(p);
  }

  const std::vector<int> gprimes = prime_divisors(n);
  std::vector<char> submask(n);

  // Cyclic extension: grow each known subgroup U by a normalizing element g
  // with g^p in U, giving a subgroup of order p|U|.  Every subgroup sits atop
  // its solvable residual through such prime steps, so with the seeds above
  // this reaches the whole lattice.
  for (size_t pos = 0; pos < queue.size(); ++pos) {
    const std::vector<int> u = queue[pos];  // copy: queue may reallocate
    const int usize = static_cast<int>(u.size());
    std::fill(submask.begin(), submask.end(), 0);
    for (int e : u) submask[e] = 1;

    std::vector<int> normalizing;
    for (int w = 0; w < n; ++w) {
      if (submask[w]) continue;
      bool ok = true;
      for (int e : u) {
        if (!submask[g_.conj(w, e)]) {
          ok = false;
          break;
        }
      }
      if (ok) normalizing.push_back(w);
    }

    for (int p : gprimes) {
      if ((n / usize) % p != 0) continue;
      for (int w : normalizing) {
        if (!submask[g_.power(w, p)]) continue;
        std::vector<int> v;
        v.reserve(static_cast<size_t>(usize) * p);
        v.insert(v.end(), u.begin(), u.end());
        int wi = w;
        for (int i = 1; i < p; ++i) {
          for (int e : u) v.push_back(g_.mul(e, wi));
          wi = g_.mul(wi, w);
        }
        std::sort(v.begin(), v.end());
        add(std::move(v));
      }
    }
  }

  std::vector<std::vector<int>> all(found.begin(), found.end());
  std::sort(all.begin(), all.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  subs_.resize(all.size());
  for (size_t id = 0; id < all.size(); ++id) {
    Subgroup& s = subs_[id];
    s.elements = std::move(all[id]);
    s.order = static_cast<int>(s.elements.size());
    s.mask.assign(n, 0);
    for (int e : s.elements) s.mask[e] = 1;
    ids_[s.elements] = static_cast<int>(id);
  }
  for (auto& s : subs_) {
    size_t have = 1;
    for (int e : s.elements) {
      if (e == g_.identity()) continue;
      if (have == static_cast<size_t>(s.order)) break;
      std::vector<int> probe = s.gens;
      probe.push_back(e);
      std::vector<int> cl = closure_set(g_, probe);
      if (cl.size() > have) {
        s.gens.push_back(e);
        have = cl.size();
      }
    }
  }
}

void SubgroupLattice::classify() {
  class_of_.assign(count(), -1);
  for (int id = 0; id < count(); ++id) {
    if (class_of_[id] != -1) continue;
    const int cid = static_cast<int>(class_reps_.size());
    std::vector<int> orbit{id};
    class_of_[id] = cid;
    for (size_t pos = 0; pos < orbit.size(); ++pos) {
      for (int gen : g_.generators()) {
        int c = conjugate(orbit[pos], gen);
        if (class_of_[c] == -1) {
          class_of_[c] = cid;
          orbit.push_back(c);
        }
      }
    }
    std::sort(orbit.begin(), orbit.end());
    class_reps_.push_back(id);
    class_members_.push_back(std::move(orbit));
  }
  class_labels_.resize(class_count());
  int last_order = -1, index = 0;
  for (int cid = 0; cid < class_count(); ++cid) {
    const int ord = subs_[class_reps_[cid]].order;
    index = (ord == last_order) ? index + 1 : 1;
    last_order = ord;
    class_labels_[cid] = std::to_string(ord) + ":" + std::to_string(index);
  }
}

int SubgroupLattice::id_of_elements(const std::vector<int>& sorted_elems) const {
  auto it = ids_.find(sorted_elems);
  return it == ids_.end() ? -1 : it->second;
}

int SubgroupLattice::closure_id(const std::vector<int>& seed) const {
  int id = id_of_elements(closure_elements(seed));
  if (id < 0) throw std::logic_error("closure produced a subgroup missing from the lattice");
  return id;
}

bool SubgroupLattice::contains(int big, int small) const {
  const Subgroup& b = subs_[big];
  const Subgroup& s = subs_[small];
  if (s.order > b.order || b.order % s.order != 0) return false;
  for (int e : s.elements)
    if (!b.mask[e]) return false;
  return true;
}

int SubgroupLattice::intersect(int a, int b) const {
  if (subs_[a].order > subs_[b].order) std::swap(a, b);
  std::vector<int> out;
  for (int e : subs_[a].elements)
    if (subs_[b].mask[e]) out.push_back(e);
  int id = id_of_elements(out);
  if (id < 0) throw std::logic_error("intersection missing from the lattice");
  return id;
}

int SubgroupLattice::join(int a, int b) const {
  std::vector<int> seed = subs_[a].gens;
  seed.insert(seed.end(), subs_[b].gens.begin(), subs_[b].gens.end());
  return closure_id(seed);
}

int SubgroupLattice::conjugate(int id, int g) const {
  std::vector<int> out;
  out.reserve(subs_[id].elements.size());
  for (int e : subs_[id].elements) out.push_back(g_.conj(g, e));
  std::sort(out.begin(), out.end());
  int cid = id_of_elements(out);
  if (cid < 0) throw std::logic_error("conjugate missing from the lattice");
  return cid;
}

int SubgroupLattice::normalizer(int id) const {
  {
    std::lock_guard<std::mutex> lock(mu_);
    if (normalizer_[id] != -2) return normalizer_[id];
  }
  const Subgroup& s = subs_[id];
  std::vector<int> nelems;
  for (int w = 0; w < g_.order(); ++w) {
    bool ok = true;
    for (int e : s.elements) {
      if (!s.mask[g_.conj(w, e)]) {
        ok = false;
        break;
      }
    }
    if (ok) nelems.push_back(w);
  }
  int nid = id_of_elements(nelems);
  if (nid < 0) throw std::logic_error("normalizer missing from the lattice");
  std::lock_guard<std::mutex> lock(mu_);
  normalizer_[id] = nid;
  return nid;
}

bool SubgroupLattice::is_normal_in(int small, int big) const {
  if (!contains(big, small)) return false;
  for (int gen : subs_[big].gens)
    if (conjugate(small, gen) != small) return false;
  return true;
}

std::optional<int> SubgroupLattice::class_by_label(const std::string& label) const {
  for (int cid = 0; cid < class_count(); ++cid)
    if (class_labels_[cid] == label) return cid;
  return std::nullopt;
}

int SubgroupLattice::derived_subgroup(int id) const {
  {
    std::lock_guard<std::mutex> lock(mu_);
    if (derived_[id] != -2) return derived_[id];
  }
  int did = id_of_elements(derived_set(g_, subs_[id].elements));
  if (did < 0) throw std::logic_error("derived subgroup missing from the lattice");
  std::lock_guard<std::mutex> lock(mu_);
  derived_[id] = did;
  return did;
}

int SubgroupLattice::solvable_residual(int id) const {
  int cur = id;
  while (true) {
    int next = derived_subgroup(cur);
    if (next == cur) return cur;
    cur = next;
  }
}

bool SubgroupLattice::is_solvable(int id) const {
  return solvable_residual(id) == trivial_id();
}

int SubgroupLattice::p_residual(int id, const PrimeSet& p) const {
  if (p.is_all())
    throw std::invalid_argument("p_residual needs a normalized prime set");
  const std::string pkey = p.to_string();
  {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = residual_.find({id, pkey});
    if (it != residual_.end()) return it->second;
  }

  // Iterate M -> <commutators(M), x^m for x in M> with m the P-part of |M|.
  // Each step is fully characteristic, kills the P-solvable top layer, and
  // stabilizes at the P-residual; minimality is then checked directly.
  std::vector<int> cur = subs_[id].elements;
  while (true) {
    const long m = p.part_of(static_cast<long>(cur.size()));
    if (m == 1) break;  // nothing left to kill: quotient by cur already fine
    std::vector<char> seen(g_.order(), 0);
    std::vector<int> seed;
    for (int a : cur) {
      for (int b : cur) {
        int c = g_.mul(g_.mul(g_.inv(a), g_.inv(b)), g_.mul(a, b));
        if (!std::exchange(seen[c], 1)) seed.push_back(c);
      }
    }
    for (int a : cur) {
      int c = g_.power(a, m);
      if (!std::exchange(seen[c], 1)) seed.push_back(c);
    }
    std::vector<int> next = closure_set(g_, seed);
    if (next.size() == cur.size()) break;
    cur = std::move(next);
  }
  int rid = id_of_elements(cur);
  if (rid < 0) throw std::logic_error("P-residual missing from the lattice");

  // Verify: rid is normal with solvable quotient of P-order, and is minimal
  // among subgroups with those properties.
  const int horder = subs_[id].order;
  const int dinf = solvable_residual(id);
  if (!is_normal_in(rid, id) || !p.is_number(horder / subs_[rid].order) ||
      !contains(rid, dinf))
    throw std::logic_error("P-residual failed its defining properties");
  for (int m_id : members_of(id)) {
    if (!is_normal_in(m_id, id)) continue;
    if (!p.is_number(horder / subs_[m_id].order)) continue;
    if (!contains(m_id, dinf)) continue;  // quotient not solvable
    if (!contains(m_id, rid))
      throw std::logic_error("P-residual is not minimal");
  }

  std::lock_guard<std::mutex> lock(mu_);
  residual_[{id, pkey}] = rid;
  return rid;
}

std::vector<int> SubgroupLattice::p_perfect_class_ids(const PrimeSet& p) const {
  std::vector<int> out;
  for (int cid = 0; cid < class_count(); ++cid)
    if (is_p_perfect(class_reps_[cid], p)) out.push_back(cid);
  return out;
}

std::vector<int> SubgroupLattice::double_cosets(int q, int k, int h) const {
  if (!contains(h, q) || !contains(h, k))
    throw std::invalid_argument("double_cosets requires Q and K inside H");
  std::vector<char> visited(g_.order(), 0);
  std::vector<int> reps;
  for (int x : subs_[h].elements) {
    if (visited[x]) continue;
    reps.push_back(x);
    for (int qe : subs_[q].elements)
      for (int ke : subs_[k].elements)
        visited[g_.mul(g_.mul(qe, x), ke)] = 1;
  }
  return reps;
}

std::vector<int> SubgroupLattice::right_coset_reps(int k, int h) const {
  if (!contains(h, k))
    throw std::invalid_argument("coset reps require K inside H");
  std::vector<char> visited(g_.order(), 0);
  std::vector<int> reps;
  for (int x : subs_[h].elements) {
    if (visited[x]) continue;
    reps.push_back(x);
    for (int ke : subs_[k].elements) visited[g_.mul(ke, x)] = 1;
  }
  return reps;
}

std::vector<int> SubgroupLattice::left_coset_reps(int k, int h) const {
  if (!contains(h, k))
    throw std::invalid_argument("coset reps require K inside H");
  std::vector<char> visited(g_.order(), 0);
  std::vector<int> reps;
  for (int x : subs_[h].elements) {
    if (visited[x]) continue;
    reps.push_back(x);
    for (int ke : subs_[k].elements) visited[g_.mul(x, ke)] = 1;
  }
  return reps;
}

const std::vector<int>& SubgroupLattice::members_of(int host) const {
  {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = members_.find(host);
    if (it != members_.end()) return it->second;
  }
  std::vector<int> out;
  for (int id = 0; id < count(); ++id)
    if (contains(host, id)) out.push_back(id);
  std::lock_guard<std::mutex> lock(mu_);
  return members_.emplace(host, std::move(out)).first->second;
}

}  // namespace burnside
