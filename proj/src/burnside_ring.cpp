#include "burnside/burnside_ring.hpp"

#include <algorithm>
#include <stdexcept>

#include "burnside/gset.hpp"

namespace burnside {

int TableOfMarks::local_class(int subgroup_id) const {
  auto it = class_index.find(subgroup_id);
  if (it == class_index.end())
    throw std::invalid_argument("subgroup does not lie in this host");
  return it->second;
}

std::vector<Rat> TableOfMarks::marks_to_orbit(const std::vector<Rat>& marks) const {
  const int n = classes();
  if (static_cast<int>(marks.size()) != n)
    throw std::invalid_argument("mark vector has wrong length");
  std::vector<Rat> c(n);
  for (int i = n - 1; i >= 0; --i) {
    Rat acc = marks[i];
    for (int j = i + 1; j < n; ++j) acc -= Rat(entries[i][j]) * c[j];
    c[i] = acc / Rat(entries[i][i]);
  }
  return c;
}

std::vector<Rat> TableOfMarks::orbit_to_marks(const std::vector<Rat>& coeffs) const {
  const int n = classes();
  if (static_cast<int>(coeffs.size()) != n)
    throw std::invalid_argument("coefficient vector has wrong length");
  std::vector<Rat> m(n, Rat(0));
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j)
      if (entries[i][j] != 0) m[i] += Rat(entries[i][j]) * coeffs[j];
  return m;
}

BurnsideElement::BurnsideElement(const BurnsideRing* ring, int host,
                                 std::vector<Rat> marks)
    : ring_(ring), host_(host), marks_(std::move(marks)) {}

std::vector<Rat> BurnsideElement::orbit_coeffs() const {
  return ring_->table(host_).marks_to_orbit(marks_);
}

bool BurnsideElement::is_zero() const {
  for (const Rat& m : marks_)
    if (m != 0) return false;
  return true;
}

bool BurnsideElement::operator==(const BurnsideElement& o) const {
  return ring_ == o.ring_ && host_ == o.host_ && marks_ == o.marks_;
}

namespace {
void require_same(const BurnsideElement& a, const BurnsideElement& b) {
  if (&a.ring() != &b.ring() || a.host() != b.host())
    throw std::invalid_argument("elements live over different hosts");
}
}  // namespace

BurnsideElement BurnsideElement::operator+(const BurnsideElement& o) const {
  require_same(*this, o);
  std::vector<Rat> m(marks_);
  for (size_t i = 0; i < m.size(); ++i) m[i] += o.marks_[i];
  return BurnsideElement(ring_, host_, std::move(m));
}

BurnsideElement BurnsideElement::operator-(const BurnsideElement& o) const {
  require_same(*this, o);
  std::vector<Rat> m(marks_);
  for (size_t i = 0; i < m.size(); ++i) m[i] -= o.marks_[i];
  return BurnsideElement(ring_, host_, std::move(m));
}

BurnsideElement BurnsideElement::operator*(const BurnsideElement& o) const {
  require_same(*this, o);
  std::vector<Rat> m(marks_);
  for (size_t i = 0; i < m.size(); ++i) m[i] *= o.marks_[i];
  return BurnsideElement(ring_, host_, std::move(m));
}

BurnsideElement BurnsideElement::scaled(const Rat& c) const {
  std::vector<Rat> m(marks_);
  for (auto& v : m) v *= c;
  return BurnsideElement(ring_, host_, std::move(m));
}

BurnsideRing::BurnsideRing(const SubgroupLattice& lat) : lat_(lat) {}

const TableOfMarks& BurnsideRing::table(int host) const {
  {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = tables_.find(host);
    if (it != tables_.end()) return *it->second;
  }
  auto t = std::make_unique<TableOfMarks>();
  t->host = host;
  const FiniteGroup& g = lat_.group();
  const std::vector<int>& members = lat_.members_of(host);
  const std::vector<int>& hgens = lat_.at(host).gens;

  // Host-conjugacy classes of the members, ascending id per class rep.
  std::unordered_map<int, int> cls;
  for (int id : members) {
    if (cls.count(id)) continue;
    const int row = t->classes();
    t->class_reps.push_back(id);
    std::vector<int> orbit{id};
    cls[id] = row;
    for (size_t pos = 0; pos < orbit.size(); ++pos) {
      for (int gen : hgens) {
        int c = lat_.conjugate(orbit[pos], gen);
        if (!cls.count(c)) {
          cls[c] = row;
          orbit.push_back(c);
        }
      }
    }
  }
  t->class_index = std::move(cls);

  t->labels.resize(t->classes());
  int last_order = -1, index = 0;
  for (int row = 0; row < t->classes(); ++row) {
    const int ord = lat_.at(t->class_reps[row]).order;
    index = (ord == last_order) ? index + 1 : 1;
    last_order = ord;
    t->labels[row] = std::to_string(ord) + ":" + std::to_string(index);
  }

  const int n = t->classes();
  t->entries.assign(n, std::vector<long>(n, 0));
  for (int j = 0; j < n; ++j) {
    const int k = t->class_reps[j];
    const Subgroup& ks = lat_.at(k);
    const std::vector<int> creps = lat_.left_coset_reps(k, host);
    for (int i = 0; i < n; ++i) {
      if (lat_.at(t->class_reps[i]).order > ks.order) continue;
      const std::vector<int>& qgens = lat_.at(t->class_reps[i]).gens;
      long count = 0;
      for (int c : creps) {
        const int cinv = g.inv(c);
        bool fixed = true;
        for (int q : qgens) {
          if (!ks.mask[g.mul(g.mul(cinv, q), c)]) {
            fixed = false;
            break;
          }
        }
        if (fixed) ++count;
      }
      t->entries[i][j] = count;
    }
  }

  std::lock_guard<std::mutex> lock(mu_);
  auto [it, fresh] = tables_.emplace(host, std::move(t));
  return *it->second;
}

const TableOfMarks& BurnsideRing::table_full() const {
  return table(lat_.full_group_id());
}

BurnsideElement BurnsideRing::zero(int host) const {
  return BurnsideElement(this, host, std::vector<Rat>(table(host).classes(), Rat(0)));
}

BurnsideElement BurnsideRing::one(int host) const {
  return BurnsideElement(this, host, std::vector<Rat>(table(host).classes(), Rat(1)));
}

BurnsideElement BurnsideRing::from_marks(int host, std::vector<Rat> marks) const {
  if (static_cast<int>(marks.size()) != table(host).classes())
    throw std::invalid_argument("mark vector has wrong length");
  return BurnsideElement(this, host, std::move(marks));
}

BurnsideElement BurnsideRing::from_orbit_coeffs(int host,
                                                const std::vector<Rat>& coeffs) const {
  return BurnsideElement(this, host, table(host).orbit_to_marks(coeffs));
}

BurnsideElement BurnsideRing::orbit_class(int host, int k) const {
  const TableOfMarks& t = table(host);
  const int j = t.local_class(k);
  std::vector<Rat> m(t.classes());
  for (int i = 0; i < t.classes(); ++i) m[i] = t.entries[i][j];
  return BurnsideElement(this, host, std::move(m));
}

BurnsideElement BurnsideRing::from_gset(const GSet& x) const {
  if (x.lat != &lat_) throw std::invalid_argument("G-set from a different lattice");
  const TableOfMarks& t = table(x.acting);
  std::vector<Rat> m(t.classes());
  for (int i = 0; i < t.classes(); ++i) m[i] = x.fixed_points(t.class_reps[i]);
  return BurnsideElement(this, x.acting, std::move(m));
}

BurnsideElement BurnsideRing::restrict(const BurnsideElement& x, int k) const {
  const int h = x.host();
  if (!lat_.contains(h, k))
    throw std::invalid_argument("restrict target is not a subgroup of the host");
  const TableOfMarks& th = table(h);
  const TableOfMarks& tk = table(k);
  std::vector<Rat> m(tk.classes());
  for (int i = 0; i < tk.classes(); ++i)
    m[i] = x.mark(th.local_class(tk.class_reps[i]));
  return BurnsideElement(this, k, std::move(m));
}

BurnsideElement BurnsideRing::transfer(const BurnsideElement& x, int h) const {
  const int k = x.host();
  if (!lat_.contains(h, k))
    throw std::invalid_argument("transfer target does not contain the host");
  const TableOfMarks& tk = table(k);
  const TableOfMarks& th = table(h);
  const std::vector<Rat> c = x.orbit_coeffs();
  std::vector<Rat> acc(th.classes(), Rat(0));
  for (int j = 0; j < tk.classes(); ++j)
    acc[th.local_class(tk.class_reps[j])] += c[j];
  return from_orbit_coeffs(h, acc);
}

BurnsideElement BurnsideRing::conjugate(const BurnsideElement& x, int g) const {
  const int h = x.host();
  const int h2 = lat_.conjugate(h, g);
  const TableOfMarks& th = table(h);
  const TableOfMarks& t2 = table(h2);
  const int ginv = lat_.group().inv(g);
  std::vector<Rat> m(t2.classes());
  for (int i = 0; i < t2.classes(); ++i)
    m[i] = x.mark(th.local_class(lat_.conjugate(t2.class_reps[i], ginv)));
  return BurnsideElement(this, h2, std::move(m));
}

BurnsideElement BurnsideRing::norm(const BurnsideElement& x, int h) const {
  const int k = x.host();
  if (!lat_.contains(h, k))
    throw std::invalid_argument("norm target does not contain the host");
  const FiniteGroup& g = lat_.group();
  const TableOfMarks& th = table(h);
  const TableOfMarks& tk = table(k);
  std::vector<Rat> m(th.classes());
  for (int i = 0; i < th.classes(); ++i) {
    const int q = th.class_reps[i];
    Rat prod(1);
    for (int t : lat_.double_cosets(q, k, h)) {
      const int s = lat_.intersect(lat_.conjugate(q, g.inv(t)), k);
      prod *= x.mark(tk.local_class(s));
      if (prod == 0) break;
    }
    m[i] = prod;
  }
  return BurnsideElement(this, h, std::move(m));
}

BurnsideElement BurnsideRing::dress_idempotent(int host, int l_id,
                                               const PrimeSet& p) const {
  if (p.is_all())
    throw std::invalid_argument("dress_idempotent needs a normalized prime set");
  if (!lat_.contains(host, l_id))
    throw std::invalid_argument("idempotent index must lie in the host");
  if (!lat_.is_p_perfect(l_id, p))
    throw std::invalid_argument("idempotent index must be P-perfect");
  const TableOfMarks& t = table(host);
  const int lrow = t.local_class(l_id);
  std::vector<Rat> m(t.classes());
  for (int i = 0; i < t.classes(); ++i) {
    const int res = lat_.p_residual(t.class_reps[i], p);
    m[i] = (t.local_class(res) == lrow) ? 1 : 0;
  }
  BurnsideElement e(this, host, std::move(m));
  if (!is_p_local(e, p))
    throw std::logic_error("Dress idempotent is not P-local");
  return e;
}

std::vector<std::pair<int, BurnsideElement>> BurnsideRing::primitive_idempotents(
    int host, const PrimeSet& p) const {
  const TableOfMarks& t = table(host);
  std::vector<std::pair<int, BurnsideElement>> out;
  for (int row = 0; row < t.classes(); ++row) {
    const int rep = t.class_reps[row];
    if (lat_.is_p_perfect(rep, p))
      out.emplace_back(row, dress_idempotent(host, rep, p));
  }
  return out;
}

bool BurnsideRing::is_p_local(const BurnsideElement& x, const PrimeSet& p) const {
  if (p.is_all())
    throw std::invalid_argument("is_p_local needs a normalized prime set");
  for (const Rat& c : x.orbit_coeffs())
    if (!denominator_avoids(c, p.primes())) return false;
  return true;
}

}  // namespace burnside
