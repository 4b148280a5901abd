#include "burnside/tambara.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace burnside {

std::vector<NormPair> pair_classes(const SubgroupLattice& lat) {
  std::vector<NormPair> out;
  for (int cid = 0; cid < lat.class_count(); ++cid) {
    const int h0 = lat.class_rep(cid);
    const std::vector<int>& nelems = lat.at(lat.normalizer(h0)).elements;
    std::set<int> seen;
    for (int k : lat.members_of(h0)) {
      if (seen.count(k)) continue;
      for (int n : nelems) seen.insert(lat.conjugate(k, n));
      out.push_back({k, h0});
    }
  }
  return out;
}

NormPair canonical_pair(const SubgroupLattice& lat, NormPair p) {
  if (!lat.contains(p.sup, p.sub))
    throw std::invalid_argument("pair must be a containment K <= H");
  const FiniteGroup& g = lat.group();
  const int h0 = lat.class_rep(lat.class_of(p.sup));
  int k1 = -1;
  for (int x = 0; x < g.order(); ++x) {
    if (lat.conjugate(p.sup, x) == h0) {
      k1 = lat.conjugate(p.sub, x);
      break;
    }
  }
  int best = k1;
  for (int n : lat.at(lat.normalizer(h0)).elements)
    best = std::min(best, lat.conjugate(k1, n));
  return {best, h0};
}

bool condition_star(const SubgroupLattice& lat, int l_class, NormPair pair) {
  if (!lat.contains(pair.sup, pair.sub))
    throw std::invalid_argument("pair must be a containment K <= H");
  for (int m : lat.class_members(l_class))
    if (lat.contains(pair.sup, m) && !lat.contains(pair.sub, m)) return false;
  return true;
}

namespace {

bool diamond_with(const BurnsideRing& ring, const BurnsideElement& e_full,
                  int l_class, NormPair pair, const PrimeSet& p) {
  const SubgroupLattice& lat = ring.lattice();
  const BurnsideElement v = ring.norm(ring.restrict(e_full, pair.sub), pair.sup);
  const TableOfMarks& th = ring.table(pair.sup);
  for (int i = 0; i < th.classes(); ++i) {
    if (lat.class_of(lat.p_residual(th.class_reps[i], p)) != l_class) continue;
    if (v.mark(i) != 1) return false;
  }
  return true;
}

bool division_with(const BurnsideRing& ring, const BurnsideElement& e_full,
                   NormPair pair) {
  const BurnsideElement u = ring.restrict(e_full, pair.sup);
  const BurnsideElement v = ring.norm(ring.restrict(e_full, pair.sub), pair.sup);
  return v * u == u;
}

BurnsideElement full_idempotent(const BurnsideRing& ring, int l_class,
                                const PrimeSet& p) {
  const SubgroupLattice& lat = ring.lattice();
  return ring.dress_idempotent(lat.full_group_id(), lat.class_rep(l_class), p);
}

}  // namespace

bool condition_diamond(const BurnsideRing& ring, int l_class, NormPair pair,
                       const PrimeSet& p) {
  return diamond_with(ring, full_idempotent(ring, l_class, p), l_class, pair, p);
}

bool norm_descends(const BurnsideRing& ring, int l_class, NormPair pair,
                   const PrimeSet& p) {
  return division_with(ring, full_idempotent(ring, l_class, p), pair);
}

TheoremAReport verify_theorem_a(const BurnsideRing& ring, const PrimeSet& p) {
  const SubgroupLattice& lat = ring.lattice();
  const PrimeSet pn = p.normalized(lat.group().order());
  TheoremAReport rep;
  rep.primes = pn;
  rep.l_classes = lat.p_perfect_class_ids(pn);
  const std::vector<NormPair> pairs = pair_classes(lat);
  rep.verdict = true;
  for (int l : rep.l_classes) {
    const BurnsideElement e = full_idempotent(ring, l, pn);
    for (const NormPair& pr : pairs) {
      TheoremARow row;
      row.l_class = l;
      row.pair = pr;
      row.star = condition_star(lat, l, pr);
      row.diamond = diamond_with(ring, e, l, pr, pn);
      row.division = division_with(ring, e, pr);
      if (!row.consistent()) rep.verdict = false;
      rep.rows.push_back(row);
    }
  }
  return rep;
}

// ---------------------------------------------------------------------------
// Indexing systems

IndexingSystem::IndexingSystem(const SubgroupLattice& lat) : lat_(&lat) {
  adm_.assign(lat.count(), std::vector<char>(lat.count(), 0));
}

IndexingSystem IndexingSystem::complete(const SubgroupLattice& lat) {
  IndexingSystem s(lat);
  for (int h = 0; h < lat.count(); ++h)
    for (int k : lat.members_of(h)) s.adm_[h][k] = 1;
  return s;
}

bool IndexingSystem::admissible(int k, int h) const {
  if (!lat_->contains(h, k))
    throw std::invalid_argument("admissibility is defined for containments only");
  return adm_[h][k] != 0;
}

void IndexingSystem::set(int k, int h, bool value) {
  if (!lat_->contains(h, k))
    throw std::invalid_argument("admissibility is defined for containments only");
  adm_[h][k] = value ? 1 : 0;
}

bool IndexingSystem::operator==(const IndexingSystem& o) const {
  return lat_ == o.lat_ && adm_ == o.adm_;
}

void IndexingSystem::verify_closure() const {
  const SubgroupLattice& lat = *lat_;
  const FiniteGroup& g = lat.group();
  for (int h = 0; h < lat.count(); ++h)
    if (!adm_[h][h]) throw std::logic_error("indexing system is not reflexive");
  for (int h = 0; h < lat.count(); ++h) {
    for (int k : lat.members_of(h)) {
      for (int gen : g.generators()) {
        const int h2 = lat.conjugate(h, gen);
        const int k2 = lat.conjugate(k, gen);
        if (adm_[h][k] != adm_[h2][k2])
          throw std::logic_error("indexing system is not conjugation closed");
      }
    }
  }
  for (int c = 0; c < lat.count(); ++c) {
    for (int b : lat.members_of(c)) {
      if (!adm_[c][b]) continue;
      for (int a : lat.members_of(b))
        if (adm_[b][a] && !adm_[c][a])
          throw std::logic_error("indexing system is not composition closed");
    }
  }
  for (int h = 0; h < lat.count(); ++h) {
    for (int k : lat.members_of(h)) {
      if (!adm_[h][k]) continue;
      for (int a : lat.members_of(h)) {
        for (int t : lat.double_cosets(a, k, h)) {
          const int s = lat.intersect(a, lat.conjugate(k, t));
          if (!adm_[a][s])
            throw std::logic_error("indexing system is not pullback closed");
        }
      }
    }
  }
}

IndexingSystem indexing_system(const SubgroupLattice& lat, int l_class,
                               const PrimeSet& p) {
  const PrimeSet pn = p.normalized(lat.group().order());
  if (!lat.is_p_perfect(lat.class_rep(l_class), pn))
    throw std::invalid_argument("indexing systems are indexed by P-perfect classes");
  IndexingSystem s(lat);
  const std::vector<int>& members = lat.class_members(l_class);
  for (int h = 0; h < lat.count(); ++h) {
    std::vector<int> inside;
    for (int m : members)
      if (lat.contains(h, m)) inside.push_back(m);
    for (int k : lat.members_of(h)) {
      bool ok = true;
      for (int m : inside) {
        if (!lat.contains(k, m)) {
          ok = false;
          break;
        }
      }
      s.set(k, h, ok);
    }
  }
  s.verify_closure();
  return s;
}

IndexingSystem intersect_indexing_systems(const std::vector<IndexingSystem>& systems) {
  if (systems.empty())
    throw std::invalid_argument("intersection needs at least one system");
  for (const auto& s : systems)
    if (&s.lattice() != &systems[0].lattice())
      throw std::invalid_argument("systems live over different lattices");
  const SubgroupLattice& lat = systems[0].lattice();
  IndexingSystem out(lat);
  for (int h = 0; h < lat.count(); ++h) {
    for (int k : lat.members_of(h)) {
      bool all = true;
      for (const auto& s : systems) {
        if (!s.admissible(k, h)) {
          all = false;
          break;
        }
      }
      out.set(k, h, all);
    }
  }
  out.verify_closure();
  return out;
}

IndexingSystem intersect_all_dress(const BurnsideRing& ring, const PrimeSet& p) {
  const SubgroupLattice& lat = ring.lattice();
  const PrimeSet pn = p.normalized(lat.group().order());
  std::vector<IndexingSystem> systems;
  for (int l : lat.p_perfect_class_ids(pn))
    systems.push_back(indexing_system(lat, l, pn));
  IndexingSystem out = intersect_indexing_systems(systems);

  // Direct description: (K,H) admissible iff all P-perfect subgroups of H
  // already lie in K.
  IndexingSystem direct(lat);
  for (int h = 0; h < lat.count(); ++h) {
    std::vector<int> perfect;
    for (int m : lat.members_of(h))
      if (lat.is_p_perfect(m, pn)) perfect.push_back(m);
    for (int k : lat.members_of(h)) {
      bool ok = true;
      for (int m : perfect) {
        if (!lat.contains(k, m)) {
          ok = false;
          break;
        }
      }
      direct.set(k, h, ok);
    }
  }
  if (!(out == direct))
    throw std::logic_error("intersection disagrees with its direct description");
  return out;
}

bool indexing_system_is_maximal(const BurnsideRing& ring,
                                const IndexingSystem& system, int l_class,
                                const PrimeSet& p) {
  const SubgroupLattice& lat = ring.lattice();
  const PrimeSet pn = p.normalized(lat.group().order());
  const BurnsideElement e = full_idempotent(ring, l_class, pn);
  for (const NormPair& pr : pair_classes(lat)) {
    if (system.admissible(pr.sub, pr.sup)) continue;
    if (division_with(ring, e, pr)) return false;
  }
  return true;
}

std::pair<bool, bool> normality_characterization(const SubgroupLattice& lat,
                                                 int l_class, const PrimeSet& p) {
  const PrimeSet pn = p.normalized(lat.group().order());
  if (!lat.is_p_perfect(lat.class_rep(l_class), pn))
    throw std::invalid_argument("normality characterization needs a P-perfect class");
  const bool normal = lat.class_members(l_class).size() == 1;
  bool all_norms = true;
  for (const NormPair& pr : pair_classes(lat)) {
    bool bottom_contains = false;
    for (int m : lat.class_members(l_class)) {
      if (lat.contains(pr.sub, m)) {
        bottom_contains = true;
        break;
      }
    }
    if (bottom_contains && !condition_star(lat, l_class, pr)) {
      all_norms = false;
      break;
    }
  }
  if (normal != all_norms)
    throw std::logic_error("normality characterization failed");
  return {normal, all_norms};
}

bool is_admissible_map(const EquivariantMap& f, const IndexingSystem& system) {
  f.check_equivariant();
  if (&system.lattice() != f.from->lat)
    throw std::invalid_argument("map and system live over different lattices");
  for (int x = 0; x < f.from->size; ++x) {
    const int kx = f.from->stabilizer(x);
    const int hx = f.to->stabilizer(f.point_map[x]);
    if (!system.admissible(kx, hx)) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Localized Green ring

LocalizedGreenRing::LocalizedGreenRing(const BurnsideRing& ring, int l_class,
                                       const PrimeSet& p)
    : ring_(&ring),
      l_class_(l_class),
      p_(p.normalized(ring.lattice().group().order())),
      e_(full_idempotent(ring, l_class, p_)) {}

const BurnsideElement& LocalizedGreenRing::restricted_idempotent(int host) const {
  {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = restricted_.find(host);
    if (it != restricted_.end()) return it->second;
  }
  BurnsideElement r = ring_->restrict(e_, host);
  std::lock_guard<std::mutex> lock(mu_);
  return restricted_.emplace(host, std::move(r)).first->second;
}

BurnsideElement LocalizedGreenRing::project(const BurnsideElement& x) const {
  return restricted_idempotent(x.host()) * x;
}

int LocalizedGreenRing::rank(int host) const {
  return static_cast<int>(basis_rows(host).size());
}

std::vector<int> LocalizedGreenRing::basis_rows(int host) const {
  const BurnsideElement& r = restricted_idempotent(host);
  std::vector<int> rows;
  for (size_t i = 0; i < r.marks().size(); ++i)
    if (r.marks()[i] == 1) rows.push_back(static_cast<int>(i));
  return rows;
}

bool LocalizedGreenRing::norm_allowed(int k, int h) const {
  const BurnsideElement u = restricted_idempotent(h);
  const BurnsideElement v = ring_->norm(restricted_idempotent(k), h);
  return v * u == u;
}

BurnsideElement LocalizedGreenRing::restrict(const BurnsideElement& x, int k) const {
  return project(ring_->restrict(x, k));
}

BurnsideElement LocalizedGreenRing::transfer(const BurnsideElement& x, int h) const {
  return project(ring_->transfer(x, h));
}

BurnsideElement LocalizedGreenRing::conjugate(const BurnsideElement& x, int g) const {
  return project(ring_->conjugate(x, g));
}

BurnsideElement LocalizedGreenRing::norm(const BurnsideElement& x, int h) const {
  if (!norm_allowed(x.host(), h))
    throw std::domain_error("norm does not descend to this localized summand");
  return project(ring_->norm(x, h));
}

// ---------------------------------------------------------------------------
// Splitting report

SplittingReport splitting_report(const BurnsideRing& ring, const PrimeSet& p) {
  const SubgroupLattice& lat = ring.lattice();
  const PrimeSet pn = p.normalized(lat.group().order());
  SplittingReport rep;
  rep.primes = pn;

  const std::vector<int> ls = lat.p_perfect_class_ids(pn);
  std::vector<BurnsideElement> es;
  for (int l : ls) es.push_back(full_idempotent(ring, l, pn));

  BurnsideElement sum = ring.zero(lat.full_group_id());
  for (const auto& e : es) sum = sum + e;
  rep.sum_is_one = (sum == ring.one(lat.full_group_id()));

  rep.orthogonal = true;
  for (size_t i = 0; i < es.size(); ++i)
    for (size_t j = i + 1; j < es.size(); ++j)
      if (!(es[i] * es[j]).is_zero()) rep.orthogonal = false;

  rep.total_ranks.resize(lat.class_count());
  for (int cid = 0; cid < lat.class_count(); ++cid)
    rep.total_ranks[cid] = ring.table(lat.class_rep(cid)).classes();

  for (size_t li = 0; li < ls.size(); ++li) {
    SplittingFactor f;
    f.l_class = ls[li];
    f.marks = es[li].marks();
    f.orbit = es[li].orbit_coeffs();
    for (int cid = 0; cid < lat.class_count(); ++cid) {
      const BurnsideElement r = ring.restrict(es[li], lat.class_rep(cid));
      int rank = 0;
      for (const Rat& m : r.marks())
        if (m == 1) ++rank;
      f.ranks.push_back(rank);
    }
    rep.factors.push_back(std::move(f));
  }

  rep.ranks_additive = true;
  for (int cid = 0; cid < lat.class_count(); ++cid) {
    int total = 0;
    for (const auto& f : rep.factors) total += f.ranks[cid];
    if (total != rep.total_ranks[cid]) rep.ranks_additive = false;
  }

  const IndexingSystem shared = intersect_all_dress(ring, pn);
  rep.shared_norms_ok = true;
  for (const NormPair& pr : pair_classes(lat)) {
    if (!shared.admissible(pr.sub, pr.sup)) continue;
    rep.shared_pairs.push_back(pr);
    for (size_t li = 0; li < ls.size(); ++li)
      if (!division_with(ring, es[li], pr)) rep.shared_norms_ok = false;
  }

  for (size_t li = 0; li < ls.size(); ++li) {
    for (int cid = 0; cid < lat.class_count(); ++cid) {
      const int host = lat.class_rep(cid);
      const BurnsideElement r = ring.restrict(es[li], host);
      if (r.is_zero()) continue;
      BurnsideElement picked = ring.zero(host);
      int summands = 0;
      for (const auto& [row, f] : ring.primitive_idempotents(host, pn)) {
        if (f * r == f) {
          picked = picked + f;
          ++summands;
        }
      }
      if (!(picked == r))
        throw std::logic_error("restricted idempotent did not split into primitives");
      std::set<int> local_classes;
      const TableOfMarks& th = ring.table(host);
      for (int m : lat.class_members(ls[li]))
        if (lat.contains(host, m)) local_classes.insert(th.local_class(m));
      rep.decomposition.push_back({ls[li], cid, summands,
                                   static_cast<int>(local_classes.size())});
    }
  }
  return rep;
}

}  // namespace burnside
