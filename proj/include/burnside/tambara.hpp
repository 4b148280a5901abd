#pragma once

#include <map>
#include <utility>
#include <vector>

#include "burnside/burnside_ring.hpp"
#include "burnside/gset.hpp"

namespace burnside {

// A containment K <= H of subgroups (lattice ids).
struct NormPair {
  int sub = -1;
  int sup = -1;
  bool operator==(const NormPair& o) const { return sub == o.sub && sup == o.sup; }
  bool operator<(const NormPair& o) const {
    return sup != o.sup ? sup < o.sup : sub < o.sub;
  }
};

// Representatives of the pairs K <= H up to simultaneous conjugacy: for each
// class representative H0, one pair per N_G(H0)-orbit on subgroups of H0.
// Representatives are (least subgroup id in the orbit, H0), ascending.
std::vector<NormPair> pair_classes(const SubgroupLattice& lat);
NormPair canonical_pair(const SubgroupLattice& lat, NormPair p);

// Condition (*): every G-conjugate of L contained in H already lies in K.
bool condition_star(const SubgroupLattice& lat, int l_class, NormPair pair);

// Mark test: phi^Q(N_K^H(res_K e_L)) = 1 for every Q <= H whose P-residual
// is G-conjugate to L.
bool condition_diamond(const BurnsideRing& ring, int l_class, NormPair pair,
                       const PrimeSet& p);

// Division test: with u = res_H(e_L) and v = N_K^H(res_K(e_L)), checks
// v*u == u, i.e. v becomes the unit after localization at e_L.
bool norm_descends(const BurnsideRing& ring, int l_class, NormPair pair,
                   const PrimeSet& p);

struct TheoremARow {
  int l_class;
  NormPair pair;
  bool star, diamond, division;
  bool consistent() const { return star == diamond && diamond == division; }
};

struct TheoremAReport {
  PrimeSet primes;  // normalized
  std::vector<int> l_classes;
  std::vector<TheoremARow> rows;
  bool verdict = false;  // all three conditions agree on every row
};

// Evaluates the three conditions on every (P-perfect class, pair class).
TheoremAReport verify_theorem_a(const BurnsideRing& ring, const PrimeSet& p);

// A conjugation-invariant set of containment pairs, stored as a full
// admissibility table over the lattice.
class IndexingSystem {
 public:
  explicit IndexingSystem(const SubgroupLattice& lat);
  static IndexingSystem complete(const SubgroupLattice& lat);

  const SubgroupLattice& lattice() const { return *lat_; }
  bool admissible(int k, int h) const;
  void set(int k, int h, bool value);
  bool operator==(const IndexingSystem& o) const;

  // Checks reflexivity and closure under conjugation, composition and
  // pullback along restrictions; throws std::logic_error on a violation.
  void verify_closure() const;

 private:
  const SubgroupLattice* lat_;
  std::vector<std::vector<char>> adm_;
};

// The system I_L of pairs satisfying condition (*); L must be P-perfect.
IndexingSystem indexing_system(const SubgroupLattice& lat, int l_class,
                               const PrimeSet& p);

IndexingSystem intersect_indexing_systems(const std::vector<IndexingSystem>& systems);

// Intersection of I_L over all P-perfect classes L, cross-checked against
// the direct description: (K,H) admissible iff every P-perfect subgroup of H
// lies in K.  A mismatch throws std::logic_error.
IndexingSystem intersect_all_dress(const BurnsideRing& ring, const PrimeSet& p);

// Maximality of I_L: on every pair class outside I_L the division test
// fails.  Returns false (rather than throwing) when violated.
bool indexing_system_is_maximal(const BurnsideRing& ring,
                                const IndexingSystem& system, int l_class,
                                const PrimeSet& p);

// (L normal in G) versus (every pair whose bottom contains a conjugate of L
// satisfies condition (*)).  The two are asserted equal and returned.
std::pair<bool, bool> normality_characterization(const SubgroupLattice& lat,
                                                 int l_class, const PrimeSet& p);

// True when every point stabilizer pair (K_x <= H_f(x)) of the equivariant
// map f is admissible.  Non-equivariant input throws.
bool is_admissible_map(const EquivariantMap& f, const IndexingSystem& system);

// The e_L-summand of the P-local Burnside rings: restriction, transfer and
// conjugation always descend; the norm is guarded by the division test.
class LocalizedGreenRing {
 public:
  LocalizedGreenRing(const BurnsideRing& ring, int l_class, const PrimeSet& p);

  const BurnsideRing& ring() const { return *ring_; }
  int l_class() const { return l_class_; }
  const BurnsideElement& idempotent() const { return e_; }
  const BurnsideElement& restricted_idempotent(int host) const;

  // e_L|host * x, the image of x in the localized summand.
  BurnsideElement project(const BurnsideElement& x) const;
  int rank(int host) const;
  std::vector<int> basis_rows(int host) const;

  bool norm_allowed(int k, int h) const;
  BurnsideElement restrict(const BurnsideElement& x, int k) const;
  BurnsideElement transfer(const BurnsideElement& x, int h) const;
  BurnsideElement conjugate(const BurnsideElement& x, int g) const;
  // Throws std::domain_error when the norm does not descend for this pair.
  BurnsideElement norm(const BurnsideElement& x, int h) const;

 private:
  const BurnsideRing* ring_;
  int l_class_;
  PrimeSet p_;
  BurnsideElement e_;
  mutable std::mutex mu_;
  mutable std::map<int, BurnsideElement> restricted_;
};

struct SplittingFactor {
  int l_class;
  std::vector<Rat> marks;
  std::vector<Rat> orbit;
  std::vector<int> ranks;  // localized rank at each class representative host
};

struct DecompositionRow {
  int l_class;
  int host_class;
  int summands;             // primitive idempotents below res e_L
  int h_classes_in_g_class; // H-classes inside the G-class of L
};

struct SplittingReport {
  PrimeSet primes;  // normalized
  std::vector<SplittingFactor> factors;
  std::vector<int> total_ranks;  // per class representative host
  bool sum_is_one = false;
  bool orthogonal = false;
  bool ranks_additive = false;
  bool shared_norms_ok = false;
  std::vector<NormPair> shared_pairs;  // admissible pair classes of the intersection
  std::vector<DecompositionRow> decomposition;

  bool all_ok() const {
    return sum_is_one && orthogonal && ranks_additive && shared_norms_ok;
  }
};

// Full splitting of A(G) ⊗ Z_(P): factors, rank bookkeeping per subgroup
// class, the norms shared by all factors, and the observed decomposition of
// restricted idempotents.
SplittingReport splitting_report(const BurnsideRing& ring, const PrimeSet& p);

}  // namespace burnside
