#pragma once

#include <vector>

#include "burnside/lattice.hpp"

namespace burnside {

class BurnsideRing;
class BurnsideElement;

// A finite left action of one subgroup of the lattice on points 0..size-1,
// stored as a full element-by-point table (positions index the acting
// subgroup's element list).
struct GSet {
  const SubgroupLattice* lat = nullptr;
  int acting = -1;  // lattice id of the acting subgroup
  int size = 0;
  std::vector<std::vector<int>> table;  // table[pos][point]

  int apply_pos(int pos, int point) const { return table[pos][point]; }
  // Action by a group element index (must lie in the acting subgroup).
  int apply(int elem, int point) const;

  // Checks identity and compatibility axioms; throws std::logic_error.
  void check_valid() const;

  int stabilizer(int point) const;  // lattice id
  std::vector<std::vector<int>> orbits() const;
  long fixed_points(int subgroup_id) const;
};

GSet trivial_gset(const SubgroupLattice& lat, int acting, int n);
// Left coset space acting/k with `acting` acting by left translation.
GSet coset_gset(const SubgroupLattice& lat, int acting, int k);
GSet disjoint_union(const GSet& a, const GSet& b);
GSet product_gset(const GSet& a, const GSet& b);  // diagonal action

// Multiplicative induction: the H-set of K-equivariant maps H -> X, realized
// on tuples over the right cosets K\H (lexicographic order).  Precondition:
// K = x.acting <= H.  The result has |X|^[H:K] points.
GSet coinduce(const GSet& x, int h);

// A point map X -> Y between sets with the same acting subgroup.
struct EquivariantMap {
  const GSet* from = nullptr;
  const GSet* to = nullptr;
  std::vector<int> point_map;

  void check_equivariant() const;  // throws std::invalid_argument
};

}  // namespace burnside
