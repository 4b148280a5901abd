#pragma once

#include <memory>
#include <mutex>
#include <unordered_map>
#include <vector>

#include "burnside/lattice.hpp"
#include "burnside/rational.hpp"

namespace burnside {

struct GSet;
class BurnsideRing;

// Table of marks of one host subgroup H: rows and columns are indexed by the
// H-conjugacy classes of subgroups of H in (order, lex) order, and
// entries[i][j] counts the cosets of H/K_j fixed by Q_i.  The matrix is upper
// triangular with positive diagonal, so mark vectors convert exactly to and
// from orbit-basis coordinates by back substitution.
struct TableOfMarks {
  int host = -1;
  std::vector<int> class_reps;            // lattice ids, canonical order
  std::vector<std::string> labels;        // "order:index" within the host
  std::vector<std::vector<long>> entries;
  std::unordered_map<int, int> class_index;  // lattice id (subgroup of host) -> row

  int classes() const { return static_cast<int>(class_reps.size()); }
  int local_class(int subgroup_id) const;
  std::vector<Rat> marks_to_orbit(const std::vector<Rat>& marks) const;
  std::vector<Rat> orbit_to_marks(const std::vector<Rat>& coeffs) const;
};

// Element of A(H) ⊗ Q for the host subgroup H, stored by its mark vector.
// Orbit-basis coordinates are derived lazily.  Elements are immutable.
class BurnsideElement {
 public:
  BurnsideElement() = default;
  BurnsideElement(const BurnsideRing* ring, int host, std::vector<Rat> marks);

  int host() const { return host_; }
  const BurnsideRing& ring() const { return *ring_; }
  const std::vector<Rat>& marks() const { return marks_; }
  const Rat& mark(int local_class) const { return marks_[local_class]; }
  std::vector<Rat> orbit_coeffs() const;

  bool is_zero() const;
  bool operator==(const BurnsideElement& o) const;
  bool operator!=(const BurnsideElement& o) const { return !(*this == o); }

  BurnsideElement operator+(const BurnsideElement& o) const;
  BurnsideElement operator-(const BurnsideElement& o) const;
  BurnsideElement operator*(const BurnsideElement& o) const;  // mark-wise
  BurnsideElement scaled(const Rat& c) const;

 private:
  const BurnsideRing* ring_ = nullptr;
  int host_ = -1;
  std::vector<Rat> marks_;
};

// The family of Burnside rings A(H) for H running over a fixed subgroup
// lattice, together with the maps between them.  Tables of marks are built
// lazily per host and cached.
class BurnsideRing {
 public:
  explicit BurnsideRing(const SubgroupLattice& lat);

  const SubgroupLattice& lattice() const { return lat_; }
  const TableOfMarks& table(int host) const;
  const TableOfMarks& table_full() const;  // host = whole group

  BurnsideElement zero(int host) const;
  BurnsideElement one(int host) const;
  BurnsideElement from_marks(int host, std::vector<Rat> marks) const;
  BurnsideElement from_orbit_coeffs(int host, const std::vector<Rat>& coeffs) const;
  BurnsideElement from_gset(const GSet& x) const;
  // The class [host/K] of a transitive set, as an element over `host`.
  BurnsideElement orbit_class(int host, int k) const;

  // res^H_K: precondition K <= H (H = x.host()).
  BurnsideElement restrict(const BurnsideElement& x, int k) const;
  // ind_K^H (additive transfer): precondition K = x.host() <= H.
  BurnsideElement transfer(const BurnsideElement& x, int h) const;
  // c_g: A(H) -> A(gHg^-1).
  BurnsideElement conjugate(const BurnsideElement& x, int g) const;
  // N_K^H (multiplicative transfer), computed through the mark formula
  // phi^Q(N_K^H x) = prod over QhK in Q\H/K of phi^{h^-1 Q h ∩ K}(x).
  BurnsideElement norm(const BurnsideElement& x, int h) const;

  // Primitive idempotent e_L of A(host) localized at P; L must be P-perfect.
  // P must be normalized.  The result is checked to be P-local.
  BurnsideElement dress_idempotent(int host, int l_id, const PrimeSet& p) const;
  // All primitive idempotents of A(host) at P, indexed by the P-perfect
  // host-classes returned in the second component (host-local class rows).
  std::vector<std::pair<int, BurnsideElement>> primitive_idempotents(
      int host, const PrimeSet& p) const;

  // True when every orbit coefficient of x has denominator prime to P, i.e.
  // x lies in A(host) ⊗ Z_(P).  P must be normalized.
  bool is_p_local(const BurnsideElement& x, const PrimeSet& p) const;

 private:
  const SubgroupLattice& lat_;
  mutable std::mutex mu_;
  mutable std::unordered_map<int, std::unique_ptr<TableOfMarks>> tables_;
};

}  // namespace burnside
