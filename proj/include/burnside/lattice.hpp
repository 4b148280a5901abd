#pragma once

#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "burnside/group.hpp"

namespace burnside {

// A set of primes to invert's complement: the primes at which we localize.
// Two symbolic modes exist ("all", "none"); `normalized` resolves "all" to
// the prime divisors of a concrete group order.
class PrimeSet {
 public:
  static PrimeSet all();
  static PrimeSet none();
  static PrimeSet of(std::vector<int> primes);  // validates primality
  static PrimeSet parse(const std::string& text);  // "all" | "none" | "2,3"

  bool is_all() const { return all_mode_; }
  bool empty() const { return !all_mode_ && primes_.empty(); }
  const std::vector<int>& primes() const;  // throws in "all" mode
  bool contains(int p) const;
  PrimeSet normalized(long group_order) const;
  std::string to_string() const;
  bool operator==(const PrimeSet& o) const;

  // Largest divisor of n supported on this prime set (requires normalized).
  long part_of(long n) const;
  // True when n is a product of primes from this set (requires normalized).
  bool is_number(long n) const;

 private:
  std::vector<int> primes_;
  bool all_mode_ = false;
};

std::vector<int> prime_divisors(long n);

// Subgroup of the ambient group, stored by sorted element indices.
struct Subgroup {
  std::vector<int> elements;      // sorted ascending, begins with 0 (identity)
  std::vector<char> mask;         // size |G| membership bytes
  std::vector<int> gens;          // a small generating set
  int order = 0;
};

// The complete subgroup lattice of one ambient group, with conjugacy classes
// and the subgroup-level operations the Burnside ring machinery needs.
// Subgroups are identified by their index in the (order, lexicographic
// element list) sorted enumeration.  Lazy caches are mutex-guarded, so a
// const lattice can be shared across threads.
class SubgroupLattice {
 public:
  explicit SubgroupLattice(const FiniteGroup& g);

  const FiniteGroup& group() const { return g_; }
  int count() const { return static_cast<int>(subs_.size()); }
  const Subgroup& at(int id) const { return subs_[id]; }
  int full_group_id() const { return count() - 1; }
  int trivial_id() const { return 0; }

  int id_of_elements(const std::vector<int>& sorted_elems) const;  // -1 if absent
  int closure_id(const std::vector<int>& seed) const;

  bool contains(int big, int small) const;
  int intersect(int a, int b) const;
  int join(int a, int b) const;
  int conjugate(int id, int g) const;  // id of g H g^-1
  int normalizer(int id) const;
  bool is_normal_in(int small, int big) const;

  // Conjugacy classes of subgroups, ordered by (order, lex) of their
  // canonical representatives (= least subgroup id in the class).
  int class_count() const { return static_cast<int>(class_reps_.size()); }
  int class_of(int id) const { return class_of_[id]; }
  int class_rep(int cid) const { return class_reps_[cid]; }
  const std::vector<int>& class_members(int cid) const { return class_members_[cid]; }
  const std::string& class_label(int cid) const { return class_labels_[cid]; }
  std::optional<int> class_by_label(const std::string& label) const;

  int derived_subgroup(int id) const;
  int solvable_residual(int id) const;
  bool is_solvable(int id) const;
  bool is_perfect(int id) const { return derived_subgroup(id) == id; }

  // Smallest normal subgroup of H with solvable quotient of order supported
  // on P.  P must be normalized.  The result is verified minimal against the
  // lattice; a violation throws std::logic_error.
  int p_residual(int id, const PrimeSet& p) const;
  bool is_p_perfect(int id, const PrimeSet& p) const { return p_residual(id, p) == id; }
  std::vector<int> p_perfect_class_ids(const PrimeSet& p) const;  // class ids

  // Representatives (least element per coset, ascending) of Q\H/K resp. K\H.
  std::vector<int> double_cosets(int q, int k, int h) const;
  std::vector<int> right_coset_reps(int k, int h) const;
  std::vector<int> left_coset_reps(int k, int h) const;  // cosets gK inside H

  // All subgroup ids contained in `host`, ascending.
  const std::vector<int>& members_of(int host) const;

 private:
  std::vector<int> closure_elements(const std::vector<int>& seed) const;
  void enumerate();
  void classify();

  const FiniteGroup& g_;
  std::vector<Subgroup> subs_;
  std::map<std::vector<int>, int> ids_;

  std::vector<int> class_of_;
  std::vector<int> class_reps_;
  std::vector<std::vector<int>> class_members_;
  std::vector<std::string> class_labels_;

  mutable std::mutex mu_;
  mutable std::vector<int> derived_;     // -2 = unset
  mutable std::vector<int> normalizer_;  // -2 = unset
  mutable std::map<std::pair<int, std::string>, int> residual_;
  mutable std::map<int, std::vector<int>> members_;
};

// Derived subgroup / solvability on raw element sets (no lattice needed).
std::vector<int> derived_set(const FiniteGroup& g, const std::vector<int>& elems);
std::vector<int> solvable_residual_set(const FiniteGroup& g, std::vector<int> elems);
bool is_solvable_set(const FiniteGroup& g, const std::vector<int>& elems);
std::vector<int> closure_set(const FiniteGroup& g, std::vector<int> seed);

}  // namespace burnside
