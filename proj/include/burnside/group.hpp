#pragma once

#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

namespace burnside {

// Permutation on 0..degree-1 stored as its image tuple.
using Perm = std::vector<int>;

Perm identity_perm(int degree);
Perm compose(const Perm& a, const Perm& b);  // (a*b)(x) = a(b(x))
Perm inverse_perm(const Perm& p);

// Renders a permutation in 1-based cycle notation, e.g. "(1,2)(3,4)".
// The identity renders as "()".
std::string cycle_string(const Perm& p);

// Parses a semicolon-separated list of permutations in 1-based cycle
// notation, e.g. "(1,2)(3,4); (1,3,5)".  Cycles within one permutation are
// composed left to right (for the usual disjoint cycles the order is
// irrelevant).  If degree < 0 the degree is the largest point mentioned.
std::vector<Perm> parse_generators(const std::string& text, int degree = -1);

struct GroupSpecError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Thrown when a closure would exceed the configured order cap.
struct GroupCapError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A finite group with a faithful permutation realization and a precomputed
// Cayley table.  Element 0 is the identity; elements are numbered in
// breadth-first closure order over the generators with ties broken by image
// tuple, so the numbering is deterministic for a fixed generator list.
class FiniteGroup {
 public:
  static FiniteGroup from_generators(std::string label, int degree,
                                     const std::vector<Perm>& gens,
                                     int max_order);

  const std::string& label() const { return label_; }
  int degree() const { return degree_; }
  int order() const { return static_cast<int>(elems_.size()); }
  int identity() const { return 0; }

  int mul(int a, int b) const { return mul_[a * order() + b]; }
  int inv(int a) const { return inv_[a]; }
  int power(int a, long n) const;
  int conj(int g, int x) const { return mul(mul(g, x), inv(g)); }  // g x g^-1

  const Perm& element(int i) const { return elems_[i]; }
  const std::vector<int>& generators() const { return gens_; }

  // Index of a permutation, or -1 when it is not an element.
  int index_of(const Perm& p) const;

 private:
  std::string label_;
  int degree_ = 1;
  std::vector<Perm> elems_;
  std::vector<int> gens_;
  std::vector<int> mul_;
  std::vector<int> inv_;
  std::unordered_map<std::string, int> index_;  // packed image tuple -> index
};

// Builds a group from a spec string.  Accepted forms:
//   named:   S<n>, A<n>, C<n>, D<2n> (dihedral, order 2n), Q8
//   product: <spec>x<spec>, e.g. "C2xC2xS3"
//   explicit generators in cycle notation: "(1,2)(3,4); (1,3,5)"
// Throws GroupSpecError on malformed input and GroupCapError when the group
// order would exceed max_order.
FiniteGroup build_group(const std::string& spec, int max_order = 2000);

}  // namespace burnside
