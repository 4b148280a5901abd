#pragma once

#include <algorithm>
#include <map>
#include <memory>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "burnside/burnside_ring.hpp"
#include "burnside/lattice.hpp"

namespace burnside::testing {

// One fully analyzed group, shared across test cases to avoid re-running the
// lattice enumeration for every assertion.
struct Fixture {
  FiniteGroup group;
  std::unique_ptr<SubgroupLattice> lattice;
  std::unique_ptr<BurnsideRing> ring;

  explicit Fixture(const std::string& spec)
      : group(build_group(spec)),
        lattice(std::make_unique<SubgroupLattice>(group)),
        ring(std::make_unique<BurnsideRing>(*lattice)) {}
};

inline Fixture& fixture(const std::string& spec) {
  static std::map<std::string, std::unique_ptr<Fixture>> cache;
  auto it = cache.find(spec);
  if (it == cache.end())
    it = cache.emplace(spec, std::make_unique<Fixture>(spec)).first;
  return *it->second;
}

// The standard list of small verification groups.  SL(2,3) is given by its
// action on the eight nonzero vectors of F_3^2.
inline const std::vector<std::string>& fixture_specs() {
  static const std::vector<std::string> specs = {
      "C1", "C2", "C6", "S3", "D8", "Q8", "A4", "S4",
      "(1,4,7)(2,8,5); (1,6,2,3)(4,7,8,5)",  // SL(2,3)
      "A5",
  };
  return specs;
}

// Every subset of the prime divisors of |G|, as prime sets (includes the
// empty set; the full subset equals what "all" resolves to).
inline std::vector<PrimeSet> all_prime_subsets(const FiniteGroup& g) {
  const std::vector<int> ps = prime_divisors(g.order());
  std::vector<PrimeSet> out;
  for (unsigned mask = 0; mask < (1u << ps.size()); ++mask) {
    std::vector<int> sub;
    for (size_t i = 0; i < ps.size(); ++i)
      if (mask & (1u << i)) sub.push_back(ps[i]);
    out.push_back(PrimeSet::of(sub));
  }
  return out;
}

// Brute-force subgroup enumeration: close the trivial subgroup under
// "extend by one element", which reaches every subgroup.  Reference oracle
// for the production enumeration.
inline std::set<std::vector<int>> subgroups_by_closure(const FiniteGroup& g) {
  std::set<std::vector<int>> found;
  std::vector<std::vector<int>> queue;
  auto add = [&](std::vector<int> v) {
    if (found.insert(v).second) queue.push_back(std::move(v));
  };
  add({g.identity()});
  for (size_t pos = 0; pos < queue.size(); ++pos) {
    const std::vector<int> h = queue[pos];
    for (int a = 0; a < g.order(); ++a) {
      if (std::binary_search(h.begin(), h.end(), a)) continue;
      std::vector<int> seed = h;
      seed.push_back(a);
      add(closure_set(g, seed));
    }
  }
  return found;
}

// A reproducible random element of A(host) with small random orbit
// coefficients (integers in [-3, 3]).
inline BurnsideElement random_element(const BurnsideRing& ring, int host,
                                      std::mt19937& rng) {
  const int n = ring.table(host).classes();
  std::uniform_int_distribution<int> coeff(-3, 3);
  std::vector<Rat> c(n);
  for (int i = 0; i < n; ++i) c[i] = coeff(rng);
  return ring.from_orbit_coeffs(host, c);
}

}  // namespace burnside::testing
