#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "burnside/lattice.hpp"
#include "helpers.hpp"

using namespace burnside;
using namespace burnside::testing;

namespace {

// spec -> {subgroup count, class count}; frozen reference values.
const std::map<std::string, std::pair<int, int>>& expected_counts() {
  static const std::map<std::string, std::pair<int, int>> m = {
      {"C1", {1, 1}},
      {"C2", {2, 2}},
      {"C6", {4, 4}},
      {"S3", {6, 4}},
      {"D8", {10, 8}},
      {"Q8", {6, 6}},
      {"A4", {10, 5}},
      {"S4", {30, 11}},
      {"(1,4,7)(2,8,5); (1,6,2,3)(4,7,8,5)", {15, 7}},  // SL(2,3)
      {"A5", {59, 9}},
  };
  return m;
}

}  // namespace

TEST_CASE("prime sets parse, normalize and test numbers") {
  CHECK(PrimeSet::parse("all").is_all());
  CHECK(PrimeSet::parse("none").empty());
  CHECK(PrimeSet::parse("2,3") == PrimeSet::of({3, 2}));
  CHECK(PrimeSet::parse("2, 3 ,5").primes() == std::vector<int>{2, 3, 5});
  CHECK_THROWS(PrimeSet::parse("4"));
  CHECK_THROWS(PrimeSet::parse("2,,3"));
  CHECK(PrimeSet::parse("").empty());
  CHECK_THROWS(PrimeSet::of({6}));

  CHECK(PrimeSet::all().normalized(12) == PrimeSet::of({2, 3}));
  // Concrete sets pass through: extra primes never divide a subgroup order.
  CHECK(PrimeSet::of({2, 3, 5}).normalized(12) == PrimeSet::of({2, 3, 5}));
  CHECK(PrimeSet::none().normalized(12).empty());

  const PrimeSet p23 = PrimeSet::of({2, 3});
  CHECK(p23.part_of(60) == 12);
  CHECK(p23.is_number(12));
  CHECK_FALSE(p23.is_number(10));
  CHECK(PrimeSet::none().part_of(60) == 1);
  CHECK(PrimeSet::none().is_number(1));
  CHECK_FALSE(PrimeSet::none().is_number(2));

  CHECK(prime_divisors(1).empty());
  CHECK(prime_divisors(60) == std::vector<int>{2, 3, 5});
  CHECK(prime_divisors(8) == std::vector<int>{2});
}

TEST_CASE("subgroup and class counts match the frozen table") {
  for (const auto& spec : fixture_specs()) {
    CAPTURE(spec);
    const Fixture& f = fixture(spec);
    const auto exp = expected_counts().at(spec);
    CHECK(f.lattice->count() == exp.first);
    CHECK(f.lattice->class_count() == exp.second);
  }
}

TEST_CASE("enumeration agrees with the extend-by-one-element oracle") {
  for (const auto& spec : fixture_specs()) {
    CAPTURE(spec);
    const Fixture& f = fixture(spec);
    const auto oracle = subgroups_by_closure(f.group);
    REQUIRE(static_cast<int>(oracle.size()) == f.lattice->count());
    bool all_found = true;
    for (const auto& elems : oracle)
      if (f.lattice->id_of_elements(elems) < 0) all_found = false;
    CHECK(all_found);
  }
}

TEST_CASE("lattice ordering, Lagrange and id round trips") {
  for (const auto& spec : fixture_specs()) {
    CAPTURE(spec);
    const Fixture& f = fixture(spec);
    const SubgroupLattice& lat = *f.lattice;
    CHECK(lat.at(lat.trivial_id()).order == 1);
    CHECK(lat.at(lat.full_group_id()).order == f.group.order());
    bool ok = true;
    for (int i = 0; i < lat.count(); ++i) {
      const Subgroup& s = lat.at(i);
      if (f.group.order() % s.order != 0) ok = false;
      if (!std::is_sorted(s.elements.begin(), s.elements.end())) ok = false;
      if (s.elements.empty() || s.elements[0] != f.group.identity()) ok = false;
      if (static_cast<int>(s.elements.size()) != s.order) ok = false;
      if (lat.id_of_elements(s.elements) != i) ok = false;
      if (lat.closure_id(s.gens.empty() ? std::vector<int>{0} : s.gens) != i)
        ok = false;
      if (i > 0 && lat.at(i - 1).order > s.order) ok = false;  // sorted by order
    }
    CHECK(ok);
  }
}

TEST_CASE("intersect and join are meet and join") {
  const Fixture& f = fixture("S4");
  const SubgroupLattice& lat = *f.lattice;
  bool ok = true;
  for (int a = 0; a < lat.count(); ++a) {
    for (int b = 0; b < lat.count(); ++b) {
      const int m = lat.intersect(a, b);
      const int j = lat.join(a, b);
      if (!lat.contains(a, m) || !lat.contains(b, m)) ok = false;
      if (!lat.contains(j, a) || !lat.contains(j, b)) ok = false;
      if (m != lat.intersect(b, a) || j != lat.join(b, a)) ok = false;
      if (lat.contains(a, b) && (m != b || j != a)) ok = false;
    }
    if (lat.intersect(a, a) != a || lat.join(a, a) != a) ok = false;
  }
  CHECK(ok);

  // The meet is the set intersection, hence the largest common lower bound.
  for (int a = 0; a < lat.count(); ++a)
    for (int b = 0; b < lat.count(); ++b) {
      const auto& ea = lat.at(a).elements;
      const auto& eb = lat.at(b).elements;
      std::vector<int> common;
      std::set_intersection(ea.begin(), ea.end(), eb.begin(), eb.end(),
                            std::back_inserter(common));
      if (lat.id_of_elements(common) != lat.intersect(a, b)) ok = false;
    }
  CHECK(ok);
}

TEST_CASE("conjugation permutes the lattice and respects classes") {
  for (const char* spec : {"S3", "D8", "A4"}) {
    CAPTURE(spec);
    const Fixture& f = fixture(spec);
    const SubgroupLattice& lat = *f.lattice;
    bool ok = true;
    for (int i = 0; i < lat.count(); ++i) {
      for (int g = 0; g < f.group.order(); ++g) {
        const int c = lat.conjugate(i, g);
        if (lat.at(c).order != lat.at(i).order) ok = false;
        if (lat.class_of(c) != lat.class_of(i)) ok = false;
        if (lat.conjugate(c, f.group.inv(g)) != i) ok = false;
      }
      if (lat.conjugate(i, f.group.identity()) != i) ok = false;
    }
    CHECK(ok);
  }
}

TEST_CASE("normalizers and orbit-stabilizer for classes") {
  for (const char* spec : {"S3", "D8", "S4"}) {
    CAPTURE(spec);
    const Fixture& f = fixture(spec);
    const SubgroupLattice& lat = *f.lattice;
    bool ok = true;
    for (int i = 0; i < lat.count(); ++i) {
      const int n = lat.normalizer(i);
      if (!lat.contains(n, i)) ok = false;
      if (!lat.is_normal_in(i, n)) ok = false;
      const int class_size =
          static_cast<int>(lat.class_members(lat.class_of(i)).size());
      if (class_size * lat.at(n).order != f.group.order()) ok = false;
    }
    CHECK(ok);
  }
}

TEST_CASE("normality in specific groups") {
  {
    const Fixture& f = fixture("S3");
    const SubgroupLattice& lat = *f.lattice;
    const int a3 = lat.class_rep(*lat.class_by_label("3:1"));
    const int c2 = lat.class_rep(*lat.class_by_label("2:1"));
    CHECK(lat.is_normal_in(a3, lat.full_group_id()));
    CHECK_FALSE(lat.is_normal_in(c2, lat.full_group_id()));
  }
  {
    // Every subgroup of Q8 is normal.
    const Fixture& f = fixture("Q8");
    const SubgroupLattice& lat = *f.lattice;
    bool ok = true;
    for (int i = 0; i < lat.count(); ++i)
      if (!lat.is_normal_in(i, lat.full_group_id())) ok = false;
    CHECK(ok);
    CHECK(lat.count() == lat.class_count());
  }
  {
    const Fixture& f = fixture("S4");
    const SubgroupLattice& lat = *f.lattice;
    const int a4 = lat.class_rep(*lat.class_by_label("12:1"));
    CHECK(lat.is_normal_in(a4, lat.full_group_id()));
    int normal_v4 = 0;  // exactly one of the V4 copies is normal in S4
    for (int i = 0; i < lat.count(); ++i)
      if (lat.at(i).order == 4 && lat.is_normal_in(i, lat.full_group_id()))
        ++normal_v4;
    CHECK(normal_v4 == 1);
  }
}

TEST_CASE("class bookkeeping is coherent") {
  for (const auto& spec : fixture_specs()) {
    CAPTURE(spec);
    const Fixture& f = fixture(spec);
    const SubgroupLattice& lat = *f.lattice;
    int total = 0;
    bool ok = true;
    std::set<std::string> labels;
    for (int c = 0; c < lat.class_count(); ++c) {
      const int rep = lat.class_rep(c);
      if (lat.class_of(rep) != c) ok = false;
      const auto& mem = lat.class_members(c);
      total += static_cast<int>(mem.size());
      if (mem.empty() || mem[0] != rep) ok = false;  // rep is least id
      for (int id : mem)
        if (lat.class_of(id) != c) ok = false;
      labels.insert(lat.class_label(c));
      auto back = lat.class_by_label(lat.class_label(c));
      if (!back || *back != c) ok = false;
    }
    CHECK(ok);
    CHECK(total == lat.count());
    CHECK(static_cast<int>(labels.size()) == lat.class_count());
    CHECK_FALSE(lat.class_by_label("7:9").has_value());
  }
}

TEST_CASE("derived subgroups, solvability, perfection") {
  {
    const Fixture& f = fixture("S3");
    const SubgroupLattice& lat = *f.lattice;
    const int a3 = lat.class_rep(*lat.class_by_label("3:1"));
    CHECK(lat.derived_subgroup(lat.full_group_id()) == a3);
    CHECK(lat.derived_subgroup(a3) == lat.trivial_id());
    CHECK(lat.is_solvable(lat.full_group_id()));
    CHECK(lat.solvable_residual(lat.full_group_id()) == lat.trivial_id());
  }
  {
    const Fixture& f = fixture("Q8");
    const SubgroupLattice& lat = *f.lattice;
    const int d = lat.derived_subgroup(lat.full_group_id());
    CHECK(lat.at(d).order == 2);  // the center
  }
  {
    const Fixture& f = fixture("A5");
    const SubgroupLattice& lat = *f.lattice;
    const int top = lat.full_group_id();
    CHECK(lat.derived_subgroup(top) == top);
    CHECK(lat.is_perfect(top));
    CHECK_FALSE(lat.is_solvable(top));
    CHECK(lat.solvable_residual(top) == top);
    bool others_solvable = true;  // all proper subgroups of A5 are solvable
    for (int i = 0; i < top; ++i)
      if (!lat.is_solvable(i)) others_solvable = false;
    CHECK(others_solvable);
  }
  {
    const Fixture& f = fixture("S4");
    const SubgroupLattice& lat = *f.lattice;
    bool ok = true;
    for (int i = 0; i < lat.count(); ++i) {
      if (!lat.is_solvable(i)) ok = false;
      if (lat.solvable_residual(i) != lat.trivial_id()) ok = false;
      if (lat.is_perfect(i) != (i == lat.trivial_id())) ok = false;
    }
    CHECK(ok);
  }
}

TEST_CASE("residuals in the symmetric group on three letters") {
  const Fixture& f = fixture("S3");
  const SubgroupLattice& lat = *f.lattice;
  const int top = lat.full_group_id();
  const int triv = lat.trivial_id();
  const int a3 = lat.class_rep(*lat.class_by_label("3:1"));
  const int c2 = lat.class_rep(*lat.class_by_label("2:1"));

  const PrimeSet p3 = PrimeSet::of({3});
  CHECK(lat.p_residual(top, p3) == top);
  CHECK(lat.p_residual(a3, p3) == triv);
  CHECK(lat.p_residual(c2, p3) == c2);
  CHECK(lat.p_residual(triv, p3) == triv);

  const PrimeSet p2 = PrimeSet::of({2});
  CHECK(lat.p_residual(top, p2) == a3);
  CHECK(lat.p_residual(a3, p2) == a3);
  CHECK(lat.p_residual(c2, p2) == triv);

  const PrimeSet pall = PrimeSet::all().normalized(6);
  CHECK(lat.p_residual(top, pall) == triv);
  const PrimeSet pnone = PrimeSet::none();
  for (int i = 0; i < lat.count(); ++i) CHECK(lat.p_residual(i, pnone) == i);

  // Class ids of the P-perfect classes.
  auto labels_of = [&](const std::vector<int>& cids) {
    std::vector<std::string> out;
    for (int c : cids) out.push_back(lat.class_label(c));
    return out;
  };
  CHECK(labels_of(lat.p_perfect_class_ids(p3)) ==
        std::vector<std::string>{"1:1", "2:1", "6:1"});
  CHECK(labels_of(lat.p_perfect_class_ids(p2)) ==
        std::vector<std::string>{"1:1", "3:1"});
  CHECK(labels_of(lat.p_perfect_class_ids(pall)) ==
        std::vector<std::string>{"1:1"});
  CHECK(static_cast<int>(lat.p_perfect_class_ids(pnone).size()) ==
        lat.class_count());
}

TEST_CASE("residual properties across all fixtures and prime subsets") {
  for (const auto& spec : fixture_specs()) {
    CAPTURE(spec);
    const Fixture& f = fixture(spec);
    const SubgroupLattice& lat = *f.lattice;
    for (const PrimeSet& p : all_prime_subsets(f.group)) {
      CAPTURE(p.to_string());
      bool ok = true;
      for (int i = 0; i < lat.count(); ++i) {
        const int r = lat.p_residual(i, p);
        if (!lat.contains(i, r)) ok = false;
        if (!lat.is_normal_in(r, i)) ok = false;
        if (!p.is_number(lat.at(i).order / lat.at(r).order)) ok = false;
        // Solvable quotient: equivalently H^(inf) <= O^P(H).
        if (!lat.contains(r, lat.solvable_residual(i))) ok = false;
        if (lat.p_residual(r, p) != r) ok = false;  // residual is P-perfect
      }
      CHECK(ok);
    }
  }
}

TEST_CASE("residuals are conjugation equivariant") {
  const Fixture& f = fixture("S4");
  const SubgroupLattice& lat = *f.lattice;
  const PrimeSet p2 = PrimeSet::of({2});
  bool ok = true;
  for (int i = 0; i < lat.count(); ++i)
    for (int g = 0; g < f.group.order(); ++g)
      if (lat.p_residual(lat.conjugate(i, g), p2) !=
          lat.conjugate(lat.p_residual(i, p2), g))
        ok = false;
  CHECK(ok);
}

TEST_CASE("coset representatives partition the host") {
  for (const char* spec : {"S3", "D8", "S4"}) {
    CAPTURE(spec);
    const Fixture& f = fixture(spec);
    const SubgroupLattice& lat = *f.lattice;
    const FiniteGroup& g = f.group;
    bool ok = true;
    for (int h = 0; h < lat.count(); ++h) {
      const auto& hs = lat.at(h);
      for (int k = 0; k < lat.count(); ++k) {
        if (!lat.contains(h, k)) continue;
        const auto& ks = lat.at(k);
        const auto right = lat.right_coset_reps(k, h);  // K\H
        if (static_cast<int>(right.size()) != hs.order / ks.order) ok = false;
        std::set<int> covered;
        for (int r : right) {
          int least = g.order();
          for (int ke : ks.elements) {
            const int x = g.mul(ke, r);
            covered.insert(x);
            least = std::min(least, x);
          }
          if (least != r) ok = false;  // rep is least element of its coset
        }
        if (static_cast<int>(covered.size()) != hs.order) ok = false;
        const auto left = lat.left_coset_reps(k, h);  // H/K
        if (left.size() != right.size()) ok = false;
        if (!std::is_sorted(right.begin(), right.end())) ok = false;
        if (!std::is_sorted(left.begin(), left.end())) ok = false;
      }
    }
    CHECK(ok);
  }
}

TEST_CASE("double cosets partition the host") {
  const Fixture& f = fixture("S4");
  const SubgroupLattice& lat = *f.lattice;
  const FiniteGroup& g = f.group;
  bool ok = true;
  const int a4 = lat.class_rep(*lat.class_by_label("12:1"));
  const int d8 = lat.class_rep(*lat.class_by_label("8:1"));
  for (int h : {lat.full_group_id(), a4, d8}) {
    for (int q = 0; q < lat.count(); ++q) {
      if (!lat.contains(h, q)) continue;
      for (int k = 0; k < lat.count(); ++k) {
        if (!lat.contains(h, k)) continue;
        const auto reps = lat.double_cosets(q, k, h);
        std::set<int> covered;
        for (int t : reps) {
          int least = g.order();
          for (int qe : lat.at(q).elements)
            for (int ke : lat.at(k).elements) {
              const int x = g.mul(g.mul(qe, t), ke);
              covered.insert(x);
              least = std::min(least, x);
            }
          if (least != t) ok = false;
        }
        if (static_cast<int>(covered.size()) != lat.at(h).order) ok = false;
      }
    }
  }
  CHECK(ok);
}

TEST_CASE("frozen double coset counts in the symmetric group on three letters") {
  const Fixture& f = fixture("S3");
  const SubgroupLattice& lat = *f.lattice;
  const int top = lat.full_group_id();
  const int a3 = lat.class_rep(*lat.class_by_label("3:1"));
  const int c2 = lat.class_rep(*lat.class_by_label("2:1"));
  CHECK(lat.double_cosets(c2, c2, top).size() == 2);
  CHECK(lat.double_cosets(a3, c2, top).size() == 1);
  CHECK(lat.double_cosets(lat.trivial_id(), lat.trivial_id(), top).size() == 6);
  CHECK(lat.double_cosets(top, top, top).size() == 1);
}

TEST_CASE("members_of lists exactly the contained subgroups") {
  const Fixture& f = fixture("S4");
  const SubgroupLattice& lat = *f.lattice;
  bool ok = true;
  for (int h = 0; h < lat.count(); ++h) {
    const auto& mem = lat.members_of(h);
    if (!std::is_sorted(mem.begin(), mem.end())) ok = false;
    std::set<int> got(mem.begin(), mem.end());
    for (int i = 0; i < lat.count(); ++i)
      if (lat.contains(h, i) != (got.count(i) > 0)) ok = false;
  }
  CHECK(ok);
}
