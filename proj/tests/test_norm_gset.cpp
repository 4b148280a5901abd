#include <doctest.h>

#include <random>
#include <vector>

#include "burnside/burnside_ring.hpp"
#include "burnside/gset.hpp"
#include "helpers.hpp"

using namespace burnside;
using namespace burnside::testing;

namespace {

std::vector<Rat> rvec(const std::vector<long>& v) {
  std::vector<Rat> out;
  for (long x : v) out.emplace_back(x);
  return out;
}

}  // namespace

TEST_CASE("constructed actions satisfy the action axioms") {
  for (const char* spec : {"S3", "D8", "A4"}) {
    CAPTURE(spec);
    const Fixture& f = fixture(spec);
    const SubgroupLattice& lat = *f.lattice;
    const int top = lat.full_group_id();
    for (int k = 0; k < lat.count(); ++k) {
      const GSet c = coset_gset(lat, top, k);
      c.check_valid();
      CHECK(c.size == f.group.order() / lat.at(k).order);
      CHECK(c.stabilizer(0) == k);
      CHECK(c.orbits().size() == 1);
      const GSet t = trivial_gset(lat, k, 3);
      t.check_valid();
      CHECK(t.stabilizer(0) == k);
      CHECK(t.fixed_points(k) == 3);
      disjoint_union(c, c).check_valid();
      product_gset(c, c).check_valid();
    }
  }
}

TEST_CASE("orbit decomposition recovers the element from stabilizers") {
  for (const char* spec : {"S3", "D8", "A4"}) {
    CAPTURE(spec);
    const Fixture& f = fixture(spec);
    const SubgroupLattice& lat = *f.lattice;
    const BurnsideRing& r = *f.ring;
    const int top = lat.full_group_id();
    bool ok = true;
    for (int k = 0; k < lat.count(); ++k)
      for (int l = 0; l < lat.count(); ++l) {
        const GSet x = product_gset(coset_gset(lat, top, k),
                                    coset_gset(lat, top, l));
        BurnsideElement sum = r.zero(top);
        int covered = 0;
        for (const auto& orbit : x.orbits()) {
          sum = sum + r.orbit_class(top, x.stabilizer(orbit[0]));
          covered += static_cast<int>(orbit.size());
        }
        if (covered != x.size) ok = false;
        if (sum != r.from_gset(x)) ok = false;
      }
    CHECK(ok);
  }
}

TEST_CASE("orbit counting by averaged fixed points") {
  const Fixture& f = fixture("D8");
  const SubgroupLattice& lat = *f.lattice;
  const int top = lat.full_group_id();
  bool ok = true;
  for (int k = 0; k < lat.count(); ++k)
    for (int l = 0; l < lat.count(); ++l) {
      const GSet x = product_gset(coset_gset(lat, top, k),
                                  coset_gset(lat, top, l));
      long fixed_total = 0;
      for (const auto& row : x.table) {
        for (int p = 0; p < x.size; ++p)
          if (row[p] == p) ++fixed_total;
      }
      if (fixed_total != static_cast<long>(x.orbits().size()) * f.group.order())
        ok = false;
    }
  CHECK(ok);
}

TEST_CASE("frozen multiplicative induction of a three point trivial set") {
  const Fixture& f = fixture("S3");
  const SubgroupLattice& lat = *f.lattice;
  const BurnsideRing& r = *f.ring;
  const int top = lat.full_group_id();
  const int c2 = lat.class_rep(*lat.class_by_label("2:1"));
  const GSet x = trivial_gset(lat, c2, 3);
  const GSet y = coinduce(x, top);
  y.check_valid();
  CHECK(y.size == 27);
  CHECK(r.from_gset(y).marks() == rvec({27, 9, 3, 3}));
  CHECK(r.from_gset(y) == r.norm(r.from_gset(x), top));
}

TEST_CASE("the top mark of a norm equals the bottom mark of its source") {
  std::mt19937 rng(29);
  for (const auto& spec : fixture_specs()) {
    CAPTURE(spec);
    const Fixture& f = fixture(spec);
    const SubgroupLattice& lat = *f.lattice;
    const BurnsideRing& r = *f.ring;
    bool ok = true;
    for (int h = 0; h < lat.count(); ++h) {
      for (int k = 0; k < lat.count(); ++k) {
        if (!lat.contains(h, k)) continue;
        const BurnsideElement x = random_element(r, k, rng);
        const BurnsideElement n = r.norm(x, h);
        const int hrow = r.table(h).local_class(h);
        const int krow = r.table(k).local_class(k);
        if (n.mark(hrow) != x.mark(krow)) ok = false;
      }
    }
    CHECK(ok);
  }
}

TEST_CASE("norms are multiplicative and unital but not additive") {
  std::mt19937 rng(31);
  for (const char* spec : {"S3", "D8", "A4", "S4"}) {
    CAPTURE(spec);
    const Fixture& f = fixture(spec);
    const SubgroupLattice& lat = *f.lattice;
    const BurnsideRing& r = *f.ring;
    bool ok = true;
    for (int h = 0; h < lat.count(); ++h)
      for (int k = 0; k < lat.count(); ++k) {
        if (!lat.contains(h, k)) continue;
        for (int trial = 0; trial < 3; ++trial) {
          const BurnsideElement x = random_element(r, k, rng);
          const BurnsideElement y = random_element(r, k, rng);
          if (r.norm(x * y, h) != r.norm(x, h) * r.norm(y, h)) ok = false;
        }
        if (r.norm(r.one(k), h) != r.one(h)) ok = false;
        if (r.norm(r.zero(k), h) != r.zero(h)) ok = false;
      }
    CHECK(ok);
  }

  // One explicit non-additive instance.
  const Fixture& f = fixture("S3");
  const SubgroupLattice& lat = *f.lattice;
  const BurnsideRing& r = *f.ring;
  const int top = lat.full_group_id();
  const int c2 = lat.class_rep(*lat.class_by_label("2:1"));
  const BurnsideElement u = r.one(c2);
  CHECK(r.norm(u + u, top) != r.norm(u, top) + r.norm(u, top));
}

TEST_CASE("norms compose along towers of subgroups") {
  std::mt19937 rng(37);
  for (const char* spec : {"S3", "D8", "S4"}) {
    CAPTURE(spec);
    const Fixture& f = fixture(spec);
    const SubgroupLattice& lat = *f.lattice;
    const BurnsideRing& r = *f.ring;
    bool ok = true;
    for (int h = 0; h < lat.count(); ++h)
      for (int m = 0; m < lat.count(); ++m) {
        if (!lat.contains(h, m)) continue;
        for (int k = 0; k < lat.count(); ++k) {
          if (!lat.contains(m, k)) continue;
          const BurnsideElement x = random_element(r, k, rng);
          if (r.norm(r.norm(x, m), h) != r.norm(x, h)) ok = false;
        }
      }
    CHECK(ok);
  }
}

TEST_CASE("norms commute with conjugation") {
  std::mt19937 rng(41);
  const Fixture& f = fixture("S4");
  const SubgroupLattice& lat = *f.lattice;
  const BurnsideRing& r = *f.ring;
  const FiniteGroup& g = f.group;
  bool ok = true;
  for (int h = 0; h < lat.count(); h += 3)
    for (int k = 0; k < lat.count(); ++k) {
      if (!lat.contains(h, k)) continue;
      const BurnsideElement x = random_element(r, k, rng);
      for (int a = 0; a < g.order(); a += 7)
        if (r.conjugate(r.norm(x, h), a) !=
            r.norm(r.conjugate(x, a), lat.conjugate(h, a)))
          ok = false;
    }
  CHECK(ok);
}

TEST_CASE("explicit coinduction matches the double coset formula") {
  for (const char* spec : {"S3", "D8", "Q8", "A4"}) {
    CAPTURE(spec);
    const Fixture& f = fixture(spec);
    const SubgroupLattice& lat = *f.lattice;
    const BurnsideRing& r = *f.ring;
    bool ok = true;
    int covered = 0;
    for (int h = 0; h < lat.count(); ++h)
      for (int k = 0; k < lat.count(); ++k) {
        if (!lat.contains(h, k)) continue;
        const int index = lat.at(h).order / lat.at(k).order;
        if (index > 6) continue;
        // Effective K-sets: every coset space K/U, one union, one product.
        std::vector<GSet> samples;
        for (int u : r.table(k).class_reps)
          samples.push_back(coset_gset(lat, k, u));
        samples.push_back(disjoint_union(samples.front(), samples.back()));
        samples.push_back(trivial_gset(lat, k, 2));
        for (const GSet& x : samples) {
          double points = 1;
          for (int i = 0; i < index; ++i) points *= x.size;
          if (points > 20000) continue;
          const GSet y = coinduce(x, h);
          y.check_valid();
          if (r.from_gset(y) != r.norm(r.from_gset(x), h)) ok = false;
          ++covered;
        }
      }
    CHECK(ok);
    CHECK(covered > 0);
  }
}

TEST_CASE("equivariant map checking accepts exactly the equivariant maps") {
  const Fixture& f = fixture("S3");
  const SubgroupLattice& lat = *f.lattice;
  const int top = lat.full_group_id();
  const int c2 = lat.class_rep(*lat.class_by_label("2:1"));
  const int a3 = lat.class_rep(*lat.class_by_label("3:1"));

  const GSet three = coset_gset(lat, top, c2);  // 3 points
  const GSet two = coset_gset(lat, top, a3);    // 2 points
  const GSet one = trivial_gset(lat, top, 1);

  auto equivariant = [](const GSet& from, const GSet& to,
                        std::vector<int> pm) {
    EquivariantMap m{&from, &to, std::move(pm)};
    try {
      m.check_equivariant();
      return true;
    } catch (const std::invalid_argument&) {
      return false;
    }
  };

  // Self maps of the three point transitive set: only the identity.
  int count3 = 0;
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b)
      for (int c = 0; c < 3; ++c)
        if (equivariant(three, three, {a, b, c})) ++count3;
  CHECK(count3 == 1);
  CHECK(equivariant(three, three, {0, 1, 2}));

  // Self maps of the two point set: both right translations.
  int count2 = 0;
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b)
      if (equivariant(two, two, {a, b})) ++count2;
  CHECK(count2 == 2);

  // No equivariant map from the three point set to the two point set.
  int cross = 0;
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b)
      for (int c = 0; c < 2; ++c)
        if (equivariant(three, two, {a, b, c})) ++cross;
  CHECK(cross == 0);

  // Collapse to a point is always equivariant; bad shapes are rejected.
  CHECK(equivariant(three, one, {0, 0, 0}));
  CHECK_FALSE(equivariant(three, one, {0, 0}));
  CHECK_FALSE(equivariant(three, one, {0, 0, 5}));
}

TEST_CASE("oversized coinductions and foreign elements are rejected") {
  const Fixture& f = fixture("A5");
  const SubgroupLattice& lat = *f.lattice;
  const GSet big = trivial_gset(lat, lat.trivial_id(), 50);
  CHECK_THROWS_AS(coinduce(big, lat.full_group_id()), std::invalid_argument);

  const Fixture& s3 = fixture("S3");
  const GSet c = coset_gset(*s3.lattice, s3.lattice->full_group_id(),
                            s3.lattice->trivial_id());
  CHECK_NOTHROW(c.apply(1, 0));
  const int a3 = s3.lattice->class_rep(*s3.lattice->class_by_label("3:1"));
  const GSet sub = coset_gset(*s3.lattice, a3, s3.lattice->trivial_id());
  bool threw = false;
  try {
    // Element 1 is a transposition, outside the alternating subgroup.
    sub.apply(1, 0);
  } catch (const std::invalid_argument&) {
    threw = true;
  }
  CHECK(threw);
  CHECK_THROWS_AS(sub.fixed_points(s3.lattice->full_group_id()),
                  std::invalid_argument);
}
