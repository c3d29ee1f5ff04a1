#include <random>

#include <doctest.h>

#include "pgsat/group.hpp"
#include "test_util.hpp"

using namespace pgsat;
using pgsat_test::all_group_elements;
using pgsat_test::set_from_mask;

TEST_CASE("general linear group orders") {
  CHECK(gl_order(1) == 1);
  CHECK(gl_order(2) == 6);
  CHECK(gl_order(3) == 168);
  CHECK(gl_order(4) == 20160);
  CHECK(gl_order(5) == 9999360);
  CHECK(gl_order(6) == 20158709760ull);
  CHECK(gl_order(7) == 163849992929280ull);
  CHECK_THROWS_AS(gl_order(0), std::invalid_argument);
  CHECK_THROWS_AS(gl_order(8), std::invalid_argument);

  // independent recomputation of the product formula
  for (int n = 1; n <= 7; ++n) {
    std::uint64_t expect = 1;
    for (int i = 0; i < n; ++i) expect *= (std::uint64_t(1) << n) - (std::uint64_t(1) << i);
    CHECK(gl_order(n) == expect);
  }
}

TEST_CASE("ProjMap construction and application") {
  const Dimension dim(2);
  CHECK_THROWS_AS(ProjMap(dim, {1, 2, 3}), std::invalid_argument);  // 3 = 1^2, singular
  CHECK_THROWS_AS(ProjMap(dim, {1, 2}), std::invalid_argument);     // wrong row count
  CHECK_THROWS_AS(ProjMap(dim, {1, 2, 9}), std::invalid_argument);  // row out of range

  const ProjMap id = ProjMap::identity(dim);
  for (Point p = 1; p <= dim.max_point(); ++p) CHECK(id.apply(p) == p);

  const ProjMap m = ProjMap::from_images(dim, {2, 4, 1});
  CHECK(m.apply(1) == 2);
  CHECK(m.apply(2) == 4);
  CHECK(m.apply(4) == 1);
  CHECK(m.apply(3) == 6);  // linearity: image of e0 ^ e1
  CHECK(m.rows() == std::vector<Point>{2, 4, 1});

  const PointSet s(dim, {1, 2, 3});
  CHECK(m.apply(s).members() == std::vector<Point>{2, 4, 6});
  CHECK_THROWS_AS(m.apply(PointSet(Dimension(3), {1})), std::invalid_argument);
}

TEST_CASE("inverse and composition behave like matrix algebra") {
  std::mt19937_64 rng(2024);
  for (int v = 2; v <= 6; ++v) {
    const Dimension dim(v);
    const ProjMap id = ProjMap::identity(dim);
    for (int trial = 0; trial < 25; ++trial) {
      const ProjMap a = ProjMap::random_invertible(dim, rng);
      const ProjMap b = ProjMap::random_invertible(dim, rng);
      CHECK(a.compose(a.inverse()) == id);
      CHECK(a.inverse().compose(a) == id);
      const ProjMap ab = a.compose(b);
      for (int probe = 0; probe < 8; ++probe) {
        const Point x = Point(rng() % dim.max_point()) + 1;
        CHECK(ab.apply(x) == a.apply(b.apply(x)));
      }
    }
  }
}

TEST_CASE("random_invertible is deterministic per seed") {
  const Dimension dim(4);
  std::mt19937_64 r1(7), r2(7), r3(8);
  const ProjMap a = ProjMap::random_invertible(dim, r1);
  const ProjMap b = ProjMap::random_invertible(dim, r2);
  const ProjMap c = ProjMap::random_invertible(dim, r3);
  CHECK(a == b);
  CHECK_FALSE(a == c);  // overwhelmingly likely, and fixed by the seeds chosen
}

TEST_CASE("generator closure sizes match the group orders") {
  // PG(2,2): GL(3,2) has 168 elements
  CHECK(all_group_elements(Dimension(2)).size() == 168);
  // PG(3,2): GL(4,2) has 20160
  CHECK(all_group_elements(Dimension(3)).size() == 20160);
}

TEST_CASE("stabilizer orders against exhaustive counting") {
  const Dimension dim(2);
  const std::vector<ProjMap> group = all_group_elements(dim);
  REQUIRE(group.size() == 168);

  auto direct_stab = [&](const PointSet& s) {
    std::uint64_t n = 0;
    for (const ProjMap& m : group)
      if (m.apply(s) == s) ++n;
    return n;
  };

  for (std::uint64_t mask = 1; mask < 128; ++mask) {
    const PointSet s = set_from_mask(dim, mask);
    if (f2_rank(s) != 3) continue;  // stabilizer_order requires a spanning set
    CHECK(stabilizer_order(s) == direct_stab(s));
  }
}

TEST_CASE("stabilizer orders of published representatives") {
  CHECK(stabilizer_order(PointSet(Dimension(2), {1, 2, 4, 7})) == 24);
  CHECK(stabilizer_order(PointSet(Dimension(2), {1, 2, 4, 6})) == 6);
  CHECK(stabilizer_order(PointSet(Dimension(3), {1, 2, 4, 8, 15})) == 120);
  CHECK(stabilizer_order(PointSet(Dimension(3), {1, 2, 3, 4, 8, 12})) == 72);
  CHECK(stabilizer_order(PointSet(Dimension(3), {1, 2, 4, 7, 8, 11, 13, 14})) == 1344);
  CHECK(stabilizer_order(PointSet(Dimension(3), {1, 2, 4, 5, 8, 9, 12, 13})) == 168);
}

TEST_CASE("stabilizer_order validates its input") {
  CHECK_THROWS_AS(stabilizer_order(PointSet(Dimension(3), {1, 2, 3})), std::invalid_argument);
  CHECK_THROWS_AS(stabilizer_order(PointSet(Dimension(3))), std::invalid_argument);
  // the whole space spans and is stabilized by everything
  CHECK(stabilizer_order(PointSet::all_points(Dimension(2))) == 168);
  CHECK_THROWS_AS(stabilizer_order(PointSet::all_points(Dimension(6))),
                  std::invalid_argument);  // more than 64 points is out of contract
}

TEST_CASE("orbit sizes: quotient formula equals breadth-first expansion") {
  const Dimension dim(2);
  CHECK(orbit_size(PointSet(dim, {1, 2, 3})) == 7);       // the 7 lines
  CHECK(orbit_size_bfs(PointSet(dim, {1, 2, 3})) == 7);
  CHECK(orbit_size(PointSet(dim, {1, 2, 4})) == 28);      // the 28 triangles
  CHECK(orbit_size_bfs(PointSet(dim, {1, 2, 4})) == 28);
  CHECK(orbit_size(PointSet(dim, {1, 2, 4, 7})) == 7);
  CHECK(orbit_size_bfs(PointSet(dim, {1, 2, 4, 7})) == 7);
  CHECK(orbit_size(PointSet::all_points(dim)) == 1);

  const Dimension d3(3);
  const PointSet cc(d3, {1, 2, 4, 8, 15});
  CHECK(orbit_size(cc) == 20160 / 120);
  CHECK(orbit_size_bfs(cc) == orbit_size(cc));
  const PointSet nc(d3, {1, 2, 3, 4, 8, 12});
  CHECK(orbit_size_bfs(nc) == orbit_size(nc));
}

TEST_CASE("are_equivalent distinguishes and identifies classes") {
  const Dimension dim(2);
  CHECK(are_equivalent(PointSet(dim, {1, 2, 4, 6}), PointSet(dim, {1, 2, 3, 4})));
  CHECK_FALSE(are_equivalent(PointSet(dim, {1, 2, 4, 7}), PointSet(dim, {1, 2, 3, 4})));
  CHECK_FALSE(are_equivalent(PointSet(dim, {1, 2, 3}), PointSet(dim, {1, 2, 4})));
  CHECK_FALSE(are_equivalent(PointSet(dim, {1, 2}), PointSet(dim, {1, 2, 3})));
  CHECK_THROWS_AS(are_equivalent(PointSet(dim, {1}), PointSet(Dimension(3), {1})),
                  std::invalid_argument);

  std::mt19937_64 rng(31337);
  const Dimension d3(3);
  const PointSet s(d3, {1, 2, 4, 5, 8, 9, 12, 13});
  for (int trial = 0; trial < 20; ++trial) {
    const PointSet img = ProjMap::random_invertible(d3, rng).apply(s);
    CHECK(are_equivalent(s, img));
  }
  // same size and both non-caps, but different classes
  CHECK_FALSE(are_equivalent(PointSet(d3, {1, 2, 4, 7, 8, 11, 13, 14}),
                             PointSet(d3, {1, 2, 4, 5, 8, 9, 12, 13})));
}
