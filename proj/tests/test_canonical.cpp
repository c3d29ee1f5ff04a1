#include <random>

#include <doctest.h>

#include "pgsat/group.hpp"
#include "test_util.hpp"

using namespace pgsat;
using pgsat_test::all_group_elements;
using pgsat_test::brute_least_image;
using pgsat_test::set_from_mask;

// The exhaustive oracle: over all 168 collineations of PG(2,2) and every one
// of the 128 subsets, the canonical form must equal the overall least image,
// the witness must actually map the set onto it, and is_canonical must agree
// with being a fixed point.
TEST_CASE("canonical form equals the least group image on every plane subset") {
  const Dimension dim(2);
  const std::vector<ProjMap> group = all_group_elements(dim);
  REQUIRE(group.size() == 168);

  for (std::uint64_t mask = 0; mask < 128; ++mask) {
    const PointSet s = set_from_mask(dim, mask);
    const std::vector<Point> expect = brute_least_image(s, group);
    const CanonicalForm canon = canonical_form(s);
    CHECK(canon.members.members() == expect);
    CHECK(canon.witness.apply(s) == canon.members);
    CHECK(is_canonical(s) == (s.members() == expect));
  }
}

TEST_CASE("canonical form equals the least group image on sampled PG(3,2) subsets") {
  const Dimension dim(3);
  const std::vector<ProjMap> group = all_group_elements(dim);
  REQUIRE(group.size() == 20160);

  std::mt19937_64 rng(60601);
  for (int trial = 0; trial < 60; ++trial) {
    const PointSet s = set_from_mask(dim, rng() & 0x7fffu);
    const std::vector<Point> expect = brute_least_image(s, group);
    const CanonicalForm canon = canonical_form(s);
    CHECK(canon.members.members() == expect);
    CHECK(canon.witness.apply(s) == canon.members);
    CHECK(is_canonical(s) == (s.members() == expect));
    CHECK(is_canonical(canon.members));
  }
}

TEST_CASE("canonical form is a class invariant in higher dimensions") {
  std::mt19937_64 rng(424243);
  for (int v : {4, 5}) {
    const Dimension dim(v);
    const std::uint64_t mask_all = (std::uint64_t(1) << dim.num_points()) - 1;
    for (int trial = 0; trial < 25; ++trial) {
      const PointSet s = set_from_mask(dim, rng() & mask_all & rng());  // thinned a little
      const CanonicalForm canon = canonical_form(s);
      CHECK(canon.witness.apply(s) == canon.members);
      CHECK(is_canonical(canon.members));
      CHECK(compare_sorted(canon.members, s) <= 0);
      for (int probe = 0; probe < 6; ++probe) {
        const PointSet img = ProjMap::random_invertible(dim, rng).apply(s);
        CHECK(canonical_form(img).members == canon.members);
      }
    }
  }
}

TEST_CASE("canonical forms of rank-deficient sets live in the standard subspace") {
  const Dimension dim(5);
  // rank 2: any triangle-free pair-plus-sum collapses onto {1,2,3}
  CHECK(canonical_form(PointSet(dim, {5, 9, 12})).members ==
        PointSet(dim, {1, 2, 3}));  // 5^9=12
  CHECK(canonical_form(PointSet(dim, {33})).members == PointSet(dim, {1}));
  CHECK(canonical_form(PointSet(dim, {40, 17})).members == PointSet(dim, {1, 2}));
  const PointSet flat(dim, {7, 11, 19, 35});  // four independent points
  const CanonicalForm canon = canonical_form(flat);
  CHECK(canon.members == PointSet(dim, {1, 2, 4, 8}));
  CHECK(canon.witness.apply(flat) == canon.members);
}

TEST_CASE("empty and full sets are their own canonical forms") {
  for (int v : {2, 4, 6}) {
    const Dimension dim(v);
    CHECK(is_canonical(PointSet(dim)));
    CHECK(is_canonical(PointSet::all_points(dim)));
    CHECK(canonical_form(PointSet(dim)).members == PointSet(dim));
    CHECK(canonical_form(PointSet::all_points(dim)).members == PointSet::all_points(dim));
  }
}

// Deleting the largest element of a canonical set leaves a canonical set;
// this is what lets the enumeration grow sets by their maximum only.
TEST_CASE("canonical prefixes stay canonical") {
  const Dimension dim(3);
  std::mt19937_64 rng(555);
  for (int trial = 0; trial < 80; ++trial) {
    PointSet s = canonical_form(set_from_mask(dim, rng() & 0x7fffu)).members;
    while (!s.empty()) {
      CHECK(is_canonical(s));
      Point maxp = 0;
      for (Point p = s.first(); p; p = s.next(p)) maxp = p;
      s = s.without(maxp);
    }
  }
}

TEST_CASE("canonical members enumerate orbits exactly once") {
  // Count canonical 4-subsets of the plane: one per orbit of 4-subsets.
  const Dimension dim(2);
  int canonical_count = 0;
  for (std::uint64_t mask = 0; mask < 128; ++mask) {
    const PointSet s = set_from_mask(dim, mask);
    if (s.size() == 4 && is_canonical(s)) ++canonical_count;
  }
  CHECK(canonical_count == 2);  // quadrilaterals and line-plus-point
}
