#include <doctest.h>

#include "pgsat/saturation.hpp"
#include "test_util.hpp"

using namespace pgsat;
using pgsat_test::set_from_mask;

TEST_CASE("type tags convert to and from text") {
  CHECK(to_string(SetType::CA) == "CA");
  CHECK(to_string(SetType::NC) == "NC");
  CHECK(set_type_from_string("CC") == SetType::CC);
  CHECK(set_type_from_string("NA") == SetType::NA);
  CHECK_THROWS_AS(set_type_from_string("XX"), std::invalid_argument);
  // enumerator order doubles as the report sort order
  CHECK(int(SetType::CA) < int(SetType::CC));
  CHECK(int(SetType::CC) < int(SetType::NA));
  CHECK(int(SetType::NA) < int(SetType::NC));
}

TEST_CASE("covered points are the set plus its bisecants") {
  const Dimension dim(2);
  const PointSet line(dim, {1, 2, 3});
  CHECK(covered_points(line) == line);  // sums stay inside a line
  CHECK(uncovered_points(line).members() == std::vector<Point>{4, 5, 6, 7});

  const PointSet triangle(dim, {1, 2, 4});
  CHECK(covered_points(triangle).members() == std::vector<Point>{1, 2, 3, 4, 5, 6});
  CHECK(uncovered_points(triangle).members() == std::vector<Point>{7});

  // the two always partition the space
  std::mt19937_64 rng(99);
  const Dimension d4(4);
  for (int trial = 0; trial < 50; ++trial) {
    const PointSet s = set_from_mask(d4, rng() & ((1u << 31) - 1));
    const PointSet cov = covered_points(s);
    const PointSet unc = uncovered_points(s);
    CHECK((cov & unc).empty());
    CHECK((cov | unc) == PointSet::all_points(d4));
    CHECK(s.subset_of(cov));
    CHECK(is_one_saturating(s) == unc.empty());
  }
}

TEST_CASE("small saturation facts in the plane") {
  const Dimension dim(2);
  CHECK_FALSE(is_one_saturating(PointSet(dim, {1, 2, 3})));
  CHECK(is_one_saturating(PointSet::all_points(dim)));
  CHECK_FALSE(is_minimal_one_saturating(PointSet::all_points(dim)));
  CHECK(is_one_saturating(PointSet(dim, {1, 2, 4, 7})));
  CHECK(is_minimal_one_saturating(PointSet(dim, {1, 2, 4, 7})));

  // no 3-point subset of the plane saturates: 3 points cover at most 6 of 7
  for (std::uint64_t mask = 1; mask < 128; ++mask) {
    const PointSet s = set_from_mask(dim, mask);
    if (s.size() <= 3) CHECK_FALSE(is_one_saturating(s));
  }
}

TEST_CASE("every 4-point subset of the plane is minimal 1-saturating") {
  const Dimension dim(2);
  int caps = 0, noncaps = 0;
  for (std::uint64_t mask = 1; mask < 128; ++mask) {
    const PointSet s = set_from_mask(dim, mask);
    if (s.size() != 4) continue;
    CHECK(is_minimal_one_saturating(s));
    const SetType t = classify_type(s);
    if (is_cap(s)) {
      CHECK(t == SetType::CA);
      ++caps;
    } else {
      CHECK(t == SetType::NA);
      ++noncaps;
    }
  }
  CHECK(caps == 7);      // complements of the 7 lines
  CHECK(noncaps == 28);  // a line plus one of the 4 points off it, 7*4 ways
}

TEST_CASE("classify_type rejects non-minimal sets") {
  const Dimension dim(2);
  CHECK_THROWS_AS(classify_type(PointSet(dim, {1, 2, 3})), std::invalid_argument);
  CHECK_THROWS_AS(classify_type(PointSet::all_points(dim)), std::invalid_argument);
  CHECK_THROWS_AS(classify_type(PointSet(dim, {1, 2, 3, 4, 5})), std::invalid_argument);
}

TEST_CASE("adding a point to a minimal saturating set breaks minimality") {
  const Dimension dim(3);
  const PointSet s(dim, {1, 2, 4, 8, 15});
  REQUIRE(is_minimal_one_saturating(s));
  for (Point x = 1; x <= dim.max_point(); ++x) {
    if (s.contains(x)) continue;
    const PointSet bigger = s.with(x);
    CHECK(is_one_saturating(bigger));
    CHECK_FALSE(is_minimal_one_saturating(bigger));
  }
}

TEST_CASE("known sets in PG(3,2) classify as published") {
  const Dimension dim(3);
  CHECK(classify_type(PointSet(dim, {1, 2, 4, 8, 15})) == SetType::CC);
  CHECK(classify_type(PointSet(dim, {1, 2, 3, 4, 8, 12})) == SetType::NC);
  CHECK(classify_type(PointSet(dim, {1, 2, 4, 7, 8, 11, 13, 14})) == SetType::CC);
  // hyperplane {x : <2,x> = 0} plus the point 2 off it
  CHECK(classify_type(PointSet(dim, {1, 2, 4, 5, 8, 9, 12, 13})) == SetType::NC);
}
