#include <random>

#include <doctest.h>

#include "pgsat/covering_code.hpp"
#include "pgsat/saturation.hpp"
#include "test_util.hpp"

using namespace pgsat;
using pgsat_test::set_from_mask;

namespace {

// Independent oracle: the least number of columns XOR-ing to each syndrome,
// by brute force over all column subsets.  Exponential, so test sizes only.
std::optional<int> brute_radius(int r, const std::vector<Point>& cols) {
  const size_t nsyn = size_t(1) << r;
  std::vector<int> best(nsyn, -1);
  const size_t nsub = size_t(1) << cols.size();
  for (size_t sub = 0; sub < nsub; ++sub) {
    Point x = 0;
    int weight = 0;
    for (size_t i = 0; i < cols.size(); ++i)
      if ((sub >> i) & 1) {
        x ^= cols[i];
        ++weight;
      }
    if (best[x] < 0 || weight < best[x]) best[x] = weight;
  }
  int radius = 0;
  for (size_t t = 0; t < nsyn; ++t) {
    if (best[t] < 0) return std::nullopt;
    radius = std::max(radius, best[t]);
  }
  return radius;
}

}  // namespace

TEST_CASE("CoverCode validates its shape") {
  CHECK_THROWS_AS(CoverCode(0, {1}), std::invalid_argument);
  CHECK_THROWS_AS(CoverCode(8, {1}), std::invalid_argument);
  CHECK_THROWS_AS(CoverCode(3, {}), std::invalid_argument);
  CHECK_THROWS_AS(CoverCode(3, {0, 1}), std::invalid_argument);
  CHECK_THROWS_AS(CoverCode(3, {1, 8}), std::invalid_argument);
  CHECK_THROWS_AS(CoverCode(3, {1, 2, 1}), std::invalid_argument);
  const CoverCode c(3, {1, 2, 4, 7});
  CHECK(c.codimension() == 3);
  CHECK(c.length() == 4);
}

TEST_CASE("from_set uses the points as parity-check columns") {
  const CoverCode c = CoverCode::from_set(PointSet(Dimension(2), {1, 2, 4, 7}));
  CHECK(c.codimension() == 3);
  CHECK(c.length() == 4);
  CHECK(c.columns() == std::vector<Point>{1, 2, 4, 7});
  const CoverCode c5 = CoverCode::from_set(PointSet(Dimension(3), {1, 2, 4, 8, 15}));
  CHECK(c5.codimension() == 4);
  CHECK(c5.length() == 5);
  CHECK_THROWS_AS(CoverCode::from_set(PointSet(Dimension(2))), std::invalid_argument);
}

TEST_CASE("covering radius on hand-checked codes") {
  CHECK(CoverCode(3, {1, 2, 4}).covering_radius() == 3);  // syndrome 7 needs all three
  CHECK(CoverCode(3, {1, 2, 3, 4, 5, 6, 7}).covering_radius() == 1);
  CHECK_FALSE(CoverCode(3, {1, 2, 3}).covering_radius().has_value());  // rank 2 < 3
  CHECK(CoverCode::from_set(PointSet(Dimension(2), {1, 2, 4, 7})).covering_radius() == 2);
  CHECK(CoverCode::from_set(PointSet(Dimension(3), {1, 2, 4, 8, 15})).covering_radius() == 2);
  CHECK(CoverCode(1, {1}).covering_radius() == 1);
}

TEST_CASE("covering radius agrees with the subset-sum oracle") {
  std::mt19937_64 rng(8080);
  for (int trial = 0; trial < 120; ++trial) {
    const int r = 3 + int(rng() % 3);  // r in 3..5
    const Point maxval = (Point{1} << r) - 1;
    std::vector<Point> cols;
    for (Point c = 1; c <= maxval; ++c)
      if (rng() % 3 == 0) cols.push_back(c);
    if (cols.empty() || cols.size() > 12) continue;
    const CoverCode code(r, cols);
    CHECK(code.covering_radius() == brute_radius(r, cols));
  }
}

TEST_CASE("adding a column never increases the covering radius") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 60; ++trial) {
    const int r = 4;
    std::vector<Point> cols;
    for (Point c = 1; c <= 15; ++c)
      if (rng() % 2 == 0) cols.push_back(c);
    if (cols.size() < 2) continue;
    const CoverCode code(r, cols);
    const auto base = code.covering_radius();
    for (int i = 0; i < code.length(); ++i) {
      const auto reduced = code.without_column(i).covering_radius();
      // removing can only hurt; stated the other way round, adding never hurts
      if (base && reduced) CHECK(*reduced >= *base);
      if (!base) CHECK_FALSE(reduced.has_value());
    }
  }
}

TEST_CASE("local optimality matches minimal saturation") {
  CHECK(CoverCode::from_set(PointSet(Dimension(2), {1, 2, 4, 7})).is_locally_optimal());
  // column 3 is redundant: {1,2,4,7} already has radius 2
  CHECK_FALSE(CoverCode::from_set(PointSet(Dimension(2), {1, 2, 3, 4, 7})).is_locally_optimal());
  CHECK(CoverCode(1, {1}).is_locally_optimal());       // removal leaves nothing
  CHECK_FALSE(CoverCode(2, {1}).is_locally_optimal()); // infinite cannot increase
  CHECK(CoverCode::from_set(PointSet(Dimension(3), {1, 2, 3, 4, 8, 12})).is_locally_optimal());
}

TEST_CASE("saturation of a spanning set is covering radius at most 2") {
  std::mt19937_64 rng(909);
  const Dimension dim(3);
  for (int trial = 0; trial < 200; ++trial) {
    const PointSet s = set_from_mask(dim, rng() & 0x7fffu);
    if (s.empty() || !spans_whole_space(s)) continue;
    if (s == PointSet::all_points(dim)) continue;
    const auto radius = CoverCode::from_set(s).covering_radius();
    REQUIRE(radius.has_value());
    CHECK(is_one_saturating(s) == (*radius <= 2));
  }
}

TEST_CASE("matrix text round-trips") {
  const CoverCode c = CoverCode::from_set(PointSet(Dimension(2), {1, 2, 4, 7}));
  CHECK(c.matrix_text() == "0011\n0101\n1001\n");
  const CoverCode back = CoverCode::parse_matrix_text(c.matrix_text());
  CHECK(back.codimension() == c.codimension());
  CHECK(back.columns() == c.columns());

  const CoverCode c2(5, {1, 9, 17, 30, 2});
  const CoverCode back2 = CoverCode::parse_matrix_text(c2.matrix_text());
  CHECK(back2.columns() == c2.columns());
  CHECK(back2.codimension() == 5);

  CHECK_THROWS_AS(CoverCode::parse_matrix_text(""), std::invalid_argument);
  CHECK_THROWS_AS(CoverCode::parse_matrix_text("01\n0\n"), std::invalid_argument);
  CHECK_THROWS_AS(CoverCode::parse_matrix_text("0x\n01\n"), std::invalid_argument);
  CHECK_THROWS_AS(CoverCode::parse_matrix_text("00\n00\n"), std::invalid_argument);  // zero column
  CHECK_THROWS_AS(CoverCode::parse_matrix_text("11\n11\n"), std::invalid_argument);  // repeated
}

TEST_CASE("without_column bounds") {
  const CoverCode c(3, {1, 2, 4});
  CHECK_THROWS_AS(c.without_column(-1), std::invalid_argument);
  CHECK_THROWS_AS(c.without_column(3), std::invalid_argument);
  CHECK(c.without_column(1).columns() == std::vector<Point>{1, 4});
}
