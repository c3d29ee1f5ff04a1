#pragma once

#include <array>
#include <cstdint>
#include <random>
#include <vector>

#include "pgsat/geometry.hpp"

namespace pgsat {

// An invertible linear map of GF(2)^(v+1), i.e. a collineation of PG(v,2).
// Row i holds the image coordinates contributed by input coordinate i, so
// applying the map to a point is an XOR of the rows selected by its bits.
class ProjMap {
 public:
  ProjMap(Dimension dim, const std::vector<Point>& rows);  // throws if singular

  static ProjMap identity(Dimension dim);
  // Map sending unit vector e_i to cols[i]; throws if the images are dependent.
  static ProjMap from_images(Dimension dim, const std::vector<Point>& cols);
  static ProjMap random_invertible(Dimension dim, std::mt19937_64& rng);

  Dimension dim() const { return dim_; }
  Point row(int i) const { return rows_[i]; }
  std::vector<Point> rows() const;

  Point apply(Point p) const {
    Point y = 0;
    for (int i = 0; p; ++i, p >>= 1)
      if (p & 1) y ^= rows_[i];
    return y;
  }
  PointSet apply(const PointSet& s) const;

  ProjMap inverse() const;
  // (a.compose(b))(x) == a(b(x))
  ProjMap compose(const ProjMap& b) const;

  bool operator==(const ProjMap& o) const;

 private:
  ProjMap(Dimension dim) : dim_(dim) { rows_.fill(0); }

  Dimension dim_;
  std::array<Point, 7> rows_;
};

// |GL(n,2)| = prod_{i<n} (2^n - 2^i).
std::uint64_t gl_order(int ncoords);

// A small generating set of GL(n,2): a coordinate cycle, a transposition and
// one transvection.
std::vector<ProjMap> gl_generators(Dimension dim);

// Lexicographically least image of a set under the collineation group,
// comparing images as sorted member lists, together with a witness map
// satisfying witness.apply(original) == members.
struct CanonicalForm {
  PointSet members;
  ProjMap witness;
};

CanonicalForm canonical_form(const PointSet& s);

// True iff s is its own canonical form.  Much cheaper than computing the
// form; this is the workhorse of the orderly enumeration.
bool is_canonical(const PointSet& s);

bool are_equivalent(const PointSet& a, const PointSet& b);

// Order of the setwise stabilizer of s in the collineation group, counted by
// a backtrack over basis images.  Requires s to span the whole space.
std::uint64_t stabilizer_order(const PointSet& s);

// Orbit size |GL| / |stabilizer|, checked against a breadth-first expansion
// of the orbit for moderate sizes.  Requires s to span the whole space.
std::uint64_t orbit_size(const PointSet& s);

// Direct breadth-first count of the orbit of s under the generators; exact
// but memory-bound, intended for tests and small cases.
std::uint64_t orbit_size_bfs(const PointSet& s);

}  // namespace pgsat
