#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pgsat/geometry.hpp"

namespace pgsat {

// Parity-check view of a point set: the points of S, as column vectors of
// length r = v+1, form the check matrix of a binary [n, n-r] code.  S is
// 1-saturating exactly when the covering radius is at most 2, and minimal
// saturating sets correspond to locally optimal codes of radius 2.
class CoverCode {
 public:
  CoverCode(int codimension, std::vector<Point> columns);  // validates shape
  static CoverCode from_set(const PointSet& s);

  int codimension() const { return r_; }
  int length() const { return int(cols_.size()); }
  const std::vector<Point>& columns() const { return cols_; }

  // Least R such that every syndrome is a sum of at most R columns, or
  // nullopt ("infinite") when the columns do not span the syndrome space.
  std::optional<int> covering_radius() const;

  // True when deleting any single column strictly increases the covering
  // radius (deleting the only column counts: the radius becomes infinite).
  bool is_locally_optimal() const;

  CoverCode without_column(int idx) const;

  // Matrix text: r rows of length-n bit strings, most significant coordinate
  // first, one row per line.
  std::string matrix_text() const;
  static CoverCode parse_matrix_text(const std::string& text);

 private:
  int r_;
  std::vector<Point> cols_;
  mutable std::optional<std::optional<int>> radius_cache_;
};

}  // namespace pgsat
