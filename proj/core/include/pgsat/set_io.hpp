#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "pgsat/geometry.hpp"

namespace pgsat {

// Text interchange format for point sets: an optional header line "v=<n>"
// fixing the dimension, then one set per line as decimal point values
// separated by single spaces.  Blank lines and lines starting with '#' are
// ignored.  The dimension must arrive either through the header or through
// the caller (e.g. a --v flag); if both are present they must agree.

struct SetFile {
  Dimension dim;
  std::vector<PointSet> sets;
};

SetFile read_sets(std::istream& in, std::optional<int> dim_hint = std::nullopt);
SetFile read_sets_file(const std::string& path, std::optional<int> dim_hint = std::nullopt);

// A single set in line format, e.g. "1 2 4 8 15".
std::string set_line(const PointSet& s);
PointSet parse_set_line(Dimension dim, const std::string& line);

void write_sets(std::ostream& out, Dimension dim, const std::vector<PointSet>& sets);
void write_sets_file(const std::string& path, Dimension dim, const std::vector<PointSet>& sets);

}  // namespace pgsat
