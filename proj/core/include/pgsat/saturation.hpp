#pragma once

#include <string>

#include "pgsat/geometry.hpp"

namespace pgsat {

// Classification labels for minimal 1-saturating sets.  In the plane the
// cap/non-cap split reads "complete arc" / "non-arc"; in higher dimensions
// "complete cap" / "non-cap".  Enumerator order is the table sort order.
enum class SetType { CA, CC, NA, NC };

std::string to_string(SetType t);
SetType set_type_from_string(const std::string& s);

// S is 1-saturating if every point of PG(v,2) lies in S or on a bisecant of
// S, i.e. equals a ^ b for some pair a,b in S.
bool is_one_saturating(const PointSet& s);

// Points of S together with all points covered by its bisecants.
PointSet covered_points(const PointSet& s);
PointSet uncovered_points(const PointSet& s);

// Minimal: 1-saturating and no proper subset is.  It suffices to test the
// subsets dropping a single point.
bool is_minimal_one_saturating(const PointSet& s);

// Type of a minimal 1-saturating set; throws std::invalid_argument when the
// set is not minimal 1-saturating.
SetType classify_type(const PointSet& s);

}  // namespace pgsat
