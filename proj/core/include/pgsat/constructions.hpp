#pragma once

#include <string>
#include <vector>

#include "pgsat/geometry.hpp"

namespace pgsat {

// Output of a structured construction.  Every claimed property has been
// re-verified on the constructed set before the result is returned; a
// construction whose output fails its own claims throws std::logic_error.
struct ConstructionResult {
  PointSet output;
  std::string description;
  std::vector<std::string> verified_properties;
};

// From a complete cap S containing the point s, build {s} union (s ^ (S \ {s})).
// The output is a minimal 1-saturating set of the same size, typically not a
// cap.  Throws std::invalid_argument unless S is a complete cap (a cap that
// is 1-saturating) containing s.
ConstructionResult gl_construction(const PointSet& s, Point pivot);

// Embed S of PG(v,2) into PG(v+1,2) as {x, x + e} for a new coordinate e:
// doubling a minimal 1-saturating set yields a minimal 1-saturating set of
// twice the size one dimension up.  Requires v+1 <= 6 and S minimal.
ConstructionResult doubling(const PointSet& s);

// The affine complement {x : <f,x> = 1} of a hyperplane: a minimal
// 1-saturating set of size 2^v (a cap; the largest complete caps).
ConstructionResult hyperplane_complement(Dimension dim, Point f);

// A hyperplane together with one point outside it: a minimal 1-saturating
// set of size 2^v (never a cap for v >= 2).  Requires <f,p> = 1.
ConstructionResult hyperplane_plus_point(Dimension dim, Point f, Point p);

}  // namespace pgsat
