#include "pgsat/constructions.hpp"

#include <stdexcept>

#include "pgsat/saturation.hpp"
#include "pgsat/set_io.hpp"

namespace pgsat {

namespace {

// Every construction promises a minimal 1-saturating output (plus, for some,
// a definite cap/non-cap shape); check the promise before handing it out.
ConstructionResult checked(PointSet out, std::string desc, int expect_cap /* -1 any */) {
  if (!is_one_saturating(out))
    throw std::logic_error(desc + ": output is not 1-saturating");
  if (!is_minimal_one_saturating(out))
    throw std::logic_error(desc + ": output is not minimal");
  const bool cap = is_cap(out);
  if (expect_cap >= 0 && cap != (expect_cap == 1))
    throw std::logic_error(desc + ": output has the wrong cap shape");
  std::vector<std::string> props{"1-saturating", "minimal"};
  props.push_back(cap ? "cap" : "non-cap");
  return {std::move(out), std::move(desc), std::move(props)};
}

}  // namespace

ConstructionResult gl_construction(const PointSet& s, Point pivot) {
  if (!s.contains(pivot))
    throw std::invalid_argument("pivot " + std::to_string(pivot) + " is not in the set");
  if (!is_cap(s) || !is_one_saturating(s))
    throw std::invalid_argument("input must be a complete cap (a 1-saturating cap)");
  // Fold the cap through the pivot: pivot stays, every other point s' is
  // replaced by pivot ^ s'.
  PointSet out = s.translate_xor(pivot).with(pivot);
  return checked(std::move(out),
                 "pivot fold at " + std::to_string(pivot) + " of complete cap {" + set_line(s) + "}",
                 -1);
}

ConstructionResult doubling(const PointSet& s) {
  const int v = s.dim().v();
  if (v + 1 > 6)
    throw std::invalid_argument("doubling from v=6 leaves the supported dimension range");
  if (!is_minimal_one_saturating(s))
    throw std::invalid_argument("doubling expects a minimal 1-saturating set");
  const Dimension up(v + 1);
  const Point e = Point{1} << (v + 1);  // unit vector of the new coordinate
  PointSet out(up);
  for (Point p = s.first(); p; p = s.next(p)) {
    out.add(p);
    out.add(p | e);
  }
  return checked(std::move(out), "doubling of {" + set_line(s) + "} into PG(" +
                                     std::to_string(v + 1) + ",2)",
                 -1);
}

ConstructionResult hyperplane_complement(Dimension dim, Point f) {
  if (f == 0 || f > dim.max_point())
    throw std::invalid_argument("hyperplane functional out of range");
  PointSet out(dim);
  for (Point x = 1; x <= dim.max_point(); ++x)
    if (dot_parity(f, x) == 1) out.add(x);
  // The affine side of a hyperplane: the classical largest complete cap.
  return checked(std::move(out),
                 "complement of hyperplane f=" + std::to_string(f) + " in PG(" +
                     std::to_string(dim.v()) + ",2)",
                 1);
}

ConstructionResult hyperplane_plus_point(Dimension dim, Point f, Point p) {
  if (f == 0 || f > dim.max_point())
    throw std::invalid_argument("hyperplane functional out of range");
  if (p == 0 || p > dim.max_point() || dot_parity(f, p) != 1)
    throw std::invalid_argument("the extra point must lie outside the hyperplane");
  PointSet out = hyperplane(dim, f).with(p);
  return checked(std::move(out),
                 "hyperplane f=" + std::to_string(f) + " plus point " + std::to_string(p) +
                     " in PG(" + std::to_string(dim.v()) + ",2)",
                 0);
}

}  // namespace pgsat
