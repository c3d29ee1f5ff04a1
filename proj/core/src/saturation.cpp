#include "pgsat/saturation.hpp"

#include <stdexcept>

namespace pgsat {

std::string to_string(SetType t) {
  switch (t) {
    case SetType::CA: return "CA";
    case SetType::CC: return "CC";
    case SetType::NA: return "NA";
    case SetType::NC: return "NC";
  }
  throw std::logic_error("bad SetType");
}

SetType set_type_from_string(const std::string& s) {
  if (s == "CA") return SetType::CA;
  if (s == "CC") return SetType::CC;
  if (s == "NA") return SetType::NA;
  if (s == "NC") return SetType::NC;
  throw std::invalid_argument("unknown set type: " + s);
}

namespace {

// Bitmap of S together with every bisecant point {a ^ b : a,b in S}.
Bits128 covered_bits(const PointSet& s) {
  Bits128 cov = s.bits();
  for (Point a = s.first(); a; a = s.next(a)) cov = cov | s.bits().xor_translate(a);
  cov.reset(0);
  return cov;
}

}  // namespace

PointSet covered_points(const PointSet& s) {
  return PointSet::from_bits(s.dim(), covered_bits(s));
}

PointSet uncovered_points(const PointSet& s) {
  Bits128 all = Bits128::low_mask(s.dim().max_point() + 1);
  all.reset(0);
  return PointSet::from_bits(s.dim(), all.minus(covered_bits(s)));
}

bool is_one_saturating(const PointSet& s) {
  Bits128 all = Bits128::low_mask(s.dim().max_point() + 1);
  all.reset(0);
  return all.subset_of(covered_bits(s));
}

bool is_minimal_one_saturating(const PointSet& s) {
  if (!is_one_saturating(s)) return false;
  for (Point p = s.first(); p; p = s.next(p))
    if (is_one_saturating(s.without(p))) return false;
  return true;
}

SetType classify_type(const PointSet& s) {
  if (!is_minimal_one_saturating(s))
    throw std::invalid_argument("classify_type requires a minimal 1-saturating set");
  const bool cap = is_cap(s);
  if (s.dim().v() == 2) return cap ? SetType::CA : SetType::NA;
  return cap ? SetType::CC : SetType::NC;
}

}  // namespace pgsat
