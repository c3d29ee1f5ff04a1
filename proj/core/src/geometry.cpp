#include "pgsat/geometry.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <utility>

namespace pgsat {

Bits128 Bits128::xor_translate(unsigned a) const {
  // Masks selecting the bit positions whose index has bit j clear.
  static constexpr std::uint64_t kMask[6] = {
      0x5555555555555555ull, 0x3333333333333333ull, 0x0f0f0f0f0f0f0f0full,
      0x00ff00ff00ff00ffull, 0x0000ffff0000ffffull, 0x00000000ffffffffull};
  Bits128 r = *this;
  for (unsigned j = 0; j < 6; ++j) {
    if (!((a >> j) & 1u)) continue;
    const unsigned d = 1u << j;
    r.lo = ((r.lo & kMask[j]) << d) | ((r.lo >> d) & kMask[j]);
    r.hi = ((r.hi & kMask[j]) << d) | ((r.hi >> d) & kMask[j]);
  }
  if (a & 64u) std::swap(r.lo, r.hi);
  return r;
}

Dimension::Dimension(int v) : v_(v) {
  if (v < 2 || v > 6)
    throw std::invalid_argument("projective dimension must be between 2 and 6, got " +
                                std::to_string(v));
}

PointSet::PointSet(Dimension dim, std::initializer_list<Point> pts) : dim_(dim) {
  for (Point p : pts) add(p);
}

PointSet::PointSet(Dimension dim, const std::vector<Point>& pts) : dim_(dim) {
  for (Point p : pts) add(p);
}

PointSet PointSet::all_points(Dimension dim) {
  PointSet s(dim);
  s.bits_ = Bits128::low_mask(dim.max_point() + 1);
  s.bits_.reset(0);
  return s;
}

void PointSet::add(Point p) {
  if (p == 0 || p > dim_.max_point())
    throw std::invalid_argument("point value " + std::to_string(p) + " out of range for PG(" +
                                std::to_string(dim_.v()) + ",2)");
  bits_.set(p);
}

void PointSet::remove(Point p) {
  if (p <= dim_.max_point()) bits_.reset(p);
}

PointSet PointSet::with(Point p) const {
  PointSet r = *this;
  r.add(p);
  return r;
}

PointSet PointSet::without(Point p) const {
  PointSet r = *this;
  r.remove(p);
  return r;
}

std::vector<Point> PointSet::members() const {
  std::vector<Point> m;
  m.reserve(size_t(size()));
  for (Point p = first(); p; p = next(p)) m.push_back(p);
  return m;
}

PointSet PointSet::translate_xor(Point a) const {
  if (a > dim_.max_point())
    throw std::invalid_argument("translation point out of range");
  PointSet r(dim_);
  r.bits_ = bits_.xor_translate(a);
  r.bits_.reset(0);
  return r;
}

PointSet PointSet::complement() const {
  PointSet r(dim_);
  r.bits_ = Bits128::low_mask(dim_.max_point() + 1).minus(bits_);
  r.bits_.reset(0);
  return r;
}

namespace {
void require_same_dim(const PointSet& a, const PointSet& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("point sets live in different dimensions");
}
}  // namespace

PointSet PointSet::operator|(const PointSet& o) const {
  require_same_dim(*this, o);
  return from_bits(dim_, bits_ | o.bits_);
}

PointSet PointSet::operator&(const PointSet& o) const {
  require_same_dim(*this, o);
  return from_bits(dim_, bits_ & o.bits_);
}

PointSet PointSet::setminus(const PointSet& o) const {
  require_same_dim(*this, o);
  return from_bits(dim_, bits_.minus(o.bits_));
}

bool PointSet::subset_of(const PointSet& o) const {
  require_same_dim(*this, o);
  return bits_.subset_of(o.bits_);
}

PointSet PointSet::from_bits(Dimension dim, Bits128 bits) {
  if (bits.test(0) || !bits.subset_of(Bits128::low_mask(dim.max_point() + 1)))
    throw std::invalid_argument("bitmap contains values outside the point range");
  PointSet s(dim);
  s.bits_ = bits;
  return s;
}

int compare_sorted(const PointSet& a, const PointSet& b) {
  Point pa = a.first(), pb = b.first();
  while (pa && pb) {
    if (pa != pb) return pa < pb ? -1 : 1;
    pa = a.next(pa);
    pb = b.next(pb);
  }
  if (pa) return 1;   // b is a strict prefix of a
  if (pb) return -1;
  return 0;
}

Point third_point(Point a, Point b) {
  if (a == 0 || b == 0 || a == b)
    throw std::invalid_argument("a line needs two distinct points");
  return a ^ b;
}

PointSet span_closure(const PointSet& s) {
  // Grow the span one basis vector at a time; each new vector doubles the
  // list of spanned values.
  Point vals[128];
  int cnt = 1;
  vals[0] = 0;
  Bits128 span{};
  span.set(0);
  for (Point p = s.first(); p; p = s.next(p)) {
    if (span.test(p)) continue;
    const int c = cnt;
    for (int i = 0; i < c; ++i) {
      Point w = vals[i] ^ p;
      span.set(w);
      vals[cnt++] = w;
    }
  }
  span.reset(0);
  return PointSet::from_bits(s.dim(), span);
}

int f2_rank(const PointSet& s) {
  Point pivots[7] = {0};
  int rank = 0;
  for (Point p = s.first(); p; p = s.next(p)) {
    Point x = p;
    while (x) {
      int top = 31 - std::countl_zero(x);
      if (!pivots[top]) {
        pivots[top] = x;
        ++rank;
        break;
      }
      x ^= pivots[top];
    }
  }
  return rank;
}

bool spans_whole_space(const PointSet& s) { return f2_rank(s) == s.dim().ncoords(); }

bool is_cap(const PointSet& s) {
  const std::vector<Point> m = s.members();
  for (size_t i = 0; i < m.size(); ++i)
    for (size_t j = i + 1; j < m.size(); ++j)
      if (s.contains(m[i] ^ m[j])) return false;
  return true;
}

PointSet hyperplane(Dimension dim, Point f) {
  if (f == 0 || f > dim.max_point())
    throw std::invalid_argument("hyperplane functional out of range");
  PointSet h(dim);
  for (Point x = 1; x <= dim.max_point(); ++x)
    if (dot_parity(f, x) == 0) h.add(x);
  return h;
}

std::vector<PointSet> hyperplanes(Dimension dim) {
  std::vector<PointSet> hs;
  hs.reserve(size_t(dim.num_points()));
  for (Point f = 1; f <= dim.max_point(); ++f) hs.push_back(hyperplane(dim, f));
  return hs;
}

long line_count(Dimension dim) {
  // Count each line {a, b, a^b} at its pair with the largest third point.
  long count = 0;
  const Point n = dim.max_point();
  for (Point a = 1; a <= n; ++a)
    for (Point b = a + 1; b <= n; ++b)
      if ((a ^ b) > b) ++count;
  return count;
}

}  // namespace pgsat
