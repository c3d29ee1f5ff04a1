#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <vector>

namespace pgsat {

// A point of the binary projective space PG(v,2) is a nonzero vector of
// GF(2)^(v+1), encoded as the integer whose bit i is coordinate i.  Valid
// values run from 1 to 2^(v+1)-1; the value doubles as a bit index below.
using Point = std::uint32_t;

// 128-bit bitset indexed by point value.  Bit 0 corresponds to the zero
// vector and is kept clear in every set of points; linear-algebra helpers
// use it for subspace bitmaps where zero does belong.
struct Bits128 {
  std::uint64_t lo = 0;
  std::uint64_t hi = 0;

  constexpr bool test(unsigned i) const {
    return ((i < 64 ? lo >> i : hi >> (i - 64)) & 1u) != 0;
  }
  constexpr void set(unsigned i) {
    if (i < 64) lo |= std::uint64_t{1} << i;
    else hi |= std::uint64_t{1} << (i - 64);
  }
  constexpr void reset(unsigned i) {
    if (i < 64) lo &= ~(std::uint64_t{1} << i);
    else hi &= ~(std::uint64_t{1} << (i - 64));
  }
  constexpr bool none() const { return lo == 0 && hi == 0; }
  constexpr int count() const { return std::popcount(lo) + std::popcount(hi); }

  friend constexpr Bits128 operator|(Bits128 a, Bits128 b) { return {a.lo | b.lo, a.hi | b.hi}; }
  friend constexpr Bits128 operator&(Bits128 a, Bits128 b) { return {a.lo & b.lo, a.hi & b.hi}; }
  friend constexpr Bits128 operator^(Bits128 a, Bits128 b) { return {a.lo ^ b.lo, a.hi ^ b.hi}; }
  constexpr Bits128 operator~() const { return {~lo, ~hi}; }
  friend constexpr bool operator==(Bits128 a, Bits128 b) { return a.lo == b.lo && a.hi == b.hi; }
  constexpr Bits128 minus(Bits128 b) const { return {lo & ~b.lo, hi & ~b.hi}; }
  constexpr bool subset_of(Bits128 b) const { return (lo & ~b.lo) == 0 && (hi & ~b.hi) == 0; }

  // Bits at positions [0, n).
  static constexpr Bits128 low_mask(unsigned n) {
    if (n >= 128) return {~std::uint64_t{0}, ~std::uint64_t{0}};
    if (n >= 64) return {~std::uint64_t{0}, (std::uint64_t{1} << (n - 64)) - 1};
    return {(std::uint64_t{1} << n) - 1, 0};
  }

  // Index of the lowest set bit at position >= from, or -1 if none.
  constexpr int lowest_bit_from(unsigned from) const {
    if (from < 64) {
      std::uint64_t m = lo & (~std::uint64_t{0} << from);
      if (m) return std::countr_zero(m);
      from = 64;
    }
    std::uint64_t m = from < 128 ? hi & (~std::uint64_t{0} << (from - 64)) : 0;
    if (m) return 64 + std::countr_zero(m);
    return -1;
  }
  constexpr int next_bit(int after) const { return lowest_bit_from(unsigned(after + 1)); }

  // Image of the bitset under x -> x XOR a, for 0 <= a < 128.  Translation by
  // bit j of a swaps bit pairs that differ in position j, which is a masked
  // shift; bit 6 swaps the two words.
  Bits128 xor_translate(unsigned a) const;
};

// Projective dimension v of PG(v,2).  The library works with 2 <= v <= 6,
// which keeps every point value below 128 so sets fit in a Bits128.
class Dimension {
 public:
  explicit Dimension(int v);
  int v() const { return v_; }
  int ncoords() const { return v_ + 1; }            // length of coordinate vectors
  Point max_point() const { return (Point{1} << (v_ + 1)) - 1; }
  int num_points() const { return int(max_point()); }

  friend bool operator==(Dimension a, Dimension b) { return a.v_ == b.v_; }
  friend bool operator!=(Dimension a, Dimension b) { return a.v_ != b.v_; }

 private:
  int v_;
};

// A set of points of PG(v,2), stored as a bitmap over point values.
class PointSet {
 public:
  explicit PointSet(Dimension dim) : dim_(dim) {}
  PointSet(Dimension dim, std::initializer_list<Point> pts);
  PointSet(Dimension dim, const std::vector<Point>& pts);

  static PointSet all_points(Dimension dim);

  Dimension dim() const { return dim_; }
  const Bits128& bits() const { return bits_; }
  int size() const { return bits_.count(); }
  bool empty() const { return bits_.none(); }
  bool contains(Point p) const { return p <= dim_.max_point() && bits_.test(p); }

  void add(Point p);                    // throws on a value outside 1..max_point
  void remove(Point p);
  PointSet with(Point p) const;
  PointSet without(Point p) const;

  // Iteration in increasing point value: for (Point p = s.first(); p; p = s.next(p))
  Point first() const { int b = bits_.lowest_bit_from(1); return b < 0 ? 0 : Point(b); }
  Point next(Point p) const { int b = bits_.next_bit(int(p)); return b < 0 ? 0 : Point(b); }
  std::vector<Point> members() const;

  // {x ^ a : x in this set}, with the zero vector dropped if a is a member.
  PointSet translate_xor(Point a) const;
  PointSet complement() const;

  PointSet operator|(const PointSet& o) const;
  PointSet operator&(const PointSet& o) const;
  PointSet setminus(const PointSet& o) const;
  bool subset_of(const PointSet& o) const;
  bool operator==(const PointSet& o) const { return dim_ == o.dim_ && bits_ == o.bits_; }
  bool operator!=(const PointSet& o) const { return !(*this == o); }

  static PointSet from_bits(Dimension dim, Bits128 bits);

 private:
  Dimension dim_;
  Bits128 bits_;
};

// Sorted-member lexicographic comparison: negative, zero or positive as a
// compares before, equal to or after b.  With equal sizes this reduces to
// asking which set owns the smallest element of the symmetric difference.
int compare_sorted(const PointSet& a, const PointSet& b);

// The third point of the line through distinct points a and b.
Point third_point(Point a, Point b);

// All points of the linear span of s (the projective subspace generated by s).
PointSet span_closure(const PointSet& s);

// Rank over GF(2) of the coordinate vectors of s.
int f2_rank(const PointSet& s);
bool spans_whole_space(const PointSet& s);

// True if no three points of s are collinear.
bool is_cap(const PointSet& s);

// Parity of the standard bilinear form <f,x> over GF(2).
inline int dot_parity(Point f, Point x) { return std::popcount(f & x) & 1; }

// The hyperplane {x : <f,x> = 0} of the nonzero functional f.
PointSet hyperplane(Dimension dim, Point f);
// All 2^(v+1)-1 hyperplanes of PG(v,2), indexed by functional value f-1.
std::vector<PointSet> hyperplanes(Dimension dim);

// Number of lines of PG(v,2), counted directly from point triples.
long line_count(Dimension dim);

}  // namespace pgsat
