#include "pgsat/group.hpp"

#include <bit>
#include <cstring>
#include <queue>
#include <stdexcept>
#include <unordered_set>

namespace pgsat {

namespace {

int rank_of_rows(const Point* rows, int n) {
  Point pivots[7] = {0};
  int rank = 0;
  for (int i = 0; i < n; ++i) {
    Point x = rows[i];
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

}  // namespace

ProjMap::ProjMap(Dimension dim, const std::vector<Point>& rows) : dim_(dim) {
  const int n = dim.ncoords();
  if (int(rows.size()) != n)
    throw std::invalid_argument("matrix needs one row per coordinate");
  rows_.fill(0);
  for (int i = 0; i < n; ++i) {
    if (rows[i] > dim.max_point())
      throw std::invalid_argument("matrix row value out of range");
    rows_[i] = rows[i];
  }
  if (rank_of_rows(rows_.data(), n) != n)
    throw std::invalid_argument("matrix is singular");
}

ProjMap ProjMap::identity(Dimension dim) {
  ProjMap m(dim);
  for (int i = 0; i < dim.ncoords(); ++i) m.rows_[i] = Point{1} << i;
  return m;
}

ProjMap ProjMap::from_images(Dimension dim, const std::vector<Point>& cols) {
  return ProjMap(dim, cols);  // row i is by definition the image of e_i
}

ProjMap ProjMap::random_invertible(Dimension dim, std::mt19937_64& rng) {
  const int n = dim.ncoords();
  const Point mask = dim.max_point();
  ProjMap m(dim);
  do {
    for (int i = 0; i < n; ++i) m.rows_[i] = Point(rng()) & mask;
  } while (rank_of_rows(m.rows_.data(), n) != n);
  return m;
}

std::vector<Point> ProjMap::rows() const {
  return std::vector<Point>(rows_.begin(), rows_.begin() + dim_.ncoords());
}

PointSet ProjMap::apply(const PointSet& s) const {
  if (s.dim() != dim_) throw std::invalid_argument("map and set dimension differ");
  PointSet out(dim_);
  for (Point p = s.first(); p; p = s.next(p)) out.add(apply(p));
  return out;
}

ProjMap ProjMap::inverse() const {
  // Gauss-Jordan on rows augmented with the identity in the high bits.
  const int n = dim_.ncoords();
  std::uint64_t aug[7];
  for (int i = 0; i < n; ++i)
    aug[i] = std::uint64_t(rows_[i]) | (std::uint64_t(1) << (n + i));
  for (int col = 0; col < n; ++col) {
    int pivot = -1;
    for (int i = col; i < n; ++i)
      if ((aug[i] >> col) & 1) {
        pivot = i;
        break;
      }
    if (pivot < 0) throw std::logic_error("inverse of singular matrix");
    std::swap(aug[col], aug[pivot]);
    for (int i = 0; i < n; ++i)
      if (i != col && ((aug[i] >> col) & 1)) aug[i] ^= aug[col];
  }
  ProjMap inv(dim_);
  for (int i = 0; i < n; ++i) inv.rows_[i] = Point(aug[i] >> n);
  return inv;
}

ProjMap ProjMap::compose(const ProjMap& b) const {
  if (dim_ != b.dim_) throw std::invalid_argument("composing maps of different dimensions");
  ProjMap r(dim_);
  for (int i = 0; i < dim_.ncoords(); ++i) r.rows_[i] = apply(b.rows_[i]);
  return r;
}

bool ProjMap::operator==(const ProjMap& o) const {
  return dim_ == o.dim_ && rows_ == o.rows_;
}

std::uint64_t gl_order(int ncoords) {
  if (ncoords < 1 || ncoords > 7) throw std::invalid_argument("gl_order expects 1..7 coordinates");
  std::uint64_t order = 1;
  const std::uint64_t q_n = std::uint64_t(1) << ncoords;
  for (int i = 0; i < ncoords; ++i) order *= q_n - (std::uint64_t(1) << i);
  return order;
}

std::vector<ProjMap> gl_generators(Dimension dim) {
  const int n = dim.ncoords();
  std::vector<Point> cycle(n), swap01(n), transvection(n);
  for (int i = 0; i < n; ++i) {
    cycle[i] = Point{1} << ((i + 1) % n);
    swap01[i] = Point{1} << i;
    transvection[i] = Point{1} << i;
  }
  std::swap(swap01[0], swap01[1]);
  transvection[1] = 0b11;  // e_1 -> e_0 + e_1
  return {ProjMap(dim, cycle), ProjMap(dim, swap01), ProjMap(dim, transvection)};
}

bool are_equivalent(const PointSet& a, const PointSet& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("sets live in different dimensions");
  if (a.size() != b.size()) return false;
  if (is_cap(a) != is_cap(b)) return false;
  // Multiset of bisecant multiplicities is a cheap invariant that settles
  // most non-equivalent pairs before the canonical forms are computed.
  auto color_multiset = [](const PointSet& s) {
    std::array<int, 128> colors{};
    const std::vector<Point> m = s.members();
    for (size_t i = 0; i < m.size(); ++i)
      for (size_t j = i + 1; j < m.size(); ++j) ++colors[m[i] ^ m[j]];
    std::array<int, 64> hist{};  // multiplicity is at most k/2 < 64
    for (Point p = s.first(); p; p = s.next(p)) ++hist[size_t(colors[p])];
    return hist;
  };
  if (color_multiset(a) != color_multiset(b)) return false;
  return canonical_form(a).members == canonical_form(b).members;
}

namespace {

// Backtrack counting the collineations that stabilize S setwise.  Images are
// assigned to a basis of the space drawn from S; two prunes keep the tree
// close to the stabilizer itself: the bisecant multiplicity of a point within
// S is preserved, and whenever the partial map determines the image of a
// value, membership in S (and the multiplicity, for members) must agree.
struct StabSearch {
  int n = 0;
  Bits128 sbits{};
  std::array<std::uint8_t, 64> memb{};
  int k = 0;
  std::array<int, 128> color{};

  std::array<std::uint8_t, 7> basis{};            // chosen pivot order
  std::array<std::uint8_t, 128> span_vals{};      // span of basis prefix, as a list
  std::array<std::uint8_t, 128> amap{};           // image of each spanned value
  Bits128 img_span{};
  std::uint64_t count = 0;

  void choose_basis() {
    Bits128 span{};
    span.set(0);
    Point vals[128];
    int cnt = 1;
    vals[0] = 0;
    for (int j = 0; j < n; ++j) {
      int best = -1;
      int best_rarity = 1 << 30;
      for (int i = 0; i < k; ++i) {
        const int p = memb[i];
        if (span.test(unsigned(p))) continue;
        int rarity = 0;  // candidates sharing this point's multiplicity
        for (int t = 0; t < k; ++t)
          if (color[memb[t]] == color[p]) ++rarity;
        if (rarity < best_rarity) {
          best_rarity = rarity;
          best = p;
        }
      }
      basis[j] = std::uint8_t(best);
      const int c = cnt;
      for (int i = 0; i < c; ++i) {
        Point w = vals[i] ^ Point(best);
        span.set(w);
        vals[cnt++] = w;
      }
    }
  }

  void run() {
    choose_basis();
    span_vals[0] = 0;
    amap[0] = 0;
    img_span.set(0);
    dfs(0, 1);
  }

  void dfs(int depth, int span_cnt) {
    if (depth == n) {
      ++count;
      return;
    }
    const Point b = basis[depth];
    for (int i = 0; i < k; ++i) {
      const Point y = memb[i];
      if (img_span.test(y) || color[y] != color[b]) continue;
      // Tentatively map b -> y and check every newly determined value.
      bool ok = true;
      for (int j = 0; j < span_cnt; ++j) {
        const Point w = span_vals[j] ^ b;
        const Point img = amap[span_vals[j]] ^ y;
        const bool win = sbits.test(w), iin = sbits.test(img);
        if (win != iin || (win && color[w] != color[img])) {
          ok = false;
          break;
        }
        span_vals[span_cnt + j] = std::uint8_t(w);
        amap[w] = std::uint8_t(img);
      }
      if (!ok) continue;
      const Bits128 saved = img_span;
      img_span = img_span | img_span.xor_translate(y);
      dfs(depth + 1, span_cnt * 2);
      img_span = saved;
    }
  }
};

}  // namespace

std::uint64_t stabilizer_order(const PointSet& s) {
  const int n = s.dim().ncoords();
  if (f2_rank(s) != n)
    throw std::invalid_argument("stabilizer_order requires a set spanning the whole space");
  if (s.size() > 64)
    throw std::invalid_argument(
        "stabilizer_order supports at most 64 points (the ceiling for minimal saturating sets)");
  StabSearch st;
  st.n = n;
  st.sbits = s.bits();
  for (Point p = s.first(); p; p = s.next(p)) st.memb[size_t(st.k++)] = std::uint8_t(p);
  for (int i = 0; i < st.k; ++i)
    for (int j = i + 1; j < st.k; ++j) ++st.color[st.memb[i] ^ st.memb[j]];
  st.run();
  return st.count;
}

std::uint64_t orbit_size(const PointSet& s) {
  const int n = s.dim().ncoords();
  if (s.size() == 0) return 1;
  const int r = f2_rank(s);
  if (r == n) return gl_order(n) / stabilizer_order(s);
  // A map fixing the set setwise also fixes its span, so the stabilizer
  // factors into span maps preserving the set times free invertible
  // extensions to the remaining coordinates.
  const PointSet reduced = canonical_form(s).members;  // members lie below 2^r
  StabSearch st;
  st.n = r;
  st.sbits = reduced.bits();
  for (Point p = reduced.first(); p; p = reduced.next(p)) st.memb[size_t(st.k++)] = std::uint8_t(p);
  for (int i = 0; i < st.k; ++i)
    for (int j = i + 1; j < st.k; ++j) ++st.color[st.memb[i] ^ st.memb[j]];
  st.run();
  std::uint64_t stab = st.count;
  for (int i = r; i < n; ++i) stab *= (std::uint64_t{1} << n) - (std::uint64_t{1} << i);
  return gl_order(n) / stab;
}

namespace {

struct BitsHash {
  size_t operator()(const Bits128& b) const {
    std::uint64_t h = b.lo * 0x9e3779b97f4a7c15ull;
    h ^= (b.hi + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2));
    return size_t(h);
  }
};
struct BitsEq {
  bool operator()(const Bits128& a, const Bits128& b) const { return a == b; }
};

}  // namespace

std::uint64_t orbit_size_bfs(const PointSet& s) {
  const Dimension dim = s.dim();
  const std::vector<ProjMap> gens = gl_generators(dim);
  // Point image tables make applying a generator a loop over members.
  std::array<std::array<std::uint8_t, 128>, 3> table{};
  for (size_t g = 0; g < gens.size(); ++g)
    for (Point p = 1; p <= dim.max_point(); ++p) table[g][p] = std::uint8_t(gens[g].apply(p));

  std::unordered_set<Bits128, BitsHash, BitsEq> seen;
  std::queue<Bits128> frontier;
  seen.insert(s.bits());
  frontier.push(s.bits());
  while (!frontier.empty()) {
    const Bits128 cur = frontier.front();
    frontier.pop();
    for (size_t g = 0; g < gens.size(); ++g) {
      Bits128 img{};
      for (int p = cur.lowest_bit_from(1); p >= 0; p = cur.next_bit(p))
        img.set(table[g][size_t(p)]);
      if (seen.insert(img).second) frontier.push(img);
    }
  }
  return seen.size();
}

}  // namespace pgsat
