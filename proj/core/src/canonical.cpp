#include <algorithm>
#include <cassert>
#include <cstring>
#include <stdexcept>

#include "pgsat/group.hpp"

// Canonical forms under the collineation group GL(v+1,2), with sets compared
// as sorted lists of point values.
//
// Everything here rests on one structural fact about lexicographically least
// images: walking a least image in increasing order, each prefix spans a
// standard subspace.  The first element must be 1, and every later element
// either lies in the span [1, 2^r) of the previous ones or is exactly the
// next unit value 2^r -- otherwise some value below it would be reachable by
// an extension of the map, giving a smaller image.  This gives a cheap
// prefilter, keeps the search trees narrow, and is what makes the orderly
// enumeration's parent rule work (deleting the largest element of a least
// image leaves a least image).
//
// The searches match a candidate image element by element while maintaining
// the partial *inverse* map B: bmap[w] is the preimage of each value w the
// matched prefix spans, so "w can be an image element" is simply
// "bmap[w] is a member".  Branching only happens when a new element lies
// outside the span of the matched prefix: its preimage may be any member
// outside the span of the preimages used so far.

namespace pgsat {

namespace {

struct SetView {
  int k = 0;
  int rank = 0;
  Bits128 sbits{};
  std::uint8_t memb[128];
};

SetView make_view(const PointSet& s) {
  SetView v;
  v.sbits = s.bits();
  for (Point p = s.first(); p; p = s.next(p)) v.memb[v.k++] = std::uint8_t(p);
  v.rank = f2_rank(s);
  return v;
}

// Rejects sets that cannot be least images: a non-member below max(S) whose
// preceding members do not span it is reachable by extending a partial map
// (unless the prefix already has full rank, in which case the value lies
// outside span(S) and is out of reach for good).
bool prefix_filter(const SetView& s) {
  Bits128 span{};
  span.set(0);
  std::uint8_t vals[128];
  int cnt = 1;
  vals[0] = 0;
  int rank = 0;
  const unsigned maxv = s.memb[s.k - 1];
  for (unsigned u = 1; u <= maxv; ++u) {
    if (s.sbits.test(u)) {
      if (!span.test(u)) {
        const int c = cnt;
        for (int i = 0; i < c; ++i) {
          const std::uint8_t w = std::uint8_t(vals[i] ^ u);
          span.set(w);
          vals[cnt++] = w;
        }
        ++rank;
      }
    } else if (!span.test(u) && rank < s.rank) {
      return false;
    }
  }
  return true;
}

// ---------------------------------------------------------------------------
// Canonicity test: search for any strictly smaller image.

struct CanonTest {
  const SetView& s;
  Bits128 tgt_span{};             // values spanned by the matched prefix
  Bits128 img_span{};             // values spanned by the preimages used
  std::uint8_t bmap[128];         // preimage of every value in tgt_span
  std::uint8_t span_vals[128];
  int span_cnt = 0;
  bool smaller = false;

  explicit CanonTest(const SetView& view) : s(view) {
    tgt_span.set(0);
    img_span.set(0);
    bmap[0] = 0;
    span_vals[0] = 0;
    span_cnt = 1;
  }

  // Match element idx of the prefix; prev is the previous element's value.
  void dfs(int idx, int prev) {
    const int target = s.memb[idx];
    // Any spanned value in the gap whose preimage is a member yields an
    // image starting strictly below S.
    for (int u = tgt_span.next_bit(prev); u >= 0 && u < target; u = tgt_span.next_bit(u)) {
      if (s.sbits.test(bmap[u])) {
        smaller = true;
        return;
      }
    }
    if (tgt_span.test(unsigned(target))) {
      if (!s.sbits.test(bmap[target])) return;  // forced preimage not a member
      if (idx + 1 == s.k) return;               // matched S completely: an automorphism
      dfs(idx + 1, target);
      return;
    }
    // target opens a new dimension: branch over preimages outside img_span.
    // The prefilter guarantees every newly spanned value sits above target,
    // so no retroactive checks are needed.
    const int old_cnt = span_cnt;
    const Bits128 old_tgt = tgt_span, old_img = img_span;
    for (int i = 0; i < s.k && !smaller; ++i) {
      const std::uint8_t pre = s.memb[i];
      if (img_span.test(pre)) continue;
      for (int j = 0; j < old_cnt; ++j) {
        const std::uint8_t w = std::uint8_t(span_vals[j] ^ target);
        bmap[w] = std::uint8_t(bmap[span_vals[j]] ^ pre);
        span_vals[old_cnt + j] = w;
        tgt_span.set(w);
      }
      span_cnt = 2 * old_cnt;
      img_span = old_img | old_img.xor_translate(pre);
      if (idx + 1 < s.k)
        dfs(idx + 1, target);
      // idx + 1 == s.k: complete match, automorphism, nothing to do
      span_cnt = old_cnt;
      tgt_span = old_tgt;
      img_span = old_img;
    }
  }
};

// ---------------------------------------------------------------------------
// Least-image search, giving the canonical form and a witness.

struct FormSearch {
  const SetView& s;
  int ncoords;                    // coordinates of the (sub)space searched
  Bits128 ptmask;                 // valid point values of that subspace
  Bits128 tgt_span{}, img_span{};
  Bits128 pend{};                 // spanned values whose preimage is a member
  Bits128 selbits{};
  std::uint8_t bmap[128];
  std::uint8_t span_vals[128];
  int span_cnt = 0;
  std::uint8_t sel[128];
  std::uint8_t best[128];         // incumbent image, initially S itself
  std::uint8_t bestB[7];          // rows of the inverse map for the incumbent

  FormSearch(const SetView& view, int m) : s(view), ncoords(m) {
    ptmask = Bits128::low_mask(unsigned(1) << m);
    ptmask.reset(0);
    tgt_span.set(0);
    img_span.set(0);
    bmap[0] = 0;
    span_vals[0] = 0;
    span_cnt = 1;
    std::memcpy(best, s.memb, size_t(s.k));
    for (int i = 0; i < m; ++i) bestB[i] = std::uint8_t(1u << i);
  }

  void run() { dfs(0, 0, false); }

  // lt: the selected prefix is strictly below the incumbent.  Returns true
  // when the incumbent improved somewhere in this subtree; the new best then
  // begins with exactly the caller's prefix, so the caller downgrades its lt
  // to "equal" before running the remaining siblings -- otherwise a stale lt
  // would let a worse later leaf overwrite the better incumbent.
  bool dfs(int last, int idx, bool lt) {
    if (idx == s.k) {
      if (!lt) return false;
      std::memcpy(best, sel, size_t(s.k));
      for (int i = 0; i < ncoords; ++i) bestB[i] = bmap[1u << i];
      return true;
    }
    const int forced = pend.minus(selbits).lowest_bit_from(unsigned(last + 1));
    const int open = ptmask.minus(tgt_span).lowest_bit_from(unsigned(last + 1));
    if (forced >= 0 && (open < 0 || forced < open)) {
      // forced is in every extension of the current map and everything below
      // it is settled, so it must be the next element of the image.
      const int c = lt ? -1 : forced - int(best[idx]);
      if (c > 0) return false;
      sel[idx] = std::uint8_t(forced);
      selbits.set(unsigned(forced));
      const bool improved = dfs(forced, idx + 1, lt || c < 0);
      selbits.reset(unsigned(forced));
      return improved;
    }
    if (open < 0) return false;
    // Every remaining move (selecting open, or skipping it and selecting
    // something larger) puts a value >= open at position idx, so the branch
    // dies as soon as open exceeds the incumbent there.
    if (!lt && open > int(best[idx])) return false;
    bool improved = false;
    {
      const int old_cnt = span_cnt;
      const Bits128 old_tgt = tgt_span, old_img = img_span, old_pend = pend;
      for (int i = 0; i < s.k; ++i) {
        const std::uint8_t pre = s.memb[i];
        if (img_span.test(pre)) continue;
        bool ok = true;
        for (int j = 0; j < old_cnt; ++j) {
          const std::uint8_t w = std::uint8_t(span_vals[j] ^ unsigned(open));
          const std::uint8_t im = std::uint8_t(bmap[span_vals[j]] ^ pre);
          bmap[w] = im;
          span_vals[old_cnt + j] = w;
          tgt_span.set(w);
          if (s.sbits.test(im)) {
            pend.set(w);
            // A newly determined member-preimage below the current position
            // was passed over already; the image cannot sort correctly.
            if (w < unsigned(open)) ok = false;
          }
        }
        if (ok) {
          span_cnt = 2 * old_cnt;
          img_span = old_img | old_img.xor_translate(pre);
          sel[idx] = std::uint8_t(open);
          selbits.set(unsigned(open));
          const int c = lt ? -1 : open - int(best[idx]);
          if (c <= 0 && dfs(open, idx + 1, lt || c < 0)) {
            improved = true;
            lt = false;  // the incumbent is now this prefix followed by open
          }
          selbits.reset(unsigned(open));
        }
        span_cnt = old_cnt;
        tgt_span = old_tgt;
        img_span = old_img;
        pend = old_pend;
      }
    }
    // Leave open out of the image: legitimate because nothing maps to it yet,
    // and if a later extension does, the pend check above prunes the branch.
    if (dfs(open, idx, lt)) improved = true;
    return improved;
  }
};

// Basis of span(S) drawn from S, completed to a basis of the whole space by
// unit vectors.
std::vector<Point> completed_basis(const PointSet& s, int* out_rank) {
  const int n = s.dim().ncoords();
  std::vector<Point> basis;
  Point pivots[7] = {0};
  auto try_add = [&](Point p) {
    Point x = p;
    while (x) {
      int top = 31 - std::countl_zero(x);
      if (!pivots[top]) {
        pivots[top] = x;
        basis.push_back(p);
        return true;
      }
      x ^= pivots[top];
    }
    return false;
  };
  for (Point p = s.first(); p; p = s.next(p)) try_add(p);
  *out_rank = int(basis.size());
  for (int i = 0; i < n && int(basis.size()) < n; ++i) try_add(Point{1} << i);
  return basis;
}

}  // namespace

bool is_canonical(const PointSet& s) {
  if (s.empty()) return true;
  if (s == PointSet::all_points(s.dim())) return true;
  const SetView view = make_view(s);
  if (!prefix_filter(view)) return false;
  CanonTest test(view);
  test.dfs(0, 0);
  return !test.smaller;
}

CanonicalForm canonical_form(const PointSet& s) {
  const Dimension dim = s.dim();
  const int n = dim.ncoords();
  if (s.empty() || s == PointSet::all_points(dim))
    return {s, ProjMap::identity(dim)};

  int rank = 0;
  const std::vector<Point> basis = completed_basis(s, &rank);

  // Move span(S) onto the standard subspace first; the least image lives
  // there, and within it only the action of GL(rank,2) matters.
  const ProjMap to_standard = ProjMap::from_images(dim, basis).inverse();
  const PointSet reduced = rank == n ? s : to_standard.apply(s);

  const SetView view = make_view(reduced);
  FormSearch search(view, rank);
  search.run();

  std::vector<Point> inv_rows(size_t(n), 0);
  for (int i = 0; i < rank; ++i) inv_rows[size_t(i)] = search.bestB[i];
  for (int i = rank; i < n; ++i) inv_rows[size_t(i)] = Point{1} << i;
  ProjMap witness = ProjMap(dim, inv_rows).inverse();
  if (rank != n) witness = witness.compose(to_standard);

  PointSet members(dim);
  for (int i = 0; i < view.k; ++i) members.add(search.best[i]);
  assert(witness.apply(s) == members);
  return {members, witness};
}

}  // namespace pgsat
