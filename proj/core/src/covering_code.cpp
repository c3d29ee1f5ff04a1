#include "pgsat/covering_code.hpp"

#include <algorithm>
#include <queue>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace pgsat {

CoverCode::CoverCode(int codimension, std::vector<Point> columns)
    : r_(codimension), cols_(std::move(columns)) {
  if (r_ < 1 || r_ > 7) throw std::invalid_argument("codimension must be between 1 and 7");
  if (cols_.empty()) throw std::invalid_argument("a check matrix needs at least one column");
  const Point maxval = (Point{1} << r_) - 1;
  for (Point c : cols_) {
    if (c == 0 || c > maxval)
      throw std::invalid_argument("column value " + std::to_string(c) + " outside 1..=" +
                                  std::to_string(maxval));
    if (std::count(cols_.begin(), cols_.end(), c) > 1)
      throw std::invalid_argument("repeated column " + std::to_string(c));
  }
}

CoverCode CoverCode::from_set(const PointSet& s) {
  if (s.empty()) throw std::invalid_argument("cannot build a code from an empty set");
  return CoverCode(s.dim().ncoords(), s.members());
}

std::optional<int> CoverCode::covering_radius() const {
  if (radius_cache_) return *radius_cache_;
  // Breadth-first search over syndromes: dist[t] is the least number of
  // columns summing to t, and the covering radius is the eccentricity of 0.
  const size_t nsyn = size_t(1) << r_;
  std::vector<int> dist(nsyn, -1);
  std::queue<Point> queue;
  dist[0] = 0;
  queue.push(0);
  int radius = 0;
  size_t found = 1;
  while (!queue.empty()) {
    const Point s = queue.front();
    queue.pop();
    for (Point c : cols_) {
      const Point t = s ^ c;
      if (dist[t] < 0) {
        dist[t] = dist[s] + 1;
        radius = std::max(radius, dist[t]);
        ++found;
        queue.push(t);
      }
    }
  }
  std::optional<int> result;
  if (found == nsyn) result = radius;  // otherwise the columns do not span
  radius_cache_ = result;
  return result;
}

CoverCode CoverCode::without_column(int idx) const {
  if (idx < 0 || idx >= length()) throw std::invalid_argument("column index out of range");
  std::vector<Point> cols = cols_;
  cols.erase(cols.begin() + idx);
  return CoverCode(r_, cols);
}

bool CoverCode::is_locally_optimal() const {
  const std::optional<int> base = covering_radius();
  if (!base) return false;  // infinite radius cannot strictly increase
  if (length() == 1) return true;  // removing the only column leaves nothing spanning
  for (int i = 0; i < length(); ++i) {
    const std::optional<int> reduced = without_column(i).covering_radius();
    if (reduced && *reduced <= *base) return false;
  }
  return true;
}

std::string CoverCode::matrix_text() const {
  std::string out;
  for (int row = r_ - 1; row >= 0; --row) {
    for (Point c : cols_) out += ((c >> row) & 1) ? '1' : '0';
    out += '\n';
  }
  return out;
}

CoverCode CoverCode::parse_matrix_text(const std::string& text) {
  std::istringstream in(text);
  std::vector<std::string> rows;
  std::string line;
  while (std::getline(in, line)) {
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
    if (line.empty()) continue;
    rows.push_back(line);
  }
  if (rows.empty()) throw std::invalid_argument("empty matrix");
  const int r = int(rows.size());
  if (r > 7) throw std::invalid_argument("too many matrix rows");
  const size_t n = rows[0].size();
  std::vector<Point> cols(n, 0);
  for (int i = 0; i < r; ++i) {
    if (rows[i].size() != n) throw std::invalid_argument("ragged matrix rows");
    for (size_t j = 0; j < n; ++j) {
      const char ch = rows[i][j];
      if (ch != '0' && ch != '1') throw std::invalid_argument("matrix entries must be 0 or 1");
      if (ch == '1') cols[j] |= Point{1} << (r - 1 - i);
    }
  }
  return CoverCode(r, cols);
}

}  // namespace pgsat
