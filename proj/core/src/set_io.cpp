#include "pgsat/set_io.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace pgsat {

namespace {

std::string strip(const std::string& s) {
  size_t b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  size_t e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

}  // namespace

PointSet parse_set_line(Dimension dim, const std::string& line) {
  PointSet s(dim);
  std::istringstream iss(line);
  long value;
  while (iss >> value) {
    if (value <= 0 || value > long(dim.max_point()))
      throw std::invalid_argument("point value " + std::to_string(value) +
                                  " out of range for PG(" + std::to_string(dim.v()) + ",2)");
    if (s.contains(Point(value)))
      throw std::invalid_argument("duplicate point value " + std::to_string(value));
    s.add(Point(value));
  }
  if (!iss.eof()) throw std::invalid_argument("malformed set line: " + line);
  return s;
}

SetFile read_sets(std::istream& in, std::optional<int> dim_hint) {
  std::optional<int> v = dim_hint;
  bool saw_header = false;
  std::vector<std::string> set_lines;
  std::string line;
  while (std::getline(in, line)) {
    line = strip(line);
    if (line.empty() || line[0] == '#') continue;
    if (line.rfind("v=", 0) == 0) {
      if (saw_header) throw std::invalid_argument("duplicate v= header");
      if (!set_lines.empty()) throw std::invalid_argument("v= header must precede the sets");
      int hv;
      try {
        hv = std::stoi(line.substr(2));
      } catch (const std::exception&) {
        throw std::invalid_argument("malformed header line: " + line);
      }
      if (dim_hint && *dim_hint != hv)
        throw std::invalid_argument("file header v=" + std::to_string(hv) +
                                    " conflicts with requested v=" + std::to_string(*dim_hint));
      v = hv;
      saw_header = true;
      continue;
    }
    set_lines.push_back(line);
  }
  if (!v)
    throw std::invalid_argument(
        "dimension not specified: add a v=<n> header line or pass it explicitly");
  SetFile out{Dimension(*v), {}};
  out.sets.reserve(set_lines.size());
  for (const std::string& l : set_lines) out.sets.push_back(parse_set_line(out.dim, l));
  return out;
}

SetFile read_sets_file(const std::string& path, std::optional<int> dim_hint) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open set file: " + path);
  return read_sets(in, dim_hint);
}

std::string set_line(const PointSet& s) {
  std::string out;
  for (Point p = s.first(); p; p = s.next(p)) {
    if (!out.empty()) out += ' ';
    out += std::to_string(p);
  }
  return out;
}

void write_sets(std::ostream& out, Dimension dim, const std::vector<PointSet>& sets) {
  out << "v=" << dim.v() << '\n';
  for (const PointSet& s : sets) {
    if (s.dim() != dim) throw std::invalid_argument("set dimension differs from file header");
    out << set_line(s) << '\n';
  }
}

void write_sets_file(const std::string& path, Dimension dim, const std::vector<PointSet>& sets) {
  std::ofstream out(path);
  if (!out) throw std::invalid_argument("cannot open set file for writing: " + path);
  write_sets(out, dim, sets);
  if (!out) throw std::runtime_error("failed writing set file: " + path);
}

}  // namespace pgsat
