#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "pgsat/enumerate.hpp"
#include "pgsat/geometry.hpp"
#include "pgsat/saturation.hpp"

namespace pgsat {

// Reference classification data: published representatives with their
// stabilizer group names and construction labels, plus per-dimension summary
// tables.  Shipped as a versioned JSON asset and embedded into the library;
// an external file can be substituted for testing.

struct ReferenceRepresentative {
  int v;
  int k;
  SetType type;
  std::vector<Point> points;
  std::string group_name;                 // structure of the stabilizer
  std::vector<std::string> constructions; // labels of constructions reaching it
};

struct ReferenceSummaryRow {
  int k;
  SetType type;
  int count;
  std::optional<std::uint64_t> stab_min;  // unset when the source leaves it open
  std::optional<std::uint64_t> stab_max;
};

struct ReferenceSummary {
  int v;
  int k_max;          // range the table covers
  bool complete;      // table reaches the ceiling 2^v
  std::vector<ReferenceSummaryRow> rows;
  std::optional<int> smallest_size;
  std::optional<int> smallest_cap_size;
  std::optional<int> largest_size;
  std::optional<int> second_largest_size;
  std::optional<int> third_largest_size;
};

struct ReferenceData {
  int format_version = 0;
  std::map<std::string, std::uint64_t> group_orders;
  std::vector<ReferenceRepresentative> representatives;
  std::vector<ReferenceSummary> summaries;

  static ReferenceData embedded();
  static ReferenceData from_file(const std::string& path);
  static ReferenceData from_json_text(const std::string& text);

  const ReferenceSummary* summary_for(int v) const;
};

// One checked fact: an expected-vs-actual pair with a verdict.
struct FieldCheck {
  std::string name;
  std::string expected;
  std::string actual;
  bool ok;
};

struct CheckGroup {
  std::string label;
  bool pass;
  std::vector<FieldCheck> checks;
};

struct VerificationReport {
  bool pass = true;
  std::vector<CheckGroup> groups;

  void add(CheckGroup g);
  std::string text() const;        // one line per check group, details on failures
  std::string json_text() const;
};

// Recompute every property the reference tables assert about the listed
// representatives: saturation, minimality, type, stabilizer order (against
// the named group's order), covering radius 2, local optimality, and
// invariance of it all under `random_maps` random collineations drawn from
// the seeded generator.
VerificationReport verify_tables(const ReferenceData& data, std::uint64_t seed,
                                 int random_maps = 3);

// Compare an enumerated classification of PG(v,2), complete up to
// k_max_covered, against the reference summary for v: class counts per
// (size, type), stabilizer order ranges, and whichever extremal sizes the
// covered range determines.
VerificationReport verify_summary(const ReferenceData& data, int v,
                                  const std::vector<ClassRecord>& records,
                                  int k_max_covered);

// Attach construction labels from the reference tables to enumerated records
// (matching classes by canonical form).
void annotate_constructions(std::vector<ClassRecord>& records, const ReferenceData& data);

}  // namespace pgsat
