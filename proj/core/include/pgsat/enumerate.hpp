#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "pgsat/geometry.hpp"
#include "pgsat/saturation.hpp"

namespace pgsat {

// One equivalence class of minimal 1-saturating sets, keyed by its canonical
// representative.
struct ClassRecord {
  int v = 0;
  int k = 0;
  SetType type = SetType::NC;
  std::vector<Point> representative;     // sorted members of the canonical form
  std::uint64_t stab_order = 0;
  std::string construction;              // optional label, filled by annotation
};

// Sort order used everywhere classes are listed: size, then type
// (CA < CC < NA < NC), then representative lexicographically.
bool class_record_less(const ClassRecord& a, const ClassRecord& b);

struct EnumerateOptions {
  int k_max = 0;               // 0 means the ceiling 2^v
  int threads = 0;             // 0 means hardware concurrency
  int split_depth = 4;         // set size at which the search tree is split into tasks
  std::string checkpoint_path; // empty disables checkpointing
  double time_budget_seconds = 0.0;  // 0 means unlimited
};

// Raised when the time budget runs out; enumeration state has been saved to
// the checkpoint (when one is configured) and can be fed to resume_enumeration.
class PartialResultError : public std::runtime_error {
 public:
  PartialResultError(std::string msg, std::string checkpoint)
      : std::runtime_error(std::move(msg)), checkpoint_path(std::move(checkpoint)) {}
  std::string checkpoint_path;
};

// Classify all minimal 1-saturating sets of size <= k_max in PG(v,2) up to
// collineations.  Output is complete, duplicate-free and sorted; it does not
// depend on thread count or split depth.
std::vector<ClassRecord> enumerate_classes(Dimension dim, const EnumerateOptions& opts = {});

// Continue from a checkpoint written by an interrupted run.
std::vector<ClassRecord> resume_enumeration(const std::string& checkpoint_path,
                                            const EnumerateOptions& opts = {});

// Headline facts of a checkpoint file (without running anything).
struct CheckpointInfo {
  int v = 0;
  int k_max = 0;
  int open_subtrees = 0;
};
CheckpointInfo checkpoint_info(const std::string& checkpoint_path);

// Independent oracle: test every subset of the point set directly.  Only
// feasible for v <= 3.
std::vector<ClassRecord> brute_force_classes(Dimension dim);

// Aggregated view of a classification: per-(size,type) class counts with the
// stabilizer orders, and the extremal sizes, mirroring the reference tables.
struct SummaryRow {
  int k;
  SetType type;
  int count;
  std::vector<std::uint64_t> stab_orders;  // sorted ascending
};

struct ClassificationSummary {
  int v = 0;
  int k_max = 0;      // ceiling the records are complete up to
  bool complete = false;  // k_max reaches the theoretical ceiling 2^v
  std::vector<SummaryRow> rows;

  std::optional<int> smallest_size;         // least k with any class
  std::optional<int> smallest_cap_size;     // least k with a cap class
  std::optional<int> largest_size;          // greatest k; requires completeness
  std::optional<int> second_largest_size;   // next distinct k below largest
  std::optional<int> third_largest_size;    // next distinct k below that
};

// Requires records to be the complete classification of (v, k_max_covered).
// The three largest sizes repeat cofinal values when fewer than three
// distinct sizes exist, and are left unset when k_max_covered < 2^v.
ClassificationSummary summarize(const std::vector<ClassRecord>& records, int k_max_covered);

// Text table of a summary in the layout of the reference tables.
std::string summary_table(const ClassificationSummary& summary);

// JSON array serialization of class records (the enumerate output format).
std::string class_records_json(const std::vector<ClassRecord>& records);
std::vector<ClassRecord> parse_class_records_json(const std::string& text);

}  // namespace pgsat
