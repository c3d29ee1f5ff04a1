#include "pgsat/enumerate.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <map>
#include <mutex>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "pgsat/group.hpp"
#include "pgsat/set_io.hpp"

namespace pgsat {

using json = nlohmann::json;

bool class_record_less(const ClassRecord& a, const ClassRecord& b) {
  if (a.k != b.k) return a.k < b.k;
  if (a.type != b.type) return int(a.type) < int(b.type);
  return a.representative < b.representative;
}

namespace {

json record_to_json(const ClassRecord& r) {
  json j{{"v", r.v},
         {"k", r.k},
         {"type", to_string(r.type)},
         {"representative", r.representative},
         {"stab_order", r.stab_order}};
  if (!r.construction.empty()) j["construction"] = r.construction;
  return j;
}

ClassRecord record_from_json(const json& j) {
  ClassRecord r;
  r.v = j.at("v").get<int>();
  r.k = j.at("k").get<int>();
  r.type = set_type_from_string(j.at("type").get<std::string>());
  r.representative = j.at("representative").get<std::vector<Point>>();
  r.stab_order = j.at("stab_order").get<std::uint64_t>();
  if (j.contains("construction")) r.construction = j.at("construction").get<std::string>();
  return r;
}

struct Budget {
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
  double seconds = 0.0;

  bool exceeded() const {
    if (seconds <= 0.0) return false;
    const auto now = std::chrono::steady_clock::now();
    return std::chrono::duration<double>(now - start).count() > seconds;
  }
};

struct SubtreeAborted {};  // unwinds one task when the budget lapses

// Depth-first orderly extension.  A node is a canonical set P that is not
// yet 1-saturating; its children add one point x with max(P) < x <= 2^rank(P)
// (a canonical set's sorted prefixes span standard subspaces, so larger
// values cannot occur in a canonical child).  Saturating children are leaves:
// any proper superset of a saturating set has a saturating proper subset and
// is never minimal.  Keeping only canonical children visits every canonical
// set exactly once, because deleting the largest element of a canonical set
// leaves a canonical set.
class Searcher {
 public:
  Searcher(Dimension dim, int kmax, const Budget* budget)
      : dim_(dim), n_(dim.ncoords()), npoints_(dim.max_point()), kmax_(kmax), budget_(budget) {
    all_ = Bits128::low_mask(npoints_ + 1);
    all_.reset(0);
  }

  // Expand the subtree rooted at `root` to completion, appending class
  // records for every minimal 1-saturating canonical set found.
  void run(const std::vector<Point>& root, std::vector<ClassRecord>* records) {
    records_ = records;
    frontier_ = nullptr;
    descend_from(root);
  }

  // Expand only to sets of size `depth`, collecting those interior nodes
  // into `frontier` instead of recursing; leaves above the cut are still
  // recorded.
  void run_to_depth(const std::vector<Point>& root, int depth,
                    std::vector<std::vector<Point>>* frontier,
                    std::vector<ClassRecord>* records) {
    records_ = records;
    frontier_ = frontier;
    frontier_depth_ = depth;
    descend_from(root);
  }

 private:
  void descend_from(const std::vector<Point>& root) {
    members_.clear();
    Bits128 sbits{};
    Bits128 covered{};
    int rank = 0;
    for (Point p : root) {
      covered = covered | sbits.xor_translate(p);
      sbits.set(p);
      covered.set(p);
      if (p >= (Point{1} << rank)) ++rank;  // roots are canonical: new rank exactly at 2^r
      members_.push_back(p);
    }
    covered.reset(0);
    extend(sbits, covered, rank);
  }

  void extend(Bits128 sbits, Bits128 covered, int rank) {
    if (budget_ && (++nodes_ & 1023) == 0 && budget_->exceeded()) throw SubtreeAborted{};
    const Point maxv = members_.empty() ? 0 : members_.back();
    const Point hi = rank >= n_ ? npoints_ : std::min<Point>(npoints_, Point{1} << rank);
    for (Point x = maxv + 1; x <= hi; ++x) {
      Bits128 child_bits = sbits;
      child_bits.set(x);
      Bits128 child_cov = covered | sbits.xor_translate(x);
      child_cov.set(x);
      const int child_rank = rank + (x == (Point{1} << rank) ? 1 : 0);
      members_.push_back(x);
      if (all_.subset_of(child_cov)) {
        const PointSet set = PointSet::from_bits(dim_, child_bits);
        if (drop_one_never_saturates(set) && is_canonical(set)) record(set);
      } else if (int(members_.size()) < kmax_) {
        const PointSet set = PointSet::from_bits(dim_, child_bits);
        if (is_canonical(set)) {
          if (frontier_ && int(members_.size()) == frontier_depth_)
            frontier_->push_back(members_);
          else
            extend(child_bits, child_cov, child_rank);
        }
      }
      members_.pop_back();
    }
  }

  bool drop_one_never_saturates(const PointSet& set) const {
    for (Point p = set.first(); p; p = set.next(p))
      if (is_one_saturating(set.without(p))) return false;
    return true;
  }

  void record(const PointSet& set) {
    ClassRecord r;
    r.v = dim_.v();
    r.k = set.size();
    const bool cap = is_cap(set);
    r.type = dim_.v() == 2 ? (cap ? SetType::CA : SetType::NA) : (cap ? SetType::CC : SetType::NC);
    r.representative = set.members();
    r.stab_order = stabilizer_order(set);
    records_->push_back(std::move(r));
  }

  Dimension dim_;
  int n_;
  Point npoints_;
  int kmax_;
  const Budget* budget_;
  Bits128 all_;
  std::vector<Point> members_;
  std::vector<ClassRecord>* records_ = nullptr;
  std::vector<std::vector<Point>>* frontier_ = nullptr;
  int frontier_depth_ = 0;
  long nodes_ = 0;
};

void sort_and_check(std::vector<ClassRecord>& records) {
  std::sort(records.begin(), records.end(), class_record_less);
  for (size_t i = 1; i < records.size(); ++i)
    if (!class_record_less(records[i - 1], records[i]))
      throw std::logic_error("duplicate class record produced");
}

// ---------------------------------------------------------------------------
// Checkpointing: the frontier still to process goes into the checkpoint file
// in the set text format (with the search parameters as comments), and each
// finished subtree appends its records to a JSONL sidecar keyed by task id.

std::string sidecar_path(const std::string& checkpoint) { return checkpoint + ".records.jsonl"; }

struct CheckpointMeta {
  int v = 0;
  int k_max = 0;
  std::vector<std::vector<Point>> tasks;
};

void write_checkpoint_file(const std::string& path, Dimension dim, int kmax,
                           const std::vector<std::vector<Point>>& tasks) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write checkpoint: " + path);
  out << "v=" << dim.v() << "\n";
  out << "# k_max=" << kmax << "\n";
  for (const auto& t : tasks) {
    std::string line;
    for (Point p : t) {
      if (!line.empty()) line += ' ';
      line += std::to_string(p);
    }
    out << line << "\n";
  }
  if (!out.flush()) throw std::runtime_error("failed writing checkpoint: " + path);
}

CheckpointMeta read_checkpoint_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open checkpoint: " + path);
  CheckpointMeta meta;
  bool have_v = false, have_k = false;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (line.rfind("v=", 0) == 0) {
      meta.v = std::stoi(line.substr(2));
      have_v = true;
      continue;
    }
    if (line.rfind("# k_max=", 0) == 0) {
      meta.k_max = std::stoi(line.substr(8));
      have_k = true;
      continue;
    }
    if (line[0] == '#') continue;
    std::istringstream iss(line);
    std::vector<Point> t;
    Point p;
    while (iss >> p) t.push_back(p);
    if (t.empty() || !iss.eof())
      throw std::invalid_argument("malformed checkpoint line: " + line);
    meta.tasks.push_back(std::move(t));
  }
  if (!have_v || !have_k) throw std::invalid_argument("checkpoint lacks v=/k_max headers: " + path);
  return meta;
}

void append_sidecar(const std::string& checkpoint, int task,
                    const std::vector<ClassRecord>& records) {
  std::ofstream out(sidecar_path(checkpoint), std::ios::app);
  if (!out) throw std::runtime_error("cannot write checkpoint sidecar");
  json j{{"task", task}, {"records", json::array()}};
  for (const ClassRecord& r : records) j["records"].push_back(record_to_json(r));
  out << j.dump() << "\n" << std::flush;
}

std::map<int, std::vector<ClassRecord>> read_sidecar(const std::string& checkpoint) {
  std::map<int, std::vector<ClassRecord>> done;
  std::ifstream in(sidecar_path(checkpoint));
  if (!in) return done;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const json j = json::parse(line);
    const int task = j.at("task").get<int>();
    if (done.count(task)) continue;  // an interrupted resume may repeat a task
    std::vector<ClassRecord> recs;
    for (const json& rj : j.at("records")) recs.push_back(record_from_json(rj));
    done.emplace(task, std::move(recs));
  }
  return done;
}

// ---------------------------------------------------------------------------

struct TaskPlan {
  Dimension dim;
  int kmax;
  std::vector<std::vector<Point>> tasks;       // open subtree roots, by task id
  std::vector<int> task_ids;                   // ids matching `tasks`
  std::map<int, std::vector<ClassRecord>> finished;  // previously completed work
};

std::vector<ClassRecord> run_tasks(const TaskPlan& plan, const EnumerateOptions& opts,
                                   const Budget& budget) {
  const size_t ntasks = plan.tasks.size();
  std::vector<std::vector<ClassRecord>> results(ntasks);
  std::vector<char> completed(ntasks, 0);
  std::atomic<size_t> next{0};
  std::atomic<bool> out_of_time{false};
  std::mutex io_mutex;

  unsigned nthreads = opts.threads > 0 ? unsigned(opts.threads)
                                       : std::max(1u, std::thread::hardware_concurrency());
  nthreads = std::min<unsigned>(nthreads, std::max<size_t>(ntasks, 1));

  auto worker = [&]() {
    Searcher searcher(plan.dim, plan.kmax, &budget);
    for (;;) {
      if (budget.exceeded()) {
        out_of_time.store(true);
        return;
      }
      const size_t i = next.fetch_add(1);
      if (i >= ntasks) return;
      std::vector<ClassRecord> local;
      try {
        searcher.run(plan.tasks[i], &local);
      } catch (const SubtreeAborted&) {
        out_of_time.store(true);
        return;
      }
      completed[i] = 1;
      if (!opts.checkpoint_path.empty()) {
        std::lock_guard<std::mutex> lock(io_mutex);
        append_sidecar(opts.checkpoint_path, plan.task_ids[i], local);
      }
      results[i] = std::move(local);
    }
  };

  if (nthreads <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < nthreads; ++t) pool.emplace_back(worker);
    for (std::thread& t : pool) t.join();
  }

  if (out_of_time.load()) {
    std::string where = opts.checkpoint_path;
    if (!where.empty()) {
      // Rewrite the checkpoint with only the still-open subtrees.
      std::vector<std::vector<Point>> open;
      for (size_t i = 0; i < ntasks; ++i)
        if (!completed[i]) open.push_back(plan.tasks[i]);
      write_checkpoint_file(where, plan.dim, plan.kmax, open);
      throw PartialResultError("time budget exhausted; progress saved, resume from " + where,
                               where);
    }
    throw PartialResultError("time budget exhausted and no checkpoint configured", "");
  }

  // Success: empty the task list so that resuming this checkpoint is a no-op
  // returning the same records instead of re-running finished subtrees.
  if (!opts.checkpoint_path.empty())
    write_checkpoint_file(opts.checkpoint_path, plan.dim, plan.kmax, {});

  std::vector<ClassRecord> merged;
  for (const auto& [task, recs] : plan.finished)
    merged.insert(merged.end(), recs.begin(), recs.end());
  for (auto& recs : results) merged.insert(merged.end(), recs.begin(), recs.end());
  sort_and_check(merged);
  return merged;
}

}  // namespace

std::vector<ClassRecord> enumerate_classes(Dimension dim, const EnumerateOptions& opts) {
  const int ceiling = 1 << dim.v();
  int kmax = opts.k_max > 0 ? opts.k_max : ceiling;
  if (opts.k_max > ceiling)
    std::cerr << "note: k_max " << opts.k_max << " exceeds the size ceiling " << ceiling
              << " for minimal 1-saturating sets in PG(" << dim.v() << ",2)\n";

  Budget budget;
  budget.seconds = opts.time_budget_seconds;

  // Phase 1: walk the top of the tree single-threaded, cutting it into
  // subtree tasks.  Deepen the cut while it yields too few tasks to spread
  // across the workers.
  const unsigned nthreads = opts.threads > 0 ? unsigned(opts.threads)
                                             : std::max(1u, std::thread::hardware_concurrency());
  const size_t want_tasks = std::max<size_t>(16, 4 * nthreads);
  std::vector<ClassRecord> top_records;
  std::vector<std::vector<Point>> frontier;
  int depth = std::min(opts.split_depth > 0 ? opts.split_depth : 4, kmax - 1);
  {
    Searcher searcher(dim, kmax, nullptr);
    if (depth < 1) {
      searcher.run({}, &top_records);  // k_max of 1: no interior nodes at all
    } else {
      searcher.run_to_depth({}, depth, &frontier, &top_records);
      while (!frontier.empty() && frontier.size() < want_tasks && depth + 1 < kmax) {
        ++depth;
        std::vector<std::vector<Point>> deeper;
        for (const auto& root : frontier)
          searcher.run_to_depth(root, depth, &deeper, &top_records);
        frontier = std::move(deeper);
      }
    }
  }

  TaskPlan plan{dim, kmax, {}, {}, {}};
  plan.tasks = std::move(frontier);
  plan.task_ids.resize(plan.tasks.size());
  for (size_t i = 0; i < plan.tasks.size(); ++i) plan.task_ids[i] = int(i);
  plan.finished.emplace(-1, std::move(top_records));

  if (!opts.checkpoint_path.empty()) {
    write_checkpoint_file(opts.checkpoint_path, dim, kmax, plan.tasks);
    std::ofstream(sidecar_path(opts.checkpoint_path), std::ios::trunc);
    append_sidecar(opts.checkpoint_path, -1, plan.finished.at(-1));
  }

  return run_tasks(plan, opts, budget);
}

CheckpointInfo checkpoint_info(const std::string& checkpoint_path) {
  const CheckpointMeta meta = read_checkpoint_file(checkpoint_path);
  return {meta.v, meta.k_max, int(meta.tasks.size())};
}

std::vector<ClassRecord> resume_enumeration(const std::string& checkpoint_path,
                                            const EnumerateOptions& opts) {
  const CheckpointMeta meta = read_checkpoint_file(checkpoint_path);
  const Dimension dim(meta.v);

  TaskPlan plan{dim, meta.k_max, {}, {}, read_sidecar(checkpoint_path)};
  // Task ids were rewritten along with the checkpoint; only the sidecar's
  // task -1 entry (and completed ids from this file's numbering) apply.  The
  // file holds exactly the still-open subtrees, so run them all afresh under
  // new ids that cannot collide with finished ones.
  int next_id = plan.finished.empty() ? 0 : plan.finished.rbegin()->first + 1;
  for (const auto& t : meta.tasks) {
    plan.tasks.push_back(t);
    plan.task_ids.push_back(next_id++);
  }

  EnumerateOptions run_opts = opts;
  run_opts.checkpoint_path = checkpoint_path;
  Budget budget;
  budget.seconds = opts.time_budget_seconds;
  return run_tasks(plan, run_opts, budget);
}

ClassificationSummary summarize(const std::vector<ClassRecord>& records, int k_max_covered) {
  if (records.empty())
    throw std::invalid_argument("cannot summarize an empty classification");
  const int v = records[0].v;
  const int ceiling = 1 << v;
  ClassificationSummary s;
  s.v = v;
  s.k_max = k_max_covered > 0 ? k_max_covered : ceiling;
  s.complete = s.k_max >= ceiling;

  std::map<std::pair<int, int>, SummaryRow> rows;
  for (const ClassRecord& r : records) {
    if (r.v != v) throw std::invalid_argument("summarize: records mix dimensions");
    if (r.k > s.k_max) throw std::invalid_argument("summarize: record beyond claimed k_max");
    auto key = std::make_pair(r.k, int(r.type));
    auto it = rows.find(key);
    if (it == rows.end())
      it = rows.emplace(key, SummaryRow{r.k, r.type, 0, {}}).first;
    it->second.count += 1;
    it->second.stab_orders.push_back(r.stab_order);
  }
  for (auto& [key, row] : rows) {
    std::sort(row.stab_orders.begin(), row.stab_orders.end());
    s.rows.push_back(std::move(row));
  }

  std::vector<int> sizes;
  for (const SummaryRow& row : s.rows)
    if (sizes.empty() || sizes.back() != row.k) sizes.push_back(row.k);
  if (!sizes.empty()) {
    s.smallest_size = sizes.front();
    for (const SummaryRow& row : s.rows)
      if (row.type == SetType::CA || row.type == SetType::CC) {
        if (!s.smallest_cap_size || row.k < *s.smallest_cap_size) s.smallest_cap_size = row.k;
      }
    if (s.complete) {
      // The three largest sizes, repeating the last one when fewer than
      // three distinct sizes exist.
      const auto from_top = [&](size_t back) {
        return sizes[sizes.size() - 1 - std::min(back, sizes.size() - 1)];
      };
      s.largest_size = from_top(0);
      s.second_largest_size = from_top(1);
      s.third_largest_size = from_top(2);
    }
  }
  return s;
}

std::string summary_table(const ClassificationSummary& s) {
  std::ostringstream out;
  out << "PG(" << s.v << ",2), minimal 1-saturating sets with k <= " << s.k_max
      << (s.complete ? " (complete classification)" : " (partial: larger k not searched)")
      << "\n";
  out << "   k  type  classes  stabilizer orders\n";
  for (const SummaryRow& row : s.rows) {
    out << "  " << std::setw(2) << row.k << "  " << to_string(row.type) << "    " << std::setw(7)
        << row.count << "  ";
    if (row.stab_orders.empty()) {
      out << "-";
    } else if (row.stab_orders.front() == row.stab_orders.back()) {
      out << row.stab_orders.front();
    } else {
      out << row.stab_orders.front() << ".." << row.stab_orders.back();
    }
    out << "\n";
  }
  auto opt = [](const std::optional<int>& o) { return o ? std::to_string(*o) : std::string("-"); };
  out << "  smallest " << opt(s.smallest_size) << ", smallest cap " << opt(s.smallest_cap_size)
      << ", largest " << opt(s.largest_size) << ", second largest "
      << opt(s.second_largest_size) << ", third largest " << opt(s.third_largest_size) << "\n";
  return out.str();
}

std::vector<ClassRecord> brute_force_classes(Dimension dim) {
  if (dim.v() > 3)
    throw std::invalid_argument("brute force classification is only feasible for v <= 3");
  const Point npoints = dim.max_point();
  const std::uint64_t nmasks = std::uint64_t(1) << npoints;

  std::map<std::vector<Point>, ClassRecord> classes;
  for (std::uint64_t mask = 1; mask < nmasks; ++mask) {
    Bits128 bits{mask << 1, 0};  // subset bit i is point value i+1
    const PointSet set = PointSet::from_bits(dim, bits);
    if (!is_minimal_one_saturating(set)) continue;
    const std::vector<Point> canon = canonical_form(set).members.members();
    auto it = classes.find(canon);
    if (it != classes.end()) continue;
    ClassRecord r;
    r.v = dim.v();
    r.k = set.size();
    const bool cap = is_cap(set);
    r.type = dim.v() == 2 ? (cap ? SetType::CA : SetType::NA) : (cap ? SetType::CC : SetType::NC);
    r.representative = canon;
    r.stab_order = stabilizer_order(set);
    classes.emplace(canon, std::move(r));
  }

  std::vector<ClassRecord> out;
  out.reserve(classes.size());
  for (auto& [canon, rec] : classes) out.push_back(std::move(rec));
  sort_and_check(out);
  return out;
}

std::string class_records_json(const std::vector<ClassRecord>& records) {
  json arr = json::array();
  for (const ClassRecord& r : records) arr.push_back(record_to_json(r));
  return arr.dump(2) + "\n";
}

std::vector<ClassRecord> parse_class_records_json(const std::string& text) {
  const json arr = json::parse(text);
  if (!arr.is_array()) throw std::invalid_argument("expected a JSON array of class records");
  std::vector<ClassRecord> out;
  for (const json& j : arr) out.push_back(record_from_json(j));
  return out;
}

}  // namespace pgsat
