#include "pgsat/verify.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "pgsat/covering_code.hpp"
#include "pgsat/group.hpp"
#include "pgsat/set_io.hpp"

namespace pgsat::detail {
const char* embedded_reference_tables_json();
}

namespace pgsat {

using json = nlohmann::json;

namespace {

std::optional<std::uint64_t> opt_u64(const json& j, const char* key) {
  if (!j.contains(key) || j.at(key).is_null()) return std::nullopt;
  return j.at(key).get<std::uint64_t>();
}

std::optional<int> opt_int(const json& j, const char* key) {
  if (!j.contains(key) || j.at(key).is_null()) return std::nullopt;
  return j.at(key).get<int>();
}

}  // namespace

ReferenceData ReferenceData::from_json_text(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw std::runtime_error(std::string("reference data is not valid JSON: ") + e.what());
  }
  try {
    ReferenceData data;
    data.format_version = j.at("format_version").get<int>();
    if (data.format_version != 1)
      throw std::runtime_error("unsupported reference data format version " +
                               std::to_string(data.format_version));
    for (const auto& [name, order] : j.at("group_orders").items())
      data.group_orders[name] = order.get<std::uint64_t>();
    for (const json& r : j.at("representatives")) {
      ReferenceRepresentative rep;
      rep.v = r.at("v").get<int>();
      rep.k = r.at("k").get<int>();
      rep.type = set_type_from_string(r.at("type").get<std::string>());
      rep.points = r.at("points").get<std::vector<Point>>();
      rep.group_name = r.at("group").get<std::string>();
      if (r.contains("constructions"))
        rep.constructions = r.at("constructions").get<std::vector<std::string>>();
      if (int(rep.points.size()) != rep.k)
        throw std::runtime_error("representative point list does not match its size field");
      data.representatives.push_back(std::move(rep));
    }
    for (const json& s : j.at("summaries")) {
      ReferenceSummary sum;
      sum.v = s.at("v").get<int>();
      sum.k_max = s.at("k_max").get<int>();
      sum.complete = s.at("complete").get<bool>();
      for (const json& r : s.at("rows")) {
        ReferenceSummaryRow row;
        row.k = r.at("k").get<int>();
        row.type = set_type_from_string(r.at("type").get<std::string>());
        row.count = r.at("count").get<int>();
        row.stab_min = opt_u64(r, "stab_min");
        row.stab_max = opt_u64(r, "stab_max");
        sum.rows.push_back(row);
      }
      sum.smallest_size = opt_int(s, "smallest_size");
      sum.smallest_cap_size = opt_int(s, "smallest_cap_size");
      sum.largest_size = opt_int(s, "largest_size");
      sum.second_largest_size = opt_int(s, "second_largest_size");
      sum.third_largest_size = opt_int(s, "third_largest_size");
      data.summaries.push_back(std::move(sum));
    }
    return data;
  } catch (const json::exception& e) {
    throw std::runtime_error(std::string("malformed reference data: ") + e.what());
  }
}

ReferenceData ReferenceData::embedded() {
  return from_json_text(detail::embedded_reference_tables_json());
}

ReferenceData ReferenceData::from_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open reference data file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return from_json_text(buf.str());
}

const ReferenceSummary* ReferenceData::summary_for(int v) const {
  for (const ReferenceSummary& s : summaries)
    if (s.v == v) return &s;
  return nullptr;
}

// ---------------------------------------------------------------------------

void VerificationReport::add(CheckGroup g) {
  pass = pass && g.pass;
  groups.push_back(std::move(g));
}

std::string VerificationReport::text() const {
  std::ostringstream out;
  for (const CheckGroup& g : groups) {
    out << (g.pass ? "PASS" : "FAIL") << "  " << g.label << "\n";
    if (!g.pass)
      for (const FieldCheck& c : g.checks)
        if (!c.ok)
          out << "      " << c.name << ": expected " << c.expected << ", got " << c.actual
              << "\n";
  }
  out << (pass ? "all checks passed" : "some checks FAILED") << "\n";
  return out.str();
}

std::string VerificationReport::json_text() const {
  json out{{"pass", pass}, {"groups", json::array()}};
  for (const CheckGroup& g : groups) {
    json gj{{"label", g.label}, {"pass", g.pass}, {"checks", json::array()}};
    for (const FieldCheck& c : g.checks)
      gj["checks"].push_back(
          {{"name", c.name}, {"expected", c.expected}, {"actual", c.actual}, {"ok", c.ok}});
    out["groups"].push_back(std::move(gj));
  }
  return out.dump(2) + "\n";
}

namespace {

void check(CheckGroup& g, const std::string& name, const std::string& expected,
           const std::string& actual) {
  const bool ok = expected == actual;
  g.pass = g.pass && ok;
  g.checks.push_back({name, expected, actual, ok});
}

void check_bool(CheckGroup& g, const std::string& name, bool expected, bool actual) {
  check(g, name, expected ? "true" : "false", actual ? "true" : "false");
}

void check_u64(CheckGroup& g, const std::string& name, std::uint64_t expected,
               std::uint64_t actual) {
  check(g, name, std::to_string(expected), std::to_string(actual));
}

std::string opt_str(const std::optional<int>& o) { return o ? std::to_string(*o) : "unset"; }

}  // namespace

VerificationReport verify_tables(const ReferenceData& data, std::uint64_t seed, int random_maps) {
  VerificationReport report;
  std::mt19937_64 rng(seed);

  {
    CheckGroup g{"reference data sanity (seed " + std::to_string(seed) + ")", true, {}};
    check_u64(g, "representative rows", 18, data.representatives.size());
    check_bool(g, "summaries for v=2..6 present", true,
               data.summary_for(2) && data.summary_for(3) && data.summary_for(4) &&
                   data.summary_for(5) && data.summary_for(6));
    report.add(std::move(g));
  }

  for (const ReferenceRepresentative& rep : data.representatives) {
    const Dimension dim(rep.v);
    const PointSet set(dim, rep.points);
    CheckGroup g{"PG(" + std::to_string(rep.v) + ",2) k=" + std::to_string(rep.k) + " " +
                     to_string(rep.type) + " {" + set_line(set) + "}",
                 true,
                 {}};

    check_bool(g, "1-saturating", true, is_one_saturating(set));
    const bool minimal = is_minimal_one_saturating(set);
    check_bool(g, "minimal", true, minimal);
    if (minimal) check(g, "type", to_string(rep.type), to_string(classify_type(set)));

    const auto named = data.group_orders.find(rep.group_name);
    if (named == data.group_orders.end()) {
      check(g, "stabilizer group", rep.group_name, "order of '" + rep.group_name + "' unknown");
    } else {
      check_u64(g, "stabilizer order (" + rep.group_name + ")", named->second,
                stabilizer_order(set));
    }

    const CoverCode code = CoverCode::from_set(set);
    const std::optional<int> radius = code.covering_radius();
    check(g, "covering radius", "2", radius ? std::to_string(*radius) : "infinite");
    check_bool(g, "locally optimal code", true, code.is_locally_optimal());

    bool invariant = true;
    for (int i = 0; i < random_maps; ++i) {
      const PointSet image = ProjMap::random_invertible(dim, rng).apply(set);
      if (!is_minimal_one_saturating(image) || is_cap(image) != is_cap(set)) invariant = false;
    }
    check_bool(g,
               "minimality and shape preserved by " + std::to_string(random_maps) +
                   " random collineations",
               true, invariant);

    report.add(std::move(g));
  }

  // Cross-check the listed representatives against the summary tables where
  // the classification is fully listed (v <= 4): counts per (k, type) and the
  // stabilizer multiset endpoints must agree.
  for (int v = 2; v <= 4; ++v) {
    const ReferenceSummary* sum = data.summary_for(v);
    if (!sum) continue;
    CheckGroup g{"PG(" + std::to_string(v) + ",2) representative lists match the summary", true, {}};
    for (const ReferenceSummaryRow& row : sum->rows) {
      std::vector<std::uint64_t> orders;
      for (const ReferenceRepresentative& rep : data.representatives)
        if (rep.v == v && rep.k == row.k && rep.type == row.type) {
          const auto it = data.group_orders.find(rep.group_name);
          orders.push_back(it == data.group_orders.end() ? 0 : it->second);
        }
      const std::string label = "k=" + std::to_string(row.k) + " " + to_string(row.type);
      check_u64(g, label + " classes", std::uint64_t(row.count), orders.size());
      if (!orders.empty() && row.stab_min && row.stab_max) {
        std::sort(orders.begin(), orders.end());
        check_u64(g, label + " least stabilizer", *row.stab_min, orders.front());
        check_u64(g, label + " greatest stabilizer", *row.stab_max, orders.back());
      }
    }
    report.add(std::move(g));
  }

  return report;
}

VerificationReport verify_summary(const ReferenceData& data, int v,
                                  const std::vector<ClassRecord>& records, int k_max_covered) {
  VerificationReport report;
  const ReferenceSummary* expected = data.summary_for(v);
  if (!expected) {
    report.add({"no reference summary for v=" + std::to_string(v),
                false,
                {{"summary", "present", "missing", false}}});
    return report;
  }
  const int covered = std::min(k_max_covered, expected->k_max);

  ClassificationSummary got;
  if (records.empty()) {
    got.v = v;
    got.k_max = k_max_covered;
  } else {
    got = summarize(records, k_max_covered);
  }

  for (const ReferenceSummaryRow& row : expected->rows) {
    if (row.k > covered) continue;
    CheckGroup g{"PG(" + std::to_string(v) + ",2) k=" + std::to_string(row.k) + " " +
                     to_string(row.type),
                 true,
                 {}};
    const SummaryRow* match = nullptr;
    for (const SummaryRow& r : got.rows)
      if (r.k == row.k && r.type == row.type) match = &r;
    check_u64(g, "classes", std::uint64_t(row.count), match ? match->count : 0);
    if (match && row.stab_min && row.stab_max) {
      check_u64(g, "least stabilizer order", *row.stab_min, match->stab_orders.front());
      check_u64(g, "greatest stabilizer order", *row.stab_max, match->stab_orders.back());
    }
    report.add(std::move(g));
  }

  {
    // No classes may appear where the reference table has none.
    CheckGroup g{"PG(" + std::to_string(v) + ",2) no unexpected classes", true, {}};
    for (const SummaryRow& r : got.rows) {
      if (r.k > covered) continue;
      bool found = false;
      for (const ReferenceSummaryRow& row : expected->rows)
        if (r.k == row.k && r.type == row.type) found = true;
      if (!found)
        check(g, "k=" + std::to_string(r.k) + " " + to_string(r.type), "absent",
              std::to_string(r.count) + " classes");
    }
    report.add(std::move(g));
  }

  {
    CheckGroup g{"PG(" + std::to_string(v) + ",2) extremal sizes", true, {}};
    if (expected->smallest_size && *expected->smallest_size <= covered)
      check(g, "smallest size", opt_str(expected->smallest_size), opt_str(got.smallest_size));
    if (expected->smallest_cap_size) {
      if (*expected->smallest_cap_size <= covered)
        check(g, "smallest cap size", opt_str(expected->smallest_cap_size),
              opt_str(got.smallest_cap_size));
      else
        check(g, "no cap classes within searched range (caps start at k=" +
                     std::to_string(*expected->smallest_cap_size) + ")",
              "unset", opt_str(got.smallest_cap_size));
    }
    if (covered >= expected->k_max && expected->complete) {
      check(g, "largest size", opt_str(expected->largest_size), opt_str(got.largest_size));
      check(g, "second largest size", opt_str(expected->second_largest_size),
            opt_str(got.second_largest_size));
      check(g, "third largest size", opt_str(expected->third_largest_size),
            opt_str(got.third_largest_size));
    }
    if (!g.checks.empty()) report.add(std::move(g));
  }

  return report;
}

void annotate_constructions(std::vector<ClassRecord>& records, const ReferenceData& data) {
  if (records.empty()) return;
  const int v = records[0].v;
  std::map<std::vector<Point>, std::string> labels;
  for (const ReferenceRepresentative& rep : data.representatives) {
    if (rep.v != v || rep.constructions.empty()) continue;
    const Dimension dim(rep.v);
    const PointSet set(dim, rep.points);
    std::string joined;
    for (const std::string& c : rep.constructions) {
      if (!joined.empty()) joined += ",";
      joined += c;
    }
    labels[canonical_form(set).members.members()] = joined;
  }
  if (labels.empty()) return;
  for (ClassRecord& r : records) {
    const auto it = labels.find(r.representative);
    if (it != labels.end()) r.construction = it->second;
  }
}

}  // namespace pgsat
