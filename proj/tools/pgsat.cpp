// pgsat: classify, verify and transform minimal 1-saturating point sets of
// the binary projective spaces PG(v,2), 2 <= v <= 6.
//
// Exit codes: 0 success / verification passed, 1 verification mismatch (or a
// negative answer to a boolean query), 2 usage or resource errors.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "pgsat/constructions.hpp"
#include "pgsat/covering_code.hpp"
#include "pgsat/enumerate.hpp"
#include "pgsat/geometry.hpp"
#include "pgsat/group.hpp"
#include "pgsat/saturation.hpp"
#include "pgsat/set_io.hpp"
#include "pgsat/verify.hpp"

using json = nlohmann::json;
using namespace pgsat;

namespace {

struct GlobalOpts {
  std::string format = "text";
  std::uint64_t seed = 1;
  std::string data_path;  // reference data override

  bool json_out() const { return format == "json"; }
  ReferenceData reference() const {
    return data_path.empty() ? ReferenceData::embedded() : ReferenceData::from_file(data_path);
  }
};

PointSet load_single_set(const std::string& path, std::optional<int> v) {
  const SetFile file = read_sets_file(path, v);
  if (file.sets.size() != 1)
    throw std::invalid_argument(path + " holds " + std::to_string(file.sets.size()) +
                                " sets; expected exactly 1");
  return file.sets[0];
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

int report_exit(const VerificationReport& report, const GlobalOpts& g) {
  if (g.json_out())
    std::cout << report.json_text();
  else
    std::cout << report.text();
  return report.pass ? 0 : 1;
}

json set_json(const PointSet& s) {
  return json{{"v", s.dim().v()}, {"points", s.members()}};
}

void print_construction(const ConstructionResult& res, const GlobalOpts& g) {
  if (g.json_out()) {
    json j = set_json(res.output);
    j["description"] = res.description;
    j["verified"] = res.verified_properties;
    std::cout << j.dump(2) << "\n";
  } else {
    // stdout carries a valid set file; the report goes to stderr.
    write_sets(std::cout, res.output.dim(), {res.output});
    std::cerr << res.description << "\n";
    for (const std::string& p : res.verified_properties) std::cerr << "  verified: " << p << "\n";
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"minimal 1-saturating sets in PG(v,2): classification and verification"};
  app.require_subcommand(1);
  GlobalOpts g;
  app.add_option("--format", g.format, "output format")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--seed", g.seed, "seed for randomized checks");
  app.add_option("--data", g.data_path, "reference tables JSON (default: embedded copy)");

  // --- enumerate ---------------------------------------------------------
  auto* cmd_enum = app.add_subcommand("enumerate", "classify minimal 1-saturating sets");
  int en_v = 0, en_kmax = 0, en_threads = 0, en_split = 4;
  double en_budget = 0.0;
  std::string en_out, en_checkpoint, en_resume;
  cmd_enum->add_option("--v", en_v, "projective dimension (2..6; not needed with --resume)");
  cmd_enum->add_option("--kmax", en_kmax, "largest set size to search (default 2^v)");
  cmd_enum->add_option("--threads", en_threads, "worker threads (default: hardware)");
  cmd_enum->add_option("--split-depth", en_split, "set size at which subtrees become tasks");
  cmd_enum->add_option("--checkpoint", en_checkpoint, "write resumable state here");
  cmd_enum->add_option("--resume", en_resume, "continue from a checkpoint file");
  cmd_enum->add_option("--budget-seconds", en_budget, "abort (checkpointing) after this long");
  cmd_enum->add_option("--out", en_out, "write the JSON class records here");

  // --- verify ------------------------------------------------------------
  auto* cmd_verify = app.add_subcommand("verify", "recompute published classification data");
  cmd_verify->require_subcommand(1);
  auto* cmd_vt = cmd_verify->add_subcommand("tables", "verify the listed representatives");
  int vt_maps = 3;
  cmd_vt->add_option("--maps", vt_maps, "random collineations per invariance probe");
  auto* cmd_vs = cmd_verify->add_subcommand("summary", "enumerate and compare with the tables");
  int vs_v = 0, vs_kmax = 0, vs_threads = 0;
  cmd_vs->add_option("--v", vs_v, "projective dimension (2..6)")->required();
  cmd_vs->add_option("--kmax", vs_kmax, "verify classes up to this size only");
  cmd_vs->add_option("--threads", vs_threads, "worker threads");

  // --- construct ---------------------------------------------------------
  auto* cmd_con = app.add_subcommand("construct", "build known minimal 1-saturating sets");
  cmd_con->require_subcommand(1);
  std::string gl_file;
  int con_v = 0;
  std::uint32_t gl_pivot = 0, con_f = 0, con_p = 0;
  std::optional<int> set_v;
  auto add_set_v = [&](CLI::App* c) {
    c->add_option_function<int>(
        "--v", [&](const int& val) { set_v = val; },
        "dimension of the input set (if the file has no header)");
  };
  auto* cmd_gl = cmd_con->add_subcommand("gl", "fold a complete cap through one of its points");
  cmd_gl->add_option("--set", gl_file, "set file holding the complete cap")->required();
  cmd_gl->add_option("--pivot", gl_pivot, "point of the cap to fold through")->required();
  add_set_v(cmd_gl);
  auto* cmd_double = cmd_con->add_subcommand("double", "lift a set to PG(v+1,2) at twice the size");
  cmd_double->add_option("--set", gl_file, "set file holding a minimal 1-saturating set")
      ->required();
  add_set_v(cmd_double);
  auto* cmd_hc = cmd_con->add_subcommand("hyperplane-complement",
                                         "the affine complement of a hyperplane (largest cap)");
  cmd_hc->add_option("--v", con_v, "projective dimension")->required();
  cmd_hc->add_option("--f", con_f, "hyperplane functional, 1..2^(v+1)-1")->required();
  auto* cmd_hp = cmd_con->add_subcommand("hyperplane-plus-point",
                                         "a hyperplane together with one point off it");
  cmd_hp->add_option("--v", con_v, "projective dimension")->required();
  cmd_hp->add_option("--f", con_f, "hyperplane functional")->required();
  cmd_hp->add_option("--p", con_p, "point outside the hyperplane")->required();

  // --- code --------------------------------------------------------------
  auto* cmd_code = app.add_subcommand("code", "covering-code view of point sets");
  cmd_code->require_subcommand(1);
  std::string code_set, code_matrix;
  std::optional<int> code_v;
  auto* cmd_ce = cmd_code->add_subcommand("export", "print the parity-check matrix of a set");
  cmd_ce->add_option("--set", code_set, "set file")->required();
  cmd_ce->add_option_function<int>(
      "--v", [&](const int& val) { code_v = val; }, "dimension of the input set");
  auto* cmd_cr = cmd_code->add_subcommand("radius", "covering radius of a check matrix");
  cmd_cr->add_option("--matrix", code_matrix, "matrix file (rows of 0/1)")->required();
  auto* cmd_cl = cmd_code->add_subcommand("local-optimal",
                                          "does every column removal increase the radius?");
  cmd_cl->add_option("--matrix", code_matrix, "matrix file (rows of 0/1)")->required();

  // --- set-level queries --------------------------------------------------
  std::string q_set, q_a, q_b;
  std::optional<int> q_v;
  auto* cmd_stab = app.add_subcommand("stabilizer", "order of a set's stabilizer in GL(v+1,2)");
  cmd_stab->add_option("--set", q_set, "set file")->required();
  cmd_stab->add_option_function<int>(
      "--v", [&](const int& val) { q_v = val; }, "dimension of the input set");
  auto* cmd_canon = app.add_subcommand("canonical", "canonical form of a set with a witness map");
  cmd_canon->add_option("--set", q_set, "set file")->required();
  cmd_canon->add_option_function<int>(
      "--v", [&](const int& val) { q_v = val; }, "dimension of the input set");
  auto* cmd_eq = app.add_subcommand("equivalent", "are two sets projectively equivalent?");
  cmd_eq->add_option("--a", q_a, "first set file")->required();
  cmd_eq->add_option("--b", q_b, "second set file")->required();
  cmd_eq->add_option_function<int>(
      "--v", [&](const int& val) { q_v = val; }, "dimension of the input sets");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;  // help/version exit 0; any usage problem is 2
  }

  try {
    if (cmd_enum->parsed()) {
      EnumerateOptions opts;
      opts.k_max = en_kmax;
      opts.threads = en_threads;
      opts.split_depth = en_split;
      opts.checkpoint_path = en_checkpoint;
      opts.time_budget_seconds = en_budget;
      std::vector<ClassRecord> records;
      int kmax_used = en_kmax;
      if (!en_resume.empty()) {
        const CheckpointInfo info = checkpoint_info(en_resume);
        kmax_used = info.k_max;  // the search parameters travel in the checkpoint
        records = resume_enumeration(en_resume, opts);
      } else {
        records = enumerate_classes(Dimension(en_v), opts);
      }
      try {
        annotate_constructions(records, g.reference());
      } catch (const std::runtime_error& e) {
        std::cerr << "note: skipping construction labels: " << e.what() << "\n";
      }
      const std::string payload = class_records_json(records);
      if (!en_out.empty()) {
        std::ofstream out(en_out);
        if (!out) throw std::invalid_argument("cannot write " + en_out);
        out << payload;
      }
      if (g.json_out()) {
        if (en_out.empty()) std::cout << payload;
      } else if (!records.empty()) {
        const int ceiling = 1 << records[0].v;
        const int covered = kmax_used > 0 ? std::min(kmax_used, ceiling) : ceiling;
        std::cout << summary_table(summarize(records, covered));
      } else {
        std::cout << "no minimal 1-saturating classes found in the searched range\n";
      }
      return 0;
    }

    if (cmd_vt->parsed()) {
      return report_exit(verify_tables(g.reference(), g.seed, vt_maps), g);
    }
    if (cmd_vs->parsed()) {
      const Dimension dim(vs_v);
      const int ceiling = 1 << vs_v;
      if (vs_kmax <= 0 && vs_v >= 5)
        throw std::invalid_argument(
            "full enumeration above v=4 is a long computation; pass an explicit --kmax");
      const int kmax = vs_kmax > 0 ? std::min(vs_kmax, ceiling) : ceiling;
      EnumerateOptions opts;
      opts.k_max = kmax;
      opts.threads = vs_threads;
      const std::vector<ClassRecord> records = enumerate_classes(dim, opts);
      return report_exit(verify_summary(g.reference(), vs_v, records, kmax), g);
    }

    if (cmd_gl->parsed())
      return print_construction(gl_construction(load_single_set(gl_file, set_v), gl_pivot), g), 0;
    if (cmd_double->parsed())
      return print_construction(doubling(load_single_set(gl_file, set_v)), g), 0;
    if (cmd_hc->parsed())
      return print_construction(hyperplane_complement(Dimension(con_v), con_f), g), 0;
    if (cmd_hp->parsed())
      return print_construction(hyperplane_plus_point(Dimension(con_v), con_f, con_p), g), 0;

    if (cmd_ce->parsed()) {
      const CoverCode code = CoverCode::from_set(load_single_set(code_set, code_v));
      if (g.json_out()) {
        json j{{"codimension", code.codimension()},
               {"length", code.length()},
               {"columns", code.columns()},
               {"matrix", code.matrix_text()}};
        std::cout << j.dump(2) << "\n";
      } else {
        std::cout << code.matrix_text();
      }
      return 0;
    }
    if (cmd_cr->parsed()) {
      const auto radius = CoverCode::parse_matrix_text(read_text_file(code_matrix)).covering_radius();
      const std::string shown = radius ? std::to_string(*radius) : "infinite";
      if (g.json_out())
        std::cout << json{{"covering_radius", radius ? json(*radius) : json()}}.dump(2) << "\n";
      else
        std::cout << shown << "\n";
      return 0;
    }
    if (cmd_cl->parsed()) {
      const bool opt = CoverCode::parse_matrix_text(read_text_file(code_matrix)).is_locally_optimal();
      if (g.json_out())
        std::cout << json{{"locally_optimal", opt}}.dump(2) << "\n";
      else
        std::cout << (opt ? "true" : "false") << "\n";
      return opt ? 0 : 1;
    }

    if (cmd_stab->parsed()) {
      const std::uint64_t order = stabilizer_order(load_single_set(q_set, q_v));
      if (g.json_out())
        std::cout << json{{"stab_order", order}}.dump(2) << "\n";
      else
        std::cout << order << "\n";
      return 0;
    }
    if (cmd_canon->parsed()) {
      const PointSet set = load_single_set(q_set, q_v);
      const CanonicalForm canon = canonical_form(set);
      if (g.json_out()) {
        json j = set_json(canon.members);
        j["witness_rows"] = canon.witness.rows();
        j["already_canonical"] = canon.members == set;
        std::cout << j.dump(2) << "\n";
      } else {
        write_sets(std::cout, canon.members.dim(), {canon.members});
      }
      return 0;
    }
    if (cmd_eq->parsed()) {
      const bool eq = are_equivalent(load_single_set(q_a, q_v), load_single_set(q_b, q_v));
      if (g.json_out())
        std::cout << json{{"equivalent", eq}}.dump(2) << "\n";
      else
        std::cout << (eq ? "true" : "false") << "\n";
      return eq ? 0 : 1;
    }

    std::cerr << "no subcommand handled\n";
    return 2;
  } catch (const PartialResultError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
