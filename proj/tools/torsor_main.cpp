// torsor: outer automorphism groups of mapping tori of finite groups.
//
// Subcommands: aut, analyze, enum-relators, iso. JSON output is the stable
// contract; the text format is a human-oriented convenience.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "torsor/abstract_group.hpp"
#include "torsor/analysis.hpp"
#include "torsor/aut_relators.hpp"
#include "torsor/errors.hpp"
#include "torsor/json_io.hpp"

namespace {

using nlohmann::json;
using namespace torsor;

constexpr int kExitOk = 0;
constexpr int kExitMalformed = 2;
constexpr int kExitCapExceeded = 3;
constexpr int kExitHypothesis = 4;
constexpr int kExitCrossValidation = 5;

struct CommonOptions {
  int cap_elements = kDefaultElementCap;
  long long cap_enum = 1000000;
  int budget_len = 8;
  long long budget_states = 1000000;
  std::string out_path;
  std::string format = "json";
  bool cross_validate = false;
};

void add_common_flags(CLI::App* cmd, CommonOptions& opt) {
  cmd->add_option("--cap-elements", opt.cap_elements, "Element cap for group closure");
  cmd->add_option("--cap-enum", opt.cap_enum, "Cap on |H| * |Aut(H)| for direct enumeration");
  cmd->add_option("--budget-len", opt.budget_len, "Word length budget");
  cmd->add_option("--budget-states", opt.budget_states, "Search state budget");
  cmd->add_option("--out", opt.out_path, "Write output to this path instead of stdout");
  cmd->add_option("--format", opt.format, "Output format: json or text")
      ->check(CLI::IsMember({"json", "text"}));
  cmd->add_flag("--cross-validate", opt.cross_validate,
                "Also run the direct enumeration oracle and compare");
}

json seed_field() {
  const char* seed = std::getenv("TORSOR_SEED");
  return seed == nullptr ? json(nullptr) : json(std::string(seed));
}

void write_output(const CommonOptions& opt, const std::string& content) {
  if (opt.out_path.empty()) {
    std::cout << content;
    return;
  }
  std::ofstream out(opt.out_path, std::ios::binary);
  if (!out) throw ParseError("cannot open output path: " + opt.out_path);
  out << content;
}

std::string render(const CommonOptions& opt, const json& j, const std::string& text) {
  return opt.format == "json" ? j.dump(2) + "\n" : text;
}

int run_aut(const std::string& group_path, const CommonOptions& opt) {
  GroupPtr H = load_group(group_path, opt.cap_elements);
  std::vector<Automorphism> auts = compute_aut(H, opt.cap_elements);
  OuterQuotient out = project_out(H, auts);
  GroupSummary summary = GroupSummary::of(out.group());

  json j;
  j["schema"] = 1;
  j["command"] = "aut";
  j["seed"] = seed_field();
  j["group"] = {{"name", H->name()}, {"order", H->order()}, {"degree", H->degree()}};
  j["aut_order"] = auts.size();
  j["inn_order"] = out.inn_order();
  j["out_order"] = out.group().order();
  j["out"] = group_summary_to_json(summary);

  std::ostringstream text;
  text << "group " << H->name() << " of order " << H->order() << "\n"
       << "|Aut| = " << auts.size() << ", |Inn| = " << out.inn_order()
       << ", |Out| = " << out.group().order() << " (" << summary.catalog << ")\n";
  write_output(opt, render(opt, j, text.str()));
  return kExitOk;
}

int run_analyze(const std::string& spec_path, const CommonOptions& opt) {
  LoadedTorus spec = load_torus_spec(spec_path, opt.cap_elements);
  AnalysisCaps caps{opt.cap_elements, opt.cap_enum};
  TorusAnalysis analysis(spec.group, spec.phi_table, caps);
  AnalysisReport report = analysis.report(opt.cross_validate);

  json j = report_to_json(report);
  j["command"] = "analyze";
  j["seed"] = seed_field();

  std::ostringstream text;
  text << "torus over " << report.group_name << " (order " << report.group_order << ")\n";
  if (!report.hypotheses.ok()) {
    text << "hypotheses fail: trivial_center=" << report.hypotheses.trivial_center
         << " phi_valid=" << report.hypotheses.phi_valid << "\n";
    write_output(opt, render(opt, j, text.str()));
    return kExitHypothesis;
  }
  text << "|Out(H)| = " << report.out_order << " (" << report.out_catalog << ")\n"
       << "centralizer order " << report.centralizer_order << ", twisting class order "
       << report.cyclic_phi_order << "\n"
       << "orientation-preserving quotient: order " << report.formula_out0.order << " ("
       << report.formula_out0.catalog << "), index " << report.index << "\n"
       << "predicted |Out(torus)| = " << report.predicted_out_order << "\n";
  if (report.direct_out0) {
    text << "direct enumeration: out0 order " << report.direct_out0->order << ", out order "
         << report.direct_out->order << ", index " << *report.direct_index << "\n"
         << "map checks passed, isomorphism witness found\n";
  }
  write_output(opt, render(opt, j, text.str()));
  return kExitOk;
}

int run_enum_relators(const std::string& pres_path, const std::string& aut_path,
                      const CommonOptions& opt) {
  Presentation p = load_presentation(pres_path);
  AutGeneratorSet aut = load_aut_generators(aut_path, p);
  WordBudgets budgets{opt.budget_len, opt.budget_states};

  std::ostringstream stream;
  enumerate_aut_relators(p, aut, budgets, [&](const RelatorEmission& e) {
    json record;
    record["word"] = e.psi;
    record["certified"] = true;
    stream << record.dump() << "\n";
  });
  write_output(opt, stream.str());
  return kExitOk;
}

int run_iso(const std::string& a_path, const std::string& b_path, const CommonOptions& opt) {
  GroupPtr A = load_group(a_path, opt.cap_elements);
  GroupPtr B = load_group(b_path, opt.cap_elements);
  AbstractGroup a = AbstractGroup::from_finite_group(*A);
  AbstractGroup b = AbstractGroup::from_finite_group(*B);
  std::optional<std::vector<int>> witness = iso_test(a, b);

  json j;
  j["schema"] = 1;
  j["command"] = "iso";
  j["seed"] = seed_field();
  j["a"] = {{"name", A->name()}, {"order", A->order()}, {"catalog", a.identify()}};
  j["b"] = {{"name", B->name()}, {"order", B->order()}, {"catalog", b.identify()}};
  j["isomorphic"] = witness.has_value();
  j["witness"] = witness ? json(*witness) : json(nullptr);

  std::ostringstream text;
  text << A->name() << " and " << B->name() << ": "
       << (witness ? "isomorphic" : "not isomorphic") << "\n";
  write_output(opt, render(opt, j, text.str()));
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"outer automorphism groups of mapping tori of finite groups"};
  app.require_subcommand(1);

  CommonOptions opt;
  std::string group_path, spec_path, pres_path, aut_path, a_path, b_path;

  CLI::App* aut_cmd = app.add_subcommand("aut", "Automorphism group report for a group file");
  aut_cmd->add_option("group", group_path, "Group file (JSON)")->required();
  add_common_flags(aut_cmd, opt);

  CLI::App* analyze_cmd =
      app.add_subcommand("analyze", "Outer automorphism analysis of a mapping torus");
  analyze_cmd->add_option("spec", spec_path, "Torus spec file (JSON)")->required();
  add_common_flags(analyze_cmd, opt);

  CLI::App* enum_cmd =
      app.add_subcommand("enum-relators", "Enumerate certified automorphism relators");
  enum_cmd->add_option("presentation", pres_path, "Presentation file (JSON)")->required();
  enum_cmd->add_option("aut", aut_path, "Automorphism generator file (JSON)")->required();
  add_common_flags(enum_cmd, opt);

  CLI::App* iso_cmd = app.add_subcommand("iso", "Isomorphism test between two group files");
  iso_cmd->add_option("a", a_path, "First group file (JSON)")->required();
  iso_cmd->add_option("b", b_path, "Second group file (JSON)")->required();
  add_common_flags(iso_cmd, opt);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitMalformed;
  }

  try {
    if (aut_cmd->parsed()) return run_aut(group_path, opt);
    if (analyze_cmd->parsed()) return run_analyze(spec_path, opt);
    if (enum_cmd->parsed()) return run_enum_relators(pres_path, aut_path, opt);
    if (iso_cmd->parsed()) return run_iso(a_path, b_path, opt);
  } catch (const CapExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitCapExceeded;
  } catch (const HypothesisViolation& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitHypothesis;
  } catch (const CrossValidationError& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitCrossValidation;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitMalformed;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return kExitOk;
}
