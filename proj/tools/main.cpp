#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "wagner_forge/cli.hpp"

int main(int argc, char** argv) {
  using namespace wf::cli;

  CLI::App app{"wagner-forge: build and verify omega-power characterizations"};
  app.require_subcommand(1);

  std::string class_name, out_dir = "out";
  auto* build = app.add_subcommand(
      "build", "construct the language, its omega-power, and the matching DWA");
  build->add_option("class", class_name, "target class, e.g. D2, D1check, D1+D1check")
      ->required();
  build->add_option("--out", out_dir, "output directory");

  std::string classify_path;
  auto* classify = app.add_subcommand(
      "classify", "locate a DWA, or an NFA's omega-power, in the hierarchy");
  classify->add_option("input", classify_path, "automaton JSON file")->required();

  VerifyOptions vopt;
  std::string report_path;
  std::vector<int> bounds;
  auto* verify = app.add_subcommand(
      "verify", "check every supported class end to end and emit a report");
  verify->add_option("--max-level", vopt.max_level, "highest level to verify");
  verify->add_option("--lasso-bounds", bounds, "max |u| and |v| for lasso sweeps")
      ->expected(2);
  verify->add_option("--seed", vopt.seed, "seed for the randomized suites");
  verify->add_option("--trials", vopt.trials, "trials per randomized identity");
  verify->add_option("--gate-states", vopt.gate_states,
                     "largest NBW complemented exactly");
  verify->add_option("--out", report_path, "report file (stdout if omitted)");

  std::string export_path, export_out;
  bool dot = false;
  auto* exp = app.add_subcommand("export", "re-emit an automaton as JSON or DOT");
  exp->add_option("input", export_path, "automaton JSON file")->required();
  exp->add_flag("--dot", dot, "emit Graphviz DOT instead of JSON");
  exp->add_option("--out", export_out, "output file (stdout if omitted)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e) == 0 ? kExitPass : kExitMalformed;
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitMalformed;
  }

  if (bounds.size() == 2) {
    vopt.lasso_u = bounds[0];
    vopt.lasso_v = bounds[1];
  }
  if (const char* budget = std::getenv("WAGNER_FORGE_BUDGET_MS")) {
    try {
      vopt.budget_ms = std::stol(budget);
    } catch (...) {
      std::cerr << "WAGNER_FORGE_BUDGET_MS is not a number: " << budget << "\n";
      return kExitMalformed;
    }
  }

  if (build->parsed())
    return cmd_build(class_name, out_dir, std::cout, std::cerr);
  if (classify->parsed())
    return cmd_classify(classify_path, std::cout, std::cerr);
  if (verify->parsed())
    return cmd_verify(vopt, report_path, std::cout, std::cerr);
  return cmd_export(export_path, dot, export_out, std::cout, std::cerr);
}
