// hilbco: Hilbert coefficients and Cohen-Macaulay criteria from the command line.

#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "hilbco/job.hpp"

namespace {

using hilbco::Json;

void emit(const Json& report, bool json) {
  if (json || report.contains("error"))
    std::cout << report.dump(2) << "\n";
  else
    std::cout << hilbco::render_text(report);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hilbert coefficients of parameter ideals and Cohen-Macaulay criteria"};
  app.require_subcommand(1);

  std::string spec_path;
  std::optional<std::size_t> n_opt;
  std::optional<int> window_opt;
  std::optional<hilbco::Exponent> bound_opt;
  std::optional<std::string> depth_opt;
  bool full = false, json = false, text = false;

  auto* analyze = app.add_subcommand("analyze", "Analyze a JSON job specification");
  analyze->add_option("spec", spec_path, "Job specification (JSON)")->required();
  analyze->add_option("--N", n_opt, "Last index of the computed sequences");
  analyze->add_option("--window", window_opt, "Stabilization window");
  analyze->add_option("--semigroup-bound", bound_opt, "Box side for semigroup counts");
  analyze->add_option("--depth-flag", depth_opt, "Assert depth R = d-1 (value: d-1)");
  analyze->add_flag("--full", full, "Include the computed sequences");
  auto* json_flag = analyze->add_flag("--json", json, "JSON output");
  analyze->add_flag("--text", text, "Text output (default)")->excludes(json_flag);

  bool list = false, huneke = false, ex_json = false, ex_full = false;
  std::string run_name;
  auto* examples = app.add_subcommand("examples", "Built-in worked examples");
  auto* list_flag = examples->add_flag("--list", list, "List the presets");
  examples->add_option("--run", run_name, "Run a preset")->excludes(list_flag);
  examples->add_flag("--huneke", huneke, "Also compute g1, g2 through the v_n route");
  examples->add_flag("--json", ex_json, "JSON output");
  examples->add_flag("--full", ex_full, "Include the computed sequences");

  std::string check_path, statement;
  auto* check = app.add_subcommand("check", "Report a single statement verdict");
  check->add_option("spec", check_path, "Job specification (JSON)")->required();
  check->add_option("--statement", statement, "Verdict id, e.g. THM-c")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (analyze->parsed()) {
      auto spec = hilbco::load_job(spec_path);
      if (n_opt) spec.options.n = *n_opt;
      if (window_opt) spec.options.window = *window_opt;
      if (bound_opt) spec.options.semigroup_bound = *bound_opt;
      if (depth_opt) {
        if (*depth_opt != "d-1") throw hilbco::InputError("--depth-flag accepts only 'd-1'");
        spec.options.depth_flag = true;
      }
      const auto result = hilbco::run_job(spec, {full});
      emit(result.report, json);
      return result.exit_code;
    }

    if (examples->parsed()) {
      if (list || run_name.empty()) {
        std::cout << Json(hilbco::preset_names()).dump() << "\n";
        return 0;
      }
      auto spec = hilbco::preset(run_name);
      if (huneke) spec.options.huneke = true;
      const auto result = hilbco::run_job(spec, {ex_full});
      emit(result.report, ex_json);
      return result.exit_code;
    }

    const auto spec = hilbco::load_job(check_path);
    const auto result = hilbco::run_job(spec);
    if (result.exit_code != 0) {
      emit(result.report, true);
      return result.exit_code;
    }
    Json matches = Json::array();
    for (const auto& v : result.report["verdicts"])
      if (v["id"] == statement) matches.push_back(v);
    if (matches.empty()) {
      std::cerr << "statement " << statement << " is not applicable to this input\n";
      return 1;
    }
    std::cout << matches.dump(2) << "\n";
    return 0;
  } catch (const hilbco::InputError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 1;
  } catch (const hilbco::ComputationError& e) {
    std::cerr << "computation error: " << e.what() << "\n";
    return 2;
  }
}
