// Copyright 2026 The fcshand Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Command-line front end: simulate, sweep, design-search, table1, validate.
//
// Exit codes: 0 success, 1 configuration or usage error, 2 validation
// mismatch (including infeasible design targets).

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "fcshand/config.hpp"
#include "fcshand/design.hpp"
#include "fcshand/scenario.hpp"
#include "fcshand/sweep.hpp"
#include "fcshand/table1.hpp"

namespace {

using namespace fcshand;

constexpr int kExitOk = 0;
constexpr int kExitConfig = 1;
constexpr int kExitMismatch = 2;

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw ConfigError(out_path, "cannot open for writing");
  out << text;
}

SystemConfig resolve_config(const std::string& path) {
  return path.empty() ? tuned_default_config() : load_config_file(path, tuned_default_config());
}

int cmd_simulate(const std::string& scenario_path, const std::string& config_path, const std::string& out_path) {
  const Scenario scenario = load_scenario_file(scenario_path);
  const SimTrace trace = run_scenario(scenario, resolve_config(config_path));
  for (const auto& w : trace.warnings) std::cerr << "warning: " << w << "\n";
  for (const auto& r : trace.records) {
    if (!r.outcome.empty()) std::cerr << "t=" << format_number(r.t) << " " << r.outcome << "\n";
  }
  emit(trace_to_csv(trace), out_path);
  return kExitOk;
}

int cmd_sweep(const std::string& param, const std::string& values, const std::string& scenario_path,
              const std::string& config_path, const std::string& out_path) {
  const Scenario scenario = scenario_path.empty() ? default_ramp_scenario() : load_scenario_file(scenario_path);
  emit(sweep(resolve_config(config_path), param, parse_values(values), scenario), out_path);
  return kExitOk;
}

int cmd_design(const DesignTargets& targets, const std::string& config_path, const std::string& out_path) {
  const SystemConfig base = config_path.empty() ? prototype_a_config()
                                                : load_config_file(config_path, prototype_a_config());
  try {
    const DesignResult result = design_search(targets, base);
    std::cerr << result.report;
    emit(to_json(result.config).dump(2) + "\n", out_path);
    return kExitOk;
  } catch (const DesignInfeasible& e) {
    std::cerr << "infeasible: " << e.what() << "\n";
    return kExitMismatch;
  }
}

int cmd_table1(const std::string& specs_path, const std::string& out_path) {
  const auto specs = specs_path.empty() ? builtin_prototypes() : parse_prototypes(read_json_file(specs_path));
  const Table1Report report = validate_table1(specs, PhysConstants{});
  emit(format_table1(report), out_path);
  constexpr double kF1Tolerance = 0.15;
  return report.classification_ok() && report.max_f1_error() <= kF1Tolerance ? kExitOk : kExitMismatch;
}

int cmd_validate(const std::string& config_path, const std::string& scenario_path) {
  const SystemConfig cfg = resolve_config(config_path);
  const ThresholdScan scan = scan_thresholds(cfg);
  bool ok = true;
  auto check = [&](const char* what, bool pass, const std::string& detail) {
    std::printf("%s  %-34s %s\n", pass ? "PASS" : "FAIL", what, detail.c_str());
    ok = ok && pass;
  };
  auto near = [](const std::optional<double>& v, double want, double tol) {
    return v && std::abs(*v - want) <= tol;
  };
  auto show = [](const std::optional<double>& v) { return v ? format_number(*v) + " L/min" : std::string("none"); };
  check("A->B at 8.1 +/- 0.1 L/min", near(scan.ab_lpm, 8.1, 0.1), show(scan.ab_lpm));
  check("B->C at 118 +/- 1 L/min", near(scan.bc_lpm, 118.0, 1.0), show(scan.bc_lpm));
  check("injection at 118 +/- 1 L/min", near(scan.injection_lpm, 118.0, 1.0), show(scan.injection_lpm));
  check("injection q2 at 44 +/- 1 L/min", near(scan.q2_at_injection_lpm, 44.0, 1.0), show(scan.q2_at_injection_lpm));
  const bool quiet = !scan.injection_lpm || *scan.injection_lpm > kMotionRangeMaxLpm;
  check("no injection up to 50 L/min", quiet, quiet ? "inactive" : "active at " + show(scan.injection_lpm));
  const bool fires = injection_active_at(lpm(kInjectionCommandLpm), cfg.fcs, cfg.venturi, cfg.consts);
  check("injection at 150 L/min", fires, fires ? "active" : "inactive");
  if (!scenario_path.empty()) {
    const SimTrace trace = run_scenario(load_scenario_file(scenario_path), cfg);
    double worst = 0.0;
    for (const auto& r : trace.records) {
      const double q = to_lpm(r.fcs.q1 + r.fcs.q2 + r.fcs.q_exhaust);
      if (r.q_src_lpm > 0.0) worst = std::max(worst, std::abs(q - r.q_src_lpm) / r.q_src_lpm);
    }
    check("trace flow conservation (1e-9)", worst <= 1e-9, format_number(worst));
  }
  return ok ? kExitOk : kExitMismatch;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Flow-switching soft hand simulator"};
  app.require_subcommand(1);

  std::string config_path, out_path, scenario_path, param, values, specs_path;
  DesignTargets targets;

  auto* simulate = app.add_subcommand("simulate", "Run a scenario and write the trace as CSV");
  simulate->add_option("scenario", scenario_path, "Scenario JSON file")->required();
  simulate->add_option("--config", config_path, "Config JSON overrides");
  simulate->add_option("--out", out_path, "Output CSV (default: stdout)");

  auto* sweep_cmd = app.add_subcommand("sweep", "Sweep one config parameter over a scenario");
  sweep_cmd->add_option("--param", param, "Parameter path, e.g. fcs.epsilon")->required();
  sweep_cmd->add_option("--values", values, "v1,v2,... or start:stop:step");
  sweep_cmd->add_option("--scenario", scenario_path, "Scenario JSON (default: 0-150 L/min ramp)");
  sweep_cmd->add_option("--config", config_path, "Config JSON overrides");
  sweep_cmd->add_option("--out", out_path, "Output CSV (default: stdout)");

  auto* design = app.add_subcommand("design-search", "Tune the mechanism to hit switching thresholds");
  design->add_option("--q-ab", targets.q_ab_lpm, "A->B source flow [L/min]")->capture_default_str();
  design->add_option("--q-bc", targets.q_bc_lpm, "B->C source flow [L/min]")->capture_default_str();
  design->add_option("--q2", targets.q2_activation_lpm, "Injection-line flow at activation [L/min]")
      ->capture_default_str();
  design->add_option("--config", config_path, "Config JSON overrides applied to Prototype A");
  design->add_option("--out", out_path, "Tuned config JSON (default: stdout)");

  auto* table1 = app.add_subcommand("table1", "Recompute the prototype comparison table");
  table1->add_option("--specs", specs_path, "Prototype rows JSON (default: built-in A-D)");
  table1->add_option("--out", out_path, "Report file (default: stdout)");

  auto* validate = app.add_subcommand("validate", "Check a config against the switching targets");
  validate->add_option("--config", config_path, "Config JSON overrides");
  validate->add_option("--scenario", scenario_path, "Also run this scenario and check conservation");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitConfig;
  }

  try {
    if (*simulate) return cmd_simulate(scenario_path, config_path, out_path);
    if (*sweep_cmd) return cmd_sweep(param, values, scenario_path, config_path, out_path);
    if (*design) return cmd_design(targets, config_path, out_path);
    if (*table1) return cmd_table1(specs_path, out_path);
    if (*validate) return cmd_validate(config_path, scenario_path);
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitConfig;
  }
  return kExitConfig;
}
