// Copyright 2026 The EIH Authors
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

// Command line front end for the hub orchestration library.
//
// Exit codes: 0 on success, 2 when the requested operation is infeasible,
// 3 on invalid input (bad JSON, unknown names, unusable files).

#include <cstdint>
#include <iostream>
#include <stdexcept>
#include <string>

#include <CLI11.hpp>

#include "eih/errors.hpp"
#include "eih/experiments.hpp"
#include "eih/fluid_sim.hpp"
#include "eih/json_io.hpp"
#include "eih/orchestrator.hpp"
#include "eih/provisioning.hpp"
#include "eih/scenario.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInfeasible = 2;
constexpr int kExitInvalidInput = 3;

int run_solve(const std::string& scenario_path) {
  const eih::Scenario scenario = eih::load_scenario_file(scenario_path);
  const eih::OrchestrationPlan plan =
      eih::solve(scenario.users, scenario.budgets);
  std::cout << eih::plan_to_json(plan).dump(2) << "\n";
  return kExitOk;
}

int run_simulate(const std::string& scenario_path, std::size_t user_index,
                 bool trace) {
  const eih::Scenario scenario = eih::load_scenario_file(scenario_path);
  if (user_index >= scenario.users.size()) {
    throw std::invalid_argument("user index out of range");
  }
  const eih::OrchestrationPlan plan =
      eih::solve(scenario.users, scenario.budgets);
  const eih::FlowTrace flow = eih::simulate(plan.allocations[user_index],
                                            scenario.users[user_index]);
  if (trace) {
    std::cout << eih::trace_to_json(flow).dump(2) << "\n";
  } else {
    nlohmann::ordered_json j;
    j["completion_s"] = flow.completion_s;
    j["peak_storage_bits"] = flow.peak_storage_bits;
    std::cout << j.dump(2) << "\n";
  }
  return kExitOk;
}

int run_provision(const std::string& scenario_path, double threshold_s) {
  const eih::Scenario scenario = eih::load_scenario_file(scenario_path);
  const eih::ProvisioningAdvice advice = eih::recommend_compute(
      threshold_s, scenario.users, scenario.budgets.bandwidth_total_hz,
      scenario.budgets.backhaul_total_bps);
  std::cout << eih::advice_to_json(advice).dump(2) << "\n";
  return advice.verdict == eih::ProvisioningVerdict::kSufficient
             ? kExitOk
             : kExitInfeasible;
}

int run_experiment(const std::string& name, const std::string& scenario_path,
                   int topologies, std::uint64_t seed, bool seed_given,
                   std::string out_path) {
  eih::ScenarioConfig config;
  if (!scenario_path.empty()) {
    config = eih::load_scenario_file(scenario_path).config;
  }
  if (seed_given) {
    config.seed = seed;
  }
  if (out_path.empty()) {
    out_path = name + ".csv";
  }
  eih::sweep(name, config, topologies, out_path);
  std::cout << "wrote " << out_path << "\n";
  return kExitOk;
}

int run_oracle(const std::string& scenario_path, int grid_points) {
  const eih::Scenario scenario = eih::load_scenario_file(scenario_path);
  const eih::BruteForceDiagnostics diag =
      eih::brute_force_search(scenario.users, scenario.budgets, grid_points);
  nlohmann::ordered_json j = eih::plan_to_json(diag.plan);
  j["latency_split_rule"] = diag.latency_split_rule;
  j["latency_eta_grid"] = diag.latency_eta_grid;
  std::cout << j.dump(2) << "\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Latency-optimal scheduling and resource allocation for an "
               "aerial relay hub"};
  app.require_subcommand(1);

  std::string scenario_path;
  std::size_t user_index = 0;
  bool trace = false;
  double threshold_s = 0.0;
  std::string experiment_name;
  std::string experiment_scenario;
  int topologies = 50;
  std::uint64_t seed = 0;
  std::string out_path;
  int grid_points = 200;

  CLI::App* solve_cmd =
      app.add_subcommand("solve", "Solve a scenario and print the plan");
  solve_cmd->add_option("scenario", scenario_path, "Scenario JSON file")
      ->required();

  CLI::App* sim_cmd = app.add_subcommand(
      "simulate", "Replay one user's planned allocation through the flow "
                  "simulator");
  sim_cmd->add_option("scenario", scenario_path, "Scenario JSON file")
      ->required();
  sim_cmd->add_option("--user", user_index, "User index to replay")
      ->capture_default_str();
  sim_cmd->add_flag("--trace", trace, "Print every queue breakpoint");

  CLI::App* prov_cmd = app.add_subcommand(
      "provision", "Recommend a compute budget for a latency threshold");
  prov_cmd->add_option("scenario", scenario_path, "Scenario JSON file")
      ->required();
  prov_cmd->add_option("--threshold", threshold_s, "Latency threshold (s)")
      ->required();

  CLI::App* exp_cmd =
      app.add_subcommand("experiment", "Run a named sweep and write a CSV");
  // Name validity is the library's call (exit 3), not a usage error, so the
  // known names appear in the help text but are not enforced by the parser.
  std::string name_help = "Sweep name (one of";
  for (const std::string& n : eih::experiment_names()) name_help += " " + n;
  name_help += ")";
  exp_cmd->add_option("name", experiment_name, name_help)->required();
  exp_cmd->add_option("--scenario", experiment_scenario,
                      "Scenario JSON file whose config seeds the sweep");
  exp_cmd->add_option("--topologies", topologies,
                      "Topology draws per sweep point")
      ->capture_default_str();
  CLI::Option* seed_opt =
      exp_cmd->add_option("--seed", seed, "Base seed for topology draws");
  exp_cmd->add_option("--out", out_path, "Output CSV path (default <name>.csv)");

  CLI::App* oracle_cmd = app.add_subcommand(
      "oracle", "Cross-check a small scenario against grid search");
  oracle_cmd->add_option("scenario", scenario_path, "Scenario JSON file")
      ->required();
  oracle_cmd->add_option("--grid-points", grid_points,
                         "Grid resolution per budget axis")
      ->capture_default_str();

  CLI11_PARSE(app, argc, argv);

  try {
    if (solve_cmd->parsed()) return run_solve(scenario_path);
    if (sim_cmd->parsed()) return run_simulate(scenario_path, user_index, trace);
    if (prov_cmd->parsed()) return run_provision(scenario_path, threshold_s);
    if (exp_cmd->parsed()) {
      return run_experiment(experiment_name, experiment_scenario, topologies,
                            seed, seed_opt->count() > 0, out_path);
    }
    if (oracle_cmd->parsed()) return run_oracle(scenario_path, grid_points);
  } catch (const eih::Infeasible& e) {
    std::cerr << "infeasible: " << e.what() << "\n";
    return kExitInfeasible;
  } catch (const eih::ComputeBelowThreshold& e) {
    std::cerr << "infeasible: " << e.what() << "\n";
    return kExitInfeasible;
  } catch (const eih::IoError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInvalidInput;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInvalidInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return kExitOk;
}
