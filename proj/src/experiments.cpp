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

#include "eih/experiments.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "eih/errors.hpp"
#include "eih/provisioning.hpp"
#include "eih/schemes.hpp"

namespace eih {

namespace {

using ordered_json = nlohmann::ordered_json;

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.9g", v);
  return buf;
}

std::string csv_quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

struct CsvWriter {
  std::ostringstream body;

  CsvWriter() {
    body << "experiment,seed,scheme,sweep_var_name,sweep_var_value,"
            "latency_s,storage_bits,extra\n";
  }

  void row(const std::string& experiment, std::uint64_t seed,
           const std::string& scheme, const std::string& var_name,
           double var_value, double latency_s, double storage_bits,
           const ordered_json& extra) {
    body << experiment << ',' << seed << ',' << scheme << ',' << var_name
         << ',' << fmt(var_value) << ',' << fmt(latency_s) << ','
         << fmt(storage_bits) << ',' << csv_quote(extra.dump()) << '\n';
  }

  void flush_to(const std::string& path) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) {
      throw IoError("cannot open for writing: " + path);
    }
    out << body.str();
    if (!out) {
      throw IoError("write failed: " + path);
    }
  }
};

std::vector<double> log_grid(double lo, double hi, int points) {
  std::vector<double> grid;
  grid.reserve(points);
  for (int i = 0; i < points; ++i) {
    grid.push_back(lo * std::pow(hi / lo, static_cast<double>(i) /
                                              (points - 1)));
  }
  return grid;
}

double total_storage(const ResultRow& row) {
  double total = 0.0;
  for (double v : row.per_user_storage_bits) total += v;
  return total;
}

void run_fig3(const ScenarioConfig& config, int n_topologies, CsvWriter* csv) {
  const std::vector<double> sizes = log_grid(1e5, 1e7, 8);
  for (double d_max : sizes) {
    ScenarioConfig cfg = config;
    cfg.d_max_bits = d_max;
    std::vector<double> latency_sum(scheme_names().size(), 0.0);
    std::vector<double> storage_sum(scheme_names().size(), 0.0);
    for (int i = 0; i < n_topologies; ++i) {
      const Scenario scenario =
          generate_scenario(cfg, config.seed + static_cast<std::uint64_t>(i));
      for (std::size_t s = 0; s < scheme_names().size(); ++s) {
        const ResultRow row = run_scheme(scenario, scheme_names()[s]);
        latency_sum[s] += row.latency_s;
        storage_sum[s] += total_storage(row);
      }
    }
    for (std::size_t s = 0; s < scheme_names().size(); ++s) {
      ordered_json extra;
      extra["n_topologies"] = n_topologies;
      csv->row("fig3_dmax", config.seed, scheme_names()[s], "d_max_bits",
               d_max, latency_sum[s] / n_topologies,
               storage_sum[s] / n_topologies, extra);
    }
  }
}

void run_fig4(const ScenarioConfig& config, CsvWriter* csv) {
  ScenarioConfig cfg = config;
  cfg.n_users = 1;
  const Scenario scenario = generate_scenario(cfg, config.seed);
  const UserProfile& user = scenario.users[0];
  const double bandwidth = scenario.budgets.bandwidth_total_hz;
  const double backhaul = scenario.budgets.backhaul_total_bps;

  const std::vector<double> computes = log_grid(0.2e9, 20e9, 25);
  const int eta_points = 100;
  for (double compute : computes) {
    for (int m = 0; m <= eta_points; ++m) {
      const double eta = static_cast<double>(m) / eta_points;
      const Allocation alloc{bandwidth, backhaul, compute, eta};
      ordered_json extra;
      extra["eta"] = eta;
      csv->row("fig4_eta_curves", scenario.seed, "eta_grid",
               "compute_total_cps", compute, upload_latency(alloc, user),
               required_storage(alloc, user), extra);
    }
    const SplitOutcome best = optimal_split(bandwidth, backhaul, compute,
                                            user);
    ordered_json extra;
    extra["eta"] = best.split;
    csv->row("fig4_eta_curves", scenario.seed, "optimal_split",
             "compute_total_cps", compute, best.latency_s, best.storage_bits,
             extra);
  }
}

void run_fig5(const ScenarioConfig& config, CsvWriter* csv) {
  const Scenario scenario = generate_scenario(config, config.seed);
  const double backhaul = scenario.budgets.backhaul_total_bps;
  const std::vector<double> bandwidths = {0.2e6, 0.3e6, 0.4e6, 0.5e6};
  const std::vector<double> computes = log_grid(0.2e9, 20e9, 25);

  for (double bandwidth : bandwidths) {
    const double threshold =
        f_total_limit(scenario.users, bandwidth, backhaul);
    for (double compute : computes) {
      Budgets budgets = scenario.budgets;
      budgets.bandwidth_total_hz = bandwidth;
      budgets.compute_total_cps = compute;
      const OrchestrationPlan plan = solve(scenario.users, budgets);
      ordered_json extra;
      extra["bandwidth_total_hz"] = bandwidth;
      extra["f_total_limit"] = threshold;
      csv->row("fig5_ftotal", scenario.seed, "solve", "compute_total_cps",
               compute, plan.latency_s, plan.budget_usage.storage_bits,
               extra);
    }
    Budgets budgets = scenario.budgets;
    budgets.bandwidth_total_hz = bandwidth;
    budgets.compute_total_cps = threshold;
    const OrchestrationPlan plan = solve(scenario.users, budgets);
    ordered_json extra;
    extra["bandwidth_total_hz"] = bandwidth;
    extra["f_total_limit"] = threshold;
    csv->row("fig5_ftotal", scenario.seed, "f_lim", "compute_total_cps",
             threshold, plan.latency_s, plan.budget_usage.storage_bits,
             extra);
  }
}

void run_fig6(const ScenarioConfig& config, int n_topologies, CsvWriter* csv) {
  std::vector<Scenario> scenarios;
  scenarios.reserve(n_topologies);
  for (int i = 0; i < n_topologies; ++i) {
    scenarios.push_back(
        generate_scenario(config, config.seed + static_cast<std::uint64_t>(i)));
  }
  const std::vector<double> bandwidths = {0.2e6, 0.3e6, 0.4e6, 0.5e6};
  std::vector<double> backhauls;
  for (int i = 1; i <= 10; ++i) backhauls.push_back(1e5 * i);

  for (double bandwidth : bandwidths) {
    for (double backhaul : backhauls) {
      double latency_sum = 0.0;
      for (const Scenario& scenario : scenarios) {
        Budgets budgets = scenario.budgets;
        budgets.bandwidth_total_hz = bandwidth;
        budgets.backhaul_total_bps = backhaul;
        latency_sum += solve(scenario.users, budgets).latency_s;
      }
      ordered_json extra;
      extra["bandwidth_total_hz"] = bandwidth;
      extra["n_topologies"] = n_topologies;
      csv->row("fig6_backhaul", config.seed, "solve", "backhaul_total_bps",
               backhaul, latency_sum / n_topologies, 0.0, extra);
    }
  }
}

}  // namespace

const std::vector<std::string>& experiment_names() {
  static const std::vector<std::string> names = {
      "fig3_dmax", "fig4_eta_curves", "fig5_ftotal", "fig6_backhaul"};
  return names;
}

void sweep(const std::string& experiment, const ScenarioConfig& config,
           int n_topologies, const std::string& output_path) {
  check_config(config);
  if (n_topologies < 1) {
    throw std::invalid_argument("n_topologies must be at least 1");
  }
  CsvWriter csv;
  if (experiment == "fig3_dmax") {
    run_fig3(config, n_topologies, &csv);
  } else if (experiment == "fig4_eta_curves") {
    run_fig4(config, &csv);
  } else if (experiment == "fig5_ftotal") {
    run_fig5(config, &csv);
  } else if (experiment == "fig6_backhaul") {
    run_fig6(config, n_topologies, &csv);
  } else {
    throw std::invalid_argument("unknown experiment: " + experiment);
  }
  csv.flush_to(output_path);
}

}  // namespace eih
