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

#include "eih/schemes.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>
#include <stdexcept>

#include "eih/errors.hpp"
#include "eih/provisioning.hpp"

namespace eih {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

ResultRow row_from_plan(const Scenario& scenario, const char* name,
                        const OrchestrationPlan& plan) {
  ResultRow row;
  row.scheme_name = name;
  row.seed = scenario.seed;
  row.latency_s = plan.latency_s;
  row.per_user_latency_s = plan.per_user_latency_s;
  row.per_user_storage_bits = plan.per_user_storage_bits;
  row.budget_usage = plan.budget_usage;
  return row;
}

// One user's stage times add up under sequential operation: receive all,
// process the routed part, then forward the shrunk result. The sum is linear
// in the routed fraction, so only the endpoints matter.
double sequential_latency(const UserProfile& u, double bandwidth_hz,
                          double backhaul_bps, double compute_cps,
                          double split) {
  const double access = bandwidth_hz * u.spectral_efficiency;
  const double process =
      split > 0.0
          ? split * u.data_bits * u.intensity_cycles_per_bit / compute_cps
          : 0.0;
  const double shrunk = u.output_ratio * split + 1.0 - split;
  return u.data_bits / access + process + shrunk * u.data_bits / backhaul_bps;
}

double best_vertex_split(const UserProfile& u, double backhaul_bps,
                         double compute_cps) {
  if (compute_cps <= 0.0) return 0.0;
  // d(T_seq)/d(split) = D*rho/F - (1-zeta)*D/R; route everything through the
  // processor exactly when processing is cheaper than the bits it removes.
  const double slope = u.data_bits * u.intensity_cycles_per_bit / compute_cps -
                       (1.0 - u.output_ratio) * u.data_bits / backhaul_bps;
  return slope < 0.0 ? 1.0 : 0.0;
}

struct SequentialWitness {
  std::vector<Allocation> allocations;
  std::vector<double> per_user_latency_s;
};

SequentialWitness equal_share_sequential(const Scenario& scenario) {
  const double n = static_cast<double>(scenario.users.size());
  const Budgets& b = scenario.budgets;
  SequentialWitness w;
  for (const UserProfile& u : scenario.users) {
    Allocation alloc;
    alloc.bandwidth_hz = b.bandwidth_total_hz / n;
    alloc.backhaul_bps = b.backhaul_total_bps / n;
    alloc.compute_cps = b.compute_total_cps / n;
    alloc.split = best_vertex_split(u, alloc.backhaul_bps, alloc.compute_cps);
    w.allocations.push_back(alloc);
    w.per_user_latency_s.push_back(
        sequential_latency(u, alloc.bandwidth_hz, alloc.backhaul_bps,
                           alloc.compute_cps, alloc.split));
  }
  return w;
}

double worst_latency(const SequentialWitness& w) {
  double worst = 0.0;
  for (double t : w.per_user_latency_s) worst = std::max(worst, t);
  return worst;
}

// Can every user meet deadline T under sequential operation within the
// budgets? Each user picks the cheaper of its two vertex splits, where a
// candidate's resource demand comes from the optimal division of T across
// its stages (time proportional to the square root of weighted stage work),
// and prices are balanced by multiplicative weights. The equal-share witness
// is always tried first, which keeps the optimized scheme no worse than the
// equal-share one.
std::optional<SequentialWitness> sequential_feasible(
    const Scenario& scenario, double deadline_s,
    const SequentialWitness& equal_share) {
  if (worst_latency(equal_share) <= deadline_s) {
    return equal_share;
  }
  const Budgets& budgets = scenario.budgets;
  const bool has_compute = budgets.compute_total_cps > 0.0;
  double wb = 1.0 / budgets.bandwidth_total_hz;
  double wr = 1.0 / budgets.backhaul_total_bps;
  double wf = has_compute ? 1.0 / budgets.compute_total_cps : 1.0;

  for (int iter = 0; iter < 60; ++iter) {
    SequentialWitness w;
    double used_b = 0.0, used_r = 0.0, used_f = 0.0;
    for (const UserProfile& u : scenario.users) {
      const double access_work = u.data_bits / u.spectral_efficiency;
      // Relay-only candidate: two stages.
      const double s0b = std::sqrt(wb * access_work);
      const double s0r = std::sqrt(wr * u.data_bits);
      const double cost0 = (s0b + s0r) * (s0b + s0r) / deadline_s;
      // Full-processing candidate: three stages.
      double cost1 = kInf;
      double s1b = 0.0, s1f = 0.0, s1r = 0.0;
      if (has_compute) {
        s1b = std::sqrt(wb * access_work);
        s1f = std::sqrt(wf * u.data_bits * u.intensity_cycles_per_bit);
        s1r = std::sqrt(wr * u.output_ratio * u.data_bits);
        const double s = s1b + s1f + s1r;
        cost1 = s * s / deadline_s;
      }

      Allocation alloc;
      if (cost1 < cost0) {
        const double s = s1b + s1f + s1r;
        const double t1 = deadline_s * s1b / s;
        const double t2 = deadline_s * s1f / s;
        const double t3 = deadline_s * s1r / s;
        alloc.bandwidth_hz = access_work / t1;
        alloc.compute_cps = u.data_bits * u.intensity_cycles_per_bit / t2;
        alloc.backhaul_bps = u.output_ratio * u.data_bits / t3;
        alloc.split = 1.0;
      } else {
        const double s = s0b + s0r;
        const double t1 = deadline_s * s0b / s;
        const double t3 = deadline_s * s0r / s;
        alloc.bandwidth_hz = access_work / t1;
        alloc.backhaul_bps = u.data_bits / t3;
        alloc.compute_cps = 0.0;
        alloc.split = 0.0;
      }
      used_b += alloc.bandwidth_hz;
      used_r += alloc.backhaul_bps;
      used_f += alloc.compute_cps;
      w.allocations.push_back(alloc);
      w.per_user_latency_s.push_back(
          sequential_latency(u, alloc.bandwidth_hz, alloc.backhaul_bps,
                             alloc.compute_cps, alloc.split));
    }

    double ratio = std::max(used_b / budgets.bandwidth_total_hz,
                            used_r / budgets.backhaul_total_bps);
    if (has_compute) {
      ratio = std::max(ratio, used_f / budgets.compute_total_cps);
    }
    if (ratio <= 1.0) {
      return w;
    }
    // Raise the price of oversubscribed resources, floor the quiet ones.
    const auto bump = [](double usage, double budget) {
      return std::pow(std::max(usage / budget, 0.05), 0.6);
    };
    wb *= bump(used_b, budgets.bandwidth_total_hz);
    wr *= bump(used_r, budgets.backhaul_total_bps);
    if (has_compute) {
      wf *= bump(used_f, budgets.compute_total_cps);
    }
    const double norm = wb + wr + wf;
    wb /= norm;
    wr /= norm;
    wf /= norm;
  }
  return std::nullopt;
}

ResultRow sequential_row(const Scenario& scenario, const char* name,
                         const SequentialWitness& witness) {
  ResultRow row;
  row.scheme_name = name;
  row.seed = scenario.seed;
  row.latency_s = worst_latency(witness);
  row.per_user_latency_s = witness.per_user_latency_s;
  for (std::size_t i = 0; i < scenario.users.size(); ++i) {
    // Store-and-forward parks the whole stream at the hub between stages.
    row.per_user_storage_bits.push_back(scenario.users[i].data_bits);
    row.budget_usage.bandwidth_hz += witness.allocations[i].bandwidth_hz;
    row.budget_usage.backhaul_bps += witness.allocations[i].backhaul_bps;
    row.budget_usage.compute_cps += witness.allocations[i].compute_cps;
    row.budget_usage.storage_bits += scenario.users[i].data_bits;
  }
  return row;
}

ResultRow run_sequential_opt(const Scenario& scenario) {
  const SequentialWitness equal_share = equal_share_sequential(scenario);
  double hi = worst_latency(equal_share);
  SequentialWitness best = equal_share;
  double lo = latency_floor(scenario.users, scenario.budgets.bandwidth_total_hz,
                            scenario.budgets.backhaul_total_bps);
  for (int iter = 0; iter < 80 && (hi - lo) / lo >= 1e-6; ++iter) {
    const double mid = 0.5 * (lo + hi);
    if (!(mid > lo && mid < hi)) break;
    auto witness = sequential_feasible(scenario, mid, equal_share);
    if (witness.has_value()) {
      hi = mid;
      best = std::move(*witness);
    } else {
      lo = mid;
    }
  }
  return sequential_row(scenario, "sequential_opt", best);
}

ResultRow run_proposed_equal(const Scenario& scenario) {
  const double n = static_cast<double>(scenario.users.size());
  const Budgets& b = scenario.budgets;
  ResultRow row;
  row.scheme_name = "proposed_equal";
  row.seed = scenario.seed;
  for (const UserProfile& u : scenario.users) {
    const SplitOutcome so =
        optimal_split(b.bandwidth_total_hz / n, b.backhaul_total_bps / n,
                      b.compute_total_cps / n, u);
    row.latency_s = std::max(row.latency_s, so.latency_s);
    row.per_user_latency_s.push_back(so.latency_s);
    row.per_user_storage_bits.push_back(so.storage_bits);
    row.budget_usage.bandwidth_hz += b.bandwidth_total_hz / n;
    row.budget_usage.backhaul_bps += b.backhaul_total_bps / n;
    row.budget_usage.compute_cps += b.compute_total_cps / n;
    row.budget_usage.storage_bits += so.storage_bits;
  }
  return row;
}

}  // namespace

const std::vector<std::string>& scheme_names() {
  static const std::vector<std::string> names = {
      "proposed", "no_mec", "sequential_opt", "proposed_equal",
      "sequential_equal"};
  return names;
}

ResultRow run_scheme(const Scenario& scenario, const std::string& scheme) {
  if (scenario.users.empty()) {
    throw EmptyScenario("scenario has no users");
  }
  if (scheme == "proposed") {
    return row_from_plan(scenario, "proposed",
                         solve(scenario.users, scenario.budgets));
  }
  if (scheme == "no_mec") {
    Budgets relay_only = scenario.budgets;
    relay_only.compute_total_cps = 0.0;
    return row_from_plan(scenario, "no_mec",
                         solve(scenario.users, relay_only));
  }
  if (scheme == "sequential_opt") {
    return run_sequential_opt(scenario);
  }
  if (scheme == "proposed_equal") {
    return run_proposed_equal(scenario);
  }
  if (scheme == "sequential_equal") {
    return sequential_row(scenario, "sequential_equal",
                          equal_share_sequential(scenario));
  }
  throw UnknownScheme("unknown scheme: " + scheme);
}

}  // namespace eih
