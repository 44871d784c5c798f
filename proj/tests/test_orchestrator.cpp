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

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include <doctest.h>

#include "eih/errors.hpp"
#include "eih/orchestrator.hpp"
#include "eih/provisioning.hpp"
#include "eih/rng.hpp"
#include "oracles.hpp"
#include "samplers.hpp"

namespace {

using namespace eih;

std::vector<UserProfile> random_users(Rng& rng, int n) {
  std::vector<UserProfile> users;
  for (int i = 0; i < n; ++i) users.push_back(sampler::user(rng));
  return users;
}

// Budgets loosely scaled to the aggregate demand at a one second deadline,
// so instances are feasible yet no single resource trivially dominates.
Budgets demand_scaled_budgets(Rng& rng, const std::vector<UserProfile>& users) {
  double data_over_rate = 0.0, shrunk = 0.0;
  for (const UserProfile& u : users) {
    data_over_rate += u.data_bits / u.spectral_efficiency;
    shrunk += u.output_ratio * u.data_bits;
  }
  Budgets budgets;
  budgets.bandwidth_total_hz = data_over_rate * rng.uniform(0.5, 3.0);
  budgets.backhaul_total_bps = shrunk * rng.uniform(1.0, 20.0);
  budgets.compute_total_cps = 0.0;
  for (const UserProfile& u : users) {
    budgets.compute_total_cps +=
        u.intensity_cycles_per_bit * u.data_bits * rng.uniform(0.05, 2.0);
  }
  return budgets;
}

TEST_CASE("feasibility verdict flips exactly at the knapsack minimum") {
  Rng rng(60001);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 2 + static_cast<int>(rng.next_bits() % 3);
    const std::vector<UserProfile> users = random_users(rng, n);
    const double deadline = 1.0;

    std::vector<double> lo, hi, c;
    double need_bw = 0.0;
    for (const UserProfile& u : users) {
      lo.push_back(u.output_ratio * u.data_bits / deadline);
      hi.push_back(u.data_bits / deadline);
      c.push_back(u.intensity_cycles_per_bit / (1.0 - u.output_ratio));
      need_bw += u.data_bits / (deadline * u.spectral_efficiency);
    }
    double sum_lo = 0.0, sum_hi = 0.0;
    for (std::size_t i = 0; i < lo.size(); ++i) {
      sum_lo += lo[i];
      sum_hi += hi[i];
    }

    Budgets budgets;
    budgets.bandwidth_total_hz = need_bw * rng.uniform(1.01, 1.5);
    budgets.backhaul_total_bps =
        sum_lo + (sum_hi - sum_lo) * rng.uniform(0.1, 0.9);
    const double min_compute = oracle::min_compute_all_orders(
        lo, hi, c, budgets.backhaul_total_bps);
    REQUIRE(min_compute > 0.0);

    budgets.compute_total_cps = min_compute * (1.0 + 1e-9);
    const FeasibilityResult yes = feasible_at(deadline, users, budgets);
    REQUIRE(yes.feasible);
    REQUIRE(yes.witness.has_value());

    // The witness must fit every budget and every per-user box.
    double wit_sum = 0.0, wit_load = 0.0;
    for (std::size_t i = 0; i < yes.witness->size(); ++i) {
      const double x = (*yes.witness)[i];
      REQUIRE(x >= lo[i] * (1.0 - 1e-12));
      REQUIRE(x <= hi[i] * (1.0 + 1e-12));
      wit_sum += x;
      wit_load += c[i] * std::max(0.0, hi[i] - x);
    }
    REQUIRE(wit_sum <= budgets.backhaul_total_bps * (1.0 + 1e-12));
    REQUIRE(wit_load <= budgets.compute_total_cps * (1.0 + 1e-9));

    budgets.compute_total_cps = min_compute * (1.0 - 1e-9);
    REQUIRE(!feasible_at(deadline, users, budgets).feasible);
  }
}

TEST_CASE("feasibility is monotone in the deadline") {
  Rng rng(60002);
  for (int trial = 0; trial < 100; ++trial) {
    const std::vector<UserProfile> users =
        random_users(rng, 1 + static_cast<int>(rng.next_bits() % 4));
    const Budgets budgets = demand_scaled_budgets(rng, users);
    bool was_feasible = false;
    double deadline = 1e-3;
    for (int step = 0; step < 40; ++step) {
      const bool now = feasible_at(deadline, users, budgets).feasible;
      if (was_feasible) REQUIRE(now);
      was_feasible = now;
      deadline *= 1.6;
    }
    REQUIRE(was_feasible);  // every positive-budget instance opens up
  }
}

TEST_CASE("deadline validation") {
  Rng rng(60003);
  const std::vector<UserProfile> users = random_users(rng, 2);
  const Budgets budgets = demand_scaled_budgets(rng, users);
  CHECK_THROWS_AS(feasible_at(0.0, users, budgets), InvalidLatency);
  CHECK_THROWS_AS(feasible_at(-1.0, users, budgets), InvalidLatency);
  CHECK_THROWS_AS(
      feasible_at(std::numeric_limits<double>::infinity(), users, budgets),
      InvalidLatency);
  Budgets bad = budgets;
  bad.bandwidth_total_hz = -1.0;
  CHECK_THROWS_AS(feasible_at(1.0, users, bad), std::invalid_argument);
}

TEST_CASE("solved plans meet every declared invariant") {
  Rng rng(60004);
  for (int trial = 0; trial < 60; ++trial) {
    const std::vector<UserProfile> users =
        random_users(rng, 1 + static_cast<int>(rng.next_bits() % 5));
    const Budgets budgets = demand_scaled_budgets(rng, users);
    const OrchestrationPlan plan = solve(users, budgets);
    const double deadline = plan.latency_s;
    REQUIRE(deadline > 0.0);
    REQUIRE(plan.allocations.size() == users.size());

    double bw = 0.0, bh = 0.0, cp = 0.0;
    for (std::size_t i = 0; i < users.size(); ++i) {
      const Allocation& a = plan.allocations[i];
      bw += a.bandwidth_hz;
      bh += a.backhaul_bps;
      cp += a.compute_cps;

      REQUIRE(plan.per_user_storage_bits[i] == 0.0);
      REQUIRE(oracle::rel_gap(plan.per_user_latency_s[i], deadline) < 1e-9);
      REQUIRE(upload_latency(a, users[i]) <= deadline * (1.0 + 1e-9));
      REQUIRE(required_storage(a, users[i]) <=
              1e-6 + 1e-9 * users[i].data_bits);

      // The deadline is never better than the user's solo bottlenecks.
      const UserProfile& u = users[i];
      const double solo_access =
          u.data_bits / (budgets.bandwidth_total_hz * u.spectral_efficiency);
      const double solo_relay =
          u.output_ratio * u.data_bits / budgets.backhaul_total_bps;
      const double solo_mixed =
          u.data_bits * u.intensity_cycles_per_bit /
          (budgets.compute_total_cps * (1.0 - u.output_ratio) +
           u.intensity_cycles_per_bit * budgets.backhaul_total_bps);
      REQUIRE(deadline * (1.0 + 1e-9) >= solo_access);
      REQUIRE(deadline * (1.0 + 1e-9) >=
              std::min({solo_access, solo_relay, solo_mixed}));
    }
    REQUIRE(oracle::rel_gap(bw, plan.budget_usage.bandwidth_hz) < 1e-12);
    REQUIRE(oracle::rel_gap(bh, plan.budget_usage.backhaul_bps) < 1e-12);
    REQUIRE(oracle::rel_gap(cp, plan.budget_usage.compute_cps) < 1e-12);
    REQUIRE(plan.budget_usage.storage_bits == 0.0);
    REQUIRE(bw <= budgets.bandwidth_total_hz * (1.0 + 1e-9));
    REQUIRE(bh <= budgets.backhaul_total_bps * (1.0 + 1e-9));
    REQUIRE(cp <= budgets.compute_total_cps * (1.0 + 1e-9));

    // Bracket honesty: the returned deadline is certified, anything
    // meaningfully below it is not.
    REQUIRE(feasible_at(deadline, users, budgets).feasible);
    REQUIRE(!feasible_at(deadline * (1.0 - 1e-6), users, budgets).feasible);
  }
}

TEST_CASE("ample compute pins the deadline to the latency floor") {
  Rng rng(60005);
  for (int trial = 0; trial < 10; ++trial) {
    const std::vector<UserProfile> users =
        random_users(rng, 1 + static_cast<int>(rng.next_bits() % 4));
    Budgets budgets = demand_scaled_budgets(rng, users);
    budgets.compute_total_cps =
        2.0 * f_total_limit(users, budgets.bandwidth_total_hz,
                            budgets.backhaul_total_bps);
    const OrchestrationPlan plan = solve(users, budgets);
    const double floor = latency_floor(users, budgets.bandwidth_total_hz,
                                       budgets.backhaul_total_bps);
    REQUIRE(oracle::rel_gap(plan.latency_s, floor) < 1e-6);
  }
}

TEST_CASE("more compute never hurts, and past the threshold never helps") {
  Rng rng(60006);
  for (int trial = 0; trial < 10; ++trial) {
    const std::vector<UserProfile> users =
        random_users(rng, 1 + static_cast<int>(rng.next_bits() % 4));
    Budgets budgets = demand_scaled_budgets(rng, users);
    const double limit = f_total_limit(users, budgets.bandwidth_total_hz,
                                       budgets.backhaul_total_bps);

    double prev = std::numeric_limits<double>::infinity();
    for (int k = 1; k <= 10; ++k) {
      budgets.compute_total_cps = limit * 0.02 * k * k;
      const double latency = solve(users, budgets).latency_s;
      REQUIRE(latency <= prev * (1.0 + 1e-9));
      prev = latency;
    }

    std::vector<double> saturated;
    for (double mult : {1.0, 2.0, 5.0, 10.0}) {
      budgets.compute_total_cps = limit * mult;
      saturated.push_back(solve(users, budgets).latency_s);
    }
    const auto [lo_it, hi_it] =
        std::minmax_element(saturated.begin(), saturated.end());
    REQUIRE(oracle::rel_gap(*lo_it, *hi_it) < 1e-6);
  }
}

TEST_CASE("relay-only solving matches the two-hop closed form") {
  Rng rng(60007);
  for (int trial = 0; trial < 20; ++trial) {
    const std::vector<UserProfile> users =
        random_users(rng, 1 + static_cast<int>(rng.next_bits() % 4));
    Budgets budgets = demand_scaled_budgets(rng, users);
    budgets.compute_total_cps = 0.0;
    const OrchestrationPlan plan = solve(users, budgets);
    double data_over_rate = 0.0, data = 0.0;
    for (const UserProfile& u : users) {
      data_over_rate += u.data_bits / u.spectral_efficiency;
      data += u.data_bits;
    }
    const double expected =
        std::max(data_over_rate / budgets.bandwidth_total_hz,
                 data / budgets.backhaul_total_bps);
    REQUIRE(oracle::rel_gap(plan.latency_s, expected) < 1e-7);
    for (const Allocation& a : plan.allocations) {
      REQUIRE(a.split == 0.0);
      REQUIRE(a.compute_cps == 0.0);
    }
  }
}

TEST_CASE("exhaustive search agrees with the closed-form split for one user") {
  const UserProfile u{1e6, 2000.0, 0.1, 1.2};
  const Budgets budgets{8e5, 3e5, 1.1e9, 0.0};
  const BruteForceDiagnostics diag = brute_force_search({u}, budgets, 60);
  const SplitOutcome split = optimal_split(
      budgets.bandwidth_total_hz, budgets.backhaul_total_bps,
      budgets.compute_total_cps, u);
  REQUIRE(diag.latency_split_rule == split.latency_s);
  REQUIRE(diag.latency_eta_grid >= split.latency_s * (1.0 - 1e-12));
  REQUIRE(diag.latency_eta_grid <= split.latency_s * (1.0 + 1e-3));
  REQUIRE(diag.plan.latency_s == split.latency_s);
}

TEST_CASE("exhaustive search tracks the solver on a two-user instance") {
  Rng rng(60008);
  const std::vector<UserProfile> users = random_users(rng, 2);
  const Budgets budgets = demand_scaled_budgets(rng, users);
  const OrchestrationPlan via_solver = solve(users, budgets);
  const BruteForceDiagnostics diag = brute_force_search(users, budgets, 50);
  REQUIRE(oracle::rel_gap(diag.latency_eta_grid, via_solver.latency_s) <
          0.01);
  REQUIRE(diag.plan.latency_s >= via_solver.latency_s * (1.0 - 1e-9));
}

TEST_CASE("storage-capped search") {
  const UserProfile u{100.0, 4.0, 0.25, 1.0};
  Budgets budgets{10.0, 8.0, 8.0, 0.0};
  // Unconstrained optimum needs 5 bits of buffer (compute-starved band).
  const BruteForceDiagnostics open = brute_force_search({u}, budgets, 50);
  REQUIRE(open.plan.per_user_storage_bits[0] ==
          doctest::Approx(5.0).epsilon(1e-9));

  budgets.storage_total_bits = 1000.0;  // slack cap changes nothing
  const BruteForceDiagnostics capped = brute_force_search({u}, budgets, 50);
  REQUIRE(capped.plan.latency_s == open.plan.latency_s);

  budgets.storage_total_bits = 2.0;  // below the least buffer any split needs
  CHECK_THROWS_AS(brute_force_search({u}, budgets, 50), Infeasible);
}

TEST_CASE("search preconditions") {
  Rng rng(60009);
  const std::vector<UserProfile> three = random_users(rng, 3);
  const Budgets budgets = demand_scaled_budgets(rng, three);
  CHECK_THROWS_AS(brute_force_search(three, budgets, 60), TooLarge);
  CHECK_THROWS_AS(brute_force_search({}, budgets, 60), EmptyScenario);
  CHECK_THROWS_AS(
      brute_force_search({three[0]}, budgets, 49), std::invalid_argument);
  CHECK_THROWS_AS(solve({}, budgets), EmptyScenario);
  CHECK_THROWS_AS(solve({three[0]}, budgets, -1.0), std::invalid_argument);
  Budgets dead = budgets;
  dead.bandwidth_total_hz = 0.0;
  CHECK_THROWS_AS(solve({three[0]}, dead), Infeasible);
}

}  // namespace
