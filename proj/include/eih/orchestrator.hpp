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

#ifndef EIH_ORCHESTRATOR_HPP_
#define EIH_ORCHESTRATOR_HPP_

#include <optional>
#include <vector>

#include "eih/flow.hpp"

namespace eih {

struct Budgets {
  double bandwidth_total_hz = 0.0;
  double backhaul_total_bps = 0.0;
  double compute_total_cps = 0.0;
  double storage_total_bits = 0.0;  // diagnostic; 0 means unconstrained
};

struct BudgetUsage {
  double bandwidth_hz = 0.0;
  double backhaul_bps = 0.0;
  double compute_cps = 0.0;
  double storage_bits = 0.0;
};

struct OrchestrationPlan {
  double latency_s = 0.0;
  std::vector<Allocation> allocations;
  std::vector<double> per_user_latency_s;
  std::vector<double> per_user_storage_bits;
  BudgetUsage budget_usage;
};

struct FeasibilityResult {
  bool feasible = false;
  std::optional<std::vector<double>> witness;  // per-user backhaul, bps
};

// Can every stream finish within T seconds? Bandwidth is pinned to the
// smallest share that meets T (extra bandwidth helps no constraint), which
// leaves a box of admissible backhaul rates per user and two coupling
// budgets: total backhaul, and total compute where pushing a user's backhaul
// up by one bit/s saves c_u = rho_u/(1-zeta_u) cycles/s. That is a
// fractional knapsack: the verdict compares the smallest achievable compute
// load against the budget, and the witness raises backhaul in descending c_u
// order (ties by user index) until the compute budget is met.
//
// Throws InvalidLatency for T <= 0. An empty user list is trivially
// feasible. The verdict is monotone: feasible at T implies feasible at any
// larger T.
FeasibilityResult feasible_at(double latency_s,
                              const std::vector<UserProfile>& users,
                              const Budgets& budgets);

// Minimizes the worst per-user latency by bisecting on the common deadline
// with feasible_at as the certifier, then reads the plan off the witness:
// bandwidth from the tight deadline, compute from the backhaul shortfall,
// and the split from the latency-minimal closed form at that operating
// point, where the buffer requirement is exactly zero.
//
// tol_rel bounds the bracket width (hi - lo)/lo at return. Throws
// EmptyScenario, Infeasible (no deadline certifiable, e.g. zero bandwidth or
// backhaul budget), or std::invalid_argument for malformed inputs.
OrchestrationPlan solve(const std::vector<UserProfile>& users,
                        const Budgets& budgets, double tol_rel = 1e-8);

// Exhaustive small-instance search used as the solver's oracle: grids the
// budget fractions per user and, in every cell, evaluates both the
// closed-form best split and a dense split grid on the raw latency and
// storage forms. Coarse-to-fine: a full-range pass locates the best cell,
// then two shrinking local passes and a final dense split sweep polish it.
// Intended for tests; cost grows with the cube of grid_points.
//
// Throws TooLarge beyond 2 users, EmptyScenario for none, and
// std::invalid_argument for grid_points < 50.
OrchestrationPlan brute_force_solve(const std::vector<UserProfile>& users,
                                    const Budgets& budgets, int grid_points);

// Search diagnostics for cross-route comparisons: the best latency found via
// the closed-form split rule and via the raw split grid, separately.
struct BruteForceDiagnostics {
  OrchestrationPlan plan;
  double latency_split_rule = 0.0;
  double latency_eta_grid = 0.0;
};

BruteForceDiagnostics brute_force_search(const std::vector<UserProfile>& users,
                                         const Budgets& budgets,
                                         int grid_points);

}  // namespace eih

#endif  // EIH_ORCHESTRATOR_HPP_
