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

#include "eih/provisioning.hpp"

#include <algorithm>
#include <stdexcept>

#include "eih/errors.hpp"

namespace eih {

namespace {

struct AggregateLoads {
  double data_over_rate = 0.0;   // sum of D_u / r_u
  double shrunk_data = 0.0;      // sum of zeta_u * D_u
  double compute_demand = 0.0;   // sum of rho_u * D_u
};

AggregateLoads aggregate(const std::vector<UserProfile>& users,
                         double bandwidth_total_hz,
                         double backhaul_total_bps) {
  if (users.empty()) {
    throw EmptyScenario("no users to provision for");
  }
  if (!(bandwidth_total_hz > 0.0) || !(backhaul_total_bps > 0.0)) {
    throw std::invalid_argument(
        "bandwidth and backhaul budgets must be positive");
  }
  AggregateLoads agg;
  for (const UserProfile& u : users) {
    detail::check_user(u);
    agg.data_over_rate += u.data_bits / u.spectral_efficiency;
    agg.shrunk_data += u.output_ratio * u.data_bits;
    agg.compute_demand += u.intensity_cycles_per_bit * u.data_bits;
  }
  return agg;
}

}  // namespace

double f_total_limit(const std::vector<UserProfile>& users,
                     double bandwidth_total_hz, double backhaul_total_bps) {
  const AggregateLoads agg =
      aggregate(users, bandwidth_total_hz, backhaul_total_bps);
  const double ratio = std::min(bandwidth_total_hz / agg.data_over_rate,
                                backhaul_total_bps / agg.shrunk_data);
  return agg.compute_demand * ratio;
}

double latency_floor(const std::vector<UserProfile>& users,
                     double bandwidth_total_hz, double backhaul_total_bps) {
  const AggregateLoads agg =
      aggregate(users, bandwidth_total_hz, backhaul_total_bps);
  return std::max(agg.data_over_rate / bandwidth_total_hz,
                  agg.shrunk_data / backhaul_total_bps);
}

OrchestrationPlan closed_form_plan(const std::vector<UserProfile>& users,
                                   const Budgets& budgets) {
  const AggregateLoads agg = aggregate(users, budgets.bandwidth_total_hz,
                                       budgets.backhaul_total_bps);
  const double ratio = std::min(budgets.bandwidth_total_hz / agg.data_over_rate,
                                budgets.backhaul_total_bps / agg.shrunk_data);
  if (budgets.compute_total_cps < agg.compute_demand * ratio) {
    throw ComputeBelowThreshold(
        "compute budget sits below the sufficiency threshold");
  }

  OrchestrationPlan plan;
  plan.latency_s = std::max(agg.data_over_rate / budgets.bandwidth_total_hz,
                            agg.shrunk_data / budgets.backhaul_total_bps);
  for (const UserProfile& u : users) {
    Allocation alloc;
    alloc.bandwidth_hz = (u.data_bits / u.spectral_efficiency) * ratio;
    alloc.backhaul_bps = u.output_ratio * u.data_bits * ratio;
    const double access = alloc.bandwidth_hz * u.spectral_efficiency;
    alloc.compute_cps = std::max(
        0.0, u.intensity_cycles_per_bit * (access - alloc.backhaul_bps) /
                 (1.0 - u.output_ratio));
    alloc.split = std::clamp((access - alloc.backhaul_bps) /
                                 ((1.0 - u.output_ratio) * access),
                             0.0, 1.0);
    plan.allocations.push_back(alloc);
    // Everything is processed and the shrunk stream saturates its backhaul
    // share, so each user finishes at the common floor with no buffering.
    plan.per_user_latency_s.push_back(u.data_bits / access);
    plan.per_user_storage_bits.push_back(0.0);
    plan.budget_usage.bandwidth_hz += alloc.bandwidth_hz;
    plan.budget_usage.backhaul_bps += alloc.backhaul_bps;
    plan.budget_usage.compute_cps += alloc.compute_cps;
  }
  return plan;
}

ProvisioningAdvice recommend_compute(double latency_threshold_s,
                                     const std::vector<UserProfile>& users,
                                     double bandwidth_total_hz,
                                     double backhaul_total_bps) {
  if (!(latency_threshold_s > 0.0)) {
    throw std::invalid_argument("latency threshold must be positive");
  }
  const double floor =
      latency_floor(users, bandwidth_total_hz, backhaul_total_bps);
  ProvisioningAdvice advice;
  if (latency_threshold_s < floor) {
    advice.verdict = ProvisioningVerdict::kImpossibleAtAnyCompute;
    return advice;
  }
  advice.verdict = ProvisioningVerdict::kSufficient;
  advice.recommended_compute_cps =
      f_total_limit(users, bandwidth_total_hz, backhaul_total_bps);
  advice.achieved_latency_s = floor;
  return advice;
}

}  // namespace eih
