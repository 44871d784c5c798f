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

#ifndef EIH_PROVISIONING_HPP_
#define EIH_PROVISIONING_HPP_

#include <optional>
#include <vector>

#include "eih/orchestrator.hpp"

namespace eih {

// Compute capacity beyond which adding cycles cannot lower the worst-case
// latency: (sum of rho_u * D_u) scaled by the binding communication budget
// ratio. Throws EmptyScenario; budgets must be positive.
double f_total_limit(const std::vector<UserProfile>& users,
                     double bandwidth_total_hz, double backhaul_total_bps);

// Latency floor with unlimited compute: the larger of the aggregate access
// and processed-backhaul bottlenecks. Same preconditions as f_total_limit.
double latency_floor(const std::vector<UserProfile>& users,
                     double bandwidth_total_hz, double backhaul_total_bps);

// Closed-form plan that attains the latency floor when the compute budget
// clears f_total_limit: bandwidth shares proportional to D_u/r_u, backhaul
// shares proportional to zeta_u*D_u, compute covering the shortfall, full
// processing. Throws ComputeBelowThreshold when the budget falls short.
OrchestrationPlan closed_form_plan(const std::vector<UserProfile>& users,
                                   const Budgets& budgets);

enum class ProvisioningVerdict {
  kImpossibleAtAnyCompute,
  kSufficient,
};

// The recommendation is the sufficiency threshold, not a minimum: some
// instances meet the floor with less compute. Callers should treat
// recommended_compute_cps as safe, not as tight.
struct ProvisioningAdvice {
  ProvisioningVerdict verdict = ProvisioningVerdict::kImpossibleAtAnyCompute;
  std::optional<double> recommended_compute_cps;
  std::optional<double> achieved_latency_s;
};

// Deadline triage: below the latency floor no compute budget helps; at or
// above it, f_total_limit cycles reach the floor. The boundary counts as
// attainable.
ProvisioningAdvice recommend_compute(double latency_threshold_s,
                                     const std::vector<UserProfile>& users,
                                     double bandwidth_total_hz,
                                     double backhaul_total_bps);

}  // namespace eih

#endif  // EIH_PROVISIONING_HPP_
