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

#ifndef EIH_SCHEMES_HPP_
#define EIH_SCHEMES_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include "eih/scenario.hpp"

namespace eih {

// The benchmarked strategies:
//   proposed          joint concurrent optimization (the full solver)
//   no_mec            pure relay: zero compute, zero processing fraction
//   sequential_opt    stage latencies add up (receive, process, forward in
//                     turn); resources and per-user vertex splits optimized
//   proposed_equal    concurrent operation, budgets split equally, only the
//                     processing fraction optimized per user
//   sequential_equal  sequential operation on equal budget shares
struct ResultRow {
  std::string scheme_name;
  std::uint64_t seed = 0;
  double latency_s = 0.0;
  std::vector<double> per_user_latency_s;
  std::vector<double> per_user_storage_bits;
  BudgetUsage budget_usage;
};

// Runs one strategy on a scenario. Scheme names are the five strings above;
// anything else throws UnknownScheme.
ResultRow run_scheme(const Scenario& scenario, const std::string& scheme);

// The five scheme names in canonical (reporting) order.
const std::vector<std::string>& scheme_names();

}  // namespace eih

#endif  // EIH_SCHEMES_HPP_
