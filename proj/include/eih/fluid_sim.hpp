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

#ifndef EIH_FLUID_SIM_HPP_
#define EIH_FLUID_SIM_HPP_

#include <string>
#include <vector>

#include "eih/flow.hpp"

namespace eih {

// One breakpoint of the piecewise-linear run: queue levels at that instant
// and which flows carry data over the segment that starts there.
struct FlowEvent {
  double time_s = 0.0;
  double queue_compute_bits = 0.0;
  double queue_upload_bits = 0.0;
  std::vector<std::string> active_rate_labels;
};

struct FlowTrace {
  double completion_s = 0.0;
  double peak_storage_bits = 0.0;
  std::vector<FlowEvent> events;
};

// Event-driven fluid run of one stream through the hub: an access source
// feeding a compute queue (fraction split) and an upload queue (the rest plus
// shrunk compute output). Rates clamp when a queue is empty, resolved source
// to compute to upload within each segment, and every breakpoint is found by
// solving the linear crossing exactly; there is no time stepping.
//
// Throws NoAccessLink for zero bandwidth, NoBackhaul when bits remain for the
// satellite but the backhaul rate is zero, and NoComputeCapacity when bits
// are routed to a processor with zero rate.
FlowTrace simulate(const Allocation& alloc, const UserProfile& user);

struct ConformanceReport {
  bool latency_match = false;
  bool storage_match = false;
  double latency_delta_rel = 0.0;
  double storage_delta_rel = 0.0;
};

// Runs the simulator and compares against the closed-form latency and
// storage. A side matches when its relative gap is below tol_rel.
ConformanceReport conformance_check(const Allocation& alloc,
                                    const UserProfile& user, double tol_rel);

}  // namespace eih

#endif  // EIH_FLUID_SIM_HPP_
