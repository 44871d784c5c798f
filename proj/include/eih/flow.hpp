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

#ifndef EIH_FLOW_HPP_
#define EIH_FLOW_HPP_

namespace eih {

// One sensing stream. data_bits arrive over the access link, every processed
// bit costs intensity_cycles_per_bit cycles and shrinks to output_ratio of
// its size, and spectral_efficiency converts hub bandwidth into access rate.
struct UserProfile {
  double data_bits = 0.0;               // D > 0
  double intensity_cycles_per_bit = 0.0;  // rho > 0
  double output_ratio = 0.0;            // zeta in (0, 1)
  double spectral_efficiency = 0.0;     // r > 0, bits/s/Hz
};

// Resources granted to one stream, plus the fraction routed through the
// onboard processor. The unprocessed fraction (1 - split) is relayed as is.
struct Allocation {
  double bandwidth_hz = 0.0;
  double backhaul_bps = 0.0;
  double compute_cps = 0.0;
  double split = 0.0;  // eta in [0, 1]
};

struct SplitOutcome {
  double split = 0.0;
  double latency_s = 0.0;
  double storage_bits = 0.0;
};

// Completion time of the stream under steady concurrent operation: receive,
// process, and forward overlap, and the slowest stage chain dominates. The
// result is +infinity when a stage the routing depends on has zero rate.
// Throws NoAccessLink when alloc.bandwidth_hz is zero.
double upload_latency(const Allocation& alloc, const UserProfile& user);

// Peak number of bits parked at the hub while the stream drains, for the same
// operating point as upload_latency. Zero whenever the downstream stages keep
// up with the access link.
double required_storage(const Allocation& alloc, const UserProfile& user);

// Latency-minimal processing fraction for fixed resources, with the buffer
// requirement at that fraction. Among latency-equal fractions the returned
// one also minimizes storage.
SplitOutcome optimal_split(double bandwidth_hz, double backhaul_bps,
                           double compute_cps, const UserProfile& user);

namespace detail {
// Shared input validation; throws std::invalid_argument on violations.
void check_user(const UserProfile& user);
void check_alloc(const Allocation& alloc);
}  // namespace detail

}  // namespace eih

#endif  // EIH_FLOW_HPP_
