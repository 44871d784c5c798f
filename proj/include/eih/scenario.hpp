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

#ifndef EIH_SCENARIO_HPP_
#define EIH_SCENARIO_HPP_

#include <array>
#include <cstdint>
#include <vector>

#include "eih/channel.hpp"
#include "eih/orchestrator.hpp"

namespace eih {

// Scenario knobs with the evaluation defaults baked in: four users on a
// 1 km disc under a hub at 1 km altitude, 10..100 Mbit streams, and the
// C-band channel with -114 dBm noise.
struct ScenarioConfig {
  int n_users = 4;
  double d_max_bits = 1e8;  // stream sizes drawn from [d_max/10, d_max]
  std::array<double, 2> rho_range = {1000.0, 5000.0};
  std::array<double, 2> zeta_range = {0.01, 0.1};
  Position3D uav_position = {0.0, 0.0, 1000.0};
  double user_disc_radius_m = 1000.0;
  ChannelParams channel;
  Budgets budgets = {5e5, 5e5, 5e9, 0.0};
  int mc_samples = 1000;
  std::uint64_t seed = 1;
};

struct Scenario {
  std::vector<UserProfile> users;
  Budgets budgets;
  ScenarioConfig config;
  std::uint64_t seed = 0;
  // Ground positions of generated users, index-aligned with users. Left
  // empty when users are supplied explicitly instead of drawn.
  std::vector<Position3D> user_positions;
};

// Draws users uniformly on the disc, their stream parameters uniformly from
// the configured ranges, and estimates each spectral efficiency by Monte
// Carlo on a per-user substream. Identical (config, seed) pairs produce
// identical scenarios on every platform.
Scenario generate_scenario(const ScenarioConfig& config, std::uint64_t seed);

// Throws std::invalid_argument when a config field is out of range.
void check_config(const ScenarioConfig& config);

}  // namespace eih

#endif  // EIH_SCENARIO_HPP_
