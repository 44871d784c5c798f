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

#include "eih/scenario.hpp"

#include <cmath>
#include <stdexcept>

#include "eih/rng.hpp"

namespace eih {

void check_config(const ScenarioConfig& config) {
  if (config.n_users < 1) {
    throw std::invalid_argument("n_users must be at least 1");
  }
  if (!(config.d_max_bits > 0.0)) {
    throw std::invalid_argument("d_max_bits must be positive");
  }
  if (!(config.rho_range[0] > 0.0) ||
      !(config.rho_range[1] >= config.rho_range[0])) {
    throw std::invalid_argument("rho_range must be positive and ordered");
  }
  if (!(config.zeta_range[0] > 0.0) || !(config.zeta_range[1] < 1.0) ||
      !(config.zeta_range[1] >= config.zeta_range[0])) {
    throw std::invalid_argument("zeta_range must lie inside (0, 1), ordered");
  }
  if (!(config.user_disc_radius_m >= 0.0)) {
    throw std::invalid_argument("user_disc_radius_m must be nonnegative");
  }
  if (!(config.uav_position.z > 0.0)) {
    throw std::invalid_argument("hub altitude must be positive");
  }
  if (config.mc_samples < 1) {
    throw std::invalid_argument("mc_samples must be at least 1");
  }
  if (!(config.channel.tx_power_w > 0.0) ||
      !(config.channel.noise_power_w > 0.0) ||
      !(config.channel.carrier_hz > 0.0) ||
      !(config.channel.light_speed > 0.0)) {
    throw std::invalid_argument("channel powers and rates must be positive");
  }
}

Scenario generate_scenario(const ScenarioConfig& config, std::uint64_t seed) {
  check_config(config);
  constexpr double kTwoPi = 6.28318530717958647692;

  Scenario scenario;
  scenario.config = config;
  scenario.budgets = config.budgets;
  scenario.seed = seed;
  scenario.users.reserve(config.n_users);
  scenario.user_positions.reserve(config.n_users);

  Rng rng(seed);
  for (int i = 0; i < config.n_users; ++i) {
    // sqrt keeps the areal density uniform over the disc.
    const double radius = config.user_disc_radius_m * std::sqrt(rng.uniform());
    const double angle = kTwoPi * rng.uniform();
    Position3D pos;
    pos.x = radius * std::cos(angle);
    pos.y = radius * std::sin(angle);
    pos.z = 0.0;

    UserProfile user;
    user.data_bits =
        rng.uniform(config.d_max_bits / 10.0, config.d_max_bits);
    user.intensity_cycles_per_bit =
        rng.uniform(config.rho_range[0], config.rho_range[1]);
    user.output_ratio =
        rng.uniform(config.zeta_range[0], config.zeta_range[1]);

    const LinkGeometry geom = link_geometry(pos, config.uav_position);
    const double gain = large_scale_gain(geom, config.channel);
    // Per-user substream so adding users never shifts earlier draws.
    user.spectral_efficiency = ergodic_spectral_efficiency(
        gain, config.channel, config.mc_samples,
        Rng::derive_seed(seed, static_cast<std::uint64_t>(i)));
    scenario.users.push_back(user);
    scenario.user_positions.push_back(pos);
  }
  return scenario;
}

}  // namespace eih
