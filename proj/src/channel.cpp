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

#include "eih/channel.hpp"

#include <cmath>

#include "eih/errors.hpp"
#include "eih/rng.hpp"

namespace eih {

namespace {
constexpr double kPi = 3.14159265358979323846;
constexpr double kRadToDeg = 180.0 / kPi;
}  // namespace

LinkGeometry link_geometry(const Position3D& user, const Position3D& uav) {
  const double dx = uav.x - user.x;
  const double dy = uav.y - user.y;
  const double dz = uav.z - user.z;
  const double dist = std::sqrt(dx * dx + dy * dy + dz * dz);
  if (dist == 0.0) {
    throw DegenerateGeometry("user and hub occupy the same point");
  }
  LinkGeometry geom;
  geom.distance_m = dist;
  geom.elevation_deg = std::asin(dz / dist) * kRadToDeg;
  return geom;
}

double large_scale_gain(const LinkGeometry& geom, const ChannelParams& params) {
  if (geom.distance_m <= 0.0) {
    throw DegenerateGeometry("link distance must be positive");
  }
  const double theta = geom.elevation_deg;
  // LoS probability is a sigmoid in the elevation angle, in degrees.
  const double p_los =
      1.0 / (1.0 + params.a * std::exp(-params.b * (theta - params.a)));
  const double excess_db =
      p_los * (params.eta_los - params.eta_nlos) + params.eta_nlos;
  const double fspl_db =
      20.0 * std::log10(4.0 * kPi * params.carrier_hz * geom.distance_m /
                        params.light_speed);
  // Amplitude gain, hence the /20 rather than /10.
  return std::pow(10.0, -(excess_db + fspl_db) / 20.0);
}

double ergodic_spectral_efficiency(double gain, const ChannelParams& params,
                                   int n_samples, std::uint64_t seed) {
  if (gain <= 0.0) {
    throw DegenerateGeometry("channel gain must be positive");
  }
  if (n_samples <= 0) {
    throw std::invalid_argument("sample count must be positive");
  }
  const double snr =
      params.tx_power_w * gain * gain / params.noise_power_w;
  Rng rng(seed);
  double acc = 0.0;
  for (int i = 0; i < n_samples; ++i) {
    const double re = rng.gaussian();
    const double im = rng.gaussian();
    // |s|^2 with E[|s|^2] = 1: exponential with unit mean.
    const double fade = 0.5 * (re * re + im * im);
    acc += std::log2(1.0 + snr * fade);
  }
  return acc / static_cast<double>(n_samples);
}

}  // namespace eih
