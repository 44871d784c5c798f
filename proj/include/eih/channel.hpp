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

#ifndef EIH_CHANNEL_HPP_
#define EIH_CHANNEL_HPP_

#include <cstdint>

namespace eih {

struct Position3D {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;  // altitude, meters, >= 0
};

struct LinkGeometry {
  double distance_m = 0.0;
  double elevation_deg = 0.0;
};

// Air-to-ground channel parameters: probabilistic line-of-sight path loss
// plus small-scale Rayleigh fading.
struct ChannelParams {
  double eta_los = 0.1;       // excess loss in line of sight, dB
  double eta_nlos = 21.0;     // excess loss without line of sight, dB
  double a = 5.0188;          // sigmoid steepness of the LoS probability
  double b = 0.3511;          // sigmoid midpoint scale of the LoS probability
  double carrier_hz = 5.8e9;
  double light_speed = 3.0e8;
  double tx_power_w = 1.0;
  double noise_power_w = 3.9810717055349695e-15;  // -114 dBm
};

// Straight-line distance and elevation angle (degrees) from a ground node to
// the aerial hub. Throws DegenerateGeometry when the endpoints coincide.
LinkGeometry link_geometry(const Position3D& user, const Position3D& uav);

// Mean amplitude gain of the air-to-ground link: the LoS-probability-weighted
// excess loss on top of free space, converted out of dB. Dimensionless, in
// (0, 1) for any positive distance.
double large_scale_gain(const LinkGeometry& geom, const ChannelParams& params);

// Ergodic spectral efficiency E[log2(1 + snr * |s|^2)] in bits/s/Hz, with s a
// unit-power Rayleigh fading coefficient, estimated by Monte Carlo over
// n_samples draws. Deterministic for a fixed seed.
double ergodic_spectral_efficiency(double gain, const ChannelParams& params,
                                   int n_samples, std::uint64_t seed);

}  // namespace eih

#endif  // EIH_CHANNEL_HPP_
