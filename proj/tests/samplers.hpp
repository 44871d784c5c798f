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

// Targeted samplers for the five stage-rate regimes of a single stream, so
// randomized comparisons provably visit every branch instead of hoping.

#ifndef EIH_TESTS_SAMPLERS_HPP_
#define EIH_TESTS_SAMPLERS_HPP_

#include <cmath>

#include "eih/flow.hpp"
#include "eih/rng.hpp"

namespace sampler {

// Regime indices, in guard order:
//   0 both queues, backhaul drains last
//   1 both queues, processor drains last
//   2 compute queue only
//   3 upload queue only
//   4 no queue
inline int classify(const eih::Allocation& a, const eih::UserProfile& u) {
  const double access = a.bandwidth_hz * u.spectral_efficiency;
  const double drain = a.compute_cps / u.intensity_cycles_per_bit;
  const double relay = a.backhaul_bps;
  const double e = a.split;
  const double z = u.output_ratio;
  const double shrunk = z * e + 1.0 - e;
  if (e * access >= drain) {
    if (z * drain + (1.0 - e) * access >= relay) {
      return drain >= e * relay / shrunk ? 0 : 1;
    }
    return 2;
  }
  return shrunk * access >= relay ? 3 : 4;
}

inline eih::UserProfile user(eih::Rng& rng) {
  eih::UserProfile u;
  u.data_bits = std::exp(rng.uniform(std::log(1e3), std::log(1e9)));
  u.intensity_cycles_per_bit = rng.uniform(100.0, 10000.0);
  u.output_ratio = rng.uniform(0.005, 0.95);
  u.spectral_efficiency =
      std::exp(rng.uniform(std::log(0.05), std::log(8.0)));
  return u;
}

// An allocation landing in the requested regime for this user. The guard
// variables are chosen inside the regime's region with margins, so the
// construction cannot drift across a boundary through rounding.
inline eih::Allocation alloc_in_regime(eih::Rng& rng,
                                       const eih::UserProfile& u,
                                       int regime) {
  const double z = u.output_ratio;
  const double access = std::exp(rng.uniform(std::log(1e2), std::log(1e7)));
  eih::Allocation a;
  a.bandwidth_hz = access / u.spectral_efficiency;

  switch (regime) {
    case 0: {  // drain <= e access, relay <= min(second guard, drain bound)
      const double e = rng.uniform(0.05, 1.0);
      const double drain = e * access * rng.uniform(0.05, 0.98);
      const double shrunk = z * e + 1.0 - e;
      const double cap = std::fmin(z * drain + (1.0 - e) * access,
                                   drain * shrunk / e);
      a.split = e;
      a.compute_cps = drain * u.intensity_cycles_per_bit;
      a.backhaul_bps = cap * rng.uniform(0.05, 0.95);
      break;
    }
    case 1: {  // like 0 but relay above the drain bound; needs e, theta < 1
      const double e = rng.uniform(0.05, 0.95);
      const double drain = e * access * rng.uniform(0.05, 0.9);
      const double shrunk = z * e + 1.0 - e;
      const double lo = drain * shrunk / e;
      const double hi = z * drain + (1.0 - e) * access;
      a.split = e;
      a.compute_cps = drain * u.intensity_cycles_per_bit;
      a.backhaul_bps = lo + (hi - lo) * rng.uniform(0.05, 0.95);
      break;
    }
    case 2: {  // drain <= e access, relay beyond the second guard
      const double e = rng.uniform(0.05, 1.0);
      const double drain = e * access * rng.uniform(0.05, 0.98);
      a.split = e;
      a.compute_cps = drain * u.intensity_cycles_per_bit;
      a.backhaul_bps =
          (z * drain + (1.0 - e) * access) * rng.uniform(1.05, 3.0);
      break;
    }
    case 3: {  // drain above e access, backhaul below the shrunk stream
      const double e = rng.uniform(0.0, 1.0);
      const double drain = (e * access + 1.0) * rng.uniform(1.05, 5.0);
      const double shrunk = z * e + 1.0 - e;
      a.split = e;
      a.compute_cps = drain * u.intensity_cycles_per_bit;
      a.backhaul_bps = shrunk * access * rng.uniform(0.05, 0.95);
      break;
    }
    default: {  // no queue: both downstream stages keep up
      const double e = rng.uniform(0.0, 1.0);
      const double drain = (e * access + 1.0) * rng.uniform(1.05, 5.0);
      const double shrunk = z * e + 1.0 - e;
      a.split = e;
      a.compute_cps = drain * u.intensity_cycles_per_bit;
      a.backhaul_bps = shrunk * access * rng.uniform(1.05, 3.0);
      break;
    }
  }
  return a;
}

// Exact-boundary and corner operating points: unit intensity and spectral
// efficiency with power-of-two rates make every guard comparison exact.
inline void boundary_tuple(eih::Rng& rng, eih::Allocation* a,
                           eih::UserProfile* u) {
  u->data_bits = 1024.0;
  u->intensity_cycles_per_bit = 1.0;
  u->output_ratio = 0.5;
  u->spectral_efficiency = 1.0;
  const double access = 16.0;
  a->bandwidth_hz = access;
  switch (rng.next_bits() % 6) {
    case 0:  // idle processor, relay faster than access
      a->split = 0.0;
      a->compute_cps = 0.0;
      a->backhaul_bps = 32.0;
      break;
    case 1:  // idle processor, relay slower than access
      a->split = 0.0;
      a->compute_cps = 0.0;
      a->backhaul_bps = 8.0;
      break;
    case 2:  // drain exactly at the split stream rate
      a->split = 0.5;
      a->compute_cps = 8.0;
      a->backhaul_bps = 32.0;
      break;
    case 3:  // relay exactly at the shrunk stream rate
      a->split = 0.5;
      a->compute_cps = 1024.0;
      a->backhaul_bps = 12.0;  // (0.5*0.5 + 0.5) * 16
      break;
    case 4:  // everything processed, drain at the access rate
      a->split = 1.0;
      a->compute_cps = 16.0;
      a->backhaul_bps = 8.0;  // exactly z * access
      break;
    default:  // second guard exactly tight: z drain + (1-e) access = relay
      a->split = 0.5;
      a->compute_cps = 4.0;
      a->backhaul_bps = 10.0;  // 0.5*4 + 0.5*16
      break;
  }
}

}  // namespace sampler

#endif  // EIH_TESTS_SAMPLERS_HPP_
