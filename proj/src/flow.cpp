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

#include "eih/flow.hpp"

#include <limits>
#include <stdexcept>

#include "eih/errors.hpp"

namespace eih {

namespace detail {

void check_user(const UserProfile& user) {
  if (!(user.data_bits > 0.0)) {
    throw std::invalid_argument("data_bits must be positive");
  }
  if (!(user.intensity_cycles_per_bit > 0.0)) {
    throw std::invalid_argument("intensity_cycles_per_bit must be positive");
  }
  if (!(user.output_ratio > 0.0 && user.output_ratio < 1.0)) {
    throw std::invalid_argument("output_ratio must lie in (0, 1)");
  }
  if (!(user.spectral_efficiency > 0.0)) {
    throw std::invalid_argument("spectral_efficiency must be positive");
  }
}

void check_alloc(const Allocation& alloc) {
  if (!(alloc.bandwidth_hz >= 0.0) || !(alloc.backhaul_bps >= 0.0) ||
      !(alloc.compute_cps >= 0.0)) {
    throw std::invalid_argument("resource rates must be nonnegative");
  }
  if (!(alloc.split >= 0.0 && alloc.split <= 1.0)) {
    throw std::invalid_argument("split must lie in [0, 1]");
  }
}

}  // namespace detail

namespace {

using detail::check_alloc;
using detail::check_user;

// The guard structure shared by the latency and storage forms. Comparisons
// are exact on purpose: at every guard boundary the adjacent formulas agree,
// so the partition stays total and deterministic without tolerances.
//
// access = B*r, drain = F/rho, relay = R^S. With split e and ratio z:
//   family I  (e*access >= drain): the processor backlogs.
//     Ia (z*drain + (1-e)*access >= relay): the backhaul backlogs too.
//     Ib: the backhaul keeps up; the processor finishes last.
//   family II (e*access < drain): the processor keeps up.
//     IIa ((z*e + 1-e)*access >= relay): the backhaul backlogs.
//     IIb: every stage keeps up; the access link finishes last.
enum class Regime { kBothQueue, kComputeQueue, kUploadQueue, kNoQueue };

Regime classify(double access, double relay, double drain, double e,
                double z) {
  if (e * access >= drain) {
    if (z * drain + (1.0 - e) * access >= relay) {
      return Regime::kBothQueue;
    }
    return Regime::kComputeQueue;
  }
  if ((z * e + 1.0 - e) * access >= relay) {
    return Regime::kUploadQueue;
  }
  return Regime::kNoQueue;
}

}  // namespace

double upload_latency(const Allocation& alloc, const UserProfile& user) {
  check_user(user);
  check_alloc(alloc);
  if (alloc.bandwidth_hz == 0.0) {
    throw NoAccessLink("zero bandwidth leaves the stream stranded");
  }
  const double d = user.data_bits;
  const double z = user.output_ratio;
  const double e = alloc.split;
  const double access = alloc.bandwidth_hz * user.spectral_efficiency;
  const double relay = alloc.backhaul_bps;
  const double drain = alloc.compute_cps / user.intensity_cycles_per_bit;
  const double shrunk = z * e + 1.0 - e;  // delivered fraction per input bit

  switch (classify(access, relay, drain, e, z)) {
    case Regime::kBothQueue:
      if (drain >= e * relay / shrunk) {
        return d * shrunk / relay;  // backhaul empties last
      }
      return e * d / drain;  // processor empties last
    case Regime::kComputeQueue:
      if (e == 0.0) {
        // Nothing is routed through the processor (drain is necessarily zero
        // here), so the access link alone sets the finish time.
        return d / access;
      }
      return e * d / drain;
    case Regime::kUploadQueue:
      return d * shrunk / relay;
    case Regime::kNoQueue:
      return d / access;
  }
  throw std::logic_error("unreachable latency regime");
}

double required_storage(const Allocation& alloc, const UserProfile& user) {
  check_user(user);
  check_alloc(alloc);
  if (alloc.bandwidth_hz == 0.0) {
    throw NoAccessLink("zero bandwidth leaves the stream stranded");
  }
  const double d = user.data_bits;
  const double z = user.output_ratio;
  const double e = alloc.split;
  const double access = alloc.bandwidth_hz * user.spectral_efficiency;
  const double relay = alloc.backhaul_bps;
  const double drain = alloc.compute_cps / user.intensity_cycles_per_bit;
  const double receive_time = d / access;

  // Peak backlog accrues while the access link still feeds the hub; each
  // regime leaves a different mix of raw and processed bits behind at that
  // moment. Guards match upload_latency, so the two stay branch-consistent.
  switch (classify(access, relay, drain, e, z)) {
    case Regime::kBothQueue:
      return receive_time * (access - relay - (1.0 - z) * drain);
    case Regime::kComputeQueue:
      return receive_time * (e * access - drain);
    case Regime::kUploadQueue:
      return receive_time * ((z * e + 1.0 - e) * access - relay);
    case Regime::kNoQueue:
      return 0.0;
  }
  throw std::logic_error("unreachable storage regime");
}

SplitOutcome optimal_split(double bandwidth_hz, double backhaul_bps,
                           double compute_cps, const UserProfile& user) {
  check_user(user);
  if (!(backhaul_bps >= 0.0) || !(compute_cps >= 0.0)) {
    throw std::invalid_argument("resource rates must be nonnegative");
  }
  if (!(bandwidth_hz > 0.0)) {
    throw NoAccessLink("zero bandwidth leaves the stream stranded");
  }
  const double d = user.data_bits;
  const double z = user.output_ratio;
  const double access = bandwidth_hz * user.spectral_efficiency;
  const double relay = backhaul_bps;
  const double drain = compute_cps / user.intensity_cycles_per_bit;

  SplitOutcome out;
  if (access < relay) {
    // Backhaul outruns the access link; processing only adds delay.
    out.split = 0.0;
    out.latency_s = d / access;
    out.storage_bits = 0.0;
    return out;
  }
  if (access < relay / z) {
    const double balanced = (access - relay) / (1.0 - z);
    if (drain < balanced) {
      // Short on cycles: process as much as the processor can keep up with.
      out.split = drain / (drain * (1.0 - z) + relay);
      out.latency_s = d / (drain * (1.0 - z) + relay);
      out.storage_bits = (d / access) * (access - relay - (1.0 - z) * drain);
    } else {
      // Enough cycles to shrink the surplus; the access link sets the pace
      // and nothing accumulates.
      out.split = (access - relay) / ((1.0 - z) * access);
      out.latency_s = d / access;
      out.storage_bits = 0.0;
    }
    return out;
  }
  // access >= relay / z: even fully processed output saturates the backhaul.
  if (drain < relay / z) {
    out.split = drain / (drain * (1.0 - z) + relay);
    out.latency_s = d / (drain * (1.0 - z) + relay);
    out.storage_bits = (d / access) * (access - relay - (1.0 - z) * drain);
  } else if (drain < access) {
    out.split = 1.0;
    out.latency_s = z * d / relay;
    out.storage_bits = (d / access) * (access - relay - (1.0 - z) * drain);
  } else {
    out.split = 1.0;
    out.latency_s = z * d / relay;
    out.storage_bits = (d / access) * (z * access - relay);
  }
  return out;
}

}  // namespace eih
