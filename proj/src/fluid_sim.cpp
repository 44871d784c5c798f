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

#include "eih/fluid_sim.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "eih/errors.hpp"

namespace eih {

namespace {

double rel_gap(double a, double b) {
  if (a == b) {
    return 0.0;
  }
  return std::abs(a - b) / std::max(std::abs(a), std::abs(b));
}

}  // namespace

FlowTrace simulate(const Allocation& alloc, const UserProfile& user) {
  detail::check_user(user);
  detail::check_alloc(alloc);
  if (alloc.bandwidth_hz == 0.0) {
    throw NoAccessLink("zero bandwidth leaves the stream stranded");
  }

  const double access = alloc.bandwidth_hz * user.spectral_efficiency;
  const double relay = alloc.backhaul_bps;
  const double drain = alloc.compute_cps / user.intensity_cycles_per_bit;
  const double e = alloc.split;
  const double z = user.output_ratio;
  const double source_end = user.data_bits / access;

  double t = 0.0;
  double qc = 0.0;
  double qu = 0.0;
  bool source_on = true;

  FlowTrace trace;
  for (int step = 0; step < 16; ++step) {
    // Segment rates, clamped in topological order. An empty queue passes
    // its inflow straight through, capped by the stage rate.
    const double src = source_on ? access : 0.0;
    const double qc_in = e * src;
    const double qc_out = qc > 0.0 ? drain : std::min(drain, qc_in);
    const double qu_in = (1.0 - e) * src + z * qc_out;
    const double qu_out = qu > 0.0 ? relay : std::min(relay, qu_in);

    FlowEvent ev;
    ev.time_s = t;
    ev.queue_compute_bits = qc;
    ev.queue_upload_bits = qu;
    if (src > 0.0) ev.active_rate_labels.push_back("access");
    if (qc_out > 0.0) ev.active_rate_labels.push_back("compute");
    if (qu_out > 0.0) ev.active_rate_labels.push_back("backhaul");
    trace.events.push_back(ev);
    trace.peak_storage_bits = std::max(trace.peak_storage_bits, qc + qu);

    if (!source_on && qc == 0.0 && qu == 0.0) {
      trace.completion_s = t;
      return trace;
    }

    // Next breakpoint: source exhaustion or a queue hitting zero. Inflow
    // rates never increase between segments, so each of the three events can
    // fire at most once and the loop terminates within a handful of steps.
    const double dqc = qc_in - qc_out;
    const double dqu = qu_in - qu_out;
    double dt = std::numeric_limits<double>::infinity();
    if (source_on) {
      dt = std::min(dt, source_end - t);
    }
    if (qc > 0.0 && dqc < 0.0) {
      dt = std::min(dt, qc / -dqc);
    }
    if (qu > 0.0 && dqu < 0.0) {
      dt = std::min(dt, qu / -dqu);
    }
    if (!std::isfinite(dt)) {
      if (qc > 0.0 && drain == 0.0) {
        throw NoComputeCapacity(
            "data routed to the processor but its rate is zero");
      }
      if (qu > 0.0 && relay == 0.0) {
        throw NoBackhaul("bits remain for the satellite but backhaul is zero");
      }
      throw std::logic_error("stalled with a drainable queue");
    }

    // Advance, firing every transition that lands on this breakpoint. Queues
    // that cross are snapped to exactly zero; the source clock jumps to its
    // exhaustion time exactly rather than accumulating increments.
    const bool source_fires = source_on && source_end - t <= dt;
    const bool qc_fires = qc > 0.0 && dqc < 0.0 && qc / -dqc <= dt;
    const bool qu_fires = qu > 0.0 && dqu < 0.0 && qu / -dqu <= dt;
    qc = qc_fires ? 0.0 : qc + dqc * dt;
    qu = qu_fires ? 0.0 : qu + dqu * dt;
    t = source_fires ? source_end : t + dt;
    if (source_fires) {
      source_on = false;
    }
  }
  throw std::logic_error("fluid run exceeded its breakpoint budget");
}

ConformanceReport conformance_check(const Allocation& alloc,
                                    const UserProfile& user, double tol_rel) {
  if (!(tol_rel > 0.0)) {
    throw std::invalid_argument("tol_rel must be positive");
  }
  const FlowTrace trace = simulate(alloc, user);
  const double latency = upload_latency(alloc, user);
  const double storage = required_storage(alloc, user);

  ConformanceReport report;
  report.latency_delta_rel = rel_gap(trace.completion_s, latency);
  report.storage_delta_rel = rel_gap(trace.peak_storage_bits, storage);
  report.latency_match = report.latency_delta_rel < tol_rel;
  report.storage_match = report.storage_delta_rel < tol_rel;
  return report;
}

}  // namespace eih
