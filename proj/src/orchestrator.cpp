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

#include "eih/orchestrator.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

#include "eih/errors.hpp"
#include "eih/provisioning.hpp"

namespace eih {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void check_budgets(const Budgets& budgets) {
  if (!(budgets.bandwidth_total_hz >= 0.0) ||
      !(budgets.backhaul_total_bps >= 0.0) ||
      !(budgets.compute_total_cps >= 0.0) ||
      !(budgets.storage_total_bits >= 0.0)) {
    throw std::invalid_argument("budgets must be nonnegative");
  }
}

void check_users(const std::vector<UserProfile>& users) {
  for (const UserProfile& user : users) {
    detail::check_user(user);
  }
}

// Users sorted by descending compute saved per bit/s of extra backhaul,
// ties by ascending index so runs are reproducible.
std::vector<std::size_t> savings_order(const std::vector<double>& c) {
  std::vector<std::size_t> order(c.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(),
            [&c](std::size_t a, std::size_t b) {
              if (c[a] != c[b]) return c[a] > c[b];
              return a < b;
            });
  return order;
}

}  // namespace

FeasibilityResult feasible_at(double latency_s,
                              const std::vector<UserProfile>& users,
                              const Budgets& budgets) {
  if (!(latency_s > 0.0) || !std::isfinite(latency_s)) {
    throw InvalidLatency("deadline must be a positive finite number");
  }
  check_budgets(budgets);
  check_users(users);

  const std::size_t n = users.size();
  std::vector<double> lo(n), hi(n), c(n);
  double bandwidth_sum = 0.0;
  double lo_sum = 0.0;
  double load_at_lo = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const UserProfile& u = users[i];
    bandwidth_sum += u.data_bits / (latency_s * u.spectral_efficiency);
    lo[i] = u.output_ratio * u.data_bits / latency_s;
    hi[i] = u.data_bits / latency_s;
    c[i] = u.intensity_cycles_per_bit / (1.0 - u.output_ratio);
    lo_sum += lo[i];
    load_at_lo += c[i] * (hi[i] - lo[i]);
  }
  if (bandwidth_sum > budgets.bandwidth_total_hz) {
    return {false, std::nullopt};
  }
  if (lo_sum > budgets.backhaul_total_bps) {
    return {false, std::nullopt};
  }

  // Verdict: the smallest compute load reachable by spending the whole
  // backhaul surplus on the best savers. This is a single comparison against
  // the compute budget, so the answer is monotone in the deadline and in the
  // budget; the witness below must not influence it, because its raise
  // amounts are capped by a quotient whose rounding could flip a comparison
  // that lands exactly on the budget.
  const std::vector<std::size_t> order = savings_order(c);
  double slack = budgets.backhaul_total_bps - lo_sum;
  // Summing the residual load per user (not subtracting raises from the
  // total) makes a complete raise contribute exactly zero, so a zero compute
  // budget is accepted whenever the surplus covers every user.
  double min_load = 0.0;
  for (std::size_t i : order) {
    const double full = hi[i] - lo[i];
    const double amount = std::min(full, std::max(slack, 0.0));
    min_load += c[i] * (full - amount);
    slack -= amount;
  }
  if (min_load > budgets.compute_total_cps) {
    return {false, std::nullopt};
  }

  // Witness: raise backhaul only as far as the compute budget requires, so
  // the plan recovered from it spends no more compute than necessary.
  std::vector<double> witness = lo;
  double used = load_at_lo;
  slack = budgets.backhaul_total_bps - lo_sum;
  for (std::size_t i : order) {
    if (used <= budgets.compute_total_cps) break;
    const double full = hi[i] - witness[i];
    // With no compute at all every raise must be complete; the quotient cap
    // would only smear that with the rounding noise of the running total.
    const double quota =
        budgets.compute_total_cps > 0.0
            ? (used - budgets.compute_total_cps) / c[i]
            : std::numeric_limits<double>::infinity();
    const double amount = std::min({full, slack, quota});
    if (amount > 0.0) {
      // A complete raise lands exactly on hi so the recovered plan can
      // report a genuinely compute-free user.
      witness[i] = amount == full ? hi[i] : witness[i] + amount;
      slack -= amount;
      used -= c[i] * amount;
    }
  }
  return {true, std::move(witness)};
}

namespace {

// Reads the plan off a feasibility witness. Bandwidth is deadline-tight, the
// compute grant covers exactly the backhaul shortfall, and the split is the
// zero-buffer representative of the latency-minimal interval at that point,
// so the reported per-user storage is exactly zero by construction.
OrchestrationPlan plan_from_witness(double latency_s,
                                    const std::vector<UserProfile>& users,
                                    const std::vector<double>& witness) {
  OrchestrationPlan plan;
  plan.latency_s = latency_s;
  const std::size_t n = users.size();
  plan.allocations.reserve(n);
  plan.per_user_latency_s.reserve(n);
  plan.per_user_storage_bits.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    const UserProfile& u = users[i];
    Allocation alloc;
    alloc.bandwidth_hz = u.data_bits / (latency_s * u.spectral_efficiency);
    alloc.backhaul_bps = witness[i];
    const double access = alloc.bandwidth_hz * u.spectral_efficiency;
    // Shortfall is measured against the deadline-tight rate the witness was
    // built around, not the recomputed access rate, so a fully raised user
    // comes out with exactly zero compute and split. Rounding residue below
    // a relative ulp guard is snapped to the same exact zero.
    const double tight = u.data_bits / latency_s;
    double shortfall = std::max(0.0, tight - alloc.backhaul_bps);
    if (shortfall <= 1e-12 * tight) shortfall = 0.0;
    alloc.compute_cps =
        u.intensity_cycles_per_bit * shortfall / (1.0 - u.output_ratio);
    alloc.split =
        std::clamp(shortfall / ((1.0 - u.output_ratio) * tight), 0.0, 1.0);
    plan.allocations.push_back(alloc);
    plan.per_user_latency_s.push_back(u.data_bits / access);
    plan.per_user_storage_bits.push_back(0.0);
    plan.budget_usage.bandwidth_hz += alloc.bandwidth_hz;
    plan.budget_usage.backhaul_bps += alloc.backhaul_bps;
    plan.budget_usage.compute_cps += alloc.compute_cps;
  }
  return plan;
}

}  // namespace

OrchestrationPlan solve(const std::vector<UserProfile>& users,
                        const Budgets& budgets, double tol_rel) {
  if (users.empty()) {
    throw EmptyScenario("no users to schedule");
  }
  check_users(users);
  check_budgets(budgets);
  if (!(tol_rel > 0.0)) {
    throw std::invalid_argument("tol_rel must be positive");
  }
  if (budgets.bandwidth_total_hz == 0.0 || budgets.backhaul_total_bps == 0.0) {
    throw Infeasible("zero bandwidth or backhaul budget admits no deadline");
  }

  double lo = latency_floor(users, budgets.bandwidth_total_hz,
                            budgets.backhaul_total_bps);
  {
    FeasibilityResult at_floor = feasible_at(lo, users, budgets);
    if (at_floor.feasible) {
      return plan_from_witness(lo, users, *at_floor.witness);
    }
  }

  // Certified upper end: with zero compute all backhaul boxes sit at their
  // top ends, so this closed form is feasible whenever compute is not needed;
  // doubling covers the remaining cases.
  double data_over_rate = 0.0;
  double data_sum = 0.0;
  for (const UserProfile& u : users) {
    data_over_rate += u.data_bits / u.spectral_efficiency;
    data_sum += u.data_bits;
  }
  double hi = std::max({data_over_rate / budgets.bandwidth_total_hz,
                        data_sum / budgets.backhaul_total_bps, lo});
  FeasibilityResult at_hi = feasible_at(hi, users, budgets);
  for (int doublings = 0; !at_hi.feasible; ++doublings) {
    if (doublings > 80) {
      throw Infeasible("no finite deadline could be certified");
    }
    hi *= 2.0;
    at_hi = feasible_at(hi, users, budgets);
  }

  for (int iter = 0; (hi - lo) / lo >= tol_rel; ++iter) {
    if (iter >= 200) {
      throw std::runtime_error("deadline bisection failed to converge");
    }
    const double mid = 0.5 * (lo + hi);
    if (!(mid > lo && mid < hi)) break;  // bracket narrower than one ulp
    FeasibilityResult at_mid = feasible_at(mid, users, budgets);
    if (at_mid.feasible) {
      hi = mid;
      at_hi = std::move(at_mid);
    } else {
      lo = mid;
    }
  }
  return plan_from_witness(hi, users, *at_hi.witness);
}

namespace {

// Candidate evaluation shared by the brute-force passes. Splits are searched
// two ways per grid cell: the closed-form rule, and a dense grid applied to
// the raw latency and storage forms. Storage only constrains candidates when
// the budget carries a positive storage figure.

struct RawPoint {
  double latency = kInf;
  double storage = kInf;
  std::vector<double> fractions;  // bandwidth, backhaul, compute for user 1
  std::vector<double> splits;
  std::vector<double> user_latency;
  std::vector<double> user_storage;
};

struct SplitPoint {
  double latency = kInf;
  double storage = kInf;
  std::vector<double> fractions;
  std::vector<SplitOutcome> outcomes;
};

struct EtaScan {
  std::vector<double> latency;
  std::vector<double> storage;
};

EtaScan scan_splits(const Allocation& base, const UserProfile& user,
                    int points) {
  EtaScan scan;
  scan.latency.reserve(points + 1);
  scan.storage.reserve(points + 1);
  Allocation alloc = base;
  for (int m = 0; m <= points; ++m) {
    alloc.split = static_cast<double>(m) / points;
    scan.latency.push_back(upload_latency(alloc, user));
    scan.storage.push_back(required_storage(alloc, user));
  }
  return scan;
}

// Best joint choice of per-user splits subject to the storage cap: user 2's
// scan is ordered by storage with prefix-minimum latency, then each user-1
// point is matched against the cheapest compatible prefix.
void best_pair(const EtaScan& s1, const EtaScan& s2, double storage_cap,
               int points, double* latency, double* storage, double* eta1,
               double* eta2, double t1_out[2], double v_out[2]) {
  std::vector<int> by_storage(s2.latency.size());
  std::iota(by_storage.begin(), by_storage.end(), 0);
  std::sort(by_storage.begin(), by_storage.end(), [&s2](int a, int b) {
    return s2.storage[a] < s2.storage[b];
  });
  std::vector<double> prefix_latency(by_storage.size());
  std::vector<int> prefix_index(by_storage.size());
  double running = kInf;
  int running_index = -1;
  for (std::size_t i = 0; i < by_storage.size(); ++i) {
    const int idx = by_storage[i];
    if (s2.latency[idx] < running) {
      running = s2.latency[idx];
      running_index = idx;
    }
    prefix_latency[i] = running;
    prefix_index[i] = running_index;
  }

  *latency = kInf;
  for (std::size_t m1 = 0; m1 < s1.latency.size(); ++m1) {
    const double allowance = storage_cap - s1.storage[m1];
    if (allowance < 0.0) continue;
    // Largest prefix whose storage fits the allowance.
    std::size_t lo_idx = 0;
    std::size_t hi_idx = by_storage.size();
    while (lo_idx < hi_idx) {
      const std::size_t mid = (lo_idx + hi_idx) / 2;
      if (s2.storage[by_storage[mid]] <= allowance) {
        lo_idx = mid + 1;
      } else {
        hi_idx = mid;
      }
    }
    if (lo_idx == 0) continue;
    const double t2 = prefix_latency[lo_idx - 1];
    const int m2 = prefix_index[lo_idx - 1];
    const double worst = std::max(s1.latency[m1], t2);
    const double total = s1.storage[m1] + s2.storage[m2];
    if (worst < *latency || (worst == *latency && total < *storage)) {
      *latency = worst;
      *storage = total;
      *eta1 = static_cast<double>(m1) / points;
      *eta2 = static_cast<double>(m2) / points;
      t1_out[0] = s1.latency[m1];
      t1_out[1] = s2.latency[m2];
      v_out[0] = s1.storage[m1];
      v_out[1] = s2.storage[m2];
    }
  }
}

double lerp(double lo, double hi, int i, int n) {
  return lo + (hi - lo) * static_cast<double>(i) / n;
}

struct FractionRange {
  double lo[3] = {0.0, 0.0, 0.0};
  double hi[3] = {1.0, 1.0, 1.0};
};

void run_pass(const std::vector<UserProfile>& users, const Budgets& budgets,
              double storage_cap, const FractionRange& range, int cells,
              int eta_points, RawPoint* raw, SplitPoint* split) {
  for (int i = 0; i <= cells; ++i) {
    const double fb = lerp(range.lo[0], range.hi[0], i, cells);
    const double b1 = fb * budgets.bandwidth_total_hz;
    const double b2 = (1.0 - fb) * budgets.bandwidth_total_hz;
    if (b1 <= 0.0 || b2 <= 0.0) continue;
    for (int j = 0; j <= cells; ++j) {
      const double fr = lerp(range.lo[1], range.hi[1], j, cells);
      const double r1 = fr * budgets.backhaul_total_bps;
      const double r2 = (1.0 - fr) * budgets.backhaul_total_bps;
      for (int k = 0; k <= cells; ++k) {
        const double ff = lerp(range.lo[2], range.hi[2], k, cells);
        const double f1 = ff * budgets.compute_total_cps;
        const double f2 = (1.0 - ff) * budgets.compute_total_cps;

        const SplitOutcome so1 = optimal_split(b1, r1, f1, users[0]);
        const SplitOutcome so2 = optimal_split(b2, r2, f2, users[1]);
        const double split_latency = std::max(so1.latency_s, so2.latency_s);
        const double split_storage = so1.storage_bits + so2.storage_bits;
        if (split_storage <= storage_cap &&
            (split_latency < split->latency ||
             (split_latency == split->latency &&
              split_storage < split->storage))) {
          split->latency = split_latency;
          split->storage = split_storage;
          split->fractions = {fb, fr, ff};
          split->outcomes = {so1, so2};
        }

        const EtaScan s1 =
            scan_splits({b1, r1, f1, 0.0}, users[0], eta_points);
        const EtaScan s2 =
            scan_splits({b2, r2, f2, 0.0}, users[1], eta_points);
        double latency = kInf, storage = kInf, eta1 = 0.0, eta2 = 0.0;
        double t_user[2] = {kInf, kInf};
        double v_user[2] = {kInf, kInf};
        best_pair(s1, s2, storage_cap, eta_points, &latency, &storage, &eta1,
                  &eta2, t_user, v_user);
        if (latency < raw->latency ||
            (latency == raw->latency && storage < raw->storage)) {
          raw->latency = latency;
          raw->storage = storage;
          raw->fractions = {fb, fr, ff};
          raw->splits = {eta1, eta2};
          raw->user_latency = {t_user[0], t_user[1]};
          raw->user_storage = {v_user[0], v_user[1]};
        }
      }
    }
  }
}

FractionRange shrink_around(const std::vector<double>& center,
                            double half_width) {
  FractionRange range;
  for (int d = 0; d < 3; ++d) {
    range.lo[d] = std::max(0.0, center[d] - half_width);
    range.hi[d] = std::min(1.0, center[d] + half_width);
  }
  return range;
}

}  // namespace

BruteForceDiagnostics brute_force_search(const std::vector<UserProfile>& users,
                                         const Budgets& budgets,
                                         int grid_points) {
  if (users.empty()) {
    throw EmptyScenario("no users to schedule");
  }
  if (users.size() > 2) {
    throw TooLarge("exhaustive search is limited to two users");
  }
  if (grid_points < 50) {
    throw std::invalid_argument("grid_points must be at least 50");
  }
  check_users(users);
  check_budgets(budgets);
  if (budgets.bandwidth_total_hz == 0.0 || budgets.backhaul_total_bps == 0.0) {
    throw Infeasible("zero bandwidth or backhaul budget admits no deadline");
  }
  const double storage_cap = budgets.storage_total_bits > 0.0
                                 ? budgets.storage_total_bits
                                 : kInf;

  BruteForceDiagnostics diag;
  if (users.size() == 1) {
    // Every budget goes to the only user; only the split is searched.
    const UserProfile& u = users[0];
    const Allocation base{budgets.bandwidth_total_hz,
                          budgets.backhaul_total_bps,
                          budgets.compute_total_cps, 0.0};
    const int eta_points = 200 * grid_points;
    const EtaScan scan = scan_splits(base, u, eta_points);
    double best_latency = kInf, best_storage = kInf;
    int best_m = -1;
    for (std::size_t m = 0; m < scan.latency.size(); ++m) {
      if (scan.storage[m] > storage_cap) continue;
      if (scan.latency[m] < best_latency ||
          (scan.latency[m] == best_latency &&
           scan.storage[m] < best_storage)) {
        best_latency = scan.latency[m];
        best_storage = scan.storage[m];
        best_m = static_cast<int>(m);
      }
    }
    const SplitOutcome so =
        optimal_split(base.bandwidth_hz, base.backhaul_bps, base.compute_cps,
                      u);
    diag.latency_eta_grid = best_latency;
    diag.latency_split_rule =
        so.storage_bits <= storage_cap ? so.latency_s : kInf;
    if (best_m < 0 && !(diag.latency_split_rule < kInf)) {
      throw Infeasible("storage budget excludes every candidate");
    }

    OrchestrationPlan plan;
    if (diag.latency_split_rule <= diag.latency_eta_grid) {
      plan.latency_s = so.latency_s;
      plan.allocations = {{base.bandwidth_hz, base.backhaul_bps,
                           base.compute_cps, so.split}};
      plan.per_user_latency_s = {so.latency_s};
      plan.per_user_storage_bits = {so.storage_bits};
    } else {
      plan.latency_s = best_latency;
      plan.allocations = {{base.bandwidth_hz, base.backhaul_bps,
                           base.compute_cps,
                           static_cast<double>(best_m) / eta_points}};
      plan.per_user_latency_s = {best_latency};
      plan.per_user_storage_bits = {best_storage};
    }
    plan.budget_usage = {base.bandwidth_hz, base.backhaul_bps,
                         base.compute_cps, plan.per_user_storage_bits[0]};
    diag.plan = std::move(plan);
    return diag;
  }

  // Two users: coarse full-range pass, then two shrinking refinements around
  // the best raw cell, then a dense split sweep at the winning cell.
  RawPoint raw;
  SplitPoint split;
  FractionRange full;
  run_pass(users, budgets, storage_cap, full, grid_points, 40, &raw, &split);
  if (!(raw.latency < kInf) && !(split.latency < kInf)) {
    throw Infeasible("no admissible grid cell");
  }
  if (raw.latency < kInf) {
    const double step_a = 1.0 / grid_points;
    run_pass(users, budgets, storage_cap,
             shrink_around(raw.fractions, 2.5 * step_a), 40, 240, &raw,
             &split);
    const double step_b = 5.0 * step_a / 40.0;
    run_pass(users, budgets, storage_cap,
             shrink_around(raw.fractions, 2.5 * step_b), 24, 800, &raw,
             &split);
    // Final polish: dense split sweep at the winning cell.
    const double fb = raw.fractions[0];
    const double fr = raw.fractions[1];
    const double ff = raw.fractions[2];
    const Allocation a1{fb * budgets.bandwidth_total_hz,
                        fr * budgets.backhaul_total_bps,
                        ff * budgets.compute_total_cps, 0.0};
    const Allocation a2{(1.0 - fb) * budgets.bandwidth_total_hz,
                        (1.0 - fr) * budgets.backhaul_total_bps,
                        (1.0 - ff) * budgets.compute_total_cps, 0.0};
    const int dense = 20000;
    const EtaScan s1 = scan_splits(a1, users[0], dense);
    const EtaScan s2 = scan_splits(a2, users[1], dense);
    double latency = kInf, storage = kInf, eta1 = 0.0, eta2 = 0.0;
    double t_user[2] = {kInf, kInf};
    double v_user[2] = {kInf, kInf};
    best_pair(s1, s2, storage_cap, dense, &latency, &storage, &eta1, &eta2,
              t_user, v_user);
    if (latency < raw.latency ||
        (latency == raw.latency && storage < raw.storage)) {
      raw.latency = latency;
      raw.storage = storage;
      raw.splits = {eta1, eta2};
      raw.user_latency = {t_user[0], t_user[1]};
      raw.user_storage = {v_user[0], v_user[1]};
    }
  }

  diag.latency_split_rule = split.latency;
  diag.latency_eta_grid = raw.latency;

  OrchestrationPlan plan;
  if (split.latency <= raw.latency) {
    const double fb = split.fractions[0];
    const double fr = split.fractions[1];
    const double ff = split.fractions[2];
    plan.latency_s = split.latency;
    plan.allocations = {
        {fb * budgets.bandwidth_total_hz, fr * budgets.backhaul_total_bps,
         ff * budgets.compute_total_cps, split.outcomes[0].split},
        {(1.0 - fb) * budgets.bandwidth_total_hz,
         (1.0 - fr) * budgets.backhaul_total_bps,
         (1.0 - ff) * budgets.compute_total_cps, split.outcomes[1].split}};
    plan.per_user_latency_s = {split.outcomes[0].latency_s,
                               split.outcomes[1].latency_s};
    plan.per_user_storage_bits = {split.outcomes[0].storage_bits,
                                  split.outcomes[1].storage_bits};
  } else {
    const double fb = raw.fractions[0];
    const double fr = raw.fractions[1];
    const double ff = raw.fractions[2];
    plan.latency_s = raw.latency;
    plan.allocations = {
        {fb * budgets.bandwidth_total_hz, fr * budgets.backhaul_total_bps,
         ff * budgets.compute_total_cps, raw.splits[0]},
        {(1.0 - fb) * budgets.bandwidth_total_hz,
         (1.0 - fr) * budgets.backhaul_total_bps,
         (1.0 - ff) * budgets.compute_total_cps, raw.splits[1]}};
    plan.per_user_latency_s = raw.user_latency;
    plan.per_user_storage_bits = raw.user_storage;
  }
  for (std::size_t i = 0; i < plan.allocations.size(); ++i) {
    plan.budget_usage.bandwidth_hz += plan.allocations[i].bandwidth_hz;
    plan.budget_usage.backhaul_bps += plan.allocations[i].backhaul_bps;
    plan.budget_usage.compute_cps += plan.allocations[i].compute_cps;
    plan.budget_usage.storage_bits += plan.per_user_storage_bits[i];
  }
  diag.plan = std::move(plan);
  return diag;
}

OrchestrationPlan brute_force_solve(const std::vector<UserProfile>& users,
                                    const Budgets& budgets, int grid_points) {
  return brute_force_search(users, budgets, grid_points).plan;
}

}  // namespace eih
