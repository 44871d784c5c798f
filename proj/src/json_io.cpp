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

#include "eih/json_io.hpp"

#include <cmath>
#include <fstream>
#include <stdexcept>

#include "eih/channel.hpp"
#include "eih/errors.hpp"
#include "eih/flow.hpp"
#include "eih/orchestrator.hpp"
#include "eih/rng.hpp"

namespace eih {

namespace {

using nlohmann::json;

double as_number(const json& j, const char* what) {
  if (!j.is_number()) {
    throw std::invalid_argument(std::string(what) + " must be a number");
  }
  return j.get<double>();
}

void read_range(const json& j, const char* what, std::array<double, 2>* out) {
  if (!j.is_array() || j.size() != 2) {
    throw std::invalid_argument(std::string(what) +
                                " must be a two-element array");
  }
  (*out)[0] = as_number(j[0], what);
  (*out)[1] = as_number(j[1], what);
}

Position3D read_position(const json& j, const char* what) {
  Position3D pos;
  if (j.is_array() && j.size() == 3) {
    pos.x = as_number(j[0], what);
    pos.y = as_number(j[1], what);
    pos.z = as_number(j[2], what);
    return pos;
  }
  if (j.is_object()) {
    pos.x = as_number(j.at("x"), what);
    pos.y = as_number(j.at("y"), what);
    pos.z = as_number(j.at("z"), what);
    return pos;
  }
  throw std::invalid_argument(std::string(what) +
                              " must be [x, y, z] or {x, y, z}");
}

void read_channel(const json& j, ChannelParams* channel) {
  if (!j.is_object()) {
    throw std::invalid_argument("channel must be an object");
  }
  if (j.contains("eta_los")) channel->eta_los = as_number(j["eta_los"], "eta_los");
  if (j.contains("eta_nlos"))
    channel->eta_nlos = as_number(j["eta_nlos"], "eta_nlos");
  if (j.contains("a")) channel->a = as_number(j["a"], "a");
  if (j.contains("b")) channel->b = as_number(j["b"], "b");
  if (j.contains("carrier_hz"))
    channel->carrier_hz = as_number(j["carrier_hz"], "carrier_hz");
  if (j.contains("light_speed"))
    channel->light_speed = as_number(j["light_speed"], "light_speed");
  if (j.contains("tx_power_w"))
    channel->tx_power_w = as_number(j["tx_power_w"], "tx_power_w");
  if (j.contains("noise_power_w"))
    channel->noise_power_w = as_number(j["noise_power_w"], "noise_power_w");
  if (j.contains("noise_dbm")) {
    // dBm to watts once at load; everything downstream works in watts.
    channel->noise_power_w =
        std::pow(10.0, (as_number(j["noise_dbm"], "noise_dbm") - 30.0) / 10.0);
  }
}

void read_budgets(const json& j, Budgets* budgets) {
  if (!j.is_object()) {
    throw std::invalid_argument("budgets must be an object");
  }
  if (j.contains("bandwidth_total_hz"))
    budgets->bandwidth_total_hz =
        as_number(j["bandwidth_total_hz"], "bandwidth_total_hz");
  if (j.contains("backhaul_total_bps"))
    budgets->backhaul_total_bps =
        as_number(j["backhaul_total_bps"], "backhaul_total_bps");
  if (j.contains("compute_total_cps"))
    budgets->compute_total_cps =
        as_number(j["compute_total_cps"], "compute_total_cps");
  if (j.contains("storage_total_bits"))
    budgets->storage_total_bits =
        as_number(j["storage_total_bits"], "storage_total_bits");
}

void read_config(const json& j, ScenarioConfig* config) {
  if (!j.is_object()) {
    throw std::invalid_argument("config must be an object");
  }
  if (j.contains("n_users")) {
    if (!j["n_users"].is_number_integer()) {
      throw std::invalid_argument("n_users must be an integer");
    }
    config->n_users = j["n_users"].get<int>();
  }
  if (j.contains("d_max_bits"))
    config->d_max_bits = as_number(j["d_max_bits"], "d_max_bits");
  if (j.contains("rho_range"))
    read_range(j["rho_range"], "rho_range", &config->rho_range);
  if (j.contains("zeta_range"))
    read_range(j["zeta_range"], "zeta_range", &config->zeta_range);
  if (j.contains("uav_position"))
    config->uav_position = read_position(j["uav_position"], "uav_position");
  if (j.contains("user_disc_radius_m"))
    config->user_disc_radius_m =
        as_number(j["user_disc_radius_m"], "user_disc_radius_m");
  if (j.contains("channel")) read_channel(j["channel"], &config->channel);
  if (j.contains("budgets")) read_budgets(j["budgets"], &config->budgets);
  if (j.contains("mc_samples")) {
    if (!j["mc_samples"].is_number_integer()) {
      throw std::invalid_argument("mc_samples must be an integer");
    }
    config->mc_samples = j["mc_samples"].get<int>();
  }
  if (j.contains("seed")) {
    if (!j["seed"].is_number_integer()) {
      throw std::invalid_argument("seed must be an integer");
    }
    config->seed = j["seed"].get<std::uint64_t>();
  }
}

UserProfile read_user(const json& j, const ScenarioConfig& config,
                      std::uint64_t index) {
  if (!j.is_object()) {
    throw std::invalid_argument("each user must be an object");
  }
  UserProfile user;
  user.data_bits = as_number(j.at("data_bits"), "data_bits");
  user.intensity_cycles_per_bit = as_number(
      j.at("intensity_cycles_per_bit"), "intensity_cycles_per_bit");
  user.output_ratio = as_number(j.at("output_ratio"), "output_ratio");
  if (j.contains("spectral_efficiency")) {
    user.spectral_efficiency =
        as_number(j["spectral_efficiency"], "spectral_efficiency");
  } else if (j.contains("position")) {
    const Position3D pos = read_position(j["position"], "position");
    const LinkGeometry geom = link_geometry(pos, config.uav_position);
    const double gain = large_scale_gain(geom, config.channel);
    user.spectral_efficiency = ergodic_spectral_efficiency(
        gain, config.channel, config.mc_samples,
        Rng::derive_seed(config.seed, index));
  } else {
    throw std::invalid_argument(
        "user needs spectral_efficiency or a position");
  }
  return user;
}

}  // namespace

Scenario scenario_from_json(const json& doc) {
  if (!doc.is_object()) {
    throw std::invalid_argument("scenario document must be a JSON object");
  }
  ScenarioConfig config;
  if (doc.contains("config")) {
    read_config(doc["config"], &config);
  }
  if (doc.contains("budgets")) {
    read_budgets(doc["budgets"], &config.budgets);
  }

  if (doc.contains("users")) {
    if (!doc["users"].is_array() || doc["users"].empty()) {
      throw std::invalid_argument("users must be a nonempty array");
    }
    Scenario scenario;
    scenario.config = config;
    scenario.budgets = config.budgets;
    scenario.seed = config.seed;
    std::uint64_t index = 0;
    for (const json& entry : doc["users"]) {
      scenario.users.push_back(read_user(entry, config, index++));
      detail::check_user(scenario.users.back());
    }
    return scenario;
  }
  return generate_scenario(config, config.seed);
}

Scenario load_scenario_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw IoError("cannot read scenario file: " + path);
  }
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::parse_error& e) {
    throw std::invalid_argument(std::string("scenario JSON is malformed: ") +
                                e.what());
  }
  try {
    return scenario_from_json(doc);
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("scenario JSON is ill-typed: ") +
                                e.what());
  }
}

nlohmann::ordered_json plan_to_json(const OrchestrationPlan& plan) {
  nlohmann::ordered_json j;
  j["latency_s"] = plan.latency_s;
  j["allocations"] = nlohmann::ordered_json::array();
  for (const Allocation& alloc : plan.allocations) {
    nlohmann::ordered_json a;
    a["bandwidth_hz"] = alloc.bandwidth_hz;
    a["backhaul_bps"] = alloc.backhaul_bps;
    a["compute_cps"] = alloc.compute_cps;
    a["split"] = alloc.split;
    j["allocations"].push_back(a);
  }
  j["per_user_latency_s"] = plan.per_user_latency_s;
  j["per_user_storage_bits"] = plan.per_user_storage_bits;
  j["budget_usage"] = {{"bandwidth_hz", plan.budget_usage.bandwidth_hz},
                       {"backhaul_bps", plan.budget_usage.backhaul_bps},
                       {"compute_cps", plan.budget_usage.compute_cps},
                       {"storage_bits", plan.budget_usage.storage_bits}};
  return j;
}

nlohmann::ordered_json trace_to_json(const FlowTrace& trace) {
  nlohmann::ordered_json j;
  j["completion_s"] = trace.completion_s;
  j["peak_storage_bits"] = trace.peak_storage_bits;
  j["events"] = nlohmann::ordered_json::array();
  for (const FlowEvent& ev : trace.events) {
    nlohmann::ordered_json e;
    e["time_s"] = ev.time_s;
    e["queue_compute_bits"] = ev.queue_compute_bits;
    e["queue_upload_bits"] = ev.queue_upload_bits;
    e["active_rate_labels"] = ev.active_rate_labels;
    j["events"].push_back(e);
  }
  return j;
}

nlohmann::ordered_json advice_to_json(const ProvisioningAdvice& advice) {
  nlohmann::ordered_json j;
  j["verdict"] = advice.verdict == ProvisioningVerdict::kSufficient
                     ? "Sufficient"
                     : "ImpossibleAtAnyCompute";
  if (advice.recommended_compute_cps.has_value()) {
    j["recommended_compute_cps"] = *advice.recommended_compute_cps;
  }
  if (advice.achieved_latency_s.has_value()) {
    j["achieved_latency_s"] = *advice.achieved_latency_s;
  }
  if (advice.verdict == ProvisioningVerdict::kSufficient) {
    // The threshold is sufficient, not minimal; some instances reach the
    // floor with less compute.
    j["note"] = "sufficient threshold, not necessarily minimal";
  }
  return j;
}

}  // namespace eih
