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

#ifndef EIH_JSON_IO_HPP_
#define EIH_JSON_IO_HPP_

#include <string>

#include <nlohmann/json.hpp>

#include "eih/fluid_sim.hpp"
#include "eih/provisioning.hpp"
#include "eih/scenario.hpp"

namespace eih {

// Scenario documents carry three optional top-level objects:
//   config   ScenarioConfig fields; missing fields keep their defaults
//   budgets  overrides config.budgets
//   users    explicit list, bypassing generation; each entry carries
//            data_bits, intensity_cycles_per_bit, output_ratio, and either
//            spectral_efficiency directly or a position [x, y, z] to derive
//            it through the channel model
// Noise may be given as noise_power_w or noise_dbm; the dBm form is
// converted to watts while loading.
Scenario scenario_from_json(const nlohmann::json& doc);

// Reads and parses path. Throws IoError when the file cannot be read and
// std::invalid_argument for malformed or ill-typed documents.
Scenario load_scenario_file(const std::string& path);

nlohmann::ordered_json plan_to_json(const OrchestrationPlan& plan);
nlohmann::ordered_json trace_to_json(const FlowTrace& trace);
nlohmann::ordered_json advice_to_json(const ProvisioningAdvice& advice);

}  // namespace eih

#endif  // EIH_JSON_IO_HPP_
