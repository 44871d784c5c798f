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

#ifndef EIH_EXPERIMENTS_HPP_
#define EIH_EXPERIMENTS_HPP_

#include <string>
#include <vector>

#include "eih/scenario.hpp"

namespace eih {

// The canned experiment names accepted by sweep().
const std::vector<std::string>& experiment_names();

// Runs one experiment and writes its CSV to output_path. Every experiment
// emits the same schema: header row, then
//   experiment,seed,scheme,sweep_var_name,sweep_var_value,latency_s,
//   storage_bits,extra
// with floats at 9 significant digits and extra a quoted JSON object.
// Averaged experiments use topology seeds {config.seed + i}. Rows are
// produced in a fixed order and the computation is serial, so a given
// (config, seed) yields byte-identical output on every run.
//
//   fig3_dmax      five schemes' mean latency over an 8-point stream-size
//                  grid, averaged across n_topologies topologies
//   fig4_eta_curves  one user: latency and storage over a split grid for
//                  each compute budget, plus the closed-form best split row
//   fig5_ftotal    solve latency over a (bandwidth, compute) grid with the
//                  compute sufficiency threshold row per bandwidth
//   fig6_backhaul  mean solve latency over a (bandwidth, backhaul) grid
//
// Throws std::invalid_argument for unknown names or n_topologies < 1 and
// IoError when output_path cannot be written.
void sweep(const std::string& experiment, const ScenarioConfig& config,
           int n_topologies, const std::string& output_path);

}  // namespace eih

#endif  // EIH_EXPERIMENTS_HPP_
