// Copyright 2026 The NetCB Authors.
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

#ifndef NETCB_RUNNER_H_
#define NETCB_RUNNER_H_

#include <filesystem>
#include <span>
#include <string>

#include "netcb/config.h"
#include "netcb/graph.h"
#include "netcb/round_record.h"

namespace netcb {

// Loads or generates the graph, then applies the homophily edit and the
// feature reduction requested in spec.preprocess.
AttributedGraph PrepareGraph(const ExperimentSpec& spec);

// "<mode>_seed<seed>.csv"
std::string RoundsFileName(RunMode mode, std::uint64_t seed);

// Columns: round, node, predicted_arm, recommended_class, overridden,
// directly_activated, network_reward, dar, cum_regret, cum_bacc. Classes are
// written 1-based.
void WriteRoundsCsv(const std::filesystem::path& path,
                    std::span<const RoundRecord> records);

// Runs every mode x repeat (seed = base_seed + repeat index), writing one
// rounds CSV per run and summary.json into spec.output_dir. Returns 0 on
// success and 1 after logging the error otherwise.
int Run(const ExperimentSpec& spec);

}  // namespace netcb

#endif  // NETCB_RUNNER_H_
