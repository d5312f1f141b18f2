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

#ifndef NETCB_CONFIG_H_
#define NETCB_CONFIG_H_

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "netcb/dataset.h"
#include "netcb/engine.h"
#include "netcb/round_record.h"

namespace netcb {

struct SyntheticSpec {
  NodeId nodes = 600;
  ClassId classes = 3;
  double within_prob = 0.05;
  double between_prob = 0.005;
  Eigen::Index dim = 16;
  double noise = 1.0;
  std::uint64_t seed = 1;
};

enum class PolicyKind { kLinUcb, kRandom };

struct BanditSpec {
  PolicyKind policy = PolicyKind::kLinUcb;
  double alpha = 0.5;
  double ridge = 1.0;
  // When non-empty, alpha is grid-searched per mode.
  std::vector<double> alpha_grid;
  int grid_repeats = 1;
};

struct PreprocessSpec {
  std::optional<double> target_homophily;
  std::size_t max_rejections = 10000;
  std::optional<Eigen::Index> reduce_dim;
  std::uint64_t seed = 7;
};

struct ExperimentSpec {
  std::optional<DatasetPaths> dataset;
  std::optional<int> class_count;
  std::optional<SyntheticSpec> synthetic;
  PreprocessSpec preprocess;
  // mode, seed and arm_count are filled per run.
  EngineConfig engine;
  BanditSpec bandit;
  std::uint64_t base_seed = 0;
  int repeats = 10;
  std::filesystem::path output_dir = "netcb_out";
  std::vector<RunMode> modes = {RunMode::kBaseline, RunMode::kFeaturesOnly,
                                RunMode::kOverride};
  int threads = 1;

  // Throws ConfigError naming the offending key.
  void Validate() const;
};

// Flat "dotted.key = value" text; '#' starts a comment line. Absent keys keep
// their defaults. Relative dataset paths resolve against `base_dir`. Throws
// ConfigError naming the key on unknown keys, duplicates, type mismatches and
// constraint violations.
ExperimentSpec ParseConfigText(std::string_view text,
                               const std::filesystem::path& base_dir = {});
ExperimentSpec ParseConfig(const std::filesystem::path& path);

// Parses "baseline,netcb_override" style lists. Throws ConfigError on `key`.
std::vector<RunMode> ParseModeList(std::string_view text, const std::string& key);

}  // namespace netcb

#endif  // NETCB_CONFIG_H_
