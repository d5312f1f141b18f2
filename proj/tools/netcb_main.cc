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

// netcb: runs seeded bandit experiments on an attributed network and writes
// per-round CSVs plus summary.json.
//
//   netcb --config experiment.cfg [--out DIR] [--seed N] [--repeats N]
//         [--mode baseline,netcb_features_only,netcb_override]
//
// NETCB_LOG_LEVEL (trace, debug, info, warn, error, off) sets verbosity.

#include <cstdint>
#include <cstdlib>
#include <iostream>
#include <string>

#include <spdlog/sinks/stdout_color_sinks.h>
#include <spdlog/spdlog.h>

#include "CLI11.hpp"
#include "netcb/config.h"
#include "netcb/errors.h"
#include "netcb/runner.h"

int main(int argc, char** argv) {
  CLI::App app{"Contextual bandit recommendation with network spillover"};
  std::string config_path;
  std::string out_dir;
  std::uint64_t seed = 0;
  int repeats = 0;
  std::string modes;
  app.add_option("--config", config_path, "Experiment configuration file")
      ->required()
      ->check(CLI::ExistingFile);
  auto* out_opt = app.add_option("--out", out_dir, "Output directory");
  auto* seed_opt = app.add_option("--seed", seed, "Base seed");
  auto* repeats_opt =
      app.add_option("--repeats", repeats, "Seeded repeats per mode");
  auto* mode_opt = app.add_option(
      "--mode", modes,
      "Comma-separated modes: baseline, netcb_features_only, netcb_override");
  CLI11_PARSE(app, argc, argv);

  auto logger = spdlog::stderr_color_mt("netcb");
  spdlog::set_default_logger(logger);
  spdlog::set_level(spdlog::level::info);
  if (const char* level = std::getenv("NETCB_LOG_LEVEL")) {
    spdlog::set_level(spdlog::level::from_str(level));
  }

  netcb::ExperimentSpec spec;
  try {
    spec = netcb::ParseConfig(config_path);
    if (*out_opt) spec.output_dir = out_dir;
    if (*seed_opt) spec.base_seed = seed;
    if (*repeats_opt) spec.repeats = repeats;
    if (*mode_opt) spec.modes = netcb::ParseModeList(modes, "--mode");
    spec.Validate();
  } catch (const netcb::ConfigError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return 2;
  }
  return netcb::Run(spec);
}
