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

#ifndef NETCB_ROUND_RECORD_H_
#define NETCB_ROUND_RECORD_H_

#include <optional>
#include <string_view>

#include "netcb/graph.h"

namespace netcb {

enum class RunMode {
  // Plain contextual bandit on static features, rewarded 1 for an aligned
  // prediction.
  kBaseline,
  // Static + dynamic neighborhood features, rewarded with network rewards.
  kFeaturesOnly,
  // kFeaturesOnly plus the expected-network-reward override once DAR is
  // stable.
  kOverride,
};

std::string_view ModeName(RunMode mode);
// Accepts "baseline", "netcb_features_only", "netcb_override".
std::optional<RunMode> ParseMode(std::string_view name);

struct RoundRecord {
  int round = 0;  // 1-based
  NodeId node = 0;
  ClassId predicted_arm = 0;
  ClassId recommended_class = 0;
  bool overridden = false;
  bool directly_activated = false;
  int network_reward = 0;
  ClassId oracle_optimal_arm = 0;
  double oracle_expected_reward = 0.0;
  // Expected network reward of recommended_class under the true labels.
  double realized_expected_reward = 0.0;
  // Cumulative direct activation rate after this round.
  double dar = 0.0;
  bool aligned_prediction = false;
  // Stability gate as evaluated at the start of this round.
  bool dar_stable = false;
  // Rollout estimate of oracle minus realized reward, when enabled.
  std::optional<double> simulated_regret;

  friend bool operator==(const RoundRecord&, const RoundRecord&) = default;
};

}  // namespace netcb

#endif  // NETCB_ROUND_RECORD_H_
