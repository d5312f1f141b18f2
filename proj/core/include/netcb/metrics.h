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

#ifndef NETCB_METRICS_H_
#define NETCB_METRICS_H_

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "netcb/diffusion.h"
#include "netcb/graph.h"
#include "netcb/round_record.h"

namespace netcb {

struct OracleChoice {
  ClassId arm = 0;
  double value = 0.0;
};

// Expected activations from recommending `class_id` to `node` under the true
// labels and the current activation state.
double ExpectedRewardUnderTruth(const SimulationState& state,
                                const AttributedGraph& graph,
                                const SpilloverParams& params, NodeId node,
                                ClassId class_id);

// Arm with the largest true expected network reward (ties to the lowest
// index). Throws ProtocolError if `node` is already active.
OracleChoice OracleExpectedOptimum(const SimulationState& state,
                                   const AttributedGraph& graph,
                                   const SpilloverParams& params, NodeId node);

// Rollout estimate of the oracle-vs-recommended reward gap: mean over
// `rollouts` independent draws of SimulateRecommendation for each arm.
double SimulatedRegret(const SimulationState& state,
                       const AttributedGraph& graph,
                       const SpilloverParams& params, NodeId node,
                       ClassId oracle_arm, ClassId recommended_class,
                       int rollouts, Rng& rng);

inline double RoundRegret(const RoundRecord& record) {
  return record.oracle_expected_reward - record.realized_expected_reward;
}

struct MetricsSummary {
  double bandit_accuracy = 0.0;
  double final_dar = 0.0;
  std::vector<double> cumulative_regret_series;
  std::vector<double> cumulative_accuracy_series;
  double total_regret = 0.0;
  std::int64_t total_network_reward = 0;
  std::size_t rounds = 0;
  std::size_t override_count = 0;
  // Sum of simulated_regret when every record carries one.
  std::optional<double> total_simulated_regret;
};

// Throws std::invalid_argument on an empty record list.
MetricsSummary Summarize(std::span<const RoundRecord> records);

}  // namespace netcb

#endif  // NETCB_METRICS_H_
