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

#include "netcb/metrics.h"

#include <stdexcept>
#include <string>

#include "netcb/errors.h"

namespace netcb {

double ExpectedRewardUnderTruth(const SimulationState& state,
                                const AttributedGraph& graph,
                                const SpilloverParams& params, NodeId node,
                                ClassId class_id) {
  std::vector<ClassId> inactive_labels;
  for (NodeId j : graph.neighbors(node)) {
    if (!state.active(j)) inactive_labels.push_back(graph.label(j));
  }
  return ExpectedActivations(params, class_id, graph.label(node),
                             inactive_labels);
}

OracleChoice OracleExpectedOptimum(const SimulationState& state,
                                   const AttributedGraph& graph,
                                   const SpilloverParams& params, NodeId node) {
  if (state.active(node)) {
    throw ProtocolError("oracle queried for active node " +
                        std::to_string(node));
  }
  std::vector<ClassId> inactive_labels;
  for (NodeId j : graph.neighbors(node)) {
    if (!state.active(j)) inactive_labels.push_back(graph.label(j));
  }
  OracleChoice best{0, -1.0};
  for (ClassId arm = 0; arm < graph.class_count(); ++arm) {
    const double value =
        ExpectedActivations(params, arm, graph.label(node), inactive_labels);
    if (value > best.value) best = {arm, value};
  }
  return best;
}

double SimulatedRegret(const SimulationState& state,
                       const AttributedGraph& graph,
                       const SpilloverParams& params, NodeId node,
                       ClassId oracle_arm, ClassId recommended_class,
                       int rollouts, Rng& rng) {
  if (rollouts <= 0) throw std::invalid_argument("rollouts must be > 0");
  std::int64_t oracle_total = 0;
  std::int64_t realized_total = 0;
  for (int r = 0; r < rollouts; ++r) {
    oracle_total +=
        SimulateRecommendation(state, graph, params, rng, node, oracle_arm);
    realized_total += SimulateRecommendation(state, graph, params, rng, node,
                                             recommended_class);
  }
  return static_cast<double>(oracle_total - realized_total) / rollouts;
}

MetricsSummary Summarize(std::span<const RoundRecord> records) {
  if (records.empty()) {
    throw std::invalid_argument("cannot summarize an empty record list");
  }
  MetricsSummary summary;
  summary.rounds = records.size();
  summary.cumulative_regret_series.reserve(records.size());
  summary.cumulative_accuracy_series.reserve(records.size());
  double regret = 0.0;
  double simulated = 0.0;
  bool all_simulated = true;
  std::size_t aligned = 0;
  for (std::size_t i = 0; i < records.size(); ++i) {
    const RoundRecord& r = records[i];
    regret += RoundRegret(r);
    summary.cumulative_regret_series.push_back(regret);
    if (r.aligned_prediction) ++aligned;
    summary.cumulative_accuracy_series.push_back(
        static_cast<double>(aligned) / static_cast<double>(i + 1));
    summary.total_network_reward += r.network_reward;
    if (r.overridden) ++summary.override_count;
    if (r.simulated_regret) {
      simulated += *r.simulated_regret;
    } else {
      all_simulated = false;
    }
  }
  summary.total_regret = regret;
  summary.bandit_accuracy =
      static_cast<double>(aligned) / static_cast<double>(records.size());
  summary.final_dar = records.back().dar;
  if (all_simulated) summary.total_simulated_regret = simulated;
  return summary;
}

}  // namespace netcb
