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

#include "netcb/features.h"

#include <algorithm>
#include <cstdint>
#include <vector>

namespace netcb {
namespace {

void FillRatios(const std::vector<std::uint64_t>& counts, std::uint64_t total,
                Eigen::Index offset, Eigen::VectorXd& out) {
  if (total == 0) return;
  const double denom = static_cast<double>(total);
  for (std::size_t k = 0; k < counts.size(); ++k) {
    out[offset + static_cast<Eigen::Index>(k)] =
        static_cast<double>(counts[k]) / denom;
  }
}

}  // namespace

Eigen::VectorXd ComputeFeatures(const SimulationState& state,
                                const AttributedGraph& graph, NodeId node) {
  const ClassId l = graph.class_count();
  std::vector<std::uint64_t> recommended(l, 0), unsuccessful(l, 0),
      attempts(l, 0), failures(l, 0);
  std::uint64_t recommended_total = 0, unsuccessful_total = 0,
                attempts_total = 0, failures_total = 0;

  for (NodeId j : graph.neighbors(node)) {
    if (auto t = state.recommendation(j)) {
      ++recommended[*t];
      ++recommended_total;
      if (!state.active(j)) {
        ++unsuccessful[*t];
        ++unsuccessful_total;
      }
    }
    auto success = state.spillover_success(j);
    auto failure = state.spillover_failure(j);
    for (ClassId k = 0; k < l; ++k) {
      attempts[k] += success[k] + failure[k];
      attempts_total += success[k] + failure[k];
      failures[k] += failure[k];
      failures_total += failure[k];
    }
  }

  Eigen::VectorXd out = Eigen::VectorXd::Zero(4 * l);
  FillRatios(recommended, recommended_total, 0, out);
  FillRatios(unsuccessful, unsuccessful_total, l, out);
  FillRatios(attempts, attempts_total, 2 * l, out);
  FillRatios(failures, failures_total, 3 * l, out);
  return out;
}

void ApplyAttemptRecords(SimulationState& state,
                         std::span<const AttemptRecord> attempts) {
  for (const AttemptRecord& a : attempts) {
    if (a.success) {
      state.MarkSpilloverSuccess(a.recipient, a.class_id);
    } else {
      state.AddSpilloverFailure(a.recipient, a.class_id);
    }
  }
}

void UpdateRoundFeatures(SimulationState& state, const AttributedGraph& graph,
                         NodeId node) {
  // Block 2 reads live activation, so a spillover-activated neighbor q also
  // changes blocks 1-2 of its own neighbors; refresh whole vectors.
  std::vector<NodeId> affected;
  for (NodeId q : graph.neighbors(node)) {
    affected.push_back(q);
    auto second = graph.neighbors(q);
    affected.insert(affected.end(), second.begin(), second.end());
  }
  std::sort(affected.begin(), affected.end());
  affected.erase(std::unique(affected.begin(), affected.end()), affected.end());
  for (NodeId r : affected) {
    state.set_dynamic_features(r, ComputeFeatures(state, graph, r));
  }
}

}  // namespace netcb
