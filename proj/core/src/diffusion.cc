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

#include "netcb/diffusion.h"

#include <stdexcept>
#include <string>

#include "netcb/errors.h"

namespace netcb {
namespace {

void CheckProbability(double p, const char* name) {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw std::invalid_argument(std::string(name) + " must be in [0, 1], got " +
                                std::to_string(p));
  }
}

}  // namespace

void SpilloverParams::Validate() const {
  CheckProbability(p_a, "p_a");
  CheckProbability(p_m, "p_m");
  CheckProbability(p_aa, "p_aa");
  CheckProbability(p_am, "p_am");
  CheckProbability(p_ma, "p_ma");
  CheckProbability(p_mm, "p_mm");
}

SpilloverParams SpilloverParams::Scaled(double factor) const {
  return {p_a * factor,  p_m * factor,  p_aa * factor,
          p_am * factor, p_ma * factor, p_mm * factor};
}

double ActivationProbability(const SpilloverParams& params, ActivationKind kind,
                             std::optional<bool> source_aligned,
                             bool recipient_aligned) {
  if (kind == ActivationKind::kDirect) {
    if (source_aligned.has_value()) {
      throw std::invalid_argument("direct activation takes no source alignment");
    }
    return DirectProbability(params, recipient_aligned);
  }
  if (!source_aligned.has_value()) {
    throw std::invalid_argument("spillover activation needs source alignment");
  }
  return SpilloverProbability(params, *source_aligned, recipient_aligned);
}

double ExpectedActivations(const SpilloverParams& params, ClassId arm,
                           ClassId node_class,
                           std::span<const ClassId> inactive_neighbor_classes) {
  const bool source_aligned = arm == node_class;
  double spill = 0.0;
  for (ClassId c : inactive_neighbor_classes) {
    spill += SpilloverProbability(params, source_aligned, arm == c);
  }
  return DirectProbability(params, source_aligned) * (1.0 + spill);
}

SimulationState::SimulationState(NodeId node_count, ClassId class_count)
    : node_count_(node_count),
      class_count_(class_count),
      active_(node_count, 0),
      recommendation_(node_count, -1),
      prediction_(node_count, -1),
      success_(static_cast<std::size_t>(node_count) * class_count, 0),
      failure_(static_cast<std::size_t>(node_count) * class_count, 0),
      dynamic_features_(Eigen::MatrixXd::Zero(node_count, 4 * class_count)) {
  if (class_count < 2) throw std::invalid_argument("class_count must be >= 2");
}

std::optional<ClassId> SimulationState::recommendation(NodeId i) const {
  if (recommendation_[i] < 0) return std::nullopt;
  return recommendation_[i];
}

std::optional<ClassId> SimulationState::prediction(NodeId i) const {
  if (prediction_[i] < 0) return std::nullopt;
  return prediction_[i];
}

void SimulationState::set_dynamic_features(NodeId i,
                                           const Eigen::VectorXd& values) {
  if (values.size() != dynamic_features_.cols()) {
    throw std::invalid_argument("dynamic feature length mismatch");
  }
  dynamic_features_.row(i) = values.transpose();
}

void SimulationState::set_prediction(NodeId i, ClassId arm) {
  prediction_[i] = arm;
}

void SimulationState::set_recommendation(NodeId i, ClassId class_id) {
  recommendation_[i] = class_id;
}

void SimulationState::Activate(NodeId i) {
  if (active_[i] == 0) {
    active_[i] = 1;
    ++active_count_;
  }
}

void SimulationState::MarkSpilloverSuccess(NodeId i, ClassId k) {
  success_[Offset(i) + k] = 1;
  Activate(i);
}

void SimulationState::AddSpilloverFailure(NodeId i, ClassId k) {
  ++failure_[Offset(i) + k];
}

DirectOutcome ApplyDirectRecommendation(SimulationState& state,
                                        const AttributedGraph& graph,
                                        const SpilloverParams& params,
                                        Rng& rng, NodeId node,
                                        ClassId class_id) {
  auto neighbors = graph.neighbors(node);  // validates node
  if (class_id < 0 || class_id >= graph.class_count()) {
    throw std::invalid_argument("class id out of range");
  }
  if (state.active(node)) {
    throw ProtocolError("node " + std::to_string(node) + " is already active");
  }
  if (state.recommendation(node).has_value()) {
    throw ProtocolError("node " + std::to_string(node) +
                        " was already recommended");
  }

  DirectOutcome outcome;
  state.set_recommendation(node, class_id);
  const bool source_aligned = class_id == graph.label(node);
  if (!rng.Bernoulli(DirectProbability(params, source_aligned))) {
    return outcome;
  }
  state.Activate(node);
  outcome.activated = true;
  outcome.new_activations = 1;
  for (NodeId j : neighbors) {
    if (state.active(j)) continue;
    const double p = SpilloverProbability(params, source_aligned,
                                          class_id == graph.label(j));
    const bool success = rng.Bernoulli(p);
    if (success) {
      state.MarkSpilloverSuccess(j, class_id);
      ++outcome.new_activations;
    } else {
      state.AddSpilloverFailure(j, class_id);
    }
    outcome.attempts.push_back({j, class_id, success});
  }
  return outcome;
}

int SimulateRecommendation(const SimulationState& state,
                           const AttributedGraph& graph,
                           const SpilloverParams& params, Rng& rng,
                           NodeId node, ClassId class_id) {
  const bool source_aligned = class_id == graph.label(node);
  if (!rng.Bernoulli(DirectProbability(params, source_aligned))) return 0;
  int activations = 1;
  for (NodeId j : graph.neighbors(node)) {
    if (state.active(j)) continue;
    if (rng.Bernoulli(SpilloverProbability(params, source_aligned,
                                           class_id == graph.label(j)))) {
      ++activations;
    }
  }
  return activations;
}

}  // namespace netcb
