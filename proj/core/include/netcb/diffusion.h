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

#ifndef NETCB_DIFFUSION_H_
#define NETCB_DIFFUSION_H_

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "netcb/graph.h"
#include "netcb/rng.h"

namespace netcb {

// Activation probabilities of the heterogeneous single-hop cascade. Direct:
// aligned / misaligned recommendation. Spillover p_sr: s is the alignment of
// the source's recommendation with the source, r with the recipient.
struct SpilloverParams {
  double p_a = 0.7;
  double p_m = 0.5;
  double p_aa = 0.3;
  double p_am = 0.0;
  double p_ma = 0.3;
  double p_mm = 0.0;

  // Throws std::invalid_argument naming the first field outside [0, 1].
  void Validate() const;
  SpilloverParams Scaled(double factor) const;
};

enum class ActivationKind { kDirect, kSpillover };

// Table lookup. source_aligned must be present iff kind == kSpillover
// (std::invalid_argument otherwise).
double ActivationProbability(const SpilloverParams& params, ActivationKind kind,
                             std::optional<bool> source_aligned,
                             bool recipient_aligned);

inline double DirectProbability(const SpilloverParams& p, bool aligned) {
  return aligned ? p.p_a : p.p_m;
}

inline double SpilloverProbability(const SpilloverParams& p,
                                   bool source_aligned,
                                   bool recipient_aligned) {
  if (source_aligned) return recipient_aligned ? p.p_aa : p.p_am;
  return recipient_aligned ? p.p_ma : p.p_mm;
}

// Closed-form expected number of new activations when `arm` is recommended to
// a node believed to hold class `node_class`, whose inactive neighbors are
// believed to hold `inactive_neighbor_classes`. Exact for the single-hop
// cascade because the neighbor attempts are independent.
double ExpectedActivations(const SpilloverParams& params, ClassId arm,
                           ClassId node_class,
                           std::span<const ClassId> inactive_neighbor_classes);

// One spillover attempt made during a direct recommendation.
struct AttemptRecord {
  NodeId recipient;
  ClassId class_id;  // the source's recommended class
  bool success;
  friend bool operator==(const AttemptRecord&, const AttemptRecord&) = default;
};

// Mutable per-node simulation state for one experiment run.
//
// Holds activation y_i, recommendation t_i, bandit prediction arm_i, spillover
// success flags S_i (length l, 0/1) and failure counts S̄_i (length l), and the
// cached dynamic neighborhood features X_N_i (length 4l).
class SimulationState {
 public:
  SimulationState(NodeId node_count, ClassId class_count);

  NodeId node_count() const { return node_count_; }
  ClassId class_count() const { return class_count_; }

  bool active(NodeId i) const { return active_[i] != 0; }
  std::optional<ClassId> recommendation(NodeId i) const;
  std::optional<ClassId> prediction(NodeId i) const;

  std::span<const std::uint8_t> spillover_success(NodeId i) const {
    return {success_.data() + Offset(i), static_cast<std::size_t>(class_count_)};
  }
  std::span<const std::uint32_t> spillover_failure(NodeId i) const {
    return {failure_.data() + Offset(i), static_cast<std::size_t>(class_count_)};
  }

  // n x 4l, row i is X_N_i.
  const Eigen::MatrixXd& dynamic_features() const { return dynamic_features_; }
  Eigen::VectorXd dynamic_features(NodeId i) const {
    return dynamic_features_.row(i).transpose();
  }
  void set_dynamic_features(NodeId i, const Eigen::VectorXd& values);

  NodeId active_count() const { return active_count_; }

  void set_prediction(NodeId i, ClassId arm);
  void set_recommendation(NodeId i, ClassId class_id);
  // Monotone: there is no way to deactivate a node.
  void Activate(NodeId i);
  // S_i[k] = 1 and y_i = 1.
  void MarkSpilloverSuccess(NodeId i, ClassId k);
  // S̄_i[k] += 1.
  void AddSpilloverFailure(NodeId i, ClassId k);

 private:
  std::size_t Offset(NodeId i) const {
    return static_cast<std::size_t>(i) * class_count_;
  }

  NodeId node_count_;
  ClassId class_count_;
  NodeId active_count_ = 0;
  std::vector<std::uint8_t> active_;
  std::vector<ClassId> recommendation_;  // -1 when empty
  std::vector<ClassId> prediction_;      // -1 when empty
  std::vector<std::uint8_t> success_;
  std::vector<std::uint32_t> failure_;
  Eigen::MatrixXd dynamic_features_;
};

struct DirectOutcome {
  bool activated = false;
  int new_activations = 0;
  std::vector<AttemptRecord> attempts;
};

// Recommends `class_id` to `node` and runs the single-hop cascade.
//
// Sets t_node, draws the direct activation, and on success attempts each
// currently inactive neighbor in ascending id order, updating y_j and the
// S_j / S̄_j counters. Recipients do not propagate further. RNG order: one
// draw for the node, then one per inactive neighbor (only on success).
//
// Throws ProtocolError if the node is already active or already recommended.
DirectOutcome ApplyDirectRecommendation(SimulationState& state,
                                        const AttributedGraph& graph,
                                        const SpilloverParams& params,
                                        Rng& rng, NodeId node, ClassId class_id);

// Draws one hypothetical recommendation against the current state without
// modifying it, returning the number of activations it would produce. Used
// for counterfactual rollouts.
int SimulateRecommendation(const SimulationState& state,
                           const AttributedGraph& graph,
                           const SpilloverParams& params, Rng& rng,
                           NodeId node, ClassId class_id);

}  // namespace netcb

#endif  // NETCB_DIFFUSION_H_
