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

#ifndef NETCB_ENGINE_H_
#define NETCB_ENGINE_H_

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "netcb/bandit.h"
#include "netcb/diffusion.h"
#include "netcb/graph.h"
#include "netcb/rng.h"
#include "netcb/round_record.h"

namespace netcb {

struct EngineConfig {
  RunMode mode = RunMode::kOverride;
  SpilloverParams spillover;
  int dar_window_g = 300;
  int dar_window_h = 300;
  double dar_slope_threshold = 1e-5;
  std::uint64_t seed = 0;
  // Must equal the graph's class count.
  ClassId arm_count = 2;
  // Counterfactual rollouts per round for the simulated regret; 0 disables.
  int simulated_regret_rollouts = 0;

  // Throws std::invalid_argument.
  void Validate() const;
};

// Expected network reward of recommending `candidate_arm` to `node`
// when the bandit predicted `predicted_arm`, treating the predictions as the
// true classes. `neighbor_predictions` is indexed by node id and must hold a
// value for every inactive neighbor of `node` (std::invalid_argument
// otherwise).
double ExpectedNetworkReward(
    const SimulationState& state, const AttributedGraph& graph,
    const SpilloverParams& params, NodeId node, ClassId candidate_arm,
    ClassId predicted_arm,
    std::span<const std::optional<ClassId>> neighbor_predictions);

// Least-squares slope of `values` against 0, 1, ..., size - 1. Exactly zero
// for a constant sequence. Needs at least two values.
double OlsSlope(std::span<const double> values);

// True iff the history has at least g + h - 1 points and the slope of each of
// the last h windows of g consecutive points is within [-threshold,
// threshold].
bool DarIsStable(std::span<const double> dar_history, int g, int h,
                 double threshold);

// Incremental form of DarIsStable: O(g) per pushed point.
class DarStabilityTracker {
 public:
  DarStabilityTracker(int g, int h, double threshold);

  void Push(double dar);
  bool stable() const { return within_run_ >= h_; }
  const std::vector<double>& history() const { return history_; }

 private:
  int g_;
  int h_;
  double threshold_;
  int within_run_ = 0;
  std::vector<double> history_;
};

// Context dimension the policy sees in `mode`.
Eigen::Index ContextDimension(const AttributedGraph& graph, RunMode mode);

// One experiment run: owns the simulation state, the policy and the
// trajectory RNG stream.
class Engine {
 public:
  Engine(const AttributedGraph& graph, EngineConfig config,
         std::unique_ptr<BanditPolicy> policy);

  // Runs one round for the arriving `node`. Throws ProtocolError if the node
  // is active or was already recommended.
  RoundRecord RunRound(NodeId node);

  Eigen::VectorXd Context(NodeId node) const;

  const SimulationState& state() const { return state_; }
  const BanditPolicy& policy() const { return *policy_; }
  const EngineConfig& config() const { return config_; }
  const DarStabilityTracker& stability() const { return stability_; }
  Rng& rng() { return rng_; }
  int rounds() const { return round_; }
  double dar() const;

 private:
  ClassId ChooseRecommendation(NodeId node, ClassId predicted);

  const AttributedGraph& graph_;
  EngineConfig config_;
  std::unique_ptr<BanditPolicy> policy_;
  SimulationState state_;
  Rng rng_;
  DarStabilityTracker stability_;
  int round_ = 0;
  std::int64_t direct_recommendations_ = 0;
  std::int64_t direct_activations_ = 0;
};

// Seeded uniform arrival order drawn from the head of the trajectory stream.
std::vector<NodeId> ArrivalOrder(NodeId node_count, Rng& rng);

// Full run: fresh state, seeded arrival permutation, nodes already active at
// their turn are skipped. Records are in round order.
std::vector<RoundRecord> RunExperiment(const AttributedGraph& graph,
                                       const EngineConfig& config,
                                       std::unique_ptr<BanditPolicy> policy);
std::vector<RoundRecord> RunExperiment(const AttributedGraph& graph,
                                       const EngineConfig& config,
                                       const LinUcb::Options& bandit);

struct AlphaSearchResult {
  double best_alpha = 0.0;
  std::vector<double> mean_total_regret;  // parallel to the grid
};

// Picks the exploration constant with the lowest mean total expected regret
// over seeds config.seed + [0, repeats). Ties go to the earlier grid entry.
AlphaSearchResult GridSearchAlpha(const AttributedGraph& graph,
                                  const EngineConfig& config, double ridge,
                                  std::span<const double> grid, int repeats);

}  // namespace netcb

#endif  // NETCB_ENGINE_H_
