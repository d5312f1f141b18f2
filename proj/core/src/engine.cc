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

#include "netcb/engine.h"

#include <cmath>
#include <stdexcept>
#include <string>
#include <utility>

#include "netcb/errors.h"
#include "netcb/features.h"
#include "netcb/metrics.h"

namespace netcb {

namespace {

constexpr std::pair<RunMode, std::string_view> kModeNames[] = {
    {RunMode::kBaseline, "baseline"},
    {RunMode::kFeaturesOnly, "netcb_features_only"},
    {RunMode::kOverride, "netcb_override"},
};

}  // namespace

std::string_view ModeName(RunMode mode) {
  for (const auto& [m, name] : kModeNames) {
    if (m == mode) return name;
  }
  return "unknown";
}

std::optional<RunMode> ParseMode(std::string_view name) {
  for (const auto& [m, n] : kModeNames) {
    if (n == name) return m;
  }
  return std::nullopt;
}

void EngineConfig::Validate() const {
  spillover.Validate();
  if (dar_window_g < 2) throw std::invalid_argument("dar_window_g must be >= 2");
  if (dar_window_h < 1) throw std::invalid_argument("dar_window_h must be >= 1");
  if (!(dar_slope_threshold >= 0.0)) {
    throw std::invalid_argument("dar_slope_threshold must be >= 0");
  }
  if (arm_count < 2) throw std::invalid_argument("arm_count must be >= 2");
  if (simulated_regret_rollouts < 0) {
    throw std::invalid_argument("simulated_regret_rollouts must be >= 0");
  }
}

double ExpectedNetworkReward(
    const SimulationState& state, const AttributedGraph& graph,
    const SpilloverParams& params, NodeId node, ClassId candidate_arm,
    ClassId predicted_arm,
    std::span<const std::optional<ClassId>> neighbor_predictions) {
  std::vector<ClassId> predicted_classes;
  for (NodeId j : graph.neighbors(node)) {
    if (state.active(j)) continue;
    if (static_cast<std::size_t>(j) >= neighbor_predictions.size() ||
        !neighbor_predictions[j].has_value()) {
      throw std::invalid_argument("missing prediction for inactive neighbor " +
                                  std::to_string(j));
    }
    predicted_classes.push_back(*neighbor_predictions[j]);
  }
  // The prediction stands in for the node's class: candidate == predicted is
  // the aligned case, any other candidate the misaligned one.
  return ExpectedActivations(params, candidate_arm, predicted_arm,
                             predicted_classes);
}

double OlsSlope(std::span<const double> values) {
  const std::size_t n = values.size();
  if (n < 2) throw std::invalid_argument("slope needs at least two points");
  const double center = (static_cast<double>(n) - 1.0) / 2.0;
  double numerator = 0.0;
  for (std::size_t k = 0; k < n / 2; ++k) {
    numerator += (center - static_cast<double>(k)) *
                 (values[n - 1 - k] - values[k]);
  }
  const double nd = static_cast<double>(n);
  return numerator / (nd * (nd * nd - 1.0) / 12.0);
}

bool DarIsStable(std::span<const double> dar_history, int g, int h,
                 double threshold) {
  if (g < 2 || h < 1) throw std::invalid_argument("need g >= 2 and h >= 1");
  const std::size_t needed = static_cast<std::size_t>(g + h - 1);
  if (dar_history.size() < needed) return false;
  const std::size_t last = dar_history.size();
  for (int w = 0; w < h; ++w) {
    const std::size_t end = last - static_cast<std::size_t>(w);
    auto window = dar_history.subspan(end - g, g);
    if (std::abs(OlsSlope(window)) > threshold) return false;
  }
  return true;
}

DarStabilityTracker::DarStabilityTracker(int g, int h, double threshold)
    : g_(g), h_(h), threshold_(threshold) {
  if (g < 2 || h < 1) throw std::invalid_argument("need g >= 2 and h >= 1");
}

void DarStabilityTracker::Push(double dar) {
  history_.push_back(dar);
  if (history_.size() < static_cast<std::size_t>(g_)) return;
  std::span<const double> window(history_.data() + history_.size() - g_, g_);
  if (std::abs(OlsSlope(window)) <= threshold_) {
    ++within_run_;
  } else {
    within_run_ = 0;
  }
}

Eigen::Index ContextDimension(const AttributedGraph& graph, RunMode mode) {
  if (mode == RunMode::kBaseline) return graph.feature_dim();
  return graph.feature_dim() + 4 * static_cast<Eigen::Index>(graph.class_count());
}

Engine::Engine(const AttributedGraph& graph, EngineConfig config,
               std::unique_ptr<BanditPolicy> policy)
    : graph_(graph),
      config_(std::move(config)),
      policy_(std::move(policy)),
      state_(graph.node_count(), graph.class_count()),
      rng_(config_.seed, kTrajectoryStream),
      stability_(config_.dar_window_g, config_.dar_window_h,
                 config_.dar_slope_threshold) {
  config_.Validate();
  if (config_.arm_count != graph.class_count()) {
    throw std::invalid_argument("arm_count " +
                                std::to_string(config_.arm_count) +
                                " does not match class count " +
                                std::to_string(graph.class_count()));
  }
  if (!policy_) throw std::invalid_argument("null policy");
  if (policy_->arm_count() != graph.class_count() ||
      policy_->dimension() != ContextDimension(graph, config_.mode)) {
    throw std::invalid_argument("policy shape does not match graph and mode");
  }
}

double Engine::dar() const {
  if (direct_recommendations_ == 0) return 0.0;
  return static_cast<double>(direct_activations_) /
         static_cast<double>(direct_recommendations_);
}

Eigen::VectorXd Engine::Context(NodeId node) const {
  if (config_.mode == RunMode::kBaseline) return graph_.node_features(node);
  return BuildContext(graph_.node_features(node), state_.dynamic_features(node),
                      graph_.feature_dim(), graph_.class_count());
}

ClassId Engine::ChooseRecommendation(NodeId node, ClassId predicted) {
  // Transient predictions for inactive neighbors; nothing is written back.
  std::vector<ClassId> neighbor_classes;
  for (NodeId j : graph_.neighbors(node)) {
    if (state_.active(j)) continue;
    neighbor_classes.push_back(policy_->Select(Context(j)).arm);
  }
  const SpilloverParams& p = config_.spillover;
  ClassId best = predicted;
  double best_value = ExpectedActivations(p, predicted, predicted,
                                          neighbor_classes);
  for (ClassId arm = 0; arm < graph_.class_count(); ++arm) {
    if (arm == predicted) continue;
    const double value =
        ExpectedActivations(p, arm, predicted, neighbor_classes);
    if (value > best_value) {
      best = arm;
      best_value = value;
    }
  }
  return best;
}

RoundRecord Engine::RunRound(NodeId node) {
  if (node < 0 || node >= graph_.node_count()) {
    throw InvalidNodeError("invalid node id " + std::to_string(node));
  }
  if (state_.active(node)) {
    throw ProtocolError("node " + std::to_string(node) + " is already active");
  }
  if (state_.recommendation(node).has_value()) {
    throw ProtocolError("node " + std::to_string(node) +
                        " was already recommended");
  }

  RoundRecord record;
  record.round = ++round_;
  record.node = node;

  const Eigen::VectorXd context = Context(node);
  const ClassId predicted = policy_->Select(context).arm;
  state_.set_prediction(node, predicted);
  record.predicted_arm = predicted;
  record.aligned_prediction = predicted == graph_.label(node);

  record.dar_stable = stability_.stable();
  ClassId recommended = predicted;
  if (config_.mode == RunMode::kOverride && record.dar_stable) {
    recommended = ChooseRecommendation(node, predicted);
  }
  record.recommended_class = recommended;
  record.overridden = recommended != predicted;

  const OracleChoice oracle =
      OracleExpectedOptimum(state_, graph_, config_.spillover, node);
  record.oracle_optimal_arm = oracle.arm;
  record.oracle_expected_reward = oracle.value;
  record.realized_expected_reward = ExpectedRewardUnderTruth(
      state_, graph_, config_.spillover, node, recommended);
  if (config_.simulated_regret_rollouts > 0) {
    Rng rollout_rng(config_.seed, kRolloutStream,
                    static_cast<std::uint64_t>(record.round));
    record.simulated_regret = SimulatedRegret(
        state_, graph_, config_.spillover, node, oracle.arm, recommended,
        config_.simulated_regret_rollouts, rollout_rng);
  }

  const DirectOutcome outcome = ApplyDirectRecommendation(
      state_, graph_, config_.spillover, rng_, node, recommended);
  record.directly_activated = outcome.activated;
  record.network_reward = outcome.new_activations;

  if (config_.mode == RunMode::kBaseline) {
    policy_->Update(predicted, context, record.aligned_prediction ? 1.0 : 0.0);
  } else if (!record.overridden) {
    policy_->Update(predicted, context, record.network_reward);
  }

  UpdateRoundFeatures(state_, graph_, node);

  ++direct_recommendations_;
  if (outcome.activated) ++direct_activations_;
  record.dar = dar();
  stability_.Push(record.dar);
  return record;
}

std::vector<NodeId> ArrivalOrder(NodeId node_count, Rng& rng) {
  std::vector<NodeId> order(node_count);
  for (NodeId i = 0; i < node_count; ++i) order[i] = i;
  for (NodeId i = node_count - 1; i > 0; --i) {
    const auto j = static_cast<NodeId>(rng.UniformIndex(i + 1));
    std::swap(order[i], order[j]);
  }
  return order;
}

std::vector<RoundRecord> RunExperiment(const AttributedGraph& graph,
                                       const EngineConfig& config,
                                       std::unique_ptr<BanditPolicy> policy) {
  Engine engine(graph, config, std::move(policy));
  const std::vector<NodeId> order = ArrivalOrder(graph.node_count(), engine.rng());
  std::vector<RoundRecord> records;
  for (NodeId node : order) {
    if (engine.state().active(node)) continue;
    records.push_back(engine.RunRound(node));
  }
  return records;
}

std::vector<RoundRecord> RunExperiment(const AttributedGraph& graph,
                                       const EngineConfig& config,
                                       const LinUcb::Options& bandit) {
  auto policy = std::make_unique<LinUcb>(ContextDimension(graph, config.mode),
                                         graph.class_count(), bandit);
  return RunExperiment(graph, config, std::move(policy));
}

AlphaSearchResult GridSearchAlpha(const AttributedGraph& graph,
                                  const EngineConfig& config, double ridge,
                                  std::span<const double> grid, int repeats) {
  if (grid.empty()) throw std::invalid_argument("empty alpha grid");
  if (repeats < 1) throw std::invalid_argument("repeats must be >= 1");
  AlphaSearchResult result;
  double best = 0.0;
  for (std::size_t g = 0; g < grid.size(); ++g) {
    double total = 0.0;
    for (int k = 0; k < repeats; ++k) {
      EngineConfig run = config;
      run.seed = config.seed + static_cast<std::uint64_t>(k);
      LinUcb::Options options;
      options.alpha = grid[g];
      options.ridge = ridge;
      total += Summarize(RunExperiment(graph, run, options)).total_regret;
    }
    const double mean = total / repeats;
    result.mean_total_regret.push_back(mean);
    if (g == 0 || mean < best) {
      best = mean;
      result.best_alpha = grid[g];
    }
  }
  return result;
}

}  // namespace netcb
