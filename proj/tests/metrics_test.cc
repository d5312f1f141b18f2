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

#include <cmath>
#include <numeric>
#include <vector>

#include "gtest/gtest.h"
#include "netcb/engine.h"
#include "netcb/errors.h"
#include "oracles.h"

namespace netcb {
namespace {

AttributedGraph Star(int leaves, std::vector<ClassId> labels, ClassId l) {
  std::vector<Edge> edges;
  for (NodeId j = 1; j <= leaves; ++j) edges.push_back({0, j});
  return AttributedGraph(leaves + 1, edges,
                         Eigen::MatrixXd::Zero(leaves + 1, 1),
                         std::move(labels), l);
}

TEST(OracleTest, HandValues) {
  auto g = Star(3, {0, 0, 0, 0}, 2);
  SimulationState state(4, 2);
  SpilloverParams p;
  auto best = OracleExpectedOptimum(state, g, p, 0);
  EXPECT_EQ(best.arm, 0);
  EXPECT_NEAR(best.value, 1.33, 1e-12);
  EXPECT_NEAR(ExpectedRewardUnderTruth(state, g, p, 0, 1), 0.5, 1e-12);
}

TEST(OracleTest, IsolatedNodeTakesTrueLabel) {
  AttributedGraph g(2, {}, Eigen::MatrixXd::Zero(2, 1), {1, 0}, 3);
  SimulationState state(2, 3);
  auto best = OracleExpectedOptimum(state, g, SpilloverParams{}, 0);
  EXPECT_EQ(best.arm, 1);
  EXPECT_EQ(best.value, 0.7);
  // p_a == p_m: every arm ties and the lowest index wins.
  SpilloverParams flat;
  flat.p_m = flat.p_a;
  EXPECT_EQ(OracleExpectedOptimum(state, g, flat, 0).arm, 0);
}

TEST(OracleTest, ActiveNodeThrows) {
  auto g = Star(1, {0, 0}, 2);
  SimulationState state(2, 2);
  state.Activate(0);
  EXPECT_THROW(OracleExpectedOptimum(state, g, SpilloverParams{}, 0),
               ProtocolError);
}

TEST(OracleTest, MonteCarloOfOracleArm) {
  testing::Gen gen(61);
  auto g = testing::RandomGraph(gen, 15, 3, 0.4);
  auto state = testing::RandomActiveState(gen, g, 0.2);
  SpilloverParams p;
  for (NodeId node = 0; node < 15; ++node) {
    if (state.active(node)) continue;
    auto best = OracleExpectedOptimum(state, g, p, node);
    auto mc = testing::SimulateActivations(state, g, p, node, best.arm, 100000,
                                           700 + node);
    EXPECT_NEAR(best.value, mc.mean, 3 * mc.standard_error) << "node " << node;
  }
}

TEST(RoundRegretTest, Examples) {
  RoundRecord r;
  r.oracle_expected_reward = 1.33;
  r.realized_expected_reward = 1.33;
  EXPECT_EQ(RoundRegret(r), 0.0);
  r.realized_expected_reward = 0.5;
  EXPECT_NEAR(RoundRegret(r), 0.83, 1e-12);
}

TEST(SummarizeTest, EmptyThrows) {
  std::vector<RoundRecord> none;
  EXPECT_THROW(Summarize(none), std::invalid_argument);
}

TEST(SummarizeTest, AlignedPredictionsGiveFullAccuracy) {
  std::vector<RoundRecord> records(4);
  for (int i = 0; i < 4; ++i) {
    records[i].round = i + 1;
    records[i].aligned_prediction = true;
    records[i].oracle_expected_reward = 1.0 + i;
    records[i].realized_expected_reward = 0.5 + i;
    records[i].network_reward = i;
    records[i].dar = 0.25 * i;
  }
  records[2].overridden = true;
  auto s = Summarize(records);
  EXPECT_EQ(s.bandit_accuracy, 1.0);
  EXPECT_EQ(s.rounds, 4u);
  EXPECT_EQ(s.override_count, 1u);
  EXPECT_EQ(s.total_network_reward, 6);
  EXPECT_EQ(s.final_dar, 0.75);
  EXPECT_NEAR(s.total_regret, 2.0, 1e-12);
  EXPECT_EQ(s.cumulative_regret_series.size(), 4u);
  EXPECT_FALSE(s.total_simulated_regret.has_value());
}

TEST(SummarizeTest, RandomPolicyAccuracyNearHalf) {
  const NodeId n = 2000;
  std::vector<ClassId> labels(n);
  for (NodeId i = 0; i < n; ++i) labels[i] = i % 2;
  AttributedGraph g(n, {}, Eigen::MatrixXd::Zero(n, 1), labels, 2);
  EngineConfig config;
  config.mode = RunMode::kBaseline;
  config.arm_count = 2;
  auto records = RunExperiment(
      g, config, std::make_unique<UniformRandomPolicy>(1, 2, 17));
  ASSERT_EQ(records.size(), 2000u);
  EXPECT_NEAR(Summarize(records).bandit_accuracy, 0.5, 0.05);
}

// Property: the regret series is the nondecreasing prefix sum of per-round
// regret and B_acc scores predictions, including overridden rounds.
TEST(SummarizePropertyTest, SeriesAndTotals) {
  testing::Gen gen(62);
  for (int trial = 0; trial < 40; ++trial) {
    const NodeId n = testing::UniformInt(gen, 2, 60);
    const ClassId l = testing::UniformInt(gen, 2, 3);
    auto g = testing::RandomGraph(gen, n, l, 0.15);
    EngineConfig config;
    config.mode = RunMode::kOverride;
    config.arm_count = l;
    config.seed = trial;
    config.dar_window_g = 3;
    config.dar_window_h = 2;
    config.dar_slope_threshold = 0.1;
    auto records = RunExperiment(g, config, LinUcb::Options{});
    auto s = Summarize(records);
    double running = 0.0;
    int aligned = 0;
    std::int64_t reward = 0;
    for (std::size_t i = 0; i < records.size(); ++i) {
      const double step = RoundRegret(records[i]);
      EXPECT_GE(step, -1e-12);
      running += step;
      EXPECT_NEAR(s.cumulative_regret_series[i], running, 1e-9);
      if (i > 0) {
        EXPECT_GE(s.cumulative_regret_series[i],
                  s.cumulative_regret_series[i - 1]);
      }
      aligned += records[i].predicted_arm == g.label(records[i].node);
      EXPECT_NEAR(s.cumulative_accuracy_series[i],
                  static_cast<double>(aligned) / (i + 1), 1e-12);
      reward += records[i].network_reward;
    }
    EXPECT_NEAR(s.total_regret, running, 1e-9);
    EXPECT_EQ(s.bandit_accuracy,
              static_cast<double>(aligned) / records.size());
    EXPECT_EQ(s.total_network_reward, reward);
    EXPECT_EQ(s.final_dar, records.back().dar);
  }
}

// Property: averaged over repeats, the rollout regret estimate converges to
// the expected regret on a small fixed graph.
TEST(SimulatedRegretTest, ConvergesToExpected) {
  testing::Gen gen(63);
  auto g = testing::RandomGraph(gen, 10, 2, 0.4);
  auto state = testing::RandomActiveState(gen, g, 0.2);
  SpilloverParams p;
  NodeId node = 0;
  while (state.active(node)) ++node;
  auto best = OracleExpectedOptimum(state, g, p, node);
  for (ClassId rec = 0; rec < 2; ++rec) {
    const double expected =
        best.value - ExpectedRewardUnderTruth(state, g, p, node, rec);
    Rng rng(5, kRolloutStream);
    const int repeats = 400;
    std::vector<double> draws;
    for (int r = 0; r < repeats; ++r) {
      draws.push_back(SimulatedRegret(state, g, p, node, best.arm, rec, 100, rng));
    }
    const double mean =
        std::accumulate(draws.begin(), draws.end(), 0.0) / repeats;
    double var = 0.0;
    for (double d : draws) var += (d - mean) * (d - mean);
    const double se = std::sqrt(var / (repeats - 1) / repeats);
    EXPECT_NEAR(mean, expected, 3 * se + 1e-12);
  }
}

}  // namespace
}  // namespace netcb
