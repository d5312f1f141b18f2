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


// Acceptance suite: one PASS/FAIL line per criterion, exit status 0 only when
// every criterion passes. Usage: netcb_acceptance [path-to-netcb-cli]

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iterator>
#include <map>
#include <memory>
#include <numeric>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "netcb/bandit.h"
#include "netcb/diffusion.h"
#include "netcb/engine.h"
#include "netcb/features.h"
#include "netcb/graph.h"
#include "netcb/metrics.h"
#include "netcb/synth.h"
#include "netcb/truncated_svd.h"
#include "oracles.h"

namespace netcb {
namespace {

namespace fs = std::filesystem;
namespace t = ::netcb::testing;

struct Verdict {
  bool pass = false;
  std::string detail;
};

std::string Format(const char* fmt, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof(buf), fmt, args...);
  return buf;
}

// 1. Four-block features on the six-node toy network.
Verdict WorkedExample() {
  std::vector<Edge> edges;
  for (NodeId j = 1; j <= 5; ++j) edges.push_back({0, j});
  const ClassId p = 0, s = 1;
  AttributedGraph g(6, edges, Eigen::MatrixXd::Zero(6, 1), {p, s, p, s, p, p},
                    2);

  SimulationState recs(6, 2);
  recs.set_recommendation(1, p);
  recs.set_recommendation(4, p);
  recs.set_recommendation(5, p);
  recs.set_recommendation(3, s);
  const Eigen::VectorXd a = ComputeFeatures(recs, g, 0);
  recs.Activate(4);
  const Eigen::VectorXd b = ComputeFeatures(recs, g, 0);

  SimulationState spill(6, 2);
  spill.AddSpilloverFailure(2, p);
  spill.AddSpilloverFailure(2, p);
  spill.AddSpilloverFailure(2, s);
  spill.AddSpilloverFailure(3, p);
  spill.AddSpilloverFailure(4, p);
  const Eigen::VectorXd c = ComputeFeatures(spill, g, 0);
  SimulationState after(6, 2);
  after.AddSpilloverFailure(2, p);
  after.AddSpilloverFailure(2, p);
  after.AddSpilloverFailure(2, s);
  after.AddSpilloverFailure(3, p);
  after.MarkSpilloverSuccess(4, p);
  const Eigen::VectorXd d = ComputeFeatures(after, g, 0);

  const double got[8] = {a(0), a(1), b(2), b(3), c(4), c(5), d(6), d(7)};
  const double want[8] = {3.0 / 4, 1.0 / 4, 2.0 / 3, 1.0 / 3,
                          4.0 / 5, 1.0 / 5, 3.0 / 4, 1.0 / 4};
  int exact = 0;
  for (int i = 0; i < 8; ++i) exact += got[i] == want[i];
  return {exact == 8, Format("%d/8 values exact", exact)};
}

// 2. Closed-form expected activations vs Monte-Carlo rollouts.
Verdict AnalyticVsSimulation() {
  t::Gen gen(2002);
  const int trials = 100000;
  int comparisons = 0, within = 0;
  double worst = 0.0;
  for (int graph_index = 0; graph_index < 20; ++graph_index) {
    const NodeId n = t::UniformInt(gen, 2, 30);
    const ClassId l = t::UniformInt(gen, 2, 3);
    auto g = t::RandomGraph(gen, n, l, t::UniformReal(gen, 0.05, 0.4));
    auto state = t::RandomActiveState(gen, g, 0.2);
    const auto params = t::RandomParams(gen);
    std::vector<std::optional<ClassId>> truth(g.labels().begin(),
                                              g.labels().end());
    for (NodeId node = 0; node < n; ++node) {
      for (ClassId arm = 0; arm < l; ++arm) {
        const double analytic = ExpectedNetworkReward(
            state, g, params, node, arm, g.label(node), truth);
        const auto mc = t::SimulateActivations(
            state, g, params, node, arm, trials,
            (static_cast<std::uint64_t>(graph_index) << 32) ^
                (static_cast<std::uint64_t>(node) << 8) ^ arm);
        const double diff = std::abs(analytic - mc.mean);
        const double z = mc.standard_error > 0
                             ? diff / mc.standard_error
                             : (diff == 0.0 ? 0.0 : INFINITY);
        worst = std::max(worst, z);
        ++comparisons;
        within += z <= 3.0;
      }
    }
  }
  return {within == comparisons,
          Format("%d/%d node-arm pairs within 3 SE (max |z| = %.2f, "
                 "%.1f exceedances expected by chance)",
                 within, comparisons, worst, comparisons * 0.0027)};
}

// 3. Cached features after engine rounds vs from-scratch recomputation.
Verdict IncrementalFeatures() {
  t::Gen gen(3003);
  int rounds = 0, graphs = 0;
  long mismatches = 0;
  while (rounds < 500) {
    ++graphs;
    const NodeId n = t::UniformInt(gen, 2, 100);
    const ClassId l = t::UniformInt(gen, 2, 4);
    auto g = t::RandomGraph(gen, n, l, t::UniformReal(gen, 0.01, 0.3));
    EngineConfig config;
    config.mode = RunMode::kFeaturesOnly;
    config.arm_count = l;
    config.seed = graphs;
    config.spillover = t::RandomParams(gen);
    Engine engine(g, config,
                  std::make_unique<UniformRandomPolicy>(
                      ContextDimension(g, config.mode), l, graphs));
    Rng order_rng(graphs, 7);
    for (NodeId node : ArrivalOrder(n, order_rng)) {
      if (rounds >= 500) break;
      if (engine.state().active(node)) continue;
      engine.RunRound(node);
      ++rounds;
      for (NodeId i = 0; i < n; ++i) {
        if (engine.state().dynamic_features(i) !=
            t::FeatureOracle(engine.state(), g, i)) {
          ++mismatches;
        }
      }
    }
  }
  return {mismatches == 0,
          Format("%d rounds on %d graphs, %ld mismatching node vectors", rounds,
                 graphs, mismatches)};
}

// 4. LinUCB scores, parameters and inverses vs dense linear algebra.
Verdict LinUcbOracle() {
  t::Gen gen(4004);
  double worst = 0.0;
  for (int seq = 0; seq < 1000; ++seq) {
    const Eigen::Index d = t::UniformInt(gen, 1, 64);
    const ClassId arms = t::UniformInt(gen, 1, 4);
    const double alpha = t::UniformReal(gen, 0.0, 5.0);
    const double ridge = t::UniformReal(gen, 0.1, 4.0);
    LinUcb model(d, arms, {.alpha = alpha, .ridge = ridge});
    std::vector<Eigen::MatrixXd> a(arms, ridge * Eigen::MatrixXd::Identity(d, d));
    std::vector<Eigen::VectorXd> b(arms, Eigen::VectorXd::Zero(d));
    const int steps = t::UniformInt(gen, 1, 40);
    for (int s = 0; s < steps; ++s) {
      const Eigen::VectorXd x = t::RandomMatrix(gen, d, 1);
      const ClassId arm = t::UniformInt(gen, 0, arms - 1);
      const double r = t::UniformInt(gen, 0, 6);
      model.Update(arm, x, r);
      a[arm] += x * x.transpose();
      b[arm] += r * x;
    }
    const Eigen::VectorXd x = t::RandomMatrix(gen, d, 1);
    const Eigen::VectorXd scores = model.Scores(x);
    for (ClassId k = 0; k < arms; ++k) {
      const auto solver = a[k].ldlt();
      const Eigen::VectorXd theta = solver.solve(b[k]);
      const double score =
          theta.dot(x) + alpha * std::sqrt(x.dot(solver.solve(x)));
      worst = std::max(worst, std::abs(scores(k) - score));
      worst = std::max(worst, (model.theta(k) - theta).cwiseAbs().maxCoeff());
      worst = std::max(
          worst, (model.inverse(k) - a[k].inverse()).cwiseAbs().maxCoeff());
    }
  }
  return {worst < 1e-6,
          Format("1000 sequences, max abs deviation %.3g", worst)};
}

// 5. DAR stability with the default windows.
Verdict DarStability() {
  const int g = 300, h = 300;
  const double theta = 1e-5;
  std::vector<double> constant(g + h, 0.63);
  std::vector<double> line(g + h), gentle(g + h);
  for (int i = 0; i < g + h; ++i) {
    line[i] = 0.3 + 2e-5 * i;
    gentle[i] = 0.3 + 5e-6 * i;
  }
  std::vector<double> short_constant(g + h - 2, 0.63);
  const bool ok = DarIsStable(constant, g, h, theta) &&
                  DarIsStable(constant, g, h, 0.0) &&
                  !DarIsStable(line, g, h, theta) &&
                  DarIsStable(gentle, g, h, theta) &&
                  !DarIsStable(short_constant, g, h, theta) &&
                  OlsSlope(constant) == 0.0;
  DarStabilityTracker tracker(g, h, theta);
  bool tracker_ok = true;
  for (double v : line) {
    tracker.Push(v);
    tracker_ok = tracker_ok && !tracker.stable();
  }
  DarStabilityTracker flat(g, h, theta);
  for (double v : constant) flat.Push(v);
  tracker_ok = tracker_ok && flat.stable();
  return {ok && tracker_ok,
          ok && tracker_ok ? "constant -> stable, slope 2e-5 -> unstable"
                           : "unexpected verdict"};
}

struct DirectionalSetup {
  NodeId nodes = 600;
  ClassId classes = 3;
  double within = 0.05;
  double between = 0.003;
  Eigen::Index dim = 16;
  double noise = 4.0;
  std::uint64_t graph_seed = 1;
  int window_g = 100;
  int window_h = 100;
  double threshold = 1e-3;
  std::uint64_t tuning_seed = 1000;
  int tuning_repeats = 10;
  int eval_repeats = 10;
};

// 6. Mean total expected regret ordering on a high-homophily SBM.
Verdict Directional() {
  const DirectionalSetup s;
  const auto g = GenerateSbm(s.nodes, s.classes, s.within, s.between, s.dim,
                             s.graph_seed, s.noise);
  const RunMode modes[] = {RunMode::kBaseline, RunMode::kFeaturesOnly,
                           RunMode::kOverride};
  std::map<RunMode, std::vector<double>> regret;
  std::map<RunMode, double> alpha;
  for (RunMode mode : modes) {
    EngineConfig config;
    config.mode = mode;
    config.arm_count = s.classes;
    config.dar_window_g = s.window_g;
    config.dar_window_h = s.window_h;
    config.dar_slope_threshold = s.threshold;
    config.seed = s.tuning_seed;
    alpha[mode] =
        GridSearchAlpha(g, config, 1.0, kAlphaGrid, s.tuning_repeats).best_alpha;
    for (int k = 0; k < s.eval_repeats; ++k) {
      config.seed = static_cast<std::uint64_t>(k);
      LinUcb::Options options;
      options.alpha = alpha[mode];
      regret[mode].push_back(
          Summarize(RunExperiment(g, config, options)).total_regret);
    }
  }
  auto mean = [](const std::vector<double>& v) {
    return std::accumulate(v.begin(), v.end(), 0.0) / v.size();
  };
  const double base = mean(regret[RunMode::kBaseline]);
  const double feat = mean(regret[RunMode::kFeaturesOnly]);
  const double over = mean(regret[RunMode::kOverride]);
  int wins = 0;
  for (int k = 0; k < s.eval_repeats; ++k) {
    wins += regret[RunMode::kOverride][k] < regret[RunMode::kBaseline][k];
  }
  const bool ok = over <= feat && feat <= base && wins >= 8;
  return {ok,
          Format("homophily %.3f; mean regret override %.1f (alpha %g), "
                 "features %.1f (alpha %g), baseline %.1f (alpha %g); "
                 "override < baseline in %d/10 seeds",
                 Homophily(g), over, alpha[RunMode::kOverride], feat,
                 alpha[RunMode::kFeaturesOnly], base,
                 alpha[RunMode::kBaseline], wins)};
}

// 7. Homophily editing properties.
Verdict GeneratorProperties() {
  t::Gen gen(7007);
  int increase_trials = 0, decrease_trials = 0, violations = 0;
  while (increase_trials < 1000 || decrease_trials < 1000) {
    const NodeId n = t::UniformInt(gen, 3, 60);
    const ClassId l = t::UniformInt(gen, 2, 4);
    auto g = t::RandomGraph(gen, n, l, t::UniformReal(gen, 0.05, 0.4));
    if (g.edge_count() == 0) continue;
    const double start = Homophily(g);
    Rng rng(increase_trials * 7919 + decrease_trials);
    if (increase_trials < 1000 && start < 1.0) {
      ++increase_trials;
      auto out = IncreaseHomophily(g, t::UniformReal(gen, start + 1e-9, 1.0), rng);
      double prev = start;
      for (double h : out.trace) {
        violations += !(h > prev);
        prev = h;
      }
      for (NodeId i = 0; i < n; ++i) {
        violations += g.degree(i) > 0 && out.graph.degree(i) < 1;
      }
      for (const Edge& e : g.edges()) {
        violations += !out.graph.has_edge(e.u, e.v) && g.label(e.u) == g.label(e.v);
      }
      violations += g.edge_count() - out.graph.edge_count() != out.steps;
    }
    if (decrease_trials < 1000 && start > 0.0) {
      ++decrease_trials;
      auto out = DecreaseHomophily(g, t::UniformReal(gen, 0.0, start), rng, 1000);
      for (NodeId i = 0; i < n; ++i) {
        violations += out.graph.degree(i) != g.degree(i);
      }
      violations += out.graph.edges() != g.edges();
      double prev = start;
      for (double h : out.trace) {
        violations += h > prev;
        prev = h;
      }
      violations += Homophily(out.graph) > start;
    }
  }
  return {violations == 0,
          Format("%d increase + %d decrease trials, %d violations",
                 increase_trials, decrease_trials, violations)};
}

std::string Slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), {}};
}

// 8. Two CLI invocations with one config give identical round files.
Verdict Determinism(const std::string& cli) {
  if (cli.empty()) return {false, "no CLI path given"};
  const fs::path root = fs::temp_directory_path() / "netcb_acceptance_det";
  fs::remove_all(root);
  fs::create_directories(root);
  std::ofstream(root / "run.cfg") << "synthetic.nodes = 300\n"
                                     "synthetic.classes = 3\n"
                                     "synthetic.within_prob = 0.06\n"
                                     "synthetic.between_prob = 0.005\n"
                                     "engine.dar_window_g = 40\n"
                                     "engine.dar_window_h = 40\n"
                                     "engine.dar_slope_threshold = 0.001\n"
                                     "engine.simulated_regret_rollouts = 2\n"
                                     "run.repeats = 2\n"
                                     "run.threads = 2\n";
  for (const char* out : {"a", "b"}) {
    const std::string cmd = "\"" + cli + "\" --config \"" +
                            (root / "run.cfg").string() + "\" --out \"" +
                            (root / out).string() + "\" --seed 5 >/dev/null 2>&1";
    if (std::system(cmd.c_str()) != 0) return {false, "CLI exited nonzero"};
  }
  int files = 0, identical = 0;
  for (const auto& entry : fs::directory_iterator(root / "a")) {
    if (entry.path().extension() != ".csv") continue;
    ++files;
    identical += Slurp(entry.path()) ==
                 Slurp(root / "b" / entry.path().filename());
  }
  fs::remove_all(root);
  return {files == 6 && identical == files,
          Format("%d/%d round CSVs byte-identical", identical, files)};
}

// 9. Randomized truncated SVD vs exact rank and a dense oracle.
Verdict TruncatedSvdOracle() {
  t::Gen gen(9009);
  double worst_rank = 0.0, worst_energy = 0.0;
  for (int trial = 0; trial < 25; ++trial) {
    const Eigen::Index rank = t::UniformInt(gen, 1, 30);
    const Eigen::MatrixXd x =
        t::RandomMatrix(gen, 50, rank) * t::RandomMatrix(gen, rank, 30);
    const auto svd = ReduceFeatures(x, rank, trial);
    const Eigen::MatrixXd approx = svd.projected * svd.components.transpose();
    worst_rank = std::max(worst_rank, (x - approx).norm() / x.norm());
  }
  for (int trial = 0; trial < 25; ++trial) {
    const Eigen::MatrixXd x = t::RandomMatrix(gen, 50, 30);
    const Eigen::Index k = t::UniformInt(gen, 1, 30);
    const double got = ReduceFeatures(x, k, trial).projected.squaredNorm();
    const double want = t::DeflationSingularValues(x, k).squaredNorm();
    worst_energy = std::max(worst_energy, std::abs(got - want) / want);
  }
  return {worst_rank < 1e-6 && worst_energy < 0.01,
          Format("max rank-k relative error %.2g, max top-k energy gap %.3g%%",
                 worst_rank, 100 * worst_energy)};
}

}  // namespace
}  // namespace netcb

int main(int argc, char** argv) {
  using netcb::Verdict;
  const std::string cli = argc > 1 ? argv[1] : "";
  struct Criterion {
    int id;
    const char* name;
    double budget_seconds;
    std::function<Verdict()> run;
  };
  const std::vector<Criterion> criteria = {
      {1, "worked-example fidelity", 1, netcb::WorkedExample},
      {2, "analytic vs simulation", 120, netcb::AnalyticVsSimulation},
      {3, "incremental features", 30, netcb::IncrementalFeatures},
      {4, "LinUCB linear algebra", 30, netcb::LinUcbOracle},
      {5, "DAR stability", 1, netcb::DarStability},
      {6, "directional regret ordering", 600, netcb::Directional},
      {7, "generator properties", 60, netcb::GeneratorProperties},
      {8, "CLI determinism", 60, [&] { return netcb::Determinism(cli); }},
      {9, "truncated SVD", 10, netcb::TruncatedSvdOracle},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Verdict v;
    try {
      v = c.run();
    } catch (const std::exception& e) {
      v = {false, std::string("exception: ") + e.what()};
    }
    const double seconds = std::chrono::duration<double>(
                               std::chrono::steady_clock::now() - start)
                               .count();
    const bool in_time = seconds < c.budget_seconds;
    const bool pass = v.pass && in_time;
    failed += !pass;
    std::printf("%s  %d %-28s %8.2fs / %4.0fs  %s%s\n", pass ? "PASS" : "FAIL",
                c.id, c.name, seconds, c.budget_seconds, v.detail.c_str(),
                in_time ? "" : " (over time budget)");
    std::fflush(stdout);
  }
  std::printf("%d/%zu criteria passed\n",
              static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
