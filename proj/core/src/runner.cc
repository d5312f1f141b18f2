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

#include "netcb/runner.h"

#include <atomic>
#include <charconv>
#include <cmath>
#include <exception>
#include <fstream>
#include <memory>
#include <numeric>
#include <thread>
#include <vector>

#include <spdlog/spdlog.h>

#include "json.hpp"
#include "netcb/bandit.h"
#include "netcb/dataset.h"
#include "netcb/engine.h"
#include "netcb/metrics.h"
#include "netcb/rng.h"
#include "netcb/synth.h"
#include "netcb/truncated_svd.h"

namespace netcb {
namespace {

using nlohmann::ordered_json;

std::string FormatDouble(double value) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value);
  return std::string(buf, ptr);
}

struct RunJob {
  RunMode mode;
  std::uint64_t seed;
  double alpha;
};

struct RunOutcome {
  MetricsSummary summary;
  std::exception_ptr error;
};

std::unique_ptr<BanditPolicy> MakePolicy(const ExperimentSpec& spec,
                                         const AttributedGraph& graph,
                                         RunMode mode, double alpha,
                                         std::uint64_t seed) {
  const Eigen::Index dim = ContextDimension(graph, mode);
  if (spec.bandit.policy == PolicyKind::kRandom) {
    return std::make_unique<UniformRandomPolicy>(dim, graph.class_count(), seed);
  }
  LinUcb::Options options;
  options.alpha = alpha;
  options.ridge = spec.bandit.ridge;
  return std::make_unique<LinUcb>(dim, graph.class_count(), options);
}

ordered_json Stats(const std::vector<double>& values) {
  const double n = static_cast<double>(values.size());
  const double mean = std::accumulate(values.begin(), values.end(), 0.0) / n;
  double ss = 0.0;
  for (double v : values) ss += (v - mean) * (v - mean);
  const double sd = values.size() > 1 ? std::sqrt(ss / (n - 1.0)) : 0.0;
  return ordered_json{{"mean", mean}, {"sd", sd}, {"values", values}};
}

// Runs `count` jobs on up to `threads` workers; `body(i)` must be
// independent per index.
template <typename Body>
void ParallelFor(std::size_t count, int threads, Body body) {
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < count; i = next++) body(i);
  };
  const std::size_t workers =
      std::min<std::size_t>(static_cast<std::size_t>(threads), count);
  if (workers <= 1) {
    worker();
    return;
  }
  std::vector<std::jthread> pool;
  for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(worker);
}

}  // namespace

AttributedGraph PrepareGraph(const ExperimentSpec& spec) {
  std::optional<AttributedGraph> graph;
  if (spec.dataset) {
    LoadedDataset loaded = LoadDataset(*spec.dataset, spec.class_count);
    if (loaded.report.duplicate_edges > 0 || loaded.report.self_loops > 0) {
      spdlog::warn("dropped {} duplicate edges and {} self-loops",
                   loaded.report.duplicate_edges, loaded.report.self_loops);
    }
    graph.emplace(std::move(loaded.graph));
  } else {
    const SyntheticSpec& s = *spec.synthetic;
    graph.emplace(GenerateSbm(s.nodes, s.classes, s.within_prob,
                              s.between_prob, s.dim, s.seed, s.noise));
  }

  if (spec.preprocess.target_homophily && graph->edge_count() > 0) {
    const double target = *spec.preprocess.target_homophily;
    const double current = Homophily(*graph);
    Rng rng(spec.preprocess.seed);
    if (target > current) {
      HomophilyEdit edit = IncreaseHomophily(*graph, target, rng);
      if (!edit.reached) {
        spdlog::warn("homophily target {} not reached, achieved {}", target,
                     edit.achieved);
      }
      graph.emplace(std::move(edit.graph));
    } else if (target < current) {
      HomophilyEdit edit = DecreaseHomophily(*graph, target, rng,
                                             spec.preprocess.max_rejections);
      if (!edit.reached) {
        spdlog::warn("homophily target {} not reached, achieved {}", target,
                     edit.achieved);
      }
      graph.emplace(std::move(edit.graph));
    }
  }

  if (spec.preprocess.reduce_dim &&
      *spec.preprocess.reduce_dim < graph->feature_dim()) {
    TruncatedSvd svd = ReduceFeatures(graph->features(),
                                      *spec.preprocess.reduce_dim,
                                      spec.preprocess.seed);
    AttributedGraph reduced(graph->node_count(), graph->edges(),
                            std::move(svd.projected), graph->labels(),
                            graph->class_count());
    graph.emplace(std::move(reduced));
  }
  return std::move(*graph);
}

std::string RoundsFileName(RunMode mode, std::uint64_t seed) {
  return std::string(ModeName(mode)) + "_seed" + std::to_string(seed) + ".csv";
}

void WriteRoundsCsv(const std::filesystem::path& path,
                    std::span<const RoundRecord> records) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << "round,node,predicted_arm,recommended_class,overridden,"
         "directly_activated,network_reward,dar,cum_regret,cum_bacc\n";
  double regret = 0.0;
  std::size_t aligned = 0;
  for (std::size_t i = 0; i < records.size(); ++i) {
    const RoundRecord& r = records[i];
    regret += RoundRegret(r);
    if (r.aligned_prediction) ++aligned;
    const double bacc =
        static_cast<double>(aligned) / static_cast<double>(i + 1);
    out << r.round << ',' << r.node << ',' << (r.predicted_arm + 1) << ','
        << (r.recommended_class + 1) << ',' << (r.overridden ? 1 : 0) << ','
        << (r.directly_activated ? 1 : 0) << ',' << r.network_reward << ','
        << FormatDouble(r.dar) << ',' << FormatDouble(regret) << ','
        << FormatDouble(bacc) << '\n';
  }
  out.flush();
  if (!out) throw std::runtime_error("failed writing " + path.string());
}

int Run(const ExperimentSpec& spec) {
  try {
    spec.Validate();
    const AttributedGraph graph = PrepareGraph(spec);
    spdlog::info("graph: {} nodes, {} edges, {} classes, {} features",
                 graph.node_count(), graph.edge_count(), graph.class_count(),
                 graph.feature_dim());

    std::filesystem::create_directories(spec.output_dir);

    EngineConfig base = spec.engine;
    base.arm_count = graph.class_count();

    std::vector<double> alphas;
    for (RunMode mode : spec.modes) {
      double alpha = spec.bandit.alpha;
      if (!spec.bandit.alpha_grid.empty() &&
          spec.bandit.policy == PolicyKind::kLinUcb) {
        EngineConfig search = base;
        search.mode = mode;
        search.seed = spec.base_seed;
        alpha = GridSearchAlpha(graph, search, spec.bandit.ridge,
                                spec.bandit.alpha_grid,
                                spec.bandit.grid_repeats)
                    .best_alpha;
        spdlog::info("{}: grid-searched alpha = {}", ModeName(mode), alpha);
      }
      alphas.push_back(alpha);
    }

    std::vector<RunJob> jobs;
    for (std::size_t m = 0; m < spec.modes.size(); ++m) {
      for (int k = 0; k < spec.repeats; ++k) {
        jobs.push_back({spec.modes[m],
                        spec.base_seed + static_cast<std::uint64_t>(k),
                        alphas[m]});
      }
    }

    std::vector<RunOutcome> outcomes(jobs.size());
    ParallelFor(jobs.size(), spec.threads, [&](std::size_t i) {
      try {
        const RunJob& job = jobs[i];
        EngineConfig config = base;
        config.mode = job.mode;
        config.seed = job.seed;
        const std::vector<RoundRecord> records = RunExperiment(
            graph, config,
            MakePolicy(spec, graph, job.mode, job.alpha, job.seed));
        WriteRoundsCsv(spec.output_dir / RoundsFileName(job.mode, job.seed),
                       records);
        outcomes[i].summary = Summarize(records);
        spdlog::debug("{} seed {}: {} rounds, regret {}", ModeName(job.mode),
                      job.seed, records.size(),
                      outcomes[i].summary.total_regret);
      } catch (...) {
        outcomes[i].error = std::current_exception();
      }
    });
    for (const RunOutcome& o : outcomes) {
      if (o.error) std::rethrow_exception(o.error);
    }

    ordered_json summary;
    summary["rng"] = std::string(Rng::kName);
    summary["graph"] = {
        {"nodes", graph.node_count()},
        {"edges", graph.edge_count()},
        {"classes", graph.class_count()},
        {"feature_dim", graph.feature_dim()},
        {"homophily", graph.edge_count() > 0 ? Homophily(graph) : 0.0},
        {"shannon_equitability",
         graph.node_count() > 0
             ? ShannonEquitability(graph.labels(), graph.class_count())
             : 0.0},
    };
    const SpilloverParams& p = spec.engine.spillover;
    summary["config"] = {
        {"spillover",
         {{"p_a", p.p_a},
          {"p_m", p.p_m},
          {"p_aa", p.p_aa},
          {"p_am", p.p_am},
          {"p_ma", p.p_ma},
          {"p_mm", p.p_mm}}},
        {"dar_window_g", spec.engine.dar_window_g},
        {"dar_window_h", spec.engine.dar_window_h},
        {"dar_slope_threshold", spec.engine.dar_slope_threshold},
        {"policy",
         spec.bandit.policy == PolicyKind::kLinUcb ? "linucb" : "random"},
        {"ridge", spec.bandit.ridge},
        {"base_seed", spec.base_seed},
        {"repeats", spec.repeats},
    };
    ordered_json modes = ordered_json::object();
    for (std::size_t m = 0; m < spec.modes.size(); ++m) {
      std::vector<double> regret, bacc, reward, overrides, rounds;
      std::vector<double> simulated;
      std::vector<std::uint64_t> seeds;
      for (std::size_t i = 0; i < jobs.size(); ++i) {
        if (jobs[i].mode != spec.modes[m]) continue;
        const MetricsSummary& s = outcomes[i].summary;
        seeds.push_back(jobs[i].seed);
        regret.push_back(s.total_regret);
        bacc.push_back(s.bandit_accuracy);
        reward.push_back(static_cast<double>(s.total_network_reward));
        overrides.push_back(static_cast<double>(s.override_count));
        rounds.push_back(static_cast<double>(s.rounds));
        if (s.total_simulated_regret) simulated.push_back(*s.total_simulated_regret);
      }
      ordered_json entry = {
          {"alpha", alphas[m]},
          {"seeds", seeds},
          {"total_regret", Stats(regret)},
          {"bandit_accuracy", Stats(bacc)},
          {"total_network_reward", Stats(reward)},
          {"override_count", Stats(overrides)},
          {"rounds", Stats(rounds)},
      };
      if (simulated.size() == seeds.size()) {
        entry["total_simulated_regret"] = Stats(simulated);
      }
      modes[std::string(ModeName(spec.modes[m]))] = std::move(entry);
    }
    summary["modes"] = std::move(modes);

    const auto summary_path = spec.output_dir / "summary.json";
    std::ofstream out(summary_path, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write " + summary_path.string());
    out << summary.dump(2) << '\n';
    out.flush();
    if (!out) throw std::runtime_error("failed writing " + summary_path.string());
    spdlog::info("wrote {} run files and {}", jobs.size(),
                 summary_path.string());
    return 0;
  } catch (const std::exception& e) {
    spdlog::error("{}", e.what());
    return 1;
  }
}

}  // namespace netcb
