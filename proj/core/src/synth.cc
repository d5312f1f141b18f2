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

#include "netcb/synth.h"

#include <stdexcept>
#include <string>
#include <utility>

namespace netcb {

AttributedGraph GenerateSbm(NodeId n, ClassId l, double within_prob,
                            double between_prob, Eigen::Index dim,
                            std::uint64_t seed, double noise_scale) {
  if (l < 2 || n < l) throw std::invalid_argument("need n >= l >= 2");
  if (dim < l) throw std::invalid_argument("need dim >= l for the one-hot");
  if (!(within_prob >= 0 && within_prob <= 1 && between_prob >= 0 &&
        between_prob <= 1)) {
    throw std::invalid_argument("edge probabilities must be in [0, 1]");
  }
  Rng rng(seed);
  std::vector<ClassId> labels(n);
  for (NodeId i = 0; i < n; ++i) labels[i] = i % l;

  std::vector<Edge> edges;
  for (NodeId i = 0; i < n; ++i) {
    for (NodeId j = i + 1; j < n; ++j) {
      const double p = labels[i] == labels[j] ? within_prob : between_prob;
      if (rng.Bernoulli(p)) edges.push_back({i, j});
    }
  }

  Eigen::MatrixXd features(n, dim);
  for (NodeId i = 0; i < n; ++i) {
    for (Eigen::Index c = 0; c < dim; ++c) {
      features(i, c) = noise_scale * rng.Normal();
    }
    features(i, labels[i]) += 1.0;
  }
  return AttributedGraph(n, std::move(edges), std::move(features),
                         std::move(labels), l);
}

HomophilyEdit IncreaseHomophily(const AttributedGraph& graph, double target,
                                Rng& rng) {
  const double start = Homophily(graph);
  if (!(target > start)) {
    throw std::invalid_argument("target " + std::to_string(target) +
                                " does not exceed current homophily " +
                                std::to_string(start));
  }
  const auto& edges = graph.edges();
  const auto& labels = graph.labels();
  std::vector<std::size_t> degree(graph.node_count());
  for (NodeId i = 0; i < graph.node_count(); ++i) degree[i] = graph.degree(i);

  std::vector<char> alive(edges.size(), 1);
  std::vector<std::size_t> candidates;
  std::size_t same = 0;
  for (std::size_t e = 0; e < edges.size(); ++e) {
    if (labels[edges[e].u] == labels[edges[e].v]) {
      ++same;
    } else {
      candidates.push_back(e);
    }
  }

  std::size_t remaining = edges.size();
  double current = start;
  std::vector<double> trace;
  // Degrees only fall, so an ineligible candidate never becomes eligible
  // again and can be discarded when drawn.
  // With no same-label edge a removal cannot raise homophily above 0.
  if (same == 0) candidates.clear();
  while (current < target && !candidates.empty()) {
    const std::size_t pick = rng.UniformIndex(candidates.size());
    const std::size_t e = candidates[pick];
    candidates[pick] = candidates.back();
    candidates.pop_back();
    const Edge& edge = edges[e];
    if (degree[edge.u] < 2 || degree[edge.v] < 2) continue;
    alive[e] = 0;
    --degree[edge.u];
    --degree[edge.v];
    --remaining;
    current = static_cast<double>(same) / static_cast<double>(remaining);
    trace.push_back(current);
  }

  std::vector<Edge> kept;
  kept.reserve(remaining);
  for (std::size_t e = 0; e < edges.size(); ++e) {
    if (alive[e]) kept.push_back(edges[e]);
  }
  HomophilyEdit result{
      AttributedGraph(graph.node_count(), std::move(kept), graph.features(),
                      graph.labels(), graph.class_count()),
      current, current >= target, trace.size(), std::move(trace)};
  return result;
}

long CrossEdgeDelta(const AttributedGraph& graph,
                    std::span<const ClassId> labels, NodeId u, NodeId v) {
  const ClassId zu = labels[u];
  const ClassId zv = labels[v];
  long delta = 0;
  for (NodeId w : graph.neighbors(u)) {
    if (w == v) continue;
    delta += (zv != labels[w]) - (zu != labels[w]);
  }
  for (NodeId w : graph.neighbors(v)) {
    if (w == u) continue;
    delta += (zu != labels[w]) - (zv != labels[w]);
  }
  return delta;
}

HomophilyEdit DecreaseHomophily(const AttributedGraph& graph, double target,
                                Rng& rng, std::size_t max_rejections) {
  const double start = Homophily(graph);
  if (!(target < start)) {
    throw std::invalid_argument("target " + std::to_string(target) +
                                " is not below current homophily " +
                                std::to_string(start));
  }
  std::vector<ClassId> labels = graph.labels();
  Eigen::MatrixXd features = graph.features();
  const NodeId n = graph.node_count();
  const double edge_count = static_cast<double>(graph.edge_count());

  long cross = 0;
  for (const Edge& e : graph.edges()) cross += labels[e.u] != labels[e.v];

  bool mixed = false;
  for (ClassId c : labels) mixed = mixed || c != labels[0];

  double current = start;
  std::vector<double> trace;
  std::size_t rejections = 0;
  while (mixed && current > target && rejections < max_rejections) {
    NodeId u = 0, v = 0;
    do {
      u = static_cast<NodeId>(rng.UniformIndex(n));
      v = static_cast<NodeId>(rng.UniformIndex(n));
    } while (labels[u] == labels[v]);

    const long delta = CrossEdgeDelta(graph, labels, u, v);
    if (delta <= 0) {
      ++rejections;
      continue;
    }
    rejections = 0;
    std::swap(labels[u], labels[v]);
    features.row(u).swap(features.row(v));
    cross += delta;
    current = 1.0 - static_cast<double>(cross) / edge_count;
    trace.push_back(current);
  }

  HomophilyEdit result{
      AttributedGraph(n, graph.edges(), std::move(features), std::move(labels),
                      graph.class_count()),
      current, current <= target, trace.size(), std::move(trace)};
  return result;
}

}  // namespace netcb
