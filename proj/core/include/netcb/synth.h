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

#ifndef NETCB_SYNTH_H_
#define NETCB_SYNTH_H_

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "netcb/graph.h"
#include "netcb/rng.h"

namespace netcb {

// Stochastic block model test bed. Labels are round-robin (node i has class
// i mod l); each same-class pair is linked with within_prob and each
// cross-class pair with between_prob. Features are the label one-hot in the
// first l of `dim` columns plus noise_scale * N(0, 1) in every column.
// Requires n >= l >= 2 and dim >= l.
AttributedGraph GenerateSbm(NodeId n, ClassId l, double within_prob,
                            double between_prob, Eigen::Index dim,
                            std::uint64_t seed, double noise_scale = 1.0);

struct HomophilyEdit {
  AttributedGraph graph;
  double achieved = 0.0;
  bool reached = false;
  std::size_t steps = 0;
  // Homophily after each accepted edit.
  std::vector<double> trace;
};

// Removes uniformly chosen cross-label edges whose endpoints both have degree
// >= 2 until homophily >= target or no such edge is left. A graph without
// same-label edges is returned unchanged with reached = false. Throws
// std::invalid_argument unless target > current homophily.
HomophilyEdit IncreaseHomophily(const AttributedGraph& graph, double target,
                                Rng& rng);

// Change in cross-label edge count if u and v exchanged labels.
long CrossEdgeDelta(const AttributedGraph& graph,
                    std::span<const ClassId> labels, NodeId u, NodeId v);

// Samples differently labeled node pairs and swaps their labels and feature
// rows when that strictly increases the number of cross-label edges. Stops at
// homophily <= target or after `max_rejections` consecutive rejected
// samples. Topology is untouched. Throws std::invalid_argument unless
// target < current homophily.
HomophilyEdit DecreaseHomophily(const AttributedGraph& graph, double target,
                                Rng& rng, std::size_t max_rejections = 10000);

}  // namespace netcb

#endif  // NETCB_SYNTH_H_
