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


// Generators and reference implementations shared by the unit, property and
// acceptance tests. Nothing here calls into the code under test except to read
// state, so the references stay independent of the library's own arithmetic.

#ifndef NETCB_TESTS_SUPPORT_ORACLES_H_
#define NETCB_TESTS_SUPPORT_ORACLES_H_

#include <cstdint>
#include <random>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "netcb/diffusion.h"
#include "netcb/graph.h"

namespace netcb::testing {

using Gen = std::mt19937_64;

int UniformInt(Gen& gen, int lo, int hi);  // inclusive
double UniformReal(Gen& gen, double lo, double hi);

// Erdos-Renyi style graph with random labels in [0, l) and Gaussian features.
AttributedGraph RandomGraph(Gen& gen, NodeId n, ClassId l, double edge_prob,
                            Eigen::Index dim = 3);

// Same topology with a fresh label vector.
AttributedGraph WithLabels(const AttributedGraph& graph,
                           std::vector<ClassId> labels);

SpilloverParams RandomParams(Gen& gen);

// Activates a random subset of nodes (each with probability p) in a fresh
// state.
SimulationState RandomActiveState(Gen& gen, const AttributedGraph& graph,
                                  double p);

// Dynamic features recomputed from the state accessors with plain loops.
Eigen::VectorXd FeatureOracle(const SimulationState& state,
                              const AttributedGraph& graph, NodeId node);

struct MonteCarloEstimate {
  double mean = 0.0;
  double standard_error = 0.0;
};

// Simulates the single-hop cascade from `node` with `class_id` under the
// graph's labels, `trials` times, against the activation flags in `state`.
MonteCarloEstimate SimulateActivations(const SimulationState& state,
                                       const AttributedGraph& graph,
                                       const SpilloverParams& params,
                                       NodeId node, ClassId class_id,
                                       int trials, std::uint64_t seed);

// Hand expansion of the expected activations: direct probability times one
// plus the sum of spillover probabilities over inactive neighbors, using the
// six named probabilities directly.
double HandExpectedActivations(const SimulationState& state,
                               const AttributedGraph& graph,
                               const SpilloverParams& params, NodeId node,
                               ClassId class_id,
                               std::span<const ClassId> believed_labels);

// Top singular values by power iteration on X^T X with deflation.
Eigen::VectorXd DeflationSingularValues(const Eigen::MatrixXd& x,
                                        Eigen::Index k);

// Slope from the closed-form normal equations over x = 0..n-1.
double SlopeOracle(std::span<const double> values);

Eigen::MatrixXd RandomMatrix(Gen& gen, Eigen::Index rows, Eigen::Index cols);

}  // namespace netcb::testing

#endif  // NETCB_TESTS_SUPPORT_ORACLES_H_
