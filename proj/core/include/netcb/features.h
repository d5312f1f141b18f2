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

#ifndef NETCB_FEATURES_H_
#define NETCB_FEATURES_H_

#include <span>

#include <Eigen/Dense>

#include "netcb/diffusion.h"
#include "netcb/graph.h"

namespace netcb {

// Dynamic neighborhood features of `node` from live state, length 4l:
//   [0, l)    share of neighbors' direct recommendations per class
//   [l, 2l)   share of neighbors' unsuccessful (still inactive) direct
//             recommendations per class
//   [2l, 3l)  share of spillover attempts on neighbors per class
//   [3l, 4l)  share of failed spillover attempts on neighbors per class
// A block whose denominator is zero is all zeros.
Eigen::VectorXd ComputeFeatures(const SimulationState& state,
                                const AttributedGraph& graph, NodeId node);

// Replays attempt records into the spillover counters: success sets
// S[class] = 1 (and activates the recipient), failure increments S̄[class].
void ApplyAttemptRecords(SimulationState& state,
                         std::span<const AttemptRecord> attempts);

// Refreshes the cached features after a completed round for `node`: every
// neighbor q of `node` and every neighbor r of such q. Afterwards the cache
// equals ComputeFeatures on every node.
void UpdateRoundFeatures(SimulationState& state, const AttributedGraph& graph,
                         NodeId node);

}  // namespace netcb

#endif  // NETCB_FEATURES_H_
