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

#ifndef NETCB_GRAPH_H_
#define NETCB_GRAPH_H_

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include <Eigen/Dense>

namespace netcb {

using NodeId = std::int32_t;
// 0-based class (arm) index. File formats use 1-based indices.
using ClassId = std::int32_t;

struct Edge {
  NodeId u;
  NodeId v;
  friend bool operator==(const Edge&, const Edge&) = default;
};

// Undirected attributed network. Immutable after construction; adjacency lists
// are sorted ascending so iteration order (and therefore RNG consumption) is
// reproducible.
class AttributedGraph {
 public:
  // Builds the graph from an edge list. Throws std::invalid_argument on
  // self-loops, duplicate edges, out-of-range endpoints, out-of-range labels,
  // class_count < 2, or a feature matrix whose row count differs from
  // node_count. Edge orientation is irrelevant; edges are stored as (min, max)
  // in lexicographic order.
  AttributedGraph(NodeId node_count, std::vector<Edge> edges,
                  Eigen::MatrixXd features, std::vector<ClassId> labels,
                  ClassId class_count);

  NodeId node_count() const { return node_count_; }
  std::size_t edge_count() const { return edges_.size(); }
  ClassId class_count() const { return class_count_; }
  Eigen::Index feature_dim() const { return features_.cols(); }

  // Throws InvalidNodeError for out-of-range ids.
  std::span<const NodeId> neighbors(NodeId node) const;
  std::size_t degree(NodeId node) const { return neighbors(node).size(); }

  const std::vector<Edge>& edges() const { return edges_; }
  const Eigen::MatrixXd& features() const { return features_; }
  Eigen::VectorXd node_features(NodeId node) const;
  const std::vector<ClassId>& labels() const { return labels_; }
  ClassId label(NodeId node) const;

  bool has_edge(NodeId u, NodeId v) const;

 private:
  void CheckNode(NodeId node) const;

  NodeId node_count_;
  ClassId class_count_;
  std::vector<Edge> edges_;
  std::vector<std::size_t> offsets_;  // CSR row offsets, size n + 1
  std::vector<NodeId> adjacency_;
  Eigen::MatrixXd features_;
  std::vector<ClassId> labels_;
};

// Free-function form of AttributedGraph::neighbors.
std::span<const NodeId> Neighbors(const AttributedGraph& graph, NodeId node);

// Fraction of edges whose endpoints share a label. Throws
// UndefinedStatisticError on an edgeless graph.
double Homophily(const AttributedGraph& graph);
double Homophily(std::span<const Edge> edges, std::span<const ClassId> labels);

// Normalized label entropy H / ln(class_count), 0 for a single populated
// class and 1 for the uniform distribution. Throws std::invalid_argument on
// empty labels, class_count < 2 or labels outside [0, class_count).
double ShannonEquitability(std::span<const ClassId> labels,
                           ClassId class_count);

}  // namespace netcb

#endif  // NETCB_GRAPH_H_
