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

#include "netcb/graph.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "netcb/errors.h"

namespace netcb {

AttributedGraph::AttributedGraph(NodeId node_count, std::vector<Edge> edges,
                                 Eigen::MatrixXd features,
                                 std::vector<ClassId> labels,
                                 ClassId class_count)
    : node_count_(node_count),
      class_count_(class_count),
      features_(std::move(features)),
      labels_(std::move(labels)) {
  if (node_count_ < 0) throw std::invalid_argument("negative node count");
  if (class_count_ < 2) {
    throw std::invalid_argument("class_count must be >= 2, got " +
                                std::to_string(class_count_));
  }
  if (labels_.size() != static_cast<std::size_t>(node_count_)) {
    throw std::invalid_argument("expected " + std::to_string(node_count_) +
                                " labels, got " +
                                std::to_string(labels_.size()));
  }
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    if (labels_[i] < 0 || labels_[i] >= class_count_) {
      throw std::invalid_argument("label of node " + std::to_string(i) +
                                  " out of range");
    }
  }
  if (features_.rows() != node_count_) {
    throw std::invalid_argument("feature matrix has " +
                                std::to_string(features_.rows()) +
                                " rows, expected " +
                                std::to_string(node_count_));
  }

  for (Edge& e : edges) {
    if (e.u < 0 || e.v < 0 || e.u >= node_count_ || e.v >= node_count_) {
      throw std::invalid_argument("edge endpoint out of range");
    }
    if (e.u == e.v) {
      throw std::invalid_argument("self-loop on node " + std::to_string(e.u));
    }
    if (e.u > e.v) std::swap(e.u, e.v);
  }
  std::sort(edges.begin(), edges.end(), [](const Edge& a, const Edge& b) {
    return std::pair(a.u, a.v) < std::pair(b.u, b.v);
  });
  if (std::adjacent_find(edges.begin(), edges.end()) != edges.end()) {
    throw std::invalid_argument("duplicate edge");
  }
  edges_ = std::move(edges);

  std::vector<std::size_t> degree(node_count_, 0);
  for (const Edge& e : edges_) {
    ++degree[e.u];
    ++degree[e.v];
  }
  offsets_.assign(node_count_ + 1, 0);
  for (NodeId i = 0; i < node_count_; ++i) {
    offsets_[i + 1] = offsets_[i] + degree[i];
  }
  adjacency_.resize(offsets_.back());
  std::vector<std::size_t> cursor(offsets_.begin(), offsets_.end() - 1);
  for (const Edge& e : edges_) {
    adjacency_[cursor[e.u]++] = e.v;
    adjacency_[cursor[e.v]++] = e.u;
  }
  for (NodeId i = 0; i < node_count_; ++i) {
    std::sort(adjacency_.begin() + offsets_[i],
              adjacency_.begin() + offsets_[i + 1]);
  }
}

void AttributedGraph::CheckNode(NodeId node) const {
  if (node < 0 || node >= node_count_) {
    throw InvalidNodeError("invalid node id " + std::to_string(node) +
                           " (node_count " + std::to_string(node_count_) +
                           ")");
  }
}

std::span<const NodeId> AttributedGraph::neighbors(NodeId node) const {
  CheckNode(node);
  return std::span<const NodeId>(adjacency_.data() + offsets_[node],
                                 offsets_[node + 1] - offsets_[node]);
}

Eigen::VectorXd AttributedGraph::node_features(NodeId node) const {
  CheckNode(node);
  return features_.row(node).transpose();
}

ClassId AttributedGraph::label(NodeId node) const {
  CheckNode(node);
  return labels_[node];
}

bool AttributedGraph::has_edge(NodeId u, NodeId v) const {
  auto nbrs = neighbors(u);
  return std::binary_search(nbrs.begin(), nbrs.end(), v);
}

std::span<const NodeId> Neighbors(const AttributedGraph& graph, NodeId node) {
  return graph.neighbors(node);
}

double Homophily(std::span<const Edge> edges, std::span<const ClassId> labels) {
  if (edges.empty()) {
    throw UndefinedStatisticError("homophily is undefined without edges");
  }
  std::size_t same = 0;
  for (const Edge& e : edges) {
    if (labels[e.u] == labels[e.v]) ++same;
  }
  return static_cast<double>(same) / static_cast<double>(edges.size());
}

double Homophily(const AttributedGraph& graph) {
  return Homophily(graph.edges(), graph.labels());
}

double ShannonEquitability(std::span<const ClassId> labels,
                           ClassId class_count) {
  if (labels.empty()) throw std::invalid_argument("empty label list");
  if (class_count < 2) throw std::invalid_argument("class_count must be >= 2");
  std::vector<std::size_t> counts(class_count, 0);
  for (ClassId c : labels) {
    if (c < 0 || c >= class_count) {
      throw std::invalid_argument("label out of range");
    }
    ++counts[c];
  }
  const double n = static_cast<double>(labels.size());
  double entropy = 0.0;
  for (std::size_t count : counts) {
    if (count == 0) continue;
    const double p = static_cast<double>(count) / n;
    entropy -= p * std::log(p);
  }
  return entropy / std::log(static_cast<double>(class_count));
}

}  // namespace netcb
