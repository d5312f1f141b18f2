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

#ifndef NETCB_DATASET_H_
#define NETCB_DATASET_H_

#include <cstddef>
#include <filesystem>
#include <optional>

#include "netcb/graph.h"

namespace netcb {

// On-disk attributed network:
//   edges:    "u v" per line, 0-based ids, '#' starts a comment line
//   labels:   one 1-based class index per line; line k is node k - 1
//   features: dense rows of comma-separated reals, one per node, or sparse
//             with a "n d nnz" header followed by nnz "row col value" lines
//             (0-based row and column)
struct DatasetPaths {
  std::filesystem::path edges;
  std::filesystem::path features;
  std::filesystem::path labels;
};

enum class FeatureFormat { kDense, kSparse };

struct LoadReport {
  std::size_t duplicate_edges = 0;
  std::size_t self_loops = 0;
  FeatureFormat feature_format = FeatureFormat::kDense;
};

struct LoadedDataset {
  AttributedGraph graph;
  LoadReport report;
};

// Node count is the number of labels. class_count defaults to the largest
// label. Duplicate edges (in either orientation) and self-loops are dropped
// and counted. Throws ParseError (with the offending line) on malformed input
// or out-of-range ids and labels.
LoadedDataset LoadDataset(const DatasetPaths& paths,
                          std::optional<int> class_count = std::nullopt);

// Inverse of LoadDataset; reals are written in shortest round-trip form.
void WriteDataset(const AttributedGraph& graph, const DatasetPaths& paths,
                  FeatureFormat format = FeatureFormat::kDense);

}  // namespace netcb

#endif  // NETCB_DATASET_H_
