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

#include "netcb/dataset.h"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <set>
#include <string>
#include <string_view>
#include <system_error>
#include <utility>
#include <vector>

#include "netcb/errors.h"

namespace netcb {
namespace {

std::ifstream OpenInput(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(path.string(), 0, "cannot open file");
  return in;
}

std::ofstream OpenOutput(const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  return out;
}

std::string_view Trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

std::vector<std::string_view> SplitWhitespace(std::string_view s) {
  std::vector<std::string_view> tokens;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
    std::size_t j = i;
    while (j < s.size() && s[j] != ' ' && s[j] != '\t') ++j;
    if (j > i) tokens.push_back(s.substr(i, j - i));
    i = j;
  }
  return tokens;
}

template <typename T>
bool ParseNumber(std::string_view token, T& out) {
  token = Trim(token);
  if (token.empty()) return false;
  if (token.front() == '+') token.remove_prefix(1);
  const auto [ptr, ec] =
      std::from_chars(token.data(), token.data() + token.size(), out);
  return ec == std::errc() && ptr == token.data() + token.size();
}

// Reads all lines; trailing blank lines are dropped.
std::vector<std::string> ReadLines(const std::filesystem::path& path) {
  std::ifstream in = OpenInput(path);
  std::vector<std::string> lines;
  for (std::string line; std::getline(in, line);) lines.push_back(line);
  while (!lines.empty() && Trim(lines.back()).empty()) lines.pop_back();
  return lines;
}

std::string FormatDouble(double value) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value);
  return std::string(buf, ptr);
}

std::vector<ClassId> ReadLabels(const std::filesystem::path& path,
                                std::optional<int> class_count,
                                ClassId& resolved_class_count) {
  const auto lines = ReadLines(path);
  std::vector<ClassId> labels;
  labels.reserve(lines.size());
  ClassId max_label = 0;
  for (std::size_t i = 0; i < lines.size(); ++i) {
    long value = 0;
    if (!ParseNumber(lines[i], value)) {
      throw ParseError(path.string(), i + 1, "expected an integer label");
    }
    if (value < 1 || (class_count && value > *class_count)) {
      throw ParseError(path.string(), i + 1,
                       "label " + std::to_string(value) + " out of range");
    }
    labels.push_back(static_cast<ClassId>(value - 1));
    max_label = std::max<ClassId>(max_label, static_cast<ClassId>(value));
  }
  resolved_class_count = class_count ? *class_count : max_label;
  if (resolved_class_count < 2) {
    throw ParseError(path.string(), 0, "need at least two classes");
  }
  return labels;
}

std::vector<Edge> ReadEdges(const std::filesystem::path& path, NodeId n,
                            LoadReport& report) {
  const auto lines = ReadLines(path);
  std::set<std::pair<NodeId, NodeId>> seen;
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < lines.size(); ++i) {
    const std::string_view line = Trim(lines[i]);
    if (line.empty() || line.front() == '#') continue;
    const auto tokens = SplitWhitespace(line);
    long u = 0, v = 0;
    if (tokens.size() != 2 || !ParseNumber(tokens[0], u) ||
        !ParseNumber(tokens[1], v)) {
      throw ParseError(path.string(), i + 1, "expected \"u v\"");
    }
    if (u < 0 || v < 0 || u >= n || v >= n) {
      throw ParseError(path.string(), i + 1, "node id out of range");
    }
    if (u == v) {
      ++report.self_loops;
      continue;
    }
    const std::pair<NodeId, NodeId> key =
        std::minmax(static_cast<NodeId>(u), static_cast<NodeId>(v));
    if (!seen.insert(key).second) {
      ++report.duplicate_edges;
      continue;
    }
    edges.push_back({key.first, key.second});
  }
  return edges;
}

Eigen::MatrixXd ReadFeatures(const std::filesystem::path& path, NodeId n,
                             LoadReport& report) {
  const auto lines = ReadLines(path);
  const std::string name = path.string();
  if (lines.empty()) {
    if (n == 0) return Eigen::MatrixXd(0, 0);
    throw ParseError(name, 0, "empty feature file");
  }

  const auto header = SplitWhitespace(Trim(lines[0]));
  const bool sparse =
      lines[0].find(',') == std::string::npos && header.size() == 3;
  if (sparse) {
    report.feature_format = FeatureFormat::kSparse;
    long rows = 0, cols = 0, nnz = 0;
    if (!ParseNumber(header[0], rows) || !ParseNumber(header[1], cols) ||
        !ParseNumber(header[2], nnz) || rows < 0 || cols < 0 || nnz < 0) {
      throw ParseError(name, 1, "expected sparse header \"n d nnz\"");
    }
    if (rows != n) {
      throw ParseError(name, 1, "feature rows " + std::to_string(rows) +
                                    " do not match " + std::to_string(n) +
                                    " labels");
    }
    if (lines.size() - 1 != static_cast<std::size_t>(nnz)) {
      throw ParseError(name, lines.size(), "expected " + std::to_string(nnz) +
                                               " entries");
    }
    Eigen::MatrixXd x = Eigen::MatrixXd::Zero(rows, cols);
    for (std::size_t i = 1; i < lines.size(); ++i) {
      const auto tokens = SplitWhitespace(Trim(lines[i]));
      long r = 0, c = 0;
      double value = 0.0;
      if (tokens.size() != 3 || !ParseNumber(tokens[0], r) ||
          !ParseNumber(tokens[1], c) || !ParseNumber(tokens[2], value)) {
        throw ParseError(name, i + 1, "expected \"row col value\"");
      }
      if (r < 0 || c < 0 || r >= rows || c >= cols) {
        throw ParseError(name, i + 1, "entry index out of range");
      }
      x(r, c) = value;
    }
    return x;
  }

  report.feature_format = FeatureFormat::kDense;
  if (lines.size() != static_cast<std::size_t>(n)) {
    throw ParseError(name, lines.size(),
                     "expected " + std::to_string(n) + " feature rows");
  }
  Eigen::MatrixXd x;
  for (std::size_t i = 0; i < lines.size(); ++i) {
    std::vector<double> row;
    std::string_view rest = lines[i];
    for (;;) {
      const auto comma = rest.find(',');
      double value = 0.0;
      if (!ParseNumber(rest.substr(0, comma), value)) {
        throw ParseError(name, i + 1, "malformed real value");
      }
      row.push_back(value);
      if (comma == std::string_view::npos) break;
      rest.remove_prefix(comma + 1);
    }
    if (i == 0) x.resize(n, static_cast<Eigen::Index>(row.size()));
    if (static_cast<Eigen::Index>(row.size()) != x.cols()) {
      throw ParseError(name, i + 1, "row has " + std::to_string(row.size()) +
                                        " values, expected " +
                                        std::to_string(x.cols()));
    }
    for (std::size_t c = 0; c < row.size(); ++c) {
      x(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(c)) = row[c];
    }
  }
  return x;
}

}  // namespace

LoadedDataset LoadDataset(const DatasetPaths& paths,
                          std::optional<int> class_count) {
  LoadReport report;
  ClassId resolved = 0;
  std::vector<ClassId> labels = ReadLabels(paths.labels, class_count, resolved);
  const auto n = static_cast<NodeId>(labels.size());
  std::vector<Edge> edges = ReadEdges(paths.edges, n, report);
  Eigen::MatrixXd features = ReadFeatures(paths.features, n, report);
  return LoadedDataset{
      AttributedGraph(n, std::move(edges), std::move(features),
                      std::move(labels), resolved),
      report};
}

void WriteDataset(const AttributedGraph& graph, const DatasetPaths& paths,
                  FeatureFormat format) {
  {
    std::ofstream out = OpenOutput(paths.edges);
    for (const Edge& e : graph.edges()) out << e.u << ' ' << e.v << '\n';
  }
  {
    std::ofstream out = OpenOutput(paths.labels);
    for (ClassId c : graph.labels()) out << (c + 1) << '\n';
  }
  std::ofstream out = OpenOutput(paths.features);
  const Eigen::MatrixXd& x = graph.features();
  if (format == FeatureFormat::kSparse) {
    const auto nnz = (x.array() != 0.0).count();
    out << x.rows() << ' ' << x.cols() << ' ' << nnz << '\n';
    for (Eigen::Index r = 0; r < x.rows(); ++r) {
      for (Eigen::Index c = 0; c < x.cols(); ++c) {
        if (x(r, c) != 0.0) {
          out << r << ' ' << c << ' ' << FormatDouble(x(r, c)) << '\n';
        }
      }
    }
  } else {
    for (Eigen::Index r = 0; r < x.rows(); ++r) {
      for (Eigen::Index c = 0; c < x.cols(); ++c) {
        if (c > 0) out << ',';
        out << FormatDouble(x(r, c));
      }
      out << '\n';
    }
  }
  if (!out) throw std::runtime_error("failed writing " + paths.features.string());
}

}  // namespace netcb
