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

#include "netcb/truncated_svd.h"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "netcb/rng.h"

namespace netcb {
namespace {

Eigen::MatrixXd Orthonormalize(const Eigen::MatrixXd& y) {
  Eigen::HouseholderQR<Eigen::MatrixXd> qr(y);
  return qr.householderQ() * Eigen::MatrixXd::Identity(y.rows(), y.cols());
}

}  // namespace

TruncatedSvd ReduceFeatures(const Eigen::MatrixXd& features, Eigen::Index k,
                            std::uint64_t seed, int power_iterations,
                            Eigen::Index oversampling) {
  const Eigen::Index n = features.rows();
  const Eigen::Index d = features.cols();
  const Eigen::Index rank_cap = std::min(n, d);
  if (k < 1 || k > rank_cap) {
    throw std::invalid_argument("k = " + std::to_string(k) +
                                " outside [1, " + std::to_string(rank_cap) +
                                "]");
  }
  const Eigen::Index sketch = std::min(k + oversampling, rank_cap);

  Rng rng(seed);
  Eigen::MatrixXd omega(d, sketch);
  for (Eigen::Index j = 0; j < sketch; ++j) {
    for (Eigen::Index i = 0; i < d; ++i) omega(i, j) = rng.Normal();
  }

  Eigen::MatrixXd q = Orthonormalize(features * omega);
  for (int it = 0; it < power_iterations; ++it) {
    const Eigen::MatrixXd z = Orthonormalize(features.transpose() * q);
    q = Orthonormalize(features * z);
  }

  const Eigen::MatrixXd small = q.transpose() * features;  // sketch x d
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(small, Eigen::ComputeThinV);

  TruncatedSvd result;
  result.components = svd.matrixV().leftCols(k);
  result.singular_values = svd.singularValues().head(k);
  result.projected = features * result.components;
  return result;
}

}  // namespace netcb
