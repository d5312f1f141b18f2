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

#ifndef NETCB_TRUNCATED_SVD_H_
#define NETCB_TRUNCATED_SVD_H_

#include <cstdint>

#include <Eigen/Dense>

namespace netcb {

struct TruncatedSvd {
  Eigen::MatrixXd projected;       // n x k, X * components
  Eigen::MatrixXd components;      // d x k, top right singular vectors
  Eigen::VectorXd singular_values;  // k, decreasing
};

// Randomized truncated SVD (range finder with power iterations). Requires
// 1 <= k <= min(n, d); throws std::invalid_argument otherwise.
TruncatedSvd ReduceFeatures(const Eigen::MatrixXd& features, Eigen::Index k,
                            std::uint64_t seed, int power_iterations = 2,
                            Eigen::Index oversampling = 10);

}  // namespace netcb

#endif  // NETCB_TRUNCATED_SVD_H_
