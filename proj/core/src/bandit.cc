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

#include "netcb/bandit.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace netcb {

Eigen::VectorXd BuildContext(const Eigen::VectorXd& static_features,
                             const Eigen::VectorXd& dynamic_features,
                             Eigen::Index static_dim, ClassId class_count) {
  if (static_features.size() != static_dim) {
    throw std::invalid_argument("static feature length " +
                                std::to_string(static_features.size()) +
                                ", expected " + std::to_string(static_dim));
  }
  if (dynamic_features.size() != 4 * static_cast<Eigen::Index>(class_count)) {
    throw std::invalid_argument("dynamic feature length " +
                                std::to_string(dynamic_features.size()) +
                                ", expected " + std::to_string(4 * class_count));
  }
  Eigen::VectorXd context(static_features.size() + dynamic_features.size());
  context << static_features, dynamic_features;
  return context;
}

LinUcb::LinUcb(Eigen::Index dimension, ClassId arm_count, Options options)
    : dimension_(dimension), options_(options) {
  if (dimension <= 0) throw std::invalid_argument("dimension must be > 0");
  if (arm_count < 1) throw std::invalid_argument("arm_count must be >= 1");
  if (!(options.alpha >= 0.0)) throw std::invalid_argument("alpha must be >= 0");
  if (!(options.ridge > 0.0)) throw std::invalid_argument("ridge must be > 0");
  Arm fresh{
      .a = options.ridge * Eigen::MatrixXd::Identity(dimension, dimension),
      .a_inv = (1.0 / options.ridge) *
               Eigen::MatrixXd::Identity(dimension, dimension),
      .b = Eigen::VectorXd::Zero(dimension),
      .theta = Eigen::VectorXd::Zero(dimension),
  };
  arms_.assign(arm_count, fresh);
}

void LinUcb::CheckArm(ClassId arm) const {
  if (arm < 0 || arm >= arm_count()) {
    throw std::out_of_range("arm " + std::to_string(arm) + " out of range");
  }
}

Eigen::VectorXd LinUcb::Scores(const Eigen::VectorXd& context) const {
  if (context.size() != dimension_) {
    throw std::invalid_argument("context length " +
                                std::to_string(context.size()) +
                                ", expected " + std::to_string(dimension_));
  }
  Eigen::VectorXd scores(arms_.size());
  for (std::size_t k = 0; k < arms_.size(); ++k) {
    const Arm& arm = arms_[k];
    const double width = std::max(0.0, context.dot(arm.a_inv * context));
    scores[static_cast<Eigen::Index>(k)] =
        arm.theta.dot(context) + options_.alpha * std::sqrt(width);
  }
  return scores;
}

ArmSelection LinUcb::Select(const Eigen::VectorXd& context) {
  ArmSelection selection;
  selection.scores = Scores(context);
  Eigen::Index best = 0;
  for (Eigen::Index k = 1; k < selection.scores.size(); ++k) {
    if (selection.scores[k] > selection.scores[best]) best = k;
  }
  selection.arm = static_cast<ClassId>(best);
  return selection;
}

void LinUcb::Update(ClassId arm_id, const Eigen::VectorXd& context,
                    double reward) {
  CheckArm(arm_id);
  if (context.size() != dimension_) {
    throw std::invalid_argument("context length mismatch in update");
  }
  Arm& arm = arms_[arm_id];
  ++update_count_;
  arm.a.noalias() += context * context.transpose();
  arm.b.noalias() += reward * context;

  const Eigen::VectorXd u = arm.a_inv * context;
  const double denom = 1.0 + context.dot(u);
  arm.a_inv.noalias() -= (u * u.transpose()) / denom;

  if (++arm.since_check >= options_.verify_every) {
    arm.since_check = 0;
    const Eigen::MatrixXd residual =
        arm.a * arm.a_inv - Eigen::MatrixXd::Identity(dimension_, dimension_);
    if (residual.cwiseAbs().rowwise().sum().maxCoeff() >= 1e-6) Reinvert(arm);
  }
  arm.theta.noalias() = arm.a_inv * arm.b;
}

void LinUcb::Reinvert(Arm& arm) {
  arm.a_inv = arm.a.ldlt().solve(
      Eigen::MatrixXd::Identity(dimension_, dimension_));
  ++reinversions_;
}

double LinUcb::InverseResidual(ClassId arm_id) const {
  CheckArm(arm_id);
  const Arm& arm = arms_[arm_id];
  const Eigen::MatrixXd residual =
      arm.a * arm.a_inv - Eigen::MatrixXd::Identity(dimension_, dimension_);
  return residual.cwiseAbs().rowwise().sum().maxCoeff();
}

UniformRandomPolicy::UniformRandomPolicy(Eigen::Index dimension,
                                         ClassId arm_count, std::uint64_t seed)
    : dimension_(dimension), arm_count_(arm_count), rng_(seed, kPolicyStream) {
  if (arm_count < 1) throw std::invalid_argument("arm_count must be >= 1");
}

ArmSelection UniformRandomPolicy::Select(const Eigen::VectorXd& context) {
  if (context.size() != dimension_) {
    throw std::invalid_argument("context length mismatch");
  }
  ArmSelection selection;
  selection.arm = static_cast<ClassId>(rng_.UniformIndex(arm_count_));
  selection.scores = Eigen::VectorXd::Zero(arm_count_);
  selection.scores[selection.arm] = 1.0;
  return selection;
}

void UniformRandomPolicy::Update(ClassId arm, const Eigen::VectorXd& context,
                                 double /*reward*/) {
  if (arm < 0 || arm >= arm_count_ || context.size() != dimension_) {
    throw std::invalid_argument("invalid update");
  }
  ++update_count_;
}

}  // namespace netcb
