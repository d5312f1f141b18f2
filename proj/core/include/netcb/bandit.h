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

#ifndef NETCB_BANDIT_H_
#define NETCB_BANDIT_H_

#include <array>
#include <cstddef>
#include <cstdint>
#include <vector>

#include <Eigen/Dense>

#include "netcb/graph.h"
#include "netcb/rng.h"

namespace netcb {

// Exploration constants searched per dataset.
inline constexpr std::array<double, 7> kAlphaGrid = {0.01, 0.1, 0.3, 0.5,
                                                     1.0,  2.0, 5.0};

// Concatenates static features (length static_dim) and dynamic features
// (length 4 * class_count), static block first. Throws std::invalid_argument
// on a length mismatch.
Eigen::VectorXd BuildContext(const Eigen::VectorXd& static_features,
                             const Eigen::VectorXd& dynamic_features,
                             Eigen::Index static_dim, ClassId class_count);

struct ArmSelection {
  ClassId arm = 0;
  Eigen::VectorXd scores;
};

// A contextual bandit over a fixed arm set.
class BanditPolicy {
 public:
  virtual ~BanditPolicy() = default;

  virtual Eigen::Index dimension() const = 0;
  virtual ClassId arm_count() const = 0;
  virtual ArmSelection Select(const Eigen::VectorXd& context) = 0;
  virtual void Update(ClassId arm, const Eigen::VectorXd& context,
                      double reward) = 0;

  std::size_t update_count() const { return update_count_; }

 protected:
  std::size_t update_count_ = 0;
};

// Disjoint-arm LinUCB. Each arm keeps A = ridge * I + sum x x^T and
// b = sum reward * x; A^{-1} is maintained by Sherman-Morrison updates and
// re-inverted from A whenever a periodic check finds drift.
class LinUcb final : public BanditPolicy {
 public:
  struct Options {
    double alpha = 0.5;
    double ridge = 1.0;
    // Updates per arm between inverse-drift checks.
    int verify_every = 256;
  };

  LinUcb(Eigen::Index dimension, ClassId arm_count, Options options);
  LinUcb(Eigen::Index dimension, ClassId arm_count)
      : LinUcb(dimension, arm_count, Options{}) {}

  Eigen::Index dimension() const override { return dimension_; }
  ClassId arm_count() const override {
    return static_cast<ClassId>(arms_.size());
  }

  // score_a = theta_a . x + alpha * sqrt(x^T A_a^{-1} x); argmax with ties to
  // the lowest index.
  ArmSelection Select(const Eigen::VectorXd& context) override;
  Eigen::VectorXd Scores(const Eigen::VectorXd& context) const;
  void Update(ClassId arm, const Eigen::VectorXd& context,
              double reward) override;

  const Eigen::MatrixXd& design(ClassId arm) const { return arms_[arm].a; }
  const Eigen::MatrixXd& inverse(ClassId arm) const { return arms_[arm].a_inv; }
  const Eigen::VectorXd& response(ClassId arm) const { return arms_[arm].b; }
  const Eigen::VectorXd& theta(ClassId arm) const { return arms_[arm].theta; }
  const Options& options() const { return options_; }

  // Max absolute row sum of A A^{-1} - I.
  double InverseResidual(ClassId arm) const;
  std::size_t reinversion_count() const { return reinversions_; }

 private:
  struct Arm {
    Eigen::MatrixXd a;
    Eigen::MatrixXd a_inv;
    Eigen::VectorXd b;
    Eigen::VectorXd theta;
    int since_check = 0;
  };

  void CheckArm(ClassId arm) const;
  void Reinvert(Arm& arm);

  Eigen::Index dimension_;
  Options options_;
  std::vector<Arm> arms_;
  std::size_t reinversions_ = 0;
};

// Picks an arm uniformly at random; Update only counts calls.
class UniformRandomPolicy final : public BanditPolicy {
 public:
  UniformRandomPolicy(Eigen::Index dimension, ClassId arm_count,
                      std::uint64_t seed);

  Eigen::Index dimension() const override { return dimension_; }
  ClassId arm_count() const override { return arm_count_; }
  ArmSelection Select(const Eigen::VectorXd& context) override;
  void Update(ClassId arm, const Eigen::VectorXd& context,
              double reward) override;

 private:
  Eigen::Index dimension_;
  ClassId arm_count_;
  Rng rng_;
};

}  // namespace netcb

#endif  // NETCB_BANDIT_H_
