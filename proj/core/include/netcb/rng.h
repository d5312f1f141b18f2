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

#ifndef NETCB_RNG_H_
#define NETCB_RNG_H_

#include <cstdint>
#include <random>
#include <string_view>

namespace netcb {

// Portable random stream. The engine is std::mt19937_64 seeded through
// std::seed_seq over (seed, stream, index) split into 32-bit words; both are
// fully specified by the standard. All derived variates are computed here
// rather than through std:: distributions, whose algorithms are
// implementation-defined.
class Rng {
 public:
  static constexpr std::string_view kName = "mt19937_64/seed_seq";

  explicit Rng(std::uint64_t seed, std::uint64_t stream = 0,
               std::uint64_t index = 0);

  std::uint64_t NextU64() { return engine_(); }
  // Uniform in [0, 1) with 53 random bits.
  double Uniform();
  // True with probability p. p <= 0 never fires, p >= 1 always fires; one
  // 64-bit draw is consumed either way.
  bool Bernoulli(double p);
  // Uniform in [0, bound). bound must be > 0.
  std::uint64_t UniformIndex(std::uint64_t bound);
  // Standard normal via Box-Muller (no cached second variate).
  double Normal();

 private:
  std::mt19937_64 engine_;
};

// Stream ids for Rng(seed, stream, index).
inline constexpr std::uint64_t kTrajectoryStream = 0;
inline constexpr std::uint64_t kPolicyStream = 1;
inline constexpr std::uint64_t kRolloutStream = 2;

}  // namespace netcb

#endif  // NETCB_RNG_H_
