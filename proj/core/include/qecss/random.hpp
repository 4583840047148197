// Copyright 2026 The qecss Authors
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

#pragma once

#include <cstdint>
#include <random>

#include "qecss/linalg.hpp"

namespace qecss {

/// Seedable, splittable random source used for every stochastic path.
///
/// split(k) derives an independent stream from (seed, k) only, so work that
/// is fanned out over threads stays reproducible regardless of scheduling.
class Rng {
 public:
  explicit Rng(std::uint64_t seed);

  Rng split(std::uint64_t stream) const;

  std::uint64_t seed() const noexcept { return seed_; }

  double uniform(double lo, double hi);
  double normal();

  /// Matrix with i.i.d. real and imaginary parts uniform on [lo, hi].
  ComplexMatrix uniform_matrix(Eigen::Index rows, Eigen::Index cols, double lo,
                               double hi);
  /// Matrix with i.i.d. standard complex Gaussian entries (E|z|^2 = 1).
  ComplexMatrix gaussian_matrix(Eigen::Index rows, Eigen::Index cols);

 private:
  std::uint64_t seed_;
  std::mt19937_64 engine_;
};

std::uint64_t splitmix64(std::uint64_t x);

}  // namespace qecss
