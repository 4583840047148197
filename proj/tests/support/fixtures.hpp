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

#include <random>
#include <vector>

#include "oracle.hpp"
#include "qecss/channel.hpp"

namespace testutil {

// Random trace-preserving channel with Gaussian Kraus entries.
inline qecss::Channel random_tp(std::mt19937_64& gen, int dim_in, int dim_out, int kraus) {
  std::vector<qecss::ComplexMatrix> ops;
  for (int i = 0; i < kraus; ++i) ops.push_back(oracle::random_complex(gen, dim_out, dim_in));
  return qecss::normalized(dim_in, dim_out, std::move(ops));
}

inline qecss::ComplexMatrix basis(int d, int mu, int nu) {
  qecss::ComplexMatrix e = qecss::ComplexMatrix::Zero(d, d);
  e(mu, nu) = 1.0;
  return e;
}

// Largest deviation between the actions on all |mu><nu|, using the oracle.
inline double action_gap(const oracle::Kraus& a, const oracle::Kraus& b) {
  const int d = int(a.front().cols());
  double worst = 0.0;
  for (int mu = 0; mu < d; ++mu) {
    for (int nu = 0; nu < d; ++nu) {
      const auto e = basis(d, mu, nu);
      worst = std::max(worst, (oracle::act(a, e) - oracle::act(b, e)).norm());
    }
  }
  return worst;
}

}  // namespace testutil
