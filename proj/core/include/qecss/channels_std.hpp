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

#include "qecss/channel.hpp"
#include "qecss/random.hpp"

namespace qecss {

inline constexpr double kMaxDepolarizing = 4.0 / 3.0;

/// Depolarizing weight p; completely positive for 0 <= p <= 4/3.
struct DepolarizingParams {
  double p = 0.0;
};

struct RandomChannelSpec {
  int dim_in = 2;
  int dim_out = 2;
  int kraus_count = 1;
  double mix_lambda = 1.0;  // weight of the random part; 1 means no identity
  std::uint64_t seed = 0;
};

namespace pauli {
ComplexMatrix i();
ComplexMatrix x();
ComplexMatrix y();
ComplexMatrix z();
}  // namespace pauli

/// rho -> p tr(rho) I/2 + (1 - p) rho on a qubit.
///
/// Uses the Pauli Kraus set for p <= 1. Above 1 the identity weight
/// 1 - 3p/4 is negative, so the channel is built from its Choi operator
/// (p/2) I + (1 - p)|I>><<I| instead. Throws kOutOfRange outside [0, 4/3].
Channel depolarizing(DepolarizingParams params);

/// Kraus {sqrt(1-q) I, sqrt(q) X}; throws kOutOfRange outside [0, 1].
Channel bit_flip(double q);

/// Kraus entries with real and imaginary parts i.i.d. uniform on [-1, 1],
/// normalized by M^{-1/2}. If spec.mix_lambda < 1 the result is mixed with
/// the identity (requires dim_in == dim_out).
Channel random_channel(const RandomChannelSpec& spec, Rng& rng);
Channel random_channel(const RandomChannelSpec& spec);

/// Channel with Choi lam * J(c) + (1 - lam) * J(id).
Channel mix_with_identity(const Channel& c, double lam);

}  // namespace qecss
