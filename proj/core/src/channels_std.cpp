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

#include "qecss/channels_std.hpp"

#include <cmath>
#include <string>
#include <utility>

#include "qecss/error.hpp"

namespace qecss {

namespace pauli {
ComplexMatrix i() { return ComplexMatrix::Identity(2, 2); }
ComplexMatrix x() {
  ComplexMatrix m(2, 2);
  m << 0, 1, 1, 0;
  return m;
}
ComplexMatrix y() {
  ComplexMatrix m(2, 2);
  m << 0, Complex(0, -1), Complex(0, 1), 0;
  return m;
}
ComplexMatrix z() {
  ComplexMatrix m(2, 2);
  m << 1, 0, 0, -1;
  return m;
}
}  // namespace pauli

Channel depolarizing(DepolarizingParams params) {
  const double p = params.p;
  if (!(p >= 0.0 && p <= kMaxDepolarizing)) {
    throw Error(ErrorCode::kOutOfRange,
                "depolarizing p=" + std::to_string(p) + " outside [0, 4/3]");
  }
  if (p <= 1.0) {
    const double w0 = std::sqrt(1.0 - 0.75 * p);
    const double w = std::sqrt(0.25 * p);
    if (w == 0.0) return Channel::identity(2);
    return Channel(2, 2,
                   {w0 * pauli::i(), w * pauli::x(), w * pauli::y(),
                    w * pauli::z()});
  }
  const ComplexVector vec_id = vectorize(pauli::i());
  ComplexMatrix j = 0.5 * p * ComplexMatrix::Identity(4, 4) +
                    (1.0 - p) * vec_id * vec_id.adjoint();
  return kraus_of(ChoiOperator(2, 2, std::move(j)));
}

Channel bit_flip(double q) {
  if (!(q >= 0.0 && q <= 1.0)) {
    throw Error(ErrorCode::kOutOfRange,
                "bit flip q=" + std::to_string(q) + " outside [0, 1]");
  }
  if (q == 0.0) return Channel::identity(2);
  if (q == 1.0) return Channel(2, 2, {pauli::x()});
  return Channel(2, 2,
                 {std::sqrt(1.0 - q) * pauli::i(), std::sqrt(q) * pauli::x()});
}

Channel random_channel(const RandomChannelSpec& spec, Rng& rng) {
  if (spec.dim_in < 1 || spec.dim_out < 1 || spec.kraus_count < 1) {
    throw Error(ErrorCode::kOutOfRange, "random channel needs positive sizes");
  }
  if (!(spec.mix_lambda >= 0.0 && spec.mix_lambda <= 1.0)) {
    throw Error(ErrorCode::kOutOfRange, "mix_lambda outside [0, 1]");
  }
  if (spec.mix_lambda < 1.0 && spec.dim_in != spec.dim_out) {
    throw Error(ErrorCode::kDimMismatch,
                "identity mixing needs dim_in == dim_out");
  }
  std::vector<ComplexMatrix> kraus;
  kraus.reserve(std::size_t(spec.kraus_count));
  for (int i = 0; i < spec.kraus_count; ++i) {
    kraus.push_back(rng.uniform_matrix(spec.dim_out, spec.dim_in, -1.0, 1.0));
  }
  Channel c = normalized(spec.dim_in, spec.dim_out, std::move(kraus));
  if (spec.mix_lambda < 1.0) return mix_with_identity(c, spec.mix_lambda);
  return c;
}

Channel random_channel(const RandomChannelSpec& spec) {
  Rng rng(spec.seed);
  return random_channel(spec, rng);
}

Channel mix_with_identity(const Channel& c, double lam) {
  if (!c.is_square()) {
    throw Error(ErrorCode::kDimMismatch, "identity mixing needs a square channel");
  }
  if (!(lam >= 0.0 && lam <= 1.0)) {
    throw Error(ErrorCode::kOutOfRange,
                "lambda=" + std::to_string(lam) + " outside [0, 1]");
  }
  const int d = c.dim_in();
  const ComplexVector vec_id = vectorize(ComplexMatrix::Identity(d, d));
  ComplexMatrix j = lam * choi_of(c).matrix() +
                    (1.0 - lam) * (vec_id * vec_id.adjoint());
  return kraus_of(ChoiOperator(d, d, std::move(j)));
}

}  // namespace qecss
