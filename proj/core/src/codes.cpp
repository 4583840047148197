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

#include "qecss/codes.hpp"

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "qecss/channels_std.hpp"
#include "qecss/error.hpp"

namespace qecss {

CodePair::CodePair(Channel encoder, Channel decoder)
    : encoder_(std::move(encoder)), decoder_(std::move(decoder)) {
  if (encoder_.dim_in() != decoder_.dim_out()) {
    throw Error(ErrorCode::kDimMismatch,
                "encoder input " + std::to_string(encoder_.dim_in()) +
                    " != decoder output " + std::to_string(decoder_.dim_out()));
  }
}

double code_fidelity(const CodePair& code, const Channel& noise) {
  if (noise.dim_in() != code.d1() || noise.dim_out() != code.d2()) {
    throw Error(ErrorCode::kDimMismatch,
                "noise is " + std::to_string(noise.dim_in()) + "->" +
                    std::to_string(noise.dim_out()) + ", code expects " +
                    std::to_string(code.d1()) + "->" + std::to_string(code.d2()));
  }
  // F_C(S) = d^-2 sum_{mu,nu} <mu| S(|mu><nu|) |nu>.
  const int d0 = code.d0();
  double sum = 0.0;
  for (int mu = 0; mu < d0; ++mu) {
    for (int nu = 0; nu < d0; ++nu) {
      ComplexMatrix e = ComplexMatrix::Zero(d0, d0);
      e(mu, nu) = 1.0;
      const ComplexMatrix out =
          qecss::apply(code.decoder(), qecss::apply(noise, qecss::apply(code.encoder(), e)));
      sum += out(mu, nu).real();
    }
  }
  return sum / (double(d0) * d0);
}

ComplexMatrix pauli_string(const std::string& word) {
  ComplexMatrix out = ComplexMatrix::Identity(1, 1);
  for (char ch : word) {
    switch (ch) {
      case 'I': out = kron(out, pauli::i()); break;
      case 'X': out = kron(out, pauli::x()); break;
      case 'Y': out = kron(out, pauli::y()); break;
      case 'Z': out = kron(out, pauli::z()); break;
      default:
        throw Error(ErrorCode::kParse, std::string("bad Pauli letter '") + ch + "'");
    }
  }
  return out;
}

CodePair five_bit_code() {
  constexpr int kQubits = 5;
  constexpr int kDim = 1 << kQubits;
  const ComplexMatrix id = ComplexMatrix::Identity(kDim, kDim);

  std::vector<ComplexMatrix> gens;
  for (const auto& word : kFiveQubitStabilizers) gens.push_back(pauli_string(word));

  auto syndrome_projector = [&](unsigned syndrome) {
    ComplexMatrix p = id;
    for (std::size_t k = 0; k < gens.size(); ++k) {
      const double sign = (syndrome >> k) & 1U ? -1.0 : 1.0;
      p = (p * (0.5 * (id + sign * gens[k]))).eval();
    }
    return p;
  };

  // Logical basis: |0_L> ~ P_0 |00000>, |1_L> = XXXXX |0_L>.
  const ComplexMatrix code_proj = syndrome_projector(0);
  ComplexVector zero_l = code_proj.col(0);
  zero_l.normalize();
  const ComplexVector one_l = pauli_string("XXXXX") * zero_l;
  ComplexMatrix v(kDim, 2);
  v.col(0) = zero_l;
  v.col(1) = one_l;

  // Syndrome table from the 16 Paulis of weight <= 1.
  std::vector<std::string> words = {std::string(kQubits, 'I')};
  for (int q = 0; q < kQubits; ++q) {
    for (char letter : {'X', 'Y', 'Z'}) {
      std::string word(kQubits, 'I');
      word[std::size_t(q)] = letter;
      words.push_back(word);
    }
  }
  std::vector<ComplexMatrix> correction(16);
  std::vector<bool> seen(16, false);
  for (const auto& word : words) {
    const ComplexMatrix err = pauli_string(word);
    unsigned syndrome = 0;
    for (std::size_t k = 0; k < gens.size(); ++k) {
      // Anticommuting with generator k flips syndrome bit k.
      if ((err * gens[k] + gens[k] * err).norm() < 1e-12) syndrome |= 1U << k;
    }
    if (seen[syndrome]) {
      throw std::logic_error("five-qubit syndrome table is not injective");
    }
    seen[syndrome] = true;
    correction[syndrome] = err;
  }

  std::vector<ComplexMatrix> dec;
  dec.reserve(16);
  for (unsigned s = 0; s < 16; ++s) {
    dec.push_back(v.adjoint() * correction[s] * syndrome_projector(s));
  }
  return CodePair(Channel(2, kDim, {v}), Channel(kDim, 2, std::move(dec)));
}

CodePair embedding_code(int d0, int d1) {
  if (d0 < 1 || d1 < d0 || d1 % d0 != 0) {
    throw Error(ErrorCode::kDimMismatch,
                "cannot embed " + std::to_string(d0) + " into " + std::to_string(d1));
  }
  const int m = d1 / d0;
  const ComplexMatrix id = ComplexMatrix::Identity(d0, d0);
  ComplexMatrix anc = ComplexMatrix::Zero(m, 1);
  anc(0, 0) = 1.0;
  std::vector<ComplexMatrix> dec;
  for (int b = 0; b < m; ++b) {
    ComplexMatrix bra = ComplexMatrix::Zero(1, m);
    bra(0, b) = 1.0;
    dec.push_back(kron(id, bra));
  }
  return CodePair(Channel(d0, d1, {kron(id, anc)}),
                  Channel(d1, d0, std::move(dec)));
}

CodePair trivial_code(int n) {
  if (n < 1 || n > 20) {
    throw Error(ErrorCode::kOutOfRange, "trivial code needs 1 <= n <= 20");
  }
  return embedding_code(2, 1 << n);
}

}  // namespace qecss
