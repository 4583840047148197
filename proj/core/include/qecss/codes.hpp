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

#include <array>
#include <string>

#include "qecss/channel.hpp"

namespace qecss {

/// Encoder E: d0 -> d1 and decoder D: d2 -> d0.
class CodePair {
 public:
  /// Throws kDimMismatch unless encoder.dim_in == decoder.dim_out.
  CodePair(Channel encoder, Channel decoder);

  const Channel& encoder() const noexcept { return encoder_; }
  const Channel& decoder() const noexcept { return decoder_; }
  int d0() const noexcept { return encoder_.dim_in(); }
  int d1() const noexcept { return encoder_.dim_out(); }
  int d2() const noexcept { return decoder_.dim_in(); }

 private:
  Channel encoder_;
  Channel decoder_;
};

/// F_C(D T E). Throws kDimMismatch if the chain does not fit.
double code_fidelity(const CodePair& code, const Channel& noise);

/// Pauli string such as "XZZXI" as a 2^n x 2^n matrix; qubit 0 is the most
/// significant tensor factor.
ComplexMatrix pauli_string(const std::string& word);

/// Cyclic generators of the perfect [[5,1,3]] code.
inline const std::array<std::string, 4> kFiveQubitStabilizers = {
    "XZZXI", "IXZZX", "XIXZZ", "ZXIXZ"};

/// Five-qubit code: isometric encoder onto the joint +1 eigenspace of the
/// stabilizers, and a 16-outcome syndrome decoder that undoes the unique
/// weight <= 1 Pauli matching each syndrome.
CodePair five_bit_code();

/// "Do nothing" on n qubits: encode rho -> rho (x) |0..0><0..0|, decode by
/// tracing out the last n-1 qubits.
CodePair trivial_code(int n);

/// Generalization of trivial_code: logical d0 embedded as the first tensor
/// factor of a d1 = d0 * m system with the ancilla in |0>. Throws
/// kDimMismatch unless d1 is a multiple of d0.
CodePair embedding_code(int d0, int d1);

}  // namespace qecss
