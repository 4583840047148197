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

// Linear objectives f(S) = tr(F J(S)) = sum_i <<s_i| F |s_i>> on a channel
// slot H_in -> H_out, with F positive semi-definite on HS(H_in, H_out).
//
// For the code fidelity F_C(D T E) every slot has the same shape: with the
// two fixed channels composed into Kraus operators g, the fidelity reads
// d0^-2 sum_{g,i} |tr(g s_i)|^2 and tr(g s) = <<g^dagger|s>>, so
//
//   F = d0^-2 sum_g |g^dagger>><<g^dagger|.
//
// When the number of products g exceeds the slot size, F is assembled
// densely from the fixed channels' action on basis operators instead:
//
//   F[(a,mu),(b,nu)] = d0^-2 <nu| C(|b><a|) |mu>,  C the fixed composition.

#pragma once

#include "qecss/channel.hpp"

namespace qecss {

class ObjectiveOperator {
 public:
  /// F = factor * factor^dagger. factor has dim_in*dim_out rows.
  ObjectiveOperator(int dim_in, int dim_out, ComplexMatrix factor);

  /// Validates Hermitian PSD (kNotHermitian / kNotPsd) and factorizes.
  static ObjectiveOperator from_matrix(int dim_in, int dim_out,
                                       const ComplexMatrix& f);

  /// F = sum_k |g_k>><<g_k| for the columns g_k of generators.
  static ObjectiveOperator from_generators(int dim_in, int dim_out,
                                           const ComplexMatrix& generators);

  int dim_in() const noexcept { return dim_in_; }
  int dim_out() const noexcept { return dim_out_; }
  Eigen::Index size() const noexcept { return Eigen::Index(dim_in_) * dim_out_; }
  int rank() const noexcept { return int(factor_.cols()); }
  const ComplexMatrix& factor() const noexcept { return factor_; }

  ComplexMatrix matrix() const;

  /// F applied to each column of x.
  ComplexMatrix apply(const ComplexMatrix& x) const;

 private:
  int dim_in_;
  int dim_out_;
  ComplexMatrix factor_;  // orthogonal columns after from_* factories
};

enum class ObjectiveRoute { kAuto, kGenerators, kDense };

/// sum_i <<s_i|F|s_i>>. Throws kDimMismatch if the slot does not fit s.
double evaluate_objective(const ObjectiveOperator& f, const Channel& s);

/// Slot H0 -> H1: e |-> F_C(d t e).
ObjectiveOperator encoder_objective(const Channel& d, const Channel& t,
                                    ObjectiveRoute route = ObjectiveRoute::kAuto);

/// Slot H2 -> H0: d |-> F_C(d t e).
ObjectiveOperator decoder_objective(const Channel& e, const Channel& t,
                                    ObjectiveRoute route = ObjectiveRoute::kAuto);

/// Slot H1 -> H2: t' |-> F_C(d t' e).
ObjectiveOperator middle_objective(const Channel& e, const Channel& d,
                                   ObjectiveRoute route = ObjectiveRoute::kAuto);

}  // namespace qecss
