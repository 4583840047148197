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

// Quantum channels in Kraus form and their Choi (Jamiolkowski) operators.
//
// A Kraus operator s: H_in -> H_out is stored as a dim_out x dim_in matrix.
// Its Hilbert-Schmidt vector |s>> is the row-major flattening, so component
// (a, mu) sits at index a * dim_in + mu. With that convention the Choi
// operator sum_i |s_i>><<s_i| has entries
//
//   J[(a, mu), (b, nu)] = <a| S(|mu><nu|) |b>,
//
// which is a pure permutation of the matrix elements of S on the
// computational basis.

#pragma once

#include <cstddef>
#include <vector>

#include "qecss/linalg.hpp"

namespace qecss {

class Channel {
 public:
  /// Throws kShapeMismatch if any Kraus operator is not dim_out x dim_in,
  /// kOutOfRange on an empty list or non-positive dims, kNonFinite on NaN/Inf.
  Channel(int dim_in, int dim_out, std::vector<ComplexMatrix> kraus);

  static Channel identity(int dim);

  int dim_in() const noexcept { return dim_in_; }
  int dim_out() const noexcept { return dim_out_; }
  bool is_square() const noexcept { return dim_in_ == dim_out_; }
  const std::vector<ComplexMatrix>& kraus() const noexcept { return kraus_; }
  std::size_t kraus_count() const noexcept { return kraus_.size(); }

  /// Tensor factors, when the channel was built by tensor_product or
  /// tensor_power. Used to apply large product channels slot by slot.
  const std::vector<Channel>& factors() const noexcept { return factors_; }

 private:
  friend Channel tensor_product(const Channel& a, const Channel& b);

  int dim_in_;
  int dim_out_;
  std::vector<ComplexMatrix> kraus_;
  std::vector<Channel> factors_;
};

class ChoiOperator {
 public:
  /// Throws kShapeMismatch unless matrix is (dim_in*dim_out) square.
  ChoiOperator(int dim_in, int dim_out, ComplexMatrix matrix);

  int dim_in() const noexcept { return dim_in_; }
  int dim_out() const noexcept { return dim_out_; }
  const ComplexMatrix& matrix() const noexcept { return matrix_; }

 private:
  int dim_in_;
  int dim_out_;
  ComplexMatrix matrix_;
};

struct ValidationReport {
  double cp_defect = 0.0;  // magnitude of the most negative Choi eigenvalue
  double tp_defect = 0.0;  // ||sum_i s_i^dagger s_i - I||_F
  int kraus_rank = 0;      // numerical Choi rank
};

/// kraus_rank counts Choi eigenvalues above tol * lambda_max.
ValidationReport validate_channel(const Channel& c, double tol = 1e-10);

/// sum_i s_i^dagger s_i (dim_in x dim_in).
ComplexMatrix normalization_operator(const Channel& c);
double tp_defect(const Channel& c);

/// Columns are the Hilbert-Schmidt vectors |s_i>>.
ComplexMatrix kraus_vectors(const Channel& c);

/// Gram matrix G_ij = <<s_i|s_j>> = tr(s_i^dagger s_j). Shares its nonzero
/// spectrum with the Choi operator.
ComplexMatrix kraus_gram(const Channel& c);

ChoiOperator choi_of(const Channel& c);

/// Kraus operators sqrt(lambda_k) unvec(v_k) for eigenvalues above
/// cutoff * lambda_max. Throws kNotPsd or kZeroMatrix.
Channel kraus_of(const ChoiOperator& j, double cutoff = kDefaultCutoff);

/// Minimal Kraus list with the same Choi operator (up to the cutoff).
Channel compress(const Channel& c, double cutoff = kDefaultCutoff);

/// Right-multiplies each operator by M^{-1/2}, M = sum_i k_i^dagger k_i,
/// using the pseudo-inverse when M is singular.
Channel normalized(int dim_in, int dim_out, std::vector<ComplexMatrix> kraus,
                   double cutoff = kDefaultCutoff);

/// Appends sqrt(r_j)|0><v_j| for each eigenpair of R = I - sum_i k_i^dagger k_i
/// with r_j > tol, so the result is trace preserving. Leaves the action on the
/// support of sum_i k_i^dagger k_i unchanged. Throws kNotPsd if R has an
/// eigenvalue below -1e-8.
Channel complete_to_tp(const Channel& c, double tol = 1e-12);

/// sum_i s_i rho s_i^dagger. rho may be any dim_in x dim_in operator.
ComplexMatrix apply(const Channel& c, const ComplexMatrix& rho);

/// Heisenberg-picture dual sum_i s_i^dagger y s_i.
ComplexMatrix apply_adjoint(const Channel& c, const ComplexMatrix& y);

/// outer after inner; Kraus list is the full product set {o_j i_k}.
Channel compose(const Channel& outer, const Channel& inner);

Channel tensor_product(const Channel& a, const Channel& b);
Channel tensor_power(const Channel& c, int n);

/// (dim)^-2 sum_i |tr s_i|^2 for square channels; throws kDimMismatch.
double channel_fidelity(const Channel& c);

/// Largest Frobenius distance between the actions of a and b on the
/// computational basis operators |mu><nu|.
double action_distance(const Channel& a, const Channel& b);

}  // namespace qecss
