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

// Dense complex matrix primitives shared by every other module.
//
// Index convention: matrices are addressed logically as (row, col). Where a
// matrix is flattened to a vector the row-major order is used, i.e. entry
// (r, c) of an R x C matrix lands at position r * C + c. The Choi reshuffle
// in channel.hpp depends on this.

#pragma once

#include <complex>

#include <Eigen/Dense>

namespace qecss {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;

inline constexpr double kDefaultCutoff = 1e-12;

struct EigenSystem {
  RealVector eigenvalues;      // descending
  ComplexMatrix eigenvectors;  // column k belongs to eigenvalues[k]
};

/// Support-restricted inverse square root of a PSD matrix.
struct InverseSqrt {
  ComplexMatrix inv_sqrt;
  ComplexMatrix support_projector;
  int rank = 0;
};

/// Kronecker product; (a (x) b)(i*rb + k, j*cb + l) = a(i,j) * b(k,l).
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

/// Eigendecomposition of a Hermitian matrix, eigenvalues sorted descending.
///
/// The input is symmetrized as (a + a^dagger)/2 before decomposition.
/// Throws kNonSquare, or kNotHermitian when the relative anti-Hermitian part
/// exceeds 1e-8.
EigenSystem hermitian_eigensystem(const ComplexMatrix& a);

/// Pseudo-inverse square root keeping eigenvalues above cutoff * lambda_max.
///
/// Throws kZeroMatrix when lambda_max is not positive, kNegativeEigenvalue
/// when an eigenvalue lies below -1e-8 * lambda_max.
InverseSqrt psd_inv_sqrt(const ComplexMatrix& a, double cutoff = kDefaultCutoff);

/// Relative anti-Hermitian defect ||a - a^dagger||_F / ||a||_F (0 for a = 0).
double hermitian_defect(const ComplexMatrix& a);

bool all_finite(const ComplexMatrix& a);

/// Row-major flattening of an R x C matrix into a vector of length R*C.
ComplexVector vectorize(const ComplexMatrix& m);

/// Inverse of vectorize.
ComplexMatrix unvectorize(const ComplexVector& v, Eigen::Index rows,
                          Eigen::Index cols);

}  // namespace qecss
