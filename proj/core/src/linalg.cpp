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

#include "qecss/linalg.hpp"

#include <cmath>
#include <string>

#include "qecss/error.hpp"

namespace qecss {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kNonSquare: return "NonSquare";
    case ErrorCode::kNotHermitian: return "NotHermitian";
    case ErrorCode::kNegativeEigenvalue: return "NegativeEigenvalue";
    case ErrorCode::kZeroMatrix: return "ZeroMatrix";
    case ErrorCode::kShapeMismatch: return "ShapeMismatch";
    case ErrorCode::kDimMismatch: return "DimMismatch";
    case ErrorCode::kNotPsd: return "NotPSD";
    case ErrorCode::kOutOfRange: return "OutOfRange";
    case ErrorCode::kZeroMap: return "ZeroMap";
    case ErrorCode::kNonFinite: return "NonFinite";
    case ErrorCode::kParse: return "Parse";
    case ErrorCode::kIo: return "IO";
  }
  return "Unknown";
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  const Eigen::Index rb = b.rows();
  const Eigen::Index cb = b.cols();
  ComplexMatrix out(a.rows() * rb, a.cols() * cb);
  for (Eigen::Index j = 0; j < a.cols(); ++j) {
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
      out.block(i * rb, j * cb, rb, cb) = a(i, j) * b;
    }
  }
  return out;
}

double hermitian_defect(const ComplexMatrix& a) {
  const double norm = a.norm();
  if (norm == 0.0) return 0.0;
  return (a - a.adjoint()).norm() / norm;
}

bool all_finite(const ComplexMatrix& a) {
  return a.allFinite();
}

EigenSystem hermitian_eigensystem(const ComplexMatrix& a) {
  if (a.rows() != a.cols()) {
    throw Error(ErrorCode::kNonSquare,
                std::to_string(a.rows()) + "x" + std::to_string(a.cols()));
  }
  if (hermitian_defect(a) > 1e-8) {
    throw Error(ErrorCode::kNotHermitian,
                "relative defect " + std::to_string(hermitian_defect(a)));
  }
  const ComplexMatrix sym = 0.5 * (a + a.adjoint());
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(sym);
  if (solver.info() != Eigen::Success) {
    throw Error(ErrorCode::kNonFinite, "eigensolver did not converge");
  }
  // Eigen returns ascending order.
  EigenSystem out;
  out.eigenvalues = solver.eigenvalues().reverse();
  out.eigenvectors = solver.eigenvectors().rowwise().reverse();
  return out;
}

InverseSqrt psd_inv_sqrt(const ComplexMatrix& a, double cutoff) {
  const EigenSystem es = hermitian_eigensystem(a);
  const Eigen::Index n = es.eigenvalues.size();
  const double lambda_max = n > 0 ? es.eigenvalues(0) : 0.0;
  if (!(lambda_max > 0.0)) {
    throw Error(ErrorCode::kZeroMatrix, "largest eigenvalue is not positive");
  }
  const double lambda_min = es.eigenvalues(n - 1);
  if (lambda_min < -1e-8 * lambda_max) {
    throw Error(ErrorCode::kNegativeEigenvalue,
                "eigenvalue " + std::to_string(lambda_min));
  }

  int rank = 0;
  while (rank < n && es.eigenvalues(rank) > cutoff * lambda_max) ++rank;

  const auto v = es.eigenvectors.leftCols(rank);
  RealVector scale(rank);
  for (int k = 0; k < rank; ++k) scale(k) = 1.0 / std::sqrt(es.eigenvalues(k));

  InverseSqrt out;
  out.rank = rank;
  out.inv_sqrt = v * scale.cast<Complex>().asDiagonal() * v.adjoint();
  out.support_projector = v * v.adjoint();
  return out;
}

ComplexVector vectorize(const ComplexMatrix& m) {
  ComplexVector v(m.size());
  const Eigen::Index cols = m.cols();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    for (Eigen::Index c = 0; c < cols; ++c) v(r * cols + c) = m(r, c);
  }
  return v;
}

ComplexMatrix unvectorize(const ComplexVector& v, Eigen::Index rows,
                          Eigen::Index cols) {
  if (v.size() != rows * cols) {
    throw Error(ErrorCode::kShapeMismatch,
                "vector of length " + std::to_string(v.size()) +
                    " cannot be reshaped to " + std::to_string(rows) + "x" +
                    std::to_string(cols));
  }
  ComplexMatrix m(rows, cols);
  for (Eigen::Index r = 0; r < rows; ++r) {
    for (Eigen::Index c = 0; c < cols; ++c) m(r, c) = v(r * cols + c);
  }
  return m;
}

}  // namespace qecss
