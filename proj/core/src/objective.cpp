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

#include "qecss/objective.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <string>
#include <utility>

#include "qecss/error.hpp"

namespace qecss {
namespace {

// Spectral floor when factorizing; eigenvalues below this are rounding noise.
constexpr double kFactorCutoff = 1e-14;

std::string dims(int a, int b) {
  return std::to_string(a) + "->" + std::to_string(b);
}

// Dense F from the fixed composition's action C on |b><a|, a, b < dim_out.
ObjectiveOperator dense_objective(
    int dim_in, int dim_out, double d0,
    const std::function<ComplexMatrix(const ComplexMatrix&)>& action) {
  const Eigen::Index n = Eigen::Index(dim_in) * dim_out;
  ComplexMatrix f(n, n);
  const double scale = 1.0 / (d0 * d0);
  for (int a = 0; a < dim_out; ++a) {
    for (int b = 0; b < dim_out; ++b) {
      ComplexMatrix basis = ComplexMatrix::Zero(dim_out, dim_out);
      basis(b, a) = 1.0;
      const ComplexMatrix z = action(basis);  // dim_in x dim_in
      for (int mu = 0; mu < dim_in; ++mu) {
        for (int nu = 0; nu < dim_in; ++nu) {
          f(a * dim_in + mu, b * dim_in + nu) = scale * z(nu, mu);
        }
      }
    }
  }
  return ObjectiveOperator::from_matrix(dim_in, dim_out, f);
}

// Generators |g^dagger>> / d0 for g = left_k * right_j.
ObjectiveOperator generator_objective(int dim_in, int dim_out, double d0,
                                      const Channel& left,
                                      const Channel& right) {
  const Eigen::Index n = Eigen::Index(dim_in) * dim_out;
  ComplexMatrix gens(n, Eigen::Index(left.kraus_count() * right.kraus_count()));
  Eigen::Index col = 0;
  for (const auto& l : left.kraus()) {
    for (const auto& r : right.kraus()) {
      gens.col(col++) = vectorize((l * r).adjoint()) / d0;
    }
  }
  return ObjectiveOperator::from_generators(dim_in, dim_out, gens);
}

bool use_generators(ObjectiveRoute route, std::size_t count, Eigen::Index n) {
  switch (route) {
    case ObjectiveRoute::kGenerators: return true;
    case ObjectiveRoute::kDense: return false;
    case ObjectiveRoute::kAuto: break;
  }
  return Eigen::Index(count) <= n;
}

}  // namespace

ObjectiveOperator::ObjectiveOperator(int dim_in, int dim_out,
                                     ComplexMatrix factor)
    : dim_in_(dim_in), dim_out_(dim_out), factor_(std::move(factor)) {
  if (dim_in_ < 1 || dim_out_ < 1) {
    throw Error(ErrorCode::kOutOfRange, "objective slot dims must be positive");
  }
  if (factor_.rows() != size()) {
    throw Error(ErrorCode::kShapeMismatch,
                "factor has " + std::to_string(factor_.rows()) +
                    " rows, slot size is " + std::to_string(size()));
  }
}

ObjectiveOperator ObjectiveOperator::from_matrix(int dim_in, int dim_out,
                                                 const ComplexMatrix& f) {
  const Eigen::Index n = Eigen::Index(dim_in) * dim_out;
  if (f.rows() != n || f.cols() != n) {
    throw Error(ErrorCode::kShapeMismatch, "objective matrix does not fit slot");
  }
  if (f.norm() == 0.0) return ObjectiveOperator(dim_in, dim_out, ComplexMatrix(n, 0));
  const EigenSystem es = hermitian_eigensystem(f);
  const double lambda_max = es.eigenvalues(0);
  const double lambda_min = es.eigenvalues(n - 1);
  if (lambda_min < -1e-8 * std::max(lambda_max, 0.0) || !(lambda_max > 0.0)) {
    throw Error(ErrorCode::kNotPsd, "objective eigenvalue " + std::to_string(lambda_min));
  }
  Eigen::Index rank = 0;
  while (rank < n && es.eigenvalues(rank) > kFactorCutoff * lambda_max) ++rank;
  ComplexMatrix factor = es.eigenvectors.leftCols(rank);
  for (Eigen::Index k = 0; k < rank; ++k) {
    factor.col(k) *= std::sqrt(es.eigenvalues(k));
  }
  return ObjectiveOperator(dim_in, dim_out, std::move(factor));
}

ObjectiveOperator ObjectiveOperator::from_generators(
    int dim_in, int dim_out, const ComplexMatrix& generators) {
  const Eigen::Index n = Eigen::Index(dim_in) * dim_out;
  if (generators.rows() != n) {
    throw Error(ErrorCode::kShapeMismatch, "generators do not fit slot");
  }
  if (generators.cols() > n) {
    return from_matrix(dim_in, dim_out, generators * generators.adjoint());
  }
  if (generators.cols() == 0 || generators.norm() == 0.0) {
    return ObjectiveOperator(dim_in, dim_out, ComplexMatrix(n, 0));
  }
  // G^dagger G = U L U^dagger  =>  G U has orthogonal columns, same G G^dagger.
  const EigenSystem es = hermitian_eigensystem(generators.adjoint() * generators);
  const double lambda_max = es.eigenvalues(0);
  Eigen::Index rank = 0;
  while (rank < es.eigenvalues.size() &&
         es.eigenvalues(rank) > kFactorCutoff * lambda_max) {
    ++rank;
  }
  return ObjectiveOperator(dim_in, dim_out,
                           generators * es.eigenvectors.leftCols(rank));
}

ComplexMatrix ObjectiveOperator::matrix() const {
  return factor_ * factor_.adjoint();
}

ComplexMatrix ObjectiveOperator::apply(const ComplexMatrix& x) const {
  if (x.rows() != size()) {
    throw Error(ErrorCode::kShapeMismatch, "vector does not fit objective slot");
  }
  return factor_ * (factor_.adjoint() * x);
}

double evaluate_objective(const ObjectiveOperator& f, const Channel& s) {
  if (s.dim_in() != f.dim_in() || s.dim_out() != f.dim_out()) {
    throw Error(ErrorCode::kDimMismatch,
                "channel " + dims(s.dim_in(), s.dim_out()) + " vs slot " +
                    dims(f.dim_in(), f.dim_out()));
  }
  if (f.rank() == 0) return 0.0;
  return (f.factor().adjoint() * kraus_vectors(s)).squaredNorm();
}

ObjectiveOperator encoder_objective(const Channel& d, const Channel& t,
                                    ObjectiveRoute route) {
  if (t.dim_out() != d.dim_in()) {
    throw Error(ErrorCode::kDimMismatch,
                "noise " + dims(t.dim_in(), t.dim_out()) + " does not feed decoder " +
                    dims(d.dim_in(), d.dim_out()));
  }
  const int d0 = d.dim_out();
  const int d1 = t.dim_in();
  if (use_generators(route, d.kraus_count() * t.kraus_count(), Eigen::Index(d0) * d1)) {
    return generator_objective(d0, d1, d0, d, t);
  }
  // <nu| D T (|b><a|) |mu> = <a| T*(D*(|mu><nu|)) |b>.
  const Eigen::Index n = Eigen::Index(d0) * d1;
  ComplexMatrix f(n, n);
  const double scale = 1.0 / (double(d0) * d0);
  for (int mu = 0; mu < d0; ++mu) {
    for (int nu = 0; nu < d0; ++nu) {
      ComplexMatrix basis = ComplexMatrix::Zero(d0, d0);
      basis(mu, nu) = 1.0;
      const ComplexMatrix y = apply_adjoint(t, apply_adjoint(d, basis));
      for (int a = 0; a < d1; ++a) {
        for (int b = 0; b < d1; ++b) {
          f(a * d0 + mu, b * d0 + nu) = scale * y(a, b);
        }
      }
    }
  }
  return ObjectiveOperator::from_matrix(d0, d1, f);
}

ObjectiveOperator decoder_objective(const Channel& e, const Channel& t,
                                    ObjectiveRoute route) {
  if (e.dim_out() != t.dim_in()) {
    throw Error(ErrorCode::kDimMismatch,
                "encoder " + dims(e.dim_in(), e.dim_out()) + " does not feed noise " +
                    dims(t.dim_in(), t.dim_out()));
  }
  const int d0 = e.dim_in();
  const int d2 = t.dim_out();
  if (use_generators(route, e.kraus_count() * t.kraus_count(), Eigen::Index(d0) * d2)) {
    return generator_objective(d2, d0, d0, t, e);
  }
  return dense_objective(d2, d0, d0, [&](const ComplexMatrix& x) {
    return qecss::apply(t, qecss::apply(e, x));
  });
}

ObjectiveOperator middle_objective(const Channel& e, const Channel& d,
                                   ObjectiveRoute route) {
  if (e.dim_in() != d.dim_out()) {
    throw Error(ErrorCode::kDimMismatch,
                "encoder input " + std::to_string(e.dim_in()) +
                    " != decoder output " + std::to_string(d.dim_out()));
  }
  const int d0 = e.dim_in();
  const int d1 = e.dim_out();
  const int d2 = d.dim_in();
  if (use_generators(route, e.kraus_count() * d.kraus_count(), Eigen::Index(d1) * d2)) {
    return generator_objective(d1, d2, d0, e, d);
  }
  return dense_objective(d1, d2, d0, [&](const ComplexMatrix& x) {
    return qecss::apply(e, qecss::apply(d, x));
  });
}

}  // namespace qecss
