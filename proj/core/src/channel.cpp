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

#include "qecss/channel.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>

#include "qecss/error.hpp"

namespace qecss {
namespace {

std::string shape(Eigen::Index r, Eigen::Index c) {
  return std::to_string(r) + "x" + std::to_string(c);
}

// Lifts an operator acting on the middle factor of A (x) H (x) B.
ComplexMatrix lift(const ComplexMatrix& s, Eigen::Index left,
                   Eigen::Index right) {
  ComplexMatrix out = ComplexMatrix::Zero(left * s.rows() * right,
                                          left * s.cols() * right);
  const Eigen::Index r_blk = s.rows() * right;
  const Eigen::Index c_blk = s.cols() * right;
  for (Eigen::Index l = 0; l < left; ++l) {
    for (Eigen::Index i = 0; i < s.rows(); ++i) {
      for (Eigen::Index j = 0; j < s.cols(); ++j) {
        const Complex v = s(i, j);
        if (v == Complex(0.0, 0.0)) continue;
        for (Eigen::Index k = 0; k < right; ++k) {
          out(l * r_blk + i * right + k, l * c_blk + j * right + k) = v;
        }
      }
    }
  }
  return out;
}

Eigen::Index product_of(const std::vector<Channel>& fs, std::size_t begin,
                        std::size_t end, bool use_out) {
  Eigen::Index p = 1;
  for (std::size_t k = begin; k < end; ++k) {
    p *= use_out ? fs[k].dim_out() : fs[k].dim_in();
  }
  return p;
}

Channel from_eigen(int dim_in, int dim_out, const EigenSystem& es,
                   double cutoff) {
  const double lambda_max = es.eigenvalues(0);
  std::vector<ComplexMatrix> kraus;
  for (Eigen::Index k = 0; k < es.eigenvalues.size(); ++k) {
    const double lambda = es.eigenvalues(k);
    if (!(lambda > cutoff * lambda_max)) break;
    kraus.push_back(std::sqrt(lambda) *
                    unvectorize(es.eigenvectors.col(k), dim_out, dim_in));
  }
  return Channel(dim_in, dim_out, std::move(kraus));
}

}  // namespace

Channel::Channel(int dim_in, int dim_out, std::vector<ComplexMatrix> kraus)
    : dim_in_(dim_in), dim_out_(dim_out), kraus_(std::move(kraus)) {
  if (dim_in_ <= 0 || dim_out_ <= 0) {
    throw Error(ErrorCode::kOutOfRange, "channel dims must be positive");
  }
  if (kraus_.empty()) {
    throw Error(ErrorCode::kOutOfRange, "channel needs at least one Kraus operator");
  }
  for (const auto& k : kraus_) {
    if (k.rows() != dim_out_ || k.cols() != dim_in_) {
      throw Error(ErrorCode::kShapeMismatch,
                  "Kraus operator " + shape(k.rows(), k.cols()) +
                      ", expected " + shape(dim_out_, dim_in_));
    }
    if (!k.allFinite()) {
      throw Error(ErrorCode::kNonFinite, "Kraus operator has NaN/Inf entries");
    }
  }
}

Channel Channel::identity(int dim) {
  return Channel(dim, dim, {ComplexMatrix::Identity(dim, dim)});
}

ChoiOperator::ChoiOperator(int dim_in, int dim_out, ComplexMatrix matrix)
    : dim_in_(dim_in), dim_out_(dim_out), matrix_(std::move(matrix)) {
  const Eigen::Index n = Eigen::Index(dim_in_) * dim_out_;
  if (matrix_.rows() != n || matrix_.cols() != n) {
    throw Error(ErrorCode::kShapeMismatch,
                "Choi matrix " + shape(matrix_.rows(), matrix_.cols()) +
                    ", expected " + shape(n, n));
  }
}

ComplexMatrix normalization_operator(const Channel& c) {
  ComplexMatrix m = ComplexMatrix::Zero(c.dim_in(), c.dim_in());
  for (const auto& k : c.kraus()) m.noalias() += k.adjoint() * k;
  return m;
}

double tp_defect(const Channel& c) {
  return (normalization_operator(c) -
          ComplexMatrix::Identity(c.dim_in(), c.dim_in()))
      .norm();
}

ComplexMatrix kraus_vectors(const Channel& c) {
  const Eigen::Index n = Eigen::Index(c.dim_in()) * c.dim_out();
  ComplexMatrix x(n, Eigen::Index(c.kraus_count()));
  for (std::size_t i = 0; i < c.kraus_count(); ++i) {
    x.col(Eigen::Index(i)) = vectorize(c.kraus()[i]);
  }
  return x;
}

ComplexMatrix kraus_gram(const Channel& c) {
  const ComplexMatrix x = kraus_vectors(c);
  return x.adjoint() * x;
}

ValidationReport validate_channel(const Channel& c, double tol) {
  const Eigen::Index n = Eigen::Index(c.dim_in()) * c.dim_out();
  const Eigen::Index k = Eigen::Index(c.kraus_count());
  // Gram and Choi share their nonzero spectrum; decompose the smaller one.
  const ComplexMatrix x = kraus_vectors(c);
  const ComplexMatrix small = k <= n ? ComplexMatrix(x.adjoint() * x)
                                     : ComplexMatrix(x * x.adjoint());
  const EigenSystem es = hermitian_eigensystem(small);

  ValidationReport out;
  out.tp_defect = tp_defect(c);
  const double lambda_max = es.eigenvalues(0);
  out.cp_defect = std::max(0.0, -es.eigenvalues(es.eigenvalues.size() - 1));
  for (Eigen::Index i = 0; i < es.eigenvalues.size(); ++i) {
    if (es.eigenvalues(i) > tol * lambda_max) ++out.kraus_rank;
  }
  return out;
}

ChoiOperator choi_of(const Channel& c) {
  const ComplexMatrix x = kraus_vectors(c);
  return ChoiOperator(c.dim_in(), c.dim_out(), x * x.adjoint());
}

Channel kraus_of(const ChoiOperator& j, double cutoff) {
  const EigenSystem es = hermitian_eigensystem(j.matrix());
  const double lambda_max = es.eigenvalues(0);
  if (!(lambda_max > 0.0)) {
    throw Error(ErrorCode::kZeroMatrix, "Choi operator has no positive part");
  }
  const double lambda_min = es.eigenvalues(es.eigenvalues.size() - 1);
  if (lambda_min < -1e-8 * lambda_max) {
    throw Error(ErrorCode::kNotPsd,
                "Choi eigenvalue " + std::to_string(lambda_min));
  }
  return from_eigen(j.dim_in(), j.dim_out(), es, cutoff);
}

Channel compress(const Channel& c, double cutoff) {
  const Eigen::Index n = Eigen::Index(c.dim_in()) * c.dim_out();
  const Eigen::Index k = Eigen::Index(c.kraus_count());
  if (k > n) return kraus_of(choi_of(c), cutoff);

  // X = [|s_1>> ... |s_k>>], X^dagger X = U L U^dagger; X U has orthogonal
  // columns of norm sqrt(L) and the same X X^dagger.
  const ComplexMatrix x = kraus_vectors(c);
  const EigenSystem es = hermitian_eigensystem(x.adjoint() * x);
  const double lambda_max = es.eigenvalues(0);
  if (!(lambda_max > 0.0)) {
    throw Error(ErrorCode::kZeroMatrix, "all Kraus operators vanish");
  }
  std::vector<ComplexMatrix> kraus;
  for (Eigen::Index i = 0; i < k; ++i) {
    if (!(es.eigenvalues(i) > cutoff * lambda_max)) break;
    kraus.push_back(unvectorize(x * es.eigenvectors.col(i), c.dim_out(),
                                c.dim_in()));
  }
  return Channel(c.dim_in(), c.dim_out(), std::move(kraus));
}

Channel normalized(int dim_in, int dim_out, std::vector<ComplexMatrix> kraus,
                   double cutoff) {
  ComplexMatrix m = ComplexMatrix::Zero(dim_in, dim_in);
  for (const auto& k : kraus) m.noalias() += k.adjoint() * k;
  const InverseSqrt root = psd_inv_sqrt(m, cutoff);
  for (auto& k : kraus) k = (k * root.inv_sqrt).eval();
  return Channel(dim_in, dim_out, std::move(kraus));
}

Channel complete_to_tp(const Channel& c, double tol) {
  const int din = c.dim_in();
  const ComplexMatrix r = ComplexMatrix::Identity(din, din) - normalization_operator(c);
  const EigenSystem es = hermitian_eigensystem(r);
  if (es.eigenvalues(din - 1) < -1e-8) {
    throw Error(ErrorCode::kNotPsd,
                "sum of k^dagger k exceeds identity by " +
                    std::to_string(-es.eigenvalues(din - 1)));
  }
  std::vector<ComplexMatrix> kraus = c.kraus();
  for (int j = 0; j < din && es.eigenvalues(j) > tol; ++j) {
    ComplexMatrix k = ComplexMatrix::Zero(c.dim_out(), din);
    k.row(0) = std::sqrt(es.eigenvalues(j)) * es.eigenvectors.col(j).adjoint();
    kraus.push_back(std::move(k));
  }
  if (kraus.size() == c.kraus().size()) return c;
  return Channel(din, c.dim_out(), std::move(kraus));
}

ComplexMatrix apply(const Channel& c, const ComplexMatrix& rho) {
  if (rho.rows() != c.dim_in() || rho.cols() != c.dim_in()) {
    throw Error(ErrorCode::kShapeMismatch,
                "input " + shape(rho.rows(), rho.cols()) + ", expected " +
                    shape(c.dim_in(), c.dim_in()));
  }
  const auto& fs = c.factors();
  if (!fs.empty()) {
    ComplexMatrix x = rho;
    for (std::size_t k = 0; k < fs.size(); ++k) {
      const Eigen::Index left = product_of(fs, 0, k, true);
      const Eigen::Index right = product_of(fs, k + 1, fs.size(), false);
      ComplexMatrix y = ComplexMatrix::Zero(left * fs[k].dim_out() * right,
                                            left * fs[k].dim_out() * right);
      for (const auto& s : fs[k].kraus()) {
        const ComplexMatrix l = lift(s, left, right);
        y.noalias() += l * x * l.adjoint();
      }
      x = std::move(y);
    }
    return x;
  }
  ComplexMatrix out = ComplexMatrix::Zero(c.dim_out(), c.dim_out());
  for (const auto& s : c.kraus()) out.noalias() += s * rho * s.adjoint();
  return out;
}

ComplexMatrix apply_adjoint(const Channel& c, const ComplexMatrix& y) {
  if (y.rows() != c.dim_out() || y.cols() != c.dim_out()) {
    throw Error(ErrorCode::kShapeMismatch,
                "input " + shape(y.rows(), y.cols()) + ", expected " +
                    shape(c.dim_out(), c.dim_out()));
  }
  const auto& fs = c.factors();
  if (!fs.empty()) {
    ComplexMatrix x = y;
    for (std::size_t k = 0; k < fs.size(); ++k) {
      const Eigen::Index left = product_of(fs, 0, k, false);
      const Eigen::Index right = product_of(fs, k + 1, fs.size(), true);
      ComplexMatrix z = ComplexMatrix::Zero(left * fs[k].dim_in() * right,
                                            left * fs[k].dim_in() * right);
      for (const auto& s : fs[k].kraus()) {
        const ComplexMatrix l = lift(s, left, right);
        z.noalias() += l.adjoint() * x * l;
      }
      x = std::move(z);
    }
    return x;
  }
  ComplexMatrix out = ComplexMatrix::Zero(c.dim_in(), c.dim_in());
  for (const auto& s : c.kraus()) out.noalias() += s.adjoint() * y * s;
  return out;
}

Channel compose(const Channel& outer, const Channel& inner) {
  if (inner.dim_out() != outer.dim_in()) {
    throw Error(ErrorCode::kDimMismatch,
                "inner output " + std::to_string(inner.dim_out()) +
                    " != outer input " + std::to_string(outer.dim_in()));
  }
  std::vector<ComplexMatrix> kraus;
  kraus.reserve(outer.kraus_count() * inner.kraus_count());
  for (const auto& o : outer.kraus()) {
    for (const auto& i : inner.kraus()) kraus.push_back(o * i);
  }
  return Channel(inner.dim_in(), outer.dim_out(), std::move(kraus));
}

Channel tensor_product(const Channel& a, const Channel& b) {
  std::vector<ComplexMatrix> kraus;
  kraus.reserve(a.kraus_count() * b.kraus_count());
  for (const auto& x : a.kraus()) {
    for (const auto& y : b.kraus()) kraus.push_back(kron(x, y));
  }
  Channel out(a.dim_in() * b.dim_in(), a.dim_out() * b.dim_out(),
              std::move(kraus));
  auto append = [&out](const Channel& c) {
    if (c.factors().empty()) {
      out.factors_.push_back(c);
    } else {
      out.factors_.insert(out.factors_.end(), c.factors().begin(),
                          c.factors().end());
    }
  };
  append(a);
  append(b);
  return out;
}

Channel tensor_power(const Channel& c, int n) {
  if (n < 1) throw Error(ErrorCode::kOutOfRange, "tensor power needs n >= 1");
  Channel out = c;
  for (int k = 1; k < n; ++k) out = tensor_product(out, c);
  return out;
}

double channel_fidelity(const Channel& c) {
  if (!c.is_square()) {
    throw Error(ErrorCode::kDimMismatch,
                "fidelity needs a square channel, got " +
                    shape(c.dim_out(), c.dim_in()));
  }
  double sum = 0.0;
  for (const auto& s : c.kraus()) sum += std::norm(s.trace());
  const double d = c.dim_in();
  return sum / (d * d);
}

double action_distance(const Channel& a, const Channel& b) {
  if (a.dim_in() != b.dim_in() || a.dim_out() != b.dim_out()) {
    throw Error(ErrorCode::kDimMismatch, "channels have different dims");
  }
  double worst = 0.0;
  for (int mu = 0; mu < a.dim_in(); ++mu) {
    for (int nu = 0; nu < a.dim_in(); ++nu) {
      ComplexMatrix e = ComplexMatrix::Zero(a.dim_in(), a.dim_in());
      e(mu, nu) = 1.0;
      worst = std::max(worst, (qecss::apply(a, e) - qecss::apply(b, e)).norm());
    }
  }
  return worst;
}

}  // namespace qecss
