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


// Reference computations used as test oracles. They work on raw Kraus lists
// and Eigen types only, so they share no code path with the library.

#pragma once

#include <cmath>
#include <complex>
#include <random>
#include <vector>

#include <Eigen/Dense>
#include <unsupported/Eigen/KroneckerProduct>

namespace oracle {

using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using Kraus = std::vector<Matrix>;

// Kraus list of outer after inner, by enumerating all products.
inline Kraus chain(const Kraus& outer, const Kraus& inner) {
  Kraus out;
  for (const auto& a : outer) {
    for (const auto& b : inner) out.push_back(a * b);
  }
  return out;
}

inline Matrix act(const Kraus& k, const Matrix& rho) {
  Matrix out = Matrix::Zero(k.front().rows(), k.front().rows());
  for (const auto& s : k) out += s * rho * s.adjoint();
  return out;
}

// <Omega| (id (x) S)(|Omega><Omega|) |Omega> with the maximally entangled
// vector written out explicitly.
inline double entanglement_fidelity(const Kraus& k) {
  const Eigen::Index d = k.front().cols();
  Vector omega = Vector::Zero(d * d);
  for (Eigen::Index m = 0; m < d; ++m) omega(m * d + m) = 1.0 / std::sqrt(double(d));
  const Matrix id = Matrix::Identity(d, d);
  const Matrix proj = omega * omega.adjoint();
  Matrix out = Matrix::Zero(d * d, d * d);
  for (const auto& s : k) {
    const Matrix lifted = Eigen::kroneckerProduct(id, s).eval();
    out += lifted * proj * lifted.adjoint();
  }
  return (omega.adjoint() * out * omega)(0, 0).real();
}

inline double fivebit_polynomial(double p) {
  return 1.0 - 45.0 / 8 * p * p + 75.0 / 8 * std::pow(p, 3) -
         45.0 / 8 * std::pow(p, 4) + 9.0 / 8 * std::pow(p, 5);
}

inline double uncorrected(double p) { return 1.0 - 0.75 * p; }

// Bisection for g(a) * g(b) < 0.
template <typename F>
double bisect(F g, double a, double b, double tol = 1e-14) {
  double ga = g(a);
  while (b - a > tol) {
    const double m = 0.5 * (a + b);
    const double gm = g(m);
    if ((gm < 0) == (ga < 0)) {
      a = m;
      ga = gm;
    } else {
      b = m;
    }
  }
  return 0.5 * (a + b);
}

// Repeated multiplication by f with renormalization.
inline Vector power_method(const Matrix& f, Vector v, int max_iters = 200000,
                           double tol = 1e-15) {
  v.normalize();
  for (int i = 0; i < max_iters; ++i) {
    Vector next = f * v;
    next.normalize();
    // Fix the global phase against the previous iterate.
    const std::complex<double> overlap = v.dot(next);
    if (std::abs(overlap) > 0) next *= std::conj(overlap) / std::abs(overlap);
    const double change = (next - v).norm();
    v = next;
    if (change < tol) break;
  }
  return v;
}

inline Matrix random_complex(std::mt19937_64& gen, Eigen::Index r, Eigen::Index c) {
  std::normal_distribution<double> n;
  Matrix m(r, c);
  for (Eigen::Index i = 0; i < r; ++i) {
    for (Eigen::Index j = 0; j < c; ++j) m(i, j) = {n(gen), n(gen)};
  }
  return m;
}

inline Matrix random_psd(std::mt19937_64& gen, Eigen::Index n, Eigen::Index rank) {
  const Matrix g = random_complex(gen, n, rank);
  return g * g.adjoint();
}

inline Matrix random_unitary(std::mt19937_64& gen, Eigen::Index n) {
  Eigen::HouseholderQR<Matrix> qr(random_complex(gen, n, n));
  return qr.householderQ() * Matrix::Identity(n, n);
}

}  // namespace oracle
