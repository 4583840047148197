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

#include "qecss/iterate.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "qecss/channels_std.hpp"
#include "qecss/error.hpp"

namespace qecss {
namespace {

// Kraus components below this relative Choi weight are dropped when the
// Kraus list is shrunk to the rank of F.
constexpr double kCompressCutoff = 1e-15;

}  // namespace

std::string_view to_string(StopReason reason) {
  switch (reason) {
    case StopReason::kConverged: return "Converged";
    case StopReason::kMaxSteps: return "MaxSteps";
    case StopReason::kStabilizedConverged: return "StabilizedConverged";
  }
  return "Unknown";
}

std::pair<Channel, IterationStepReport> iteration_step(
    const Channel& s, const ObjectiveOperator& f, double pinv_cutoff) {
  if (s.dim_in() != f.dim_in() || s.dim_out() != f.dim_out()) {
    throw Error(ErrorCode::kDimMismatch,
                "channel does not fit the objective slot");
  }
  const ComplexMatrix x = kraus_vectors(s);
  const ComplexMatrix y = f.apply(x);
  if (y.norm() == 0.0) {
    throw Error(ErrorCode::kZeroMap, "objective annihilates every Kraus operator");
  }

  IterationStepReport report;
  report.objective_before = (x.conjugate().cwiseProduct(y)).sum().real();

  std::vector<ComplexMatrix> kraus;
  kraus.reserve(s.kraus_count());
  ComplexMatrix m = ComplexMatrix::Zero(s.dim_in(), s.dim_in());
  for (Eigen::Index i = 0; i < y.cols(); ++i) {
    kraus.push_back(unvectorize(y.col(i), s.dim_out(), s.dim_in()));
    m.noalias() += kraus.back().adjoint() * kraus.back();
  }

  InverseSqrt root;
  try {
    root = psd_inv_sqrt(m, pinv_cutoff);
  } catch (const Error& e) {
    if (e.code() == ErrorCode::kZeroMatrix) {
      throw Error(ErrorCode::kZeroMap, "normalization operator vanishes");
    }
    throw;
  }
  for (auto& k : kraus) k = (k * root.inv_sqrt).eval();
  Channel next(s.dim_in(), s.dim_out(), std::move(kraus));

  const ComplexMatrix norm_after = normalization_operator(next);
  report.objective_after = evaluate_objective(f, next);
  report.normalization = std::move(m);
  report.m_rank = root.rank;
  report.tp_defect_after =
      (norm_after - ComplexMatrix::Identity(s.dim_in(), s.dim_in())).norm();
  report.support_defect_after = (norm_after - root.support_projector).norm();
  return {std::move(next), std::move(report)};
}

Channel perturb(const Channel& s, double magnitude, Rng& rng) {
  if (magnitude < 0.0) {
    throw Error(ErrorCode::kOutOfRange, "perturbation magnitude must be >= 0");
  }
  std::vector<ComplexMatrix> kraus = s.kraus();
  if (magnitude > 0.0) {
    double total = 0.0;
    for (const auto& k : kraus) total += k.squaredNorm();
    const double entries =
        double(kraus.size()) * double(s.dim_in()) * double(s.dim_out());
    const double sigma = magnitude * std::sqrt(total / entries);
    for (auto& k : kraus) k += sigma * rng.gaussian_matrix(k.rows(), k.cols());
  }
  return normalized(s.dim_in(), s.dim_out(), std::move(kraus));
}

Channel random_start(int dim_in, int dim_out, int kraus_count, Rng& rng) {
  RandomChannelSpec spec;
  spec.dim_in = dim_in;
  spec.dim_out = dim_out;
  spec.kraus_count = kraus_count > 0 ? kraus_count : dim_in * dim_out;
  return random_channel(spec, rng);
}

OptimizationTrace optimize_channel(const ObjectiveOperator& f,
                                   const Channel& init,
                                   const IterationConfig& cfg, Rng& rng) {
  if (!(cfg.gain_threshold > 0.0) || cfg.max_steps < 1 ||
      cfg.perturb_magnitude < 0.0 || cfg.stabilization_attempts < 0) {
    throw Error(ErrorCode::kOutOfRange, "invalid iteration config");
  }
  OptimizationTrace trace{.steps = {}, .final = init};
  trace.initial_objective = evaluate_objective(f, init);

  Channel current = init;
  Channel best = init;
  double best_objective = trace.initial_objective;
  const std::size_t rank_bound = std::size_t(std::max(1, f.rank()));
  bool perturbed = false;
  bool converged = false;

  for (int step = 0; step < cfg.max_steps; ++step) {
    auto [next, report] = iteration_step(current, f, cfg.pinv_cutoff);
    report.after_perturbation = perturbed;
    perturbed = false;
    const double gain = report.objective_after - report.objective_before;
    const double objective = report.objective_after;
    trace.steps.push_back(std::move(report));

    // After one step J(S) lies in the range of F (x) F, so rank(F) Kraus
    // operators represent every later iterate exactly.
    current = next.kraus_count() > rank_bound ? compress(next, kCompressCutoff)
                                              : std::move(next);
    if (objective > best_objective) {
      best = current;
      best_objective = objective;
    }
    if (gain < cfg.gain_threshold) {
      if (trace.perturbations_used < cfg.stabilization_attempts) {
        ++trace.perturbations_used;
        current = perturb(best, cfg.perturb_magnitude, rng);
        perturbed = true;
        continue;
      }
      converged = true;
      break;
    }
  }

  if (!converged) {
    trace.stop_reason = StopReason::kMaxSteps;
  } else {
    trace.stop_reason = trace.perturbations_used > 0
                            ? StopReason::kStabilizedConverged
                            : StopReason::kConverged;
  }
  trace.final = std::move(best);
  trace.final_objective = best_objective;
  return trace;
}

OptimizationTrace optimize_channel(const ObjectiveOperator& f,
                                   const Channel& init,
                                   const IterationConfig& cfg) {
  Rng rng(cfg.seed);
  return optimize_channel(f, init, cfg, rng);
}

}  // namespace qecss
