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

// Fidelity-improving channel iteration.
//
// One step maps the Kraus operators s_i of S to s_i' = F s_i (F acting on
// Hilbert-Schmidt vectors), so that J(S') = F J(S) F, and renormalizes:
//
//   M = sum_i s_i'^dagger s_i',   t_i = s_i' M^{-1/2}.
//
// The objective tr(F J(S)) never decreases under this map. When M is
// singular M^{-1/2} is the pseudo-inverse and the new map is trace
// preserving only on the support of M. With dim_out = 1 and a single Kraus
// operator the step is exactly the power method phi -> F phi / |F phi|.

#pragma once

#include <cstdint>
#include <string_view>
#include <utility>
#include <vector>

#include "qecss/channel.hpp"
#include "qecss/objective.hpp"
#include "qecss/random.hpp"

namespace qecss {

struct IterationConfig {
  double gain_threshold = 1e-10;
  int max_steps = 10000;
  double pinv_cutoff = kDefaultCutoff;
  double perturb_magnitude = 1e-3;
  int stabilization_attempts = 3;
  std::uint64_t seed = 0;
};

struct IterationStepReport {
  double objective_before = 0.0;
  double objective_after = 0.0;
  ComplexMatrix normalization;  // M, dim_in x dim_in
  int m_rank = 0;
  double tp_defect_after = 0.0;       // ||sum t^dagger t - I||_F
  double support_defect_after = 0.0;  // ||sum t^dagger t - P_supp(M)||_F
  bool after_perturbation = false;
};

enum class StopReason { kConverged, kMaxSteps, kStabilizedConverged };

std::string_view to_string(StopReason reason);

struct OptimizationTrace {
  std::vector<IterationStepReport> steps;
  Channel final;
  double initial_objective = 0.0;
  double final_objective = 0.0;
  StopReason stop_reason = StopReason::kConverged;
  int perturbations_used = 0;
};

/// Throws kDimMismatch if s does not fit the slot, kZeroMap if F
/// annihilates every Kraus operator.
std::pair<Channel, IterationStepReport> iteration_step(
    const Channel& s, const ObjectiveOperator& f,
    double pinv_cutoff = kDefaultCutoff);

/// Iterates until the per-step gain drops below cfg.gain_threshold, then
/// perturbs the best channel seen up to cfg.stabilization_attempts times to
/// escape unstable fixed points. Returns the best channel seen.
OptimizationTrace optimize_channel(const ObjectiveOperator& f,
                                   const Channel& init,
                                   const IterationConfig& cfg, Rng& rng);
OptimizationTrace optimize_channel(const ObjectiveOperator& f,
                                   const Channel& init,
                                   const IterationConfig& cfg);

/// Adds complex Gaussian noise of overall scale magnitude * ||s||_F to the
/// Kraus operators and renormalizes with M^{-1/2}.
Channel perturb(const Channel& s, double magnitude, Rng& rng);

/// Random starting point for a slot: random_channel with the given Kraus
/// count (dim_in * dim_out when kraus_count <= 0).
Channel random_start(int dim_in, int dim_out, int kraus_count, Rng& rng);

}  // namespace qecss
