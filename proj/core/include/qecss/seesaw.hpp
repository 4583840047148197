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

// Alternating encoder/decoder optimization of F_C(D T E).
//
// Each round first optimizes D with E fixed, then E with D fixed, both by
// optimize_channel. Either half can only raise the fidelity, so a restart's
// fidelity history is nondecreasing.

#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "qecss/codes.hpp"
#include "qecss/iterate.hpp"

namespace qecss {

struct SeesawConfig {
  IterationConfig inner;
  int max_rounds = 200;
  double round_gain_threshold = 1e-9;
  int restarts = 5;
  std::optional<int> encoder_kraus_count;  // nullopt = full (d0 * d1)
  std::optional<int> decoder_kraus_count;  // nullopt = full (d2 * d0)
  std::uint64_t seed = 0;
  /// Run one restart from embedding_code(d0, d1) when the dims allow it.
  bool seed_trivial = true;
  /// Additional restarts started from these pairs, before the random ones.
  std::vector<CodePair> seed_codes;
  /// Upper bound on concurrently running restarts.
  int threads = 1;
  bool keep_traces = false;
};

struct RestartRecord {
  double fidelity = 0.0;
  int rounds = 0;
  bool seeded = false;
  /// F_C after every half-round, starting with the initial pair.
  std::vector<double> history;
};

struct CodeSearchResult {
  CodePair best;
  double fidelity = 0.0;
  std::vector<double> per_restart_fidelities;
  std::vector<RestartRecord> restarts;
  int rounds_used = 0;
  double encoder_isometry_defect = 0.0;
  std::optional<std::vector<OptimizationTrace>> traces;
};

struct DiagnosticsReport {
  double syndrome_max_fidelity = 0.0;
  bool corrects_some_syndrome = false;
  double isometry_defect = 0.0;
};

inline constexpr double kSyndromeTolerance = 1e-6;

/// Throws kDimMismatch if t is not square-compatible with d0 (d0 < 2) or
/// kOutOfRange on an invalid config.
CodeSearchResult optimize_code(const Channel& t, int d0,
                               const SeesawConfig& cfg);

/// Maximizes F_C(D T' E) over all channels T' : d1 -> d2. A maximum of 1
/// means some error T' is corrected perfectly.
DiagnosticsReport syndrome_diagnostic(const Channel& e, const Channel& d,
                                      const IterationConfig& cfg, Rng& rng,
                                      int restarts = 3);

/// Ratio of the two largest Choi eigenvalues of e; 0 for a single-isometry
/// encoder. Throws kZeroMatrix for the zero map.
double isometry_defect(const Channel& e);

}  // namespace qecss
