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

#include "qecss/seesaw.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <string>
#include <thread>
#include <utility>

#include "qecss/error.hpp"
#include "qecss/objective.hpp"

namespace qecss {
namespace {

struct RestartOutcome {
  std::optional<CodePair> code;
  RestartRecord record;
  std::vector<OptimizationTrace> traces;
};

RestartOutcome run_restart(const Channel& t, int d0, const SeesawConfig& cfg,
                           std::optional<CodePair> start, Rng rng) {
  const int d1 = t.dim_in();
  const int d2 = t.dim_out();
  RestartOutcome out;
  out.record.seeded = start.has_value();

  Channel e = start ? start->encoder()
                    : random_start(d0, d1, cfg.encoder_kraus_count.value_or(0), rng);
  Channel d = start ? start->decoder()
                    : random_start(d2, d0, cfg.decoder_kraus_count.value_or(0), rng);

  double fidelity = code_fidelity(CodePair(e, d), t);
  out.record.history.push_back(fidelity);

  for (int round = 0; round < cfg.max_rounds; ++round) {
    const double round_start = fidelity;

    OptimizationTrace dec = optimize_channel(decoder_objective(e, t), d, cfg.inner, rng);
    d = complete_to_tp(dec.final);
    out.record.history.push_back(code_fidelity(CodePair(e, d), t));

    OptimizationTrace enc = optimize_channel(encoder_objective(d, t), e, cfg.inner, rng);
    e = complete_to_tp(enc.final);
    fidelity = code_fidelity(CodePair(e, d), t);
    out.record.history.push_back(fidelity);

    if (cfg.keep_traces) {
      out.traces.push_back(std::move(dec));
      out.traces.push_back(std::move(enc));
    }
    out.record.rounds = round + 1;
    if (fidelity - round_start < cfg.round_gain_threshold) break;
  }

  CodePair code(std::move(e), std::move(d));
  out.record.fidelity = code_fidelity(code, t);
  out.code = std::move(code);
  return out;
}

// Runs body(i) for i in [0, count) on at most `threads` threads.
template <typename Body>
void parallel_for(int count, int threads, Body body) {
  const int workers = std::max(1, std::min(threads, count));
  if (workers == 1) {
    for (int i = 0; i < count; ++i) body(i);
    return;
  }
  std::atomic<int> next{0};
  std::vector<std::exception_ptr> errors(static_cast<std::size_t>(workers));
  std::vector<std::thread> pool;
  for (int w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      try {
        for (int i = next++; i < count; i = next++) body(i);
      } catch (...) {
        errors[std::size_t(w)] = std::current_exception();
      }
    });
  }
  for (auto& th : pool) th.join();
  for (auto& err : errors) {
    if (err) std::rethrow_exception(err);
  }
}

}  // namespace

double isometry_defect(const Channel& e) {
  const EigenSystem es = hermitian_eigensystem(kraus_gram(e));
  const double lambda_max = es.eigenvalues(0);
  if (!(lambda_max > 0.0)) {
    throw Error(ErrorCode::kZeroMatrix, "channel has vanishing Choi operator");
  }
  if (es.eigenvalues.size() < 2) return 0.0;
  return std::max(0.0, es.eigenvalues(1) / lambda_max);
}

CodeSearchResult optimize_code(const Channel& t, int d0,
                               const SeesawConfig& cfg) {
  if (d0 < 2) {
    throw Error(ErrorCode::kDimMismatch, "logical dimension must be >= 2");
  }
  if (cfg.restarts < 1 || cfg.max_rounds < 1 || !(cfg.round_gain_threshold > 0.0)) {
    throw Error(ErrorCode::kOutOfRange, "invalid see-saw config");
  }
  for (const auto& code : cfg.seed_codes) {
    if (code.d0() != d0 || code.d1() != t.dim_in() || code.d2() != t.dim_out()) {
      throw Error(ErrorCode::kDimMismatch, "seed code does not fit the channel");
    }
  }

  std::vector<std::optional<CodePair>> starts;
  for (const auto& code : cfg.seed_codes) starts.emplace_back(code);
  if (cfg.seed_trivial && t.is_square() && t.dim_in() % d0 == 0) {
    starts.emplace_back(embedding_code(d0, t.dim_in()));
  }
  const int total = std::max<int>(cfg.restarts, int(starts.size()));
  starts.resize(std::size_t(total));

  const Rng base(cfg.seed);
  std::vector<RestartOutcome> outcomes(static_cast<std::size_t>(total));
  parallel_for(total, cfg.threads, [&](int r) {
    outcomes[std::size_t(r)] =
        run_restart(t, d0, cfg, starts[std::size_t(r)], base.split(std::uint64_t(r)));
  });

  std::size_t best = 0;
  for (std::size_t r = 1; r < outcomes.size(); ++r) {
    if (outcomes[r].record.fidelity > outcomes[best].record.fidelity) best = r;
  }

  CodeSearchResult result{*outcomes[best].code, 0.0, {}, {}, 0, 0.0, std::nullopt};
  result.fidelity = outcomes[best].record.fidelity;
  result.rounds_used = outcomes[best].record.rounds;
  result.encoder_isometry_defect = isometry_defect(result.best.encoder());
  for (auto& o : outcomes) {
    result.per_restart_fidelities.push_back(o.record.fidelity);
    result.restarts.push_back(std::move(o.record));
  }
  if (cfg.keep_traces) {
    result.traces.emplace();
    for (auto& o : outcomes) {
      for (auto& tr : o.traces) result.traces->push_back(std::move(tr));
    }
  }
  return result;
}

DiagnosticsReport syndrome_diagnostic(const Channel& e, const Channel& d,
                                      const IterationConfig& cfg, Rng& rng,
                                      int restarts) {
  const ObjectiveOperator f = middle_objective(e, d);
  const int d1 = e.dim_out();
  const int d2 = d.dim_in();

  DiagnosticsReport report;
  report.isometry_defect = isometry_defect(e);
  if (f.rank() == 0) return report;

  // Iterates never exceed Choi rank rank(F), so that many Kraus operators
  // already span the reachable set.
  const int kraus = std::min(d1 * d2, f.rank());
  std::vector<Channel> inits;
  if (d1 == d2) inits.push_back(Channel::identity(d1));
  for (int r = 0; r < std::max(restarts, 1); ++r) {
    inits.push_back(random_start(d1, d2, kraus, rng));
  }
  double best = 0.0;
  for (const auto& init : inits) {
    const Channel s = complete_to_tp(optimize_channel(f, init, cfg, rng).final);
    best = std::max(best, evaluate_objective(f, s));
  }
  report.syndrome_max_fidelity = best;
  report.corrects_some_syndrome = best >= 1.0 - kSyndromeTolerance;
  return report;
}

}  // namespace qecss
