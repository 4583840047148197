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


// Acceptance run: prints one PASS/FAIL line per criterion and exits non-zero
// if any criterion fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "fixtures.hpp"
#include "oracle.hpp"
#include "qecss/qecss.hpp"

namespace {

using namespace qecss;

struct Outcome {
  bool pass;
  std::string detail;
};

std::string fmt(const char* f, double a, double b = 0, double c = 0) {
  char buf[256];
  std::snprintf(buf, sizeof buf, f, a, b, c);
  return buf;
}

// Channels emitted by the optimizers in criteria 6, 7 and 9, checked in 10.
std::vector<Channel> g_emitted;

void collect(const CodeSearchResult& r) {
  g_emitted.push_back(r.best.encoder());
  g_emitted.push_back(r.best.decoder());
}

double direct_fidelity(const Channel& e, const Channel& t, const Channel& d) {
  return oracle::entanglement_fidelity(oracle::chain(d.kraus(), oracle::chain(t.kraus(), e.kraus())));
}

Outcome polynomial_grid() {
  const auto start = std::chrono::steady_clock::now();
  const CodePair code = five_bit_code();
  double worst = 0.0;
  for (int k = 0; k < 20; ++k) {
    const double p = k * kMaxDepolarizing / 19.0;
    const double got = code_fidelity(code, tensor_power(depolarizing({p}), 5));
    worst = std::max(worst, std::abs(got - oracle::fivebit_polynomial(p)));
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return {worst <= 1e-9 && secs <= 30.0, fmt("max |delta| = %.3g over 20 points, %.2f s", worst, secs)};
}

Outcome crossover() {
  const CodePair code = five_bit_code();
  auto gap = [&](double p) {
    return code_fidelity(code, tensor_power(depolarizing({p}), 5)) - oracle::uncorrected(p);
  };
  const double root = oracle::bisect(gap, 0.05, 0.4, 1e-12);
  const double want = 1.0 - std::sqrt(2.0 / 3.0);
  return {std::abs(root - want) <= 1e-6, fmt("root %.10f vs %.10f", root, want)};
}

Outcome monotonicity() {
  std::mt19937_64 gen(1001);
  int step_violations = 0;
  int steps = 0;
  for (int k = 0; k < 200; ++k) {
    const int din = 1 + int(gen() % 4);
    const int dout = 1 + int(gen() % 4);
    const int n = din * dout;
    const auto f = ObjectiveOperator::from_matrix(din, dout, oracle::random_psd(gen, n, 1 + int(gen() % n)));
    Channel s = testutil::random_tp(gen, din, dout, 1 + int(gen() % 8));
    for (int i = 0; i < 10; ++i) {
      auto [next, report] = iteration_step(s, f);
      ++steps;
      if (report.objective_after < report.objective_before - 1e-12) ++step_violations;
      s = std::move(next);
    }
  }
  int ineq_violations = 0;
  for (int k = 0; k < 200; ++k) {
    const int n = 1 + int(gen() % 16);
    const ComplexMatrix a = oracle::random_psd(gen, n, 1 + int(gen() % n));
    const ComplexVector phi = oracle::random_complex(gen, n, 1).col(0);
    const ComplexVector a1 = a * phi;
    const ComplexVector a2 = a * a1;
    if (!(a1.squaredNorm() > 0)) continue;
    const double lhs = a1.dot(a2).real() / a1.squaredNorm();
    const double rhs = phi.dot(a1).real() / phi.squaredNorm();
    if (lhs < rhs - 1e-12 * std::max(1.0, rhs)) ++ineq_violations;
  }
  return {step_violations == 0 && ineq_violations == 0,
          fmt("%g step violations in %g steps; %g inequality violations in 200", step_violations,
              steps, ineq_violations)};
}

Outcome slot_equivalence() {
  std::mt19937_64 gen(1002);
  double worst = 0.0;
  for (int k = 0; k < 100; ++k) {
    const int d1 = k % 2 ? 4 : 2;
    const Channel e = testutil::random_tp(gen, 2, d1, 1 + k % 4);
    const Channel t = testutil::random_tp(gen, d1, d1, 1 + k % 3);
    const Channel d = testutil::random_tp(gen, d1, 2, 1 + k % 5);
    const double want = direct_fidelity(e, t, d);
    worst = std::max({worst, std::abs(evaluate_objective(encoder_objective(d, t), e) - want),
                      std::abs(evaluate_objective(decoder_objective(e, t), d) - want),
                      std::abs(evaluate_objective(middle_objective(e, d), t) - want)});
  }
  return {worst <= 1e-10, fmt("max |tr(F S) - F_C(DTE)| = %.3g over 100 triples", worst)};
}

Outcome jamiolkowski() {
  std::mt19937_64 gen(1003);
  double round_trip = 0.0;
  double reshuffle = 0.0;
  for (int k = 0; k < 50; ++k) {
    const int din = 1 + int(gen() % 6);
    const int dout = 1 + int(gen() % 6);
    const Channel c = testutil::random_tp(gen, din, dout, 1 + int(gen() % 8));
    const ComplexMatrix j = choi_of(c).matrix();
    round_trip = std::max(round_trip, testutil::action_gap(kraus_of(choi_of(c)).kraus(), c.kraus()));
    for (int mu = 0; mu < din; ++mu) {
      for (int nu = 0; nu < din; ++nu) {
        const ComplexMatrix out = oracle::act(c.kraus(), testutil::basis(din, mu, nu));
        for (int a = 0; a < dout; ++a) {
          for (int b = 0; b < dout; ++b) {
            reshuffle = std::max(reshuffle, std::abs(out(a, b) - j(a * din + mu, b * din + nu)));
          }
        }
      }
    }
  }
  return {round_trip <= 1e-9 && reshuffle <= 1e-9,
          fmt("round trip %.3g, reshuffle %.3g over 50 channels", round_trip, reshuffle)};
}

Outcome below_crossover() {
  const Channel t = tensor_power(depolarizing({0.05}), 5);
  SeesawConfig cfg;
  cfg.restarts = 5;
  cfg.seed = 6;
  cfg.seed_codes.push_back(five_bit_code());
  const auto start = std::chrono::steady_clock::now();
  const CodeSearchResult r = optimize_code(t, 2, cfg);
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  collect(r);
  const double want = 0.98707457;
  return {r.fidelity >= want - 1e-6 && r.fidelity <= 1.0,
          fmt("fidelity %.10f (five-bit %.10f), %.1f s", r.fidelity, want, secs)};
}

Outcome above_crossover() {
  SeesawConfig cfg;
  cfg.restarts = 5;
  cfg.seed = 7;
  // seed_trivial (default) seeds one restart from trivial_code(3).
  const CodeSearchResult low = optimize_code(tensor_power(depolarizing({0.3}), 3), 2, cfg);
  collect(low);
  const bool low_ok = std::abs(low.fidelity - 0.775) <= 1e-3 && low.fidelity >= 0.775 - 1e-6;

  const double p = 1.2;
  const CodeSearchResult high = optimize_code(tensor_power(depolarizing({p}), 3), 2, cfg);
  collect(high);
  Rng rng(8);
  const DiagnosticsReport diag =
      syndrome_diagnostic(high.best.encoder(), high.best.decoder(), IterationConfig{}, rng);
  const bool high_ok = high.fidelity >= oracle::uncorrected(p) - 1e-6 && !diag.corrects_some_syndrome;
  return {low_ok && high_ok,
          fmt("T_0.3^3: %.10f; T_1.2^3: %.10f, syndrome max %.8f", low.fidelity, high.fidelity,
              diag.syndrome_max_fidelity) +
              (diag.corrects_some_syndrome ? " (corrects a syndrome)" : " (no syndrome corrected)")};
}

Outcome power_method() {
  std::mt19937_64 gen(1004);
  auto distance = [](const ComplexVector& got, const ComplexVector& want) {
    const Complex overlap = want.dot(got);
    return (got * (std::conj(overlap) / std::abs(overlap)) - want).norm();
  };
  double worst = 0.0;
  double worst_stopped = 0.0;
  for (int k = 0; k < 50; ++k) {
    const int d = 2 + k % 6;
    const ComplexMatrix a = oracle::random_psd(gen, d, 1 + int(gen() % d));
    const ComplexVector phi = oracle::random_complex(gen, d, 1).col(0).normalized();
    const auto f = ObjectiveOperator::from_matrix(d, 1, a);
    const Channel init(d, 1, {ComplexMatrix(phi.transpose())});
    const ComplexVector want = oracle::power_method(a, phi);

    // Basic iteration run to its fixed point.
    Channel s = init;
    for (int i = 0; i < 200000; ++i) {
      Channel next = iteration_step(s, f).first;
      const double change =
          distance(vectorize(next.kraus().front()), vectorize(s.kraus().front()));
      s = std::move(next);
      if (change < 1e-15) break;
    }
    worst = std::max(worst, distance(vectorize(s.kraus().front()), want));

    // optimize_channel stops on objective gain, which saturates earlier.
    IterationConfig cfg;
    cfg.gain_threshold = 1e-300;
    cfg.max_steps = 200000;
    cfg.stabilization_attempts = 0;
    const OptimizationTrace tr = optimize_channel(f, init, cfg);
    worst_stopped = std::max(worst_stopped, distance(vectorize(tr.final.kraus().front()), want));
  }
  return {worst <= 1e-8,
          fmt("max fixed-point distance %.3g over 50 operators (optimize_channel stop: %.3g)",
              worst, worst_stopped)};
}

Outcome isometric_encoders() {
  int isometric = 0;
  int total = 0;
  std::string defects;
  for (int k = 0; k < 20; ++k) {
    const int d1 = k % 2 ? 8 : 4;
    const double lambda = (k / 2) % 2 ? 0.6 : 0.3;
    Rng rng(2000 + std::uint64_t(k));
    const Channel t = random_channel({.dim_in = d1, .dim_out = d1, .kraus_count = 2,
                                      .mix_lambda = lambda}, rng);
    SeesawConfig cfg;
    cfg.restarts = 2;
    cfg.seed = 3000 + std::uint64_t(k);
    const CodeSearchResult r = optimize_code(t, 2, cfg);
    collect(r);
    ++total;
    if (r.encoder_isometry_defect <= 1e-6) ++isometric;
  }
  return {isometric * 10 >= total * 9, fmt("%g of %g encoders isometric", isometric, total)};
}

Outcome trace_preservation() {
  double worst_tp = 0.0;
  for (const auto& c : g_emitted) worst_tp = std::max(worst_tp, tp_defect(c));

  // Singular normalization: rank-deficient objectives on a square slot.
  std::mt19937_64 gen(1005);
  double worst_proj = 0.0;
  int singular = 0;
  for (int k = 0; k < 50; ++k) {
    const int d = 2 + k % 3;
    const ComplexMatrix g = oracle::random_complex(gen, d, 1);
    // F supported on operators with a single nonzero column.
    ComplexMatrix gens = ComplexMatrix::Zero(d * d, d);
    for (int a = 0; a < d; ++a) gens(a * d, a) = g(a, 0);
    const auto f = ObjectiveOperator::from_generators(d, d, gens);
    const auto [next, report] = iteration_step(testutil::random_tp(gen, d, d, 3), f);
    if (report.m_rank == d) continue;
    ++singular;
    const ComplexMatrix m = normalization_operator(next);
    worst_proj = std::max({worst_proj, report.support_defect_after, (m * m - m).norm()});
  }
  return {worst_tp <= 1e-8 && singular > 0 && worst_proj <= 1e-8,
          fmt("max tp_defect %.3g over %g emitted channels; projector defect %.3g", worst_tp,
              double(g_emitted.size()), worst_proj)};
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria = {
      {1, "five-bit polynomial on 20 grid points", polynomial_grid},
      {2, "crossover at 1 - sqrt(2/3)", crossover},
      {3, "iteration monotonicity and power-method inequality", monotonicity},
      {4, "slot equivalence of objective operators", slot_equivalence},
      {5, "Choi round trip and reshuffle identity", jamiolkowski},
      {6, "see-saw below crossover (T_0.05^5)", below_crossover},
      {7, "see-saw above crossover (T_0.3^3, T_1.2^3)", above_crossover},
      {8, "power-method reduction", power_method},
      {9, "isometric optimal encoders", isometric_encoders},
      {10, "trace preservation of optimizer output", trace_preservation},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    if (!o.pass) ++failures;
    std::printf("%s criterion %d: %s: %s\n", o.pass ? "PASS" : "FAIL", c.id, c.name, o.detail.c_str());
    std::fflush(stdout);
  }
  return failures == 0 ? 0 : 1;
}
