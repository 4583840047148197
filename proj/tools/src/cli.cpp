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


#include "qecss_cli/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "qecss/qecss.hpp"

namespace qecss::cli {
namespace {

using nlohmann::json;

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::kParse:
    case ErrorCode::kOutOfRange:
      return kExitParse;
    case ErrorCode::kDimMismatch:
    case ErrorCode::kShapeMismatch:
      return kExitDim;
    case ErrorCode::kIo:
      return kExitIo;
    default:
      return kExitFailure;
  }
}

int thread_budget() {
  int threads = int(std::max(1U, std::thread::hardware_concurrency()));
  if (const char* env = std::getenv("QECSS_THREADS")) {
    const int cap = std::atoi(env);
    if (cap >= 1) threads = std::min(threads, cap);
  }
  return threads;
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::kIo, "cannot write " + path);
  out << text;
  if (!out) throw Error(ErrorCode::kIo, "write failed for " + path);
}

// Writes to path, or to out when path is empty.
void emit(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty()) {
    out << text;
  } else {
    write_text(path, text);
  }
}

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> parts;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) parts.push_back(item);
  }
  return parts;
}

int parse_positive(const std::string& text, const std::string& what) {
  try {
    std::size_t used = 0;
    const int v = std::stoi(text, &used);
    if (used == text.size() && v >= 1) return v;
  } catch (const std::exception&) {
  }
  throw Error(ErrorCode::kParse, "bad " + what + " '" + text + "'");
}

// "fivebit", "trivial:N", "identity:D" or a CodePair JSON file.
CodePair resolve_code(const std::string& ref) {
  if (ref == "fivebit") return five_bit_code();
  if (ref.rfind("trivial:", 0) == 0) {
    return trivial_code(parse_positive(ref.substr(8), "qubit count"));
  }
  if (ref.rfind("identity:", 0) == 0) {
    const int d = parse_positive(ref.substr(9), "dimension");
    return embedding_code(d, d);
  }
  return code_from_json(read_json_file(ref));
}

struct ChannelArgs {
  std::string file;
  std::optional<double> depolarizing;
  int n_copies = 1;
};

void add_channel_options(CLI::App* cmd, ChannelArgs& a) {
  auto* file = cmd->add_option("--channel", a.file, "Channel JSON file");
  auto* dep = cmd->add_option("--depolarizing", a.depolarizing,
                              "Use the depolarizing channel T_p with this p");
  file->excludes(dep);
  cmd->add_option("--n-copies", a.n_copies, "Tensor power of the channel")
      ->check(CLI::Range(1, 12));
}

Channel resolve_channel(const ChannelArgs& a) {
  Channel base = [&] {
    if (a.depolarizing) return depolarizing({*a.depolarizing});
    if (a.file.empty()) {
      throw Error(ErrorCode::kParse, "need --channel or --depolarizing");
    }
    return channel_from_json(read_json_file(a.file));
  }();
  return a.n_copies == 1 ? base : tensor_power(base, a.n_copies);
}

struct SearchArgs {
  int d0 = 2;
  int restarts = 5;
  int max_rounds = 200;
  double gain_threshold = 1e-9;
  std::uint64_t seed = 0;
};

void add_search_options(CLI::App* cmd, SearchArgs& a) {
  cmd->add_option("--d0", a.d0, "Logical dimension")->check(CLI::Range(2, 64));
  cmd->add_option("--restarts", a.restarts, "See-saw restarts")
      ->check(CLI::Range(1, 10000));
  cmd->add_option("--max-rounds", a.max_rounds, "See-saw rounds per restart")
      ->check(CLI::Range(1, 1000000));
  cmd->add_option("--gain-threshold", a.gain_threshold,
                  "Stop a restart once a round gains less than this")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--seed", a.seed, "Random seed");
}

SeesawConfig seesaw_config(const SearchArgs& a) {
  SeesawConfig cfg;
  cfg.restarts = a.restarts;
  cfg.max_rounds = a.max_rounds;
  cfg.round_gain_threshold = a.gain_threshold;
  cfg.seed = a.seed;
  cfg.threads = thread_budget();
  return cfg;
}

// ---------------------------------------------------------------- fidelity

struct FidelityArgs {
  std::string code;
  ChannelArgs channel;
};

int cmd_fidelity(const FidelityArgs& a, std::ostream& out) {
  const CodePair code = resolve_code(a.code);
  const Channel t = resolve_channel(a.channel);
  out << format_number(code_fidelity(code, t)) << '\n';
  return kExitOk;
}

// ------------------------------------------------------------------- sweep

constexpr const char* kColumns[] = {"uncorrected", "fivebit", "optimized",
                                    "fivebit_encoder_opt_decoder"};

struct SweepArgs {
  double p_start = 0.0;
  double p_end = 0.3;
  int p_steps = 7;
  int n_copies = 5;
  std::string columns = "uncorrected,fivebit,optimized";
  SearchArgs search;
  std::string output;
  std::string trace;
};

int cmd_sweep(const SweepArgs& a, std::ostream& out) {
  if (!(a.p_start >= 0.0 && a.p_start <= a.p_end &&
        a.p_end <= kMaxDepolarizing + 1e-12)) {
    throw Error(ErrorCode::kOutOfRange, "need 0 <= p-start <= p-end <= 4/3");
  }
  if (a.p_steps < 2) throw Error(ErrorCode::kOutOfRange, "need p-steps >= 2");

  std::vector<bool> want(std::size(kColumns), false);
  for (const auto& name : split_list(a.columns)) {
    const auto it = std::find_if(std::begin(kColumns), std::end(kColumns),
                                 [&](const char* c) { return name == c; });
    if (it == std::end(kColumns)) {
      throw Error(ErrorCode::kParse, "unknown column '" + name + "'");
    }
    want[std::size_t(it - std::begin(kColumns))] = true;
  }
  if ((want[1] || want[3]) && a.n_copies != 5) {
    throw Error(ErrorCode::kParse, "five-bit columns need --n-copies 5");
  }
  if ((want[1] || want[3]) && a.search.d0 != 2) {
    throw Error(ErrorCode::kParse, "five-bit columns need --d0 2");
  }

  std::string csv = "p";
  for (std::size_t c = 0; c < want.size(); ++c) {
    if (want[c]) csv += std::string(",") + kColumns[c];
  }
  csv += '\n';

  const std::optional<CodePair> five =
      a.n_copies == 5 && a.search.d0 == 2 ? std::optional(five_bit_code())
                                          : std::nullopt;
  const Rng base(a.search.seed);
  json traces = json::array();

  for (int i = 0; i < a.p_steps; ++i) {
    double p = i == a.p_steps - 1
                   ? a.p_end
                   : a.p_start + (a.p_end - a.p_start) * i / (a.p_steps - 1);
    p = std::min(p, kMaxDepolarizing);
    const Channel single = depolarizing({p});
    const Channel t = tensor_power(single, a.n_copies);

    csv += format_number(p);
    if (want[0]) csv += "," + format_number(1.0 - 0.75 * p);
    if (want[1]) csv += "," + format_number(code_fidelity(*five, t));
    if (want[2]) {
      SeesawConfig cfg = seesaw_config(a.search);
      cfg.seed = base.split(std::uint64_t(i)).seed();
      if (five) cfg.seed_codes.push_back(*five);
      cfg.keep_traces = !a.trace.empty();
      const CodeSearchResult r = optimize_code(t, a.search.d0, cfg);
      csv += "," + format_number(r.fidelity);
      if (r.traces) {
        json entry = {{"p", p}, {"traces", json::array()}};
        for (const auto& tr : *r.traces) entry["traces"].push_back(to_json(tr));
        traces.push_back(std::move(entry));
      }
    }
    if (want[3]) {
      const ObjectiveOperator f = decoder_objective(five->encoder(), t);
      IterationConfig inner;
      inner.seed = base.split(std::uint64_t(i)).split(1).seed();
      const OptimizationTrace tr = optimize_channel(f, five->decoder(), inner);
      csv += "," + format_number(
                       code_fidelity(CodePair(five->encoder(), tr.final), t));
    }
    csv += '\n';
  }

  emit(a.output, csv, out);
  if (!a.trace.empty()) write_text(a.trace, traces.dump(2) + "\n");
  return kExitOk;
}

// ---------------------------------------------------------------- optimize

struct OptimizeArgs {
  ChannelArgs channel;
  SearchArgs search;
  std::vector<std::string> seed_codes;
  std::string output;
  std::string trace;
};

int cmd_optimize(const OptimizeArgs& a, std::ostream& out) {
  const Channel t = resolve_channel(a.channel);
  SeesawConfig cfg = seesaw_config(a.search);
  for (const auto& ref : a.seed_codes) cfg.seed_codes.push_back(resolve_code(ref));
  cfg.keep_traces = !a.trace.empty();
  const CodeSearchResult r = optimize_code(t, a.search.d0, cfg);

  json report = to_json(r);
  if (!a.output.empty()) {
    write_text(a.output, to_json(r.best).dump() + "\n");
    report.erase("code");
  }
  if (!a.trace.empty()) {
    write_text(a.trace, report["traces"].dump(2) + "\n");
    report.erase("traces");
  }
  out << report.dump(2) << '\n';
  return kExitOk;
}

// ---------------------------------------------------------------- diagnose

struct DiagnoseArgs {
  std::string code;
  int restarts = 3;
  double gain_threshold = 1e-10;
  int max_steps = 10000;
  std::uint64_t seed = 0;
};

int cmd_diagnose(const DiagnoseArgs& a, std::ostream& out) {
  const CodePair code = resolve_code(a.code);
  IterationConfig cfg;
  cfg.gain_threshold = a.gain_threshold;
  cfg.max_steps = a.max_steps;
  cfg.seed = a.seed;
  Rng rng(a.seed);
  const DiagnosticsReport report =
      syndrome_diagnostic(code.encoder(), code.decoder(), cfg, rng, a.restarts);
  out << to_json(report).dump(2) << '\n';
  return kExitOk;
}

// ------------------------------------------------------------------ export

struct ExportArgs {
  std::string code;
  ChannelArgs channel;
  std::string output;
};

int cmd_export(const ExportArgs& a, std::ostream& out) {
  json j;
  if (!a.code.empty()) {
    j = to_json(resolve_code(a.code));
  } else {
    j = to_json(resolve_channel(a.channel));
  }
  emit(a.output, j.dump() + "\n", out);
  return kExitOk;
}

// ------------------------------------------------------------------ random

struct RandomArgs {
  int max_qubits = 3;
  int kraus = 2;
  double lambda = 0.5;
  SearchArgs search;
  std::string output;
};

// Optimized fidelity of T^{(x)n} for growing n, T a random qubit channel.
int cmd_random(const RandomArgs& a, std::ostream& out) {
  const Rng base(a.search.seed);
  Rng channel_rng = base.split(0);
  const Channel single =
      random_channel({.dim_in = 2, .dim_out = 2, .kraus_count = a.kraus,
                      .mix_lambda = a.lambda, .seed = a.search.seed},
                     channel_rng);
  std::string csv = "n,uncorrected,optimized,isometry_defect\n";
  for (int n = 1; n <= a.max_qubits; ++n) {
    const Channel t = tensor_power(single, n);
    SeesawConfig cfg = seesaw_config(a.search);
    cfg.seed = base.split(std::uint64_t(n)).seed();
    const CodeSearchResult r = optimize_code(t, a.search.d0, cfg);
    csv += std::to_string(n) + "," + format_number(channel_fidelity(single)) +
           "," + format_number(r.fidelity) + "," +
           format_number(r.encoder_isometry_defect) + "\n";
  }
  emit(a.output, csv, out);
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Optimal error-correcting codes for noisy quantum channels",
               "qecss"};
  app.require_subcommand(1);

  FidelityArgs fid;
  auto* c_fid = app.add_subcommand("fidelity", "Channel fidelity of D∘T∘E");
  c_fid->add_option("--code", fid.code,
                    "CodePair JSON file, or fivebit / trivial:N / identity:D")
      ->required();
  add_channel_options(c_fid, fid.channel);

  SweepArgs sweep;
  auto* c_sweep = app.add_subcommand("sweep", "Depolarizing sweep as CSV");
  c_sweep->add_option("--p-start", sweep.p_start);
  c_sweep->add_option("--p-end", sweep.p_end);
  c_sweep->add_option("--p-steps", sweep.p_steps);
  c_sweep->add_option("--n-copies", sweep.n_copies)->check(CLI::Range(1, 12));
  c_sweep->add_option("--columns", sweep.columns,
                      "Comma list of uncorrected,fivebit,optimized,"
                      "fivebit_encoder_opt_decoder");
  add_search_options(c_sweep, sweep.search);
  c_sweep->add_option("--output", sweep.output, "CSV path (default stdout)");
  c_sweep->add_option("--trace", sweep.trace, "Write optimizer traces here");

  OptimizeArgs opt;
  auto* c_opt = app.add_subcommand("optimize", "See-saw code search");
  add_channel_options(c_opt, opt.channel);
  add_search_options(c_opt, opt.search);
  c_opt->add_option("--seed-code", opt.seed_codes,
                    "Extra starting code (file or builtin name)");
  c_opt->add_option("--output", opt.output, "Write the best code here");
  c_opt->add_option("--trace", opt.trace, "Write optimizer traces here");

  DiagnoseArgs diag;
  auto* c_diag = app.add_subcommand("diagnose", "Syndrome-correction diagnostic");
  c_diag->add_option("--code", diag.code,
                     "CodePair JSON file, or fivebit / trivial:N / identity:D")
      ->required();
  c_diag->add_option("--restarts", diag.restarts)->check(CLI::Range(1, 1000));
  c_diag->add_option("--gain-threshold", diag.gain_threshold)
      ->check(CLI::PositiveNumber);
  c_diag->add_option("--max-steps", diag.max_steps)->check(CLI::Range(1, 100000000));
  c_diag->add_option("--seed", diag.seed);

  ExportArgs exp;
  auto* c_exp = app.add_subcommand("export", "Write a builtin code or channel as JSON");
  auto* exp_code = c_exp->add_option("--code", exp.code, "fivebit / trivial:N / identity:D");
  add_channel_options(c_exp, exp.channel);
  exp_code->excludes("--channel")->excludes("--depolarizing");
  c_exp->add_option("--output", exp.output, "JSON path (default stdout)");

  RandomArgs rnd;
  auto* c_rnd = app.add_subcommand(
      "random", "Optimized fidelity versus qubit count for a random channel");
  c_rnd->add_option("--max-qubits", rnd.max_qubits)->check(CLI::Range(1, 6));
  c_rnd->add_option("--kraus", rnd.kraus)->check(CLI::Range(1, 4));
  c_rnd->add_option("--lambda", rnd.lambda)->check(CLI::Range(0.0, 1.0));
  add_search_options(c_rnd, rnd.search);
  c_rnd->add_option("--output", rnd.output, "CSV path (default stdout)");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitParse;
  }

  try {
    if (c_fid->parsed()) return cmd_fidelity(fid, out);
    if (c_sweep->parsed()) return cmd_sweep(sweep, out);
    if (c_opt->parsed()) return cmd_optimize(opt, out);
    if (c_diag->parsed()) return cmd_diagnose(diag, out);
    if (c_exp->parsed()) return cmd_export(exp, out);
    if (c_rnd->parsed()) return cmd_random(rnd, out);
  } catch (const Error& e) {
    err << "qecss: " << e.what() << '\n';
    return exit_code_for(e.code());
  } catch (const std::exception& e) {
    err << "qecss: " << e.what() << '\n';
    return kExitFailure;
  }
  return kExitFailure;
}

}  // namespace qecss::cli
