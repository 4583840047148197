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

#include "qecss/io.hpp"

#include <charconv>
#include <fstream>
#include <system_error>
#include <utility>
#include <vector>

#include "qecss/error.hpp"

namespace qecss {

using nlohmann::json;

namespace {

int positive_int(const json& j, const char* key) {
  if (!j.contains(key) || !j.at(key).is_number_integer()) {
    throw Error(ErrorCode::kParse, std::string("missing integer field '") + key + "'");
  }
  const auto v = j.at(key).get<long long>();
  if (v < 1 || v > (1LL << 20)) {
    throw Error(ErrorCode::kParse, std::string("field '") + key + "' out of range");
  }
  return int(v);
}

}  // namespace

json to_json(const Channel& c) {
  json kraus = json::array();
  for (const auto& k : c.kraus()) {
    json entries = json::array();
    for (Eigen::Index r = 0; r < k.rows(); ++r) {
      for (Eigen::Index col = 0; col < k.cols(); ++col) {
        entries.push_back({k(r, col).real(), k(r, col).imag()});
      }
    }
    kraus.push_back(std::move(entries));
  }
  return {{"dim_in", c.dim_in()}, {"dim_out", c.dim_out()}, {"kraus", std::move(kraus)}};
}

Channel channel_from_json(const json& j) {
  if (!j.is_object()) throw Error(ErrorCode::kParse, "channel must be an object");
  const int dim_in = positive_int(j, "dim_in");
  const int dim_out = positive_int(j, "dim_out");
  if (!j.contains("kraus") || !j.at("kraus").is_array()) {
    throw Error(ErrorCode::kParse, "missing array field 'kraus'");
  }
  std::vector<ComplexMatrix> kraus;
  for (const auto& op : j.at("kraus")) {
    if (!op.is_array()) throw Error(ErrorCode::kParse, "Kraus operator must be an array");
    if (op.size() != std::size_t(dim_in) * std::size_t(dim_out)) {
      throw Error(ErrorCode::kShapeMismatch,
                  "Kraus operator has " + std::to_string(op.size()) + " entries, expected " +
                      std::to_string(dim_in * dim_out));
    }
    ComplexMatrix m(dim_out, dim_in);
    std::size_t idx = 0;
    for (int r = 0; r < dim_out; ++r) {
      for (int c = 0; c < dim_in; ++c, ++idx) {
        const json& z = op[idx];
        if (!z.is_array() || z.size() != 2 || !z[0].is_number() || !z[1].is_number()) {
          throw Error(ErrorCode::kParse, "entries must be [re, im] pairs");
        }
        m(r, c) = Complex(z[0].get<double>(), z[1].get<double>());
      }
    }
    kraus.push_back(std::move(m));
  }
  if (kraus.empty()) throw Error(ErrorCode::kParse, "'kraus' is empty");
  return Channel(dim_in, dim_out, std::move(kraus));
}

json to_json(const CodePair& code) {
  return {{"d0", code.d0()},
          {"d1", code.d1()},
          {"d2", code.d2()},
          {"encoder", to_json(code.encoder())},
          {"decoder", to_json(code.decoder())}};
}

CodePair code_from_json(const json& j) {
  if (!j.is_object()) throw Error(ErrorCode::kParse, "code must be an object");
  if (!j.contains("encoder") || !j.contains("decoder")) {
    throw Error(ErrorCode::kParse, "code needs 'encoder' and 'decoder'");
  }
  const int d0 = positive_int(j, "d0");
  const int d1 = positive_int(j, "d1");
  const int d2 = positive_int(j, "d2");
  CodePair code(channel_from_json(j.at("encoder")), channel_from_json(j.at("decoder")));
  if (code.d0() != d0 || code.d1() != d1 || code.d2() != d2) {
    throw Error(ErrorCode::kDimMismatch, "declared d0/d1/d2 disagree with the channels");
  }
  return code;
}

json to_json(const OptimizationTrace& trace) {
  json steps = json::array();
  for (std::size_t i = 0; i < trace.steps.size(); ++i) {
    const auto& s = trace.steps[i];
    steps.push_back({{"step", i},
                     {"objective", s.objective_after},
                     {"m_rank", s.m_rank},
                     {"tp_defect", s.tp_defect_after},
                     {"after_perturbation", s.after_perturbation}});
  }
  return {{"initial_objective", trace.initial_objective},
          {"final_objective", trace.final_objective},
          {"stop_reason", std::string(to_string(trace.stop_reason))},
          {"perturbations_used", trace.perturbations_used},
          {"steps", std::move(steps)}};
}

json to_json(const CodeSearchResult& result) {
  json out = {{"fidelity", result.fidelity},
              {"per_restart_fidelities", result.per_restart_fidelities},
              {"rounds_used", result.rounds_used},
              {"encoder_isometry_defect", result.encoder_isometry_defect},
              {"code", to_json(result.best)}};
  if (result.traces) {
    json traces = json::array();
    for (const auto& t : *result.traces) traces.push_back(to_json(t));
    out["traces"] = std::move(traces);
  }
  return out;
}

json to_json(const DiagnosticsReport& report) {
  return {{"syndrome_max_fidelity", report.syndrome_max_fidelity},
          {"corrects_some_syndrome", report.corrects_some_syndrome},
          {"isometry_defect", report.isometry_defect}};
}

json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kIo, "cannot open " + path.string());
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw Error(ErrorCode::kParse, path.string() + ": " + e.what());
  }
}

std::string format_number(double value, int digits) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), value,
                                 std::chars_format::general, digits);
  if (res.ec != std::errc()) return "nan";
  return std::string(buf, res.ptr);
}

}  // namespace qecss
