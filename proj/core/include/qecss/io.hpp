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

// JSON forms used by the command-line tool.
//
//   Channel:  {"dim_in": n, "dim_out": m,
//              "kraus": [[[re, im], ...], ...]}   entries row-major, m*n each
//   CodePair: {"d0", "d1", "d2", "encoder": <Channel>, "decoder": <Channel>}
//
// Parse failures throw Error(kParse); well-formed documents whose shapes do
// not agree throw kShapeMismatch or kDimMismatch.

#pragma once

#include <filesystem>
#include <string>

#include <nlohmann/json.hpp>

#include "qecss/codes.hpp"
#include "qecss/iterate.hpp"
#include "qecss/seesaw.hpp"

namespace qecss {

nlohmann::json to_json(const Channel& c);
Channel channel_from_json(const nlohmann::json& j);

nlohmann::json to_json(const CodePair& code);
CodePair code_from_json(const nlohmann::json& j);

/// Per step: index, objective, m_rank, tp_defect (plus the perturbation flag).
nlohmann::json to_json(const OptimizationTrace& trace);
nlohmann::json to_json(const CodeSearchResult& result);
nlohmann::json to_json(const DiagnosticsReport& report);

nlohmann::json read_json_file(const std::filesystem::path& path);

/// Shortest round-trip-safe formatting with at most `digits` significant
/// digits, '.' decimal separator regardless of locale.
std::string format_number(double value, int digits = 15);

}  // namespace qecss
