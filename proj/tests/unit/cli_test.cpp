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


#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "oracle.hpp"
#include "qecss/io.hpp"
#include "qecss_cli/cli.hpp"

namespace {

namespace fs = std::filesystem;
using nlohmann::json;

struct CliRun {
  int code;
  std::string out;
  std::string err;
};

CliRun run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = qecss::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::vector<double>> parse_csv(const std::string& text, std::string* header) {
  std::istringstream in(text);
  std::getline(in, *header);
  std::vector<std::vector<double>> rows;
  std::string line;
  while (std::getline(in, line)) {
    std::vector<double> row;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) row.push_back(std::stod(cell));
    rows.push_back(row);
  }
  return rows;
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("qecss-cli-" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }
  std::string path(const std::string& name) const { return (dir_ / name).string(); }

  fs::path dir_;
};

TEST_F(CliTest, FidelityExamples) {
  CliRun r = run({"fidelity", "--code", "fivebit", "--depolarizing", "0.1", "--n-copies", "5"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NEAR(std::stod(r.out), 0.95257375, 1e-12);
  r = run({"fidelity", "--code", "trivial:5", "--depolarizing", "0.2", "--n-copies", "5"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NEAR(std::stod(r.out), 0.85, 1e-12);
  ASSERT_EQ(run({"export", "--depolarizing", "0", "--output", path("id.json")}).code, 0);
  r = run({"fidelity", "--code", "identity:2", "--channel", path("id.json")});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NEAR(std::stod(r.out), 1.0, 1e-14);
}

TEST_F(CliTest, FidelityPrintsAtLeastTwelveDigits) {
  const CliRun r = run({"fidelity", "--code", "trivial:1", "--depolarizing", "0.123456789012345"});
  ASSERT_EQ(r.code, 0);
  EXPECT_NEAR(std::stod(r.out), 1 - 0.75 * 0.123456789012345, 1e-13);
}

TEST_F(CliTest, ExitCodes) {
  EXPECT_EQ(run({"fidelity", "--code", path("missing.json"), "--depolarizing", "0.1"}).code,
            qecss::cli::kExitIo);
  std::ofstream(path("bad.json")) << "[1, 2";
  EXPECT_EQ(run({"fidelity", "--code", path("bad.json"), "--depolarizing", "0.1"}).code,
            qecss::cli::kExitParse);
  EXPECT_EQ(run({"fidelity", "--code", "fivebit", "--depolarizing", "0.1"}).code,
            qecss::cli::kExitDim);
  EXPECT_EQ(run({"fidelity", "--code", "fivebit"}).code, qecss::cli::kExitParse);
  EXPECT_EQ(run({"sweep", "--p-end", "2"}).code, qecss::cli::kExitParse);
  EXPECT_EQ(run({"sweep", "--p-steps", "1"}).code, qecss::cli::kExitParse);
  EXPECT_EQ(run({"sweep", "--columns", "bogus"}).code, qecss::cli::kExitParse);
  EXPECT_EQ(run({"sweep", "--n-copies", "3", "--columns", "fivebit"}).code,
            qecss::cli::kExitParse);
  EXPECT_EQ(run({"sweep", "--columns", "uncorrected", "--output", path("no/such/dir/x.csv")}).code,
            qecss::cli::kExitIo);
  EXPECT_EQ(run({"frobnicate"}).code, qecss::cli::kExitParse);
  EXPECT_EQ(run({"--help"}).code, qecss::cli::kExitOk);
}

TEST_F(CliTest, SweepFormulaColumns) {
  CliRun r = run({"sweep", "--p-start", "0", "--p-end", "0.1", "--p-steps", "2", "--columns",
               "uncorrected,fivebit"});
  ASSERT_EQ(r.code, 0) << r.err;
  std::string header;
  auto rows = parse_csv(r.out, &header);
  EXPECT_EQ(header, "p,uncorrected,fivebit");
  ASSERT_EQ(rows.size(), 2u);
  EXPECT_EQ(rows[0], (std::vector<double>{0, 1, 1}));
  EXPECT_NEAR(rows[1][0], 0.1, 1e-15);
  EXPECT_NEAR(rows[1][1], 0.925, 1e-14);
  EXPECT_NEAR(rows[1][2], 0.95257375, 1e-12);

  r = run({"sweep", "--p-start", "1", "--p-end", "4/3", "--p-steps", "2", "--columns", "fivebit"});
  EXPECT_EQ(r.code, qecss::cli::kExitParse);
  r = run({"sweep", "--p-start", "1", "--p-end", "1.3", "--p-steps", "4", "--columns", "fivebit"});
  ASSERT_EQ(r.code, 0) << r.err;
  rows = parse_csv(r.out, &header);
  EXPECT_NEAR(rows[0][1], 0.25, 1e-12);
  for (const auto& row : rows) EXPECT_NEAR(row[1], oracle::fivebit_polynomial(row[0]), 1e-9);
  for (std::size_t k = 1; k < rows.size(); ++k) EXPECT_GT(rows[k][0], rows[k - 1][0]);

  r = run({"sweep", "--p-start", "0", "--p-end", "0", "--p-steps", "2", "--columns",
           "uncorrected,fivebit"});
  ASSERT_EQ(r.code, 0);
  rows = parse_csv(r.out, &header);
  ASSERT_EQ(rows.size(), 2u);
  EXPECT_EQ(rows[0], rows[1]);
  EXPECT_EQ(rows[0][2], 1.0);
}

TEST_F(CliTest, SweepOptimizedIsDeterministic) {
  const std::vector<std::string> args = {
      "sweep", "--p-start", "0.1", "--p-end", "0.3", "--p-steps", "2", "--n-copies", "2",
      "--columns", "uncorrected,optimized", "--restarts", "2", "--seed", "5"};
  std::vector<std::string> first = args;
  first.insert(first.end(), {"--output", path("a.csv"), "--trace", path("trace.json")});
  std::vector<std::string> second = args;
  second.insert(second.end(), {"--output", path("b.csv")});
  ASSERT_EQ(run(first).code, 0);
  ASSERT_EQ(run(second).code, 0);
  std::ifstream a(path("a.csv")), b(path("b.csv"));
  const std::string ta((std::istreambuf_iterator<char>(a)), {});
  const std::string tb((std::istreambuf_iterator<char>(b)), {});
  EXPECT_EQ(ta, tb);
  std::string header;
  const auto rows = parse_csv(ta, &header);
  EXPECT_EQ(header, "p,uncorrected,optimized");
  for (const auto& row : rows) EXPECT_GE(row[2], row[1] - 1e-6);
  const json trace = qecss::read_json_file(path("trace.json"));
  ASSERT_EQ(trace.size(), 2u);
  EXPECT_TRUE(trace[0]["traces"][0]["steps"][0].contains("m_rank"));
}

TEST_F(CliTest, SweepFiveBitDecoderColumn) {
  const CliRun r = run({"sweep", "--p-start", "0.05", "--p-end", "0.1", "--p-steps", "2",
                     "--columns", "fivebit,fivebit_encoder_opt_decoder"});
  ASSERT_EQ(r.code, 0) << r.err;
  std::string header;
  const auto rows = parse_csv(r.out, &header);
  EXPECT_EQ(header, "p,fivebit,fivebit_encoder_opt_decoder");
  for (const auto& row : rows) EXPECT_GE(row[2], row[1] - 1e-9);
}

TEST_F(CliTest, OptimizeOutputIsRecomputable) {
  ASSERT_EQ(run({"export", "--depolarizing", "0.2", "--n-copies", "2", "--output",
                 path("t.json")}).code, 0);
  const CliRun r = run({"optimize", "--channel", path("t.json"), "--restarts", "2", "--output",
                     path("code.json"), "--trace", path("tr.json")});
  ASSERT_EQ(r.code, 0) << r.err;
  const json report = json::parse(r.out);
  EXPECT_FALSE(report.contains("code"));
  const CliRun f = run({"fidelity", "--code", path("code.json"), "--channel", path("t.json")});
  ASSERT_EQ(f.code, 0) << f.err;
  EXPECT_NEAR(std::stod(f.out), report["fidelity"].get<double>(), 1e-10);
  EXPECT_TRUE(fs::exists(path("tr.json")));
}

TEST_F(CliTest, Diagnose) {
  CliRun r = run({"diagnose", "--code", "fivebit", "--restarts", "1"});
  ASSERT_EQ(r.code, 0) << r.err;
  json j = json::parse(r.out);
  EXPECT_TRUE(j["corrects_some_syndrome"].get<bool>());
  r = run({"diagnose", "--code", "identity:2"});
  ASSERT_EQ(r.code, 0) << r.err;
  j = json::parse(r.out);
  EXPECT_TRUE(j["corrects_some_syndrome"].get<bool>());
  EXPECT_NEAR(j["syndrome_max_fidelity"].get<double>(), 1.0, 1e-9);
}

TEST_F(CliTest, ExportedCodeMatchesBuiltin) {
  ASSERT_EQ(run({"export", "--code", "fivebit", "--output", path("f5.json")}).code, 0);
  const CliRun a = run({"fidelity", "--code", path("f5.json"), "--depolarizing", "0.2",
                     "--n-copies", "5"});
  const CliRun b = run({"fidelity", "--code", "fivebit", "--depolarizing", "0.2", "--n-copies", "5"});
  EXPECT_EQ(a.out, b.out);
}

TEST_F(CliTest, RandomExperiment) {
  const CliRun r = run({"random", "--max-qubits", "2", "--restarts", "2", "--lambda", "0.6"});
  ASSERT_EQ(r.code, 0) << r.err;
  std::string header;
  const auto rows = parse_csv(r.out, &header);
  EXPECT_EQ(header, "n,uncorrected,optimized,isometry_defect");
  ASSERT_EQ(rows.size(), 2u);
  for (const auto& row : rows) EXPECT_GE(row[2], row[1] - 1e-6);
}

}  // namespace
