// Copyright 2026 The reidrisk Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// End-to-end tests of the reidrisk binary.

#include <sys/wait.h>
#include <unistd.h>

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "gmock/gmock.h"
#include "gtest/gtest.h"
#include "reidrisk/io/report_io.h"

namespace reidrisk {
namespace {

namespace fs = std::filesystem;
using ::testing::HasSubstr;

struct RunResult {
  int exit_code = -1;
  std::string out;
  std::string err;
};

std::string ReadFile(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void WriteFile(const fs::path& path, const std::string& text) {
  std::ofstream(path, std::ios::binary) << text;
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("reidrisk_cli_" + std::to_string(::getpid()) + "_" +
            ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  RunResult Run(const std::string& args) {
    fs::path out = dir_ / "stdout.txt";
    fs::path err = dir_ / "stderr.txt";
    std::string cmd = std::string(REIDRISK_CLI_PATH) + " " + args + " >" + out.string() +
                      " 2>" + err.string();
    int status = std::system(cmd.c_str());
    RunResult r;
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    r.out = ReadFile(out);
    r.err = ReadFile(err);
    return r;
  }

  // {u1: {A, B}, u2: {A, C}} with one record per point.
  std::string TwoUserInputs() {
    WriteFile(dir_ / "cdr.csv",
              "caller_id,receiver_id,tower_id,time\n"
              "u1,u2,A,2013-03-01 08:10\n"
              "u1,,B,2013-03-01 09:10\n"
              "u2,u1,A,2013-03-01 08:20\n"
              "u2,,C,2013-03-01 10:30\n");
    WriteFile(dir_ / "map.csv",
              "tower_id,zip,district\n"
              "A,zA,d1\n"
              "B,zB,d1\n"
              "C,zC,d2\n");
    return "--cdr " + (dir_ / "cdr.csv").string() + " --hierarchy " +
           (dir_ / "map.csv").string();
  }

  std::string Generated(int users) {
    RunResult g = Run("generate --users " + std::to_string(users) +
                      " --days 7 --seed 3 --out " + (dir_ / "gen").string());
    EXPECT_EQ(g.exit_code, 0) << g.err;
    return "--cdr " + (dir_ / "gen" / "cdr.csv").string() + " --hierarchy " +
           (dir_ / "gen" / "hierarchy.csv").string();
  }

  fs::path dir_;
};

TEST_F(CliTest, GenerateIsDeterministic) {
  ASSERT_EQ(Run("generate --users 50 --days 3 --seed 9 --out " + (dir_ / "a").string())
                .exit_code,
            0);
  ASSERT_EQ(Run("generate --users 50 --days 3 --seed 9 --threads 3 --out " +
                (dir_ / "b").string())
                .exit_code,
            0);
  for (const char* name : {"cdr.csv", "hierarchy.csv"}) {
    std::string a = ReadFile(dir_ / "a" / name);
    EXPECT_FALSE(a.empty());
    EXPECT_EQ(a, ReadFile(dir_ / "b" / name)) << name;
  }
}

TEST_F(CliTest, GenerateUsageErrors) {
  EXPECT_EQ(Run("generate --users 5").exit_code, 2);
  EXPECT_EQ(Run("generate --users 0 --out " + (dir_ / "x").string()).exit_code, 2);
  RunResult r = Run("generate --users 5 --zones 10,200,5 --out " + (dir_ / "x").string());
  EXPECT_EQ(r.exit_code, 2);
  EXPECT_THAT(r.err, HasSubstr("infeasible branching"));
  WriteFile(dir_ / "file", "x");
  EXPECT_EQ(Run("generate --users 5 --out " + (dir_ / "file" / "sub").string()).exit_code, 2);
  EXPECT_EQ(Run("frobnicate").exit_code, 2);
}

TEST_F(CliTest, AssessFullGrid) {
  std::string inputs = Generated(60);
  RunResult r = Run("assess " + inputs +
                    " --spatial zip,district,municipality --temporal 1,6,12,24 --trials 5"
                    " --unicity-trials 20 --bootstrap 50");
  ASSERT_EQ(r.exit_code, 0) << r.err;
  auto report = io::ReadReportJson(r.out);
  ASSERT_TRUE(report.ok()) << report.status();
  ASSERT_EQ(report->rows.size(), 12u);
  EXPECT_EQ(report->rows.front().metrics.profile.Label(), "Z1");
  EXPECT_EQ(report->rows.back().metrics.profile.Label(), "M24");
  EXPECT_EQ(report->rows.front().metrics.n, 60u);
}

TEST_F(CliTest, AssessTwoUserFixture) {
  RunResult r = Run("assess " + TwoUserInputs() + " --trials 10000 --p 1,2");
  ASSERT_EQ(r.exit_code, 0) << r.err;
  auto report = io::ReadReportJson(r.out);
  ASSERT_TRUE(report.ok()) << report.status();
  ASSERT_EQ(report->rows.size(), 1u);
  const RiskMetrics& m = report->rows[0].metrics;
  EXPECT_NEAR(*m.c, 1.5, 0.02);
  EXPECT_NEAR(*m.r, 0.75, 0.02);
  EXPECT_EQ(m.k_anonymity, 1u);
  ASSERT_EQ(m.unicity.size(), 2u);
  EXPECT_NEAR(*m.unicity[0].value, 0.5, 0.02);
  EXPECT_EQ(*m.unicity[1].value, 1.0);
}

TEST_F(CliTest, AssessCsvAndOutFile) {
  fs::path out = dir_ / "report.csv";
  RunResult r = Run("assess " + TwoUserInputs() + " --temporal 1,24 --format csv --out " +
                    out.string());
  ASSERT_EQ(r.exit_code, 0) << r.err;
  std::string text = ReadFile(out);
  EXPECT_EQ(std::count(text.begin(), text.end(), '\n'), 3);
  EXPECT_THAT(text, HasSubstr("Z24"));
}

TEST_F(CliTest, AssessUsageErrors) {
  std::string inputs = TwoUserInputs();
  EXPECT_EQ(Run("assess " + inputs + " --pareto").exit_code, 2);
  RunResult unknown = Run("assess " + inputs + " --spatial county");
  EXPECT_EQ(unknown.exit_code, 2);
  EXPECT_THAT(unknown.err, HasSubstr("county"));
  EXPECT_EQ(Run("assess " + inputs + " --temporal 5").exit_code, 2);
  EXPECT_EQ(Run("assess " + inputs + " --trials 0").exit_code, 2);
  EXPECT_EQ(Run("assess " + inputs + " --format xml").exit_code, 2);
  EXPECT_EQ(Run("assess --cdr x.csv").exit_code, 2);
}

TEST_F(CliTest, AssessDataErrors) {
  std::string inputs = TwoUserInputs();
  WriteFile(dir_ / "bad.csv",
            "caller_id,receiver_id,tower_id,time\n"
            "u1,,A,2013-03-01 08:10\n"
            "u2,,A,not a time\n");
  RunResult r = Run("assess --cdr " + (dir_ / "bad.csv").string() + " --hierarchy " +
                    (dir_ / "map.csv").string());
  EXPECT_EQ(r.exit_code, 3);
  EXPECT_THAT(r.err, HasSubstr("line 3"));

  WriteFile(dir_ / "unmapped.csv",
            "caller_id,receiver_id,tower_id,time\n"
            "u1,,Q,2013-03-01 08:10\n");
  EXPECT_EQ(Run("assess --cdr " + (dir_ / "unmapped.csv").string() + " --hierarchy " +
                (dir_ / "map.csv").string())
                .exit_code,
            3);
  EXPECT_EQ(Run("assess --cdr " + (dir_ / "missing.csv").string() + " --hierarchy " +
                (dir_ / "map.csv").string())
                .exit_code,
            3);

  WriteFile(dir_ / "utility.csv", "spatial_level,temporal_granularity,score\nzip,24h,5\n");
  RunResult missing = Run("assess " + inputs + " --utility " + (dir_ / "utility.csv").string() +
                          " --pareto");
  EXPECT_EQ(missing.exit_code, 3);
  EXPECT_THAT(missing.err, HasSubstr("no utility for Z1"));
}

TEST_F(CliTest, AssessPareto) {
  std::string inputs = TwoUserInputs();
  WriteFile(dir_ / "utility.csv",
            "spatial_level,temporal_granularity,score\n"
            "zip,1h,9.3\n"
            "district,24h,4.0\n");
  RunResult r = Run("assess " + inputs + " --spatial zip,district --temporal 1,24 --utility " +
                    (dir_ / "utility.csv").string() + " --pareto");
  EXPECT_EQ(r.exit_code, 3);  // Z24 and D1 have no score
  WriteFile(dir_ / "utility.csv",
            "spatial_level,temporal_granularity,score\n"
            "zip,1h,9.3\n"
            "district,1h,4.0\n");
  r = Run("assess " + inputs + " --spatial zip,district --utility " +
          (dir_ / "utility.csv").string() + " --pareto");
  ASSERT_EQ(r.exit_code, 0) << r.err;
  auto report = io::ReadReportJson(r.out);
  ASSERT_TRUE(report.ok());
  ASSERT_TRUE(report->pareto.has_value());
  EXPECT_EQ(report->pareto->points.size(), 2u);
}

TEST_F(CliTest, UnicityTwoUserFixture) {
  RunResult r = Run("unicity " + TwoUserInputs() + " --p 1,2 --trials 10000");
  ASSERT_EQ(r.exit_code, 0) << r.err;
  std::istringstream lines(r.out);
  std::string header, p1, p2;
  std::getline(lines, header);
  std::getline(lines, p1);
  std::getline(lines, p2);
  EXPECT_EQ(header, "profile,spatial_level,temporal_hours,p,u_p,eligible,trials,unique");
  EXPECT_THAT(p1, ::testing::StartsWith("Z1,zip,1,1,"));
  EXPECT_NEAR(std::stod(p1.substr(p1.find(",1,1,") + 5)), 0.5, 0.02);
  EXPECT_THAT(p2, ::testing::StartsWith("Z1,zip,1,2,1.000000,2,"));
  EXPECT_EQ(Run("unicity " + TwoUserInputs() + " --p 0").exit_code, 2);
}

TEST_F(CliTest, DeterministicAcrossRunsAndThreads) {
  std::string inputs = Generated(150);
  std::string grid = " --spatial zip,municipality --temporal 1,24 --seed 17";
  for (const std::string& cmd :
       {"assess " + inputs + grid + " --trials 4 --unicity-trials 30 --bootstrap 100",
        "unicity " + inputs + grid + " --trials 50",
        "unicity " + inputs + grid + " --trials 50 --format json"}) {
    RunResult a = Run(cmd + " --threads 1");
    RunResult b = Run(cmd + " --threads 1");
    RunResult c = Run(cmd + " --threads 3");
    ASSERT_EQ(a.exit_code, 0) << a.err;
    EXPECT_FALSE(a.out.empty());
    EXPECT_EQ(a.out, b.out) << cmd;
    EXPECT_EQ(a.out, c.out) << cmd;
  }
  RunResult other = Run("unicity " + inputs + " --seed 18 --trials 50");
  RunResult base = Run("unicity " + inputs + " --seed 17 --trials 50");
  EXPECT_NE(other.out, base.out);
}

}  // namespace
}  // namespace reidrisk
