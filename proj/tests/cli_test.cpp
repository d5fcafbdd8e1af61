// Copyright 2026 The geophase Authors
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

// Drives the geophase executable through a shell.

#include <gtest/gtest.h>

#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

namespace {

namespace fs = std::filesystem;

struct Outcome {
  int status;
  std::string out;
  std::string err;
};

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() / ("geophase_cli_" + std::to_string(::getpid()) + "_" +
                                        ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  fs::path write(const std::string& name, const std::string& text) {
    const auto path = dir_ / name;
    std::ofstream(path) << text;
    return path;
  }

  static std::string slurp(const fs::path& path) {
    std::ifstream in(path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
  }

  Outcome run(const std::string& args, const std::string& stdin_text = "") {
    const auto in = write("stdin.txt", stdin_text);
    const auto out = dir_ / "stdout.txt";
    const auto err = dir_ / "stderr.txt";
    const std::string cmd = std::string(GEOPHASE_CLI_PATH) + " " + args + " <" + in.string() + " >" + out.string() +
                            " 2>" + err.string();
    const int raw = std::system(cmd.c_str());
    return {WIFEXITED(raw) ? WEXITSTATUS(raw) : -1, slurp(out), slurp(err)};
  }

  fs::path dir_;
};

constexpr const char* kSu2Config = R"({
  "model": "su2", "sweep": "t", "start": 0, "end": 6.283185307179586, "steps": 64,
  "omega1": 1.0, "omega2": 2.0, "phi": 0.2, "beta": 1.5, "omega_field": 1.0
})";

TEST_F(CliTest, SweepIsByteIdenticalAcrossRuns) {
  const auto cfg = write("su2.json", kSu2Config);
  const auto first = run("sweep --config " + cfg.string());
  ASSERT_EQ(first.status, 0) << first.err;
  EXPECT_EQ(first.out.rfind("t,omega1,omega2,phi,beta,omega_field,w1,w2,a,b,visibility,phase,defined,res1_mag,res2_mag\n", 0), 0u);
  EXPECT_EQ(std::count(first.out.begin(), first.out.end(), '\n'), 65);
  for (int i = 0; i < 2; ++i) EXPECT_EQ(run("sweep --config " + cfg.string()).out, first.out);
  EXPECT_EQ(run("sweep --jobs 3 --config " + cfg.string()).out, first.out);
}

TEST_F(CliTest, FlagOverridesFileValue) {
  const auto cfg = write("su2.json", kSu2Config);
  const auto result = run("sweep --config " + cfg.string() + " --phi=0.5 --steps 1 --print-config");
  ASSERT_EQ(result.status, 0) << result.err;
  EXPECT_NE(result.out.find(",0.5,1.5,"), std::string::npos) << result.out;
  EXPECT_NE(result.err.find("\"phi\": 0.5"), std::string::npos);
}

TEST_F(CliTest, SweepWritesJsonFile) {
  const auto out = dir_ / "bloch.json";
  const auto result = run("sweep --model bloch --sweep omega_solid --start 0 --end 12.566370614359172 --steps 5 "
                          "--r 1 --format json --output " + out.string());
  ASSERT_EQ(result.status, 0) << result.err;
  EXPECT_TRUE(result.out.empty());
  EXPECT_NE(slurp(out).find("\"omega_solid\": 0, \"r\": 1, \"visibility\": 1, \"phase\": 0"), std::string::npos);
}

TEST_F(CliTest, ConfigErrorsExitOne) {
  const auto bad = run("sweep --model su2 --sweep t --start 0 --end 1 --steps 3 --omega1 -1 --omega2 1");
  EXPECT_EQ(bad.status, 1);
  EXPECT_NE(bad.err.find("omega1"), std::string::npos);
  EXPECT_NE(bad.err.find("> 0"), std::string::npos);

  const auto unknown = write("bad.json", R"({"model": "su2", "colour": "red"})");
  const auto result = run("sweep --config " + unknown.string());
  EXPECT_EQ(result.status, 1);
  EXPECT_NE(result.err.find("unknown key 'colour'"), std::string::npos);

  EXPECT_EQ(run("sweep --config " + (dir_ / "missing.json").string()).status, 1);
  EXPECT_EQ(run("frobnicate").status, 1);
  EXPECT_EQ(run("").status, 1);
}

TEST_F(CliTest, UnwritableOutputExitsOneNamingPath) {
  const auto result = run("sweep --model bloch --sweep r --start 0 --end 1 --steps 2 --output /nonexistent-dir/x.csv");
  EXPECT_EQ(result.status, 1);
  EXPECT_NE(result.err.find("/nonexistent-dir/x.csv"), std::string::npos);
}

TEST_F(CliTest, VerifyExitCodes) {
  const auto ok = run("verify");
  EXPECT_EQ(ok.status, 0) << ok.out;
  EXPECT_EQ(ok.out.find("FAIL"), std::string::npos);

  const auto strict = run("verify --tolerance 1e-30");
  EXPECT_EQ(strict.status, 2);
  EXPECT_NE(strict.out.find("FAIL  numeric_residuals"), std::string::npos);

  const auto one = run("verify --tol numeric_residuals=1e-14");
  EXPECT_EQ(one.status, 2);

  EXPECT_EQ(run("verify --tol numeric_residuals").status, 1);
  EXPECT_EQ(run("verify --tol bogus=1").status, 1);
}

TEST_F(CliTest, BlochOmegaFromStdinAndFile) {
  const auto octant = run("bloch-omega", "1 0 0\n0 1 0\n0 0 1\n");
  EXPECT_EQ(octant.status, 0) << octant.err;
  EXPECT_EQ(octant.out, "1.5707963267948966\n");

  const auto reversed = write("rev.txt", "1 0 0\n\n0 0 1\n0 1 0\n");
  const auto result = run("bloch-omega --input " + reversed.string());
  EXPECT_EQ(result.status, 0);
  EXPECT_EQ(result.out, "-1.5707963267948966\n");
}

TEST_F(CliTest, BlochOmegaRejectsBadInput) {
  EXPECT_EQ(run("bloch-omega", "1 0 0\n-1 0 0\n0 0 1\n").status, 1);
  EXPECT_EQ(run("bloch-omega", "1 0 0\n0 1\n0 0 1\n").status, 1);
  EXPECT_EQ(run("bloch-omega", "1 0 0\n0 1 0\n").status, 1);
}

}  // namespace
