// SPDX-License-Identifier: Apache-2.0
//
// aamsim: cellular coverage, handover and localization studies for air corridors
// Copyright (C) 2026 The aamsim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#include "aamsim/cli.hpp"
#include "aamsim/io.hpp"

#include <cstdlib>
#include <fstream>
#include <set>
#include <sstream>

#include <gtest/gtest.h>
#include <nlohmann/json.hpp>

namespace {

namespace fs = std::filesystem;
using namespace aam::cli;

int run(std::vector<std::string> args) {
  args.insert(args.begin(), "aamsim");
  std::vector<char*> argv;
  for (auto& a : args) argv.push_back(a.data());
  return dispatch(static_cast<int>(argv.size()), argv.data());
}

fs::path scratch(const std::string& name) {
  auto p = fs::temp_directory_path() / ("aamsim_cli_test_" + name);
  fs::remove_all(p);
  fs::create_directories(p);
  return p;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

nlohmann::json manifest(const fs::path& dir) { return nlohmann::json::parse(slurp(dir / "manifest.json")); }

void expect_digests_match(const fs::path& dir) {
  const auto m = manifest(dir);
  ASSERT_FALSE(m["outputs"].empty());
  for (const auto& o : m["outputs"]) {
    const auto f = dir / o["file"].get<std::string>();
    ASSERT_TRUE(fs::exists(f)) << f;
    EXPECT_EQ(o["sha256"], aam::io::sha256_file(f)) << f;
  }
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run({}), kExitUsage);
  EXPECT_EQ(run({"frobnicate"}), kExitUsage);
  EXPECT_EQ(run({"--help"}), kExitOk);
}

TEST(Cli, ValidationErrors) {
  const auto dir = scratch("validation");
  std::ofstream(dir / "noseed.ini") << "[layout]\nisd = 1000\n";
  std::ofstream(dir / "typo.ini") << "[run]\nseed = 1\n[layout]\nisdd = 1000\n";
  EXPECT_EQ(run({"coverage", "--config", (dir / "noseed.ini").string(), "--out", dir.string()}), kExitValidation);
  EXPECT_EQ(run({"coverage", "--config", (dir / "typo.ini").string(), "--out", dir.string()}), kExitValidation);
  EXPECT_EQ(run({"coverage", "--config", (dir / "absent.ini").string()}), kExitValidation);
  EXPECT_EQ(run({"coverage", "--bogus-flag"}), kExitValidation);
  EXPECT_EQ(run({"coverage", "--height", "-5", "--out", dir.string()}), kExitValidation);
  EXPECT_EQ(run({"coverage", "--spacing", "5000", "--out", dir.string()}), kExitValidation);
  EXPECT_EQ(run({"localize", "--antenna", "quad", "--out", dir.string()}), kExitValidation);
  EXPECT_EQ(run({"corridor-check", "--out", dir.string()}), kExitValidation);
}

TEST(Cli, RuntimeFailure) {
  const auto dir = scratch("runtime");
  // A regular file where the output directory should go.
  std::ofstream(dir / "blocked") << "x";
  EXPECT_EQ(run({"pattern-dump", "--out", (dir / "blocked").string()}), kExitRuntime);
}

TEST(Cli, CoverageOutputsAndDigests) {
  const auto dir = scratch("coverage");
  ASSERT_EQ(run({"coverage", "--isd", "1000", "--height", "100", "--out", dir.string()}), kExitOk);
  const auto sub = dir / "coverage";
  EXPECT_TRUE(fs::exists(sub / "association.csv"));
  EXPECT_TRUE(fs::exists(sub / "summary.json"));
  expect_digests_match(sub);
  const auto header = slurp(sub / "association.csv").substr(0, 40);
  EXPECT_EQ(header.rfind("x,y,serving_id,panel,rsrp_dbm,sir_db\n", 0), 0u);
  const auto summary = nlohmann::json::parse(slurp(sub / "summary.json"));
  EXPECT_TRUE(summary.contains("min_sir_db"));
  EXPECT_TRUE(summary.contains("fragmentation"));
  EXPECT_EQ(manifest(sub)["subcommand"], "coverage");
}

TEST(Cli, RepeatedRunsHaveIdenticalDigests) {
  const auto a = scratch("repeat_a");
  const auto b = scratch("repeat_b");
  for (const auto& d : {a, b}) {
    ASSERT_EQ(run({"coverage", "--isd", "2000", "--height", "500", "--seed", "4", "--out", d.string()}), kExitOk);
  }
  EXPECT_EQ(manifest(a / "coverage")["outputs"], manifest(b / "coverage")["outputs"]);
}

TEST(Cli, EnvironmentOutputRoot) {
  const auto dir = scratch("env");
  ::setenv("AAMSIM_OUTPUT_ROOT", dir.string().c_str(), 1);
  const int rc = run({"pattern-dump", "--tilt", "-10"});
  ::unsetenv("AAMSIM_OUTPUT_ROOT");
  ASSERT_EQ(rc, kExitOk);
  EXPECT_TRUE(fs::exists(dir / "pattern-dump" / "pattern.csv"));
  expect_digests_match(dir / "pattern-dump");
}

TEST(Cli, LocalizeCurves) {
  const auto dir = scratch("localize");
  ASSERT_EQ(run({"localize", "--dx", "500", "--dy", "1000", "--heights", "100,500", "--antenna", "mimo", "--spacing",
                 "50", "--out", dir.string()}),
            kExitOk);
  const auto sub = dir / "localize";
  expect_digests_match(sub);
  std::istringstream in(slurp(sub / "crlb_cdf.csv"));
  std::string line;
  std::getline(in, line);
  EXPECT_EQ(line, "dx,dy,h,mode,delta_m,probability");
  std::set<std::string> curves;
  while (std::getline(in, line)) {
    std::stringstream ss(line);
    std::string dx, dy, h;
    std::getline(ss, dx, ',');
    std::getline(ss, dy, ',');
    std::getline(ss, h, ',');
    curves.insert(dx + "/" + dy + "/" + h);
  }
  EXPECT_EQ(curves, (std::set<std::string>{"500/1000/100", "500/1000/500"}));
  EXPECT_TRUE(fs::exists(sub / "median_vs_alt.csv"));
  EXPECT_TRUE(fs::exists(sub / "crlb_grid.csv"));
}

TEST(Cli, CorridorCheck) {
  const auto dir = scratch("corridor");
  std::ofstream(dir / "s.csv") << "t,vehicle,i,j,layer\n0,A,1,1,top\n0,B,1,1,top\n";
  ASSERT_EQ(run({"corridor-check", "--schedule", (dir / "s.csv").string(), "--out", dir.string()}), kExitOk);
  const auto v = nlohmann::json::parse(slurp(dir / "corridor-check" / "violations.json"));
  ASSERT_FALSE(v["violations"].empty());
  EXPECT_EQ(v["violations"][0]["rule"], 1);
  std::ofstream(dir / "bad.csv") << "t,vehicle,i,j,layer\n0,A,99,1,top\n";
  EXPECT_EQ(run({"corridor-check", "--schedule", (dir / "bad.csv").string(), "--out", dir.string()}),
            kExitValidation);
}

TEST(Cli, SmallOptimizeAndHandover) {
  const auto dir = scratch("small");
  ASSERT_EQ(run({"optimize", "--isd", "1000", "--height", "500", "--spacing", "100", "--generations", "2",
                 "--population", "6", "--out", dir.string()}),
            kExitOk);
  expect_digests_match(dir / "optimize");
  const auto tilts = nlohmann::json::parse(slurp(dir / "optimize" / "best_tilts.json"));
  EXPECT_EQ(tilts["uptilt_deg"].size(), 19u);
  ASSERT_EQ(run({"coverage", "--height", "500", "--tilts-json", (dir / "optimize" / "best_tilts.json").string(),
                 "--out", dir.string()}),
            kExitOk);
  ASSERT_EQ(run({"handover", "--isd", "1000", "--height", "100", "--speed", "30,60", "--windows", "4",
                 "--flights", "2", "--out", dir.string()}),
            kExitOk);
  expect_digests_match(dir / "handover");
  const auto s = nlohmann::json::parse(slurp(dir / "handover" / "ho_summary.json"));
  EXPECT_EQ(s["scenarios"].size(), 2u);
}

} // namespace
