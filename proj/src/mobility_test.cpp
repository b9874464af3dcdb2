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

#include "aamsim/mobility.hpp"

#include <cmath>
#include <numeric>

#include <gtest/gtest.h>

namespace aam::mobility {
namespace {

std::size_t run_trace(const std::vector<std::vector<double>>& trace, const HandoverParams& p,
                      std::vector<std::int64_t>* ho_steps = nullptr) {
  HoMachine m;
  for (std::size_t k = 0; k < trace.size(); ++k) {
    const auto ev = ho_machine_step(m, trace[k], p);
    if (ev.kind == HoEventKind::handover && ho_steps) ho_steps->push_back(static_cast<std::int64_t>(k));
  }
  return m.handovers;
}

TEST(Trajectory, DisplacementPerStep) {
  TrajectoryConfig c;
  EXPECT_NEAR(c.speed_mps() * c.step_s, 30.0 / 3.6 * 0.02, 1e-15);
  EXPECT_NEAR(c.speed_mps() * c.step_s, 0.1667, 1e-4);
  EXPECT_EQ(c.steps_per_window(), 9000);
}

TEST(Trajectory, StraightLineAwayFromBoundary) {
  const scenario::Hexagon h{Vec2::Zero(), 577.35};
  Rng rng = make_stream(1, "test");
  AvState s{Vec2(0.0, 0.0), 0.3};
  for (int k = 0; k < 100; ++k) EXPECT_FALSE(step_trajectory(s, h, 0.1667, rng));
  EXPECT_NEAR(s.position.x(), 100 * 0.1667 * std::cos(0.3), 1e-9);
  EXPECT_NEAR(s.position.y(), 100 * 0.1667 * std::sin(0.3), 1e-9);
  EXPECT_DOUBLE_EQ(s.heading_rad, 0.3);
}

TEST(Trajectory, ContainmentOverMillionSteps) {
  const scenario::Hexagon h{Vec2::Zero(), 1000.0 / std::sqrt(3.0)};
  Rng rng = make_stream(2, "test");
  AvState s = random_start(h, rng);
  std::size_t bounces = 0;
  for (int k = 0; k < 1000000; ++k) {
    bounces += step_trajectory(s, h, 120.0 / 3.6 * 0.02, rng);
    ASSERT_TRUE(h.contains(s.position)) << k;
  }
  EXPECT_GT(bounces, 10u);
}

TEST(Trajectory, BounceTurnsInward) {
  const scenario::Hexagon h{Vec2::Zero(), 100.0};
  Rng rng = make_stream(3, "test");
  for (int trial = 0; trial < 200; ++trial) {
    AvState s{Vec2(0.0, h.inradius() - 0.05), kPi / 2.0};
    ASSERT_TRUE(step_trajectory(s, h, 1.0, rng));
    EXPECT_LT(std::sin(s.heading_rad), 0.0);
  }
}

TEST(HoMachine, PermanentAdvantageGivesOneHandover) {
  HandoverParams p;
  std::vector<std::vector<double>> trace(50, {0.0, 3.0});
  trace[0] = {0.0, -10.0};
  std::vector<std::int64_t> at;
  EXPECT_EQ(run_trace(trace, p, &at), 1u);
  ASSERT_EQ(at.size(), 1u);
  // A3 begins at sample 1; the handover fires ttt later.
  EXPECT_EQ(at[0], 1 + 2);
}

TEST(HoMachine, ShortExcursionIsIgnored) {
  HandoverParams p;
  std::vector<std::vector<double>> trace(50, {0.0, -3.0});
  trace[5] = {0.0, 3.0}; // 20 ms above the margin
  EXPECT_EQ(run_trace(trace, p), 0u);
}

TEST(HoMachine, SquareWave) {
  HandoverParams p;
  std::vector<std::vector<double>> trace;
  for (int k = 0; k < 50; ++k) {
    const bool high = (k / 5) % 2 == 1; // 100 ms half period at 20 ms steps
    trace.push_back({0.0, high ? 3.0 : -3.0});
  }
  EXPECT_EQ(run_trace(trace, p), 9u);
}

TEST(HoMachine, HugeMarginNeverHandsOver) {
  HandoverParams p;
  p.hom_db = 1e9;
  Rng rng = make_stream(4, "test");
  std::normal_distribution<double> n(0.0, 20.0);
  std::vector<std::vector<double>> trace(5000, std::vector<double>(7));
  for (auto& s : trace)
    for (double& x : s) x = n(rng);
  EXPECT_EQ(run_trace(trace, p), 0u);
}

TEST(HoMachine, ReplayIsDeterministic) {
  HandoverParams p;
  Rng rng = make_stream(5, "test");
  std::normal_distribution<double> n(0.0, 3.0);
  std::vector<std::vector<double>> trace(3000, std::vector<double>(4));
  for (auto& s : trace)
    for (double& x : s) x = n(rng);
  std::vector<std::int64_t> a;
  std::vector<std::int64_t> b;
  EXPECT_EQ(run_trace(trace, p, &a), run_trace(trace, p, &b));
  EXPECT_EQ(a, b);
}

TEST(Pmf, NormalizationAndMoments) {
  const auto pmf = make_pmf({0, 2, 2, 5, 1});
  ASSERT_EQ(pmf.probability.size(), 6u);
  EXPECT_NEAR(std::accumulate(pmf.probability.begin(), pmf.probability.end(), 0.0), 1.0, 1e-12);
  EXPECT_DOUBLE_EQ(pmf.probability[2], 0.4);
  EXPECT_DOUBLE_EQ(pmf.mean, 2.0);
  EXPECT_DOUBLE_EQ(pmf.variance, (4.0 + 0.0 + 0.0 + 9.0 + 1.0) / 5.0);
}

TEST(Study, SingleSiteWorldNeverHandsOver) {
  scenario::Scenario s;
  s.layout = scenario::build_hex_layout(1000.0, 2);
  s.layout.sites.resize(1);
  TrajectoryConfig c;
  c.n_windows = 4;
  c.n_flights = 2;
  c.window_s = 2.0;
  c.sf_sigma_db = 0.0;
  const auto pmf = run_mobility_study(s, c, HandoverParams{}, 1);
  ASSERT_EQ(pmf.probability.size(), 1u);
  EXPECT_DOUBLE_EQ(pmf.probability[0], 1.0);
}

TEST(Study, NoFadingCountsDependOnlyOnTrajectory) {
  scenario::Scenario s;
  s.layout = scenario::build_hex_layout(1000.0, 2);
  s.link.ground_reflection_enabled = false;
  TrajectoryConfig c;
  c.n_windows = 2;
  c.n_flights = 1;
  c.window_s = 20.0;
  c.sf_sigma_db = 0.0;
  const auto a = run_mobility_study(s, c, HandoverParams{}, 9);
  const auto b = run_mobility_study(s, c, HandoverParams{}, 9, 2);
  EXPECT_EQ(a.window_counts, b.window_counts);
}

TEST(Study, Validation) {
  TrajectoryConfig c;
  HandoverParams p;
  c.step_s = 0.05;
  EXPECT_THROW(c.validate(p), ValidationError);
  c = TrajectoryConfig{};
  c.window_s = 180.01;
  EXPECT_THROW(c.validate(p), ValidationError);
  p.ttt_s = 0.0;
  EXPECT_THROW(p.validate(), ValidationError);
}

} // namespace
} // namespace aam::mobility
