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

#include "aamsim/channel.hpp"

#include <cmath>
#include <numeric>

#include <gtest/gtest.h>

namespace aam::channel {
namespace {

LinkBudgetParams fixed_ground() {
  LinkBudgetParams p;
  p.reflection_model = ReflectionModel::fixed;
  p.reflection_coefficient = {-1.0, 0.0};
  return p;
}

auto isotropic = [](double) { return 0.0; };

TEST(Fspl, ReferenceValues) {
  const double oracle = 20.0 * std::log10(4.0 * kPi * 2.0e9 / kSpeedOfLight);
  EXPECT_NEAR(fspl_db(1.0, 2.0e9), oracle, 1e-12);
  EXPECT_NEAR(fspl_db(1.0, 2.0e9), 38.47, 0.01);
  EXPECT_NEAR(fspl_db(1000.0, 2.0e9), 98.47, 0.01);
  for (double d : {3.0, 250.0, 7000.0}) {
    EXPECT_NEAR(fspl_db(2.0 * d, 3.5e9) - fspl_db(d, 3.5e9), 20.0 * std::log10(2.0), 1e-12);
  }
  EXPECT_THROW(fspl_db(0.0, 2.0e9), ValidationError);
}

TEST(Noise, ThermalFloor) {
  LinkBudgetParams p;
  EXPECT_NEAR(noise_power_dbm(p), -97.0, 1e-12);
  p.bandwidth_hz = 1.0;
  p.noise_figure_db = 0.0;
  EXPECT_NEAR(noise_power_dbm(p), -174.0, 1e-12);
  const double b0 = noise_power_dbm(p);
  p.bandwidth_hz = 10.0;
  EXPECT_NEAR(noise_power_dbm(p) - b0, 10.0, 1e-12);
}

TEST(RayGeometry, PathDifferenceMatchesDirectSubtraction) {
  const Vec3 tx(0.0, 0.0, 25.0);
  const Vec3 rx(300.0, 400.0, 100.0);
  const auto g = ray_geometry(tx, rx);
  EXPECT_NEAR(g.horizontal_m, 500.0, 1e-12);
  EXPECT_NEAR(g.path_difference_m, g.reflected_m - g.direct_m, 1e-9);
  EXPECT_NEAR(g.tx_direct_elev_deg, -g.rx_direct_elev_deg, 1e-12);
  EXPECT_NEAR(std::tan(deg_to_rad(-g.tx_reflected_elev_deg)), 125.0 / 500.0, 1e-12);
}

TEST(TwoRay, DisabledIsFreeSpace) {
  LinkBudgetParams p = fixed_ground();
  p.ground_reflection_enabled = false;
  const Vec3 tx(0.0, 0.0, 25.0);
  const Vec3 rx(800.0, 0.0, 100.0);
  const double d = (rx - tx).norm();
  EXPECT_NEAR(two_ray_rx_power_dbm(tx, rx, isotropic, isotropic, p), p.tx_power_dbm - fspl_db(d, p.carrier_hz),
              1e-9);
}

TEST(TwoRay, HalfWavelengthDifferenceDoublesField) {
  LinkBudgetParams p = fixed_ground();
  const double lambda = p.wavelength_m();
  const double h1 = 10.0;
  const double h2 = 10.0;
  // Bisection on the horizontal distance: path difference decreases with range.
  double lo = 1.0;
  double hi = 1.0e5;
  for (int it = 0; it < 200; ++it) {
    const double mid = 0.5 * (lo + hi);
    const auto g = ray_geometry({0.0, 0.0, h1}, {mid, 0.0, h2});
    (g.path_difference_m > lambda / 2.0 ? lo : hi) = mid;
  }
  const Vec3 tx(0.0, 0.0, h1);
  const Vec3 rx(lo, 0.0, h2);
  const auto g = ray_geometry(tx, rx);
  ASSERT_NEAR(g.path_difference_m, lambda / 2.0, 1e-9);
  const double free_space = p.tx_power_dbm - fspl_db(g.direct_m, p.carrier_hz);
  const double gain = two_ray_rx_power_dbm(tx, rx, isotropic, isotropic, p) - free_space;
  EXPECT_NEAR(gain, 20.0 * std::log10(1.0 + g.direct_m / g.reflected_m), 1e-9);
  EXPECT_NEAR(gain, 6.02, 1e-3);
}

TEST(TwoRay, FullWavelengthEqualAmplitudesCancel) {
  LinkBudgetParams p = fixed_ground();
  RayGeometry g;
  g.direct_m = 1000.0;
  g.reflected_m = 1000.0;
  g.path_difference_m = p.wavelength_m();
  EXPECT_DOUBLE_EQ(combine_two_ray_dbm(g, 1.0, 1.0, 1.0, 1.0, p), kPowerFloorDbm);
}

TEST(TwoRay, Reciprocity) {
  const LinkBudgetParams p;
  const Vec3 a(0.0, 0.0, 25.0);
  const Vec3 b(-640.0, 210.0, 310.0);
  EXPECT_NEAR(two_ray_rx_power_dbm(a, b, isotropic, isotropic, p),
              two_ray_rx_power_dbm(b, a, isotropic, isotropic, p), 1e-9);
}

TEST(TwoRay, RequiresPositiveHeights) {
  const LinkBudgetParams p;
  EXPECT_THROW(two_ray_rx_power_dbm({0, 0, 0}, {10, 0, 5}, isotropic, isotropic, p), ValidationError);
}

TEST(Reflection, FresnelLimits) {
  LinkBudgetParams p;
  p.reflection_model = ReflectionModel::fresnel;
  EXPECT_NEAR(reflection_coefficient(p, 0.0).real(), -1.0, 1e-12);
  EXPECT_NEAR(reflection_coefficient(p, kPi / 2.0).real(), (std::sqrt(15.0) - 1.0) / (std::sqrt(15.0) + 1.0),
              1e-12);
  // Brewster angle: tan(theta_B) = 1 / sqrt(eps) measured from the surface.
  EXPECT_NEAR(std::abs(reflection_coefficient(p, std::atan(1.0 / std::sqrt(15.0)))), 0.0, 1e-12);
}

TEST(ShadowFading, MemorylessLimit) {
  Rng rng = make_stream(7, "sf");
  ShadowFadingProcess sf(1, 4.0, 0.0, rng);
  const int n = 200000;
  std::vector<double> x(n);
  for (auto& v : x) v = sf.step(0, rng);
  double c = 0.0;
  double s2 = 0.0;
  for (int k = 0; k < n; ++k) s2 += x[k] * x[k];
  for (int k = 1; k < n; ++k) c += x[k] * x[k - 1];
  EXPECT_NEAR(c / s2, 0.0, 0.01);
  EXPECT_NEAR(s2 / n, 16.0, 0.02 * 16.0);
}

TEST(ShadowFading, Ar1Statistics) {
  Rng rng = make_stream(11, "sf");
  ShadowFadingProcess sf(1, 4.0, 0.82, rng);
  const int n = 1000000;
  std::vector<double> x(n);
  for (auto& v : x) v = sf_step(sf, 0, rng);
  const double mean = std::accumulate(x.begin(), x.end(), 0.0) / n;
  double var = 0.0;
  double cov = 0.0;
  for (int k = 0; k < n; ++k) var += (x[k] - mean) * (x[k] - mean);
  for (int k = 1; k < n; ++k) cov += (x[k] - mean) * (x[k - 1] - mean);
  EXPECT_NEAR(cov / var, 0.82, 0.01);
  EXPECT_NEAR(var / n, 16.0, 0.02 * 16.0);
}

TEST(ShadowFading, RejectsUnitCoefficient) {
  Rng rng = make_stream(1, "sf");
  EXPECT_THROW(ShadowFadingProcess(1, 4.0, 1.0, rng), ValidationError);
}

} // namespace
} // namespace aam::channel
