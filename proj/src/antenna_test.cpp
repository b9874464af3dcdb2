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

#include "aamsim/antenna.hpp"

#include <cmath>
#include <complex>

#include <gtest/gtest.h>

namespace aam::antenna {
namespace {

TEST(UlaPanel, BoresightGain) {
  UlaPanel p;
  p.tilt_deg = 0.0;
  const double peak = 8.0 + 10.0 * std::log10(8.0);
  EXPECT_NEAR(ula_gain_db(p, 0.0), peak, 1e-9);
  EXPECT_NEAR(ula_gain_db(p, 0.0), 17.03, 0.01);
  for (double e = -90.0; e <= 90.0; e += 0.05) EXPECT_LE(ula_gain_db(p, e), peak + 1e-9) << e;
}

TEST(UlaPanel, SteeringAngleCarriesElementRolloff) {
  // Element pattern is fixed about the horizon, so a tilted beam loses 12 (6/65)^2 dB.
  UlaPanel p;
  const double expected = 8.0 + 10.0 * std::log10(8.0) - 12.0 * (6.0 / 65.0) * (6.0 / 65.0);
  EXPECT_NEAR(ula_gain_db(p, -6.0), expected, 1e-9);
  EXPECT_NEAR(array_factor(p, -6.0), 8.0, 1e-12);
}

TEST(UlaPanel, ZeroTiltIsSymmetric) {
  UlaPanel p;
  p.tilt_deg = 0.0;
  EXPECT_NEAR(ula_gain_db(p, 10.0), ula_gain_db(p, -10.0), 1e-9);
  EXPECT_NEAR(ula_gain_db(p, 37.5), ula_gain_db(p, -37.5), 1e-9);
}

TEST(UlaPanel, FirstNullAboveHorizon) {
  UlaPanel p;
  // Dirichlet kernel null: N * pi * d * (sin e + sin tilt) = pi.
  const double root = rad_to_deg(std::asin(0.25 - std::sin(deg_to_rad(6.0))));
  EXPECT_NEAR(root, 8.365, 1e-3);
  EXPECT_LT(array_factor(p, root), 1e-20);
  EXPECT_LT(array_factor_by_summation(p, root), 1e-20);
  EXPECT_GT(array_factor(p, root - 0.5), 1e-3);
  EXPECT_GT(array_factor(p, root + 0.5), 1e-3);
}

TEST(UlaPanel, ClosedFormMatchesSummation) {
  for (double tilt : {-20.0, 0.0, 6.0, 12.0}) {
    UlaPanel p;
    p.tilt_deg = tilt;
    for (int k = 0; k < 10000; ++k) {
      const double e = -90.0 + 180.0 * k / 9999.0;
      const double a = array_factor(p, e);
      const double b = array_factor_by_summation(p, e);
      EXPECT_NEAR(a, b, 1e-9 * p.n_elements) << "tilt " << tilt << " e " << e;
    }
  }
}

TEST(UlaPanel, SummationOracleIndependent) {
  UlaPanel p;
  const double e = 23.0;
  std::complex<double> s{0.0, 0.0};
  const double psi = 2.0 * kPi * 0.5 * (std::sin(deg_to_rad(e)) + std::sin(deg_to_rad(6.0)));
  for (int n = 0; n < 8; ++n) s += std::polar(1.0, n * psi);
  EXPECT_NEAR(array_factor(p, e), std::norm(s) / 8.0, 1e-12);
}

TEST(UlaPanel, ElementPatternFloor) {
  UlaPanel p;
  EXPECT_DOUBLE_EQ(element_pattern_db(p, 0.0), 0.0);
  EXPECT_NEAR(element_pattern_db(p, 65.0), -12.0, 1e-12);
  EXPECT_DOUBLE_EQ(element_pattern_db(p, 90.0), -12.0 * (90.0 / 65.0) * (90.0 / 65.0));
  EXPECT_DOUBLE_EQ(element_pattern_db(p, 180.0), -30.0);
}

TEST(UlaPanel, RejectsBadConfig) {
  UlaPanel p;
  p.n_elements = 0;
  EXPECT_THROW(p.validate(), ValidationError);
}

TEST(Dipole, PeakAndAxialNull) {
  DipoleAntenna d;
  EXPECT_DOUBLE_EQ(dipole_gain_linear(d, Vec3::UnitX()), 1.64);
  EXPECT_DOUBLE_EQ(dipole_gain_linear(d, Vec3::UnitZ()), 0.0);
  EXPECT_DOUBLE_EQ(dipole_gain_linear(d, -Vec3::UnitZ()), 0.0);
}

TEST(Dipole, FortyFiveDegrees) {
  DipoleAntenna d;
  const double s = std::sin(kPi / 4.0);
  const double expected = 1.64 * std::pow(std::cos(kPi / (2.0 * std::sqrt(2.0))) / s, 2);
  EXPECT_NEAR(dipole_gain_linear(d, Vec3(1.0, 0.0, 1.0)), expected, 1e-12);
  EXPECT_NEAR(expected, 0.6467, 1e-4);
}

TEST(Dipole, RadiatedPowerIntegratesToSphere) {
  // Midpoint rule over theta; the pattern is azimuth independent.
  DipoleAntenna d;
  const int n = 20000;
  double sum = 0.0;
  for (int k = 0; k < n; ++k) {
    const double th = (k + 0.5) * kPi / n;
    sum += dipole_gain_linear(d, Vec3(std::sin(th), 0.0, std::cos(th))) * std::sin(th) * (kPi / n);
  }
  EXPECT_NEAR(2.0 * kPi * sum / (4.0 * kPi), 1.0, 2e-3);
}

TEST(Polarization, CoAndCrossPolar) {
  DipoleAntenna z;
  DipoleAntenna y{Vec3::UnitY()};
  EXPECT_NEAR(polarization_match(z, z, Vec3::UnitX()), 1.0, 1e-12);
  EXPECT_NEAR(polarization_match(z, y, Vec3::UnitX()), 0.0, 1e-12);
  EXPECT_DOUBLE_EQ(polarization_match(z, z, Vec3::UnitZ()), 0.0);
}

TEST(Polarization, ObliquePath) {
  DipoleAntenna z;
  DipoleAntenna y{Vec3::UnitY()};
  const Vec3 u = Vec3(1.0, 1.0, 1.0).normalized();
  const Vec3 ez = (Vec3::UnitZ() - u.dot(Vec3::UnitZ()) * u).normalized();
  const Vec3 ey = (Vec3::UnitY() - u.dot(Vec3::UnitY()) * u).normalized();
  const double oracle = std::pow(ez.dot(ey), 2);
  EXPECT_NEAR(oracle, 0.25, 1e-12);
  EXPECT_NEAR(polarization_match(z, y, u), oracle, 1e-12);
}

} // namespace
} // namespace aam::antenna
