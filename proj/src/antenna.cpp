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

#include <algorithm>
#include <complex>

namespace aam::antenna {

namespace {
constexpr double kGainFloorLinear = 1e-30;
constexpr double kDirichletEps = 1e-9;
} // namespace

void UlaPanel::validate() const {
  require(n_elements >= 1, "UlaPanel: n_elements must be >= 1");
  require(element_spacing_wavelengths > 0.0, "UlaPanel: element spacing must be positive");
  require(tilt_deg >= -90.0 && tilt_deg <= 90.0, "UlaPanel: tilt must lie in [-90, 90] deg");
}

double element_pattern_db(const UlaPanel& panel, double elevation_deg) {
  const double r = elevation_deg / 65.0;
  return -std::min(12.0 * r * r, std::abs(panel.side_lobe_floor_db));
}

double array_factor(const UlaPanel& panel, double elevation_deg) {
  const double n = panel.n_elements;
  const double psi = 2.0 * kPi * panel.element_spacing_wavelengths *
                     (std::sin(deg_to_rad(elevation_deg)) - std::sin(deg_to_rad(-panel.tilt_deg)));
  const double den = std::sin(0.5 * psi);
  if (std::abs(den) < kDirichletEps) {
    // psi at a multiple of 2 pi: grating or main lobe, all terms in phase
    return n;
  }
  const double num = std::sin(0.5 * n * psi);
  return (num * num) / (den * den) / n;
}

double array_factor_by_summation(const UlaPanel& panel, double elevation_deg) {
  const double psi = 2.0 * kPi * panel.element_spacing_wavelengths *
                     (std::sin(deg_to_rad(elevation_deg)) - std::sin(deg_to_rad(-panel.tilt_deg)));
  std::complex<double> sum{0.0, 0.0};
  for (int k = 0; k < panel.n_elements; ++k) sum += std::polar(1.0, psi * k);
  return std::norm(sum) / panel.n_elements;
}

double ula_gain_db(const UlaPanel& panel, double elevation_deg) {
  const double af = std::max(array_factor(panel, elevation_deg), kGainFloorLinear);
  return panel.element_max_gain_dbi + element_pattern_db(panel, elevation_deg) + linear_to_db(af);
}

void DipoleAntenna::validate() const {
  require(std::abs(axis.norm() - 1.0) <= 1e-9, "DipoleAntenna: axis must be a unit vector");
}

double dipole_gain_linear(const DipoleAntenna& ant, const Vec3& direction) {
  const double cos_psi = std::clamp(ant.axis.dot(direction) / direction.norm(), -1.0, 1.0);
  const double sin_psi = std::sqrt(std::max(0.0, 1.0 - cos_psi * cos_psi));
  if (sin_psi < 1e-12) return 0.0;
  const double f = std::cos(0.5 * kPi * cos_psi) / sin_psi;
  return ant.peak_gain_linear * f * f;
}

double polarization_match(const DipoleAntenna& tx, const DipoleAntenna& rx,
                          const Vec3& path_direction) {
  const Vec3 p = path_direction.normalized();
  const Vec3 et = tx.axis - tx.axis.dot(p) * p;
  const Vec3 er = rx.axis - rx.axis.dot(p) * p;
  const double nt = et.norm();
  const double nr = er.norm();
  if (nt < 1e-12 || nr < 1e-12) return 0.0;
  const double c = et.dot(er) / (nt * nr);
  return std::clamp(c * c, 0.0, 1.0);
}

} // namespace aam::antenna
