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

#pragma once

#include "aamsim/common.hpp"

namespace aam::antenna {

// Vertical uniform linear array with electrical tilt. Omnidirectional in
// azimuth. Positive tilt steers the main lobe below the horizon; an uptilted
// panel is the same model with a negative tilt.
struct UlaPanel {
  int n_elements = 8;
  double element_spacing_wavelengths = 0.5;
  double tilt_deg = 6.0;
  double element_max_gain_dbi = 8.0;
  double side_lobe_floor_db = -30.0;

  void validate() const;
};

// Vertical-cut element pattern relative to its peak, in dB (<= 0):
// -min(12 (elevation / 65)^2, |floor|).
double element_pattern_db(const UlaPanel& panel, double elevation_deg);

// Normalized array factor |sum_n exp(j 2 pi n d (sin e - sin e_s))|^2 / N,
// evaluated with the closed-form Dirichlet kernel. Equals N at the steering
// angle e_s = -tilt.
double array_factor(const UlaPanel& panel, double elevation_deg);

// Same quantity by explicit complex summation. Slower; kept as a cross-check.
double array_factor_by_summation(const UlaPanel& panel, double elevation_deg);

// Total panel gain in dBi at the given elevation (negative = toward ground).
// Exact array nulls are floored at -300 dB so the result stays finite.
double ula_gain_db(const UlaPanel& panel, double elevation_deg);

struct DipoleAntenna {
  Vec3 axis = Vec3::UnitZ();
  double peak_gain_linear = 1.64;

  void validate() const;
};

// Half-wave dipole: g = G0 [cos((pi/2) cos psi) / sin psi]^2 with psi the angle
// between the dipole axis and `direction`. Zero along the axis.
double dipole_gain_linear(const DipoleAntenna& ant, const Vec3& direction);

// Polarization match |e_tx . e_rx|^2 where e_a is the unit transverse
// component of each dipole axis with respect to the propagation direction.
// Returns 0 when either axis is parallel to the path.
double polarization_match(const DipoleAntenna& tx, const DipoleAntenna& rx,
                          const Vec3& path_direction);

} // namespace aam::antenna
