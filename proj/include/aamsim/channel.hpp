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

#include <complex>
#include <vector>

#include "aamsim/common.hpp"
#include "aamsim/rng.hpp"

namespace aam::channel {

// Received powers at exact two-ray nulls are clamped here instead of -inf.
inline constexpr double kPowerFloorDbm = -300.0;

enum class ReflectionModel {
  fixed,   // constant coefficient, -1 by default (perfectly conducting ground)
  fresnel, // vertical-polarization Fresnel coefficient for a lossless dielectric
};

struct LinkBudgetParams {
  double carrier_hz = 2.0e9;
  double tx_power_dbm = 46.0;
  double noise_figure_db = 7.0;
  double bandwidth_hz = 10.0e6;
  bool ground_reflection_enabled = true;
  ReflectionModel reflection_model = ReflectionModel::fresnel;
  std::complex<double> reflection_coefficient{-1.0, 0.0};
  double ground_relative_permittivity = 15.0;

  void validate() const;
  double wavelength_m() const { return kSpeedOfLight / carrier_hz; }
};

double fspl_db(double distance_m, double carrier_hz);

// Thermal noise: -174 dBm/Hz + 10 log10(B) + NF.
double noise_power_dbm(const LinkBudgetParams& params);

// Geometry of the direct and ground-bounced rays between two points above a
// flat ground at z = 0. Elevations are seen from each endpoint toward the
// arriving/departing ray (negative = toward ground).
struct RayGeometry {
  double horizontal_m = 0.0;
  double direct_m = 0.0;
  double reflected_m = 0.0;
  double path_difference_m = 0.0; // reflected - direct, computed without cancellation
  double tx_direct_elev_deg = 0.0;
  double tx_reflected_elev_deg = 0.0;
  double rx_direct_elev_deg = 0.0;
  double rx_reflected_elev_deg = 0.0;
  double grazing_rad = 0.0;
};

RayGeometry ray_geometry(const Vec3& tx, const Vec3& rx);

std::complex<double> reflection_coefficient(const LinkBudgetParams& params, double grazing_rad);

// Coherent sum of the two rays given linear antenna gains along each ray.
// Gains for the reflected ray are ignored when ground reflection is disabled.
double combine_two_ray_dbm(const RayGeometry& geo, double g_tx_direct, double g_rx_direct,
                           double g_tx_reflected, double g_rx_reflected,
                           const LinkBudgetParams& params);

// Received power of the two-ray link. tx_gain and rx_gain map an elevation in
// degrees to a gain in dBi, so the same callables serve either end.
template <class TxGain, class RxGain>
double two_ray_rx_power_dbm(const Vec3& tx, const Vec3& rx, TxGain&& tx_gain, RxGain&& rx_gain,
                            const LinkBudgetParams& params) {
  require(tx.z() > 0.0 && rx.z() > 0.0, "two_ray_rx_power_dbm: endpoints must be above ground");
  const RayGeometry geo = ray_geometry(tx, rx);
  const double gtd = db_to_linear(tx_gain(geo.tx_direct_elev_deg));
  const double grd = db_to_linear(rx_gain(geo.rx_direct_elev_deg));
  double gtr = 0.0;
  double grr = 0.0;
  if (params.ground_reflection_enabled) {
    gtr = db_to_linear(tx_gain(geo.tx_reflected_elev_deg));
    grr = db_to_linear(rx_gain(geo.rx_reflected_elev_deg));
  }
  return combine_two_ray_dbm(geo, gtd, grd, gtr, grr, params);
}

// Per-link AR(1) log-normal shadowing, x_{k+1} = a x_k + sqrt(1 - a^2) sigma w.
// Single owner; one instance per simulated trajectory.
class ShadowFadingProcess {
public:
  ShadowFadingProcess(std::size_t n_links, double sigma_db, double ar_coefficient, Rng& rng);

  double step(std::size_t link_id, Rng& rng);
  double value(std::size_t link_id) const { return state_db_.at(link_id); }
  std::size_t size() const { return state_db_.size(); }
  double sigma_db() const { return sigma_db_; }
  double ar_coefficient() const { return a_; }

private:
  double sigma_db_;
  double a_;
  double innovation_sigma_;
  std::vector<double> state_db_;
  std::normal_distribution<double> normal_{0.0, 1.0};
};

inline double sf_step(ShadowFadingProcess& proc, std::size_t link_id, Rng& rng) {
  return proc.step(link_id, rng);
}

} // namespace aam::channel
