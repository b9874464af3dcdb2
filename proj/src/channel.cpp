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

#include <algorithm>

namespace aam::channel {

void LinkBudgetParams::validate() const {
  require(carrier_hz > 0.0, "LinkBudgetParams: carrier must be positive");
  require(bandwidth_hz > 0.0, "LinkBudgetParams: bandwidth must be positive");
  require(std::abs(reflection_coefficient) <= 1.0 + 1e-12,
          "LinkBudgetParams: |reflection coefficient| must be <= 1");
  require(ground_relative_permittivity >= 1.0,
          "LinkBudgetParams: ground permittivity must be >= 1");
}

double fspl_db(double distance_m, double carrier_hz) {
  require(distance_m > 0.0, "fspl_db: distance must be positive");
  return 20.0 * std::log10(4.0 * kPi * distance_m * carrier_hz / kSpeedOfLight);
}

double noise_power_dbm(const LinkBudgetParams& params) {
  return -174.0 + 10.0 * std::log10(params.bandwidth_hz) + params.noise_figure_db;
}

RayGeometry ray_geometry(const Vec3& tx, const Vec3& rx) {
  RayGeometry g;
  g.horizontal_m = std::hypot(rx.x() - tx.x(), rx.y() - tx.y());
  const double dz = rx.z() - tx.z();
  const double sz = rx.z() + tx.z();
  g.direct_m = std::hypot(g.horizontal_m, dz);
  g.reflected_m = std::hypot(g.horizontal_m, sz);
  g.path_difference_m = 4.0 * tx.z() * rx.z() / (g.direct_m + g.reflected_m);
  g.tx_direct_elev_deg = rad_to_deg(std::atan2(dz, g.horizontal_m));
  g.rx_direct_elev_deg = rad_to_deg(std::atan2(-dz, g.horizontal_m));
  g.grazing_rad = std::atan2(sz, g.horizontal_m);
  g.tx_reflected_elev_deg = -rad_to_deg(g.grazing_rad);
  g.rx_reflected_elev_deg = g.tx_reflected_elev_deg;
  return g;
}

std::complex<double> reflection_coefficient(const LinkBudgetParams& params, double grazing_rad) {
  if (params.reflection_model == ReflectionModel::fixed) return params.reflection_coefficient;
  const double eps = params.ground_relative_permittivity;
  const double s = std::sin(grazing_rad);
  const double c = std::cos(grazing_rad);
  const double root = std::sqrt(eps - c * c);
  return {(eps * s - root) / (eps * s + root), 0.0};
}

double combine_two_ray_dbm(const RayGeometry& geo, double g_tx_direct, double g_rx_direct,
                           double g_tx_reflected, double g_rx_reflected,
                           const LinkBudgetParams& params) {
  const double lambda = params.wavelength_m();
  const double k0 = lambda / (4.0 * kPi);
  // Phase referenced to the direct ray; only the path difference matters.
  std::complex<double> field{std::sqrt(g_tx_direct * g_rx_direct) * k0 / geo.direct_m, 0.0};
  if (params.ground_reflection_enabled) {
    const double amp = std::sqrt(g_tx_reflected * g_rx_reflected) * k0 / geo.reflected_m;
    const double phase = -2.0 * kPi * geo.path_difference_m / lambda;
    field += reflection_coefficient(params, geo.grazing_rad) * std::polar(amp, phase);
  }
  const double mag = std::abs(field);
  if (mag <= 0.0) return kPowerFloorDbm;
  return std::max(params.tx_power_dbm + 20.0 * std::log10(mag), kPowerFloorDbm);
}

ShadowFadingProcess::ShadowFadingProcess(std::size_t n_links, double sigma_db,
                                         double ar_coefficient, Rng& rng)
    : sigma_db_(sigma_db), a_(ar_coefficient), state_db_(n_links, 0.0) {
  require(sigma_db >= 0.0, "ShadowFadingProcess: sigma must be non-negative");
  require(std::abs(ar_coefficient) < 1.0, "ShadowFadingProcess: |a| must be < 1");
  innovation_sigma_ = std::sqrt(1.0 - a_ * a_) * sigma_db_;
  for (double& x : state_db_) x = sigma_db_ * normal_(rng);
}

double ShadowFadingProcess::step(std::size_t link_id, Rng& rng) {
  double& x = state_db_.at(link_id);
  x = a_ * x + innovation_sigma_ * normal_(rng);
  return x;
}

} // namespace aam::channel
