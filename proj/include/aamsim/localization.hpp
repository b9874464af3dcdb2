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

#include <array>
#include <cstdint>
#include <limits>
#include <span>
#include <string_view>
#include <vector>

#include <Eigen/Core>

#include "aamsim/antenna.hpp"
#include "aamsim/rng.hpp"

namespace aam::localization {

// siso: z-dipole at both ends. miso: UAV z-dipole, sensors z + y pair.
// mimo: z + y pair at both ends.
enum class AntennaMode { siso, miso, mimo };

std::string_view to_string(AntennaMode mode);
AntennaMode parse_antenna_mode(std::string_view text);

std::vector<antenna::DipoleAntenna> uav_antennas(AntennaMode mode);
std::vector<antenna::DipoleAntenna> sensor_antennas(AntennaMode mode);

// Four ground sensors at (+-dx/2, +-dy/2, 0), numbered counter-clockwise from
// the (+, +) corner.
struct SensorConstellation {
  double dx = 1000.0;
  double dy = 1000.0;
  std::array<Vec3, 4> sensors;
  AntennaMode mode = AntennaMode::siso;

  static SensorConstellation make(double dx, double dy, AntennaMode mode);
};

struct UavRadioParams {
  double tx_power_dbm = 20.0;
  double bandwidth_hz = 10.0e6;
  double carrier_hz = 2.4e9;
  double noise_figure_db = 7.0;
  // Split the transmit power evenly across the UAV's dipoles.
  bool split_tx_power = false;

  void validate() const;
  // Mean-square bandwidth of a flat spectrum, B^2 / 12.
  double effective_bandwidth_sq() const { return bandwidth_hz * bandwidth_hz / 12.0; }
  double noise_power_dbm() const;
};

struct LinkSnr {
  std::vector<double> branch; // [tx antenna][rx antenna], row-major, linear
  double combined = 0.0;      // MRC: sum of branches
};

// SNR of the UAV -> sensor link with free-space loss, dipole gains and
// polarization match on every (tx, rx) dipole pair.
LinkSnr link_snr(const Vec3& uav, const Vec3& sensor, AntennaMode mode, const UavRadioParams& params);

// TOA variance 1 / (8 pi^2 beta^2 SNR) in s^2; +inf when SNR is zero.
double toa_variance(double snr_linear, const UavRadioParams& params);

struct CrlbResult {
  Vec3 point = Vec3::Zero();
  Eigen::Matrix3d fim = Eigen::Matrix3d::Zero(); // 1/m^2
  double rmse_m = std::numeric_limits<double>::infinity();
  bool observable = false;
  std::vector<double> snr_db; // per sensor, MRC-combined
  int reference = 0;
};

// Relative eigenvalue floor below which a FIM counts as singular.
inline constexpr double kObservabilityRatio = 1e-12;

// FIM of TDOA measurements formed against sensor `reference` from TOAs with
// the given variances. Links with infinite variance are dropped; at least
// four usable links are required.
CrlbResult tdoa_fim_from_variances(const Vec3& point, std::span<const Vec3> sensors,
                                   std::span<const double> toa_variance_s2, int reference = 0);

// Number of sensors whose link to `point` carries nonzero SNR.
int usable_links(const Vec3& point, const SensorConstellation& constellation,
                 const UavRadioParams& params);

// Full CRLB at one point. `reference` < 0 picks the first usable sensor.
CrlbResult tdoa_fim(const Vec3& point, const SensorConstellation& constellation,
                    const UavRadioParams& params, int reference = -1);

struct SlicePoints {
  double height_m = 0.0;
  std::vector<Vec3> points;
  std::vector<double> rmse_m; // +inf where unobservable
  std::vector<bool> observable;
  std::size_t unobservable = 0;

  // Fraction of observable points with RMSE <= delta.
  double cdf(double delta_m) const;
  double median() const;
};

struct SweepResult {
  double dx = 0.0;
  double dy = 0.0;
  AntennaMode mode = AntennaMode::siso;
  std::vector<SlicePoints> slices; // one per height, in input order
};

// Evaluates the CRLB on a half-offset lattice over the dx x dy slice at each
// height. Unobservable points are excluded from the CDF and median and counted.
SweepResult corridor_sweep(double dx, double dy, std::span<const double> heights_m, AntennaMode mode,
                           const UavRadioParams& params, double spacing_m = 25.0, int jobs = 1);

// Weighted Gauss-Newton TDOA solver. Measurements are range differences in
// metres against `reference`; `cov` is their covariance in m^2.
Vec3 gauss_newton_tdoa(std::span<const Vec3> sensors, int reference, const Eigen::VectorXd& range_diff,
                       const Eigen::MatrixXd& cov, const Vec3& initial, int max_iterations = 20);

struct MonteCarloResult {
  double rmse_m = 0.0;
  std::size_t trials = 0;
};

// Empirical RMSE of gauss_newton_tdoa on simulated Gaussian TOAs at `point`,
// initialised at the truth.
MonteCarloResult monte_carlo_rmse(const Vec3& point, const SensorConstellation& constellation,
                                  const UavRadioParams& params, std::size_t trials, Rng& rng);

} // namespace aam::localization
