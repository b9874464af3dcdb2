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

#include "aamsim/localization.hpp"

#include <algorithm>
#include <cmath>

#include <Eigen/Cholesky>
#include <Eigen/Eigenvalues>
#include <Eigen/LU>

#include "aamsim/channel.hpp"
#include "aamsim/parallel.hpp"

namespace aam::localization {

std::string_view to_string(AntennaMode mode) {
  switch (mode) {
  case AntennaMode::siso: return "siso";
  case AntennaMode::miso: return "miso";
  case AntennaMode::mimo: return "mimo";
  }
  return "?";
}

AntennaMode parse_antenna_mode(std::string_view text) {
  if (text == "siso") return AntennaMode::siso;
  if (text == "miso") return AntennaMode::miso;
  if (text == "mimo") return AntennaMode::mimo;
  throw ValidationError("unknown antenna mode '" + std::string(text) + "' (siso|miso|mimo)");
}

std::vector<antenna::DipoleAntenna> uav_antennas(AntennaMode mode) {
  if (mode == AntennaMode::mimo) return {{Vec3::UnitZ()}, {Vec3::UnitY()}};
  return {{Vec3::UnitZ()}};
}

std::vector<antenna::DipoleAntenna> sensor_antennas(AntennaMode mode) {
  if (mode == AntennaMode::siso) return {{Vec3::UnitZ()}};
  return {{Vec3::UnitZ()}, {Vec3::UnitY()}};
}

SensorConstellation SensorConstellation::make(double dx, double dy, AntennaMode mode) {
  require(dx > 0.0 && dy > 0.0, "SensorConstellation: dx and dy must be positive");
  SensorConstellation c;
  c.dx = dx;
  c.dy = dy;
  c.mode = mode;
  c.sensors = {Vec3{dx / 2, dy / 2, 0.0}, Vec3{-dx / 2, dy / 2, 0.0}, Vec3{-dx / 2, -dy / 2, 0.0},
               Vec3{dx / 2, -dy / 2, 0.0}};
  return c;
}

void UavRadioParams::validate() const {
  require(bandwidth_hz > 0.0, "UavRadioParams: bandwidth must be positive");
  require(carrier_hz > 0.0, "UavRadioParams: carrier must be positive");
}

double UavRadioParams::noise_power_dbm() const {
  channel::LinkBudgetParams p;
  p.bandwidth_hz = bandwidth_hz;
  p.noise_figure_db = noise_figure_db;
  return channel::noise_power_dbm(p);
}

LinkSnr link_snr(const Vec3& uav, const Vec3& sensor, AntennaMode mode, const UavRadioParams& params) {
  const auto tx = uav_antennas(mode);
  const auto rx = sensor_antennas(mode);
  const Vec3 delta = sensor - uav;
  const double d = delta.norm();
  require(d > 0.0, "link_snr: UAV and sensor coincide");
  const Vec3 dir = delta / d;

  double p_tx_dbm = params.tx_power_dbm;
  if (params.split_tx_power) p_tx_dbm -= linear_to_db(static_cast<double>(tx.size()));
  const double budget =
      db_to_linear(p_tx_dbm - channel::fspl_db(d, params.carrier_hz) - params.noise_power_dbm());

  LinkSnr out;
  out.branch.reserve(tx.size() * rx.size());
  for (const auto& a : tx) {
    const double g_tx = antenna::dipole_gain_linear(a, dir);
    for (const auto& b : rx) {
      const double g_rx = antenna::dipole_gain_linear(b, -dir);
      const double snr = budget * g_tx * g_rx * antenna::polarization_match(a, b, dir);
      out.branch.push_back(snr);
      out.combined += snr;
    }
  }
  return out;
}

double toa_variance(double snr_linear, const UavRadioParams& params) {
  require(snr_linear >= 0.0, "toa_variance: SNR must be non-negative");
  if (snr_linear <= 0.0) return std::numeric_limits<double>::infinity();
  return 1.0 / (8.0 * kPi * kPi * params.effective_bandwidth_sq() * snr_linear);
}

CrlbResult tdoa_fim_from_variances(const Vec3& point, std::span<const Vec3> sensors,
                                   std::span<const double> toa_variance_s2, int reference) {
  require(sensors.size() == toa_variance_s2.size(), "tdoa_fim: sensor/variance size mismatch");
  require(reference >= 0 && reference < static_cast<int>(sensors.size()),
          "tdoa_fim: reference sensor out of range");
  require(std::isfinite(toa_variance_s2[reference]), "tdoa_fim: reference link is unusable");

  std::vector<int> others;
  for (int i = 0; i < static_cast<int>(sensors.size()); ++i) {
    if (i != reference && std::isfinite(toa_variance_s2[i])) others.push_back(i);
  }
  require(others.size() + 1 >= 4, "tdoa_fim: fewer than 4 usable sensors");

  const auto unit_from = [&](int i) -> Vec3 { return (point - sensors[i]).normalized(); };
  const Vec3 ur = unit_from(reference);
  const Eigen::Index m = static_cast<Eigen::Index>(others.size());
  Eigen::MatrixXd h(m, 3);
  Eigen::MatrixXd q = Eigen::MatrixXd::Constant(m, m, toa_variance_s2[reference]);
  for (Eigen::Index r = 0; r < m; ++r) {
    h.row(r) = ((unit_from(others[r]) - ur) / kSpeedOfLight).transpose();
    q(r, r) += toa_variance_s2[others[r]];
  }

  CrlbResult res;
  res.point = point;
  res.reference = reference;
  res.fim = h.transpose() * q.ldlt().solve(h);
  res.fim = 0.5 * (res.fim + res.fim.transpose());

  const Eigen::SelfAdjointEigenSolver<Eigen::Matrix3d> eig(res.fim, Eigen::EigenvaluesOnly);
  const auto ev = eig.eigenvalues();
  res.observable = ev.maxCoeff() > 0.0 && ev.minCoeff() >= kObservabilityRatio * ev.maxCoeff();
  if (res.observable) res.rmse_m = std::sqrt(res.fim.inverse().trace());
  return res;
}

int usable_links(const Vec3& point, const SensorConstellation& c, const UavRadioParams& params) {
  int n = 0;
  for (const auto& s : c.sensors) {
    if (link_snr(point, s, c.mode, params).combined > 0.0) ++n;
  }
  return n;
}

CrlbResult tdoa_fim(const Vec3& point, const SensorConstellation& c, const UavRadioParams& params,
                    int reference) {
  std::array<double, 4> var{};
  std::vector<double> snr_db;
  for (std::size_t i = 0; i < c.sensors.size(); ++i) {
    const double snr = link_snr(point, c.sensors[i], c.mode, params).combined;
    var[i] = toa_variance(snr, params);
    snr_db.push_back(snr > 0.0 ? linear_to_db(snr) : -std::numeric_limits<double>::infinity());
  }
  if (reference < 0) {
    for (int i = 0; i < 4; ++i) {
      if (std::isfinite(var[i])) {
        reference = i;
        break;
      }
    }
    require(reference >= 0, "tdoa_fim: fewer than 4 usable sensors");
  }
  CrlbResult res = tdoa_fim_from_variances(point, c.sensors, var, reference);
  res.snr_db = std::move(snr_db);
  return res;
}

double SlicePoints::cdf(double delta_m) const {
  std::size_t hit = 0;
  std::size_t total = 0;
  for (std::size_t i = 0; i < rmse_m.size(); ++i) {
    if (!observable[i]) continue;
    ++total;
    if (rmse_m[i] <= delta_m) ++hit;
  }
  return total == 0 ? 0.0 : static_cast<double>(hit) / static_cast<double>(total);
}

double SlicePoints::median() const {
  std::vector<double> v;
  for (std::size_t i = 0; i < rmse_m.size(); ++i) {
    if (observable[i]) v.push_back(rmse_m[i]);
  }
  require(!v.empty(), "median: no observable points");
  std::sort(v.begin(), v.end());
  const std::size_t n = v.size();
  return n % 2 == 1 ? v[n / 2] : 0.5 * (v[n / 2 - 1] + v[n / 2]);
}

SweepResult corridor_sweep(double dx, double dy, std::span<const double> heights_m, AntennaMode mode,
                           const UavRadioParams& params, double spacing_m, int jobs) {
  require(spacing_m > 0.0, "corridor_sweep: spacing must be positive");
  params.validate();
  const SensorConstellation c = SensorConstellation::make(dx, dy, mode);
  const int nx = std::max(1, static_cast<int>(std::lround(dx / spacing_m)));
  const int ny = std::max(1, static_cast<int>(std::lround(dy / spacing_m)));
  const double sx = dx / nx;
  const double sy = dy / ny;

  SweepResult out;
  out.dx = dx;
  out.dy = dy;
  out.mode = mode;
  for (double h : heights_m) {
    require(h > 0.0, "corridor_sweep: heights must be positive");
    SlicePoints slice;
    slice.height_m = h;
    for (int iy = 0; iy < ny; ++iy) {
      for (int ix = 0; ix < nx; ++ix) {
        slice.points.emplace_back(-dx / 2 + (ix + 0.5) * sx, -dy / 2 + (iy + 0.5) * sy, h);
      }
    }
    const std::size_t n = slice.points.size();
    slice.rmse_m.assign(n, std::numeric_limits<double>::infinity());
    std::vector<char> obs(n, 0);
    parallel_for(n, jobs, [&](std::size_t i) {
      if (usable_links(slice.points[i], c, params) < 4) return;
      const CrlbResult r = tdoa_fim(slice.points[i], c, params);
      obs[i] = r.observable ? 1 : 0;
      slice.rmse_m[i] = r.rmse_m;
    });
    slice.observable.assign(obs.begin(), obs.end());
    slice.unobservable = static_cast<std::size_t>(std::count(obs.begin(), obs.end(), 0));
    if (slice.unobservable == n) {
      throw std::runtime_error("corridor_sweep: every point of the slice is unobservable");
    }
    out.slices.push_back(std::move(slice));
  }
  return out;
}

Vec3 gauss_newton_tdoa(std::span<const Vec3> sensors, int reference, const Eigen::VectorXd& range_diff,
                       const Eigen::MatrixXd& cov, const Vec3& initial, int max_iterations) {
  std::vector<int> others;
  for (int i = 0; i < static_cast<int>(sensors.size()); ++i) {
    if (i != reference) others.push_back(i);
  }
  const Eigen::Index m = static_cast<Eigen::Index>(others.size());
  require(range_diff.size() == m && cov.rows() == m && cov.cols() == m,
          "gauss_newton_tdoa: measurement dimension mismatch");
  const Eigen::LDLT<Eigen::MatrixXd> wsolve(cov);

  // Weighted residual and Jacobian at q. Returns the cost r^T C^-1 r.
  Eigen::MatrixXd j(m, 3);
  Eigen::VectorXd resid(m);
  const auto linearize = [&](const Vec3& q, bool with_jacobian) {
    const Vec3 vr = q - sensors[reference];
    const double dr = vr.norm();
    for (Eigen::Index r = 0; r < m; ++r) {
      const Vec3 vi = q - sensors[others[r]];
      const double di = vi.norm();
      resid(r) = range_diff(r) - (di - dr);
      if (with_jacobian) j.row(r) = (vi / di - vr / dr).transpose();
    }
    return resid.dot(wsolve.solve(resid));
  };

  Vec3 p = initial;
  double cost = linearize(p, true);
  for (int it = 0; it < max_iterations; ++it) {
    const Eigen::Matrix3d normal = j.transpose() * wsolve.solve(j);
    const Vec3 step = normal.ldlt().solve(j.transpose() * wsolve.solve(resid));
    if (!step.allFinite()) break;
    // Backtrack until the cost stops increasing; plain Gauss-Newton overshoots
    // along the poorly conditioned vertical direction.
    double t = 1.0;
    Vec3 trial = p + step;
    double trial_cost = linearize(trial, false);
    while (!(trial_cost <= cost) && t > 1e-6) {
      t *= 0.5;
      trial = p + t * step;
      trial_cost = linearize(trial, false);
    }
    if (!(trial_cost <= cost)) break;
    p = trial;
    cost = linearize(p, true);
    if (t * step.norm() < 1e-10) break;
  }
  return p;
}

MonteCarloResult monte_carlo_rmse(const Vec3& point, const SensorConstellation& c,
                                  const UavRadioParams& params, std::size_t trials, Rng& rng) {
  std::vector<Vec3> sensors;
  std::vector<double> sigma_m;
  for (const auto& s : c.sensors) {
    const double var = toa_variance(link_snr(point, s, c.mode, params).combined, params);
    if (!std::isfinite(var)) continue;
    sensors.push_back(s);
    sigma_m.push_back(std::sqrt(var) * kSpeedOfLight);
  }
  require(sensors.size() >= 4, "monte_carlo_rmse: fewer than 4 usable sensors");

  const int ref = 0;
  const Eigen::Index m = static_cast<Eigen::Index>(sensors.size()) - 1;
  Eigen::MatrixXd cov = Eigen::MatrixXd::Constant(m, m, sigma_m[ref] * sigma_m[ref]);
  for (Eigen::Index r = 0; r < m; ++r) cov(r, r) += sigma_m[r + 1] * sigma_m[r + 1];

  std::vector<double> true_range;
  for (const auto& s : sensors) true_range.push_back((point - s).norm());

  std::normal_distribution<double> normal(0.0, 1.0);
  std::vector<double> meas(sensors.size());
  Eigen::VectorXd z(m);
  double sq = 0.0;
  for (std::size_t t = 0; t < trials; ++t) {
    for (std::size_t i = 0; i < sensors.size(); ++i) meas[i] = true_range[i] + sigma_m[i] * normal(rng);
    for (Eigen::Index r = 0; r < m; ++r) z(r) = meas[r + 1] - meas[ref];
    const Vec3 est = gauss_newton_tdoa(sensors, ref, z, cov, point);
    sq += (est - point).squaredNorm();
  }
  return {std::sqrt(sq / static_cast<double>(trials)), trials};
}

} // namespace aam::localization
