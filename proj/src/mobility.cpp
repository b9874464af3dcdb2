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

#include <algorithm>
#include <cmath>
#include <limits>

#include "aamsim/parallel.hpp"

namespace aam::mobility {

void HandoverParams::validate() const {
  require(ttt_s > 0.0, "HandoverParams: TTT must be positive");
  require(hom_db > 0.0, "HandoverParams: HOM must be positive");
}

void TrajectoryConfig::validate(const HandoverParams& ho) const {
  require(height_m > 0.0, "TrajectoryConfig: height must be positive");
  require(speed_kmph > 0.0, "TrajectoryConfig: speed must be positive");
  require(step_s > 0.0 && step_s <= ho.ttt_s + 1e-12, "TrajectoryConfig: need 0 < step <= TTT");
  const double ratio = window_s / step_s;
  require(window_s > 0.0 && std::abs(ratio - std::round(ratio)) < 1e-6,
          "TrajectoryConfig: window must be an integral number of steps");
  require(n_windows >= 1, "TrajectoryConfig: need at least one window");
  require(n_flights >= 1, "TrajectoryConfig: need at least one flight");
  require(sf_sigma_db >= 0.0, "TrajectoryConfig: shadowing sigma must be non-negative");
  require(std::abs(sf_ar_coefficient) < 1.0, "TrajectoryConfig: |AR coefficient| must be < 1");
  require(sf_correlation_distance_m >= 0.0,
          "TrajectoryConfig: correlation distance must be non-negative");
}

std::int64_t TrajectoryConfig::steps_per_window() const {
  return static_cast<std::int64_t>(std::llround(window_s / step_s));
}

double TrajectoryConfig::per_step_ar_coefficient() const {
  if (sf_correlation_distance_m <= 0.0) return sf_ar_coefficient;
  const double travelled = speed_mps() * step_s;
  return std::copysign(std::pow(std::abs(sf_ar_coefficient), travelled / sf_correlation_distance_m),
                       sf_ar_coefficient);
}

bool step_trajectory(AvState& state, const scenario::Hexagon& cell, double displacement_m, Rng& rng) {
  const Vec2 dir{std::cos(state.heading_rad), std::sin(state.heading_rad)};
  const Vec2 target = state.position + displacement_m * dir;
  if (cell.margin(target) > 0.0) {
    state.position = target;
    return false;
  }

  // Leave through the first edge crossed by the segment.
  double t_exit = 1.0;
  int edge = 0;
  const Vec2 rel = state.position - cell.center;
  for (int k = 0; k < 6; ++k) {
    const Vec2 n = scenario::Hexagon::edge_normal(k);
    const double rate = displacement_m * n.dot(dir);
    if (rate <= 0.0) continue;
    const double t = (cell.inradius() - n.dot(rel)) / rate;
    if (t < t_exit) {
      t_exit = t;
      edge = k;
    }
  }
  const double pull_in = 1e-9 * cell.circumradius;
  const Vec2 normal = scenario::Hexagon::edge_normal(edge);
  Vec2 hit = state.position + std::max(t_exit, 0.0) * displacement_m * dir - pull_in * normal;
  if (cell.margin(hit) <= 0.0) hit = state.position;

  const double inward = std::atan2(-normal.y(), -normal.x());
  std::uniform_real_distribution<double> spread(-0.5 * kPi, 0.5 * kPi);
  double heading = inward;
  for (int tries = 0; tries < 64; ++tries) {
    heading = inward + spread(rng);
    const Vec2 probe = hit + 1e-6 * cell.circumradius * Vec2{std::cos(heading), std::sin(heading)};
    if (cell.margin(probe) > 0.0) break;
  }
  state.position = hit;
  state.heading_rad = heading;
  return true;
}

AvState random_start(const scenario::Hexagon& cell, Rng& rng) {
  std::uniform_real_distribution<double> ux(-cell.circumradius, cell.circumradius);
  std::uniform_real_distribution<double> uy(-cell.inradius(), cell.inradius());
  std::uniform_real_distribution<double> uh(0.0, 2.0 * kPi);
  AvState s;
  do {
    s.position = cell.center + Vec2{ux(rng), uy(rng)};
  } while (cell.margin(s.position) <= 0.0);
  s.heading_rad = uh(rng);
  return s;
}

HoEvent ho_machine_step(HoMachine& m, std::span<const double> rsrp_db, const HandoverParams& params) {
  require(!rsrp_db.empty(), "ho_machine_step: empty RSRP vector");
  HoEvent ev;
  const auto argmax_excluding = [&](int skip) {
    int best = -1;
    for (int k = 0; k < static_cast<int>(rsrp_db.size()); ++k) {
      if (k == skip) continue;
      if (best < 0 || rsrp_db[k] > rsrp_db[best]) best = k;
    }
    return best;
  };

  if (m.serving < 0) {
    m.serving = argmax_excluding(-1);
    ++m.step;
    return ev;
  }

  const int neighbour = argmax_excluding(m.serving);
  const bool a3 = neighbour >= 0 && rsrp_db[neighbour] > rsrp_db[m.serving] + params.hom_db;
  if (!a3) {
    m.a3_start = -1;
  } else if (m.a3_start < 0) {
    m.a3_start = m.step;
    ev.kind = HoEventKind::a3_started;
    ev.target = neighbour;
  } else if (static_cast<double>(m.step - m.a3_start) * m.step_s >= params.ttt_s - 1e-9) {
    m.serving = neighbour;
    m.a3_start = -1;
    ++m.handovers;
    ev.kind = HoEventKind::handover;
    ev.target = neighbour;
  }
  ++m.step;
  return ev;
}

HoCountPmf make_pmf(std::vector<std::size_t> window_counts) {
  require(!window_counts.empty(), "make_pmf: no windows");
  HoCountPmf pmf;
  const std::size_t max_h = *std::max_element(window_counts.begin(), window_counts.end());
  std::vector<std::size_t> hist(max_h + 1, 0);
  double sum = 0.0;
  for (std::size_t h : window_counts) {
    ++hist[h];
    sum += static_cast<double>(h);
  }
  const double n = static_cast<double>(window_counts.size());
  pmf.mean = sum / n;
  double ss = 0.0;
  for (std::size_t h : window_counts) {
    const double d = static_cast<double>(h) - pmf.mean;
    ss += d * d;
  }
  pmf.variance = ss / n;
  pmf.probability.resize(hist.size());
  for (std::size_t h = 0; h < hist.size(); ++h) {
    pmf.probability[h] = static_cast<double>(hist[h]) / n;
  }
  pmf.window_counts = std::move(window_counts);
  return pmf;
}

namespace {

struct PanelLink {
  Vec3 position;
  antenna::UlaPanel panel;
};

std::vector<std::size_t> fly(const scenario::Scenario& scn, const std::vector<PanelLink>& links,
                             const TrajectoryConfig& traj, const HandoverParams& params,
                             std::int64_t n_windows, std::uint64_t seed, std::uint64_t flight) {
  Rng rng = make_stream(seed, "mobility", flight);
  const scenario::Hexagon cell = scn.layout.center_cell();
  const channel::LinkBudgetParams link = scn.bs_link();
  const double step_m = traj.speed_mps() * traj.step_s;
  const std::int64_t per_window = traj.steps_per_window();

  AvState av = random_start(cell, rng);
  channel::ShadowFadingProcess sf(links.size(), traj.sf_sigma_db, traj.per_step_ar_coefficient(), rng);
  HoMachine machine;
  machine.step_s = traj.step_s;

  std::vector<double> rsrp(links.size());
  std::vector<std::size_t> counts(static_cast<std::size_t>(n_windows), 0);
  for (std::int64_t w = 0; w < n_windows; ++w) {
    for (std::int64_t k = 0; k < per_window; ++k) {
      const Vec3 uav{av.position.x(), av.position.y(), traj.height_m};
      for (std::size_t l = 0; l < links.size(); ++l) {
        const auto& pl = links[l];
        const channel::RayGeometry geo = channel::ray_geometry(pl.position, uav);
        const double gd = db_to_linear(antenna::ula_gain_db(pl.panel, geo.tx_direct_elev_deg));
        const double gr = link.ground_reflection_enabled
                              ? db_to_linear(antenna::ula_gain_db(pl.panel, geo.tx_reflected_elev_deg))
                              : 0.0;
        rsrp[l] = channel::combine_two_ray_dbm(geo, gd, 1.0, gr, 1.0, link) + sf.value(l);
      }
      if (ho_machine_step(machine, rsrp, params).kind == HoEventKind::handover) ++counts[w];
      step_trajectory(av, cell, step_m, rng);
      for (std::size_t l = 0; l < links.size(); ++l) sf.step(l, rng);
    }
  }
  return counts;
}

} // namespace

HoCountPmf run_mobility_study(const scenario::Scenario& scn, const TrajectoryConfig& traj,
                              const HandoverParams& params, std::uint64_t seed, int jobs) {
  params.validate();
  traj.validate(params);

  std::vector<PanelLink> links;
  for (const auto& site : scn.layout.sites) {
    links.push_back({site.position, scn.downtilt_panel(site)});
    if (traj.include_uptilt_panels && site.has_uptilt_panel()) {
      links.push_back({site.position, scn.uptilt_panel(site)});
    }
  }

  const auto flights = static_cast<std::size_t>(traj.n_flights);
  const std::int64_t base = traj.n_windows / traj.n_flights;
  const std::int64_t extra = traj.n_windows % traj.n_flights;
  std::vector<std::vector<std::size_t>> per_flight(flights);
  parallel_for(flights, jobs, [&](std::size_t f) {
    const std::int64_t n = base + (static_cast<std::int64_t>(f) < extra ? 1 : 0);
    if (n > 0) per_flight[f] = fly(scn, links, traj, params, n, seed, f);
  });

  std::vector<std::size_t> all;
  all.reserve(static_cast<std::size_t>(traj.n_windows));
  for (auto& v : per_flight) all.insert(all.end(), v.begin(), v.end());
  HoCountPmf pmf = make_pmf(std::move(all));
  pmf.isd = scn.layout.isd;
  pmf.height_m = traj.height_m;
  pmf.speed_kmph = traj.speed_kmph;
  return pmf;
}

} // namespace aam::mobility
