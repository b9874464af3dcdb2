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

#include "aamsim/scenario.hpp"

#include <algorithm>
#include <cstdlib>
#include <limits>

namespace aam::scenario {

Vec2 Hexagon::edge_normal(int k) {
  const double a = deg_to_rad(30.0 + 60.0 * k);
  return {std::cos(a), std::sin(a)};
}

double Hexagon::margin(const Vec2& p) const {
  const Vec2 d = p - center;
  double worst = -std::numeric_limits<double>::infinity();
  for (int k = 0; k < 6; ++k) worst = std::max(worst, edge_normal(k).dot(d));
  return inradius() - worst;
}

NetworkLayout build_hex_layout(double isd, int tiers, const LayoutOptions& opts) {
  require(isd > 0.0, "build_hex_layout: isd must be positive");
  require(tiers == 1 || tiers == 2, "build_hex_layout: tiers must be 1 or 2");
  require(opts.downtilt_deg >= 0.0 && opts.downtilt_deg <= 90.0,
          "build_hex_layout: downtilt must lie in [0, 90] deg");
  require(opts.bs_height_m > 0.0, "build_hex_layout: BS height must be positive");

  NetworkLayout layout;
  layout.isd = isd;
  layout.tiers = tiers;
  layout.carrier_hz = opts.carrier_hz;
  layout.bs_power_dbm = opts.bs_power_dbm;
  layout.bs_height_m = opts.bs_height_m;

  // Axial lattice with basis vectors at 30 and 90 degrees.
  const Vec2 a = isd * Vec2{std::cos(deg_to_rad(30.0)), std::sin(deg_to_rad(30.0))};
  const Vec2 b = isd * Vec2{0.0, 1.0};

  struct Candidate {
    int ring;
    double angle;
    Vec2 xy;
  };
  std::vector<Candidate> cands;
  for (int q = -tiers; q <= tiers; ++q) {
    for (int r = -tiers; r <= tiers; ++r) {
      const int ring = (std::abs(q) + std::abs(r) + std::abs(q + r)) / 2;
      if (ring > tiers) continue;
      const Vec2 xy = q * a + r * b;
      double ang = ring == 0 ? 0.0 : std::atan2(xy.y(), xy.x());
      if (ang < -1e-12) ang += 2.0 * kPi;
      cands.push_back({ring, std::max(ang, 0.0), xy});
    }
  }
  std::sort(cands.begin(), cands.end(), [](const Candidate& l, const Candidate& r) {
    if (l.ring != r.ring) return l.ring < r.ring;
    return l.angle < r.angle;
  });

  layout.sites.reserve(cands.size());
  for (std::size_t i = 0; i < cands.size(); ++i) {
    CellSite s;
    s.id = static_cast<int>(i);
    s.tier = cands[i].ring;
    s.position = Vec3{cands[i].xy.x(), cands[i].xy.y(), opts.bs_height_m};
    s.downtilt_deg = opts.downtilt_deg;
    layout.sites.push_back(s);
  }
  return layout;
}

void set_uptilts(NetworkLayout& layout, std::span<const double> uptilts_deg) {
  require(uptilts_deg.size() == layout.sites.size(),
          "set_uptilts: need exactly one uptilt angle per site");
  for (std::size_t i = 0; i < uptilts_deg.size(); ++i) {
    const double u = uptilts_deg[i];
    require(u >= 0.0 && u <= 90.0, "set_uptilts: uptilt must lie in [0, 90] deg");
    layout.sites[i].uptilt_deg = u;
  }
}

void clear_uptilts(NetworkLayout& layout) {
  for (auto& s : layout.sites) s.uptilt_deg.reset();
}

EvaluationGrid build_grid(const NetworkLayout& layout, double height_m, double spacing_m) {
  require(spacing_m > 0.0, "build_grid: spacing must be positive");
  require(height_m > 0.0, "build_grid: height must be positive");

  const Hexagon hex = layout.center_cell();
  EvaluationGrid grid;
  grid.height_m = height_m;
  grid.spacing_m = spacing_m;

  const int m = static_cast<int>(std::ceil(hex.circumradius / spacing_m)) + 1;
  for (int iy = -m; iy < m; ++iy) {
    for (int ix = -m; ix < m; ++ix) {
      const Vec2 p{(ix + 0.5) * spacing_m, (iy + 0.5) * spacing_m};
      if (hex.margin(p) <= 1e-9) continue;
      grid.points.emplace_back(p.x(), p.y(), height_m);
      grid.index.push_back({ix, iy});
    }
  }
  require(!grid.points.empty(), "build_grid: spacing leaves no point inside the centre cell");
  return grid;
}

channel::LinkBudgetParams Scenario::bs_link() const {
  channel::LinkBudgetParams p = link;
  p.carrier_hz = layout.carrier_hz;
  p.tx_power_dbm = layout.bs_power_dbm;
  return p;
}

antenna::UlaPanel Scenario::downtilt_panel(const CellSite& site) const {
  antenna::UlaPanel p = panel;
  p.tilt_deg = site.downtilt_deg;
  return p;
}

antenna::UlaPanel Scenario::uptilt_panel(const CellSite& site) const {
  require(site.has_uptilt_panel(), "uptilt_panel: site has no uptilt panel");
  antenna::UlaPanel p = panel;
  p.tilt_deg = -*site.uptilt_deg;
  return p;
}

} // namespace aam::scenario
