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

#include <optional>
#include <span>
#include <vector>

#include "aamsim/antenna.hpp"
#include "aamsim/channel.hpp"
#include "aamsim/common.hpp"

namespace aam::scenario {

// Flat-topped regular hexagon: one vertex pair on the x-axis, neighbouring cell
// centres at 30 + 60k degrees.
struct Hexagon {
  Vec2 center = Vec2::Zero();
  double circumradius = 1.0;

  double inradius() const { return circumradius * std::sqrt(3.0) / 2.0; }
  // Outward unit normal of edge k (k = 0..5).
  static Vec2 edge_normal(int k);
  // Signed margin to the nearest edge: >= 0 inside, < 0 outside.
  double margin(const Vec2& p) const;
  bool contains(const Vec2& p, double tol = 1e-9) const { return margin(p) >= -tol; }
};

struct CellSite {
  int id = 0;
  int tier = 0;
  Vec3 position = Vec3::Zero();
  double downtilt_deg = 6.0;
  std::optional<double> uptilt_deg;

  bool has_uptilt_panel() const { return uptilt_deg.has_value(); }
};

struct NetworkLayout {
  double isd = 1000.0;
  int tiers = 2;
  double carrier_hz = 2.0e9;
  double bs_power_dbm = 46.0;
  double bs_height_m = 25.0;
  std::vector<CellSite> sites;

  // Hexagon of the centre cell (site 0).
  Hexagon center_cell() const { return Hexagon{Vec2::Zero(), isd / std::sqrt(3.0)}; }
};

struct LayoutOptions {
  double bs_height_m = 25.0;
  double downtilt_deg = 6.0;
  double carrier_hz = 2.0e9;
  double bs_power_dbm = 46.0;
};

// Sites ordered by ring, then by polar angle starting from the +x axis.
NetworkLayout build_hex_layout(double isd, int tiers, const LayoutOptions& opts = {});

// Sets every site's uptilt panel from `uptilts_deg` (one angle per site).
void set_uptilts(NetworkLayout& layout, std::span<const double> uptilts_deg);
void clear_uptilts(NetworkLayout& layout);

struct GridIndex {
  int ix = 0;
  int iy = 0;
};

// Constant-height slice of the centre cell sampled on a square lattice with a
// half-spacing offset, so no point sits on the x or y axis.
struct EvaluationGrid {
  double height_m = 0.0;
  double spacing_m = 0.0;
  std::vector<Vec3> points;
  std::vector<GridIndex> index; // lattice coordinates, parallel to `points`

  std::size_t size() const { return points.size(); }
};

EvaluationGrid build_grid(const NetworkLayout& layout, double height_m, double spacing_m);

// Spacing used when none is configured: 25 m at ISD 1000, 50 m at ISD 2000.
inline double default_grid_spacing(double isd) { return isd / 40.0; }

// Everything one coverage evaluation needs.
struct Scenario {
  NetworkLayout layout;
  antenna::UlaPanel panel; // pattern template; tilt is taken from each site
  channel::LinkBudgetParams link;
  EvaluationGrid grid;

  // Link parameters with carrier and transmit power taken from the layout.
  channel::LinkBudgetParams bs_link() const;
  antenna::UlaPanel downtilt_panel(const CellSite& site) const;
  antenna::UlaPanel uptilt_panel(const CellSite& site) const;
};

} // namespace aam::scenario
