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

#include <limits>
#include <map>
#include <span>
#include <string_view>
#include <vector>

#include "aamsim/scenario.hpp"

namespace aam::coverage {

enum class PanelKind { down, up };

std::string_view to_string(PanelKind kind);

struct PanelRef {
  int site = 0;
  PanelKind kind = PanelKind::down;
};

// Reported for points with no interferer at all; such points are skipped by
// min_sir_db().
inline constexpr double kNoInterferenceSir = std::numeric_limits<double>::infinity();

struct CoverageMap {
  scenario::EvaluationGrid grid;
  std::vector<PanelRef> panels;   // transmitting panels, ordered by (site, down before up)
  std::vector<int> site_tier;     // tier of each site id
  std::vector<double> rsrp_dbm;   // row-major [point][panel]
  std::vector<int> serving_panel; // index into `panels`, per point
  std::vector<double> sir_db;     // per point

  std::size_t n_points() const { return grid.size(); }
  double rsrp(std::size_t point, std::size_t panel) const {
    return rsrp_dbm[point * panels.size() + panel];
  }
  int serving_site(std::size_t point) const { return panels[serving_panel[point]].site; }
  PanelKind serving_kind(std::size_t point) const { return panels[serving_panel[point]].kind; }

  // site id -> number of points it serves
  std::map<int, std::size_t> site_histogram() const;
  // tier -> number of points served by a site of that tier
  std::map<int, std::size_t> tier_histogram() const;
  std::size_t count_served_by(int tier, PanelKind kind) const;
};

// Panels the layout transmits on: every site's downtilt panel plus its uptilt
// panel when present.
std::vector<PanelRef> transmitting_panels(const scenario::NetworkLayout& layout);

// RSRP of one panel at `point`: two-ray budget with the panel's ULA gain at the
// link elevation, isotropic UAV antenna.
double compute_rsrp(const Vec3& point, const scenario::CellSite& site, PanelKind kind,
                    const scenario::Scenario& scn);

// Highest-RSRP association over precomputed powers. Ties go to the lowest
// site id, then to the downtilt panel.
CoverageMap associate(scenario::EvaluationGrid grid, std::vector<PanelRef> panels,
                      std::vector<int> site_tier, std::vector<double> rsrp_dbm);

// Computes every panel's RSRP on the scenario grid and associates. Points are
// independent and evaluated on up to `jobs` threads.
CoverageMap build_coverage_map(const scenario::Scenario& scn, int jobs = 1);

// Number of maximal 4-connected lattice regions sharing one label.
std::size_t count_regions(std::span<const scenario::GridIndex> cells, std::span<const int> labels);

// Regions of equal serving site id over the grid lattice.
std::size_t fragmentation_index(const CoverageMap& map);

// Smallest finite SIR on the grid; +inf when every point lacks interferers.
double min_sir_db(const CoverageMap& map);

} // namespace aam::coverage
