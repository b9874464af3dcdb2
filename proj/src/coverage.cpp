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

#include "aamsim/coverage.hpp"

#include <algorithm>
#include <unordered_map>

#include "aamsim/parallel.hpp"

namespace aam::coverage {

std::string_view to_string(PanelKind kind) { return kind == PanelKind::down ? "down" : "up"; }

std::map<int, std::size_t> CoverageMap::site_histogram() const {
  std::map<int, std::size_t> h;
  for (std::size_t p = 0; p < n_points(); ++p) ++h[serving_site(p)];
  return h;
}

std::map<int, std::size_t> CoverageMap::tier_histogram() const {
  std::map<int, std::size_t> h;
  for (std::size_t p = 0; p < n_points(); ++p) ++h[site_tier.at(serving_site(p))];
  return h;
}

std::size_t CoverageMap::count_served_by(int tier, PanelKind kind) const {
  std::size_t n = 0;
  for (std::size_t p = 0; p < n_points(); ++p) {
    if (site_tier.at(serving_site(p)) == tier && serving_kind(p) == kind) ++n;
  }
  return n;
}

std::vector<PanelRef> transmitting_panels(const scenario::NetworkLayout& layout) {
  std::vector<PanelRef> panels;
  for (const auto& s : layout.sites) {
    panels.push_back({s.id, PanelKind::down});
    if (s.has_uptilt_panel()) panels.push_back({s.id, PanelKind::up});
  }
  return panels;
}

double compute_rsrp(const Vec3& point, const scenario::CellSite& site, PanelKind kind,
                    const scenario::Scenario& scn) {
  const antenna::UlaPanel panel =
      kind == PanelKind::down ? scn.downtilt_panel(site) : scn.uptilt_panel(site);
  const auto bs_gain = [&panel](double elev) { return antenna::ula_gain_db(panel, elev); };
  const auto uav_gain = [](double) { return 0.0; };
  return channel::two_ray_rx_power_dbm(site.position, point, bs_gain, uav_gain, scn.bs_link());
}

CoverageMap associate(scenario::EvaluationGrid grid, std::vector<PanelRef> panels,
                      std::vector<int> site_tier, std::vector<double> rsrp_dbm) {
  const std::size_t np = panels.size();
  require(np > 0, "associate: no transmitting panels");
  require(rsrp_dbm.size() == grid.size() * np, "associate: RSRP matrix shape mismatch");

  // Ties are resolved by ordering, so sort panels by (site, kind) first.
  std::vector<std::size_t> order(np);
  for (std::size_t i = 0; i < np; ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (panels[a].site != panels[b].site) return panels[a].site < panels[b].site;
    return panels[a].kind == PanelKind::down && panels[b].kind == PanelKind::up;
  });

  CoverageMap map;
  map.serving_panel.resize(grid.size());
  map.sir_db.resize(grid.size());
  for (std::size_t p = 0; p < grid.size(); ++p) {
    const double* row = rsrp_dbm.data() + p * np;
    std::size_t best = order[0];
    for (std::size_t k = 1; k < np; ++k) {
      if (row[order[k]] > row[best]) best = order[k];
    }
    double interference_mw = 0.0;
    for (std::size_t k = 0; k < np; ++k) {
      if (k != best) interference_mw += db_to_linear(row[k]);
    }
    map.serving_panel[p] = static_cast<int>(best);
    map.sir_db[p] = np == 1 ? kNoInterferenceSir : row[best] - linear_to_db(interference_mw);
  }
  map.grid = std::move(grid);
  map.panels = std::move(panels);
  map.site_tier = std::move(site_tier);
  map.rsrp_dbm = std::move(rsrp_dbm);
  return map;
}

CoverageMap build_coverage_map(const scenario::Scenario& scn, int jobs) {
  std::vector<PanelRef> panels = transmitting_panels(scn.layout);
  const std::size_t np = panels.size();
  const auto& grid = scn.grid;

  std::vector<int> tiers;
  for (const auto& s : scn.layout.sites) tiers.push_back(s.tier);

  std::vector<double> rsrp(grid.size() * np);
  parallel_for(grid.size(), jobs, [&](std::size_t p) {
    for (std::size_t k = 0; k < np; ++k) {
      const auto& site = scn.layout.sites.at(panels[k].site);
      rsrp[p * np + k] = compute_rsrp(grid.points[p], site, panels[k].kind, scn);
    }
  });
  return associate(grid, std::move(panels), std::move(tiers), std::move(rsrp));
}

std::size_t count_regions(std::span<const scenario::GridIndex> cells, std::span<const int> labels) {
  require(cells.size() == labels.size(), "count_regions: size mismatch");
  const auto key = [](int ix, int iy) {
    return (static_cast<std::int64_t>(ix) << 32) ^ static_cast<std::uint32_t>(iy);
  };
  std::unordered_map<std::int64_t, std::size_t> at;
  at.reserve(cells.size() * 2);
  for (std::size_t i = 0; i < cells.size(); ++i) at.emplace(key(cells[i].ix, cells[i].iy), i);

  std::vector<bool> seen(cells.size(), false);
  std::vector<std::size_t> stack;
  std::size_t regions = 0;
  constexpr int dx[4] = {1, -1, 0, 0};
  constexpr int dy[4] = {0, 0, 1, -1};
  for (std::size_t start = 0; start < cells.size(); ++start) {
    if (seen[start]) continue;
    ++regions;
    seen[start] = true;
    stack.push_back(start);
    while (!stack.empty()) {
      const std::size_t cur = stack.back();
      stack.pop_back();
      for (int d = 0; d < 4; ++d) {
        auto it = at.find(key(cells[cur].ix + dx[d], cells[cur].iy + dy[d]));
        if (it == at.end()) continue;
        const std::size_t nb = it->second;
        if (!seen[nb] && labels[nb] == labels[cur]) {
          seen[nb] = true;
          stack.push_back(nb);
        }
      }
    }
  }
  return regions;
}

std::size_t fragmentation_index(const CoverageMap& map) {
  std::vector<int> labels(map.n_points());
  for (std::size_t p = 0; p < map.n_points(); ++p) labels[p] = map.serving_site(p);
  return count_regions(map.grid.index, labels);
}

double min_sir_db(const CoverageMap& map) {
  require(map.n_points() > 0, "min_sir_db: empty grid");
  double m = kNoInterferenceSir;
  for (double s : map.sir_db) {
    if (std::isfinite(s)) m = std::min(m, s);
  }
  return m;
}

} // namespace aam::coverage
