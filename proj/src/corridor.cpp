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

#include "aamsim/corridor.hpp"

#include <algorithm>
#include <istream>
#include <map>
#include <optional>
#include <sstream>

namespace aam::corridor {

std::string_view to_string(Layer layer) {
  switch (layer) {
  case Layer::bottom: return "bottom";
  case Layer::middle: return "middle";
  case Layer::top: return "top";
  }
  return "?";
}

std::string_view to_string(Heading heading) {
  switch (heading) {
  case Heading::north: return "north";
  case Heading::south: return "south";
  case Heading::east: return "east";
  case Heading::west: return "west";
  case Heading::hover: return "hover";
  }
  return "?";
}

Layer parse_layer(std::string_view text) {
  if (text == "bottom" || text == "0") return Layer::bottom;
  if (text == "middle" || text == "1") return Layer::middle;
  if (text == "top" || text == "2") return Layer::top;
  throw ValidationError("unknown layer '" + std::string(text) + "'");
}

CorridorModel CorridorModel::with_intersection_period(int nx, int ny, int period) {
  require(period >= 1, "CorridorModel: intersection period must be >= 1");
  CorridorModel m;
  m.nx = nx;
  m.ny = ny;
  for (int i = 0; i < nx; i += period) {
    for (int j = 0; j < ny; j += period) m.intersections.insert({i, j});
  }
  return m;
}

void CorridorModel::validate() const {
  require(nx > 0 && ny > 0, "CorridorModel: grid extents must be positive");
  require(prism_dx_m > 0.0 && prism_dy_m > 0.0 && prism_dz_m > 0.0,
          "CorridorModel: prism dimensions must be positive");
  require(min_safety_distance_m >= 0.0, "CorridorModel: safety distance must be non-negative");
  for (const auto& [i, j] : intersections) {
    require(i >= 0 && i < nx && j >= 0 && j < ny, "CorridorModel: intersection outside the grid");
  }
}

bool CorridorModel::contains(const PrismId& p) const {
  if (p.i < 0 || p.i >= nx || p.j < 0 || p.j >= ny) return false;
  return p.layer != Layer::middle || is_intersection(p.i, p.j);
}

Vec3 CorridorModel::center(const PrismId& p) const {
  return {(p.i + 0.5) * prism_dx_m, (p.j + 0.5) * prism_dy_m,
          (static_cast<int>(p.layer) + 0.5) * prism_dz_m};
}

bool direction_for_layer(Layer layer, Heading heading, bool at_intersection) {
  switch (layer) {
  case Layer::top: return heading == Heading::north || heading == Heading::south;
  case Layer::bottom: return heading == Heading::east || heading == Heading::west;
  case Layer::middle: return heading == Heading::hover && at_intersection;
  }
  return false;
}

OccupancySchedule parse_schedule_csv(std::istream& in) {
  OccupancySchedule s;
  std::string line;
  int lineno = 0;
  bool header_seen = false;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.find_first_not_of(" \t") == std::string::npos) continue;
    std::vector<std::string> f;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) {
      const auto b = cell.find_first_not_of(" \t");
      const auto e = cell.find_last_not_of(" \t");
      f.push_back(b == std::string::npos ? "" : cell.substr(b, e - b + 1));
    }
    if (!header_seen) {
      header_seen = true;
      if (f == std::vector<std::string>{"t", "vehicle", "i", "j", "layer"}) continue;
      throw ValidationError("schedule line 1: expected header t,vehicle,i,j,layer");
    }
    if (f.size() != 5) {
      throw ValidationError("schedule line " + std::to_string(lineno) + ": expected 5 fields");
    }
    try {
      std::size_t used = 0;
      ScheduleEntry e;
      e.t = std::stoi(f[0], &used);
      if (used != f[0].size()) throw std::invalid_argument("t");
      e.vehicle = f[1];
      e.prism.i = std::stoi(f[2], &used);
      if (used != f[2].size()) throw std::invalid_argument("i");
      e.prism.j = std::stoi(f[3], &used);
      if (used != f[3].size()) throw std::invalid_argument("j");
      e.prism.layer = parse_layer(f[4]);
      if (e.vehicle.empty()) throw std::invalid_argument("vehicle");
      s.entries.push_back(std::move(e));
    } catch (const std::exception& ex) {
      throw ValidationError("schedule line " + std::to_string(lineno) + ": bad field (" +
                            ex.what() + ")");
    }
  }
  return s;
}

namespace {

using Snapshot = std::map<std::string, PrismId>; // vehicle -> prism at one time

std::map<int, Snapshot> index_schedule(const OccupancySchedule& schedule, const CorridorModel& model) {
  std::map<int, Snapshot> at;
  for (const auto& e : schedule.entries) {
    if (!model.contains(e.prism)) {
      throw ValidationError("schedule references unknown prism (" + std::to_string(e.prism.i) + ", " +
                            std::to_string(e.prism.j) + ", " + std::string(to_string(e.prism.layer)) +
                            ") at t=" + std::to_string(e.t));
    }
    auto [it, fresh] = at[e.t].emplace(e.vehicle, e.prism);
    if (!fresh && it->second != e.prism) {
      throw ValidationError("vehicle " + e.vehicle + " listed in two prisms at t=" + std::to_string(e.t));
    }
  }
  return at;
}

struct LanePos {
  Layer layer;
  int lane;
  int along;
};

std::optional<LanePos> lane_of(const PrismId& p) {
  if (p.layer == Layer::top) return LanePos{p.layer, p.i, p.j};
  if (p.layer == Layer::bottom) return LanePos{p.layer, p.j, p.i};
  return std::nullopt;
}

int sign(int v) { return (v > 0) - (v < 0); }

} // namespace

std::vector<Violation> validate_schedule(const OccupancySchedule& schedule, const CorridorModel& model) {
  model.validate();
  const auto at = index_schedule(schedule, model);
  std::vector<Violation> out;

  for (const auto& [t, snap] : at) {
    // Rule 1
    std::map<PrismId, std::vector<std::string>> by_prism;
    for (const auto& [v, p] : snap) by_prism[p].push_back(v);
    for (const auto& [p, vs] : by_prism) {
      if (vs.size() > 1) out.push_back({1, t, vs, {p}});
    }

    // Rule 4
    for (auto a = snap.begin(); a != snap.end(); ++a) {
      for (auto b = std::next(a); b != snap.end(); ++b) {
        const double d = (model.center(a->second) - model.center(b->second)).norm();
        if (d < model.min_safety_distance_m) {
          out.push_back({4, t, {a->first, b->first}, {a->second, b->second}});
        }
      }
    }

    const auto prev_it = at.find(t - 1);
    const Snapshot empty;
    const Snapshot& prev = prev_it == at.end() ? empty : prev_it->second;

    // Rule 2
    for (const auto& [v, p] : snap) {
      const auto was = prev.find(v);
      if (was != prev.end() && was->second == p) continue;
      std::set<std::string> blockers;
      for (const auto& [u, q] : snap) {
        if (u != v && q == p) blockers.insert(u);
      }
      for (const auto& [u, q] : prev) {
        if (u != v && q == p) blockers.insert(u);
      }
      if (!blockers.empty()) {
        std::vector<std::string> vs{v};
        vs.insert(vs.end(), blockers.begin(), blockers.end());
        out.push_back({2, t, vs, {p}});
      }
    }

    // Rule 3
    if (prev_it == at.end()) continue;
    for (auto a = snap.begin(); a != snap.end(); ++a) {
      for (auto b = std::next(a); b != snap.end(); ++b) {
        const auto pa = prev.find(a->first);
        const auto pb = prev.find(b->first);
        if (pa == prev.end() || pb == prev.end()) continue;
        const auto la0 = lane_of(pa->second);
        const auto lb0 = lane_of(pb->second);
        const auto la1 = lane_of(a->second);
        const auto lb1 = lane_of(b->second);
        if (!la0 || !lb0 || !la1 || !lb1) continue;
        const auto same_lane = [](const LanePos& x, const LanePos& y) {
          return x.layer == y.layer && x.lane == y.lane;
        };
        if (!same_lane(*la0, *lb0) || !same_lane(*la1, *lb1) || !same_lane(*la0, *la1)) continue;
        if (sign(la0->along - lb0->along) * sign(la1->along - lb1->along) < 0) {
          out.push_back({3, t, {a->first, b->first}, {a->second, b->second}});
        }
      }
    }
  }

  std::sort(out.begin(), out.end());
  return out;
}

std::vector<DirectionViolation> check_directions(const OccupancySchedule& schedule,
                                                 const CorridorModel& model) {
  model.validate();
  const auto at = index_schedule(schedule, model);
  std::vector<DirectionViolation> out;
  for (const auto& [t, snap] : at) {
    const auto prev_it = at.find(t - 1);
    if (prev_it == at.end()) continue;
    for (const auto& [v, p] : snap) {
      const auto was = prev_it->second.find(v);
      if (was == prev_it->second.end() || was->second.layer != p.layer) continue;
      const int di = p.i - was->second.i;
      const int dj = p.j - was->second.j;
      Heading h = Heading::hover;
      if (di != 0 && dj != 0) {
        // Diagonal moves fit no layer; report them against the east/west axis.
        h = di > 0 ? Heading::east : Heading::west;
        out.push_back({t, v, p, h});
        continue;
      }
      if (dj > 0) h = Heading::north;
      if (dj < 0) h = Heading::south;
      if (di > 0) h = Heading::east;
      if (di < 0) h = Heading::west;
      if (!direction_for_layer(p.layer, h, model.is_intersection(p.i, p.j))) out.push_back({t, v, p, h});
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

} // namespace aam::corridor
