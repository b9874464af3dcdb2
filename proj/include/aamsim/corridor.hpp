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

#include <compare>
#include <iosfwd>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "aamsim/common.hpp"

namespace aam::corridor {

// Top carries north/south traffic, bottom east/west; the middle layer exists
// only over intersections and is reserved for hovering.
enum class Layer { bottom = 0, middle = 1, top = 2 };
enum class Heading { north, south, east, west, hover };

std::string_view to_string(Layer layer);
std::string_view to_string(Heading heading);
Layer parse_layer(std::string_view text);

struct PrismId {
  int i = 0; // east index
  int j = 0; // north index
  Layer layer = Layer::bottom;

  auto operator<=>(const PrismId&) const = default;
};

struct CorridorModel {
  int nx = 10;
  int ny = 10;
  double prism_dx_m = 50.0;
  double prism_dy_m = 50.0;
  double prism_dz_m = 30.0;
  double min_safety_distance_m = 60.0;
  std::set<std::pair<int, int>> intersections;

  // Intersections at every `period`-th column and row.
  static CorridorModel with_intersection_period(int nx, int ny, int period);

  void validate() const;
  bool is_intersection(int i, int j) const { return intersections.contains({i, j}); }
  bool contains(const PrismId& p) const;
  Vec3 center(const PrismId& p) const;
};

bool direction_for_layer(Layer layer, Heading heading, bool at_intersection);

struct ScheduleEntry {
  int t = 0;
  std::string vehicle;
  PrismId prism;
};

struct OccupancySchedule {
  std::vector<ScheduleEntry> entries;
};

// CSV with header `t,vehicle,i,j,layer`; layer is bottom|middle|top or 0|1|2.
OccupancySchedule parse_schedule_csv(std::istream& in);

struct Violation {
  int rule = 0; // 1 double occupancy, 2 entering a non-empty prism, 3 overtake, 4 safety distance
  int t = 0;
  std::vector<std::string> vehicles;
  std::vector<PrismId> prisms;

  auto operator<=>(const Violation&) const = default;
};

// Every rule violation in the schedule, sorted by (rule, t, vehicles).
//
// Rule 2 treats a prism as empty for an entrant at t iff no other vehicle
// occupies it at t and no other vehicle occupied it at t - 1. Rule 3 compares
// along-lane order of every pair sharing a lane at t - 1 and t. Rule 4 uses the
// distance between prism centres.
std::vector<Violation> validate_schedule(const OccupancySchedule& schedule, const CorridorModel& model);

struct DirectionViolation {
  int t = 0;
  std::string vehicle;
  PrismId prism;
  Heading heading = Heading::hover;

  auto operator<=>(const DirectionViolation&) const = default;
};

// Headings inferred from consecutive samples of each vehicle that conflict
// with the layer they fly in. Layer changes are not checked.
std::vector<DirectionViolation> check_directions(const OccupancySchedule& schedule,
                                                 const CorridorModel& model);

} // namespace aam::corridor
