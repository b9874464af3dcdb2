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

#include <cstdint>
#include <span>
#include <vector>

#include "aamsim/coverage.hpp"
#include "aamsim/rng.hpp"

namespace aam::mobility {

struct HandoverParams {
  double ttt_s = 0.040;
  double hom_db = 2.0;

  void validate() const;
};

struct TrajectoryConfig {
  double height_m = 100.0;
  double speed_kmph = 30.0;
  double step_s = 0.02;
  double window_s = 180.0;
  int n_windows = 2000;
  // Independent flights the windows are split across; each flight is one
  // continuous trajectory sliced into consecutive windows.
  int n_flights = 8;

  double sf_sigma_db = 4.0;
  double sf_ar_coefficient = 0.82;
  // Travel distance over which consecutive shadowing samples correlate by
  // sf_ar_coefficient. 0 applies the coefficient once per sampling step.
  double sf_correlation_distance_m = 0.0;
  bool include_uptilt_panels = false;

  void validate(const HandoverParams& ho) const;
  double speed_mps() const { return speed_kmph / 3.6; }
  std::int64_t steps_per_window() const;
  // AR(1) coefficient applied between consecutive samples.
  double per_step_ar_coefficient() const;
};

struct AvState {
  Vec2 position = Vec2::Zero();
  double heading_rad = 0.0;
};

// Advances `displacement_m` along the heading. A step that would leave the
// cell stops on the boundary and turns to a uniformly random inward heading.
// Returns true when the vehicle bounced.
bool step_trajectory(AvState& state, const scenario::Hexagon& cell, double displacement_m, Rng& rng);

// Uniform position and heading inside the cell.
AvState random_start(const scenario::Hexagon& cell, Rng& rng);

enum class HoEventKind { none, a3_started, handover };

struct HoEvent {
  HoEventKind kind = HoEventKind::none;
  int target = -1;
};

// A3 / time-to-trigger state. The first sample attaches to the strongest cell
// without counting a handover.
struct HoMachine {
  double step_s = 0.02;
  int serving = -1;
  std::int64_t step = 0;
  std::int64_t a3_start = -1;
  std::size_t handovers = 0;
};

// Consumes one RSRP sample (one entry per candidate cell, shadowing
// included). A3 holds while the best neighbour exceeds serving by more than
// the margin; the handover fires once it has held for the time-to-trigger and
// targets whichever neighbour is best at that moment.
HoEvent ho_machine_step(HoMachine& machine, std::span<const double> rsrp_db,
                        const HandoverParams& params);

struct HoCountPmf {
  double isd = 0.0;
  double height_m = 0.0;
  double speed_kmph = 0.0;
  std::vector<std::size_t> window_counts; // H per window, in window order
  std::vector<double> probability;        // index = H
  double mean = 0.0;
  double variance = 0.0;
};

HoCountPmf make_pmf(std::vector<std::size_t> window_counts);

// Flies the AV through the centre cell of `scn.layout` and records the
// handover count in every window. Flights run in parallel on up to `jobs`
// threads; each uses the substream ("mobility", flight index).
HoCountPmf run_mobility_study(const scenario::Scenario& scn, const TrajectoryConfig& traj,
                              const HandoverParams& params, std::uint64_t seed, int jobs = 1);

} // namespace aam::mobility
