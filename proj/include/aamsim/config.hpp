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
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "aamsim/corridor.hpp"
#include "aamsim/localization.hpp"
#include "aamsim/mobility.hpp"
#include "aamsim/optimizer.hpp"
#include "aamsim/rng.hpp"
#include "aamsim/scenario.hpp"

namespace aam {

struct LayoutConfig {
  double isd = 1000.0;
  int tiers = 2;
  scenario::LayoutOptions options;
};

struct GridConfig {
  double height_m = 100.0;
  double spacing_m = 0.0; // 0 = default_grid_spacing(isd)
};

struct LocalizationConfig {
  std::vector<double> dx_m{500.0, 1000.0, 2000.0};
  std::vector<double> dy_m{1000.0, 2000.0};
  std::vector<double> heights_m{100.0, 500.0};
  localization::AntennaMode mode = localization::AntennaMode::mimo;
  double spacing_m = 25.0;
  localization::UavRadioParams radio;
};

struct CorridorConfig {
  int nx = 10;
  int ny = 10;
  int intersection_period = 5;
  double prism_dx_m = 50.0;
  double prism_dy_m = 50.0;
  double prism_dz_m = 30.0;
  double min_safety_distance_m = 60.0;

  corridor::CorridorModel model() const;
};

struct RunConfig {
  std::uint64_t seed = 1;
  std::filesystem::path output_dir = "results";
  int jobs = 1;

  LayoutConfig layout;
  antenna::UlaPanel panel;
  channel::LinkBudgetParams link;
  GridConfig grid;
  optimizer::GaConfig ga;
  mobility::TrajectoryConfig trajectory;
  mobility::HandoverParams handover;
  LocalizationConfig localization;
  CorridorConfig corridor;

  void validate() const;

  // Layout, panel template, link parameters and evaluation grid at the
  // configured ISD and height.
  scenario::Scenario make_scenario() const;
};

// Reads an INI-style file: `[section]` headers and `key = value` lines.
// Unknown sections or keys are errors; `run.seed` is required.
RunConfig load_config(const std::filesystem::path& path);
RunConfig parse_config(std::string_view text);

// Substream for a named study ("coverage", "ga", "mobility", "localization").
Rng rng_stream(const RunConfig& config, std::string_view label, std::uint64_t index = 0);

} // namespace aam
