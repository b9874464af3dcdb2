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

#include "aamsim/config.hpp"

#include <charconv>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>

#include <boost/property_tree/ini_parser.hpp>
#include <boost/property_tree/ptree.hpp>

namespace aam {

Rng make_stream(std::uint64_t seed, std::string_view label, std::uint64_t index) {
  const std::uint64_t h = label_hash(label);
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(h), static_cast<std::uint32_t>(h >> 32),
                    static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32)};
  return Rng(seq);
}

Rng rng_stream(const RunConfig& config, std::string_view label, std::uint64_t index) {
  require(!label.empty(), "rng_stream: label must be non-empty");
  return make_stream(config.seed, label, index);
}

corridor::CorridorModel CorridorConfig::model() const {
  corridor::CorridorModel m = corridor::CorridorModel::with_intersection_period(nx, ny, intersection_period);
  m.prism_dx_m = prism_dx_m;
  m.prism_dy_m = prism_dy_m;
  m.prism_dz_m = prism_dz_m;
  m.min_safety_distance_m = min_safety_distance_m;
  return m;
}

void RunConfig::validate() const {
  require(jobs >= 1, "run.jobs must be >= 1");
  require(layout.isd > 0.0, "layout.isd must be positive");
  require(layout.tiers == 1 || layout.tiers == 2, "layout.tiers must be 1 or 2");
  panel.validate();
  link.validate();
  require(grid.height_m > 0.0, "grid.height_m must be positive");
  require(grid.spacing_m >= 0.0, "grid.spacing_m must be non-negative");
  ga.validate();
  handover.validate();
  trajectory.validate(handover);
  localization.radio.validate();
  require(localization.spacing_m > 0.0, "localization.spacing_m must be positive");
  corridor.model().validate();
}

scenario::Scenario RunConfig::make_scenario() const {
  scenario::Scenario s;
  s.layout = scenario::build_hex_layout(layout.isd, layout.tiers, layout.options);
  s.panel = panel;
  s.link = link;
  const double spacing = grid.spacing_m > 0.0 ? grid.spacing_m : scenario::default_grid_spacing(layout.isd);
  s.grid = scenario::build_grid(s.layout, grid.height_m, spacing);
  return s;
}

namespace {

using Setter = std::function<void(RunConfig&, const std::string&)>;

template <class T>
T parse_number(const std::string& key, const std::string& text) {
  T value{};
  const char* first = text.data();
  const char* last = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc{} || ptr != last) {
    throw ValidationError("config: " + key + ": invalid value '" + text + "'");
  }
  return value;
}

bool parse_bool(const std::string& key, const std::string& text) {
  if (text == "true" || text == "1" || text == "yes" || text == "on") return true;
  if (text == "false" || text == "0" || text == "no" || text == "off") return false;
  throw ValidationError("config: " + key + ": expected a boolean, got '" + text + "'");
}

std::vector<double> parse_list(const std::string& key, const std::string& text) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto b = item.find_first_not_of(" \t");
    const auto e = item.find_last_not_of(" \t");
    if (b == std::string::npos) throw ValidationError("config: " + key + ": empty list item");
    out.push_back(parse_number<double>(key, item.substr(b, e - b + 1)));
  }
  if (out.empty()) throw ValidationError("config: " + key + ": empty list");
  return out;
}

#define AAM_NUM(KEY, FIELD)                                                                  \
  {                                                                                          \
    KEY, [](RunConfig& c, const std::string& v) {                                            \
      c.FIELD = parse_number<std::remove_reference_t<decltype(c.FIELD)>>(KEY, v);            \
    }                                                                                        \
  }
#define AAM_BOOL(KEY, FIELD) \
  { KEY, [](RunConfig& c, const std::string& v) { c.FIELD = parse_bool(KEY, v); } }
#define AAM_LIST(KEY, FIELD) \
  { KEY, [](RunConfig& c, const std::string& v) { c.FIELD = parse_list(KEY, v); } }

const std::map<std::string, Setter>& setters() {
  static const std::map<std::string, Setter> table = {
      AAM_NUM("run.seed", seed),
      {"run.output_dir", [](RunConfig& c, const std::string& v) { c.output_dir = v; }},
      AAM_NUM("run.jobs", jobs),

      AAM_NUM("layout.isd", layout.isd),
      AAM_NUM("layout.tiers", layout.tiers),
      AAM_NUM("layout.bs_height_m", layout.options.bs_height_m),
      AAM_NUM("layout.downtilt_deg", layout.options.downtilt_deg),
      AAM_NUM("layout.carrier_hz", layout.options.carrier_hz),
      AAM_NUM("layout.bs_power_dbm", layout.options.bs_power_dbm),

      AAM_NUM("antenna.n_elements", panel.n_elements),
      AAM_NUM("antenna.element_spacing_wavelengths", panel.element_spacing_wavelengths),
      AAM_NUM("antenna.element_max_gain_dbi", panel.element_max_gain_dbi),
      AAM_NUM("antenna.side_lobe_floor_db", panel.side_lobe_floor_db),

      AAM_NUM("channel.noise_figure_db", link.noise_figure_db),
      AAM_NUM("channel.bandwidth_hz", link.bandwidth_hz),
      AAM_BOOL("channel.ground_reflection", link.ground_reflection_enabled),
      {"channel.reflection_model",
       [](RunConfig& c, const std::string& v) {
         if (v == "fixed") {
           c.link.reflection_model = channel::ReflectionModel::fixed;
         } else if (v == "fresnel") {
           c.link.reflection_model = channel::ReflectionModel::fresnel;
         } else {
           throw ValidationError("config: channel.reflection_model: expected fixed|fresnel, got '" + v + "'");
         }
       }},
      {"channel.reflection_coefficient",
       [](RunConfig& c, const std::string& v) {
         c.link.reflection_coefficient = {parse_number<double>("channel.reflection_coefficient", v), 0.0};
       }},
      AAM_NUM("channel.ground_relative_permittivity", link.ground_relative_permittivity),

      AAM_NUM("grid.height_m", grid.height_m),
      AAM_NUM("grid.spacing_m", grid.spacing_m),

      AAM_NUM("ga.population", ga.population),
      AAM_NUM("ga.generations", ga.generations),
      AAM_NUM("ga.tournament_k", ga.tournament_k),
      AAM_NUM("ga.crossover_prob", ga.crossover_prob),
      AAM_NUM("ga.mutation_sigma_deg", ga.mutation_sigma_deg),
      AAM_NUM("ga.mutation_prob", ga.mutation_prob),
      AAM_NUM("ga.elitism", ga.elitism),
      AAM_NUM("ga.gene_min_deg", ga.gene_min_deg),
      AAM_NUM("ga.gene_max_deg", ga.gene_max_deg),

      AAM_NUM("mobility.height_m", trajectory.height_m),
      AAM_NUM("mobility.speed_kmph", trajectory.speed_kmph),
      AAM_NUM("mobility.step_s", trajectory.step_s),
      AAM_NUM("mobility.window_s", trajectory.window_s),
      AAM_NUM("mobility.n_windows", trajectory.n_windows),
      AAM_NUM("mobility.n_flights", trajectory.n_flights),
      AAM_NUM("mobility.sf_sigma_db", trajectory.sf_sigma_db),
      AAM_NUM("mobility.sf_ar_coefficient", trajectory.sf_ar_coefficient),
      AAM_NUM("mobility.sf_correlation_distance_m", trajectory.sf_correlation_distance_m),
      AAM_BOOL("mobility.include_uptilt_panels", trajectory.include_uptilt_panels),
      AAM_NUM("mobility.ttt_s", handover.ttt_s),
      AAM_NUM("mobility.hom_db", handover.hom_db),

      AAM_LIST("localization.dx_m", localization.dx_m),
      AAM_LIST("localization.dy_m", localization.dy_m),
      AAM_LIST("localization.heights_m", localization.heights_m),
      {"localization.mode",
       [](RunConfig& c, const std::string& v) { c.localization.mode = localization::parse_antenna_mode(v); }},
      AAM_NUM("localization.spacing_m", localization.spacing_m),
      AAM_NUM("localization.tx_power_dbm", localization.radio.tx_power_dbm),
      AAM_NUM("localization.bandwidth_hz", localization.radio.bandwidth_hz),
      AAM_NUM("localization.carrier_hz", localization.radio.carrier_hz),
      AAM_NUM("localization.noise_figure_db", localization.radio.noise_figure_db),
      AAM_BOOL("localization.split_tx_power", localization.radio.split_tx_power),

      AAM_NUM("corridor.nx", corridor.nx),
      AAM_NUM("corridor.ny", corridor.ny),
      AAM_NUM("corridor.intersection_period", corridor.intersection_period),
      AAM_NUM("corridor.prism_dx_m", corridor.prism_dx_m),
      AAM_NUM("corridor.prism_dy_m", corridor.prism_dy_m),
      AAM_NUM("corridor.prism_dz_m", corridor.prism_dz_m),
      AAM_NUM("corridor.min_safety_distance_m", corridor.min_safety_distance_m),
  };
  return table;
}

#undef AAM_NUM
#undef AAM_BOOL
#undef AAM_LIST

} // namespace

RunConfig parse_config(std::string_view text) {
  namespace pt = boost::property_tree;
  pt::ptree tree;
  try {
    std::istringstream in{std::string(text)};
    pt::ini_parser::read_ini(in, tree);
  } catch (const pt::ini_parser_error& e) {
    throw ValidationError("config: parse error at line " + std::to_string(e.line()) + ": " + e.message());
  }

  RunConfig cfg;
  bool have_seed = false;
  const auto& table = setters();
  for (const auto& [section, body] : tree) {
    if (body.empty() && !body.data().empty()) {
      throw ValidationError("config: key '" + section + "' must appear inside a [section]");
    }
    const auto known = table.lower_bound(section + ".");
    if (known == table.end() || known->first.rfind(section + ".", 0) != 0) {
      throw ValidationError("config: unknown section [" + section + "]");
    }
    for (const auto& [key, value] : body) {
      const std::string full = section + "." + key;
      const auto it = table.find(full);
      if (it == table.end()) throw ValidationError("config: unknown key '" + full + "'");
      it->second(cfg, value.get_value<std::string>());
      if (full == "run.seed") have_seed = true;
    }
  }
  if (!have_seed) throw ValidationError("config: missing required field 'run.seed'");
  cfg.validate();
  return cfg;
}

RunConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("config: cannot read '" + path.string() + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_config(buf.str());
}

} // namespace aam
