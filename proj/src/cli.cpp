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

#include "aamsim/cli.hpp"

#include <array>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "aamsim/config.hpp"
#include "aamsim/io.hpp"

namespace aam::cli {

namespace {

using nlohmann::json;
using io::format_double;

constexpr std::array<std::string_view, 6> kSubcommands = {
    "coverage", "optimize", "handover", "localize", "corridor-check", "pattern-dump"};

constexpr const char* kUsage =
    "usage: aamsim <subcommand> [options]\n"
    "\n"
    "subcommands:\n"
    "  coverage        association/SIR map of the centre cell\n"
    "  optimize        GA search of per-site uptilt angles maximizing min-SIR\n"
    "  handover        handover-count PMFs for an AV flying in the centre cell\n"
    "  localize        TDOA CRLB sweeps over corridor slices\n"
    "  corridor-check  validate an occupancy schedule against the corridor rules\n"
    "  pattern-dump    ULA elevation pattern as CSV\n"
    "\n"
    "common options: --config <path> --seed <u64> --out <dir> --jobs <n>\n"
    "run 'aamsim <subcommand> --help' for details\n";

struct Common {
  std::string config_path;
  std::optional<std::uint64_t> seed;
  std::string out_root;
  std::optional<int> jobs;
};

void add_common(CLI::App* sub, Common& c) {
  sub->add_option("--config", c.config_path, "INI configuration file");
  sub->add_option("--seed", c.seed, "seed override");
  sub->add_option("--out", c.out_root, "results root directory (default: $AAMSIM_OUTPUT_ROOT or run.output_dir)");
  sub->add_option("--jobs", c.jobs, "worker threads")->check(CLI::PositiveNumber);
}

RunConfig resolve(const Common& c) {
  RunConfig cfg = c.config_path.empty() ? RunConfig{} : load_config(c.config_path);
  if (c.seed) cfg.seed = *c.seed;
  if (c.jobs) cfg.jobs = *c.jobs;
  if (!c.out_root.empty()) {
    cfg.output_dir = c.out_root;
  } else if (const char* env = std::getenv("AAMSIM_OUTPUT_ROOT"); env && *env) {
    cfg.output_dir = env;
  }
  return cfg;
}

json config_json(const RunConfig& c) {
  json j;
  j["run"] = {{"seed", c.seed}, {"output_dir", c.output_dir.string()}, {"jobs", c.jobs}};
  j["layout"] = {{"isd", c.layout.isd},
                 {"tiers", c.layout.tiers},
                 {"bs_height_m", c.layout.options.bs_height_m},
                 {"downtilt_deg", c.layout.options.downtilt_deg},
                 {"carrier_hz", c.layout.options.carrier_hz},
                 {"bs_power_dbm", c.layout.options.bs_power_dbm}};
  j["antenna"] = {{"n_elements", c.panel.n_elements},
                  {"element_spacing_wavelengths", c.panel.element_spacing_wavelengths},
                  {"element_max_gain_dbi", c.panel.element_max_gain_dbi},
                  {"side_lobe_floor_db", c.panel.side_lobe_floor_db}};
  j["channel"] = {{"noise_figure_db", c.link.noise_figure_db},
                  {"bandwidth_hz", c.link.bandwidth_hz},
                  {"ground_reflection", c.link.ground_reflection_enabled},
                  {"reflection_model",
                   c.link.reflection_model == channel::ReflectionModel::fixed ? "fixed" : "fresnel"},
                  {"reflection_coefficient", c.link.reflection_coefficient.real()},
                  {"ground_relative_permittivity", c.link.ground_relative_permittivity}};
  j["grid"] = {{"height_m", c.grid.height_m}, {"spacing_m", c.grid.spacing_m}};
  j["ga"] = {{"population", c.ga.population},
             {"generations", c.ga.generations},
             {"tournament_k", c.ga.tournament_k},
             {"crossover_prob", c.ga.crossover_prob},
             {"mutation_sigma_deg", c.ga.mutation_sigma_deg},
             {"mutation_prob", c.ga.mutation_prob},
             {"elitism", c.ga.elitism},
             {"gene_min_deg", c.ga.gene_min_deg},
             {"gene_max_deg", c.ga.gene_max_deg}};
  j["mobility"] = {{"height_m", c.trajectory.height_m},
                   {"speed_kmph", c.trajectory.speed_kmph},
                   {"step_s", c.trajectory.step_s},
                   {"window_s", c.trajectory.window_s},
                   {"n_windows", c.trajectory.n_windows},
                   {"n_flights", c.trajectory.n_flights},
                   {"sf_sigma_db", c.trajectory.sf_sigma_db},
                   {"sf_ar_coefficient", c.trajectory.sf_ar_coefficient},
                   {"sf_correlation_distance_m", c.trajectory.sf_correlation_distance_m},
                   {"include_uptilt_panels", c.trajectory.include_uptilt_panels},
                   {"ttt_s", c.handover.ttt_s},
                   {"hom_db", c.handover.hom_db}};
  j["localization"] = {{"dx_m", c.localization.dx_m},
                       {"dy_m", c.localization.dy_m},
                       {"heights_m", c.localization.heights_m},
                       {"mode", localization::to_string(c.localization.mode)},
                       {"spacing_m", c.localization.spacing_m},
                       {"tx_power_dbm", c.localization.radio.tx_power_dbm},
                       {"bandwidth_hz", c.localization.radio.bandwidth_hz},
                       {"carrier_hz", c.localization.radio.carrier_hz},
                       {"noise_figure_db", c.localization.radio.noise_figure_db},
                       {"split_tx_power", c.localization.radio.split_tx_power}};
  j["corridor"] = {{"nx", c.corridor.nx},
                   {"ny", c.corridor.ny},
                   {"intersection_period", c.corridor.intersection_period},
                   {"prism_dx_m", c.corridor.prism_dx_m},
                   {"prism_dy_m", c.corridor.prism_dy_m},
                   {"prism_dz_m", c.corridor.prism_dz_m},
                   {"min_safety_distance_m", c.corridor.min_safety_distance_m}};
  return j;
}

std::vector<double> parse_csv_numbers(const std::string& text, const char* what) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stod(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw ValidationError(std::string(what) + ": invalid number '" + item + "'");
    }
  }
  require(!out.empty(), std::string(what) + ": empty list");
  return out;
}

void write_association(io::OutputSet& out, const coverage::CoverageMap& map) {
  std::vector<std::vector<std::string>> rows;
  rows.reserve(map.n_points());
  for (std::size_t p = 0; p < map.n_points(); ++p) {
    const auto& pt = map.grid.points[p];
    rows.push_back({format_double(pt.x()), format_double(pt.y()), std::to_string(map.serving_site(p)),
                    std::string(coverage::to_string(map.serving_kind(p))),
                    format_double(map.rsrp(p, map.serving_panel[p])), format_double(map.sir_db[p])});
  }
  out.write_csv("association.csv", {"x", "y", "serving_id", "panel", "rsrp_dbm", "sir_db"}, rows);
}

json coverage_summary(const coverage::CoverageMap& map, const scenario::Scenario& scn) {
  json hist_site = json::object();
  for (const auto& [site, n] : map.site_histogram()) hist_site[std::to_string(site)] = n;
  json hist_tier = json::object();
  for (const auto& [tier, n] : map.tier_histogram()) hist_tier[std::to_string(tier)] = n;
  std::size_t up = 0;
  for (std::size_t p = 0; p < map.n_points(); ++p) up += map.serving_kind(p) == coverage::PanelKind::up;
  const double msir = coverage::min_sir_db(map);
  json j;
  j["isd"] = scn.layout.isd;
  j["height_m"] = scn.grid.height_m;
  j["grid_spacing_m"] = scn.grid.spacing_m;
  j["n_points"] = map.n_points();
  j["min_sir_db"] = std::isfinite(msir) ? json(msir) : json(nullptr);
  j["fragmentation"] = coverage::fragmentation_index(map);
  j["distinct_servers"] = map.site_histogram().size();
  j["histogram"] = {{"by_site", hist_site}, {"by_tier", hist_tier},
                    {"by_panel", {{"down", map.n_points() - up}, {"up", up}}}};
  return j;
}

template <class Fn>
int run_guarded(Fn&& fn) {
  try {
    fn();
    return kExitOk;
  } catch (const ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitValidation;
  } catch (const std::exception& e) {
    std::cerr << "runtime failure: " << e.what() << "\n";
    return kExitRuntime;
  }
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

} // namespace

int dispatch(int argc, char** argv) {
  if (argc < 2) {
    std::cerr << kUsage;
    return kExitUsage;
  }
  const std::string_view first = argv[1];
  if (first == "--help" || first == "-h") {
    std::cout << kUsage;
    return kExitOk;
  }
  if (std::find(kSubcommands.begin(), kSubcommands.end(), first) == kSubcommands.end()) {
    std::cerr << "unknown subcommand '" << first << "'\n\n" << kUsage;
    return kExitUsage;
  }

  CLI::App app{"Cellular coverage, handover and localization studies for air corridors", "aamsim"};
  app.require_subcommand(1);
  Common common;

  // coverage / optimize
  std::optional<double> isd;
  std::optional<double> height;
  std::optional<double> spacing;
  bool no_gr = false;
  std::string uptilts_text;
  std::string tilts_json;
  auto* cov = app.add_subcommand("coverage", "association and SIR map of the centre cell");
  add_common(cov, common);
  cov->add_option("--isd", isd, "inter-site distance [m]");
  cov->add_option("--height", height, "UAV height [m]");
  cov->add_option("--spacing", spacing, "grid spacing [m]");
  cov->add_flag("--no-gr", no_gr, "disable the ground-reflected ray");
  cov->add_option("--uptilts", uptilts_text, "comma-separated uptilt per site [deg]");
  cov->add_option("--tilts-json", tilts_json, "best_tilts.json written by 'optimize'");

  std::optional<int> generations;
  std::optional<int> population;
  auto* opt = app.add_subcommand("optimize", "GA search of per-site uptilt angles");
  add_common(opt, common);
  opt->add_option("--isd", isd, "inter-site distance [m]");
  opt->add_option("--height", height, "UAV height [m]");
  opt->add_option("--spacing", spacing, "final grid spacing [m]; the GA uses twice this");
  opt->add_flag("--no-gr", no_gr, "disable the ground-reflected ray");
  opt->add_option("--generations", generations, "GA generations");
  opt->add_option("--population", population, "GA population size");

  std::string isd_list;
  std::string height_list;
  std::string speed_list;
  std::optional<int> windows;
  std::optional<int> flights;
  auto* ho = app.add_subcommand("handover", "handover-count PMFs");
  add_common(ho, common);
  ho->add_option("--isd", isd_list, "comma-separated ISDs [m]");
  ho->add_option("--height", height_list, "comma-separated UAV heights [m]");
  ho->add_option("--speed", speed_list, "comma-separated speeds [km/h]");
  ho->add_option("--windows", windows, "measurement windows per scenario");
  ho->add_option("--flights", flights, "independent flights the windows are split across");
  ho->add_flag("--no-gr", no_gr, "disable the ground-reflected ray");

  std::string dx_list;
  std::string dy_list;
  std::string heights_list;
  std::string mode_text;
  std::optional<double> loc_spacing;
  auto* loc = app.add_subcommand("localize", "TDOA CRLB corridor sweeps");
  add_common(loc, common);
  loc->add_option("--dx", dx_list, "comma-separated slice lengths [m]");
  loc->add_option("--dy", dy_list, "comma-separated slice widths [m]");
  loc->add_option("--heights", heights_list, "comma-separated UAV heights [m]");
  loc->add_option("--antenna", mode_text, "siso | miso | mimo");
  loc->add_option("--spacing", loc_spacing, "sweep lattice spacing [m]");

  std::string schedule_path;
  auto* cc = app.add_subcommand("corridor-check", "validate an occupancy schedule");
  add_common(cc, common);
  cc->add_option("--schedule", schedule_path, "CSV with columns t,vehicle,i,j,layer")->required();

  double tilt = 6.0;
  double step = 0.5;
  auto* pd = app.add_subcommand("pattern-dump", "ULA elevation pattern as CSV");
  add_common(pd, common);
  pd->add_option("--tilt", tilt, "electrical tilt [deg], positive below the horizon");
  pd->add_option("--step", step, "elevation step [deg]")->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitValidation;
  }

  const auto t0 = std::chrono::steady_clock::now();
  return run_guarded([&] {
    RunConfig cfg = resolve(common);
    if (isd) cfg.layout.isd = *isd;
    if (height) cfg.grid.height_m = *height;
    if (spacing) cfg.grid.spacing_m = *spacing;
    if (no_gr) cfg.link.ground_reflection_enabled = false;
    cfg.validate();

    if (*cov) {
      scenario::Scenario scn = cfg.make_scenario();
      if (!uptilts_text.empty()) {
        scenario::set_uptilts(scn.layout, parse_csv_numbers(uptilts_text, "--uptilts"));
      } else if (!tilts_json.empty()) {
        std::ifstream in(tilts_json);
        require(static_cast<bool>(in), "cannot read " + tilts_json);
        const json tj = json::parse(in);
        std::vector<double> tilts(scn.layout.sites.size());
        for (std::size_t s = 0; s < tilts.size(); ++s) tilts[s] = tj.at("uptilt_deg").at(std::to_string(s));
        scenario::set_uptilts(scn.layout, tilts);
      }
      const auto map = coverage::build_coverage_map(scn, cfg.jobs);
      io::OutputSet out(cfg.output_dir / "coverage");
      write_association(out, map);
      out.write_json("summary.json", coverage_summary(map, scn));
      out.write_manifest("coverage", config_json(cfg), cfg.seed, seconds_since(t0));
      return;
    }

    if (*opt) {
      if (generations) cfg.ga.generations = *generations;
      if (population) cfg.ga.population = *population;
      cfg.validate();
      scenario::Scenario full = cfg.make_scenario();
      scenario::Scenario coarse = full;
      coarse.grid = scenario::build_grid(full.layout, full.grid.height_m, 2.0 * full.grid.spacing_m);
      const auto res = optimizer::run_ga(cfg.ga, coarse, cfg.seed, cfg.jobs);

      scenario::Scenario down_only = full;
      const auto baseline = coverage::build_coverage_map(down_only, cfg.jobs);
      scenario::set_uptilts(full.layout, res.best_genome);
      const auto map = coverage::build_coverage_map(full, cfg.jobs);

      io::OutputSet out(cfg.output_dir / "optimize");
      std::vector<std::vector<std::string>> rows;
      for (const auto& g : res.history) {
        rows.push_back({std::to_string(g.generation), format_double(g.best_db), format_double(g.mean_db)});
      }
      out.write_csv("ga_history.csv", {"generation", "best_fitness_db", "mean_fitness_db"}, rows);
      json tilts;
      for (std::size_t s = 0; s < res.best_genome.size(); ++s) {
        tilts[std::to_string(s)] = res.best_genome[s];
      }
      out.write_json("best_tilts.json", {{"uptilt_deg", tilts},
                                         {"fitness_db", res.best_fitness_db},
                                         {"fitness_grid_spacing_m", coarse.grid.spacing_m},
                                         {"evaluations", res.evaluations}});
      write_association(out, map);
      json summary = coverage_summary(map, full);
      summary["fitness_grid_spacing_m"] = coarse.grid.spacing_m;
      summary["downtilt_only"] = coverage_summary(baseline, down_only);
      out.write_json("summary.json", summary);
      out.write_manifest("optimize", config_json(cfg), cfg.seed, seconds_since(t0));
      return;
    }

    if (*ho) {
      if (windows) cfg.trajectory.n_windows = *windows;
      if (flights) cfg.trajectory.n_flights = *flights;
      const auto isds = isd_list.empty() ? std::vector<double>{cfg.layout.isd} : parse_csv_numbers(isd_list, "--isd");
      const auto heights = height_list.empty() ? std::vector<double>{cfg.trajectory.height_m}
                                               : parse_csv_numbers(height_list, "--height");
      const auto speeds = speed_list.empty() ? std::vector<double>{cfg.trajectory.speed_kmph}
                                             : parse_csv_numbers(speed_list, "--speed");
      cfg.validate();

      std::vector<std::vector<std::string>> rows;
      json summary = json::array();
      for (double d : isds) {
        RunConfig c = cfg;
        c.layout.isd = d;
        const scenario::Scenario scn = c.make_scenario();
        for (double h : heights) {
          for (double v : speeds) {
            mobility::TrajectoryConfig traj = c.trajectory;
            traj.height_m = h;
            traj.speed_kmph = v;
            const auto pmf = mobility::run_mobility_study(scn, traj, c.handover, c.seed, c.jobs);
            for (std::size_t k = 0; k < pmf.probability.size(); ++k) {
              rows.push_back({format_double(d), format_double(h), format_double(v), std::to_string(k),
                              format_double(pmf.probability[k])});
            }
            summary.push_back({{"isd", d}, {"height_m", h}, {"speed_kmph", v},
                               {"windows", pmf.window_counts.size()}, {"mean", pmf.mean},
                               {"variance", pmf.variance}});
          }
        }
      }
      io::OutputSet out(cfg.output_dir / "handover");
      out.write_csv("ho_pmf.csv", {"isd", "height_m", "speed_kmph", "H", "probability"}, rows);
      out.write_json("ho_summary.json", {{"scenarios", summary}});
      out.write_manifest("handover", config_json(cfg), cfg.seed, seconds_since(t0));
      return;
    }

    if (*loc) {
      if (!dx_list.empty()) cfg.localization.dx_m = parse_csv_numbers(dx_list, "--dx");
      if (!dy_list.empty()) cfg.localization.dy_m = parse_csv_numbers(dy_list, "--dy");
      if (!heights_list.empty()) cfg.localization.heights_m = parse_csv_numbers(heights_list, "--heights");
      if (!mode_text.empty()) cfg.localization.mode = localization::parse_antenna_mode(mode_text);
      if (loc_spacing) cfg.localization.spacing_m = *loc_spacing;
      cfg.validate();

      static constexpr std::array<double, 12> kDeltas = {1, 2, 5, 10, 20, 50, 100, 200, 500, 1000, 2000, 5000};
      std::vector<std::vector<std::string>> grid_rows;
      std::vector<std::vector<std::string>> cdf_rows;
      std::vector<std::vector<std::string>> med_rows;
      const std::string mode(localization::to_string(cfg.localization.mode));
      for (double dx : cfg.localization.dx_m) {
        for (double dy : cfg.localization.dy_m) {
          const auto sweep = localization::corridor_sweep(dx, dy, cfg.localization.heights_m, cfg.localization.mode,
                                                          cfg.localization.radio, cfg.localization.spacing_m, cfg.jobs);
          for (const auto& slice : sweep.slices) {
            for (std::size_t i = 0; i < slice.points.size(); ++i) {
              grid_rows.push_back({format_double(dx), format_double(dy), format_double(slice.points[i].x()),
                                   format_double(slice.points[i].y()), format_double(slice.height_m),
                                   format_double(slice.rmse_m[i]), slice.observable[i] ? "1" : "0"});
            }
            for (double delta : kDeltas) {
              cdf_rows.push_back({format_double(dx), format_double(dy), format_double(slice.height_m), mode,
                                  format_double(delta), format_double(slice.cdf(delta))});
            }
            med_rows.push_back({format_double(dx), format_double(dy), mode, format_double(slice.height_m),
                                format_double(slice.median()), std::to_string(slice.unobservable)});
          }
        }
      }
      io::OutputSet out(cfg.output_dir / "localize");
      out.write_csv("crlb_grid.csv", {"dx", "dy", "x", "y", "h", "rmse_m", "observable"}, grid_rows);
      out.write_csv("crlb_cdf.csv", {"dx", "dy", "h", "mode", "delta_m", "probability"}, cdf_rows);
      out.write_csv("median_vs_alt.csv", {"dx", "dy", "mode", "h", "median_rmse_m", "unobservable"}, med_rows);
      out.write_manifest("localize", config_json(cfg), cfg.seed, seconds_since(t0));
      return;
    }

    if (*cc) {
      std::ifstream in(schedule_path);
      require(static_cast<bool>(in), "cannot read schedule " + schedule_path);
      const auto schedule = corridor::parse_schedule_csv(in);
      const auto model = cfg.corridor.model();
      const auto violations = corridor::validate_schedule(schedule, model);
      const auto directions = corridor::check_directions(schedule, model);

      const auto prism_json = [](const corridor::PrismId& p) {
        return json{{"i", p.i}, {"j", p.j}, {"layer", corridor::to_string(p.layer)}};
      };
      json jv = json::array();
      for (const auto& v : violations) {
        json prisms = json::array();
        for (const auto& p : v.prisms) prisms.push_back(prism_json(p));
        jv.push_back({{"rule", v.rule}, {"t", v.t}, {"vehicles", v.vehicles}, {"prisms", prisms}});
      }
      json jd = json::array();
      for (const auto& d : directions) {
        jd.push_back({{"t", d.t}, {"vehicle", d.vehicle}, {"prism", prism_json(d.prism)},
                      {"heading", corridor::to_string(d.heading)}});
      }
      io::OutputSet out(cfg.output_dir / "corridor-check");
      out.write_json("violations.json", {{"violations", jv}, {"direction_violations", jd},
                                         {"count", violations.size()}});
      out.write_manifest("corridor-check", config_json(cfg), cfg.seed, seconds_since(t0));
      std::cout << violations.size() << " rule violation(s), " << directions.size()
                << " direction violation(s)\n";
      return;
    }

    if (*pd) {
      antenna::UlaPanel panel = cfg.panel;
      panel.tilt_deg = tilt;
      panel.validate();
      std::vector<std::vector<std::string>> rows;
      const int n = static_cast<int>(std::floor(180.0 / step + 1e-9));
      for (int k = 0; k <= n; ++k) {
        const double e = -90.0 + k * step;
        rows.push_back({format_double(e), format_double(antenna::ula_gain_db(panel, e))});
      }
      io::OutputSet out(cfg.output_dir / "pattern-dump");
      out.write_csv("pattern.csv", {"elevation_deg", "gain_dbi"}, rows);
      out.write_manifest("pattern-dump", config_json(cfg), cfg.seed, seconds_since(t0));
      return;
    }
  });
}

} // namespace aam::cli
