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

namespace aam::optimizer {

struct GaConfig {
  int population = 50;
  int generations = 100;
  int tournament_k = 3;
  double crossover_prob = 0.9;
  double mutation_sigma_deg = 2.0;
  double mutation_prob = 1.0 / 19.0;
  int elitism = 2;
  double gene_min_deg = 0.0;
  double gene_max_deg = 90.0;

  void validate() const;
};

struct GenerationStats {
  int generation = 0;
  double best_db = 0.0;
  double mean_db = 0.0;
};

struct GaResult {
  std::vector<double> best_genome; // uptilt per site id
  double best_fitness_db = 0.0;
  std::vector<GenerationStats> history; // entry 0 is the initial population
  std::size_t evaluations = 0;
};

// Min-SIR of the scenario after installing `genome` as the per-site uptilts.
// Builds a full CoverageMap; the reference route for FitnessEvaluator.
double evaluate_genome(std::span<const double> genome, const scenario::Scenario& scn);

// Same objective with every genome-independent quantity precomputed: ray
// geometry per (point, site) and the downtilt powers. Agrees with
// evaluate_genome to rounding.
class FitnessEvaluator {
public:
  explicit FitnessEvaluator(const scenario::Scenario& scn);

  double operator()(std::span<const double> genome) const;
  std::size_t genome_size() const { return n_sites_; }

private:
  scenario::Scenario scn_;
  channel::LinkBudgetParams link_;
  std::size_t n_sites_ = 0;
  std::size_t n_points_ = 0;
  std::vector<channel::RayGeometry> rays_; // [point][site]
  std::vector<double> down_dbm_; // [point][site]
};

// Tournament selection, uniform crossover, clipped Gaussian mutation and
// elitist replacement. Deterministic for a given seed (stream label "ga") and
// independent of `jobs`.
GaResult run_ga(const GaConfig& config, const scenario::Scenario& scn, std::uint64_t seed,
                int jobs = 1);

} // namespace aam::optimizer
