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

#include "aamsim/optimizer.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

#include "aamsim/parallel.hpp"

namespace aam::optimizer {

void GaConfig::validate() const {
  require(population > 0, "GaConfig: population must be positive");
  require(elitism >= 0 && elitism < population, "GaConfig: need population > elitism >= 0");
  require(generations >= 0, "GaConfig: generations must be non-negative");
  require(tournament_k >= 1, "GaConfig: tournament size must be >= 1");
  require(crossover_prob >= 0.0 && crossover_prob <= 1.0, "GaConfig: crossover_prob outside [0, 1]");
  require(mutation_prob >= 0.0 && mutation_prob <= 1.0, "GaConfig: mutation_prob outside [0, 1]");
  require(mutation_sigma_deg >= 0.0, "GaConfig: mutation sigma must be non-negative");
  require(gene_min_deg >= 0.0 && gene_max_deg <= 90.0 && gene_min_deg <= gene_max_deg,
          "GaConfig: gene bounds must satisfy 0 <= min <= max <= 90");
}

double evaluate_genome(std::span<const double> genome, const scenario::Scenario& scn) {
  scenario::Scenario s = scn;
  scenario::set_uptilts(s.layout, genome);
  return coverage::min_sir_db(coverage::build_coverage_map(s));
}

FitnessEvaluator::FitnessEvaluator(const scenario::Scenario& scn)
    : scn_(scn), link_(scn.bs_link()), n_sites_(scn.layout.sites.size()),
      n_points_(scn.grid.size()) {
  rays_.resize(n_points_ * n_sites_);
  down_dbm_.resize(n_points_ * n_sites_);
  for (std::size_t p = 0; p < n_points_; ++p) {
    for (std::size_t s = 0; s < n_sites_; ++s) {
      const auto& site = scn_.layout.sites[s];
      rays_[p * n_sites_ + s] = channel::ray_geometry(site.position, scn_.grid.points[p]);
      down_dbm_[p * n_sites_ + s] =
          coverage::compute_rsrp(scn_.grid.points[p], site, coverage::PanelKind::down, scn_);
    }
  }
}

double FitnessEvaluator::operator()(std::span<const double> genome) const {
  require(genome.size() == n_sites_, "FitnessEvaluator: genome length must equal site count");
  std::vector<antenna::UlaPanel> up(n_sites_, scn_.panel);
  for (std::size_t s = 0; s < n_sites_; ++s) {
    require(genome[s] >= 0.0 && genome[s] <= 90.0, "FitnessEvaluator: gene out of [0, 90] deg");
    up[s].tilt_deg = -genome[s];
  }

  // Panel order matches coverage::transmitting_panels: (site, down), (site, up).
  std::vector<double> row(2 * n_sites_);
  double worst = coverage::kNoInterferenceSir;
  for (std::size_t p = 0; p < n_points_; ++p) {
    for (std::size_t s = 0; s < n_sites_; ++s) {
      const channel::RayGeometry& geo = rays_[p * n_sites_ + s];
      const double gd = db_to_linear(antenna::ula_gain_db(up[s], geo.tx_direct_elev_deg));
      double gr = 0.0;
      if (link_.ground_reflection_enabled) {
        gr = db_to_linear(antenna::ula_gain_db(up[s], geo.tx_reflected_elev_deg));
      }
      row[2 * s] = down_dbm_[p * n_sites_ + s];
      row[2 * s + 1] = channel::combine_two_ray_dbm(geo, gd, 1.0, gr, 1.0, link_);
    }
    std::size_t best = 0;
    for (std::size_t k = 1; k < row.size(); ++k) {
      if (row[k] > row[best]) best = k;
    }
    double interference_mw = 0.0;
    for (std::size_t k = 0; k < row.size(); ++k) {
      if (k != best) interference_mw += db_to_linear(row[k]);
    }
    const double sir = row[best] - linear_to_db(interference_mw);
    worst = std::min(worst, sir);
  }
  return worst;
}

namespace {

struct Individual {
  std::vector<double> genes;
  double fitness = 0.0;
};

std::size_t tournament(const std::vector<Individual>& pop, int k, Rng& rng) {
  std::uniform_int_distribution<std::size_t> pick(0, pop.size() - 1);
  std::size_t best = pick(rng);
  for (int i = 1; i < k; ++i) {
    const std::size_t c = pick(rng);
    if (pop[c].fitness > pop[best].fitness || (pop[c].fitness == pop[best].fitness && c < best)) {
      best = c;
    }
  }
  return best;
}

GenerationStats stats_of(int generation, const std::vector<Individual>& pop) {
  GenerationStats st;
  st.generation = generation;
  st.best_db = pop.front().fitness;
  double sum = 0.0;
  for (const auto& ind : pop) {
    st.best_db = std::max(st.best_db, ind.fitness);
    sum += ind.fitness;
  }
  st.mean_db = sum / static_cast<double>(pop.size());
  return st;
}

} // namespace

GaResult run_ga(const GaConfig& config, const scenario::Scenario& scn, std::uint64_t seed,
                int jobs) {
  config.validate();
  const FitnessEvaluator fitness(scn);
  const std::size_t n_genes = fitness.genome_size();
  Rng rng = make_stream(seed, "ga");
  std::uniform_real_distribution<double> init(config.gene_min_deg, config.gene_max_deg);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::normal_distribution<double> gauss(0.0, config.mutation_sigma_deg);

  GaResult result;
  Individual best_ever;
  best_ever.fitness = -std::numeric_limits<double>::infinity();
  const auto evaluate = [&](std::vector<Individual>& pop, std::size_t from) {
    parallel_for(pop.size() - from, jobs,
                 [&](std::size_t i) { pop[from + i].fitness = fitness(pop[from + i].genes); });
    result.evaluations += pop.size() - from;
    for (const auto& ind : pop) {
      if (ind.fitness > best_ever.fitness) best_ever = ind;
    }
  };

  std::vector<Individual> pop(static_cast<std::size_t>(config.population));
  for (auto& ind : pop) {
    ind.genes.resize(n_genes);
    for (double& g : ind.genes) g = init(rng);
  }
  evaluate(pop, 0);
  result.history.push_back(stats_of(0, pop));

  std::vector<std::size_t> order(pop.size());
  for (int gen = 1; gen <= config.generations; ++gen) {
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return pop[a].fitness > pop[b].fitness; });

    std::vector<Individual> next;
    next.reserve(pop.size());
    for (int e = 0; e < config.elitism; ++e) next.push_back(pop[order[e]]);
    const std::size_t n_elite = next.size();

    while (next.size() < pop.size()) {
      const Individual& a = pop[tournament(pop, config.tournament_k, rng)];
      const Individual& b = pop[tournament(pop, config.tournament_k, rng)];
      Individual child;
      child.genes = a.genes;
      if (unit(rng) < config.crossover_prob) {
        for (std::size_t i = 0; i < n_genes; ++i) {
          if (unit(rng) < 0.5) child.genes[i] = b.genes[i];
        }
      }
      for (double& g : child.genes) {
        if (unit(rng) < config.mutation_prob) {
          g = std::clamp(g + gauss(rng), config.gene_min_deg, config.gene_max_deg);
        }
      }
      next.push_back(std::move(child));
    }
    pop = std::move(next);
    evaluate(pop, n_elite);
    result.history.push_back(stats_of(gen, pop));
  }

  result.best_genome = best_ever.genes;
  result.best_fitness_db = best_ever.fitness;
  return result;
}

} // namespace aam::optimizer
