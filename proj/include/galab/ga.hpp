// Copyright 2026 The galab Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef GALAB_GA_HPP
#define GALAB_GA_HPP

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <span>
#include <stdexcept>
#include <vector>

#include "galab/crossover.hpp"
#include "galab/instance.hpp"
#include "galab/mutation.hpp"
#include "galab/rng.hpp"
#include "galab/selection.hpp"

namespace galab {

/// One operator/parameter setting. Mutation is always inversion.
struct GaConfig {
  Selection selection = Selection::RSIS;
  Crossover crossover = Crossover::PMX;
  double crossover_prob = 0.6;
  /// Per-child probability of one inversion over random positions i <= j.
  double mutation_rate = 0.02;
  std::size_t population_size = 30;
  std::size_t max_generations = 50;
  /// Stop at the first generation whose best equals the known optimum.
  bool stop_at_optimum = true;
  std::uint64_t population_seed = 0;
  std::uint64_t run_seed = 0;

  void validate() const {
    if (!(crossover_prob >= 0.0 && crossover_prob <= 1.0))
      throw std::invalid_argument("GaConfig: crossover probability must be in [0, 1]");
    if (!(mutation_rate >= 0.0 && mutation_rate <= 1.0))
      throw std::invalid_argument("GaConfig: mutation rate must be in [0, 1]");
    if (population_size < 2 || population_size % 2 != 0)
      throw std::invalid_argument("GaConfig: population size must be even and >= 2");
    if (max_generations < 1) throw std::invalid_argument("GaConfig: max_generations must be >= 1");
  }
};

/// Crossover novelty counters: `expected` counts crossover applications
/// attempted, `actual_new` those yielding a child distinct from both parents.
struct NoveltyCounts {
  std::uint64_t actual_new = 0;
  std::uint64_t expected = 0;

  double percent() const {
    return expected == 0 ? 0.0 : 100.0 * static_cast<double>(actual_new) / static_cast<double>(expected);
  }
  NoveltyCounts& operator+=(const NoveltyCounts& o) {
    actual_new += o.actual_new;
    expected += o.expected;
    return *this;
  }
  friend bool operator==(const NoveltyCounts&, const NoveltyCounts&) = default;
};

struct RunResult {
  double offline = 0.0;
  double online = 0.0;
  std::size_t generations = 0;
  std::uint64_t evaluations = 0;
  bool reached_optimum = false;
  /// Best fitness of each evaluated generation.
  std::vector<Profit> best_history;
  NoveltyCounts novelty;

  friend bool operator==(const RunResult&, const RunResult&) = default;
};

/// Mean of the per-generation best values.
inline double offline_performance(std::span<const Profit> best_history) {
  if (best_history.empty()) throw std::invalid_argument("offline_performance: empty history");
  const double sum = std::accumulate(best_history.begin(), best_history.end(), 0.0,
                                     [](double acc, Profit p) { return acc + static_cast<double>(p); });
  return sum / static_cast<double>(best_history.size());
}

/// Mean of every fitness evaluation performed.
inline double online_performance(std::span<const Profit> evaluations) {
  if (evaluations.empty()) throw std::invalid_argument("online_performance: empty history");
  return offline_performance(evaluations);
}

/// The starting population: independent uniform permutations drawn from
/// `seed`. Cells sharing a seed share their initial population.
inline std::vector<Tour> initial_population(std::size_t n, std::size_t size, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<Tour> pop;
  pop.reserve(size);
  for (std::size_t k = 0; k < size; ++k) {
    std::vector<City> c(n);
    std::iota(c.begin(), c.end(), City{0});
    for (std::size_t i = n - 1; i > 0; --i) std::swap(c[i], c[rng.below(i + 1)]);
    pop.push_back(Tour::unchecked(std::move(c)));
  }
  return pop;
}

/// Uniform nonempty proper PMX segment: cut1 < cut2 from {0..n}, minus (0, n).
inline std::pair<std::size_t, std::size_t> draw_pmx_cuts(std::size_t n, Rng& rng) {
  for (;;) {
    auto a = static_cast<std::size_t>(rng.below(n + 1));
    auto b = static_cast<std::size_t>(rng.below(n + 1));
    if (a == b) continue;
    if (a > b) std::swap(a, b);
    if (a == 0 && b == n) continue;
    return {a, b};
  }
}

/// Generational GA without elitism. Per generation: evaluate, record the
/// best, stop if done, select a pool, cross consecutive pool pairs with
/// probability p_c (else copy), mutate each child with probability p_m,
/// replace the population.
inline RunResult run_ga(const GaConfig& config, const TspInstance& instance) {
  config.validate();
  const std::size_t n = instance.n();
  const std::size_t lambda = config.population_size;
  std::vector<Tour> pop = initial_population(n, lambda, config.population_seed);
  Rng rng(config.run_seed);

  RunResult result;
  result.best_history.reserve(std::min<std::size_t>(config.max_generations, 4096));
  std::vector<double> fit(lambda);
  double eval_sum = 0.0;
  std::vector<Tour> next;
  next.reserve(lambda);

  for (std::size_t gen = 1; gen <= config.max_generations; ++gen) {
    Profit best = 0;
    for (std::size_t k = 0; k < lambda; ++k) {
      const Profit f = fitness_unchecked(pop[k].cities(), instance.profit());
      fit[k] = static_cast<double>(f);
      eval_sum += fit[k];
      best = std::max(best, f);
    }
    result.best_history.push_back(best);
    result.evaluations += lambda;
    result.generations = gen;
    if (best == instance.optimum()) {
      result.reached_optimum = true;
      if (config.stop_at_optimum) break;
    }
    if (gen == config.max_generations) break;

    const std::vector<std::size_t> pool = select(config.selection, fit, lambda, rng);
    next.clear();
    for (std::size_t k = 0; k + 1 < lambda; k += 2) {
      const Tour& a = pop[pool[k]];
      const Tour& b = pop[pool[k + 1]];
      Offspring children{a, b};
      if (rng.bernoulli(config.crossover_prob)) {
        if (config.crossover == Crossover::PMX) {
          const auto [c1, c2] = draw_pmx_cuts(n, rng);
          children = pmx(a, b, c1, c2);
        } else {
          children = cx(a, b);
        }
        ++result.novelty.expected;
        if (produces_new(children, a, b)) ++result.novelty.actual_new;
      }
      for (Tour* child : {&children.first, &children.second}) {
        if (rng.bernoulli(config.mutation_rate)) {
          auto i = static_cast<std::size_t>(rng.below(n));
          auto j = static_cast<std::size_t>(rng.below(n));
          if (i > j) std::swap(i, j);
          *child = inversion_mutate(*child, i, j);
        }
      }
      next.push_back(std::move(children.first));
      next.push_back(std::move(children.second));
    }
    pop.swap(next);
  }

  result.offline = offline_performance(result.best_history);
  result.online = eval_sum / static_cast<double>(result.evaluations);
  return result;
}

}  // namespace galab

#endif  // GALAB_GA_HPP
