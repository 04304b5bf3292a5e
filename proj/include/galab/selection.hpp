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

#ifndef GALAB_SELECTION_HPP
#define GALAB_SELECTION_HPP

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <numeric>
#include <span>
#include <stdexcept>
#include <string_view>
#include <vector>

#include "galab/rng.hpp"

namespace galab {

enum class Selection { RSIS, SUS };

inline std::string_view to_string(Selection s) { return s == Selection::RSIS ? "RSIS" : "SUS"; }

namespace detail {

inline double checked_total(std::span<const double> fitnesses, std::size_t pool_size) {
  if (fitnesses.empty()) throw std::invalid_argument("selection: empty population");
  if (pool_size == 0) throw std::invalid_argument("selection: pool size must be >= 1");
  double total = 0.0;
  for (double f : fitnesses) {
    if (!(f > 0.0) || !std::isfinite(f))
      throw std::invalid_argument("selection: fitness values must be positive and finite");
    total += f;
  }
  return total;
}

}  // namespace detail

/// Remainder stochastic independent sampling. Each individual first gets
/// floor(e_i) copies, e_i = pool_size * f_i / sum(f). Remaining slots go to
/// Bernoulli trials on frac(e_i), sweeping the population in a fresh random
/// order each pass until the pool is full; a success consumes that
/// individual's fraction, so every count is floor(e_i) or ceil(e_i). A fixed
/// index order would favour low indices.
inline std::vector<std::size_t> rsis_select(std::span<const double> fitnesses,
                                            std::size_t pool_size, Rng& rng) {
  const double total = detail::checked_total(fitnesses, pool_size);
  const std::size_t n = fitnesses.size();
  std::vector<std::size_t> pool;
  pool.reserve(pool_size);
  std::vector<double> frac(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double expected = static_cast<double>(pool_size) * fitnesses[i] / total;
    const double whole = std::floor(expected);
    for (std::size_t c = 0; c < static_cast<std::size_t>(whole) && pool.size() < pool_size; ++c)
      pool.push_back(i);
    frac[i] = expected - whole;
  }
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  while (pool.size() < pool_size) {
    bool any_left = false;
    for (std::size_t k = n - 1; k > 0; --k) std::swap(order[k], order[rng.below(k + 1)]);
    for (std::size_t k = 0; k < n && pool.size() < pool_size; ++k) {
      const std::size_t i = order[k];
      if (frac[i] <= 0.0) continue;
      any_left = true;
      if (rng.uniform() < frac[i]) {
        pool.push_back(i);
        frac[i] = 0.0;
      }
    }
    // Only reachable through rounding in the floor pass.
    if (!any_left) {
      const auto fittest = static_cast<std::size_t>(
          std::max_element(fitnesses.begin(), fitnesses.end()) - fitnesses.begin());
      pool.resize(pool_size, fittest);
    }
  }
  return pool;
}

/// Stochastic universal sampling: one spin, pool_size equally spaced pointers.
/// The pool comes out in index order.
inline std::vector<std::size_t> sus_select(std::span<const double> fitnesses,
                                           std::size_t pool_size, Rng& rng) {
  const double total = detail::checked_total(fitnesses, pool_size);
  const double step = total / static_cast<double>(pool_size);
  const double start = rng.uniform() * step;
  std::vector<std::size_t> pool;
  pool.reserve(pool_size);
  double cumulative = 0.0;
  std::size_t k = 0;
  for (std::size_t i = 0; i < fitnesses.size() && k < pool_size; ++i) {
    cumulative += fitnesses[i];
    while (k < pool_size && start + static_cast<double>(k) * step < cumulative) {
      pool.push_back(i);
      ++k;
    }
  }
  // Pointers lost to rounding at the top end belong to the last individual.
  while (pool.size() < pool_size) pool.push_back(fitnesses.size() - 1);
  return pool;
}

inline std::vector<std::size_t> select(Selection method, std::span<const double> fitnesses,
                                       std::size_t pool_size, Rng& rng) {
  return method == Selection::RSIS ? rsis_select(fitnesses, pool_size, rng)
                                   : sus_select(fitnesses, pool_size, rng);
}

}  // namespace galab

#endif  // GALAB_SELECTION_HPP
