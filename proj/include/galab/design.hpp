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

#ifndef GALAB_DESIGN_HPP
#define GALAB_DESIGN_HPP

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "galab/crossover.hpp"
#include "galab/ga.hpp"
#include "galab/rng.hpp"
#include "galab/selection.hpp"

namespace galab {

/// Factor levels plus the GA settings shared by every cell.
struct DesignSpec {
  std::vector<Selection> selection{Selection::RSIS, Selection::SUS};
  std::vector<Crossover> crossover{Crossover::PMX, Crossover::CX};
  std::vector<double> pc_levels;
  std::vector<double> pm_levels;
  std::size_t replications = 4;
  std::size_t problem_size = 0;

  std::size_t population_size = 30;
  /// 0 selects the default of 10 * problem_size.
  std::size_t max_generations = 0;
  bool stop_at_optimum = true;
};

/// One treatment combination.
struct Cell {
  Selection selection = Selection::RSIS;
  Crossover crossover = Crossover::PMX;
  double pc = 0.0;
  double pm = 0.0;

  friend bool operator==(const Cell&, const Cell&) = default;

  /// Content hash used for seed derivation; independent of the cell's
  /// position in any design.
  std::uint64_t key() const {
    return derive_seed(0x5eedce11ULL, {static_cast<std::uint64_t>(selection),
                                       static_cast<std::uint64_t>(crossover),
                                       std::bit_cast<std::uint64_t>(pc),
                                       std::bit_cast<std::uint64_t>(pm)});
  }
};

/// Validated factorial design with its cells enumerated lexicographically
/// in factor order (selection, crossover, pc, pm).
class Design {
 public:
  explicit Design(DesignSpec spec) : spec_(std::move(spec)) {
    auto check = [](const auto& levels, const char* name) {
      if (levels.empty()) throw std::invalid_argument(std::string("design: no levels for ") + name);
      for (std::size_t i = 0; i < levels.size(); ++i)
        for (std::size_t j = i + 1; j < levels.size(); ++j)
          if (levels[i] == levels[j])
            throw std::invalid_argument(std::string("design: duplicate level for ") + name);
    };
    check(spec_.selection, "selection");
    check(spec_.crossover, "crossover");
    check(spec_.pc_levels, "pc");
    check(spec_.pm_levels, "pm");
    for (double p : spec_.pc_levels)
      if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("design: pc levels must be in [0, 1]");
    for (double p : spec_.pm_levels)
      if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("design: pm levels must be in [0, 1]");
    if (spec_.replications < 2) throw std::invalid_argument("design: need at least 2 replications");
    if (spec_.population_size < 2 || spec_.population_size % 2 != 0)
      throw std::invalid_argument("design: population size must be even and >= 2");

    for (Selection s : spec_.selection)
      for (Crossover c : spec_.crossover)
        for (double pc : spec_.pc_levels)
          for (double pm : spec_.pm_levels) cells_.push_back({s, c, pc, pm});
  }

  const DesignSpec& spec() const noexcept { return spec_; }
  const std::vector<Cell>& cells() const noexcept { return cells_; }
  std::size_t replications() const noexcept { return spec_.replications; }
  std::size_t run_count() const noexcept { return cells_.size() * spec_.replications; }

  std::size_t max_generations() const {
    return spec_.max_generations != 0 ? spec_.max_generations : 10 * std::max<std::size_t>(spec_.problem_size, 1);
  }

  /// GA configuration for one cell; seeds are left for the caller.
  GaConfig config_for(const Cell& cell) const {
    GaConfig cfg;
    cfg.selection = cell.selection;
    cfg.crossover = cell.crossover;
    cfg.crossover_prob = cell.pc;
    cfg.mutation_rate = cell.pm;
    cfg.population_size = spec_.population_size;
    cfg.max_generations = max_generations();
    cfg.stop_at_optimum = spec_.stop_at_optimum;
    return cfg;
  }

 private:
  DesignSpec spec_;
  std::vector<Cell> cells_;
};

inline Design build_design(DesignSpec spec) { return Design(std::move(spec)); }

inline constexpr std::string_view kPresetNames[] = {"table1-small", "big", "table3-novelty"};

/// Named level grids:
///   table1-small    p_c 0.60..0.80 step 0.05, p_m 0.02..0.10 step 0.02
///   big             p_c {0.60, 0.70, 0.80}, p_m {0.001, 0.010, 0.100}
///   table3-novelty  the big grid, run for a fixed 100 generations
inline DesignSpec preset(std::string_view name, std::size_t problem_size, std::size_t replications = 4) {
  DesignSpec spec;
  spec.problem_size = problem_size;
  spec.replications = replications;
  if (name == "table1-small") {
    spec.pc_levels = {0.60, 0.65, 0.70, 0.75, 0.80};
    spec.pm_levels = {0.02, 0.04, 0.06, 0.08, 0.10};
  } else if (name == "big" || name == "table3-novelty") {
    spec.pc_levels = {0.60, 0.70, 0.80};
    spec.pm_levels = {0.001, 0.010, 0.100};
    if (name == "table3-novelty") {
      spec.stop_at_optimum = false;
      spec.max_generations = 100;
    }
  } else {
    throw std::invalid_argument("unknown design preset '" + std::string(name) + "'");
  }
  return spec;
}

}  // namespace galab

#endif  // GALAB_DESIGN_HPP
