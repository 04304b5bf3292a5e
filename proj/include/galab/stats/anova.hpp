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

#ifndef GALAB_STATS_ANOVA_HPP
#define GALAB_STATS_ANOVA_HPP

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "galab/stats/distributions.hpp"

namespace galab::stats {

struct Factor {
  std::string name;
  std::vector<std::string> levels;
};

/// Balanced full-factorial data with one observation per cell per block.
class FactorialData {
 public:
  FactorialData(std::vector<Factor> factors, std::size_t blocks, std::string block_name = "Replication")
      : factors_(std::move(factors)), blocks_(blocks), block_name_(std::move(block_name)) {
    if (factors_.empty()) throw std::invalid_argument("FactorialData: need at least one factor");
    if (factors_.size() > 16) throw std::invalid_argument("FactorialData: too many factors");
    if (blocks_ < 1) throw std::invalid_argument("FactorialData: need at least one block");
    cells_ = 1;
    for (const auto& f : factors_) {
      if (f.levels.empty()) throw std::invalid_argument("FactorialData: factor '" + f.name + "' has no levels");
      cells_ *= f.levels.size();
    }
    values_.assign(cells_ * blocks_, 0.0);
    filled_.assign(cells_ * blocks_, false);
  }

  const std::vector<Factor>& factors() const noexcept { return factors_; }
  std::size_t blocks() const noexcept { return blocks_; }
  std::size_t cells() const noexcept { return cells_; }
  const std::string& block_name() const noexcept { return block_name_; }

  /// Row-major cell index; the last factor varies fastest.
  std::size_t cell_index(std::span<const std::size_t> levels) const {
    if (levels.size() != factors_.size()) throw std::invalid_argument("FactorialData: wrong number of levels");
    std::size_t idx = 0;
    for (std::size_t f = 0; f < factors_.size(); ++f) {
      if (levels[f] >= factors_[f].levels.size()) throw std::out_of_range("FactorialData: level out of range");
      idx = idx * factors_[f].levels.size() + levels[f];
    }
    return idx;
  }

  /// Records one observation; a second value for the same cell and block is
  /// an unbalanced-data error.
  void set(std::span<const std::size_t> levels, std::size_t block, double value) {
    if (block >= blocks_) throw std::out_of_range("FactorialData: block out of range");
    const std::size_t slot = cell_index(levels) * blocks_ + block;
    if (filled_[slot]) throw std::invalid_argument("unbalanced data: duplicate observation for a cell and block");
    filled_[slot] = true;
    values_[slot] = value;
  }

  bool complete() const {
    return std::all_of(filled_.begin(), filled_.end(), [](bool b) { return b; });
  }

  double value(std::size_t cell, std::size_t block) const { return values_[cell * blocks_ + block]; }

 private:
  std::vector<Factor> factors_;
  std::size_t blocks_;
  std::string block_name_;
  std::size_t cells_ = 1;
  std::vector<double> values_;
  std::vector<bool> filled_;
};

struct AnovaRow {
  std::string source;
  std::size_t df = 0;
  double ss = 0.0;
  std::optional<double> ms;
  std::optional<double> f;
  std::optional<double> p;
  /// Factor indices for effect rows; empty for block, Error and Total.
  std::vector<std::size_t> factors;
};

struct AnovaTable {
  std::vector<AnovaRow> rows;
  double grand_mean = 0.0;
  /// 100 * sqrt(MS_error) / grand mean.
  double cv = 0.0;
  std::size_t observations = 0;

  const AnovaRow& row(const std::string& source) const {
    for (const auto& r : rows)
      if (r.source == source) return r;
    throw std::out_of_range("AnovaTable: no row '" + source + "'");
  }
  const AnovaRow& error() const { return rows[rows.size() - 2]; }
  const AnovaRow& total() const { return rows.back(); }
};

inline std::string effect_name(const std::vector<Factor>& factors, std::span<const std::size_t> members) {
  std::string name;
  for (std::size_t i = 0; i < members.size(); ++i) {
    if (i) name += " x ";
    name += factors[members[i]].name;
  }
  return name;
}

/// Balanced factorial ANOVA with a block: every main effect and interaction
/// from marginal means by inclusion-exclusion, block SS from block means,
/// Error as the remainder.
inline AnovaTable anova(const FactorialData& data) {
  if (!data.complete()) throw std::invalid_argument("unbalanced data: some cell is missing a replicate");
  const auto& factors = data.factors();
  const std::size_t m = factors.size();
  const std::size_t cells = data.cells();
  const std::size_t blocks = data.blocks();
  const std::size_t n_obs = cells * blocks;
  const double n_total = static_cast<double>(n_obs);

  std::vector<std::size_t> sizes(m);
  for (std::size_t f = 0; f < m; ++f) sizes[f] = factors[f].levels.size();

  std::vector<double> cell_mean(cells, 0.0);
  std::vector<double> block_mean(blocks, 0.0);
  double grand = 0.0;
  for (std::size_t c = 0; c < cells; ++c) {
    for (std::size_t b = 0; b < blocks; ++b) {
      const double y = data.value(c, b);
      cell_mean[c] += y;
      block_mean[b] += y;
      grand += y;
    }
  }
  for (auto& v : cell_mean) v /= static_cast<double>(blocks);
  for (auto& v : block_mean) v /= static_cast<double>(cells);
  grand /= n_total;

  // Digits of each cell in the mixed-radix level encoding.
  std::vector<std::vector<std::size_t>> digits(cells, std::vector<std::size_t>(m));
  for (std::size_t c = 0; c < cells; ++c) {
    std::size_t rest = c;
    for (std::size_t f = m; f-- > 0;) {
      digits[c][f] = rest % sizes[f];
      rest /= sizes[f];
    }
  }

  const std::size_t subsets = std::size_t{1} << m;
  auto members_of = [&](std::size_t mask) {
    std::vector<std::size_t> out;
    for (std::size_t f = 0; f < m; ++f)
      if (mask & (std::size_t{1} << f)) out.push_back(f);
    return out;
  };
  auto marginal_index = [&](std::size_t c, std::size_t mask) {
    std::size_t idx = 0;
    for (std::size_t f = 0; f < m; ++f)
      if (mask & (std::size_t{1} << f)) idx = idx * sizes[f] + digits[c][f];
    return idx;
  };
  auto marginal_size = [&](std::size_t mask) {
    std::size_t s = 1;
    for (std::size_t f = 0; f < m; ++f)
      if (mask & (std::size_t{1} << f)) s *= sizes[f];
    return s;
  };

  // Marginal means for every subset of factors; subset 0 is the grand mean.
  std::vector<std::vector<double>> marginal(subsets);
  for (std::size_t mask = 0; mask < subsets; ++mask) {
    const std::size_t msize = marginal_size(mask);
    marginal[mask].assign(msize, 0.0);
    for (std::size_t c = 0; c < cells; ++c) marginal[mask][marginal_index(c, mask)] += cell_mean[c];
    const double per = static_cast<double>(cells / msize);
    for (auto& v : marginal[mask]) v /= per;
  }

  // Canonical row order: by interaction order, then lexicographic members.
  std::vector<std::size_t> masks;
  for (std::size_t mask = 1; mask < subsets; ++mask) masks.push_back(mask);
  std::sort(masks.begin(), masks.end(), [&](std::size_t a, std::size_t b) {
    const int pa = std::popcount(a);
    const int pb = std::popcount(b);
    if (pa != pb) return pa < pb;
    return members_of(a) < members_of(b);
  });

  AnovaTable table;
  table.observations = n_obs;
  table.grand_mean = grand;

  double ss_block = 0.0;
  for (double bm : block_mean) ss_block += (bm - grand) * (bm - grand);
  ss_block *= static_cast<double>(cells);
  table.rows.push_back({data.block_name(), blocks - 1, ss_block, {}, {}, {}, {}});

  double ss_effects = 0.0;
  std::size_t df_effects = 0;
  for (std::size_t mask : masks) {
    const std::size_t msize = marginal_size(mask);
    // Effect at each marginal cell: sum over sub-subsets T of (-1)^|S\T| mean_T.
    std::vector<double> effect(msize, 0.0);
    std::vector<bool> done(msize, false);
    for (std::size_t c = 0; c < cells; ++c) {
      const std::size_t idx = marginal_index(c, mask);
      if (done[idx]) continue;
      done[idx] = true;
      double e = 0.0;
      for (std::size_t sub = mask;; sub = (sub - 1) & mask) {
        const int sign = (std::popcount(mask ^ sub) % 2 == 0) ? 1 : -1;
        e += sign * marginal[sub][marginal_index(c, sub)];
        if (sub == 0) break;
      }
      effect[idx] = e;
    }
    double ss = 0.0;
    for (double e : effect) ss += e * e;
    ss *= n_total / static_cast<double>(msize);
    std::size_t df = 1;
    const auto members = members_of(mask);
    for (std::size_t f : members) df *= sizes[f] - 1;
    ss_effects += ss;
    df_effects += df;
    table.rows.push_back({effect_name(factors, members), df, ss, {}, {}, {}, members});
  }

  double ss_total = 0.0;
  for (std::size_t c = 0; c < cells; ++c)
    for (std::size_t b = 0; b < blocks; ++b) {
      const double d = data.value(c, b) - grand;
      ss_total += d * d;
    }

  const std::size_t df_total = n_obs - 1;
  const std::size_t df_error = df_total - (blocks - 1) - df_effects;
  if (df_error == 0) throw std::invalid_argument("anova: zero error degrees of freedom");
  // Rounding can push the remainder fractionally below zero.
  const double ss_error = std::max(0.0, ss_total - ss_block - ss_effects);
  const double ms_error = ss_error / static_cast<double>(df_error);

  for (auto& row : table.rows) {
    if (row.df == 0) continue;
    row.ms = row.ss / static_cast<double>(row.df);
    if (*row.ms == 0.0) {
      row.f = 0.0;
      row.p = 1.0;
    } else if (ms_error == 0.0) {
      row.f = std::numeric_limits<double>::infinity();
      row.p = 0.0;
    } else {
      row.f = *row.ms / ms_error;
      row.p = f_sf(*row.f, static_cast<double>(row.df), static_cast<double>(df_error));
    }
  }
  table.rows.push_back({"Error", df_error, ss_error, ms_error, {}, {}, {}});
  table.rows.push_back({"Total", df_total, ss_total, {}, {}, {}, {}});
  table.cv = grand == 0.0 ? 0.0 : 100.0 * std::sqrt(ms_error) / grand;
  return table;
}

/// Means over the combinations of `members` (marginalising the rest), in
/// row-major order of the member levels, with observations per mean.
struct MarginalMeans {
  std::vector<std::string> labels;
  std::vector<double> means;
  std::size_t per_mean = 0;
};

inline MarginalMeans marginal_means(const FactorialData& data, std::span<const std::size_t> members,
                                    const std::string& separator = "-") {
  if (!data.complete()) throw std::invalid_argument("unbalanced data: some cell is missing a replicate");
  const auto& factors = data.factors();
  for (std::size_t i = 0; i < members.size(); ++i) {
    if (members[i] >= factors.size()) throw std::out_of_range("marginal_means: factor index out of range");
    if (i && members[i] <= members[i - 1]) throw std::invalid_argument("marginal_means: members must be increasing");
  }
  std::size_t combos = 1;
  for (std::size_t f : members) combos *= factors[f].levels.size();

  MarginalMeans out;
  out.means.assign(combos, 0.0);
  out.per_mean = data.cells() * data.blocks() / combos;
  std::vector<std::size_t> digits(factors.size());
  for (std::size_t c = 0; c < data.cells(); ++c) {
    std::size_t rest = c;
    for (std::size_t f = factors.size(); f-- > 0;) {
      digits[f] = rest % factors[f].levels.size();
      rest /= factors[f].levels.size();
    }
    std::size_t idx = 0;
    for (std::size_t f : members) idx = idx * factors[f].levels.size() + digits[f];
    for (std::size_t b = 0; b < data.blocks(); ++b) out.means[idx] += data.value(c, b);
  }
  for (auto& v : out.means) v /= static_cast<double>(out.per_mean);

  out.labels.resize(combos);
  for (std::size_t idx = 0; idx < combos; ++idx) {
    std::size_t rest = idx;
    std::vector<std::string> parts(members.size());
    for (std::size_t i = members.size(); i-- > 0;) {
      const auto& lv = factors[members[i]].levels;
      parts[i] = lv[rest % lv.size()];
      rest /= lv.size();
    }
    for (std::size_t i = 0; i < parts.size(); ++i) out.labels[idx] += (i ? separator : "") + parts[i];
  }
  return out;
}

}  // namespace galab::stats

#endif  // GALAB_STATS_ANOVA_HPP
