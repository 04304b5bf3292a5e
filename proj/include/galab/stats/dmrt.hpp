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

#ifndef GALAB_STATS_DMRT_HPP
#define GALAB_STATS_DMRT_HPP

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <numeric>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "galab/stats/distributions.hpp"

namespace galab::stats {

/// Duncan's multiple range test result. All vectors are in ranked order
/// (descending mean).
struct DmrtGrouping {
  std::vector<std::string> labels;
  std::vector<double> means;
  /// Group letters per treatment, e.g. "a", "ab", "a-c".
  std::vector<std::string> letters;
  /// Group indices per treatment (0 = "a").
  std::vector<std::vector<std::size_t>> groups;
  double std_error = 0.0;
  /// ranges[p - 2] is the least significant range for a span of p means.
  std::vector<double> ranges;
  double alpha = 0.05;
  double df_error = 0.0;
};

/// Name of group `g`: a..z, then A..Z, then g<number>.
inline std::string group_letter(std::size_t g) {
  if (g < 26) return std::string(1, static_cast<char>('a' + g));
  if (g < 52) return std::string(1, static_cast<char>('A' + (g - 26)));
  return "g" + std::to_string(g + 1);
}

/// Letter string for a sorted set of groups; runs of three or more
/// consecutive letters collapse to "first-last".
inline std::string format_letters(std::span<const std::size_t> groups) {
  std::string out;
  for (std::size_t i = 0; i < groups.size();) {
    std::size_t j = i;
    while (j + 1 < groups.size() && groups[j + 1] == groups[j] + 1) ++j;
    if (j - i >= 2) {
      out += group_letter(groups[i]) + "-" + group_letter(groups[j]);
    } else {
      for (std::size_t t = i; t <= j; ++t) out += group_letter(groups[t]);
    }
    i = j + 1;
  }
  return out;
}

/// Least significant ranges R_p = q(p, df, alpha_p) * s_m for p = 2..k with
/// Duncan's protection level alpha_p = 1 - (1 - alpha)^(p - 1).
inline std::vector<double> duncan_ranges(std::size_t k, double df_error, double alpha, double std_error) {
  if (k < 2) throw std::invalid_argument("duncan_ranges: need at least 2 means");
  std::vector<double> ranges;
  for (std::size_t p = 2; p <= k; ++p) {
    const double alpha_p = 1.0 - std::pow(1.0 - alpha, static_cast<double>(p - 1));
    ranges.push_back(studentized_range_quantile(static_cast<int>(p), df_error, alpha_p) * std_error);
  }
  return ranges;
}

/// Letter grouping from given ranges. With means ranked descending, a span
/// i..j is homogeneous when mean_i - mean_j < ranges[j - i - 1]. Each
/// treatment's group is the longest homogeneous span it starts; spans
/// contained in another are dropped and the rest are lettered in order.
inline DmrtGrouping group_by_ranges(std::span<const std::string> labels, std::span<const double> means,
                                    std::span<const double> ranges) {
  const std::size_t k = means.size();
  if (k < 2) throw std::invalid_argument("dmrt: need at least 2 means");
  if (labels.size() != k) throw std::invalid_argument("dmrt: one label per mean required");
  if (ranges.size() != k - 1) throw std::invalid_argument("dmrt: need one range per span 2..k");

  std::vector<std::size_t> order(k);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return means[a] > means[b]; });

  DmrtGrouping out;
  for (std::size_t i : order) {
    out.labels.push_back(labels[i]);
    out.means.push_back(means[i]);
  }
  out.ranges.assign(ranges.begin(), ranges.end());
  const auto& m = out.means;

  std::vector<std::size_t> reach(k);
  for (std::size_t i = 0; i < k; ++i) {
    reach[i] = i;
    for (std::size_t j = i + 1; j < k; ++j)
      if (m[i] - m[j] < ranges[j - i - 1]) reach[i] = j;
  }
  out.groups.assign(k, {});
  std::size_t letter = 0;
  std::size_t covered_to = 0;  // one past the furthest reach seen so far
  for (std::size_t i = 0; i < k; ++i) {
    if (i > 0 && reach[i] < covered_to) continue;  // nested in an earlier span
    for (std::size_t t = i; t <= reach[i]; ++t) out.groups[t].push_back(letter);
    ++letter;
    covered_to = reach[i] + 1;
  }
  for (const auto& g : out.groups) out.letters.push_back(format_letters(g));
  return out;
}

/// Duncan's multiple range test for k means each averaging `per_mean`
/// observations.
inline DmrtGrouping dmrt(std::span<const std::string> labels, std::span<const double> means, std::size_t per_mean,
                         double ms_error, double df_error, double alpha = 0.05) {
  if (means.size() < 2) throw std::invalid_argument("dmrt: need at least 2 means");
  if (per_mean < 1) throw std::invalid_argument("dmrt: per_mean must be >= 1");
  if (!(ms_error > 0.0) || !std::isfinite(ms_error)) throw std::invalid_argument("dmrt: MS_error must be positive");
  if (!(df_error >= 1.0)) throw std::invalid_argument("dmrt: error df must be >= 1");
  if (!(alpha > 0.0 && alpha < 1.0)) throw std::invalid_argument("dmrt: alpha must be in (0, 1)");
  const double std_error = std::sqrt(ms_error / static_cast<double>(per_mean));
  const auto ranges = duncan_ranges(means.size(), df_error, alpha, std_error);
  DmrtGrouping out = group_by_ranges(labels, means, ranges);
  out.std_error = std_error;
  out.alpha = alpha;
  out.df_error = df_error;
  return out;
}

}  // namespace galab::stats

#endif  // GALAB_STATS_DMRT_HPP
