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

#ifndef GALAB_STATS_CONTRASTS_HPP
#define GALAB_STATS_CONTRASTS_HPP

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "galab/stats/distributions.hpp"

namespace galab::stats {

namespace detail {

// Exact rational on int64 with overflow checks; enough for k <= 12.
struct Rational {
  std::int64_t num = 0;
  std::int64_t den = 1;

  static std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t r = 0;
    if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("orthogonal polynomial coefficients overflow");
    return r;
  }
  static std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    std::int64_t r = 0;
    if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("orthogonal polynomial coefficients overflow");
    return r;
  }
  static Rational make(std::int64_t n, std::int64_t d) {
    if (d < 0) {
      n = -n;
      d = -d;
    }
    const std::int64_t g = std::gcd(n, d);
    return g > 1 ? Rational{n / g, d / g} : Rational{n, d};
  }
  friend Rational operator*(Rational a, Rational b) {
    const std::int64_t g1 = std::gcd(a.num, b.den);
    const std::int64_t g2 = std::gcd(b.num, a.den);
    const std::int64_t n1 = g1 ? a.num / g1 : a.num, d2 = g1 ? b.den / g1 : b.den;
    const std::int64_t n2 = g2 ? b.num / g2 : b.num, d1 = g2 ? a.den / g2 : a.den;
    return make(checked_mul(n1, n2), checked_mul(d1, d2));
  }
  friend Rational operator-(Rational a, Rational b) {
    const std::int64_t g = std::gcd(a.den, b.den);
    const std::int64_t l = checked_mul(a.den / g, b.den);
    return make(checked_add(checked_mul(a.num, l / a.den), -checked_mul(b.num, l / b.den)), l);
  }
};

}  // namespace detail

/// Integer orthogonal-polynomial contrast coefficients for k equally spaced
/// levels: row r-1 holds the degree-r contrast, r = 1..k-1, scaled to
/// coprime integers with a positive last entry.
inline std::vector<std::vector<std::int64_t>> orthogonal_polynomials(std::size_t k) {
  if (k < 2) throw std::invalid_argument("orthogonal_polynomials: need at least 2 levels");
  if (k > 12) throw std::invalid_argument("orthogonal_polynomials: at most 12 levels supported");
  using detail::Rational;
  const auto kk = static_cast<std::int64_t>(k);
  // Centered positions x_i = i - (k-1)/2 and the three-term recurrence
  // P_{r+1} = x P_r - r^2 (k^2 - r^2) / (4 (4 r^2 - 1)) P_{r-1}.
  std::vector<Rational> x(k);
  for (std::size_t i = 0; i < k; ++i) x[i] = Rational::make(2 * static_cast<std::int64_t>(i) - (kk - 1), 2);
  std::vector<Rational> prev(k, Rational{1, 1});
  std::vector<Rational> cur = x;
  std::vector<std::vector<Rational>> polys{cur};
  for (std::int64_t r = 1; r + 1 < kk; ++r) {
    const Rational c = Rational::make(r * r * (kk * kk - r * r), 4 * (4 * r * r - 1));
    std::vector<Rational> next(k);
    for (std::size_t i = 0; i < k; ++i) next[i] = x[i] * cur[i] - c * prev[i];
    prev = std::move(cur);
    cur = std::move(next);
    polys.push_back(cur);
  }

  std::vector<std::vector<std::int64_t>> out;
  for (const auto& p : polys) {
    std::int64_t lcm = 1;
    for (const auto& v : p) lcm = std::lcm(lcm, v.den);
    std::vector<std::int64_t> ints(k);
    std::int64_t g = 0;
    for (std::size_t i = 0; i < k; ++i) {
      ints[i] = Rational::checked_mul(p[i].num, lcm / p[i].den);
      g = std::gcd(g, ints[i]);
    }
    const std::int64_t sign = ints.back() < 0 ? -1 : 1;
    for (auto& v : ints) v = sign * v / g;
    out.push_back(std::move(ints));
  }
  return out;
}

struct TrendRow {
  std::size_t order = 1;
  std::string name;
  std::vector<std::int64_t> coefficients;
  double ss = 0.0;
  double f = 0.0;
  double p = 1.0;
};

inline std::string trend_name(std::size_t order) {
  static const char* names[] = {"linear", "quadratic", "cubic", "quartic"};
  return order >= 1 && order <= 4 ? names[order - 1] : "order " + std::to_string(order);
}

inline bool equally_spaced(std::span<const double> sorted_levels) {
  if (sorted_levels.size() < 2) return true;
  const double range = sorted_levels.back() - sorted_levels.front();
  if (!(range > 0.0)) return false;
  const double step = range / static_cast<double>(sorted_levels.size() - 1);
  for (std::size_t i = 1; i < sorted_levels.size(); ++i)
    if (std::abs((sorted_levels[i] - sorted_levels[i - 1]) - step) > 1e-9 * range) return false;
  return true;
}

/// Splits a quantitative factor's SS into polynomial trend components. Each
/// component has one degree of freedom and is tested against MS_error.
inline std::vector<TrendRow> trend_contrasts(std::span<const double> level_means, std::span<const double> levels,
                                             std::size_t per_mean, double ms_error, double df_error) {
  const std::size_t k = level_means.size();
  if (levels.size() != k) throw std::invalid_argument("trend_contrasts: one level value per mean required");
  if (k < 3) throw std::invalid_argument("trend_contrasts: need at least 3 levels");
  if (per_mean < 1) throw std::invalid_argument("trend_contrasts: per_mean must be >= 1");
  if (!(ms_error >= 0.0) || !(df_error > 0.0)) throw std::invalid_argument("trend_contrasts: invalid error term");

  std::vector<std::size_t> order(k);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return levels[a] < levels[b]; });
  std::vector<double> sorted_levels(k), sorted_means(k);
  for (std::size_t i = 0; i < k; ++i) {
    sorted_levels[i] = levels[order[i]];
    sorted_means[i] = level_means[order[i]];
  }
  if (!equally_spaced(sorted_levels)) throw std::invalid_argument("trend_contrasts: levels must be equally spaced");

  const auto coeffs = orthogonal_polynomials(k);
  std::vector<TrendRow> rows;
  for (std::size_t r = 0; r < coeffs.size(); ++r) {
    double dot = 0.0;
    double norm = 0.0;
    for (std::size_t i = 0; i < k; ++i) {
      const auto c = static_cast<double>(coeffs[r][i]);
      dot += c * sorted_means[i];
      norm += c * c;
    }
    TrendRow row;
    row.order = r + 1;
    row.name = trend_name(r + 1);
    row.coefficients = coeffs[r];
    row.ss = static_cast<double>(per_mean) * dot * dot / norm;
    if (row.ss == 0.0) {
      row.f = 0.0;
      row.p = 1.0;
    } else if (ms_error == 0.0) {
      row.f = std::numeric_limits<double>::infinity();
      row.p = 0.0;
    } else {
      row.f = row.ss / ms_error;
      row.p = f_sf(row.f, 1.0, df_error);
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace galab::stats

#endif  // GALAB_STATS_CONTRASTS_HPP
