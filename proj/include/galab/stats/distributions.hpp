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

#ifndef GALAB_STATS_DISTRIBUTIONS_HPP
#define GALAB_STATS_DISTRIBUTIONS_HPP

#include <array>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <utility>

#include <boost/math/distributions/fisher_f.hpp>
#include <boost/math/tools/roots.hpp>

namespace galab::stats {

/// Upper tail P(F > f) of the F(df1, df2) distribution.
inline double f_sf(double f, double df1, double df2) {
  if (!(df1 > 0.0) || !(df2 > 0.0)) throw std::invalid_argument("f_sf: degrees of freedom must be positive");
  if (std::isnan(f) || f < 0.0) throw std::invalid_argument("f_sf: F must be >= 0");
  if (f == 0.0) return 1.0;
  if (std::isinf(f)) return 0.0;
  const boost::math::fisher_f_distribution<double> dist(df1, df2);
  return boost::math::cdf(boost::math::complement(dist, f));
}

namespace detail {

struct GaussLegendre20 {
  std::array<double, 20> nodes{};
  std::array<double, 20> weights{};

  GaussLegendre20() {
    constexpr int n = 20;
    for (int i = 0; i < n; ++i) {
      double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
      double dp = 0.0;
      for (int iter = 0; iter < 100; ++iter) {
        double p0 = 1.0;
        double p1 = x;
        for (int k = 2; k <= n; ++k) {
          const double pk = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
          p0 = p1;
          p1 = pk;
        }
        dp = n * (x * p1 - p0) / (x * x - 1.0);
        const double dx = p1 / dp;
        x -= dx;
        if (std::abs(dx) < 1e-16) break;
      }
      nodes[i] = x;
      weights[i] = 2.0 / ((1.0 - x * x) * dp * dp);
    }
  }
};

inline const GaussLegendre20& gl20() {
  static const GaussLegendre20 rule;
  return rule;
}

/// Integral of f over [a, b] split into `panels` equal Gauss-Legendre panels.
template <typename F>
double integrate(F&& f, double a, double b, int panels) {
  const auto& rule = gl20();
  const double width = (b - a) / panels;
  double total = 0.0;
  for (int p = 0; p < panels; ++p) {
    const double mid = a + (p + 0.5) * width;
    const double half = 0.5 * width;
    double s = 0.0;
    for (std::size_t i = 0; i < rule.nodes.size(); ++i) s += rule.weights[i] * f(mid + half * rule.nodes[i]);
    total += s * half;
  }
  return total;
}

inline double normal_cdf(double x) { return 0.5 * std::erfc(-x / std::numbers::sqrt2); }

inline double normal_pdf(double x) { return std::exp(-0.5 * x * x) / std::sqrt(2.0 * std::numbers::pi); }

// Inner-integral grid for the range of k standard normals.
inline constexpr double kZLo = -8.5;
inline constexpr double kZHi = 8.5;
inline constexpr int kZPanels = 10;

struct ZGrid {
  std::array<double, kZPanels * 20> z{};
  std::array<double, kZPanels * 20> w_phi{};  // weight * phi(z)
  std::array<double, kZPanels * 20> cdf{};

  ZGrid() {
    const auto& rule = gl20();
    const double width = (kZHi - kZLo) / kZPanels;
    std::size_t idx = 0;
    for (int p = 0; p < kZPanels; ++p) {
      const double mid = kZLo + (p + 0.5) * width;
      for (std::size_t i = 0; i < 20; ++i, ++idx) {
        z[idx] = mid + 0.5 * width * rule.nodes[i];
        w_phi[idx] = 0.5 * width * rule.weights[i] * normal_pdf(z[idx]);
        cdf[idx] = normal_cdf(z[idx]);
      }
    }
  }
};

inline const ZGrid& zgrid() {
  static const ZGrid grid;
  return grid;
}

/// P(range of k iid standard normals < w).
inline double normal_range_cdf(double w, int k) {
  if (w <= 0.0) return 0.0;
  const ZGrid& g = zgrid();
  double total = 0.0;
  for (std::size_t i = 0; i < g.z.size(); ++i) {
    const double inside = normal_cdf(g.z[i] + w) - g.cdf[i];
    if (inside > 0.0) total += g.w_phi[i] * std::pow(inside, k - 1);
  }
  return std::min(1.0, k * total);
}

}  // namespace detail

/// P(Q < q) for the studentized range of k means with df error degrees of
/// freedom. Outer integral over the density of s = sqrt(chi2_df / df).
inline double studentized_range_cdf(double q, int k, double df) {
  if (k < 2) throw std::invalid_argument("studentized_range_cdf: k must be >= 2");
  if (!(df >= 1.0)) throw std::invalid_argument("studentized_range_cdf: df must be >= 1");
  if (q <= 0.0) return 0.0;
  if (std::isinf(df)) return detail::normal_range_cdf(q, k);

  const double half = 0.5 * df;
  const double log_norm = half * std::log(df) - std::lgamma(half) - (half - 1.0) * std::numbers::ln2;
  auto density = [&](double s) {
    if (s <= 0.0) return 0.0;
    return std::exp(log_norm + (df - 1.0) * std::log(s) - half * s * s);
  };
  const double spread = 10.0 / std::sqrt(df);
  const double lo = std::max(0.0, 1.0 - spread);
  const double hi = 1.0 + spread + (df < 10.0 ? 2.0 : 0.0);
  auto integrand = [&](double s) { return density(s) * detail::normal_range_cdf(q * s, k); };
  // The range CDF rises from 0 to ~1 over q*s in [0, 8]; resolve that ramp
  // separately when it falls inside the integration window.
  const double ramp = 8.0 / q;
  double p = 0.0;
  if (ramp > lo && ramp < hi) {
    p = detail::integrate(integrand, lo, ramp, 8) + detail::integrate(integrand, ramp, hi, 16);
  } else {
    p = detail::integrate(integrand, lo, hi, 16);
  }
  return std::clamp(p, 0.0, 1.0);
}

/// Upper-alpha quantile of the studentized range: q with P(Q < q) = 1 - alpha.
inline double studentized_range_quantile(int k, double df, double alpha) {
  if (k < 2) throw std::invalid_argument("studentized_range_quantile: k must be >= 2");
  if (!(df >= 1.0)) throw std::invalid_argument("studentized_range_quantile: df must be >= 1");
  if (!(alpha > 0.0 && alpha < 1.0)) throw std::invalid_argument("studentized_range_quantile: alpha must be in (0, 1)");
  const double target = 1.0 - alpha;
  auto g = [&](double q) { return studentized_range_cdf(q, k, df) - target; };
  double lo = 0.0;
  double hi = 2.0;
  while (g(hi) < 0.0) {
    lo = hi;
    hi *= 2.0;
    if (hi > 1e6) throw std::domain_error("studentized_range_quantile: failed to bracket");
  }
  std::uintmax_t max_iter = 200;
  const auto [a, b] = boost::math::tools::toms748_solve(
      g, lo, hi, boost::math::tools::eps_tolerance<double>(40), max_iter);
  return 0.5 * (a + b);
}

}  // namespace galab::stats

#endif  // GALAB_STATS_DISTRIBUTIONS_HPP
