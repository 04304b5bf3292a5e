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

#include <gtest/gtest.h>

#include <cmath>
#include <numeric>

#include "galab/stats/contrasts.hpp"
#include "oracles.hpp"

namespace galab::stats {
namespace {

TEST(OrthogonalPolynomials, FiveLevels) {
  const auto c = orthogonal_polynomials(5);
  ASSERT_EQ(c.size(), 4u);
  EXPECT_EQ(c[0], (std::vector<std::int64_t>{-2, -1, 0, 1, 2}));
  EXPECT_EQ(c[1], (std::vector<std::int64_t>{2, -1, -2, -1, 2}));
  EXPECT_EQ(c[2], (std::vector<std::int64_t>{-1, 2, 0, -2, 1}));
  EXPECT_EQ(c[3], (std::vector<std::int64_t>{1, -4, 6, -4, 1}));
}

TEST(OrthogonalPolynomials, ThreeLevels) {
  const auto c = orthogonal_polynomials(3);
  EXPECT_EQ(c[0], (std::vector<std::int64_t>{-1, 0, 1}));
  EXPECT_EQ(c[1], (std::vector<std::int64_t>{1, -2, 1}));
}

TEST(OrthogonalPolynomials, MatchGramSchmidtDirection) {
  for (std::size_t k = 3; k <= 12; ++k) {
    const auto c = orthogonal_polynomials(k);
    const auto gs = oracle::gram_schmidt_contrasts(k);
    ASSERT_EQ(c.size(), k - 1);
    for (std::size_t r = 0; r + 1 < k; ++r) {
      double norm = 0.0;
      for (auto v : c[r]) norm += static_cast<double>(v) * static_cast<double>(v);
      norm = std::sqrt(norm);
      for (std::size_t i = 0; i < k; ++i)
        EXPECT_NEAR(static_cast<double>(c[r][i]) / norm, gs[r][i], 1e-9) << "k=" << k << " order=" << r + 1;
      // Reduced to lowest terms.
      std::int64_t g = 0;
      for (auto v : c[r]) g = std::gcd(g, v);
      EXPECT_EQ(g, 1);
    }
  }
  EXPECT_THROW(orthogonal_polynomials(13), std::invalid_argument);
}

TEST(Trend, EqualMeansGiveZero) {
  const std::vector<double> means{5, 5, 5, 5, 5}, levels{0.6, 0.65, 0.7, 0.75, 0.8};
  for (const auto& row : trend_contrasts(means, levels, 80, 2.0, 297)) {
    EXPECT_EQ(row.ss, 0.0);
    EXPECT_EQ(row.f, 0.0);
    EXPECT_EQ(row.p, 1.0);
  }
}

TEST(Trend, LinearMeansLoadOnlyTheLinearTerm) {
  const std::vector<double> levels{0.02, 0.04, 0.06, 0.08, 0.10};
  std::vector<double> means;
  for (double x : levels) means.push_back(150.0 + 100.0 * x);
  const std::size_t r = 80;
  const double grand = std::accumulate(means.begin(), means.end(), 0.0) / 5.0;
  double ss_main = 0.0;
  for (double m : means) ss_main += r * (m - grand) * (m - grand);
  const auto rows = trend_contrasts(means, levels, r, 1.5, 297);
  ASSERT_EQ(rows.size(), 4u);
  EXPECT_NEAR(rows[0].ss, ss_main, 1e-9 * ss_main);
  for (std::size_t i = 1; i < 4; ++i) EXPECT_NEAR(rows[i].ss, 0.0, 1e-9 * ss_main);
  EXPECT_NEAR(rows[0].f, rows[0].ss / 1.5, 1e-9);
  EXPECT_EQ(rows[0].name, "linear");
  EXPECT_EQ(rows[3].name, "quartic");
}

TEST(Trend, OrdersSumToMainEffect) {
  const std::vector<double> levels{3, 1, 2, 4, 5, 6};  // unsorted input
  const std::vector<double> means{10.5, 7.25, 9.0, 8.5, 12.0, 11.0};
  const double grand = std::accumulate(means.begin(), means.end(), 0.0) / 6.0;
  double ss_main = 0.0;
  for (double m : means) ss_main += 4 * (m - grand) * (m - grand);
  double total = 0.0;
  for (const auto& row : trend_contrasts(means, levels, 4, 1.0, 20)) total += row.ss;
  EXPECT_NEAR(total, ss_main, 1e-9 * ss_main);
}

TEST(Trend, SortsByLevel) {
  const std::vector<double> up{1, 2, 3}, down{3, 2, 1};
  const auto a = trend_contrasts(std::vector<double>{1, 2, 3}, up, 2, 1.0, 10);
  const auto b = trend_contrasts(std::vector<double>{3, 2, 1}, down, 2, 1.0, 10);
  EXPECT_DOUBLE_EQ(a[0].ss, b[0].ss);
}

TEST(Trend, Rejections) {
  const std::vector<double> m3{1, 2, 3};
  EXPECT_THROW(trend_contrasts(m3, std::vector<double>{0.001, 0.01, 0.1}, 4, 1.0, 10), std::invalid_argument);
  EXPECT_THROW(trend_contrasts(std::vector<double>{1, 2}, std::vector<double>{1, 2}, 4, 1.0, 10),
               std::invalid_argument);
  EXPECT_THROW(trend_contrasts(m3, std::vector<double>{1, 2}, 4, 1.0, 10), std::invalid_argument);
  EXPECT_THROW(trend_contrasts(m3, std::vector<double>{1, 1, 1}, 4, 1.0, 10), std::invalid_argument);
}

TEST(Trend, LogSpacedLevelsAreEqualOnLogScale) {
  const std::vector<double> logs{std::log10(0.001), std::log10(0.01), std::log10(0.1)};
  EXPECT_TRUE(equally_spaced(logs));
  EXPECT_FALSE(equally_spaced(std::vector<double>{0.001, 0.01, 0.1}));
}

}  // namespace
}  // namespace galab::stats
