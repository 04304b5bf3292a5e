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

#include <boost/math/distributions/students_t.hpp>
#include <cmath>

#include "galab/stats/distributions.hpp"
#include "oracles.hpp"

namespace galab::stats {
namespace {

TEST(FSf, PublishedCriticalValues) {
  EXPECT_NEAR(f_sf(4.96, 1, 10), 0.050, 0.002);
  EXPECT_NEAR(f_sf(4.10, 2, 10), 0.050, 0.002);
  EXPECT_NEAR(f_sf(2.87, 4, 20), 0.050, 0.002);
  EXPECT_NEAR(f_sf(10.04, 1, 10), 0.010, 0.0005);
}

TEST(FSf, MatchesIncompleteBetaQuadrature) {
  for (double d1 : {1.0, 2.0, 4.0, 16.0})
    for (double d2 : {3.0, 10.0, 105.0, 297.0})
      for (double f : {0.3, 1.0, 2.5, 6.0}) {
        EXPECT_NEAR(f_sf(f, d1, d2), oracle::f_upper_tail_quadrature(f, d1, d2), 1e-6)
            << "F=" << f << " df=(" << d1 << "," << d2 << ")";
      }
}

TEST(FSf, EdgesAndMonotonicity) {
  EXPECT_EQ(f_sf(0.0, 3, 7), 1.0);
  EXPECT_EQ(f_sf(std::numeric_limits<double>::infinity(), 3, 7), 0.0);
  double prev = 1.0;
  for (double f = 0.0; f < 20.0; f += 0.25) {
    const double p = f_sf(f, 4, 16);
    EXPECT_LE(p, prev);
    EXPECT_GE(p, 0.0);
    prev = p;
  }
  EXPECT_THROW(f_sf(1.0, 0, 5), std::invalid_argument);
  EXPECT_THROW(f_sf(1.0, 3, -1), std::invalid_argument);
  EXPECT_THROW(f_sf(-1.0, 3, 5), std::invalid_argument);
}

TEST(StudentizedRange, PublishedQuantiles) {
  EXPECT_NEAR(studentized_range_quantile(2, 20, 0.05), 2.95, 0.02);
  EXPECT_NEAR(studentized_range_quantile(3, 120, 0.05), 3.36, 0.02);
  // Further table entries at 3 decimals.
  EXPECT_NEAR(studentized_range_quantile(4, 10, 0.05), 4.327, 0.005);
  EXPECT_NEAR(studentized_range_quantile(5, 30, 0.05), 4.102, 0.005);
  EXPECT_NEAR(studentized_range_quantile(10, 60, 0.05), 4.646, 0.005);
  EXPECT_NEAR(studentized_range_quantile(3, 20, 0.01), 4.639, 0.005);
}

TEST(StudentizedRange, TwoMeansIsScaledT) {
  for (double df : {1.0, 3.0, 10.0, 20.0, 120.0, 297.0}) {
    for (double alpha : {0.01, 0.05, 0.10}) {
      const boost::math::students_t t(df);
      const double expected = std::sqrt(2.0) * boost::math::quantile(boost::math::complement(t, alpha / 2));
      EXPECT_NEAR(studentized_range_quantile(2, df, alpha), expected, 2e-4 * expected) << "df=" << df;
    }
  }
}

TEST(StudentizedRange, MonotoneInK) {
  for (double df : {10.0, 30.0, 120.0}) {
    double prev = 0.0;
    for (int k = 2; k <= 10; ++k) {
      const double q = studentized_range_quantile(k, df, 0.05);
      EXPECT_GT(q, prev) << "k=" << k << " df=" << df;
      prev = q;
    }
  }
}

TEST(StudentizedRange, CdfIsMonotoneAndInvertsQuantile) {
  double prev = 0.0;
  for (double q = 0.0; q <= 8.0; q += 0.2) {
    const double p = studentized_range_cdf(q, 5, 12);
    EXPECT_GE(p, prev - 1e-12);
    prev = p;
  }
  EXPECT_NEAR(studentized_range_cdf(studentized_range_quantile(6, 25, 0.05), 6, 25), 0.95, 1e-7);
}

TEST(StudentizedRange, DuncanProtectionLevels) {
  // Duncan's tables at df = 10: r_2 = 3.151, r_3 = 3.293.
  EXPECT_NEAR(studentized_range_quantile(2, 10, 0.05), 3.151, 0.002);
  EXPECT_NEAR(studentized_range_quantile(3, 10, 1 - 0.95 * 0.95), 3.293, 0.002);
}

TEST(StudentizedRange, InvalidArguments) {
  EXPECT_THROW(studentized_range_quantile(1, 10, 0.05), std::invalid_argument);
  EXPECT_THROW(studentized_range_quantile(3, 0.5, 0.05), std::invalid_argument);
  EXPECT_THROW(studentized_range_quantile(3, 10, 0.0), std::invalid_argument);
  EXPECT_THROW(studentized_range_quantile(3, 10, 1.0), std::invalid_argument);
  EXPECT_THROW(studentized_range_cdf(1.0, 1, 10), std::invalid_argument);
}

}  // namespace
}  // namespace galab::stats
