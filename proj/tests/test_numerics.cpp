// Copyright 2026 The erconn Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "erconn/numerics.hpp"

namespace erconn {
namespace {

TEST(LogPoissonPmf, SmallArguments) {
  EXPECT_DOUBLE_EQ(log_poisson_pmf(0, 1.0), -1.0);
  EXPECT_DOUBLE_EQ(log_poisson_pmf(1, 1.0), -1.0);
  EXPECT_NEAR(log_poisson_pmf(3, 2.5), 3 * std::log(2.5) - 2.5 - std::log(6.0), 1e-15);
}

TEST(LogPoissonPmf, MatchesHighPrecisionValue) {
  // mpmath, 60 digits (tests/oracles/reference_values.py).
  const double reference = -3.222356956754353340481702;
  EXPECT_NEAR(log_poisson_pmf(100, 100.0), reference, 1e-12 * std::abs(reference));
}

TEST(LogPoissonPmf, LargeArgumentsStayFinite) {
  EXPECT_TRUE(std::isfinite(log_poisson_pmf(100000, 1e5)));
  EXPECT_TRUE(std::isfinite(log_poisson_pmf(0, 1e300)));
  // Table and Stirling branches meet at 170.
  EXPECT_NEAR(log_factorial(171) - log_factorial(170), std::log(171.0), 1e-12);
}

TEST(LogPoissonPmf, PmfSumsToOne) {
  for (double lambda : {0.1, 1.0, 5.0}) {
    double sum = 0.0;
    for (int k = 0; k <= 200; ++k) sum += std::exp(log_poisson_pmf(k, lambda));
    EXPECT_GE(sum, 1.0 - 1e-12) << lambda;
    EXPECT_LE(sum, 1.0 + 1e-15) << lambda;
  }
}

TEST(LogPoissonPmf, RejectsBadArguments) {
  EXPECT_THROW(log_poisson_pmf(1, 0.0), DomainError);
  EXPECT_THROW(log_poisson_pmf(1, -1.0), DomainError);
  EXPECT_THROW(log_poisson_pmf(-1, 1.0), DomainError);
  EXPECT_THROW(log_poisson_pmf(1, INFINITY), DomainError);
}

TEST(LambertW0, Endpoints) {
  EXPECT_EQ(lambert_w0(0.0), 0.0);
  EXPECT_NEAR(lambert_w0(-std::exp(-1.0)), -1.0, 1e-7);
  EXPECT_NEAR(lambert_w0(-0.5 * std::exp(-0.5)), -0.5, 1e-15);
}

TEST(LambertW0, ResidualBound) {
  for (int i = 0; i <= 2000; ++i) {
    const double x = -std::exp(-1.0) * i / 2000.0;
    const double w = lambert_w0(x);
    ASSERT_GE(w, -1.0);
    ASSERT_LE(w, 0.0);
    EXPECT_LE(std::abs(w * std::exp(w) - x), 1e-14 * std::max(1.0, std::abs(x))) << x;
  }
}

TEST(LambertW0, RoundTrip) {
  std::mt19937_64 rng(20261014);
  std::uniform_real_distribution<double> dist(-1.0, 0.0);
  for (int i = 0; i < 1000; ++i) {
    const double w = dist(rng);
    EXPECT_LE(std::abs(lambert_w0(w * std::exp(w)) - w), 1e-12) << w;
  }
}

TEST(LambertW0, Nondecreasing) {
  double previous = -1.0;
  for (int i = 0; i <= 5000; ++i) {
    const double w = lambert_w0(-std::exp(-1.0) * (1.0 - i / 5000.0));
    EXPECT_GE(w, previous);
    previous = w;
  }
}

TEST(LambertW0, RejectsOutsideDomain) {
  EXPECT_THROW(lambert_w0(0.1), DomainError);
  EXPECT_THROW(lambert_w0(-0.4), DomainError);
  EXPECT_THROW(lambert_w0(NAN), DomainError);
  EXPECT_NO_THROW(lambert_w0(-std::exp(-1.0) - 5e-16));
}

TEST(StableBn, Examples) {
  EXPECT_DOUBLE_EQ(stable_bn(1, 0.5), 0.5);
  EXPECT_DOUBLE_EQ(stable_bn(2, 1.0), 0.75);
  const double reference = 9.999995000006666661250006e-7;
  EXPECT_NEAR(stable_bn(1000000, 1e-6), reference, 1e-13 * reference);
}

TEST(StableBn, TinyRatio) {
  // b_n ~ c - c^2 (n-1) / (2n) for c n small.
  const double c = 1e-9;
  const double n = 1e5;
  EXPECT_NEAR(stable_bn(100000, c), c - 0.5 * c * c * (n - 1) / n, 1e-13 * c);
}

TEST(StableBn, StrictlyInsideAndIncreasing) {
  for (std::int64_t n : {2, 10, 1000}) {
    double previous = 0.0;
    // Larger c leaves (1 - c/n)^n below half an ulp of 1.
    for (int i = 1; i < 100 && 0.3 * i < 0.9 * static_cast<double>(n); ++i) {
      const double b = stable_bn(n, 0.3 * i);
      EXPECT_GT(b, 0.0);
      EXPECT_LT(b, 1.0);
      EXPECT_GT(b, previous);
      previous = b;
    }
  }
}

TEST(StableBn, RejectsOutsideRange) {
  EXPECT_THROW(stable_bn(3, 0.0), DomainError);
  EXPECT_THROW(stable_bn(3, 3.0), DomainError);
  EXPECT_THROW(stable_bn(0, 0.5), DomainError);
}

TEST(ProbabilityValue, UnderflowFloor) {
  const auto tiny = ProbabilityValue::from_log(-800.0);
  EXPECT_EQ(tiny.linear_value(), 0.0);
  EXPECT_EQ(tiny.log_value(), -800.0);
  const auto small = ProbabilityValue::from_log(-700.0);
  EXPECT_DOUBLE_EQ(small.linear_value(), std::exp(-700.0));
  EXPECT_EQ(ProbabilityValue::zero().log_value(), -INFINITY);
  EXPECT_EQ(ProbabilityValue::one().log_value(), 0.0);
}

TEST(ProbabilityValue, RejectsOutsideUnitInterval) {
  EXPECT_THROW(ProbabilityValue::from_linear(1.5), DomainError);
  EXPECT_THROW(ProbabilityValue::from_linear(-0.1), DomainError);
}

}  // namespace
}  // namespace erconn
