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

#include "erconn/asymptotics.hpp"

namespace erconn {
namespace {

TEST(Classifier, Examples) {
  EXPECT_EQ(classify_regime(1000000, std::log(1e6)).regime, Regime::kConstant);
  EXPECT_EQ(classify_regime(1000000, 25.0).regime, Regime::kDiverging);
  EXPECT_EQ(classify_regime(10000, 3.0).regime, Regime::kConstant);
  EXPECT_EQ(classify_regime(10000, 1e-6).regime, Regime::kBelowOneOverN);
  EXPECT_EQ(classify_regime(100000000, 0.05).regime, Regime::kVanishingAboveRootN);
  EXPECT_EQ(classify_regime(10000, 0.01).regime, Regime::kUncovered);
}

TEST(Classifier, ThresholdsAreConfigurable) {
  ClassifierThresholds thresholds;
  thresholds.k_hi = 10.0;
  EXPECT_EQ(classify_regime(1000000, std::log(1e6), thresholds).regime, Regime::kDiverging);
  thresholds.k3 = 0.1;
  EXPECT_EQ(classify_regime(10000, 0.01, thresholds).regime, Regime::kVanishingAboveRootN);
}

TEST(Classifier, TotalAndDeterministic) {
  for (std::int64_t n : {1, 2, 10, 1000, 1000000}) {
    for (double c : {1e-12, 1e-6, 1e-3, 0.05, 0.5, 3.0, 30.0}) {
      if (!(c < static_cast<double>(n))) continue;
      const auto first = classify_regime(n, c);
      EXPECT_EQ(first.regime, classify_regime(n, c).regime);
      EXPECT_TRUE(parse_regime(regime_name(first.regime)).has_value());
    }
  }
}

TEST(Asymptotic, UncoveredIsRefused) {
  EXPECT_THROW(asymptotic_connectivity(10000, 0.01), RefusalError);
  EXPECT_THROW(asymptotic_connectivity(10000, 3.0, Regime::kUncovered), RefusalError);
  const auto forced = asymptotic_connectivity(10000, 0.01, Regime::kVanishingAboveRootN);
  EXPECT_EQ(forced.formula_id, "half_c_squared");
  EXPECT_TRUE(forced.value.has_value());
}

TEST(Asymptotic, BelowOneOverN) {
  const double c = 1e-6;
  const auto report = asymptotic_connectivity(10, c);
  ASSERT_EQ(report.regime, Regime::kBelowOneOverN);
  const double expected = std::pow(stable_bn(10, c), 9) / 10.0;
  EXPECT_NEAR(report.value->linear_value(), expected, 1e-12 * expected);
  EXPECT_NEAR(report.value->linear_value(), std::pow(c, 9) / 10.0, 1e-5 * std::pow(c, 9));
}

TEST(Asymptotic, ConstantBracketTendsToOne) {
  for (double c : {30.0, 60.0}) {
    const auto constant = asymptotic_connectivity(1000, c, Regime::kConstant);
    const auto diverging = asymptotic_connectivity(1000, c, Regime::kDiverging);
    EXPECT_NEAR(*constant.raw_log_value - *diverging.raw_log_value, 0.0, 1e-10);
  }
}

TEST(Asymptotic, CaseOneDominatesCaseTwo) {
  for (double c : {0.2, 1.0, 5.0}) {
    const auto constant = asymptotic_connectivity(500, c, Regime::kConstant);
    const auto diverging = asymptotic_connectivity(500, c, Regime::kDiverging);
    EXPECT_GT(*constant.raw_log_value, -INFINITY);
    EXPECT_LE(*constant.raw_log_value, *diverging.raw_log_value);
  }
}

TEST(Asymptotic, VanishingFormula) {
  const std::int64_t n = 10000;
  const double c = std::pow(static_cast<double>(n), -1.0 / 3.0);
  const auto report = asymptotic_connectivity(n, c, Regime::kVanishingAboveRootN);
  const double expected_log = std::log(0.5 * c * c) + (n - 1) * std::log(stable_bn(n, c));
  EXPECT_NEAR(*report.raw_log_value, expected_log, 1e-10 * std::abs(expected_log));
}

TEST(Asymptotic, RawValueIsUnclamped) {
  // Forced outside its regime the c^2/2 prefactor exceeds 1.
  const auto report = asymptotic_connectivity(3, 2.5, Regime::kVanishingAboveRootN);
  EXPECT_GT(*report.raw_log_value, 0.0);
  EXPECT_EQ(report.value->linear_value(), 1.0);
  EXPECT_EQ(report.raw_value().value(), std::exp(*report.raw_log_value));
}

TEST(Stepanov, Examples) {
  const double n = 1000.0;
  EXPECT_NEAR(stepanov_reference(1000, std::log(n) / n, StepanovCase::kThreshold).linear_value(),
              std::exp(-1.0), 1e-12);
  for (double p : {1e-4, 1e-3, 0.2}) {
    EXPECT_NEAR(stepanov_reference(3, p, StepanovCase::kUltrasparse).linear_value(), 3 * p * p,
                1e-14 * 3 * p * p);
  }
}

TEST(Stepanov, ConstantCMatchesCaseTwo) {
  const auto case2 = asymptotic_connectivity(10000, 3.0);
  const auto reference = stepanov_reference(10000, 3e-4, StepanovCase::kConstantC);
  EXPECT_NEAR(std::exp(reference.log_value() - case2.value->log_value()), 1.0, 0.01);
}

TEST(Stepanov, RatioApproachesOne) {
  for (double c : {1.0, 3.0}) {
    double previous = INFINITY;
    for (std::int64_t n : {100, 1000, 10000}) {
      const auto case2 = asymptotic_connectivity(n, c, Regime::kConstant);
      const double p = c / static_cast<double>(n);
      const auto reference = stepanov_reference(n, p, StepanovCase::kConstantC);
      const double distance = std::abs(std::expm1(reference.log_value() - *case2.raw_log_value));
      EXPECT_LE(distance, previous) << c << " " << n;
      previous = distance;
    }
  }
}

TEST(Stepanov, RejectsBadParameters) {
  EXPECT_THROW(stepanov_reference(10, 0.0, StepanovCase::kThreshold), DomainError);
  EXPECT_THROW(stepanov_reference(0, 0.5, StepanovCase::kUltrasparse), DomainError);
}

}  // namespace
}  // namespace erconn
