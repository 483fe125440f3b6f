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

#include "erconn/graphs.hpp"
#include "erconn/numerics.hpp"

namespace erconn {
namespace {

constexpr double kGrid[] = {0.05, 0.2, 0.35, 0.5, 0.65, 0.8, 0.95};

TEST(BruteForce, SmallCases) {
  EXPECT_DOUBLE_EQ(connectivity_brute_force({1, 0.3}).linear_value(), 1.0);
  for (double p : kGrid) EXPECT_NEAR(connectivity_brute_force({2, p}).linear_value(), p, 1e-15);
  EXPECT_NEAR(connectivity_brute_force({3, 0.5}).linear_value(), 0.5, 1e-15);
  const double p = 0.3;
  EXPECT_NEAR(connectivity_brute_force({3, p}).linear_value(),
              3 * p * p * (1 - p) + p * p * p, 1e-15);
}

TEST(BruteForce, MatchesRecursion) {
  EXPECT_NEAR(connectivity_brute_force({4, 0.5}).linear_value(),
              connectivity_recursive(4, 0.5).value.linear_value(), 1e-13);
  EXPECT_NEAR(connectivity_brute_force({7, 0.3}).linear_value(),
              connectivity_recursive(7, 0.3).value.linear_value(), 1e-10);
}

TEST(BruteForce, ShardCountDoesNotChangeBits) {
  const double serial = connectivity_brute_force({7, 0.35}, 1).linear_value();
  for (int shards : {2, 3, 8}) {
    EXPECT_EQ(connectivity_brute_force({7, 0.35}, shards).linear_value(), serial) << shards;
  }
}

TEST(BruteForce, RefusesAboveCeiling) {
  EXPECT_THROW(connectivity_brute_force({9, 0.5}), RefusalError);
  EXPECT_THROW(connectivity_brute_force({0, 0.5}), DomainError);
  EXPECT_THROW(connectivity_brute_force({4, 0.0}), DomainError);
  EXPECT_THROW(connectivity_brute_force({4, 1.0}), DomainError);
}

TEST(Recursive, SmallCases) {
  EXPECT_EQ(connectivity_recursive(1, 0.4).value.linear_value(), 1.0);
  EXPECT_NEAR(connectivity_recursive(3, 0.5).value.linear_value(), 0.5, 1e-15);
  EXPECT_FALSE(connectivity_recursive(7, 0.3).ill_conditioned);
}

TEST(Recursive, FlagsCancellation) {
  // Deep in the disconnected regime the final subtraction loses most digits.
  const auto sparse = connectivity_recursive(200, 0.001);
  EXPECT_TRUE(sparse.ill_conditioned);
  EXPECT_GT(sparse.condition, 1e8);
}

TEST(Recursive, NondecreasingInP) {
  for (std::int64_t n : {5, 20, 60}) {
    double previous = 0.0;
    for (int i = 1; i < 50; ++i) {
      const double value = connectivity_recursive(n, i / 50.0).value.linear_value();
      EXPECT_GE(value, previous - 1e-14) << n << " " << i;
      previous = value;
    }
  }
}

TEST(Recursive, BelowBnPower) {
  for (std::int64_t n : {3, 10, 40}) {
    for (double p : kGrid) {
      const double c = static_cast<double>(n) * p;
      const double bound = std::pow(stable_bn(n, c), static_cast<double>(n - 1));
      const double value = connectivity_recursive(n, p).value.linear_value();
      EXPECT_GE(value, 0.0);
      EXPECT_LE(value, bound + 1e-14) << n << " " << p;
    }
  }
}

TEST(PconSum, SmallCases) {
  EXPECT_EQ(connectivity_pcon_sum(1, 0.2).linear_value(), 1.0);
  for (double p : kGrid) EXPECT_NEAR(connectivity_pcon_sum(2, p).linear_value(), p, 1e-15);
  EXPECT_NEAR(connectivity_pcon_sum(3, 0.5).linear_value(), 0.5, 1e-15);
}

TEST(PconSum, AgreesWithOtherOracles) {
  for (int n = 2; n <= 7; ++n) {
    for (double p : kGrid) {
      const double brute = connectivity_brute_force({n, p}).linear_value();
      EXPECT_NEAR(connectivity_pcon_sum(n, p).linear_value(), brute, 1e-10) << n << " " << p;
    }
  }
  EXPECT_NEAR(connectivity_pcon_sum(12, 0.3).linear_value(),
              connectivity_recursive(12, 0.3).value.linear_value(), 1e-10);
}

TEST(PconSum, RefusesAboveCeiling) {
  EXPECT_THROW(connectivity_pcon_sum(13, 0.5), RefusalError);
}

}  // namespace
}  // namespace erconn
