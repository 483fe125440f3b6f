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

// Scalar kernels shared by the exact engines: log-factorials, the Poisson
// log-pmf, the principal Lambert W branch on [-1/e, 0] and the stable
// b_n = 1 - (1 - c/n)^n.

#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>

namespace erconn {

/// Thrown when an argument is outside the mathematical domain of an operation.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Thrown when a request is valid but deliberately refused (size ceilings,
/// parameter regions with no formula).
class RefusalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A probability carried both as a natural log and as a linear value.
///
/// The linear form underflows to exactly 0 once the log drops below
/// `kUnderflowFloor`; the log is always retained.
class ProbabilityValue {
 public:
  static constexpr double kUnderflowFloor = -745.0;

  constexpr ProbabilityValue() = default;

  static ProbabilityValue from_log(double log_value) {
    if (std::isnan(log_value)) throw DomainError("ProbabilityValue: NaN log value");
    if (log_value > 0.0) log_value = 0.0;
    ProbabilityValue v;
    v.log_ = log_value;
    v.linear_ = log_value < kUnderflowFloor ? 0.0 : std::exp(log_value);
    return v;
  }

  static ProbabilityValue from_linear(double linear) {
    if (!(linear >= 0.0 && linear <= 1.0)) {
      throw DomainError("ProbabilityValue: linear value " + std::to_string(linear) +
                        " outside [0, 1]");
    }
    ProbabilityValue v;
    v.linear_ = linear;
    v.log_ = linear == 0.0 ? -std::numeric_limits<double>::infinity() : std::log(linear);
    if (v.log_ < kUnderflowFloor) v.linear_ = 0.0;
    return v;
  }

  static ProbabilityValue zero() { return from_linear(0.0); }
  static ProbabilityValue one() { return from_linear(1.0); }

  double log_value() const { return log_; }
  double linear_value() const { return linear_; }

 private:
  double log_ = -std::numeric_limits<double>::infinity();
  double linear_ = 0.0;
};

namespace detail {

inline constexpr int kLogFactorialTableSize = 171;

inline const std::array<double, kLogFactorialTableSize>& log_factorial_table() {
  // k! is exactly representable in magnitude up to 170!, so the running
  // product carries at most ~k/2 ulps of error before the log.
  static const auto table = [] {
    std::array<double, kLogFactorialTableSize> t{};
    double factorial = 1.0;
    t[0] = 0.0;
    for (int k = 1; k < kLogFactorialTableSize; ++k) {
      factorial *= static_cast<double>(k);
      t[k] = std::log(factorial);
    }
    return t;
  }();
  return table;
}

// ln Gamma(x) for x >= 10 by the Stirling series, truncated after the x^-9
// term (remainder below 1e-17 relative at x >= 10).
inline double log_gamma_stirling(double x) {
  const double inv = 1.0 / x;
  const double inv2 = inv * inv;
  const double series =
      inv * (1.0 / 12.0 +
             inv2 * (-1.0 / 360.0 +
                     inv2 * (1.0 / 1260.0 + inv2 * (-1.0 / 1680.0 + inv2 * (1.0 / 1188.0)))));
  return (x - 0.5) * std::log(x) - x + 0.5 * std::log(2.0 * std::numbers::pi) + series;
}

}  // namespace detail

/// ln(k!) for k >= 0. Table lookup up to 170, Stirling series above.
inline double log_factorial(std::int64_t k) {
  if (k < 0) throw DomainError("log_factorial: negative argument");
  if (k < detail::kLogFactorialTableSize) return detail::log_factorial_table()[k];
  return detail::log_gamma_stirling(static_cast<double>(k) + 1.0);
}

/// ln of the Poisson(lambda) pmf at k: k ln(lambda) - lambda - ln(k!).
inline double log_poisson_pmf(std::int64_t k, double lambda) {
  if (!(lambda > 0.0) || !std::isfinite(lambda)) {
    throw DomainError("log_poisson_pmf: lambda must be positive and finite");
  }
  if (k < 0) throw DomainError("log_poisson_pmf: k must be nonnegative");
  return static_cast<double>(k) * std::log(lambda) - lambda - log_factorial(k);
}

namespace detail {

// W0(x) given offset = 1 + e x, which callers may know more accurately than
// x itself.
inline double lambert_w0_with_offset(double x, double offset) {
  if (x == 0.0) return 0.0;
  if (offset <= 0.0) return -1.0;

  double w;
  if (offset < 0.5) {
    const double p = std::sqrt(2.0 * offset);
    w = -1.0 + p * (1.0 + p * (-1.0 / 3.0 + p * (11.0 / 72.0 + p * (-43.0 / 540.0))));
    // Halley's denominator vanishes at the branch point; the series is
    // already exact to rounding there.
    if (p < 1e-3) return w;
  } else {
    w = x * (1.0 + x * (-1.0 + x * 1.5));
  }

  for (int iter = 0; iter < 64; ++iter) {
    const double ew = std::exp(w);
    const double f = w * ew - x;
    const double wp1 = w + 1.0;
    const double denom = ew * wp1 - (w + 2.0) * f / (2.0 * wp1);
    const double step = f / denom;
    w -= step;
    if (w < -1.0) w = -1.0;
    if (w > 0.0) w = 0.0;
    if (std::abs(step) < 1e-15 * std::max(1.0, std::abs(w))) break;
  }
  return w;
}

// 1 + W0(x) given offset = 1 + e x, without the cancellation of forming W0
// first near the branch point.
inline double lambert_w0_plus_one(double x, double offset) {
  if (offset > 0.0 && offset < 5e-7) {
    const double p = std::sqrt(2.0 * offset);
    return p * (1.0 + p * (-1.0 / 3.0 + p * (11.0 / 72.0 + p * (-43.0 / 540.0))));
  }
  return 1.0 + lambert_w0_with_offset(x, offset);
}

}  // namespace detail

/// Principal branch W0 on [-1/e, 0]: the w in [-1, 0] with w e^w = x.
inline double lambert_w0(double x) {
  constexpr double kBranch = -1.0 / std::numbers::e;
  if (std::isnan(x) || x > 0.0 || x < kBranch - 1e-15) {
    throw DomainError("lambert_w0: argument outside [-1/e, 0]");
  }
  // 1 + e x with e split into two doubles so the offset from the branch
  // point keeps the precision carried by x itself.
  constexpr double kEHi = 2.718281828459045;
  constexpr double kELo = 1.4456468917292502e-16;
  return detail::lambert_w0_with_offset(x, std::fma(kEHi, x, 1.0) + kELo * x);
}

/// b_n = 1 - (1 - c/n)^n, accurate even when c/n is far below machine epsilon.
inline double stable_bn(std::int64_t n, double c) {
  if (n < 1) throw DomainError("stable_bn: n must be positive");
  if (!(c > 0.0) || !(c < static_cast<double>(n))) {
    throw DomainError("stable_bn: c must lie in (0, n)");
  }
  const double nn = static_cast<double>(n);
  return -std::expm1(nn * std::log1p(-c / nn));
}

/// ln b_n.
inline double log_stable_bn(std::int64_t n, double c) { return std::log(stable_bn(n, c)); }

}  // namespace erconn
