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

// Asymptotic connectivity formulas for G(n, c/n) and a finite-n classifier
// that decides which one applies.
//
// With b_n = 1 - (1 - c/n)^n:
//   c -> infinity        P_n ~ b_n^(n-1)
//   c -> c0 in (0, inf)  P_n ~ (1 - e^-c)(1 - c e^-c / (1 - e^-c)) b_n^(n-1)
//   c -> 0, c sqrt(n) / ln n -> infinity
//                        P_n ~ (c^2 / 2) b_n^(n-1)
//   c = o(1/n)           P_n ~ b_n^(n-1) / n
// The band between the last two regimes has no formula.

#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <string_view>

#include "erconn/numerics.hpp"

namespace erconn {

enum class Regime {
  kDiverging,
  kConstant,
  kVanishingAboveRootN,
  kBelowOneOverN,
  kUncovered,
};

inline std::string_view regime_name(Regime regime) {
  switch (regime) {
    case Regime::kDiverging: return "diverging";
    case Regime::kConstant: return "constant";
    case Regime::kVanishingAboveRootN: return "vanishing";
    case Regime::kBelowOneOverN: return "below_one_over_n";
    case Regime::kUncovered: return "uncovered";
  }
  return "uncovered";
}

inline std::optional<Regime> parse_regime(std::string_view name) {
  for (Regime r : {Regime::kDiverging, Regime::kConstant, Regime::kVanishingAboveRootN,
                   Regime::kBelowOneOverN, Regime::kUncovered}) {
    if (regime_name(r) == name) return r;
  }
  return std::nullopt;
}

/// Finite-n cutoffs for the classifier. The limits are only meaningful as
/// n -> infinity, so these are configuration, not constants.
struct ClassifierThresholds {
  double k_lo = 0.1;  // c below this is "vanishing"
  double k_hi = 20.0;  // c at or above this is "diverging"
  double k3 = 10.0;   // minimum c sqrt(n) / ln n for the vanishing formula
  double k4 = 0.1;    // maximum c n for the below-1/n formula
};

struct RegimeReport {
  Regime regime = Regime::kUncovered;
  /// Formula value clamped to [0, 1]; empty when the regime is uncovered.
  std::optional<ProbabilityValue> value;
  /// Unclamped ln of the formula value (may be positive at small n).
  std::optional<double> raw_log_value;
  std::string formula_id;
  std::string applicability_note;

  std::optional<double> raw_value() const {
    if (!raw_log_value) return std::nullopt;
    return std::exp(*raw_log_value);
  }
};

namespace detail {

inline void check_n_c(std::int64_t n, double c, const char* who) {
  if (n < 1) throw DomainError(std::string(who) + ": n must be positive");
  if (!(c > 0.0) || !(c < static_cast<double>(n))) {
    throw DomainError(std::string(who) + ": c must lie in (0, n)");
  }
}

}  // namespace detail

inline RegimeReport classify_regime(std::int64_t n, double c,
                                    const ClassifierThresholds& thresholds = {}) {
  detail::check_n_c(n, c, "classify_regime");
  const double nn = static_cast<double>(n);
  const double log_n = std::log(nn);
  const double root_n_ratio =
      log_n > 0.0 ? c * std::sqrt(nn) / log_n : std::numeric_limits<double>::infinity();

  RegimeReport report;
  if (c >= thresholds.k_hi) {
    report.regime = Regime::kDiverging;
    report.applicability_note = "c >= k_hi";
  } else if (c >= thresholds.k_lo) {
    report.regime = Regime::kConstant;
    report.applicability_note = "k_lo <= c < k_hi";
  } else if (root_n_ratio >= thresholds.k3) {
    report.regime = Regime::kVanishingAboveRootN;
    report.applicability_note = "c < k_lo and c sqrt(n) / ln n >= k3";
  } else if (c * nn <= thresholds.k4) {
    report.regime = Regime::kBelowOneOverN;
    report.applicability_note = "c n <= k4";
  } else {
    report.regime = Regime::kUncovered;
    report.applicability_note =
        "c < k_lo, c sqrt(n) / ln n < k3 and c n > k4: no asymptotic formula covers this band";
  }
  return report;
}

/// Evaluates the asymptotic formula of the given (or classified) regime.
/// Throws RefusalError for the uncovered band unless a regime is forced.
inline RegimeReport asymptotic_connectivity(std::int64_t n, double c,
                                            std::optional<Regime> forced = std::nullopt,
                                            const ClassifierThresholds& thresholds = {}) {
  detail::check_n_c(n, c, "asymptotic_connectivity");
  RegimeReport report = classify_regime(n, c, thresholds);
  if (forced) {
    if (*forced == Regime::kUncovered) {
      throw RefusalError("asymptotic_connectivity: cannot evaluate the uncovered regime");
    }
    if (*forced != report.regime) report.applicability_note = "regime forced by caller";
    report.regime = *forced;
  }
  if (report.regime == Regime::kUncovered) {
    throw RefusalError("asymptotic_connectivity: (n=" + std::to_string(n) +
                       ", c=" + std::to_string(c) + ") lies between the c sqrt(n)/ln n -> inf "
                       "and c = o(1/n) regimes; no formula applies");
  }

  const double log_bn_power = static_cast<double>(n - 1) * log_stable_bn(n, c);
  double log_factor = 0.0;
  switch (report.regime) {
    case Regime::kDiverging:
      report.formula_id = "bn_power";
      break;
    case Regime::kConstant:
      // (1 - e^-c) (1 - c / (e^c - 1)).
      log_factor = std::log(-std::expm1(-c)) + std::log1p(-c / std::expm1(c));
      report.formula_id = "constant_c";
      break;
    case Regime::kVanishingAboveRootN:
      log_factor = std::log(0.5 * c * c);
      report.formula_id = "half_c_squared";
      break;
    case Regime::kBelowOneOverN:
      log_factor = -std::log(static_cast<double>(n));
      report.formula_id = "one_over_n";
      break;
    case Regime::kUncovered:
      break;
  }
  report.raw_log_value = log_factor + log_bn_power;
  report.value = ProbabilityValue::from_log(std::min(0.0, *report.raw_log_value));
  return report;
}

enum class StepanovCase { kThreshold, kConstantC, kUltrasparse };

/// Classical reference asymptotics, parameterised by (n, p):
///   threshold    p = (ln n + alpha) / n      P_n ~ exp(-e^-alpha)
///   constant_c   p = c / n                   P_n ~ (1 - c / (e^c - 1)) b_n^n
///   ultrasparse  p = o(1 / n^2)              P_n ~ n^(n-2) p^(n-1)
inline ProbabilityValue stepanov_reference(std::int64_t n, double p, StepanovCase which) {
  if (n < 1) throw DomainError("stepanov_reference: n must be positive");
  if (!(p > 0.0 && p < 1.0)) throw DomainError("stepanov_reference: p must lie in (0, 1)");
  const double nn = static_cast<double>(n);
  switch (which) {
    case StepanovCase::kThreshold: {
      const double alpha = nn * p - std::log(nn);
      return ProbabilityValue::from_log(-std::exp(-alpha));
    }
    case StepanovCase::kConstantC: {
      const double c = nn * p;
      return ProbabilityValue::from_log(std::log1p(-c / std::expm1(c)) +
                                        nn * log_stable_bn(n, c));
    }
    case StepanovCase::kUltrasparse:
      return ProbabilityValue::from_log((nn - 2.0) * std::log(nn) + (nn - 1.0) * std::log(p));
  }
  throw DomainError("stepanov_reference: unknown case");
}

}  // namespace erconn
