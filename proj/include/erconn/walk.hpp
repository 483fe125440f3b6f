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

// Inhomogeneous Poisson random walks and the exact engines built on them.
//
// The walk S_k = X_1 + ... + X_k has independent steps with
// X_i + 1 ~ Poisson(lambda_i). G(n, c/n) is connected with probability
//
//   b_n^(n-1) * P(S_k >= 0 for 0 < k < n | S_n = -1),
//
// where b_n = 1 - (1 - c/n)^n and lambda_i = (c / b_n) (1 - c/n)^(i-1).
//
// All dynamic programs run on the cumulated walk T_k = S_k + k, the running
// sum of the Poisson jumps X_i + 1. T is nondecreasing, so a bridge pinned at
// T_n = y never visits states above y, and S_k >= 0 becomes T_k >= k.

#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "erconn/numerics.hpp"

namespace erconn {

/// Jump intensities lambda_1..lambda_n of a walk together with their
/// cumulative sums eta_i = lambda_1 + ... + lambda_i.
class IntensityProfile {
 public:
  /// The profile attached to G(n, c/n). Requires 0 < c < n.
  static IntensityProfile erdos_renyi(std::int64_t n, double c) {
    if (n < 1) throw DomainError("make_profile: n must be positive");
    if (!(c > 0.0) || !(c < static_cast<double>(n))) {
      throw DomainError("make_profile: c must lie in (0, n)");
    }
    const double nn = static_cast<double>(n);
    const double log_ratio = std::log1p(-c / nn);
    const double bn_expm1 = std::expm1(nn * log_ratio);  // -b_n
    const double scale = c / -bn_expm1;

    IntensityProfile profile;
    profile.c_ = c;
    profile.lambdas_.resize(n);
    profile.etas_.resize(n);
    for (std::int64_t i = 0; i < n; ++i) {
      const double di = static_cast<double>(i);
      profile.lambdas_[i] = scale * std::exp(di * log_ratio);
      profile.etas_[i] = nn * (std::expm1((di + 1.0) * log_ratio) / bn_expm1);
    }
    profile.etas_[n - 1] = nn;
    return profile;
  }

  /// A general profile from arbitrary positive intensities.
  static IntensityProfile from_intensities(std::vector<double> lambdas) {
    if (lambdas.empty()) throw DomainError("IntensityProfile: empty intensity vector");
    IntensityProfile profile;
    profile.etas_.resize(lambdas.size());
    double sum = 0.0;
    double compensation = 0.0;
    for (std::size_t i = 0; i < lambdas.size(); ++i) {
      const double value = lambdas[i];
      if (!(value > 0.0) || !std::isfinite(value)) {
        throw DomainError("IntensityProfile: intensities must be positive and finite");
      }
      // Neumaier summation keeps eta_n accurate for long profiles.
      const double t = sum + value;
      compensation += std::abs(sum) >= value ? (sum - t) + value : (value - t) + sum;
      sum = t;
      profile.etas_[i] = sum + compensation;
    }
    profile.lambdas_ = std::move(lambdas);
    return profile;
  }

  static IntensityProfile constant(std::int64_t n, double value) {
    if (n < 1) throw DomainError("IntensityProfile: n must be positive");
    return from_intensities(std::vector<double>(static_cast<std::size_t>(n), value));
  }

  std::int64_t n() const { return static_cast<std::int64_t>(lambdas_.size()); }
  /// c for Erdos-Renyi profiles, empty for general ones.
  std::optional<double> c() const { return c_; }
  std::span<const double> lambdas() const { return lambdas_; }
  std::span<const double> etas() const { return etas_; }
  /// lambda_i with the 1-based index used throughout the walk formulas.
  double lambda(std::int64_t i) const { return lambdas_.at(static_cast<std::size_t>(i - 1)); }
  double eta(std::int64_t i) const { return etas_.at(static_cast<std::size_t>(i - 1)); }
  double total() const { return etas_.back(); }

 private:
  IntensityProfile() = default;

  std::optional<double> c_;
  std::vector<double> lambdas_;
  std::vector<double> etas_;
};

inline IntensityProfile make_profile(std::int64_t n, double c) {
  return IntensityProfile::erdos_renyi(n, c);
}

/// A DP result: the probability plus a certified bound on the mass the
/// truncations could have discarded (the exact value lies in
/// [value, value + error_bound] before any conditioning division).
struct DpResult {
  ProbabilityValue value;
  double error_bound = 0.0;
};

/// Jump truncation point for a Poisson(lambda) step.
inline std::int64_t jump_truncation(double lambda) {
  return static_cast<std::int64_t>(std::ceil(lambda + 12.0 * std::sqrt(lambda) + 30.0));
}

/// Upper bound on P(Poisson(lambda) > j) for j + 2 > lambda, from the
/// geometric domination of the pmf ratios beyond j + 1.
inline double poisson_tail_bound(double lambda, std::int64_t j) {
  const double next = std::exp(log_poisson_pmf(j + 1, lambda));
  const double ratio = lambda / static_cast<double>(j + 2);
  if (ratio >= 1.0) return 1.0;
  return std::min(1.0, next / (1.0 - ratio));
}

/// Forward distribution of a counting walk N_k = J_1 + ... + J_k with
/// independent J_i ~ Poisson(lambda_i), restricted to a contiguous support.
///
/// Callers interleave `step` with the constraint operations; everything
/// removed by a constraint is returned to the caller, everything removed by
/// a truncation goes into `error_bound`.
class CountingWalkDp {
 public:
  static constexpr std::int64_t kNoCap = std::numeric_limits<std::int64_t>::max() / 4;
  static constexpr double kDropBelow = 1e-300;

  explicit CountingWalkDp(std::int64_t start = 0, std::int64_t cap = kNoCap)
      : lo_(start), cap_(cap), values_{1.0} {
    if (start > cap) values_.clear();
  }

  /// A walk with no mass yet; states are added with `add`.
  static CountingWalkDp empty_with_cap(std::int64_t cap) {
    CountingWalkDp dp(0, cap);
    dp.values_.clear();
    return dp;
  }

  /// Convolves the distribution with one Poisson(lambda) jump. States above
  /// the cap are never created; the mass that would land there is a
  /// constraint loss, not error.
  void step(double lambda) {
    if (values_.empty()) return;
    const std::int64_t truncation = jump_truncation(lambda);
    const std::int64_t new_hi = std::min(cap_, hi() + truncation);
    const std::int64_t reach = std::min(truncation, new_hi - lo_);

    pmf_.resize(static_cast<std::size_t>(reach + 1));
    for (std::int64_t j = 0; j <= reach; ++j) pmf_[j] = std::exp(log_poisson_pmf(j, lambda));
    // Jumps beyond the truncation point are only lost when they would have
    // stayed below the cap.
    if (lo_ + truncation < cap_) {
      error_ += mass() * poisson_tail_bound(lambda, truncation);
    }

    scratch_.assign(static_cast<std::size_t>(new_hi - lo_ + 1), 0.0);
    const std::size_t size = values_.size();
    const std::size_t out_size = scratch_.size();
    for (std::size_t s = 0; s < size; ++s) {
      const double w = values_[s];
      if (w == 0.0) continue;
      const std::size_t jmax = std::min<std::size_t>(static_cast<std::size_t>(reach), out_size - 1 - s);
      double* out = scratch_.data() + s;
      const double* pmf = pmf_.data();
      for (std::size_t j = 0; j <= jmax; ++j) out[j] += w * pmf[j];
    }
    values_.swap(scratch_);
    trim();
  }

  /// Removes all states below x; returns the removed mass.
  double zero_below(std::int64_t x) {
    if (values_.empty() || x <= lo_) return 0.0;
    if (x > hi()) return clear();
    const auto cut = static_cast<std::size_t>(x - lo_);
    double removed = 0.0;
    for (std::size_t s = 0; s < cut; ++s) removed += values_[s];
    values_.erase(values_.begin(), values_.begin() + static_cast<std::ptrdiff_t>(cut));
    lo_ = x;
    trim();
    return removed;
  }

  /// Removes all states above x; returns the removed mass.
  double zero_above(std::int64_t x) {
    if (values_.empty() || x >= hi()) return 0.0;
    if (x < lo_) return clear();
    const auto keep = static_cast<std::size_t>(x - lo_ + 1);
    double removed = 0.0;
    for (std::size_t s = keep; s < values_.size(); ++s) removed += values_[s];
    values_.resize(keep);
    trim();
    return removed;
  }

  /// Removes the single state t; returns its mass.
  double take(std::int64_t t) {
    if (values_.empty() || t < lo_ || t > hi()) return 0.0;
    const auto idx = static_cast<std::size_t>(t - lo_);
    const double removed = values_[idx];
    values_[idx] = 0.0;
    trim();
    return removed;
  }

  /// Adds mass at state t, growing the support as needed.
  void add(std::int64_t t, double mass_to_add) {
    if (mass_to_add == 0.0) return;
    if (t > cap_) throw std::out_of_range("CountingWalkDp::add above cap");
    if (values_.empty()) {
      lo_ = t;
      values_.assign(1, mass_to_add);
      return;
    }
    if (t < lo_) {
      values_.insert(values_.begin(), static_cast<std::size_t>(lo_ - t), 0.0);
      lo_ = t;
    } else if (t > hi()) {
      values_.resize(static_cast<std::size_t>(t - lo_ + 1), 0.0);
    }
    values_[static_cast<std::size_t>(t - lo_)] += mass_to_add;
  }

  /// Truncates states above x, charging the mass to the error bound.
  void truncate_above(std::int64_t x) { error_ += zero_above(x); }

  double at(std::int64_t t) const {
    if (values_.empty() || t < lo_ || t > hi()) return 0.0;
    return values_[static_cast<std::size_t>(t - lo_)];
  }

  bool empty() const { return values_.empty(); }
  std::int64_t lo() const { return lo_; }
  std::int64_t hi() const { return lo_ + static_cast<std::int64_t>(values_.size()) - 1; }
  std::span<const double> values() const { return values_; }
  double error_bound() const { return error_; }

  double mass() const {
    double sum = 0.0;
    for (double v : values_) sum += v;
    return sum;
  }

 private:
  double clear() {
    const double removed = mass();
    values_.clear();
    return removed;
  }

  // Drops negligible entries at both ends of the support.
  void trim() {
    std::size_t first = 0;
    while (first < values_.size() && values_[first] < kDropBelow) error_ += values_[first++];
    if (first == values_.size()) {
      values_.clear();
      return;
    }
    std::size_t last = values_.size();
    while (last > first && values_[last - 1] < kDropBelow) error_ += values_[--last];
    values_.resize(last);
    if (first > 0) {
      values_.erase(values_.begin(), values_.begin() + static_cast<std::ptrdiff_t>(first));
      lo_ += static_cast<std::int64_t>(first);
    }
  }

  std::int64_t lo_;
  std::int64_t cap_;
  std::vector<double> values_;
  std::vector<double> scratch_;
  std::vector<double> pmf_;
  double error_ = 0.0;
};

/// No lower constraint at a step.
inline constexpr std::int64_t kNoThreshold = std::numeric_limits<std::int64_t>::min() / 4;

/// Thresholds on the cumulated walk for the excursion event
/// {S_k >= 0 for 0 < k < n, S_n = -1}: T_k >= k for k < n, T_n = n - 1.
inline std::vector<std::int64_t> excursion_thresholds(std::int64_t n) {
  std::vector<std::int64_t> thresholds(static_cast<std::size_t>(n));
  for (std::int64_t k = 1; k < n; ++k) thresholds[k - 1] = k;
  thresholds[n - 1] = n - 1;
  return thresholds;
}

/// One recorded DP layer: probabilities of T_k = lo, lo + 1, ... with all
/// constraints up to step k applied.
struct BridgeLayer {
  std::int64_t lo = 0;
  std::vector<double> values;

  double mass() const {
    double sum = 0.0;
    for (double v : values) sum += v;
    return sum;
  }
};

/// Every layer of a pinned, thresholded counting-walk DP. Layer 0 is the
/// point mass at 0; layer k has T_k >= thresholds[k-1] and T_k <= terminal.
struct BridgeDpTable {
  std::int64_t n = 0;
  std::int64_t terminal = 0;
  std::vector<BridgeLayer> layers;
  double error_bound = 0.0;
};

namespace detail {

inline void check_thresholds(const IntensityProfile& profile,
                             std::span<const std::int64_t> thresholds, std::int64_t terminal) {
  if (static_cast<std::int64_t>(thresholds.size()) != profile.n()) {
    throw DomainError("bridge DP: need one threshold per step");
  }
  if (terminal < 0) throw DomainError("bridge DP: terminal value must be nonnegative");
}

template <typename OnLayer>
CountingWalkDp run_bridge_dp(const IntensityProfile& profile,
                             std::span<const std::int64_t> thresholds, std::int64_t terminal,
                             OnLayer&& on_layer) {
  CountingWalkDp dp(0, terminal);
  for (std::int64_t k = 1; k <= profile.n(); ++k) {
    dp.step(profile.lambda(k));
    dp.zero_below(thresholds[k - 1]);
    on_layer(k, dp);
  }
  return dp;
}

}  // namespace detail

/// Records every layer of the thresholded bridge DP. Memory is quadratic in
/// n; intended for inspection at small n.
inline BridgeDpTable bridge_dp_table(const IntensityProfile& profile,
                                     std::span<const std::int64_t> thresholds,
                                     std::int64_t terminal) {
  detail::check_thresholds(profile, thresholds, terminal);
  BridgeDpTable table;
  table.n = profile.n();
  table.terminal = terminal;
  table.layers.push_back({0, {1.0}});
  auto dp = detail::run_bridge_dp(profile, thresholds, terminal,
                                  [&](std::int64_t, const CountingWalkDp& layer) {
                                    table.layers.push_back(
                                        {layer.lo(), {layer.values().begin(), layer.values().end()}});
                                  });
  table.error_bound = dp.error_bound();
  return table;
}

/// P(N_j >= x_j for all j <= n | N_n = y) for the counting walk with
/// Poisson(lambda_j) jumps. The error bound is on the conditional scale.
inline DpResult conditional_bridge_probability(const IntensityProfile& profile,
                                               std::span<const std::int64_t> thresholds,
                                               std::int64_t terminal) {
  detail::check_thresholds(profile, thresholds, terminal);
  auto dp = detail::run_bridge_dp(profile, thresholds, terminal,
                                  [](std::int64_t, const CountingWalkDp&) {});
  const double log_bridge = log_poisson_pmf(terminal, profile.total());
  const double numerator = dp.at(terminal);
  DpResult result;
  result.value = numerator > 0.0 ? ProbabilityValue::from_log(std::log(numerator) - log_bridge)
                                 : ProbabilityValue::zero();
  result.error_bound = dp.error_bound() * std::exp(-log_bridge);
  return result;
}

/// P(S_k >= 0 for 0 < k < n | S_n = -1): the probability that the bridge of
/// the walk with the given intensities is an excursion.
inline DpResult excursion_given_bridge_dp(const IntensityProfile& profile) {
  const auto thresholds = excursion_thresholds(profile.n());
  return conditional_bridge_probability(profile, thresholds, profile.n() - 1);
}

/// Conditional excursion probability for the unit-rate walk started at
/// k - 1: P(S_i >= 0 for i < n | S_n = -1). Equals k / n.
inline DpResult ballot_conditional_dp(std::int64_t n, std::int64_t start_offset) {
  if (n < 1 || start_offset < 1 || start_offset > n) {
    throw DomainError("ballot DP: need 1 <= k <= n");
  }
  const auto profile = IntensityProfile::constant(n, 1.0);
  std::vector<std::int64_t> thresholds(static_cast<std::size_t>(n));
  // S_i = (k - 1) + T_i - i >= 0  <=>  T_i >= i - k + 1.
  for (std::int64_t i = 1; i < n; ++i) thresholds[i - 1] = i - start_offset + 1;
  thresholds[n - 1] = n - start_offset;
  return conditional_bridge_probability(profile, thresholds, n - start_offset);
}

/// Decomposition of the walk-side connectivity probability.
struct WalkConnectivity {
  ProbabilityValue probability;  // P_n(p)
  ProbabilityValue conditional;  // excursion-given-bridge factor
  double log_bn_power = 0.0;     // (n - 1) ln b_n
  double error_bound = 0.0;      // on the conditional factor
};

inline WalkConnectivity walk_connectivity(std::int64_t n, double p) {
  if (n < 1) throw DomainError("connectivity_via_walk: n must be positive");
  if (!(p >= 0.0 && p <= 1.0)) throw DomainError("connectivity_via_walk: p must lie in [0, 1]");
  WalkConnectivity out;
  out.conditional = ProbabilityValue::one();
  if (n == 1 || p == 1.0) {
    out.probability = ProbabilityValue::one();
    return out;
  }
  if (p == 0.0) {
    out.probability = ProbabilityValue::zero();
    out.conditional = ProbabilityValue::zero();
    out.log_bn_power = -std::numeric_limits<double>::infinity();
    return out;
  }
  const double c = static_cast<double>(n) * p;
  const auto profile = make_profile(n, c);
  const auto excursion = excursion_given_bridge_dp(profile);
  out.conditional = excursion.value;
  out.error_bound = excursion.error_bound;
  out.log_bn_power = static_cast<double>(n - 1) * log_stable_bn(n, c);
  out.probability = ProbabilityValue::from_log(out.log_bn_power + excursion.value.log_value());
  return out;
}

/// P_n(p) through the bridge/excursion representation.
inline ProbabilityValue connectivity_via_walk(std::int64_t n, double p) {
  return walk_connectivity(n, p).probability;
}

/// P(S_k >= 0 for all k > 0) for steps Y + 1 ~ Poisson(gamma), gamma > 1.
inline double meander_prob_supercritical(double gamma) {
  if (!(gamma > 1.0) || !std::isfinite(gamma)) {
    throw DomainError("meander_prob_supercritical: gamma must exceed 1");
  }
  // 1 - gamma e^(1 - gamma) directly; forming -gamma e^-gamma first would
  // lose the offset from the branch point as gamma -> 1.
  const double d = gamma - 1.0;
  double log1p_minus_d = 0.0;
  if (d < 0.01) {
    // -d^2/2 + d^3/3 - ... to relative order d^8.
    double term = d;
    for (int k = 2; k <= 10; ++k) {
      term *= -d;
      log1p_minus_d += term / k;
    }
  } else {
    log1p_minus_d = std::log1p(d) - d;
  }
  const double offset = -std::expm1(log1p_minus_d);
  // 1 + W/gamma = (d + (1 + W)) / gamma, both terms positive.
  return (d + detail::lambert_w0_plus_one(-gamma * std::exp(-gamma), offset)) / gamma;
}

/// P(S_k > 0 for all k > 0) for steps 1 - Y ~ Poisson(gamma), gamma < 1.
inline double meander_prob_subcritical_strict(double gamma) {
  if (!(gamma > 0.0 && gamma < 1.0)) {
    throw DomainError("meander_prob_subcritical_strict: gamma must lie in (0, 1)");
  }
  return 1.0 - gamma;
}

/// Step laws for the meander DP.
enum class StepLaw {
  kPoissonMinusOne,  // Y + 1 ~ Poisson(gamma): downward steps of exactly 1
  kOneMinusPoisson,  // 1 - Y ~ Poisson(gamma): upward steps of exactly 1
};

/// P(S_k >= 0 (or > 0 if strict) for 0 < k <= m), S_0 = 0, with step
/// intensities gamma_1..gamma_m. The returned error bound covers the pruned
/// upper tail and the jump truncation.
inline DpResult finite_meander_dp(std::span<const double> intensities, bool strict,
                                  StepLaw law = StepLaw::kPoissonMinusOne) {
  if (intensities.empty()) throw DomainError("finite_meander_dp: horizon must be positive");
  const std::int64_t offset = strict ? 1 : 0;
  CountingWalkDp dp;
  double eta = 0.0;
  for (std::size_t i = 0; i < intensities.size(); ++i) {
    const double gamma = intensities[i];
    if (!(gamma > 0.0) || !std::isfinite(gamma)) {
      throw DomainError("finite_meander_dp: intensities must be positive");
    }
    const auto k = static_cast<std::int64_t>(i + 1);
    dp.step(gamma);
    eta += gamma;
    if (law == StepLaw::kPoissonMinusOne) {
      // S_k = N_k - k.
      dp.zero_below(k + offset);
      dp.truncate_above(static_cast<std::int64_t>(std::ceil(eta + 12.0 * std::sqrt(eta) + 50.0)));
    } else {
      // S_k = k - N_k.
      dp.zero_above(k - offset);
    }
    if (dp.empty()) break;
  }
  DpResult result;
  const double mass = dp.mass();
  result.value = ProbabilityValue::from_linear(std::min(1.0, mass));
  result.error_bound = dp.error_bound();
  return result;
}

inline DpResult finite_meander_dp(double gamma, std::int64_t horizon, bool strict,
                                  StepLaw law = StepLaw::kPoissonMinusOne) {
  if (horizon < 1) throw DomainError("finite_meander_dp: horizon must be positive");
  const std::vector<double> intensities(static_cast<std::size_t>(horizon), gamma);
  return finite_meander_dp(intensities, strict, law);
}

struct DominationReport {
  bool condition_holds = false;          // shares of a dominate shares of b
  bool reverse_condition_holds = false;  // shares of b dominate shares of a
  DpResult p_a;
  DpResult p_b;
};

/// Compares P(N_j >= x_j, j <= n | N_n = y) for two Poisson counting walks.
/// When the cumulative shares of profile a dominate those of profile b at
/// every j, the probability under a must dominate the one under b; a
/// violation beyond 1e-12 throws std::logic_error.
inline DominationReport domination_compare(const IntensityProfile& profile_a,
                                           const IntensityProfile& profile_b, std::int64_t terminal,
                                           std::span<const std::int64_t> thresholds) {
  if (profile_a.n() != profile_b.n()) {
    throw DomainError("domination_compare: profiles differ in length");
  }
  if (terminal < 0) throw DomainError("domination_compare: terminal value must be nonnegative");
  constexpr double kShareSlack = 1e-12;
  constexpr double kProbabilitySlack = 1e-12;

  DominationReport report;
  report.condition_holds = true;
  report.reverse_condition_holds = true;
  const double total_a = profile_a.total();
  const double total_b = profile_b.total();
  for (std::int64_t j = 1; j <= profile_a.n(); ++j) {
    const double share_a = profile_a.eta(j) / total_a;
    const double share_b = profile_b.eta(j) / total_b;
    if (share_a < share_b - kShareSlack) report.condition_holds = false;
    if (share_b < share_a - kShareSlack) report.reverse_condition_holds = false;
  }
  report.p_a = conditional_bridge_probability(profile_a, thresholds, terminal);
  report.p_b = conditional_bridge_probability(profile_b, thresholds, terminal);
  const double pa = report.p_a.value.linear_value();
  const double pb = report.p_b.value.linear_value();
  if (report.condition_holds && pa < pb - kProbabilitySlack) {
    throw std::logic_error("domination_compare: ordering violated (p_a=" + std::to_string(pa) +
                           ", p_b=" + std::to_string(pb) + ")");
  }
  if (report.reverse_condition_holds && pb < pa - kProbabilitySlack) {
    throw std::logic_error("domination_compare: reverse ordering violated");
  }
  return report;
}

/// Upper bound on P(exists i in [m, n - m]: S_i = -1 | S_n = -1) for the
/// Erdos-Renyi profile with p = c/n. May exceed 1.
inline double mid_hitting_bound(std::int64_t n, std::int64_t m, double c) {
  if (n < 3) throw DomainError("mid_hitting_bound: n must be at least 3");
  if (m < 1 || 2 * m >= n) throw DomainError("mid_hitting_bound: need 1 <= m < n/2");
  if (!(c > 0.0) || !(c < static_cast<double>(n))) {
    throw DomainError("mid_hitting_bound: c must lie in (0, n)");
  }
  const double mm = static_cast<double>(m);
  if (c >= 1.0) return 400.0 * std::pow(0.99, mm);
  return 500.0 / (c * c * std::sqrt(mm)) * std::exp(-mm * c * c / 200.0);
}

/// Exact P(exists i in [m, n - m]: S_i = -1 | S_n = -1).
///
/// Runs two layers: mass that has not yet visited S = -1 inside the window
/// and mass that has. Each visit moves mass across, so the numerator is
/// accumulated directly instead of as one minus a complement.
inline DpResult mid_hitting_exact(const IntensityProfile& profile, std::int64_t m) {
  const std::int64_t n = profile.n();
  if (n < 3) throw DomainError("mid_hitting_exact: n must be at least 3");
  if (m < 1 || 2 * m >= n) throw DomainError("mid_hitting_exact: need 1 <= m < n/2");
  const std::int64_t terminal = n - 1;
  CountingWalkDp avoided(0, terminal);
  auto hit = CountingWalkDp::empty_with_cap(terminal);
  for (std::int64_t i = 1; i <= n; ++i) {
    avoided.step(profile.lambda(i));
    hit.step(profile.lambda(i));
    if (i >= m && i <= n - m) hit.add(i - 1, avoided.take(i - 1));
  }
  const double log_bridge = log_poisson_pmf(terminal, profile.total());
  const double numerator = hit.at(terminal);
  DpResult result;
  result.value = numerator > 0.0 ? ProbabilityValue::from_log(std::log(numerator) - log_bridge)
                                 : ProbabilityValue::zero();
  result.error_bound = (avoided.error_bound() + hit.error_bound()) * std::exp(-log_bridge);
  return result;
}

}  // namespace erconn
