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

// Monte Carlo engines: the graph exploration process, the conditioned
// bridge sampler and free/conditioned trajectory sampling.
//
// Every sample i draws from its own generator seeded from (seed, i), so
// estimates are identical for any thread count.

#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <thread>
#include <utility>
#include <vector>

#include "erconn/numerics.hpp"
#include "erconn/walk.hpp"

namespace erconn {

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

using SampleEngine = std::mt19937_64;

/// The generator for sample `index` of a run seeded with `seed`.
inline SampleEngine sample_stream(std::uint64_t seed, std::uint64_t index) {
  return SampleEngine(splitmix64(splitmix64(seed) ^ splitmix64(~index)));
}

/// Uniform on the open interval (0, 1) with 53 random bits.
inline double uniform_open01(SampleEngine& engine) {
  return (static_cast<double>(engine() >> 11) + 0.5) * 0x1p-53;
}

/// Exact Poisson(lambda) variate by sequential inversion. Means of 10 or
/// more are split into summands below 10, which keeps e^-lambda far from
/// underflow.
inline std::int64_t sample_poisson(SampleEngine& engine, double lambda) {
  if (!(lambda >= 0.0) || !std::isfinite(lambda)) {
    throw DomainError("sample_poisson: lambda must be nonnegative and finite");
  }
  std::int64_t total = 0;
  while (lambda > 0.0) {
    const double part = std::min(lambda, 9.5);
    lambda -= part;
    const double u = uniform_open01(engine);
    double pmf = std::exp(-part);
    double cdf = pmf;
    std::int64_t k = 0;
    while (u > cdf && k < 200) {
      ++k;
      pmf *= part / static_cast<double>(k);
      cdf += pmf;
    }
    total += k;
  }
  return total;
}

/// Exact Binomial(trials, p) variate by inversion on the smaller tail. Large
/// trial counts are split into blocks so (1 - p)^block stays representable.
inline std::int64_t sample_binomial(SampleEngine& engine, std::int64_t trials, double p) {
  if (trials < 0) throw DomainError("sample_binomial: negative trial count");
  if (!(p >= 0.0 && p <= 1.0)) throw DomainError("sample_binomial: p must lie in [0, 1]");
  if (trials == 0 || p == 0.0) return 0;
  if (p == 1.0) return trials;
  if (p > 0.5) return trials - sample_binomial(engine, trials, 1.0 - p);

  const double log_q = std::log1p(-p);
  const double odds = p / (1.0 - p);
  const auto block = std::max<std::int64_t>(1, static_cast<std::int64_t>(600.0 / -log_q));
  std::int64_t successes = 0;
  for (std::int64_t done = 0; done < trials; done += block) {
    const std::int64_t size = std::min(block, trials - done);
    const double u = uniform_open01(engine);
    double pmf = std::exp(static_cast<double>(size) * log_q);
    double cdf = pmf;
    std::int64_t k = 0;
    while (u > cdf && k < size) {
      pmf *= odds * static_cast<double>(size - k) / static_cast<double>(k + 1);
      ++k;
      cdf += pmf;
    }
    successes += k;
  }
  return successes;
}

/// Multinomial allocation over fixed cells by sequential conditional
/// binomials: cell i receives Binomial(left, w_i / (w_i + ... + w_last)).
class MultinomialSampler {
 public:
  explicit MultinomialSampler(std::span<const double> weights) : shares_(weights.size(), 1.0) {
    if (weights.empty()) throw DomainError("MultinomialSampler: no cells");
    // Suffix sums avoid drift from repeatedly subtracting weights.
    double suffix = 0.0;
    for (std::size_t i = weights.size(); i-- > 0;) {
      if (!(weights[i] >= 0.0)) throw DomainError("MultinomialSampler: negative weight");
      suffix += weights[i];
      shares_[i] = suffix > 0.0 ? std::clamp(weights[i] / suffix, 0.0, 1.0) : 0.0;
    }
    shares_.back() = 1.0;
  }

  std::size_t cells() const { return shares_.size(); }

  /// Draws the count of cell i given `left` trials not yet allocated to
  /// cells before i.
  std::int64_t draw_cell(SampleEngine& engine, std::size_t i, std::int64_t left) const {
    return sample_binomial(engine, left, shares_[i]);
  }

  void sample(SampleEngine& engine, std::int64_t trials, std::span<std::int64_t> out) const {
    if (out.size() != shares_.size()) throw DomainError("MultinomialSampler: size mismatch");
    std::int64_t left = trials;
    for (std::size_t i = 0; i < shares_.size(); ++i) {
      out[i] = draw_cell(engine, i, left);
      left -= out[i];
    }
  }

 private:
  std::vector<double> shares_;
};

inline void sample_multinomial(SampleEngine& engine, std::int64_t trials,
                               std::span<const double> weights, std::span<std::int64_t> out) {
  MultinomialSampler(weights).sample(engine, trials, out);
}

struct McEstimate {
  double mean = 0.0;
  double std_error = 0.0;
  std::int64_t samples = 0;
  std::uint64_t seed = 0;
};

namespace detail {

inline McEstimate indicator_estimate(std::int64_t hits, std::int64_t samples, std::uint64_t seed) {
  McEstimate est;
  est.samples = samples;
  est.seed = seed;
  est.mean = static_cast<double>(hits) / static_cast<double>(samples);
  est.std_error = std::sqrt(est.mean * (1.0 - est.mean) / static_cast<double>(samples));
  return est;
}

// Counts indicator(i) over i in [0, samples), contiguous blocks per thread.
template <typename Indicator>
std::int64_t count_hits(std::int64_t samples, unsigned threads, const Indicator& indicator) {
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::int64_t>(threads, samples));
  if (threads <= 1) {
    std::int64_t hits = 0;
    for (std::int64_t i = 0; i < samples; ++i) hits += indicator(i) ? 1 : 0;
    return hits;
  }
  std::vector<std::int64_t> partial(threads, 0);
  std::vector<std::thread> workers;
  for (unsigned t = 0; t < threads; ++t) {
    const std::int64_t begin = samples * t / threads;
    const std::int64_t end = samples * (t + 1) / threads;
    workers.emplace_back([&, t, begin, end] {
      std::int64_t hits = 0;
      for (std::int64_t i = begin; i < end; ++i) hits += indicator(i) ? 1 : 0;
      partial[t] = hits;
    });
  }
  for (auto& w : workers) w.join();
  std::int64_t hits = 0;
  for (auto h : partial) hits += h;
  return hits;
}

inline void check_samples(std::int64_t samples) {
  if (samples < 1) throw DomainError("Monte Carlo: samples must be at least 1");
}

}  // namespace detail

/// One run of the exploration process on G(n, p): true when the component
/// of the start vertex has all n vertices.
inline bool explore_once(SampleEngine& engine, std::int64_t n, double p) {
  std::int64_t active = 1;
  std::int64_t inactive = n - 1;
  for (std::int64_t t = 1; t < n; ++t) {
    const std::int64_t added = sample_binomial(engine, inactive, p);
    inactive -= added;
    active += added - 1;
    if (active <= 0) return false;
  }
  return true;
}

/// Estimates P_n(p) by simulating the exploration process; the number of
/// newly activated vertices per step is Binomial(inactive, p).
inline McEstimate explore_connectivity_mc(std::int64_t n, double p, std::int64_t samples,
                                          std::uint64_t seed, unsigned threads = 1) {
  if (n < 1) throw DomainError("explore_connectivity_mc: n must be positive");
  if (!(p >= 0.0 && p <= 1.0)) throw DomainError("explore_connectivity_mc: p must lie in [0, 1]");
  detail::check_samples(samples);
  const auto hits = detail::count_hits(samples, threads, [&](std::int64_t i) {
    auto engine = sample_stream(seed, static_cast<std::uint64_t>(i));
    return explore_once(engine, n, p);
  });
  return detail::indicator_estimate(hits, samples, seed);
}

namespace detail {

inline void check_bridge_profile(const IntensityProfile& profile) {
  const double n = static_cast<double>(profile.n());
  if (std::abs(profile.total() - n) > 1e-9 * n) {
    throw DomainError("bridge sampler: intensities must sum to n");
  }
}

}  // namespace detail

/// Estimates P(S_k >= 0 for 0 < k < n | S_n = -1). Given the bridge
/// endpoint, the n - 1 unit jumps of the cumulated walk fall on the steps
/// multinomially with cell probabilities lambda_i / n.
inline McEstimate bridge_excursion_mc(const IntensityProfile& profile, std::int64_t samples,
                                      std::uint64_t seed, unsigned threads = 1) {
  detail::check_samples(samples);
  detail::check_bridge_profile(profile);
  const std::int64_t n = profile.n();
  const MultinomialSampler allocation(profile.lambdas());
  const auto hits = detail::count_hits(samples, threads, [&](std::int64_t i) {
    auto engine = sample_stream(seed, static_cast<std::uint64_t>(i));
    // Cells are drawn in order, so the path can be rejected at the first
    // step where T_k < k.
    std::int64_t cumulated = 0;
    for (std::int64_t k = 1; k < n; ++k) {
      cumulated += allocation.draw_cell(engine, static_cast<std::size_t>(k - 1), n - 1 - cumulated);
      if (cumulated < k) return false;
    }
    return true;
  });
  return detail::indicator_estimate(hits, samples, seed);
}

struct TrajectoryRecord {
  std::int64_t n = 0;
  std::optional<double> c;
  /// (k, S_k) for k = 0..n.
  std::vector<std::pair<std::int64_t, std::int64_t>> steps;
  bool conditioned = false;
};

/// Sample paths of S_k. Free paths draw X_i + 1 ~ Poisson(lambda_i);
/// conditioned paths are bridges to S_n = -1 drawn by multinomial
/// allocation.
inline std::vector<TrajectoryRecord> sample_trajectories(const IntensityProfile& profile,
                                                         std::int64_t count, bool conditioned,
                                                         std::uint64_t seed) {
  if (count < 1) throw DomainError("sample_trajectories: count must be at least 1");
  if (conditioned) detail::check_bridge_profile(profile);
  const std::int64_t n = profile.n();
  std::optional<MultinomialSampler> allocation;
  if (conditioned) allocation.emplace(profile.lambdas());
  std::vector<TrajectoryRecord> records;
  records.reserve(static_cast<std::size_t>(count));
  std::vector<std::int64_t> jumps(static_cast<std::size_t>(n));
  for (std::int64_t r = 0; r < count; ++r) {
    auto engine = sample_stream(seed, static_cast<std::uint64_t>(r));
    if (conditioned) {
      allocation->sample(engine, n - 1, jumps);
    } else {
      for (std::int64_t i = 0; i < n; ++i) jumps[i] = sample_poisson(engine, profile.lambdas()[i]);
    }
    TrajectoryRecord record;
    record.n = n;
    record.c = profile.c();
    record.conditioned = conditioned;
    record.steps.reserve(static_cast<std::size_t>(n + 1));
    record.steps.emplace_back(0, 0);
    std::int64_t position = 0;
    for (std::int64_t k = 1; k <= n; ++k) {
      position += jumps[k - 1] - 1;
      record.steps.emplace_back(k, position);
    }
    records.push_back(std::move(record));
  }
  return records;
}

}  // namespace erconn
