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

// Graph-side connectivity oracles for G(n, p) that do not go through the
// random-walk representation: exhaustive enumeration, the Gilbert
// recursion, and the exploration-process sum over jump compositions.

#pragma once

#include <algorithm>
#include <array>
#include <bit>
#include <cmath>
#include <cstdint>
#include <limits>
#include <string>
#include <thread>
#include <vector>

#include "erconn/numerics.hpp"

namespace erconn {

inline constexpr int kBruteForceMaxVertices = 8;
inline constexpr int kPconMaxVertices = 12;

namespace detail {

inline void check_edge_probability(double p, const char* who) {
  if (!(p > 0.0 && p < 1.0)) throw DomainError(std::string(who) + ": p must lie in (0, 1)");
}

// Union-find over at most 8 vertices with path halving.
struct SmallUnionFind {
  std::array<std::uint8_t, kBruteForceMaxVertices> parent{};
  int components = 0;

  explicit SmallUnionFind(int n) : components(n) {
    for (int v = 0; v < n; ++v) parent[v] = static_cast<std::uint8_t>(v);
  }

  int find(int v) {
    while (parent[v] != v) {
      parent[v] = parent[parent[v]];
      v = parent[v];
    }
    return v;
  }

  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) {
      parent[a] = static_cast<std::uint8_t>(b);
      --components;
    }
  }
};

// Counts connected edge subsets by edge count over masks [begin, end).
inline std::vector<std::uint64_t> count_connected_subsets(int n, std::uint64_t begin,
                                                          std::uint64_t end) {
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) edges.emplace_back(i, j);
  std::vector<std::uint64_t> counts(edges.size() + 1, 0);
  for (std::uint64_t mask = begin; mask < end; ++mask) {
    const int edge_count = std::popcount(mask);
    if (edge_count < n - 1) continue;
    SmallUnionFind uf(n);
    for (std::uint64_t rest = mask; rest != 0 && uf.components > 1; rest &= rest - 1) {
      const auto& [a, b] = edges[static_cast<std::size_t>(std::countr_zero(rest))];
      uf.unite(a, b);
    }
    if (uf.components == 1) ++counts[static_cast<std::size_t>(edge_count)];
  }
  return counts;
}

}  // namespace detail

struct GraphEnumSpec {
  int n = 1;
  double p = 0.5;
};

/// Exact P_n(p) by enumerating all 2^C(n,2) edge subsets (n <= 8).
///
/// Subsets are counted per edge count, so the shard count never changes the
/// result: the final weighted sum always runs in the same order.
inline ProbabilityValue connectivity_brute_force(const GraphEnumSpec& spec, int shards = 1) {
  if (spec.n < 1) throw DomainError("connectivity_brute_force: n must be positive");
  if (spec.n > kBruteForceMaxVertices) {
    throw RefusalError("connectivity_brute_force: n=" + std::to_string(spec.n) +
                       " exceeds the enumeration ceiling of 8");
  }
  detail::check_edge_probability(spec.p, "connectivity_brute_force");
  const int n = spec.n;
  const int edge_total = n * (n - 1) / 2;
  const std::uint64_t subsets = std::uint64_t{1} << edge_total;

  shards = std::max(1, shards);
  std::vector<std::vector<std::uint64_t>> partial(static_cast<std::size_t>(shards));
  if (shards == 1) {
    partial[0] = detail::count_connected_subsets(n, 0, subsets);
  } else {
    std::vector<std::thread> workers;
    for (int s = 0; s < shards; ++s) {
      const std::uint64_t begin = subsets * static_cast<std::uint64_t>(s) / shards;
      const std::uint64_t end = subsets * static_cast<std::uint64_t>(s + 1) / shards;
      workers.emplace_back([&partial, s, n, begin, end] {
        partial[static_cast<std::size_t>(s)] = detail::count_connected_subsets(n, begin, end);
      });
    }
    for (auto& w : workers) w.join();
  }

  const double log_p = std::log(spec.p);
  const double log_q = std::log1p(-spec.p);
  double sum = 0.0;
  for (int e = 0; e <= edge_total; ++e) {
    std::uint64_t count = 0;
    for (const auto& shard : partial) count += shard[static_cast<std::size_t>(e)];
    if (count == 0) continue;
    sum += static_cast<double>(count) * std::exp(e * log_p + (edge_total - e) * log_q);
  }
  return ProbabilityValue::from_linear(std::min(1.0, sum));
}

struct RecursiveConnectivity {
  ProbabilityValue value;
  /// Magnification of rounding error in the final subtraction, roughly
  /// (1 + sum of subtracted terms) / P_n.
  double condition = 1.0;
  /// True when the estimated cancellation error exceeds 1e-8 of the result.
  bool ill_conditioned = false;
};

/// P_n(p) by the Gilbert recursion
///   P_m = 1 - sum_{k=1}^{m-1} C(m-1, k-1) P_k (1-p)^{k(m-k)}.
inline RecursiveConnectivity connectivity_recursive(std::int64_t n, double p) {
  if (n < 1) throw DomainError("connectivity_recursive: n must be positive");
  detail::check_edge_probability(p, "connectivity_recursive");
  const double log_q = std::log1p(-p);
  std::vector<double> probabilities(static_cast<std::size_t>(n + 1), 0.0);
  std::vector<double> log_probabilities(static_cast<std::size_t>(n + 1), 0.0);
  probabilities[1] = 1.0;
  RecursiveConnectivity out;
  for (std::int64_t m = 2; m <= n; ++m) {
    double subtracted = 0.0;
    for (std::int64_t k = 1; k < m; ++k) {
      if (probabilities[k] == 0.0) continue;
      const double log_binom = log_factorial(m - 1) - log_factorial(k - 1) - log_factorial(m - k);
      subtracted += std::exp(log_binom + log_probabilities[k] +
                             static_cast<double>(k * (m - k)) * log_q);
    }
    const double value = 1.0 - subtracted;
    probabilities[m] = value > 0.0 ? value : 0.0;
    log_probabilities[m] = value > 0.0 ? std::log(value) : -std::numeric_limits<double>::infinity();
    if (m == n) {
      out.condition = value > 0.0 ? (1.0 + subtracted) / value
                                  : std::numeric_limits<double>::infinity();
    }
  }
  out.value = ProbabilityValue::from_linear(std::min(1.0, probabilities[n]));
  out.ill_conditioned = out.condition * std::numeric_limits<double>::epsilon() > 1e-8;
  return out;
}

namespace detail {

struct PconSearch {
  int n;
  double log_p;
  double log_q;
  std::vector<double> log_factorials;
  double total = 0.0;

  // Position t (1-based) chooses j_t given the running prefix sum; the factor
  // is C(n-1-prefix, j_t) p^j_t (1-p)^(n-1-prefix-j_t).
  void visit(int t, int prefix, double log_weight) {
    const int remaining = n - 1 - prefix;
    if (t == n) {
      // The last jump must use up everything that is left.
      total += std::exp(log_weight + remaining * log_p);
      return;
    }
    const int least = std::max(0, t - prefix);
    for (int j = least; j <= remaining; ++j) {
      const double log_binom =
          log_factorials[remaining] - log_factorials[j] - log_factorials[remaining - j];
      visit(t + 1, prefix + j, log_weight + log_binom + j * log_p + (remaining - j) * log_q);
    }
  }
};

}  // namespace detail

/// P_n(p) by direct summation over the exploration-process index set: jump
/// sequences j_1..j_n with j_1 + ... + j_k >= k for k < n and total n - 1.
inline ProbabilityValue connectivity_pcon_sum(int n, double p) {
  if (n < 1) throw DomainError("connectivity_pcon_sum: n must be positive");
  if (n > kPconMaxVertices) {
    throw RefusalError("connectivity_pcon_sum: n=" + std::to_string(n) +
                       " exceeds the summation ceiling of 12");
  }
  detail::check_edge_probability(p, "connectivity_pcon_sum");
  if (n == 1) return ProbabilityValue::one();
  detail::PconSearch search{n, std::log(p), std::log1p(-p), {}, 0.0};
  for (int k = 0; k < n; ++k) search.log_factorials.push_back(log_factorial(k));
  search.visit(1, 0, 0.0);
  return ProbabilityValue::from_linear(std::min(1.0, search.total));
}

}  // namespace erconn
