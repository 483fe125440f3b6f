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

// Command-line front end. Subcommands:
//
//   exact         P_n(p) by one engine (brute, recursive, pcon, walk, auto)
//   asympt        classified asymptotic formula
//   mc            Monte Carlo estimate (exploration or bridge sampler)
//   compare       every applicable engine side by side, with deltas
//   table         one engine plus asymptotics over n/p ranges
//   trajectories  sample paths of S_k
//
// stdout carries data (JSON or CSV), stderr diagnostics. Exit status is 0 on
// success, 2 on usage or domain errors and 3 on refusals.

#pragma once

#include <CLI11.hpp>
#include <json.hpp>

#include <array>
#include <charconv>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <limits>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "erconn/asymptotics.hpp"
#include "erconn/graphs.hpp"
#include "erconn/numerics.hpp"
#include "erconn/simulate.hpp"
#include "erconn/walk.hpp"

namespace erconn::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitDomain = 2;
inline constexpr int kExitRefusal = 3;
inline constexpr std::int64_t kRecursiveMaxVertices = 400;

enum class Command { kExact, kAsympt, kMc, kCompare, kTable, kTrajectories };
enum class Method { kBrute, kRecursive, kPcon, kWalk, kAuto };
enum class Format { kJson, kCsv };
enum class Estimator { kExplore, kBridge };

struct RunConfig {
  Command command = Command::kExact;
  std::string n_spec;
  std::optional<std::string> p_spec;
  std::optional<std::string> c_spec;
  Method method = Method::kAuto;
  Estimator estimator = Estimator::kExplore;
  std::int64_t samples = 10000;
  std::uint64_t seed = 1;
  Format format = Format::kJson;
  std::optional<std::int64_t> m;
  std::optional<Regime> regime;
  ClassifierThresholds thresholds;
  bool conditioned = false;
  std::optional<std::string> out_path;
};

/// Formats a double as the shortest string that reads back to the same value.
inline std::string format_double(double value) {
  if (std::isnan(value)) return "nan";
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  char buffer[64];
  const auto result = std::to_chars(buffer, buffer + sizeof(buffer), value);
  return std::string(buffer, result.ptr);
}

namespace detail {

inline double parse_number(std::string_view text, std::string_view field) {
  double value = 0.0;
  const auto* end = text.data() + text.size();
  const auto result = std::from_chars(text.data(), end, value);
  if (result.ec != std::errc() || result.ptr != end) {
    throw DomainError(std::string(field) + ": cannot parse '" + std::string(text) + "' as a number");
  }
  return value;
}

}  // namespace detail

/// Parses a value or a finite progression:
///   "v"          single value
///   "a:b:s"      arithmetic a, a+s, ... up to b
///   "a:b:xf"     geometric a, a*f, ... up to b
inline std::vector<double> parse_range(std::string_view spec, std::string_view field) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    const auto colon = spec.find(':', start);
    parts.push_back(spec.substr(start, colon - start));
    if (colon == std::string_view::npos) break;
    start = colon + 1;
  }
  if (parts.size() == 1) return {detail::parse_number(parts[0], field)};
  if (parts.size() != 3) {
    throw DomainError(std::string(field) + ": range must be 'start:stop:step' or 'start:stop:xfactor'");
  }
  const double first = detail::parse_number(parts[0], field);
  const double last = detail::parse_number(parts[1], field);
  const bool geometric = !parts[2].empty() && parts[2][0] == 'x';
  const double step = detail::parse_number(geometric ? parts[2].substr(1) : parts[2], field);
  constexpr std::size_t kMaxPoints = 100000;
  std::vector<double> values;
  const double slack = 1e-9 * std::max(std::abs(first), std::abs(last));
  if (geometric) {
    if (!(step > 1.0) || !(first > 0.0)) {
      throw DomainError(std::string(field) + ": geometric range needs start > 0 and factor > 1");
    }
    for (double v = first; v <= last * (1.0 + 1e-12) && values.size() < kMaxPoints; v *= step) {
      values.push_back(v);
    }
  } else {
    if (!(step > 0.0)) throw DomainError(std::string(field) + ": arithmetic step must be positive");
    for (std::size_t i = 0; values.size() < kMaxPoints; ++i) {
      const double v = first + static_cast<double>(i) * step;
      if (v > last + slack) break;
      values.push_back(v);
    }
  }
  if (values.empty() || values.size() >= kMaxPoints) {
    throw DomainError(std::string(field) + ": range is empty or too long");
  }
  return values;
}

inline std::vector<std::int64_t> parse_integer_range(std::string_view spec, std::string_view field) {
  std::vector<std::int64_t> values;
  for (double v : parse_range(spec, field)) {
    const auto rounded = static_cast<std::int64_t>(std::llround(v));
    if (rounded < 1) throw DomainError(std::string(field) + ": values must be positive integers");
    if (values.empty() || values.back() != rounded) values.push_back(rounded);
  }
  return values;
}

namespace detail {

using Json = nlohmann::ordered_json;

inline Json json_number(std::optional<double> value) {
  if (!value || !std::isfinite(*value)) return nullptr;
  return *value;
}

inline std::string csv_field(const std::string& text) {
  if (text.find_first_of(",\"\n") == std::string::npos) return text;
  std::string quoted = "\"";
  for (char ch : text) {
    if (ch == '"') quoted += '"';
    quoted += ch;
  }
  return quoted + '"';
}

// One output table: fixed column order, rows of optional cells.
struct Table {
  std::vector<std::string> columns;
  std::vector<Json> rows;  // each row is an ordered object keyed by columns

  void write(std::ostream& out, Format format, std::string_view command) const {
    if (format == Format::kJson) {
      Json doc;
      doc["command"] = command;
      doc["results"] = Json::array();
      for (const auto& row : rows) doc["results"].push_back(row);
      out << doc.dump() << '\n';
      return;
    }
    for (std::size_t i = 0; i < columns.size(); ++i) out << (i ? "," : "") << columns[i];
    out << '\n';
    for (const auto& row : rows) {
      for (std::size_t i = 0; i < columns.size(); ++i) {
        if (i) out << ',';
        const auto it = row.find(columns[i]);
        if (it == row.end() || it->is_null()) continue;
        if (it->is_number_float()) {
          out << format_double(it->get<double>());
        } else if (it->is_number_unsigned()) {
          out << it->get<std::uint64_t>();
        } else if (it->is_number_integer()) {
          out << it->get<std::int64_t>();
        } else if (it->is_boolean()) {
          out << (it->get<bool>() ? "true" : "false");
        } else if (it->is_string()) {
          out << csv_field(it->get<std::string>());
        } else {
          out << it->dump();
        }
      }
      out << '\n';
    }
  }
};

struct Point {
  std::int64_t n;
  double p;
  double c;
};

inline std::vector<Point> expand_points(const RunConfig& config) {
  if (config.n_spec.empty()) throw DomainError("--n: required");
  if (config.p_spec.has_value() == config.c_spec.has_value()) {
    throw DomainError("--p/--c: exactly one of --p or --c must be given");
  }
  const auto ns = parse_integer_range(config.n_spec, "--n");
  const bool by_c = config.c_spec.has_value();
  const auto values = parse_range(by_c ? *config.c_spec : *config.p_spec, by_c ? "--c" : "--p");
  std::vector<Point> points;
  for (auto n : ns) {
    for (double v : values) {
      const double nn = static_cast<double>(n);
      Point pt{n, by_c ? v / nn : v, by_c ? v : v * nn};
      if (!(pt.p >= 0.0 && pt.p <= 1.0)) {
        throw DomainError(std::string(by_c ? "--c" : "--p") + ": edge probability " +
                          format_double(pt.p) + " outside [0, 1] at n=" + std::to_string(n));
      }
      points.push_back(pt);
    }
  }
  return points;
}

inline std::string_view method_name(Method method) {
  switch (method) {
    case Method::kBrute: return "brute";
    case Method::kRecursive: return "recursive";
    case Method::kPcon: return "pcon";
    case Method::kWalk: return "walk";
    case Method::kAuto: return "auto";
  }
  return "auto";
}

inline Method resolve_method(Method method, std::int64_t n) {
  if (method != Method::kAuto) return method;
  return n > kBruteForceMaxVertices ? Method::kWalk : Method::kBrute;
}

struct ExactValue {
  ProbabilityValue value;
  std::optional<double> error_bound;
  std::optional<double> conditional;
  std::optional<double> condition;
};

inline ExactValue evaluate_exact(Method method, std::int64_t n, double p) {
  // The graph-side engines are defined on open (0, 1); the edge cases are
  // trivial.
  if (method != Method::kWalk && (n == 1 || p == 0.0 || p == 1.0)) {
    return {n == 1 || p == 1.0 ? ProbabilityValue::one() : ProbabilityValue::zero(), {}, {}, {}};
  }
  switch (method) {
    case Method::kBrute:
      return {connectivity_brute_force({static_cast<int>(std::min<std::int64_t>(n, 1000)), p}), {}, {}, {}};
    case Method::kRecursive: {
      if (n > kRecursiveMaxVertices) {
        throw RefusalError("recursive: n=" + std::to_string(n) + " exceeds the ceiling of 400");
      }
      const auto r = connectivity_recursive(n, p);
      return {r.value, {}, {}, r.condition};
    }
    case Method::kPcon:
      return {connectivity_pcon_sum(static_cast<int>(std::min<std::int64_t>(n, 1000)), p), {}, {}, {}};
    case Method::kWalk:
    case Method::kAuto: {
      const auto w = walk_connectivity(n, p);
      return {w.probability, w.error_bound, w.conditional.linear_value(), {}};
    }
  }
  throw DomainError("unknown method");
}

inline std::optional<RegimeReport> try_asymptotic(const RunConfig& config, const Point& pt) {
  if (!(pt.c > 0.0) || !(pt.c < static_cast<double>(pt.n))) return std::nullopt;
  try {
    return asymptotic_connectivity(pt.n, pt.c, config.regime, config.thresholds);
  } catch (const RefusalError&) {
    return std::nullopt;
  }
}

inline Table run_exact(const RunConfig& config) {
  Table table;
  table.columns = {"n", "p", "c", "method", "value", "log_value", "error_bound", "conditional"};
  if (config.m) table.columns.insert(table.columns.end(), {"m", "hitting_exact", "hitting_bound"});
  for (const auto& pt : expand_points(config)) {
    const Method method = resolve_method(config.method, pt.n);
    const auto exact = evaluate_exact(method, pt.n, pt.p);
    Json row;
    row["n"] = pt.n;
    row["p"] = pt.p;
    row["c"] = pt.c;
    row["method"] = method_name(method);
    row["value"] = exact.value.linear_value();
    row["log_value"] = json_number(exact.value.log_value());
    row["error_bound"] = json_number(exact.error_bound);
    row["conditional"] = json_number(exact.conditional);
    if (config.m) {
      if (!(pt.p > 0.0 && pt.p < 1.0)) throw DomainError("--m: needs p in (0, 1)");
      const auto profile = make_profile(pt.n, pt.c);
      row["m"] = *config.m;
      row["hitting_exact"] = mid_hitting_exact(profile, *config.m).value.linear_value();
      row["hitting_bound"] = mid_hitting_bound(pt.n, *config.m, pt.c);
    }
    table.rows.push_back(std::move(row));
  }
  return table;
}

inline void fill_asymptotic(Json& row, const RunConfig& config, const Point& pt) {
  const auto report = try_asymptotic(config, pt);
  const Regime regime = report ? report->regime
                        : (pt.c > 0.0 && pt.c < static_cast<double>(pt.n))
                            ? classify_regime(pt.n, pt.c, config.thresholds).regime
                            : Regime::kUncovered;
  row["regime"] = regime_name(regime);
  row["asymptotic"] = report ? json_number(report->value->linear_value()) : Json(nullptr);
  row["asymptotic_log"] = report ? json_number(report->raw_log_value) : Json(nullptr);
}

inline Table run_asympt(const RunConfig& config) {
  Table table;
  table.columns = {"n", "p", "c", "regime", "formula_id", "value", "log_value",
                   "raw_value", "raw_log_value", "note"};
  for (const auto& pt : expand_points(config)) {
    const auto report = asymptotic_connectivity(pt.n, pt.c, config.regime, config.thresholds);
    Json row;
    row["n"] = pt.n;
    row["p"] = pt.p;
    row["c"] = pt.c;
    row["regime"] = regime_name(report.regime);
    row["formula_id"] = report.formula_id;
    row["value"] = report.value->linear_value();
    row["log_value"] = json_number(report.value->log_value());
    row["raw_value"] = json_number(report.raw_value());
    row["raw_log_value"] = json_number(report.raw_log_value);
    row["note"] = report.applicability_note;
    table.rows.push_back(std::move(row));
  }
  return table;
}

inline Table run_mc(const RunConfig& config) {
  Table table;
  table.columns = {"n", "p", "c", "estimator", "mean", "std_error", "samples", "seed"};
  for (const auto& pt : expand_points(config)) {
    McEstimate est;
    if (config.estimator == Estimator::kExplore) {
      est = explore_connectivity_mc(pt.n, pt.p, config.samples, config.seed, 0);
    } else {
      if (!(pt.p > 0.0 && pt.p < 1.0)) throw DomainError("--p: bridge estimator needs p in (0, 1)");
      est = bridge_excursion_mc(make_profile(pt.n, pt.c), config.samples, config.seed, 0);
    }
    Json row;
    row["n"] = pt.n;
    row["p"] = pt.p;
    row["c"] = pt.c;
    row["estimator"] = config.estimator == Estimator::kExplore ? "explore" : "bridge";
    row["mean"] = est.mean;
    row["std_error"] = est.std_error;
    row["samples"] = est.samples;
    row["seed"] = est.seed;
    table.rows.push_back(std::move(row));
  }
  return table;
}

inline Table run_compare(const RunConfig& config) {
  static constexpr std::array<Method, 4> kEngines = {Method::kBrute, Method::kRecursive,
                                                     Method::kPcon, Method::kWalk};
  Table table;
  table.columns = {"n", "p", "c", "brute", "recursive", "pcon", "walk", "asymptotic", "regime"};
  for (std::size_t a = 0; a < kEngines.size(); ++a)
    for (std::size_t b = a + 1; b < kEngines.size(); ++b)
      table.columns.push_back("d_" + std::string(method_name(kEngines[a])) + "_" +
                              std::string(method_name(kEngines[b])));
  for (const auto& pt : expand_points(config)) {
    std::array<std::optional<double>, 4> values;
    for (std::size_t e = 0; e < kEngines.size(); ++e) {
      const Method m = kEngines[e];
      const bool applicable = (m == Method::kBrute && pt.n <= kBruteForceMaxVertices) ||
                              (m == Method::kRecursive && pt.n <= kRecursiveMaxVertices) ||
                              (m == Method::kPcon && pt.n <= kPconMaxVertices) || m == Method::kWalk;
      if (applicable) values[e] = evaluate_exact(m, pt.n, pt.p).value.linear_value();
    }
    Json row;
    row["n"] = pt.n;
    row["p"] = pt.p;
    row["c"] = pt.c;
    for (std::size_t e = 0; e < kEngines.size(); ++e) {
      row[std::string(method_name(kEngines[e]))] = json_number(values[e]);
    }
    Json asymptotic_row;
    fill_asymptotic(asymptotic_row, config, pt);
    row["asymptotic"] = asymptotic_row["asymptotic"];
    row["regime"] = asymptotic_row["regime"];
    for (std::size_t a = 0; a < kEngines.size(); ++a) {
      for (std::size_t b = a + 1; b < kEngines.size(); ++b) {
        const std::string key = "d_" + std::string(method_name(kEngines[a])) + "_" +
                                std::string(method_name(kEngines[b]));
        row[key] = values[a] && values[b] ? Json(*values[a] - *values[b]) : Json(nullptr);
      }
    }
    table.rows.push_back(std::move(row));
  }
  return table;
}

inline Table run_table(const RunConfig& config) {
  Table table;
  table.columns = {"n", "p", "c", "method", "value", "log_value", "regime", "asymptotic",
                   "asymptotic_log", "log_ratio"};
  for (const auto& pt : expand_points(config)) {
    const Method method = resolve_method(config.method, pt.n);
    const auto exact = evaluate_exact(method, pt.n, pt.p);
    Json row;
    row["n"] = pt.n;
    row["p"] = pt.p;
    row["c"] = pt.c;
    row["method"] = method_name(method);
    row["value"] = exact.value.linear_value();
    row["log_value"] = json_number(exact.value.log_value());
    fill_asymptotic(row, config, pt);
    std::optional<double> log_ratio;
    if (row["asymptotic_log"].is_number() && std::isfinite(exact.value.log_value())) {
      log_ratio = exact.value.log_value() - row["asymptotic_log"].get<double>();
    }
    row["log_ratio"] = json_number(log_ratio);
    table.rows.push_back(std::move(row));
  }
  return table;
}

inline void run_trajectories(const RunConfig& config, std::ostream& out) {
  const auto points = expand_points(config);
  if (points.size() != 1) throw DomainError("--n/--p: trajectories need a single (n, p) point");
  const auto& pt = points.front();
  if (!(pt.p > 0.0 && pt.p < 1.0)) throw DomainError("--p: trajectories need p in (0, 1)");
  const auto records =
      sample_trajectories(make_profile(pt.n, pt.c), config.samples, config.conditioned, config.seed);
  if (config.format == Format::kCsv) {
    out << "run_id,k,S_k\n";
    for (std::size_t r = 0; r < records.size(); ++r) {
      for (const auto& [k, s] : records[r].steps) out << r << ',' << k << ',' << s << '\n';
    }
    return;
  }
  Json doc;
  doc["command"] = "trajectories";
  doc["results"] = Json::array();
  for (std::size_t r = 0; r < records.size(); ++r) {
    Json row;
    row["run_id"] = r;
    row["n"] = records[r].n;
    row["c"] = pt.c;
    row["conditioned"] = records[r].conditioned;
    row["seed"] = config.seed;
    Json path = Json::array();
    for (const auto& step : records[r].steps) path.push_back(step.second);
    row["S"] = std::move(path);
    doc["results"].push_back(std::move(row));
  }
  out << doc.dump() << '\n';
}

inline std::string_view command_name(Command command) {
  switch (command) {
    case Command::kExact: return "exact";
    case Command::kAsympt: return "asympt";
    case Command::kMc: return "mc";
    case Command::kCompare: return "compare";
    case Command::kTable: return "table";
    case Command::kTrajectories: return "trajectories";
  }
  return "exact";
}

}  // namespace detail

/// Executes a parsed configuration, writing data to `out`. Errors propagate
/// as DomainError / RefusalError.
inline void execute(const RunConfig& config, std::ostream& out) {
  using detail::Table;
  if (config.command == Command::kTrajectories) {
    detail::run_trajectories(config, out);
    return;
  }
  Table table;
  switch (config.command) {
    case Command::kExact: table = detail::run_exact(config); break;
    case Command::kAsympt: table = detail::run_asympt(config); break;
    case Command::kMc: table = detail::run_mc(config); break;
    case Command::kCompare: table = detail::run_compare(config); break;
    case Command::kTable: table = detail::run_table(config); break;
    case Command::kTrajectories: break;
  }
  table.write(out, config.format, detail::command_name(config.command));
}

/// Parses argv into a RunConfig. Returns an exit code instead when parsing
/// ends the run (help output or a usage error).
inline std::variant<RunConfig, int> parse(int argc, const char* const* argv, std::ostream& out,
                                          std::ostream& err) {
  CLI::App app{"Connectivity probability of Erdos-Renyi graphs G(n, p)", "erconn"};
  app.require_subcommand(1);
  RunConfig config;
  std::string regime_text;

  const std::map<std::string, Method> methods{{"brute", Method::kBrute},
                                              {"recursive", Method::kRecursive},
                                              {"pcon", Method::kPcon},
                                              {"walk", Method::kWalk},
                                              {"auto", Method::kAuto}};
  const std::map<std::string, Format> formats{{"json", Format::kJson}, {"csv", Format::kCsv}};
  const std::map<std::string, Estimator> estimators{{"explore", Estimator::kExplore},
                                                    {"bridge", Estimator::kBridge}};

  const std::vector<std::pair<Command, std::string>> commands{
      {Command::kExact, "Exact connectivity probability by one engine"},
      {Command::kAsympt, "Asymptotic formula for the classified regime"},
      {Command::kMc, "Monte Carlo estimate"},
      {Command::kCompare, "All applicable engines side by side"},
      {Command::kTable, "Sweep n and p/c ranges with one engine"},
      {Command::kTrajectories, "Sample paths of the walk S_k"}};

  for (const auto& [command, description] : commands) {
    auto* sub = app.add_subcommand(std::string(detail::command_name(command)), description);
    sub->callback([&config, command = command] { config.command = command; });
    sub->add_option("--n", config.n_spec, "Vertex count or range (a:b:step, a:b:xfactor)")
        ->required();
    auto* p_opt = sub->add_option("--p", config.p_spec, "Edge probability or range");
    auto* c_opt = sub->add_option("--c", config.c_spec, "c = n p, or range");
    p_opt->excludes(c_opt);
    c_opt->excludes(p_opt);
    sub->add_option("--method", config.method, "brute | recursive | pcon | walk | auto")
        ->transform(CLI::CheckedTransformer(methods, CLI::ignore_case));
    sub->add_option("--estimator", config.estimator, "mc estimator: explore | bridge")
        ->transform(CLI::CheckedTransformer(estimators, CLI::ignore_case));
    sub->add_option("--samples", config.samples, "Monte Carlo samples / trajectory count")
        ->check(CLI::PositiveNumber);
    sub->add_option("--seed", config.seed, "Random seed");
    sub->add_option("--format", config.format, "json | csv")
        ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
    sub->add_option("--m", config.m, "Hitting window [m, n - m] (exact, walk profile)")
        ->check(CLI::PositiveNumber);
    sub->add_option("--regime", regime_text,
                    "Force a regime: diverging | constant | vanishing | below_one_over_n");
    sub->add_option("--k-lo", config.thresholds.k_lo, "Classifier: lower cutoff for constant c");
    sub->add_option("--k-hi", config.thresholds.k_hi, "Classifier: cutoff for diverging c");
    sub->add_option("--k3", config.thresholds.k3, "Classifier: minimum c sqrt(n)/ln n");
    sub->add_option("--k4", config.thresholds.k4, "Classifier: maximum c n");
    sub->add_flag("--conditioned", config.conditioned, "Trajectories: sample bridges");
    sub->add_option("--out", config.out_path, "Write data to PATH instead of stdout");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      app.exit(e, out, err);
      return kExitOk;
    }
    err << "erconn: " << e.what() << '\n';
    return kExitDomain;
  }
  if (!regime_text.empty()) {
    const auto regime = parse_regime(regime_text);
    if (!regime || *regime == Regime::kUncovered) {
      err << "erconn: --regime: unknown regime '" << regime_text << "'\n";
      return kExitDomain;
    }
    config.regime = regime;
  }
  return config;
}

/// Full entry point: parse, execute, translate errors into exit codes.
inline int main(int argc, const char* const* argv, std::ostream& out = std::cout,
                std::ostream& err = std::cerr) {
  auto parsed = parse(argc, argv, out, err);
  if (const int* code = std::get_if<int>(&parsed)) return *code;
  const auto& config = std::get<RunConfig>(parsed);
  try {
    if (config.out_path) {
      std::ostringstream buffer;
      execute(config, buffer);
      std::ofstream file(*config.out_path, std::ios::binary);
      if (!file) throw DomainError("--out: cannot open '" + *config.out_path + "'");
      file << buffer.str();
    } else {
      execute(config, out);
    }
  } catch (const RefusalError& e) {
    err << "erconn: refused: " << e.what() << '\n';
    return kExitRefusal;
  } catch (const DomainError& e) {
    err << "erconn: " << e.what() << '\n';
    return kExitDomain;
  } catch (const std::out_of_range& e) {
    err << "erconn: " << e.what() << '\n';
    return kExitDomain;
  }
  return kExitOk;
}

}  // namespace erconn::cli
