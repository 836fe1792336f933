// Copyright 2026 The memdeph Authors
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

#pragma once

// Parameter sweeps and the tabular data they produce (CSV or JSON).

#include <cstddef>
#include <cstdint>
#include <cstdio>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "memdeph/analysis.hpp"
#include "memdeph/codes.hpp"
#include "memdeph/fidelity.hpp"

namespace memdeph {

inline constexpr std::string_view kToolVersion = "0.1.0";

enum class SweepParam { mu, p0 };

inline std::string_view param_name(SweepParam p) {
  return p == SweepParam::mu ? "mu" : "p0";
}

/// Evenly spaced grid over one channel parameter, endpoints included.
struct SweepRange {
  SweepParam param = SweepParam::mu;
  double start = 0.0;
  double stop = 1.0;
  std::size_t points = 2;

  void validate() const {
    if (points < 2) throw std::invalid_argument("sweep needs at least 2 points");
    if (!(start >= 0.0 && stop <= 1.0)) {
      throw std::invalid_argument("sweep range must lie within [0, 1]");
    }
    if (!(start < stop)) throw std::invalid_argument("sweep needs start < stop");
  }

  std::vector<double> values() const {
    validate();
    std::vector<double> v(points);
    const double step = (stop - start) / double(points - 1);
    for (std::size_t i = 0; i < points; ++i) v[i] = start + double(i) * step;
    v.back() = stop;
    return v;
  }
};

/// Parses "param:start:stop:points", e.g. "mu:0:1:201".
inline SweepRange parse_sweep(std::string_view text) {
  std::vector<std::string> parts;
  std::size_t pos = 0;
  while (true) {
    const auto next = text.find(':', pos);
    parts.emplace_back(text.substr(pos, next - pos));
    if (next == std::string_view::npos) break;
    pos = next + 1;
  }
  if (parts.size() != 4) {
    throw std::invalid_argument("sweep must look like param:start:stop:points");
  }
  SweepRange r;
  if (parts[0] == "mu") {
    r.param = SweepParam::mu;
  } else if (parts[0] == "p0") {
    r.param = SweepParam::p0;
  } else {
    throw std::invalid_argument("sweep parameter must be mu or p0, got '" +
                                parts[0] + "'");
  }
  try {
    std::size_t used = 0;
    r.start = std::stod(parts[1], &used);
    if (used != parts[1].size()) throw std::invalid_argument(parts[1]);
    r.stop = std::stod(parts[2], &used);
    if (used != parts[2].size()) throw std::invalid_argument(parts[2]);
    const long long n = std::stoll(parts[3], &used);
    if (used != parts[3].size() || n < 0) throw std::invalid_argument(parts[3]);
    r.points = static_cast<std::size_t>(n);
  } catch (const std::logic_error&) {
    throw std::invalid_argument("malformed number in sweep '" +
                                std::string(text) + "'");
  }
  r.validate();
  return r;
}

enum class Method { closed, exact, mc };

inline std::string_view method_name(Method m) {
  switch (m) {
    case Method::closed: return "closed";
    case Method::exact: return "exact";
    case Method::mc: return "mc";
  }
  return "?";
}

inline Method parse_method(std::string_view s) {
  if (s == "closed") return Method::closed;
  if (s == "exact") return Method::exact;
  if (s == "mc") return Method::mc;
  throw std::invalid_argument("unknown method '" + std::string(s) +
                              "' (expected closed, exact or mc)");
}

struct SweepSpec {
  SweepRange range;
  double fixed = 0.0;  // value of the parameter that is not swept
  std::vector<CodeKind> codes{kAllCodes.begin(), kAllCodes.end()};
  std::vector<Method> methods{Method::closed};
  std::optional<MonteCarloOptions> mc;

  ChannelParams params_at(double x) const {
    return range.param == SweepParam::mu ? ChannelParams(fixed, x)
                                         : ChannelParams(x, fixed);
  }
};

/// Fig. 1-style preset: eps = 1e-3, mu over [0, 1] at 201 points, all codes.
inline SweepSpec figure1_spec() {
  SweepSpec s;
  s.range = {SweepParam::mu, 0.0, 1.0, 201};
  s.fixed = 1.0 - 1e-3;
  return s;
}

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;
  nlohmann::ordered_json metadata = nlohmann::ordered_json::object();
};

inline Table capacity_table(const SweepRange& range, double fixed) {
  Table t;
  t.columns = {std::string(param_name(range.param)), "Q"};
  SweepSpec spec;
  spec.range = range;
  spec.fixed = fixed;
  for (double x : range.values()) {
    t.rows.push_back({x, capacity(spec.params_at(x)).q});
  }
  t.metadata["command"] = "capacity";
  t.metadata["sweep"] = param_name(range.param);
  t.metadata[range.param == SweepParam::mu ? "p0" : "mu"] = fixed;
  return t;
}

inline nlohmann::ordered_json sweep_metadata(const SweepSpec& spec) {
  nlohmann::ordered_json md = nlohmann::ordered_json::object();
  md["command"] = "fidelity";
  md["sweep"] = param_name(spec.range.param);
  md[spec.range.param == SweepParam::mu ? "p0" : "mu"] = spec.fixed;
  auto& codes = md["codes"] = nlohmann::ordered_json::array();
  for (CodeKind c : spec.codes) codes.push_back(code_name(c));
  auto& methods = md["methods"] = nlohmann::ordered_json::array();
  for (Method m : spec.methods) methods.push_back(method_name(m));
  if (spec.mc) {
    md["samples"] = spec.mc->n_samples;
    md["seed"] = spec.mc->seed;
  }
  return md;
}

/// Pe columns for every requested (code, method) pair; Monte Carlo columns
/// are followed by their standard error.
inline std::vector<std::string> fidelity_columns(const SweepSpec& spec) {
  std::vector<std::string> cols;
  for (CodeKind c : spec.codes)
    for (Method m : spec.methods) {
      const std::string col = "Pe_" + std::string(code_name(c)) + "_" +
                              std::string(method_name(m));
      cols.push_back(col);
      if (m == Method::mc) cols.push_back(col + "_stderr");
    }
  return cols;
}

inline std::vector<double> fidelity_row(const SweepSpec& spec,
                                        const ChannelParams& params) {
  std::vector<double> row;
  for (CodeKind c : spec.codes)
    for (Method m : spec.methods) {
      switch (m) {
        case Method::closed:
          row.push_back(fe_closed(c, params).pe);
          break;
        case Method::exact:
          row.push_back(1.0 - fe_exact(c, params));
          break;
        case Method::mc: {
          if (!spec.mc) throw std::invalid_argument("method mc requires a seed");
          const auto est =
              fe_monte_carlo(c, params, spec.mc->n_samples, spec.mc->seed);
          row.push_back(1.0 - est.estimate);
          row.push_back(est.std_error);
          break;
        }
      }
    }
  return row;
}

/// One row per grid point: the swept value followed by fidelity_columns.
/// Every point reuses the same Monte Carlo seed.
inline Table fidelity_table(const SweepSpec& spec) {
  for (Method m : spec.methods)
    if (m == Method::mc && !spec.mc)
      throw std::invalid_argument("method mc requires a seed");
  Table t;
  t.columns.emplace_back(param_name(spec.range.param));
  for (auto& c : fidelity_columns(spec)) t.columns.push_back(std::move(c));
  for (double x : spec.range.values()) {
    std::vector<double> row{x};
    for (double v : fidelity_row(spec, spec.params_at(x))) row.push_back(v);
    t.rows.push_back(std::move(row));
  }
  t.metadata = sweep_metadata(spec);
  return t;
}

/// Single (p0, mu) point, columns p0, mu, then fidelity_columns.
inline Table fidelity_point_table(const SweepSpec& spec,
                                  const ChannelParams& params) {
  Table t;
  t.columns = {"p0", "mu"};
  for (auto& c : fidelity_columns(spec)) t.columns.push_back(std::move(c));
  std::vector<double> row{params.p0(), params.mu()};
  for (double v : fidelity_row(spec, params)) row.push_back(v);
  t.rows.push_back(std::move(row));
  t.metadata = sweep_metadata(spec);
  t.metadata.erase("sweep");
  t.metadata["p0"] = params.p0();
  t.metadata["mu"] = params.mu();
  return t;
}

/// 17 significant digits, enough to round-trip a double.
inline std::string format_number(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

inline void write_csv(std::ostream& os, const Table& t) {
  for (std::size_t i = 0; i < t.columns.size(); ++i)
    os << (i ? "," : "") << t.columns[i];
  os << '\n';
  for (const auto& row : t.rows) {
    for (std::size_t i = 0; i < row.size(); ++i)
      os << (i ? "," : "") << format_number(row[i]);
    os << '\n';
  }
}

inline void write_json(std::ostream& os, const Table& t) {
  nlohmann::ordered_json doc;
  doc["metadata"] = t.metadata;
  doc["metadata"]["tool"] = "memdeph";
  doc["metadata"]["version"] = kToolVersion;
  doc["columns"] = t.columns;
  auto& rows = doc["rows"] = nlohmann::ordered_json::array();
  for (const auto& row : t.rows) {
    nlohmann::ordered_json obj = nlohmann::ordered_json::object();
    for (std::size_t i = 0; i < row.size(); ++i) obj[t.columns[i]] = row[i];
    rows.push_back(std::move(obj));
  }
  os << doc.dump(2) << '\n';
}

}  // namespace memdeph
