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

// Command-line front end:
//
//   memdeph capacity  [--p0 X | --mu X] [--sweep param:start:stop:points]
//   memdeph fidelity  [--figure1] [--codes c1,c2] [--method closed,exact,mc]
//                     [--samples N] [--seed S] ...
//   memdeph crossover [--p0 X]
//   memdeph verify
//
// Shared output flags: --format csv|json, --out PATH ("-" is stdout).
// Exit codes: 0 success, 1 validation error, 2 verification failure.

#include <cstdint>
#include <exception>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "memdeph/memdeph.hpp"

namespace memdeph::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitValidation = 1;
inline constexpr int kExitVerifyFailed = 2;

namespace detail {

inline std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> items;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) items.push_back(item);
  }
  if (items.empty()) throw std::invalid_argument("empty list '" + s + "'");
  return items;
}

struct Options {
  double p0 = 0.9;
  double mu = 0.0;
  std::string sweep;
  std::string codes = "uncoded,c1,c2";
  std::string method = "closed";
  std::size_t samples = 100000;
  std::uint64_t seed = 0;
  std::string format = "csv";
  std::string out = "-";
  bool figure1 = false;
};

inline void emit(const Table& table, const Options& o, std::ostream& out) {
  std::ofstream file;
  std::ostream* os = &out;
  if (o.out != "-") {
    file.open(o.out);
    if (!file) throw std::invalid_argument("cannot open output file " + o.out);
    os = &file;
  }
  if (o.format == "json") {
    write_json(*os, table);
  } else {
    write_csv(*os, table);
  }
}

inline void add_output_flags(CLI::App* cmd, Options& o) {
  cmd->add_option("--format", o.format, "Output format")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();
  cmd->add_option("--out", o.out, "Output path, - for stdout")
      ->capture_default_str();
}

}  // namespace detail

inline int run_cli(int argc, const char* const* argv, std::ostream& out,
                   std::ostream& err) {
  using detail::Options;
  Options o;

  CLI::App app{"Markov-chain dephasing channel: capacity and code fidelity",
               "memdeph"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(kToolVersion));

  auto* capacity_cmd =
      app.add_subcommand("capacity", "Quantum capacity Q over a sweep");
  auto* cap_p0 = capacity_cmd->add_option("--p0", o.p0, "No-error probability")
                     ->check(CLI::Range(0.0, 1.0));
  auto* cap_mu = capacity_cmd->add_option("--mu", o.mu, "Memory factor")
                     ->check(CLI::Range(0.0, 1.0));
  capacity_cmd->add_option("--sweep", o.sweep, "param:start:stop:points");
  detail::add_output_flags(capacity_cmd, o);

  auto* fidelity_cmd = app.add_subcommand(
      "fidelity", "Transmission error probability Pe = 1 - F_e per code");
  fidelity_cmd->add_option("--p0", o.p0, "No-error probability")
      ->check(CLI::Range(0.0, 1.0));
  fidelity_cmd->add_option("--mu", o.mu, "Memory factor")
      ->check(CLI::Range(0.0, 1.0));
  auto* sweep_opt =
      fidelity_cmd->add_option("--sweep", o.sweep, "param:start:stop:points");
  fidelity_cmd->add_option("--codes", o.codes, "Comma list of uncoded,c1,c2")
      ->capture_default_str();
  fidelity_cmd->add_option("--method", o.method, "Comma list of closed,exact,mc")
      ->capture_default_str();
  fidelity_cmd->add_option("--samples", o.samples, "Monte Carlo samples")
      ->capture_default_str();
  auto* seed_opt =
      fidelity_cmd->add_option("--seed", o.seed, "Monte Carlo seed (required)");
  fidelity_cmd
      ->add_flag("--figure1", o.figure1,
                 "Preset: p0 = 1-1e-3, mu over [0,1] at 201 points, all codes")
      ->excludes(sweep_opt);
  detail::add_output_flags(fidelity_cmd, o);

  auto* crossover_cmd = app.add_subcommand(
      "crossover", "Memory thresholds where c2 beats uncoded and c1");
  auto* cross_p0 =
      crossover_cmd->add_option("--p0", o.p0, "No-error probability (default 1-1e-3)")
          ->check(CLI::Range(0.0, 1.0));
  detail::add_output_flags(crossover_cmd, o);

  auto* verify_cmd =
      app.add_subcommand("verify", "Run the built-in consistency checks");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitValidation;
  }

  try {
    if (*capacity_cmd) {
      Table t;
      if (o.sweep.empty()) {
        t.columns = {"p0", "mu", "Q"};
        t.rows = {{o.p0, o.mu, capacity({o.p0, o.mu}).q}};
        t.metadata["command"] = "capacity";
      } else {
        const SweepRange range = parse_sweep(o.sweep);
        const bool over_mu = range.param == SweepParam::mu;
        if ((over_mu ? cap_mu : cap_p0)->count()) {
          throw std::invalid_argument("--" + std::string(param_name(range.param)) +
                                      " conflicts with the sweep parameter");
        }
        t = capacity_table(range, over_mu ? o.p0 : o.mu);
      }
      detail::emit(t, o, out);
      return kExitOk;
    }

    if (*fidelity_cmd) {
      SweepSpec spec = o.figure1 ? figure1_spec() : SweepSpec{};
      spec.codes.clear();
      for (const auto& c : detail::split_list(o.codes))
        spec.codes.push_back(parse_code(c));
      spec.methods.clear();
      for (const auto& m : detail::split_list(o.method))
        spec.methods.push_back(parse_method(m));
      if (seed_opt->count()) spec.mc = MonteCarloOptions{o.samples, o.seed};

      Table t;
      if (o.figure1) {
        t = fidelity_table(spec);
        t.metadata["preset"] = "figure1";
      } else if (!o.sweep.empty()) {
        spec.range = parse_sweep(o.sweep);
        spec.fixed = spec.range.param == SweepParam::mu ? o.p0 : o.mu;
        t = fidelity_table(spec);
      } else {
        t = fidelity_point_table(spec, {o.p0, o.mu});
      }
      detail::emit(t, o, out);
      return kExitOk;
    }

    if (*crossover_cmd) {
      const double p0 = cross_p0->count() ? o.p0 : 1.0 - 1e-3;
      Table t;
      t.columns = {"p0", "crossover_first_order", "crossover_exact",
                   "c2_uncoded_threshold", "c2_uncoded_threshold_bisection"};
      const double threshold = c2_beats_uncoded_threshold(p0);
      double bisected = threshold;
      if (p0 > 0.5 && p0 < 1.0) {
        bisected = bisect_root(
            [p0](double mu) { return fe_closed(CodeKind::c2, {p0, mu}).fe - p0; },
            0.0, 1.0);
      }
      t.rows = {{p0, c2_beats_c1_crossover(), exact_c1_c2_crossover(p0),
                 threshold, bisected}};
      t.metadata["command"] = "crossover";
      detail::emit(t, o, out);
      return kExitOk;
    }

    if (*verify_cmd) {
      bool all_ok = true;
      for (const auto& r : run_verification()) {
        all_ok &= r.passed;
        out << (r.passed ? "PASS  " : "FAIL  ") << r.name
            << "  max_discrepancy=" << format_number(r.max_discrepancy)
            << "  tolerance=" << format_number(r.tolerance) << '\n';
      }
      out << (all_ok ? "all checks passed" : "verification FAILED") << '\n';
      return all_ok ? kExitOk : kExitVerifyFailed;
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitValidation;
  }
  return kExitValidation;
}

}  // namespace memdeph::cli
