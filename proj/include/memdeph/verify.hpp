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

// Self-check suite: closed forms against the enumeration oracle, error-model
// stationarity, capacity limits and monotonicity, thresholds.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "memdeph/analysis.hpp"
#include "memdeph/codes.hpp"
#include "memdeph/error_model.hpp"
#include "memdeph/fidelity.hpp"

namespace memdeph {

struct CheckResult {
  std::string name;
  bool passed;
  double max_discrepancy;
  double tolerance;
};

namespace detail {

inline std::vector<double> unit_grid(std::size_t points) {
  std::vector<double> g(points);
  for (std::size_t i = 0; i < points; ++i) g[i] = double(i) / double(points - 1);
  return g;
}

inline CheckResult make_check(std::string name, double worst, double tol) {
  return {std::move(name), worst <= tol, worst, tol};
}

}  // namespace detail

inline CheckResult check_oracle_grid() {
  double worst = 0.0;
  for (double p0 : detail::unit_grid(21))
    for (double mu : detail::unit_grid(21)) {
      const ChannelParams params(p0, mu);
      for (CodeKind c : kAllCodes)
        worst = std::max(worst, std::abs(fe_exact(c, params) -
                                         fe_closed(c, params).fe));
    }
  return detail::make_check("oracle grid |fe_exact - fe_closed| (21x21)",
                            worst, 1e-12);
}

inline CheckResult check_density_matrix_pipeline() {
  double worst = 0.0;
  for (double p0 : detail::unit_grid(6))
    for (double mu : detail::unit_grid(6)) {
      const ChannelParams params(p0, mu);
      for (CodeKind c : kAllCodes)
        worst = std::max(worst,
                         std::abs(fe_exact(c, params, Pipeline::density_matrix) -
                                  fe_exact(c, params, Pipeline::pure_state)));
    }
  return detail::make_check("density-matrix vs pure-state pipeline (6x6)",
                            worst, 1e-12);
}

inline CheckResult check_stationarity() {
  double worst = 0.0;
  for (double p0 : {0.0, 0.3, 0.9, 0.999, 1.0})
    for (double mu : {0.0, 0.2, 0.7, 1.0}) {
      const ChannelParams params(p0, mu);
      for (std::size_t n = 1; n <= 6; ++n) {
        const auto all = enumerate_sequences(n, params);
        std::vector<double> marginal_i(n, 0.0);
        double total = 0.0;
        for (const auto& [seq, p] : all) {
          total += p;
          for (std::size_t k = 0; k < n; ++k)
            if (seq[k] == Pauli::I) marginal_i[k] += p;
        }
        worst = std::max(worst, std::abs(total - 1.0));
        for (double m : marginal_i) worst = std::max(worst, std::abs(m - p0));
      }
    }
  return detail::make_check("error-model normalization and stationarity",
                            worst, 1e-12);
}

inline CheckResult check_capacity_endpoints() {
  double worst = 0.0;
  for (double p0 : detail::unit_grid(101)) {
    worst = std::max(worst, std::abs(capacity({p0, 1.0}).q - 1.0));
    worst = std::max(worst, std::abs(capacity({p0, 0.0}).q -
                                     (1.0 - binary_entropy(p0))));
  }
  return detail::make_check("capacity endpoints Q(mu=1)=1, Q(mu=0)=1-H(p0)",
                            worst, 1e-12);
}

inline CheckResult check_capacity_monotone() {
  double worst_drop = 0.0;
  for (double p0 : {0.6, 0.9, 0.999}) {
    const auto grid = detail::unit_grid(1001);
    for (std::size_t i = 1; i < grid.size(); ++i) {
      const double drop =
          capacity({p0, grid[i - 1]}).q - capacity({p0, grid[i]}).q;
      worst_drop = std::max(worst_drop, drop);
    }
  }
  return detail::make_check("capacity non-decreasing in mu", worst_drop, 0.0);
}

inline CheckResult check_c1_behaviour() {
  // Largest violation of: F_c1 non-increasing in mu, and F_c1 >= p0.
  double worst = 0.0;
  for (double p0 : detail::unit_grid(51)) {
    const double pp = 0.5 + 0.5 * p0;
    double prev = fe_closed(CodeKind::c1, {pp, 0.0}).fe;
    for (double mu : detail::unit_grid(101)) {
      const double f = fe_closed(CodeKind::c1, {pp, mu}).fe;
      worst = std::max(worst, f - prev);
      worst = std::max(worst, pp - f);
      prev = f;
    }
  }
  return detail::make_check("c1 degrades with memory but beats uncoded",
                            worst, 1e-15);
}

inline CheckResult check_memory_forms() {
  double worst = 0.0;
  for (double p0 : detail::unit_grid(41))
    for (double mu : detail::unit_grid(41)) {
      const ChannelParams params(p0, mu);
      worst = std::max(worst, std::abs(fe_closed(CodeKind::c1, params).fe -
                                       fe_c1_memory_form(params)));
      worst = std::max(worst, std::abs(fe_closed(CodeKind::c2, params).fe -
                                       fe_c2_memory_form(params)));
    }
  return detail::make_check("closed-form algebraic identities", worst, 1e-12);
}

inline CheckResult check_c2_threshold() {
  double worst = 0.0;
  for (double p0 : {0.6, 0.75, 0.9, 0.999}) {
    const double root = bisect_root(
        [p0](double mu) {
          return fe_closed(CodeKind::c2, {p0, mu}).fe - p0;
        },
        0.0, 1.0);
    worst = std::max(worst, std::abs(root - c2_beats_uncoded_threshold(p0)));
  }
  return detail::make_check("c2 vs uncoded threshold (2p0-1)/(2p0)", worst,
                            1e-9);
}

inline CheckResult check_crossover_root() {
  const double mu = c2_beats_c1_crossover();
  return detail::make_check("crossover 2-sqrt(2) solves mu(2-mu)=2(1-mu)",
                            std::abs(mu * (2 - mu) - 2 * (1 - mu)), 1e-12);
}

inline CheckResult check_exact_crossover() {
  const double exact = exact_c1_c2_crossover(1.0 - 1e-3);
  return detail::make_check("exact c1/c2 crossover at eps=1e-3 near 2-sqrt(2)",
                            std::abs(exact - c2_beats_c1_crossover()), 5e-3);
}

inline CheckResult check_trajectory_dichotomy() {
  double worst = 0.0;
  for (CodeKind c : kAllCodes) {
    const TrajectorySimulator sim(code(c));
    const std::size_t n = code(c).n_physical;
    for (std::uint64_t idx = 0; idx < (std::uint64_t{1} << n); ++idx) {
      const double f = sim.fidelity(ErrorSequence::from_index(idx, n));
      worst = std::max(worst, std::min(f, std::abs(1.0 - f)));
    }
  }
  return detail::make_check("every trajectory fidelity is 0 or 1", worst,
                            1e-12);
}

inline std::vector<CheckResult> run_verification() {
  return {check_oracle_grid(),        check_density_matrix_pipeline(),
          check_stationarity(),       check_capacity_endpoints(),
          check_capacity_monotone(),  check_c1_behaviour(),
          check_memory_forms(),       check_c2_threshold(),
          check_crossover_root(),     check_exact_crossover(),
          check_trajectory_dichotomy()};
}

}  // namespace memdeph
