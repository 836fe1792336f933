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

// Acceptance suite: one line per criterion, nonzero exit if any fails.

#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "memdeph/memdeph.hpp"
#include "memdeph_cli.hpp"

namespace {

using namespace memdeph;
using Clock = std::chrono::steady_clock;

struct Outcome {
  bool passed;
  std::string detail;
};

double elapsed_ms(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

std::string fmt(const char* f, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

// Plain bisection kept local so the acceptance checks do not reuse library
// root finding.
double bisect(const std::function<double(double)>& f, double lo, double hi) {
  double flo = f(lo);
  for (int i = 0; i < 200 && hi - lo > 1e-15; ++i) {
    const double mid = 0.5 * (lo + hi);
    const double fm = f(mid);
    if ((fm < 0) == (flo < 0)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

double exact_pe(CodeKind c, double p0, double mu) {
  return 1.0 - fe_exact(c, {p0, mu});
}

Outcome ac1() {
  const double eps = 1e-3;
  const auto t0 = Clock::now();
  const double pe = exact_pe(CodeKind::c1, 1 - eps, 0.0);
  const double ms = elapsed_ms(t0);
  const double formula = 3 * eps * eps - 2 * eps * eps * eps;
  const double rel_paper = std::abs(pe - 3e-6) / 3e-6;
  const bool ok = std::abs(pe - formula) <= 1e-12 && rel_paper <= 0.01 && ms < 1.0;
  return {ok, fmt("Pe=%.6e (3e^2-2e^3=%.6e), rel. to 3e-6: %.3g%%, %.3f ms", pe,
                  formula, 100 * rel_paper, ms)};
}

Outcome ac2() {
  const auto t0 = Clock::now();
  const double pe = exact_pe(CodeKind::c1, 1 - 1e-3, 0.1);
  const double ms = elapsed_ms(t0);
  const double rel = std::abs(pe - 2e-4) / 2e-4;
  const double first_order = pe_small_eps(CodeKind::c1, 1e-3, 0.1);
  return {rel <= 0.10 && ms < 1.0,
          fmt("Pe=%.6e vs 2e-4: %.3g%% (first order %.3e), %.3f ms", pe,
              100 * rel, first_order, ms)};
}

Outcome ac3() {
  const double mu = c2_beats_c1_crossover();
  const double residual = std::abs(mu * (2 - mu) - 2 * (1 - mu));
  const double p0 = 1 - 1e-3;
  const double exact = bisect(
      [p0](double m) {
        return exact_pe(CodeKind::c1, p0, m) - exact_pe(CodeKind::c2, p0, m);
      },
      0.0, 1.0);
  const double gap = std::abs(exact - (2 - std::sqrt(2.0)));
  return {residual <= 1e-12 && gap <= 5e-3,
          fmt("root residual %.2e; exact crossover %.10f, |diff|=%.3e", residual,
              exact, gap)};
}

Outcome ac4() {
  double worst = 0.0;
  for (double p0 : {0.6, 0.9, 0.999}) {
    const double root = bisect(
        [p0](double m) { return fe_closed(CodeKind::c2, {p0, m}).fe - p0; },
        0.0, 1.0);
    worst = std::max(worst, std::abs(root - c2_beats_uncoded_threshold(p0)));
    worst = std::max(worst, std::abs(root - (2 * p0 - 1) / (2 * p0)));
  }
  return {worst <= 1e-9, fmt("max |bisection - (2p0-1)/(2p0)| = %.3e", worst)};
}

Outcome ac5() {
  const auto t0 = Clock::now();
  double worst = 0.0;
  for (int i = 0; i <= 20; ++i)
    for (int j = 0; j <= 20; ++j) {
      const ChannelParams params(i / 20.0, j / 20.0);
      for (CodeKind c : kAllCodes)
        worst = std::max(worst, std::abs(fe_exact(c, params) -
                                         fe_closed(c, params).fe));
    }
  const double ms = elapsed_ms(t0);
  return {worst <= 1e-12 && ms < 10'000.0,
          fmt("max |fe_exact - fe_closed| = %.3e over 21x21x3, %.1f ms", worst,
              ms)};
}

Outcome ac6() {
  bool ok = true;
  double worst_limit = 0.0;
  for (int i = 0; i <= 100; ++i) {
    const double p0 = i / 100.0;
    ok &= capacity({p0, 1.0}).q == 1.0;
    worst_limit = std::max(
        worst_limit, std::abs(capacity({p0, 0.0}).q - (1 - binary_entropy(p0))));
  }
  ok &= worst_limit <= 1e-12;
  int violations = 0;
  for (double p0 : {0.6, 0.9, 0.999}) {
    double prev = -1.0;
    for (int k = 0; k <= 1000; ++k) {
      const double q = capacity({p0, k / 1000.0}).q;
      violations += q < prev ? 1 : 0;
      prev = q;
    }
  }
  ok &= violations == 0;
  return {ok, fmt("Q(mu=1)=1 exact; max |Q(mu=0)-(1-H)| = %.3e; "
                  "monotonicity violations: %d",
                  worst_limit, violations)};
}

Outcome ac7() {
  const char* argv[] = {"memdeph", "fidelity", "--figure1"};
  std::ostringstream out, err;
  if (cli::run_cli(3, argv, out, err) != 0) return {false, "cli failed: " + err.str()};
  std::istringstream in(out.str());
  std::string line;
  std::getline(in, line);
  if (line != "mu,Pe_uncoded_closed,Pe_c1_closed,Pe_c2_closed") {
    return {false, "unexpected header " + line};
  }
  std::vector<std::array<double, 4>> rows;
  while (std::getline(in, line)) {
    std::array<double, 4> r{};
    std::sscanf(line.c_str(), "%lf,%lf,%lf,%lf", &r[0], &r[1], &r[2], &r[3]);
    rows.push_back(r);
  }
  const double eps = 1e-3;
  bool ok = rows.size() == 201;
  double un_dev = 0.0;
  bool c1_up = true, c2_down = true;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    un_dev = std::max(un_dev, std::abs(rows[i][1] - eps));
    if (i) {
      c1_up &= rows[i][2] > rows[i - 1][2];
      c2_down &= rows[i][3] < rows[i - 1][3];
    }
  }
  const auto& first = rows.front();
  const auto& last = rows.back();
  ok &= un_dev <= 1e-15 && c1_up && c2_down;
  ok &= std::abs(first[2] - 3e-6) / 3e-6 <= 0.01;
  ok &= std::abs(last[2] - eps) <= 1e-12;
  ok &= std::abs(first[3] - 2e-3) / 2e-3 <= 0.01;
  ok &= std::abs(last[3]) <= 1e-12;
  return {ok, fmt("%zu rows; uncoded dev %.1e; c1 %s %.4e -> %.6e; "
                  "c2 %s %.4e -> %.1e",
                  rows.size(), un_dev, c1_up ? "increasing" : "NOT increasing",
                  first[2], last[2], c2_down ? "decreasing" : "NOT decreasing",
                  first[3], last[3])};
}

Outcome ac8() {
  const auto t0 = Clock::now();
  std::mt19937_64 rng(8);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  int within = 0;
  std::string worst;
  double worst_z = 0.0;
  for (int k = 0; k < 12; ++k) {
    const CodeKind c = kAllCodes[k % 3];
    const ChannelParams params(0.5 + 0.5 * u(rng), u(rng));
    const auto est = fe_monte_carlo(c, params, 100'000, 1000 + k);
    const double exact = fe_exact(c, params);
    const double z = std::abs(est.estimate - exact) /
                     (est.std_error > 0 ? est.std_error : 1e-300);
    within += std::abs(est.estimate - exact) <= 4 * est.std_error ? 1 : 0;
    if (z > worst_z) worst_z = z;
  }
  const double ms = elapsed_ms(t0);
  return {within >= 11 && ms < 30'000.0,
          fmt("%d/12 within 4 stderr (max z=%.2f), %.1f ms", within, worst_z, ms)};
}

Outcome ac9() {
  const ChannelParams params(0.9, 0.2);
  const auto all = enumerate_sequences(3, params);
  double total = 0.0;
  std::array<double, 3> marginal{};
  for (const auto& [seq, p] : all) {
    total += p;
    for (std::size_t k = 0; k < 3; ++k)
      if (seq[k] == Pauli::I) marginal[k] += p;
  }
  double marginal_dev = 0.0;
  for (double m : marginal) marginal_dev = std::max(marginal_dev, std::abs(m - 0.9));

  std::array<int, 8> counts{};
  auto rng = substream(909, 0);
  const int n = 100'000;
  for (int i = 0; i < n; ++i) {
    int idx = 0;
    for (Pauli p : sample_sequence(3, params, rng)) idx = 2 * idx + (p == Pauli::Z);
    ++counts[idx];
  }
  double chi2 = 0.0;
  for (int k = 0; k < 8; ++k) {
    const double e = all[k].probability * n;
    chi2 += (counts[k] - e) * (counts[k] - e) / e;
  }
  constexpr double kCritical = 24.321886347856854;  // chi2, df=7, alpha=0.001
  const bool ok = std::abs(total - 1) <= 1e-12 && marginal_dev <= 1e-12 &&
                  chi2 < kCritical;
  return {ok, fmt("|sum-1|=%.1e, marginal dev %.1e, chi2=%.2f (< %.2f)",
                  std::abs(total - 1), marginal_dev, chi2, kCritical)};
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, Outcome (*)()>> criteria = {
      {"AC1 c1 Pe at eps=1e-3, mu=0", ac1},
      {"AC2 c1 Pe at eps=1e-3, mu=0.1", ac2},
      {"AC3 c1/c2 crossover", ac3},
      {"AC4 c2 vs uncoded threshold", ac4},
      {"AC5 enumeration oracle equality", ac5},
      {"AC6 capacity limits and monotonicity", ac6},
      {"AC7 figure-1 curves", ac7},
      {"AC8 Monte Carlo consistency", ac8},
      {"AC9 error-model statistics", ac9},
  };
  int failures = 0;
  for (const auto& [name, fn] : criteria) {
    const Outcome o = fn();
    failures += o.passed ? 0 : 1;
    std::printf("[%s] %s: %s\n", o.passed ? "PASS" : "FAIL", name, o.detail.c_str());
  }
  std::printf("%zu criteria, %d failed\n", criteria.size(), failures);
  return failures == 0 ? 0 : 1;
}
