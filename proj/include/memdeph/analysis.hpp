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

// Closed-form results for the Markov dephasing channel: quantum capacity,
// entanglement fidelities of the three schemes, their small-error
// approximations and the threshold/crossover memory factors.

#include <algorithm>
#include <cmath>
#include <functional>
#include <stdexcept>
#include <string>

#include "memdeph/codes.hpp"
#include "memdeph/error_model.hpp"

namespace memdeph {

/// H(q) in bits, with 0 log 0 = 0.
inline double binary_entropy(double q) {
  if (!(q >= 0.0 && q <= 1.0)) {
    throw std::invalid_argument("binary_entropy: q must lie in [0, 1]");
  }
  if (q == 0.0 || q == 1.0) return 0.0;
  return -q * std::log2(q) - (1.0 - q) * std::log2(1.0 - q);
}

struct CapacityPoint {
  ChannelParams params;
  double q;  // qubits per channel use
};

/// Q = 1 - p0 H(q0) - pz H(qz).
///
/// Rounding residue of at most 1e-12 outside [0, 1] is clamped; anything
/// larger throws std::logic_error.
inline CapacityPoint capacity(const ChannelParams& params) {
  const auto d = derived_probs(params);
  const double q = 1.0 - params.p0() * binary_entropy(d.q0) -
                   params.pz() * binary_entropy(d.qz);
  if (q < -1e-12 || q > 1.0 + 1e-12) {
    throw std::logic_error("capacity outside [0, 1]: " + std::to_string(q));
  }
  return {params, std::clamp(q, 0.0, 1.0)};
}

struct FidelityPoint {
  CodeKind code;
  ChannelParams params;
  double fe;
  double pe;  // 1 - fe
};

/// Memoryless three-qubit code fidelity, 3 p0^2 - 2 p0^3.
inline double fe_c1_memoryless(double p0) { return 3 * p0 * p0 - 2 * p0 * p0 * p0; }

/// Memoryless two-qubit code fidelity, p0^2 + pz^2.
inline double fe_c2_memoryless(double p0) {
  return p0 * p0 + (1 - p0) * (1 - p0);
}

/// Same value as the c1 branch of fe_closed, written as a correction to the
/// memoryless fidelity: F - mu (2 - mu) (F - p0).
inline double fe_c1_memory_form(const ChannelParams& params) {
  const double f = fe_c1_memoryless(params.p0());
  const double mu = params.mu();
  return f - mu * (2 - mu) * (f - params.p0());
}

/// F + mu (1 - F) with F the memoryless c2 fidelity.
inline double fe_c2_memory_form(const ChannelParams& params) {
  const double f = fe_c2_memoryless(params.p0());
  return f + params.mu() * (1 - f);
}

/// Entanglement fidelity for a Bell-state input. For these codes every
/// error trajectory either succeeds or fails, so F_e is the total probability
/// of the correctable sequences:
///   uncoded  I
///   c1       III, ZII, IZI, IIZ
///   c2       II, ZZ
inline FidelityPoint fe_closed(CodeKind code, const ChannelParams& params) {
  const double p0 = params.p0(), pz = params.pz();
  const auto [q0, qz, r0, rz] = derived_probs(params);
  double fe = 0.0;
  switch (code) {
    case CodeKind::uncoded:
      fe = p0;
      break;
    case CodeKind::c1:
      fe = p0 * q0 * q0 + p0 * q0 * r0 + p0 * r0 * rz + pz * rz * q0;
      break;
    case CodeKind::c2:
      fe = p0 * q0 + pz * qz;
      break;
  }
  return {code, params, fe, 1.0 - fe};
}

/// Leading-order error probability for eps = 1 - p0 << 1.
///
/// c1 at mu = 0 has no first-order term and returns 3 eps^2 instead;
/// uncoded returns eps exactly.
inline double pe_small_eps(CodeKind code, double eps, double mu) {
  if (!(eps >= 0.0 && eps <= 1.0)) {
    throw std::invalid_argument("pe_small_eps: eps must lie in [0, 1]");
  }
  if (!(mu >= 0.0 && mu <= 1.0)) {
    throw std::invalid_argument("pe_small_eps: mu must lie in [0, 1]");
  }
  switch (code) {
    case CodeKind::uncoded: return eps;
    case CodeKind::c1: return mu == 0.0 ? 3 * eps * eps : mu * (2 - mu) * eps;
    case CodeKind::c2: return 2 * (1 - mu) * eps;
  }
  throw std::invalid_argument("pe_small_eps: unknown code");
}

/// Memory factor above which c2 beats unprotected transmission,
/// (2 p0 - 1) / (2 p0) clamped below at 0. For p0 <= 1/2 c2 wins for every mu.
inline double c2_beats_uncoded_threshold(double p0) {
  if (!(p0 > 0.0 && p0 <= 1.0)) {
    throw std::domain_error("c2_beats_uncoded_threshold: p0 must lie in (0, 1]");
  }
  return std::max(0.0, (2 * p0 - 1) / (2 * p0));
}

/// Small-eps crossover of the c1 and c2 error probabilities: the root of
/// mu (2 - mu) = 2 (1 - mu) in [0, 1].
inline double c2_beats_c1_crossover() { return 2.0 - std::sqrt(2.0); }

/// Bisection for a sign change of f on [lo, hi]; stops once the bracket is
/// narrower than tol.
inline double bisect_root(const std::function<double(double)>& f, double lo,
                          double hi, double tol = 1e-14) {
  double flo = f(lo);
  const double fhi = f(hi);
  if (flo == 0.0) return lo;
  if (fhi == 0.0) return hi;
  if ((flo < 0) == (fhi < 0)) {
    throw std::domain_error("bisect_root: no sign change on the interval");
  }
  while (hi - lo > tol) {
    const double mid = 0.5 * (lo + hi);
    const double fm = f(mid);
    if (fm == 0.0) return mid;
    if ((fm < 0) == (flo < 0)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

/// Memory factor where the exact c1 and c2 fidelities coincide at fixed p0.
inline double exact_c1_c2_crossover(double p0) {
  return bisect_root(
      [p0](double mu) {
        const ChannelParams params(p0, mu);
        return fe_closed(CodeKind::c2, params).fe -
               fe_closed(CodeKind::c1, params).fe;
      },
      0.0, 1.0);
}

}  // namespace memdeph
