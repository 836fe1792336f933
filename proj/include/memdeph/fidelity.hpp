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

// Simulation-based entanglement fidelity: exact enumeration of every error
// trajectory and a seeded Monte Carlo estimator. Both run the full
// encode -> channel -> decode -> discard-ancillas pipeline and never use the
// closed forms in analysis.hpp, which they exist to check.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "memdeph/analysis.hpp"
#include "memdeph/codes.hpp"
#include "memdeph/error_model.hpp"
#include "memdeph/qsim.hpp"

namespace memdeph {

/// Runs single error trajectories through one code as pure states. The
/// encoded input is prepared once and reused.
class TrajectorySimulator {
 public:
  explicit TrajectorySimulator(const CodeSpec& spec,
                               StateVector psi_rq = bell_state())
      : spec_(&spec),
        psi_rq_(std::move(psi_rq)),
        encoded_(encode(spec, with_ancillas(spec, psi_rq_))),
        channel_(spec.channel_qubits()) {}

  const CodeSpec& spec() const { return *spec_; }

  /// <psi| tr_A[D B |enc><enc| B^dag D^dag] |psi> for the branch B = seq.
  double fidelity(const ErrorSequence& seq) const {
    StateVector state = apply_error_sequence(encoded_, seq, channel_);
    state = apply_decoder(*spec_, std::move(state));
    // tr_A of a pure state: sum the overlap over each ancilla basis state.
    const std::size_t n_anc = std::size_t{1} << spec_->n_ancilla;
    double f = 0.0;
    for (std::size_t a = 0; a < n_anc; ++a) {
      Complex overlap = 0.0;
      for (std::size_t rq = 0; rq < psi_rq_.dim(); ++rq)
        overlap += std::conj(psi_rq_[rq]) * state[rq * n_anc + a];
      f += std::norm(overlap);
    }
    return std::clamp(f, 0.0, 1.0);
  }

 private:
  const CodeSpec* spec_;
  StateVector psi_rq_;
  StateVector encoded_;
  std::vector<std::size_t> channel_;
};

enum class Pipeline {
  /// Sum of p_seq times the pure-state trajectory fidelity.
  pure_state,
  /// Build the mixed channel output, decode it once, then take the fidelity.
  density_matrix,
};

/// Exact entanglement fidelity by enumerating all 2^N error sequences.
inline double fe_exact(CodeKind kind, const ChannelParams& params,
                       Pipeline pipeline = Pipeline::pure_state,
                       const StateVector& psi_rq = bell_state()) {
  const CodeSpec& spec = code(kind);
  if (pipeline == Pipeline::density_matrix) {
    const auto input =
        DensityMatrix::from_pure(encode(spec, with_ancillas(spec, psi_rq)));
    const auto noisy = apply_channel(input, spec.channel_qubits(), params);
    return fidelity_with_pure(psi_rq, decode(spec, noisy));
  }
  const TrajectorySimulator sim(spec, psi_rq);
  double fe = 0.0;
  for (const auto& [seq, p] : enumerate_sequences(spec.n_physical, params)) {
    fe += p * sim.fidelity(seq);
  }
  return fe;
}

inline constexpr std::size_t kMinMonteCarloSamples = 100;
inline constexpr std::size_t kSamplesPerSubstream = 4096;

struct MonteCarloEstimate {
  double estimate;
  double std_error;  // sample standard deviation / sqrt(n)
  std::size_t n_samples;
  std::uint64_t seed;
};

/// Monte Carlo estimate of F_e. Samples are split into fixed-size blocks,
/// each with its own substream generator, and the block statistics are merged
/// in block order, so the result depends only on (n_samples, seed).
inline MonteCarloEstimate fe_monte_carlo(CodeKind kind,
                                         const ChannelParams& params,
                                         std::size_t n_samples,
                                         std::uint64_t seed) {
  if (n_samples < kMinMonteCarloSamples) {
    throw std::invalid_argument("fe_monte_carlo: need at least " +
                                std::to_string(kMinMonteCarloSamples) +
                                " samples");
  }
  const TrajectorySimulator sim(code(kind));
  const std::size_t n_phys = sim.spec().n_physical;

  double count = 0.0, mean = 0.0, m2 = 0.0;
  const std::size_t blocks =
      (n_samples + kSamplesPerSubstream - 1) / kSamplesPerSubstream;
  for (std::size_t b = 0; b < blocks; ++b) {
    auto rng = substream(seed, b);
    const std::size_t len =
        std::min(kSamplesPerSubstream, n_samples - b * kSamplesPerSubstream);
    double bmean = 0.0, bm2 = 0.0;
    for (std::size_t i = 0; i < len; ++i) {
      const double f = sim.fidelity(sample_sequence(n_phys, params, rng));
      const double delta = f - bmean;
      bmean += delta / double(i + 1);
      bm2 += delta * (f - bmean);
    }
    // Chan et al. pairwise merge of (count, mean, M2).
    const double blen = double(len);
    const double total = count + blen;
    const double delta = bmean - mean;
    mean += delta * blen / total;
    m2 += bm2 + delta * delta * count * blen / total;
    count = total;
  }
  const double variance = m2 / (count - 1.0);
  return {mean, std::sqrt(variance / count), n_samples, seed};
}

struct MonteCarloOptions {
  std::size_t n_samples;
  std::uint64_t seed;
};

struct FidelityReport {
  CodeKind code;
  ChannelParams params;
  double fe_closed;
  double fe_exact;
  std::optional<MonteCarloEstimate> mc;
  double abs_discrepancy_closed_vs_exact;
};

inline FidelityReport fidelity_report(
    CodeKind kind, const ChannelParams& params,
    std::optional<MonteCarloOptions> mc_options = std::nullopt) {
  const double closed = fe_closed(kind, params).fe;
  const double exact = fe_exact(kind, params);
  std::optional<MonteCarloEstimate> mc;
  if (mc_options) {
    mc = fe_monte_carlo(kind, params, mc_options->n_samples, mc_options->seed);
  }
  return {kind, params, closed, exact, mc, std::abs(closed - exact)};
}

}  // namespace memdeph
