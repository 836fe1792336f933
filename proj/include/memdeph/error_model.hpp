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

// Markov-chain distribution over dephasing error sequences.
//
// Each channel use applies either the identity (I) or a phase flip (Z). The
// first use draws from the stationary distribution (p0, pz); every later use
// repeats the previous label with extra weight mu:
//
//   P(next | prev) = (1 - mu) * p_next + mu * [next == prev]

#include <cstddef>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace memdeph {

enum class Pauli : std::uint8_t { I = 0, Z = 1 };

inline char to_char(Pauli p) { return p == Pauli::I ? 'I' : 'Z'; }

/// Noise model parameters: stationary no-error probability and memory factor.
class ChannelParams {
 public:
  ChannelParams(double p0, double mu) : p0_(p0), mu_(mu) {
    // Written as negations so NaN is rejected as well.
    if (!(p0 >= 0.0 && p0 <= 1.0)) {
      throw std::invalid_argument("p0 must lie in [0, 1], got " +
                                  std::to_string(p0));
    }
    if (!(mu >= 0.0 && mu <= 1.0)) {
      throw std::invalid_argument("mu must lie in [0, 1], got " +
                                  std::to_string(mu));
    }
  }

  double p0() const { return p0_; }
  double pz() const { return 1.0 - p0_; }
  double mu() const { return mu_; }

  double stationary(Pauli p) const { return p == Pauli::I ? p0() : pz(); }

  friend bool operator==(const ChannelParams&, const ChannelParams&) = default;

 private:
  double p0_;
  double mu_;
};

/// Same-label (q) and label-change (r) conditional probabilities.
struct DerivedProbs {
  double q0;
  double qz;
  double r0;
  double rz;
};

inline DerivedProbs derived_probs(const ChannelParams& params) {
  const double mu = params.mu();
  DerivedProbs d{};
  d.q0 = (1.0 - mu) * params.p0() + mu;
  d.qz = (1.0 - mu) * params.pz() + mu;
  d.r0 = 1.0 - d.q0;
  d.rz = 1.0 - d.qz;
  return d;
}

inline double conditional_prob(Pauli prev, Pauli next,
                               const ChannelParams& params) {
  const double same = prev == next ? 1.0 : 0.0;
  return (1.0 - params.mu()) * params.stationary(next) + params.mu() * same;
}

/// Ordered list of Pauli labels, one per channel use. Never empty.
class ErrorSequence {
 public:
  explicit ErrorSequence(std::vector<Pauli> labels)
      : labels_(std::move(labels)) {
    if (labels_.empty()) {
      throw std::invalid_argument("error sequence must be nonempty");
    }
  }

  /// Parses a string over {I, Z}, e.g. "ZII".
  static ErrorSequence parse(std::string_view text) {
    std::vector<Pauli> labels;
    labels.reserve(text.size());
    for (char c : text) {
      if (c == 'I' || c == 'i') {
        labels.push_back(Pauli::I);
      } else if (c == 'Z' || c == 'z') {
        labels.push_back(Pauli::Z);
      } else {
        throw std::invalid_argument("invalid Pauli label '" +
                                    std::string(1, c) + "'");
      }
    }
    return ErrorSequence(std::move(labels));
  }

  /// Bit k (from the most significant end, width n) selects label k.
  static ErrorSequence from_index(std::uint64_t index, std::size_t n) {
    std::vector<Pauli> labels(n);
    for (std::size_t k = 0; k < n; ++k) {
      labels[k] = ((index >> (n - 1 - k)) & 1u) ? Pauli::Z : Pauli::I;
    }
    return ErrorSequence(std::move(labels));
  }

  std::size_t size() const { return labels_.size(); }
  Pauli operator[](std::size_t k) const { return labels_[k]; }
  auto begin() const { return labels_.begin(); }
  auto end() const { return labels_.end(); }
  const std::vector<Pauli>& labels() const { return labels_; }

  std::size_t flip_count() const {
    std::size_t n = 0;
    for (Pauli p : labels_) n += p == Pauli::Z ? 1 : 0;
    return n;
  }

  std::string to_string() const {
    std::string s;
    s.reserve(labels_.size());
    for (Pauli p : labels_) s.push_back(to_char(p));
    return s;
  }

  friend bool operator==(const ErrorSequence&, const ErrorSequence&) = default;

 private:
  std::vector<Pauli> labels_;
};

inline double sequence_prob(const ErrorSequence& seq,
                            const ChannelParams& params) {
  double p = params.stationary(seq[0]);
  for (std::size_t k = 1; k < seq.size(); ++k) {
    p *= conditional_prob(seq[k - 1], seq[k], params);
  }
  return p;
}

inline constexpr std::size_t kMaxEnumerationLength = 20;

struct WeightedSequence {
  ErrorSequence sequence;
  double probability;
};

/// All 2^n sequences in lexicographic order (I < Z) with their probabilities.
inline std::vector<WeightedSequence> enumerate_sequences(
    std::size_t n, const ChannelParams& params) {
  if (n == 0) {
    throw std::invalid_argument("sequence length must be positive");
  }
  if (n > kMaxEnumerationLength) {
    throw std::length_error("enumeration of length " + std::to_string(n) +
                            " exceeds the cap of " +
                            std::to_string(kMaxEnumerationLength));
  }
  const std::uint64_t count = std::uint64_t{1} << n;
  std::vector<WeightedSequence> out;
  out.reserve(count);
  for (std::uint64_t idx = 0; idx < count; ++idx) {
    auto seq = ErrorSequence::from_index(idx, n);
    const double p = sequence_prob(seq, params);
    out.push_back({std::move(seq), p});
  }
  return out;
}

/// Ancestral sampling: stationary first label, then the Markov conditionals.
template <std::uniform_random_bit_generator Rng>
ErrorSequence sample_sequence(std::size_t n, const ChannelParams& params,
                              Rng& rng) {
  if (n == 0) {
    throw std::invalid_argument("sequence length must be positive");
  }
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::vector<Pauli> labels(n);
  labels[0] = unit(rng) < params.pz() ? Pauli::Z : Pauli::I;
  for (std::size_t k = 1; k < n; ++k) {
    const double flip = conditional_prob(labels[k - 1], Pauli::Z, params);
    labels[k] = unit(rng) < flip ? Pauli::Z : Pauli::I;
  }
  return ErrorSequence(std::move(labels));
}

/// Deterministic generator for substream `index` of a seeded computation.
/// Substreams are independent of the order in which they are consumed.
inline std::mt19937_64 substream(std::uint64_t seed, std::uint64_t index) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed),
                    static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(index),
                    static_cast<std::uint32_t>(index >> 32)};
  return std::mt19937_64(seq);
}

}  // namespace memdeph
