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

// Encoders and decoders for the three transmission schemes.
//
// Register layout is [R, Q, A_1, A_2, ...]: qubit 0 is the noiseless
// reference, qubit 1 the system, then the ancillas. Every qubit except R
// crosses the channel, in that order.
//
//   uncoded  no ancilla, one channel use.
//   c1       three-qubit phase-flip code, codewords |+++>, |--->.
//   c2       two-qubit code in span{|01>, |10>}, which is invariant under
//            both I(x)I and Z(x)Z.
//
// Decoding is measurement-free: syndrome extraction and correction are
// coherent gates, then the ancillas are traced out.

#include <array>
#include <cstddef>
#include <numeric>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "memdeph/qsim.hpp"

namespace memdeph {

enum class CodeKind { uncoded, c1, c2 };

inline constexpr std::array<CodeKind, 3> kAllCodes = {
    CodeKind::uncoded, CodeKind::c1, CodeKind::c2};

inline constexpr std::string_view code_name(CodeKind kind) {
  switch (kind) {
    case CodeKind::uncoded: return "uncoded";
    case CodeKind::c1: return "c1";
    case CodeKind::c2: return "c2";
  }
  return "?";
}

inline CodeKind parse_code(std::string_view name) {
  for (CodeKind k : kAllCodes)
    if (code_name(k) == name) return k;
  throw std::invalid_argument("unknown code '" + std::string(name) +
                              "' (expected uncoded, c1 or c2)");
}

inline constexpr std::size_t kReferenceQubit = 0;
inline constexpr std::size_t kSystemQubit = 1;

struct CodeSpec {
  CodeKind kind;
  std::size_t n_physical;  // channel uses per logical qubit
  std::size_t n_ancilla;
  std::vector<QubitOperator> encoder;  // on the full R+Q+A register
  std::vector<QubitOperator> decoder;  // likewise, followed by ancilla discard

  std::string_view name() const { return code_name(kind); }

  /// R + Q + ancillas.
  std::size_t register_qubits() const { return 2 + n_ancilla; }

  /// Qubits that cross the channel, in transmission order (Q, A_1, ...).
  std::vector<std::size_t> channel_qubits() const {
    std::vector<std::size_t> q(n_physical);
    std::iota(q.begin(), q.end(), kSystemQubit);
    return q;
  }
};

namespace detail {

inline CodeSpec make_uncoded() { return {CodeKind::uncoded, 1, 0, {}, {}}; }

inline CodeSpec make_c1() {
  constexpr std::size_t q = 1, a1 = 2, a2 = 3;
  using namespace gates;
  std::vector<QubitOperator> enc{cnot(q, a1), cnot(q, a2), hadamard(q),
                                 hadamard(a1), hadamard(a2)};
  // Back to the bit-flip frame, compute the syndrome into the ancillas, and
  // flip Q when both syndrome bits fire.
  std::vector<QubitOperator> dec{hadamard(q),  hadamard(a1), hadamard(a2),
                                 cnot(q, a1),  cnot(q, a2),
                                 toffoli(a1, a2, q)};
  return {CodeKind::c1, 3, 2, std::move(enc), std::move(dec)};
}

inline CodeSpec make_c2() {
  constexpr std::size_t q = 1, a = 2;
  using namespace gates;
  // a|0>+b|1> (x) |0>  ->  a|01> + b|10>
  std::vector<QubitOperator> enc{pauli_x(a), cnot(q, a)};
  // a|01> + b|10>  ->  (a|0> + b|1>) (x) |1>
  std::vector<QubitOperator> dec{cnot(q, a)};
  return {CodeKind::c2, 2, 1, std::move(enc), std::move(dec)};
}

}  // namespace detail

/// Registry entry for `kind`. Codes are immutable and shared.
inline const CodeSpec& code(CodeKind kind) {
  static const std::array<CodeSpec, 3> registry = {
      detail::make_uncoded(), detail::make_c1(), detail::make_c2()};
  return registry[static_cast<std::size_t>(kind)];
}

inline const CodeSpec& code(std::string_view name) {
  return code(parse_code(name));
}

/// |psi^RQ> (x) |0...0>_A.
inline StateVector with_ancillas(const CodeSpec& spec,
                                 const StateVector& psi_rq) {
  if (psi_rq.num_qubits() != 2) {
    throw std::invalid_argument("reference+system state must have 2 qubits");
  }
  if (spec.n_ancilla == 0) return psi_rq;
  return kron(psi_rq, StateVector::basis(spec.n_ancilla, 0));
}

inline StateVector encode(const CodeSpec& spec, StateVector state) {
  if (state.num_qubits() != spec.register_qubits()) {
    throw std::invalid_argument("encode: expected " +
                                std::to_string(spec.register_qubits()) +
                                " qubits, got " +
                                std::to_string(state.num_qubits()));
  }
  const std::size_t ancilla_mask = (std::size_t{1} << spec.n_ancilla) - 1;
  for (std::size_t i = 0; i < state.dim(); ++i) {
    if ((i & ancilla_mask) && std::abs(state[i]) > kTolerance) {
      throw std::invalid_argument("encode: ancillas are not in |0...0>");
    }
  }
  for (const auto& op : spec.encoder) state.apply(op);
  return state;
}

/// Decoding unitary only, without the ancilla discard.
inline StateVector apply_decoder(const CodeSpec& spec, StateVector state) {
  if (state.num_qubits() != spec.register_qubits()) {
    throw std::invalid_argument("decode: register size mismatch");
  }
  for (const auto& op : spec.decoder) state.apply(op);
  return state;
}

/// Decoding unitary followed by the partial trace over the ancillas.
inline DensityMatrix decode(const CodeSpec& spec, DensityMatrix state) {
  if (state.num_qubits() != spec.register_qubits()) {
    throw std::invalid_argument("decode: expected " +
                                std::to_string(spec.register_qubits()) +
                                " qubits, got " +
                                std::to_string(state.num_qubits()));
  }
  for (const auto& op : spec.decoder) state.conjugate_by(op);
  if (spec.n_ancilla == 0) return state;
  return partial_trace(state, {kReferenceQubit, kSystemQubit});
}

}  // namespace memdeph
