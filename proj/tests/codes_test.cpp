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

#include "memdeph/codes.hpp"

#include <gtest/gtest.h>

#include <bit>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "test_util.hpp"

namespace memdeph {
namespace {

using testing::random_state;

// Bell fidelity of decode(error(encode(psi))) through the density-matrix path.
double recovered_fidelity(CodeKind kind, std::string_view errors,
                          const StateVector& psi_rq = bell_state()) {
  const CodeSpec& spec = code(kind);
  const auto encoded = encode(spec, with_ancillas(spec, psi_rq));
  const auto noisy = apply_error_sequence(DensityMatrix::from_pure(encoded),
                                          ErrorSequence::parse(errors),
                                          spec.channel_qubits());
  return fidelity_with_pure(psi_rq, decode(spec, noisy));
}

TEST(CodeRegistry, Layout) {
  EXPECT_EQ(code("uncoded").n_physical, 1u);
  EXPECT_EQ(code("c1").n_physical, 3u);
  EXPECT_EQ(code("c2").n_physical, 2u);
  EXPECT_EQ(code("uncoded").n_ancilla, 0u);
  EXPECT_EQ(code("c1").n_ancilla, 2u);
  EXPECT_EQ(code("c2").n_ancilla, 1u);
  EXPECT_EQ(code(CodeKind::c1).channel_qubits(), (std::vector<std::size_t>{1, 2, 3}));
  EXPECT_EQ(code(CodeKind::c2).name(), "c2");
  EXPECT_THROW(code("c3"), std::invalid_argument);
}

TEST(Encode, Uncoded) {
  const auto psi = random_state(2);
  const auto out = encode(code(CodeKind::uncoded), psi);
  for (std::size_t i = 0; i < psi.dim(); ++i) EXPECT_EQ(out[i], psi[i]);
}

TEST(Encode, C2MapsZeroToZeroOne) {
  // |0>_R |0>_Q |0>_A  ->  |0>_R |01>_QA
  const auto out = encode(code(CodeKind::c2), StateVector::basis(3, 0));
  EXPECT_NEAR(std::abs(out[0b001]), 1.0, 1e-15);
  // |0>_R |1>_Q |0>_A  ->  |0>_R |10>_QA
  const auto one = encode(code(CodeKind::c2), StateVector::basis(3, 0b010));
  EXPECT_NEAR(std::abs(one[0b010]), 1.0, 1e-15);
}

TEST(Encode, C1MapsZeroToPlusPlusPlus) {
  const auto out = encode(code(CodeKind::c1), StateVector::basis(4, 0));
  const double amp = 1.0 / std::sqrt(8.0);
  for (std::size_t i = 0; i < 8; ++i) {
    EXPECT_NEAR(out[i].real(), amp, 1e-15) << i;
    EXPECT_EQ(out[i].imag(), 0.0);
  }
  for (std::size_t i = 8; i < 16; ++i) EXPECT_EQ(out[i], Complex(0.0));
}

TEST(Encode, C1MapsOneToMinusMinusMinus) {
  const auto out = encode(code(CodeKind::c1), StateVector::basis(4, 0b0100));
  const double amp = 1.0 / std::sqrt(8.0);
  for (std::size_t i = 0; i < 8; ++i) {
    const double sign = (std::popcount(i) % 2) ? -1.0 : 1.0;
    EXPECT_NEAR(out[i].real(), sign * amp, 1e-15) << i;
  }
}

TEST(Encode, Errors) {
  EXPECT_THROW(encode(code(CodeKind::c2), StateVector::basis(3, 1)),
               std::invalid_argument);  // ancilla in |1>
  EXPECT_THROW(encode(code(CodeKind::c1), StateVector::basis(3, 0)),
               std::invalid_argument);  // wrong register size
}

TEST(Decode, Errors) {
  EXPECT_THROW(decode(code(CodeKind::c2),
                      DensityMatrix::from_pure(StateVector::basis(4, 0))),
               std::invalid_argument);
}

TEST(RoundTrip, NoiselessIsIdentityForRandomInputs) {
  for (int trial = 0; trial < 25; ++trial) {
    const auto psi = random_state(2);
    for (CodeKind k : kAllCodes) {
      const std::string none(code(k).n_physical, 'I');
      EXPECT_NEAR(recovered_fidelity(k, none, psi), 1.0, 1e-12);
    }
  }
}

TEST(C1, CorrectsAtMostOneFlip) {
  for (const char* e : {"III", "ZII", "IZI", "IIZ"})
    EXPECT_NEAR(recovered_fidelity(CodeKind::c1, e), 1.0, 1e-12) << e;
  for (const char* e : {"ZZI", "ZIZ", "IZZ", "ZZZ"})
    EXPECT_NEAR(recovered_fidelity(CodeKind::c1, e), 0.0, 1e-12) << e;
}

TEST(C1, CorrectsSingleFlipForArbitraryInput) {
  for (int trial = 0; trial < 10; ++trial) {
    const auto psi = random_state(2);
    for (const char* e : {"ZII", "IZI", "IIZ"})
      EXPECT_NEAR(recovered_fidelity(CodeKind::c1, e, psi), 1.0, 1e-12) << e;
  }
}

TEST(C2, NoiselessUnderCorrelatedFlips) {
  EXPECT_NEAR(recovered_fidelity(CodeKind::c2, "II"), 1.0, 1e-12);
  EXPECT_NEAR(recovered_fidelity(CodeKind::c2, "ZZ"), 1.0, 1e-12);
  EXPECT_NEAR(recovered_fidelity(CodeKind::c2, "IZ"), 0.0, 1e-12);
  EXPECT_NEAR(recovered_fidelity(CodeKind::c2, "ZI"), 0.0, 1e-12);
  for (int trial = 0; trial < 10; ++trial)
    EXPECT_NEAR(recovered_fidelity(CodeKind::c2, "ZZ", random_state(2)), 1.0, 1e-12);
}

TEST(C2, DecoderFactorsOutAncilla) {
  // a|01> + b|10> on QA  ->  (a|0> + b|1>) |1>
  const double a = 0.6, b = 0.8;
  StateVector s({0.0, a, b, 0.0, 0.0, 0.0, 0.0, 0.0});  // R=0, QA = a|01>+b|10>
  s = apply_decoder(code(CodeKind::c2), s);
  EXPECT_NEAR(s[0b001].real(), a, 1e-15);
  EXPECT_NEAR(s[0b011].real(), b, 1e-15);
}

TEST(Uncoded, PhaseFlipDestroysBell) {
  EXPECT_NEAR(recovered_fidelity(CodeKind::uncoded, "I"), 1.0, 1e-12);
  EXPECT_NEAR(recovered_fidelity(CodeKind::uncoded, "Z"), 0.0, 1e-12);
}

}  // namespace
}  // namespace memdeph
