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

// Small dense state-vector / density-matrix simulator (at most 5 qubits).
//
// Qubit ordering: qubit 0 is the most significant bit of the basis index, so
// on n qubits the basis state |b_0 b_1 ... b_{n-1}> has index
// sum_k b_k 2^(n-1-k). Operators follow the same rule for their target lists:
// targets[0] is the most significant bit of the operator's local index.

#include <algorithm>
#include <array>
#include <bit>
#include <cmath>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "memdeph/error_model.hpp"

namespace memdeph {

using Complex = std::complex<double>;

inline constexpr std::size_t kMaxQubits = 5;
inline constexpr double kTolerance = 1e-12;
inline constexpr double kPsdTolerance = 1e-10;

//------------------------------------------------------------------------------
// Matrix
//------------------------------------------------------------------------------

/// Square dense complex matrix, row-major.
class Matrix {
 public:
  Matrix() = default;
  explicit Matrix(std::size_t dim) : dim_(dim), data_(dim * dim) {}

  Matrix(std::initializer_list<std::initializer_list<Complex>> rows)
      : Matrix(rows.size()) {
    std::size_t r = 0;
    for (const auto& row : rows) {
      if (row.size() != dim_) {
        throw std::invalid_argument("matrix rows must form a square");
      }
      std::copy(row.begin(), row.end(), data_.begin() + r * dim_);
      ++r;
    }
  }

  static Matrix identity(std::size_t dim) {
    Matrix m(dim);
    for (std::size_t i = 0; i < dim; ++i) m(i, i) = 1.0;
    return m;
  }

  std::size_t dim() const { return dim_; }

  Complex& operator()(std::size_t r, std::size_t c) {
    return data_[r * dim_ + c];
  }
  const Complex& operator()(std::size_t r, std::size_t c) const {
    return data_[r * dim_ + c];
  }

  std::span<const Complex> data() const { return data_; }

  Matrix adjoint() const {
    Matrix m(dim_);
    for (std::size_t r = 0; r < dim_; ++r)
      for (std::size_t c = 0; c < dim_; ++c) m(c, r) = std::conj((*this)(r, c));
    return m;
  }

  Complex trace() const {
    Complex t = 0.0;
    for (std::size_t i = 0; i < dim_; ++i) t += (*this)(i, i);
    return t;
  }

  Matrix& operator+=(const Matrix& other) {
    require_same_dim(other);
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += other.data_[i];
    return *this;
  }

  Matrix& operator*=(Complex s) {
    for (auto& x : data_) x *= s;
    return *this;
  }

  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator*(Matrix a, Complex s) { return a *= s; }
  friend Matrix operator*(Complex s, Matrix a) { return a *= s; }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    a.require_same_dim(b);
    const std::size_t n = a.dim_;
    Matrix m(n);
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t k = 0; k < n; ++k) {
        const Complex ark = a(r, k);
        if (ark == Complex{}) continue;
        for (std::size_t c = 0; c < n; ++c) m(r, c) += ark * b(k, c);
      }
    return m;
  }

  /// Largest entrywise modulus of (this - other).
  double max_abs_diff(const Matrix& other) const {
    require_same_dim(other);
    double d = 0.0;
    for (std::size_t i = 0; i < data_.size(); ++i)
      d = std::max(d, std::abs(data_[i] - other.data_[i]));
    return d;
  }

 private:
  void require_same_dim(const Matrix& other) const {
    if (other.dim_ != dim_) {
      throw std::invalid_argument("matrix dimension mismatch");
    }
  }

  std::size_t dim_ = 0;
  std::vector<Complex> data_;
};

inline Matrix kron(const Matrix& a, const Matrix& b) {
  const std::size_t n = a.dim(), m = b.dim();
  Matrix out(n * m);
  for (std::size_t r1 = 0; r1 < n; ++r1)
    for (std::size_t c1 = 0; c1 < n; ++c1)
      for (std::size_t r2 = 0; r2 < m; ++r2)
        for (std::size_t c2 = 0; c2 < m; ++c2)
          out(r1 * m + r2, c1 * m + c2) = a(r1, c1) * b(r2, c2);
  return out;
}

inline bool is_hermitian(const Matrix& m, double tol = kTolerance) {
  for (std::size_t r = 0; r < m.dim(); ++r)
    for (std::size_t c = r; c < m.dim(); ++c)
      if (std::abs(m(r, c) - std::conj(m(c, r))) > tol) return false;
  return true;
}

inline bool is_unitary(const Matrix& m, double tol = kTolerance) {
  return (m.adjoint() * m).max_abs_diff(Matrix::identity(m.dim())) <= tol;
}

/// True when every eigenvalue of the Hermitian matrix m is >= -tol. Tested by
/// a Cholesky factorization of m + tol * I, which exists iff that shifted
/// matrix is positive definite.
inline bool is_positive_semidefinite(const Matrix& m,
                                     double tol = kPsdTolerance) {
  const std::size_t n = m.dim();
  Matrix l(n);
  for (std::size_t j = 0; j < n; ++j) {
    double d = m(j, j).real() + tol;
    for (std::size_t k = 0; k < j; ++k) d -= std::norm(l(j, k));
    if (!(d > 0.0)) return false;
    const double ljj = std::sqrt(d);
    l(j, j) = ljj;
    for (std::size_t i = j + 1; i < n; ++i) {
      Complex s = m(i, j);
      for (std::size_t k = 0; k < j; ++k) s -= l(i, k) * std::conj(l(j, k));
      l(i, j) = s / ljj;
    }
  }
  return true;
}

namespace detail {

inline std::size_t qubits_for_dim(std::size_t dim) {
  if (dim < 2 || !std::has_single_bit(dim)) {
    throw std::invalid_argument("dimension " + std::to_string(dim) +
                                " is not a power of two >= 2");
  }
  const auto n = static_cast<std::size_t>(std::countr_zero(dim));
  if (n > kMaxQubits) {
    throw std::invalid_argument("at most " + std::to_string(kMaxQubits) +
                                " qubits are supported");
  }
  return n;
}

inline std::size_t qubit_bit(std::size_t qubit, std::size_t n) {
  return std::size_t{1} << (n - 1 - qubit);
}

inline void check_targets(std::span<const std::size_t> targets,
                          std::size_t n) {
  for (std::size_t i = 0; i < targets.size(); ++i) {
    if (targets[i] >= n) {
      throw std::out_of_range("qubit index " + std::to_string(targets[i]) +
                              " out of range for " + std::to_string(n) +
                              " qubits");
    }
    for (std::size_t j = 0; j < i; ++j) {
      if (targets[j] == targets[i]) {
        throw std::invalid_argument("duplicate qubit index " +
                                    std::to_string(targets[i]));
      }
    }
  }
}

/// Global index offset for each local index of an operator on `targets`.
inline std::vector<std::size_t> local_offsets(
    std::span<const std::size_t> targets, std::size_t n) {
  const std::size_t m = targets.size();
  std::vector<std::size_t> offsets(std::size_t{1} << m, 0);
  for (std::size_t local = 0; local < offsets.size(); ++local)
    for (std::size_t k = 0; k < m; ++k)
      if ((local >> (m - 1 - k)) & 1u) offsets[local] |= qubit_bit(targets[k], n);
  return offsets;
}

inline std::size_t target_mask(std::span<const std::size_t> targets,
                               std::size_t n) {
  std::size_t mask = 0;
  for (std::size_t t : targets) mask |= qubit_bit(t, n);
  return mask;
}

inline double phase_sign(std::size_t index, std::size_t z_mask) {
  return (std::popcount(index & z_mask) & 1) ? -1.0 : 1.0;
}

}  // namespace detail

//------------------------------------------------------------------------------
// Operators
//------------------------------------------------------------------------------

/// Unitary acting on an ordered subset of qubits.
class QubitOperator {
 public:
  QubitOperator(Matrix matrix, std::vector<std::size_t> targets)
      : matrix_(std::move(matrix)), targets_(std::move(targets)) {
    if (targets_.empty() || targets_.size() > kMaxQubits ||
        matrix_.dim() != (std::size_t{1} << targets_.size())) {
      throw std::invalid_argument(
          "operator dimension does not match its target count");
    }
    for (std::size_t i = 0; i < targets_.size(); ++i)
      for (std::size_t j = 0; j < i; ++j)
        if (targets_[i] == targets_[j])
          throw std::invalid_argument("duplicate operator target");
    if (!is_unitary(matrix_)) {
      throw std::invalid_argument("operator is not unitary");
    }
  }

  const Matrix& matrix() const { return matrix_; }
  const std::vector<std::size_t>& targets() const { return targets_; }

  QubitOperator adjoint() const { return {matrix_.adjoint(), targets_}; }

 private:
  Matrix matrix_;
  std::vector<std::size_t> targets_;
};

namespace gates {

inline QubitOperator identity(std::size_t q) {
  return {Matrix::identity(2), {q}};
}

inline QubitOperator pauli_x(std::size_t q) {
  return {Matrix{{0.0, 1.0}, {1.0, 0.0}}, {q}};
}

inline QubitOperator pauli_z(std::size_t q) {
  return {Matrix{{1.0, 0.0}, {0.0, -1.0}}, {q}};
}

inline QubitOperator hadamard(std::size_t q) {
  const double h = 1.0 / std::sqrt(2.0);
  return {Matrix{{h, h}, {h, -h}}, {q}};
}

inline QubitOperator cnot(std::size_t control, std::size_t target) {
  return {Matrix{{1.0, 0.0, 0.0, 0.0},
                 {0.0, 1.0, 0.0, 0.0},
                 {0.0, 0.0, 0.0, 1.0},
                 {0.0, 0.0, 1.0, 0.0}},
          {control, target}};
}

inline QubitOperator toffoli(std::size_t c1, std::size_t c2,
                             std::size_t target) {
  Matrix m = Matrix::identity(8);
  m(6, 6) = 0.0;
  m(7, 7) = 0.0;
  m(6, 7) = 1.0;
  m(7, 6) = 1.0;
  return {std::move(m), {c1, c2, target}};
}

}  // namespace gates

//------------------------------------------------------------------------------
// States
//------------------------------------------------------------------------------

/// Normalized pure state on 1..kMaxQubits qubits.
class StateVector {
 public:
  explicit StateVector(std::vector<Complex> amplitudes)
      : num_qubits_(detail::qubits_for_dim(amplitudes.size())),
        amps_(std::move(amplitudes)) {
    if (std::abs(norm() - 1.0) > kTolerance) {
      throw std::invalid_argument("state vector is not normalized");
    }
  }

  static StateVector basis(std::size_t num_qubits, std::size_t index) {
    const std::size_t dim = std::size_t{1} << num_qubits;
    if (index >= dim) throw std::out_of_range("basis index out of range");
    std::vector<Complex> a(dim);
    a[index] = 1.0;
    return StateVector(std::move(a));
  }

  std::size_t num_qubits() const { return num_qubits_; }
  std::size_t dim() const { return amps_.size(); }
  std::span<const Complex> amplitudes() const { return amps_; }
  const Complex& operator[](std::size_t i) const { return amps_[i]; }

  double norm() const {
    double s = 0.0;
    for (const auto& a : amps_) s += std::norm(a);
    return std::sqrt(s);
  }

  void apply(const QubitOperator& op) {
    const auto& targets = op.targets();
    detail::check_targets(targets, num_qubits_);
    const auto offsets = detail::local_offsets(targets, num_qubits_);
    const std::size_t mask = detail::target_mask(targets, num_qubits_);
    const std::size_t block = offsets.size();
    const Matrix& u = op.matrix();
    std::array<Complex, std::size_t{1} << kMaxQubits> tmp{};
    for (std::size_t base = 0; base < amps_.size(); ++base) {
      if (base & mask) continue;
      for (std::size_t j = 0; j < block; ++j) tmp[j] = amps_[base + offsets[j]];
      for (std::size_t i = 0; i < block; ++i) {
        Complex s = 0.0;
        for (std::size_t j = 0; j < block; ++j) s += u(i, j) * tmp[j];
        amps_[base + offsets[i]] = s;
      }
    }
  }

  /// Multiplies by the tensor product of sigma_z on every qubit in z_mask.
  void apply_phase_flips(std::size_t z_mask) {
    if (z_mask == 0) return;
    for (std::size_t i = 0; i < amps_.size(); ++i)
      amps_[i] *= detail::phase_sign(i, z_mask);
  }

 private:
  std::size_t num_qubits_;
  std::vector<Complex> amps_;
};

inline StateVector kron(const StateVector& a, const StateVector& b) {
  std::vector<Complex> out(a.dim() * b.dim());
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < b.dim(); ++j) out[i * b.dim() + j] = a[i] * b[j];
  return StateVector(std::move(out));
}

/// <a|b>
inline Complex inner_product(const StateVector& a, const StateVector& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("dimension mismatch");
  Complex s = 0.0;
  for (std::size_t i = 0; i < a.dim(); ++i) s += std::conj(a[i]) * b[i];
  return s;
}

/// Hermitian, unit-trace, positive semidefinite matrix on 1..kMaxQubits qubits.
class DensityMatrix {
 public:
  explicit DensityMatrix(Matrix m)
      : num_qubits_(detail::qubits_for_dim(m.dim())), m_(std::move(m)) {
    if (!is_hermitian(m_)) {
      throw std::invalid_argument("density matrix is not Hermitian");
    }
    if (std::abs(m_.trace() - 1.0) > kTolerance) {
      throw std::invalid_argument("density matrix does not have unit trace");
    }
    if (!is_positive_semidefinite(m_)) {
      throw std::invalid_argument(
          "density matrix is not positive semidefinite");
    }
  }

  static DensityMatrix from_pure(const StateVector& psi) {
    Matrix m(psi.dim());
    for (std::size_t r = 0; r < psi.dim(); ++r)
      for (std::size_t c = 0; c < psi.dim(); ++c)
        m(r, c) = psi[r] * std::conj(psi[c]);
    return DensityMatrix(std::move(m));
  }

  static DensityMatrix maximally_mixed(std::size_t num_qubits) {
    const std::size_t dim = std::size_t{1} << num_qubits;
    return DensityMatrix(Matrix::identity(dim) * Complex(1.0 / double(dim)));
  }

  std::size_t num_qubits() const { return num_qubits_; }
  std::size_t dim() const { return m_.dim(); }
  const Matrix& matrix() const { return m_; }
  const Complex& operator()(std::size_t r, std::size_t c) const {
    return m_(r, c);
  }

  /// rho -> U rho U^dagger
  void conjugate_by(const QubitOperator& op) {
    const auto& targets = op.targets();
    detail::check_targets(targets, num_qubits_);
    const auto offsets = detail::local_offsets(targets, num_qubits_);
    const std::size_t mask = detail::target_mask(targets, num_qubits_);
    const std::size_t block = offsets.size();
    const std::size_t dim = m_.dim();
    const Matrix& u = op.matrix();
    std::array<Complex, std::size_t{1} << kMaxQubits> tmp{};

    for (std::size_t c = 0; c < dim; ++c) {
      for (std::size_t base = 0; base < dim; ++base) {
        if (base & mask) continue;
        for (std::size_t j = 0; j < block; ++j) tmp[j] = m_(base + offsets[j], c);
        for (std::size_t i = 0; i < block; ++i) {
          Complex s = 0.0;
          for (std::size_t j = 0; j < block; ++j) s += u(i, j) * tmp[j];
          m_(base + offsets[i], c) = s;
        }
      }
    }
    for (std::size_t r = 0; r < dim; ++r) {
      for (std::size_t base = 0; base < dim; ++base) {
        if (base & mask) continue;
        for (std::size_t j = 0; j < block; ++j) tmp[j] = m_(r, base + offsets[j]);
        for (std::size_t i = 0; i < block; ++i) {
          Complex s = 0.0;
          for (std::size_t j = 0; j < block; ++j) s += tmp[j] * std::conj(u(i, j));
          m_(r, base + offsets[i]) = s;
        }
      }
    }
  }

  /// rho -> B rho B with B the product of sigma_z on every qubit in z_mask.
  void apply_phase_flips(std::size_t z_mask) {
    if (z_mask == 0) return;
    for (std::size_t r = 0; r < m_.dim(); ++r)
      for (std::size_t c = 0; c < m_.dim(); ++c)
        m_(r, c) *= detail::phase_sign(r, z_mask) * detail::phase_sign(c, z_mask);
  }

 private:
  std::size_t num_qubits_;
  Matrix m_;
};

//------------------------------------------------------------------------------
// Operations
//------------------------------------------------------------------------------

/// (|00> + |11>) / sqrt(2); qubit 0 is the reference, qubit 1 the system.
inline StateVector bell_state() {
  const double h = 1.0 / std::sqrt(2.0);
  return StateVector({h, 0.0, 0.0, h});
}

inline StateVector apply_unitary(StateVector state, const QubitOperator& op) {
  state.apply(op);
  return state;
}

inline DensityMatrix apply_unitary(DensityMatrix state,
                                   const QubitOperator& op) {
  state.conjugate_by(op);
  return state;
}

namespace detail {

inline std::size_t error_mask(const ErrorSequence& seq,
                              std::span<const std::size_t> targets,
                              std::size_t n) {
  if (seq.size() != targets.size()) {
    throw std::invalid_argument("error sequence length " +
                                std::to_string(seq.size()) +
                                " does not match target count " +
                                std::to_string(targets.size()));
  }
  check_targets(targets, n);
  std::size_t mask = 0;
  for (std::size_t k = 0; k < seq.size(); ++k)
    if (seq[k] == Pauli::Z) mask |= qubit_bit(targets[k], n);
  return mask;
}

}  // namespace detail

/// Applies the Kraus branch sigma_{seq[0]} (x) ... on the listed targets.
inline DensityMatrix apply_error_sequence(DensityMatrix state,
                                          const ErrorSequence& seq,
                                          std::span<const std::size_t> targets) {
  state.apply_phase_flips(detail::error_mask(seq, targets, state.num_qubits()));
  return state;
}

inline StateVector apply_error_sequence(StateVector state,
                                        const ErrorSequence& seq,
                                        std::span<const std::size_t> targets) {
  state.apply_phase_flips(detail::error_mask(seq, targets, state.num_qubits()));
  return state;
}

/// Full N-use dephasing channel on `targets`: the probability-weighted sum of
/// every Kraus branch, enumerated in a fixed order.
inline DensityMatrix apply_channel(const DensityMatrix& state,
                                   std::span<const std::size_t> targets,
                                   const ChannelParams& params) {
  Matrix sum(state.dim());
  for (const auto& [seq, p] : enumerate_sequences(targets.size(), params)) {
    if (p == 0.0) continue;
    sum += apply_error_sequence(state, seq, targets).matrix() * Complex(p);
  }
  return DensityMatrix(std::move(sum));
}

/// Reduced state on `keep`; kept qubits are relabelled in ascending order.
inline DensityMatrix partial_trace(const DensityMatrix& state,
                                   std::vector<std::size_t> keep) {
  const std::size_t n = state.num_qubits();
  if (keep.empty()) throw std::invalid_argument("keep set must be nonempty");
  detail::check_targets(keep, n);
  std::sort(keep.begin(), keep.end());

  std::vector<std::size_t> traced;
  for (std::size_t q = 0; q < n; ++q)
    if (!std::binary_search(keep.begin(), keep.end(), q)) traced.push_back(q);

  const auto kept_off = detail::local_offsets(keep, n);
  const auto traced_off = traced.empty() ? std::vector<std::size_t>{0}
                                         : detail::local_offsets(traced, n);
  Matrix out(kept_off.size());
  for (std::size_t i = 0; i < kept_off.size(); ++i)
    for (std::size_t j = 0; j < kept_off.size(); ++j) {
      Complex s = 0.0;
      for (std::size_t t : traced_off) s += state(kept_off[i] + t, kept_off[j] + t);
      out(i, j) = s;
    }
  return DensityMatrix(std::move(out));
}

/// <psi| rho |psi>, checked to be real and within [0, 1] up to kTolerance.
inline double fidelity_with_pure(const StateVector& psi,
                                 const DensityMatrix& rho) {
  if (psi.dim() != rho.dim()) {
    throw std::invalid_argument("fidelity: dimension mismatch");
  }
  Complex f = 0.0;
  for (std::size_t r = 0; r < psi.dim(); ++r) {
    Complex row = 0.0;
    for (std::size_t c = 0; c < psi.dim(); ++c) row += rho(r, c) * psi[c];
    f += std::conj(psi[r]) * row;
  }
  if (std::abs(f.imag()) > kTolerance || f.real() < -kTolerance ||
      f.real() > 1.0 + kTolerance) {
    throw std::domain_error("fidelity out of range: (" +
                            std::to_string(f.real()) + ", " +
                            std::to_string(f.imag()) + ")");
  }
  return std::clamp(f.real(), 0.0, 1.0);
}

}  // namespace memdeph
