// Copyright 2026 The overlap-forge Authors
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

#ifndef OVERLAP_FORGE_HILBERT_H
#define OVERLAP_FORGE_HILBERT_H

// Complex linear algebra for the qubit (dim 2) and qubit-plus-ancilla
// (dim 4) Hilbert spaces. Joint index convention: |s>|a> -> 2*s + a.

#include <array>
#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace overlap_forge {

using Complex = std::complex<double>;

inline constexpr double kEqualityTol = 1e-12;
inline constexpr double kRankTol = 1e-10;

template <std::size_t N>
class StateVector {
  static_assert(N == 2 || N == 4, "only qubit and joint spaces are modelled");

 public:
  static constexpr std::size_t kDim = N;

  StateVector() = default;
  /// Throws DomainError on non-finite amplitudes.
  explicit StateVector(const std::array<Complex, N>& amplitudes);
  StateVector(std::initializer_list<Complex> amplitudes);

  /// Same as the array constructor but additionally requires unit norm
  /// within kEqualityTol.
  static StateVector normalized(const std::array<Complex, N>& amplitudes);
  static StateVector basis(std::size_t k);

  const Complex& operator[](std::size_t k) const { return amp_[k]; }
  const std::array<Complex, N>& amplitudes() const { return amp_; }

  double norm() const;
  StateVector scaled(Complex factor) const;
  StateVector operator+(const StateVector& other) const;
  StateVector operator-(const StateVector& other) const;

 private:
  std::array<Complex, N> amp_{};
};

using Qubit = StateVector<2>;
using JointState = StateVector<4>;

/// <u|v>, conjugate-linear in u.
template <std::size_t N>
Complex inner(const StateVector<N>& u, const StateVector<N>& v);

/// Kronecker product |s> (x) |a>.
JointState tensor(const Qubit& system, const Qubit& ancilla);

/// Modified Gram-Schmidt completion of `partial` to an orthonormal basis.
/// The first k output vectors span the same space as the k inputs (they
/// are the MGS orthonormalisation of the inputs); the rest are taken from
/// canonical basis vectors e_0, e_1, ... in order, skipping any whose
/// residual norm falls below kRankTol. Throws DegenerateError when an input
/// vector is dependent on its predecessors and DomainError when more than N
/// vectors are given.
template <std::size_t N>
std::array<StateVector<N>, N> complete_orthonormal(
    std::span<const StateVector<N>> partial);

class JointOperator {
 public:
  using Matrix = std::array<std::array<Complex, 4>, 4>;

  JointOperator() = default;
  explicit JointOperator(const Matrix& entries) : m_(entries) {}

  static JointOperator identity();
  /// sum_k |out_k><in_k|
  static JointOperator from_frames(const std::array<JointState, 4>& in,
                                   const std::array<JointState, 4>& out);

  const Complex& operator()(std::size_t r, std::size_t c) const {
    return m_[r][c];
  }
  Complex& operator()(std::size_t r, std::size_t c) { return m_[r][c]; }

  JointState apply(const JointState& v) const;
  JointOperator adjoint() const;
  JointOperator operator*(const JointOperator& rhs) const;
  const Matrix& entries() const { return m_; }

 private:
  Matrix m_{};
};

/// max_ij |(U^dagger U - I)_ij|
double unitarity_defect(const JointOperator& u);

/// True iff unitarity_defect(u) <= tol. Throws DomainError if tol <= 0.
bool is_unitary(const JointOperator& u, double tol);

/// Projects a joint state on ancilla outcome `outcome` and returns the
/// unnormalised system component (I (x) <outcome|) v.
Qubit project_ancilla(const JointState& v, int outcome);

}  // namespace overlap_forge

#endif  // OVERLAP_FORGE_HILBERT_H
