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

#include "overlap_forge/hilbert.h"

#include <algorithm>
#include <cmath>
#include <string>

#include "overlap_forge/errors.h"

namespace overlap_forge {

namespace {

template <std::size_t N>
void require_finite(const std::array<Complex, N>& a) {
  for (const Complex& z : a) {
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
      throw DomainError("state amplitude is not finite");
    }
  }
}

}  // namespace

template <std::size_t N>
StateVector<N>::StateVector(const std::array<Complex, N>& amplitudes)
    : amp_(amplitudes) {
  require_finite(amp_);
}

template <std::size_t N>
StateVector<N>::StateVector(std::initializer_list<Complex> amplitudes) {
  if (amplitudes.size() != N) {
    throw DomainError("expected " + std::to_string(N) + " amplitudes, got " +
                      std::to_string(amplitudes.size()));
  }
  std::copy(amplitudes.begin(), amplitudes.end(), amp_.begin());
  require_finite(amp_);
}

template <std::size_t N>
StateVector<N> StateVector<N>::normalized(
    const std::array<Complex, N>& amplitudes) {
  StateVector v(amplitudes);
  double n = v.norm();
  if (std::abs(n * n - 1.0) > kEqualityTol) {
    throw DomainError("state is not normalised (squared norm " +
                      std::to_string(n * n) + ")");
  }
  return v;
}

template <std::size_t N>
StateVector<N> StateVector<N>::basis(std::size_t k) {
  if (k >= N) throw DomainError("basis index out of range");
  std::array<Complex, N> a{};
  a[k] = 1.0;
  return StateVector(a);
}

template <std::size_t N>
double StateVector<N>::norm() const {
  double s = 0.0;
  for (const Complex& z : amp_) s += std::norm(z);
  return std::sqrt(s);
}

template <std::size_t N>
StateVector<N> StateVector<N>::scaled(Complex factor) const {
  std::array<Complex, N> a;
  for (std::size_t k = 0; k < N; ++k) a[k] = factor * amp_[k];
  return StateVector(a);
}

template <std::size_t N>
StateVector<N> StateVector<N>::operator+(const StateVector& other) const {
  std::array<Complex, N> a;
  for (std::size_t k = 0; k < N; ++k) a[k] = amp_[k] + other.amp_[k];
  return StateVector(a);
}

template <std::size_t N>
StateVector<N> StateVector<N>::operator-(const StateVector& other) const {
  std::array<Complex, N> a;
  for (std::size_t k = 0; k < N; ++k) a[k] = amp_[k] - other.amp_[k];
  return StateVector(a);
}

template <std::size_t N>
Complex inner(const StateVector<N>& u, const StateVector<N>& v) {
  Complex s = 0.0;
  for (std::size_t k = 0; k < N; ++k) s += std::conj(u[k]) * v[k];
  return s;
}

JointState tensor(const Qubit& system, const Qubit& ancilla) {
  std::array<Complex, 4> a;
  for (std::size_t s = 0; s < 2; ++s) {
    for (std::size_t b = 0; b < 2; ++b) a[2 * s + b] = system[s] * ancilla[b];
  }
  return JointState(a);
}

template <std::size_t N>
std::array<StateVector<N>, N> complete_orthonormal(
    std::span<const StateVector<N>> partial) {
  if (partial.size() > N) {
    throw DomainError("more vectors than the space dimension");
  }
  std::array<StateVector<N>, N> basis;
  std::size_t filled = 0;

  // Returns false when the residual after projecting out the current frame
  // is below the rank tolerance.
  auto try_append = [&](StateVector<N> v) {
    for (std::size_t j = 0; j < filled; ++j) {
      v = v - basis[j].scaled(inner(basis[j], v));
    }
    double n = v.norm();
    if (n < kRankTol) return false;
    v = v.scaled(1.0 / n);
    // second MGS pass keeps the frame orthogonal to ~1e-16
    for (std::size_t j = 0; j < filled; ++j) {
      v = v - basis[j].scaled(inner(basis[j], v));
    }
    basis[filled++] = v.scaled(1.0 / v.norm());
    return true;
  };

  for (std::size_t i = 0; i < partial.size(); ++i) {
    if (!try_append(partial[i])) {
      throw DegenerateError("input vector " + std::to_string(i) +
                            " is linearly dependent on its predecessors");
    }
  }
  for (std::size_t k = 0; k < N && filled < N; ++k) {
    try_append(StateVector<N>::basis(k));
  }
  return basis;
}

JointOperator JointOperator::identity() {
  JointOperator u;
  for (std::size_t k = 0; k < 4; ++k) u.m_[k][k] = 1.0;
  return u;
}

JointOperator JointOperator::from_frames(const std::array<JointState, 4>& in,
                                         const std::array<JointState, 4>& out) {
  JointOperator u;
  for (std::size_t k = 0; k < 4; ++k) {
    for (std::size_t r = 0; r < 4; ++r) {
      for (std::size_t c = 0; c < 4; ++c) {
        u.m_[r][c] += out[k][r] * std::conj(in[k][c]);
      }
    }
  }
  return u;
}

JointState JointOperator::apply(const JointState& v) const {
  std::array<Complex, 4> a{};
  for (std::size_t r = 0; r < 4; ++r) {
    for (std::size_t c = 0; c < 4; ++c) a[r] += m_[r][c] * v[c];
  }
  return JointState(a);
}

JointOperator JointOperator::adjoint() const {
  JointOperator t;
  for (std::size_t r = 0; r < 4; ++r) {
    for (std::size_t c = 0; c < 4; ++c) t.m_[r][c] = std::conj(m_[c][r]);
  }
  return t;
}

JointOperator JointOperator::operator*(const JointOperator& rhs) const {
  JointOperator p;
  for (std::size_t r = 0; r < 4; ++r) {
    for (std::size_t c = 0; c < 4; ++c) {
      for (std::size_t k = 0; k < 4; ++k) p.m_[r][c] += m_[r][k] * rhs.m_[k][c];
    }
  }
  return p;
}

double unitarity_defect(const JointOperator& u) {
  JointOperator g = u.adjoint() * u;
  double worst = 0.0;
  for (std::size_t r = 0; r < 4; ++r) {
    for (std::size_t c = 0; c < 4; ++c) {
      Complex d = g(r, c) - (r == c ? 1.0 : 0.0);
      worst = std::max(worst, std::abs(d));
    }
  }
  return worst;
}

bool is_unitary(const JointOperator& u, double tol) {
  if (!(tol > 0.0)) throw DomainError("unitarity tolerance must be positive");
  return unitarity_defect(u) <= tol;
}

Qubit project_ancilla(const JointState& v, int outcome) {
  if (outcome != 0 && outcome != 1) {
    throw DomainError("ancilla outcome must be 0 or 1");
  }
  return Qubit({v[static_cast<std::size_t>(outcome)],
                v[2 + static_cast<std::size_t>(outcome)]});
}

template class StateVector<2>;
template class StateVector<4>;
template Complex inner(const StateVector<2>&, const StateVector<2>&);
template Complex inner(const StateVector<4>&, const StateVector<4>&);
template std::array<StateVector<2>, 2> complete_orthonormal(
    std::span<const StateVector<2>>);
template std::array<StateVector<4>, 4> complete_orthonormal(
    std::span<const StateVector<4>>);

}  // namespace overlap_forge
