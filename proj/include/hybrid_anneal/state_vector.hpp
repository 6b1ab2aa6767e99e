// Copyright 2026 The hybrid-anneal Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <complex>
#include <span>
#include <vector>

#include "hybrid_anneal/landscape.hpp"

namespace hanneal {

using Complex = std::complex<double>;
using Amplitudes = std::vector<Complex>;

/// Unit-norm complex amplitudes over the 2^N computational basis.
class StateVector {
 public:
  /// Throws NormalizationError if the squared norm deviates from 1 by more than 1e-9.
  static StateVector from_amplitudes(int n_qubits, Amplitudes amplitudes);
  /// Rescales to unit norm; throws NormalizationError for a zero vector.
  static StateVector normalized(int n_qubits, Amplitudes amplitudes);

  int n_qubits() const noexcept { return n_qubits_; }
  std::size_t dimension() const noexcept { return amplitudes_.size(); }
  std::span<const Complex> amplitudes() const noexcept { return amplitudes_; }
  const Complex& operator[](std::size_t i) const { return amplitudes_[i]; }

  double norm() const;

 private:
  friend class StateVectorBuilder;
  StateVector(int n_qubits, Amplitudes amplitudes)
      : n_qubits_(n_qubits), amplitudes_(std::move(amplitudes)) {}

  int n_qubits_;
  Amplitudes amplitudes_;
};

/// Internal mutable access for the propagators; keeps the unit-norm invariant
/// by renormalizing on release.
class StateVectorBuilder {
 public:
  explicit StateVectorBuilder(StateVector state)
      : n_qubits_(state.n_qubits_), amplitudes_(std::move(state.amplitudes_)) {}
  StateVectorBuilder(int n_qubits, Amplitudes amplitudes)
      : n_qubits_(n_qubits), amplitudes_(std::move(amplitudes)) {}

  std::span<Complex> amplitudes() noexcept { return amplitudes_; }

  /// Renormalizes and returns |norm - 1| before the correction.
  double renormalize();

  StateVector release() && { return StateVector(n_qubits_, std::move(amplitudes_)); }

 private:
  int n_qubits_;
  Amplitudes amplitudes_;
};

double squared_norm(std::span<const Complex> v);

}  // namespace hanneal
