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

#include "hybrid_anneal/state_vector.hpp"

#include <cmath>
#include <string>

#include "hybrid_anneal/errors.hpp"

namespace hanneal {

namespace {

void check_shape(int n_qubits, const Amplitudes& amplitudes) {
  if (n_qubits < 1 || n_qubits > kMaxQubits) throw SizeError("n_qubits out of range");
  if (amplitudes.size() != (std::size_t{1} << n_qubits)) {
    throw DimensionError("expected 2^" + std::to_string(n_qubits) + " amplitudes, got " +
                         std::to_string(amplitudes.size()));
  }
}

}  // namespace

double squared_norm(std::span<const Complex> v) {
  double s = 0.0;
  for (const auto& a : v) s += std::norm(a);
  return s;
}

StateVector StateVector::from_amplitudes(int n_qubits, Amplitudes amplitudes) {
  check_shape(n_qubits, amplitudes);
  const double n2 = squared_norm(amplitudes);
  if (!(std::abs(n2 - 1.0) <= 1e-9)) {
    throw NormalizationError("state norm^2 " + std::to_string(n2) + " deviates from 1");
  }
  return StateVector(n_qubits, std::move(amplitudes));
}

StateVector StateVector::normalized(int n_qubits, Amplitudes amplitudes) {
  check_shape(n_qubits, amplitudes);
  const double n = std::sqrt(squared_norm(amplitudes));
  if (!(n > 0.0) || !std::isfinite(n)) throw NormalizationError("cannot normalize a zero state");
  for (auto& a : amplitudes) a /= n;
  return StateVector(n_qubits, std::move(amplitudes));
}

double StateVector::norm() const { return std::sqrt(squared_norm(amplitudes_)); }

double StateVectorBuilder::renormalize() {
  const double n = std::sqrt(squared_norm(amplitudes_));
  if (!(n > 0.0) || !std::isfinite(n)) throw NormalizationError("state collapsed to zero norm");
  const double inv = 1.0 / n;
  for (auto& a : amplitudes_) a *= inv;
  return std::abs(n - 1.0);
}

}  // namespace hanneal
