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

#include <span>
#include <vector>

#include "hybrid_anneal/state_vector.hpp"

namespace hanneal {

/**
  H = diag(E) + B * sum_i sigma_x^(i), applied without building a matrix.
  out[a] = E[a] in[a] + B * sum_i in[a ^ (1 << i)], O(N 2^N) work.
*/
class TransverseFieldOperator {
 public:
  TransverseFieldOperator(std::span<const double> diagonal, int n_qubits, double field);

  std::size_t dimension() const noexcept { return diagonal_.size(); }
  double field() const noexcept { return field_; }

  void apply(std::span<const Complex> in, std::span<Complex> out) const;

 private:
  std::span<const double> diagonal_;
  int n_qubits_;
  double field_;
};

struct KrylovOptions {
  int max_dimension = 40;
  /// Bound on the estimated 2-norm error over one propagate() call.
  double tolerance = 1e-10;
  int max_substeps = 1'000'000;
};

struct KrylovStats {
  int substeps = 0;
  int matvecs = 0;
  double error_estimate = 0.0;
};

/**
  Lanczos approximation of exp(-i H t) |psi> for real symmetric H.

  Each substep builds a Krylov basis of dimension up to max_dimension and
  takes the largest time step h whose a-posteriori error estimate
  beta_m |e_m^T exp(-i T_m h) e_1| stays below tolerance * h / t. The basis
  workspace is reused across calls, so one propagator per thread.
*/
class KrylovPropagator {
 public:
  KrylovPropagator(std::size_t dimension, KrylovOptions options = {});

  const KrylovOptions& options() const noexcept { return options_; }

  /// Overwrites `state` with exp(-i H time) state. Throws ConvergenceError.
  KrylovStats propagate(const TransverseFieldOperator& op, double time,
                        std::span<Complex> state);

 private:
  std::size_t dimension_;
  KrylovOptions options_;
  std::vector<Amplitudes> basis_;
  Amplitudes work_;
};

}  // namespace hanneal
