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

#include "hybrid_anneal/landscape.hpp"
#include "hybrid_anneal/random.hpp"
#include "hybrid_anneal/state_vector.hpp"

namespace hanneal {

StateVector basis_state(const Configuration& config);

/// Ground state of +B sum_i sigma_x^(i) for B > 0: every spin along -x,
/// amplitudes (-1)^popcount(a) 2^(-N/2).
StateVector transverse_ground_state(int n_qubits);

/// H|psi> for H = H0 + field * sum_i sigma_x^(i). The result is not normalized.
Amplitudes apply_hamiltonian(const Landscape& landscape, double field, const StateVector& state);

/// <psi|H|psi>, real since H is Hermitian.
double expectation(const Landscape& landscape, double field, const StateVector& state);

struct EvolveParams {
  double field = 0.0;  ///< B >= 0
  double time = 0.0;   ///< t >= 0
  double tolerance = 1e-10;
};

struct EvolveStats {
  int substeps = 0;
  int matvecs = 0;
  double error_estimate = 0.0;
  /// |norm - 1| removed by the final renormalization.
  double norm_correction = 0.0;
};

void validate(const EvolveParams& params);

/// exp(-i H t)|state> with the constant Hamiltonian H0 + B sum sigma_x.
StateVector evolve(const Landscape& landscape, const EvolveParams& params,
                   const StateVector& state, EvolveStats* stats = nullptr);

struct AdiabaticSchedule {
  double total_time = 2000.0;  ///< t1
  double decay_time = 200.0;   ///< t0, field decays as exp(-t / t0)
  double field = 10.0;         ///< B at t = 0
  double step = 0.1;           ///< dt
  /// Krylov error budget for the whole run, split across steps by duration.
  double tolerance = 1e-8;
};

struct AdiabaticStats {
  int steps = 0;
  long matvecs = 0;
  double total_norm_correction = 0.0;
  double max_norm_correction = 0.0;
};

void validate(const AdiabaticSchedule& schedule);

/**
  Integrates i d/dt |psi> = (H0 + exp(-t/t0) B sum sigma_x) |psi> from the
  transverse-field ground state over [0, t1]. The field is held constant over
  each step at its midpoint value and every step is propagated with the
  Krylov propagator. total_time = 0 returns the initial state.
*/
StateVector evolve_adiabatic(const Landscape& landscape, const AdiabaticSchedule& schedule,
                             AdiabaticStats* stats = nullptr);

/// Born-rule sample of one basis state. Consumes one uniform draw.
Configuration measure(const StateVector& state, Rng& rng);

double overlap_sq(const StateVector& state, const Configuration& config);

}  // namespace hanneal
