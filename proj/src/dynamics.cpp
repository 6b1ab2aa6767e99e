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

#include "hybrid_anneal/dynamics.hpp"

#include <bit>
#include <cmath>

#include "hybrid_anneal/errors.hpp"
#include "hybrid_anneal/krylov.hpp"

namespace hanneal {

namespace {

void check_dimensions(const Landscape& landscape, const StateVector& state) {
  if (landscape.n_qubits() != state.n_qubits()) {
    throw DimensionError("state has " + std::to_string(state.n_qubits()) +
                         " qubits, landscape has " + std::to_string(landscape.n_qubits()));
  }
}

}  // namespace

StateVector basis_state(const Configuration& config) {
  const auto checked = make_configuration(config.n_qubits, config.bits);
  Amplitudes amps(std::size_t{1} << checked.n_qubits, Complex{0.0, 0.0});
  amps[checked.bits] = 1.0;
  return StateVector::from_amplitudes(checked.n_qubits, std::move(amps));
}

StateVector transverse_ground_state(int n_qubits) {
  if (n_qubits < 1 || n_qubits > kMaxQubits) throw SizeError("n_qubits out of range");
  const std::size_t dim = std::size_t{1} << n_qubits;
  const double mag = std::pow(2.0, -0.5 * n_qubits);
  Amplitudes amps(dim);
  for (std::size_t a = 0; a < dim; ++a) {
    amps[a] = (std::popcount(a) % 2 == 0) ? mag : -mag;
  }
  return StateVector::normalized(n_qubits, std::move(amps));
}

Amplitudes apply_hamiltonian(const Landscape& landscape, double field, const StateVector& state) {
  check_dimensions(landscape, state);
  TransverseFieldOperator op(landscape.energies(), landscape.n_qubits(), field);
  Amplitudes out(state.dimension());
  op.apply(state.amplitudes(), out);
  return out;
}

double expectation(const Landscape& landscape, double field, const StateVector& state) {
  const auto h_psi = apply_hamiltonian(landscape, field, state);
  double s = 0.0;
  for (std::size_t a = 0; a < h_psi.size(); ++a) {
    s += (std::conj(state[a]) * h_psi[a]).real();
  }
  return s;
}

void validate(const EvolveParams& params) {
  if (!(params.field >= 0.0) || !std::isfinite(params.field)) {
    throw ParameterError("field must be finite and >= 0");
  }
  if (!(params.time >= 0.0) || !std::isfinite(params.time)) {
    throw ParameterError("evolution time must be finite and >= 0");
  }
  if (!(params.tolerance > 0.0 && params.tolerance <= 1e-4)) {
    throw ParameterError("propagator tolerance must lie in (0, 1e-4]");
  }
}

StateVector evolve(const Landscape& landscape, const EvolveParams& params,
                   const StateVector& state, EvolveStats* stats) {
  validate(params);
  check_dimensions(landscape, state);
  if (params.time == 0.0) {
    if (stats) *stats = {};
    return state;
  }
  TransverseFieldOperator op(landscape.energies(), landscape.n_qubits(), params.field);
  KrylovOptions options;
  options.tolerance = params.tolerance;
  KrylovPropagator propagator(state.dimension(), options);

  StateVectorBuilder out(state);
  const auto ks = propagator.propagate(op, params.time, out.amplitudes());
  const double correction = out.renormalize();
  if (stats) *stats = {ks.substeps, ks.matvecs, ks.error_estimate, correction};
  return std::move(out).release();
}

void validate(const AdiabaticSchedule& s) {
  if (!(s.total_time >= 0.0) || !std::isfinite(s.total_time)) {
    throw ParameterError("adiabatic total time must be finite and >= 0");
  }
  if (!(s.tolerance > 0.0 && s.tolerance <= 1e-4)) {
    throw ParameterError("adiabatic tolerance must lie in (0, 1e-4]");
  }
  if (s.total_time == 0.0) return;
  if (!(s.field > 0.0) || !std::isfinite(s.field)) throw ParameterError("adiabatic field must be > 0");
  if (!(s.decay_time > 0.0) || !(s.decay_time < s.total_time)) {
    throw ParameterError("adiabatic decay time must satisfy 0 < t0 < t1");
  }
  if (!(s.step > 0.0) || !(s.step <= s.decay_time / 10.0)) {
    throw ParameterError("adiabatic step must satisfy 0 < dt <= t0 / 10");
  }
}

StateVector evolve_adiabatic(const Landscape& landscape, const AdiabaticSchedule& schedule,
                             AdiabaticStats* stats) {
  validate(schedule);
  AdiabaticStats local;
  StateVectorBuilder state(transverse_ground_state(landscape.n_qubits()));
  if (schedule.total_time > 0.0) {
    const double t1 = schedule.total_time;
    // the whole-run budget is shared out in proportion to step length
    KrylovOptions options;
    options.tolerance = schedule.tolerance * std::min(schedule.step / t1, 1.0);
    KrylovPropagator propagator(landscape.dimension(), options);
    const auto n_steps = static_cast<long>(std::ceil(t1 / schedule.step - 1e-9));
    for (long s = 0; s < n_steps; ++s) {
      const double start = static_cast<double>(s) * schedule.step;
      const double h = std::min(schedule.step, t1 - start);
      if (h <= 0.0) break;
      const double field = schedule.field * std::exp(-(start + 0.5 * h) / schedule.decay_time);
      TransverseFieldOperator op(landscape.energies(), landscape.n_qubits(), field);
      const auto ks = propagator.propagate(op, h, state.amplitudes());
      const double correction = state.renormalize();
      ++local.steps;
      local.matvecs += ks.matvecs;
      local.total_norm_correction += correction;
      local.max_norm_correction = std::max(local.max_norm_correction, correction);
    }
  }
  if (stats) *stats = local;
  return std::move(state).release();
}

Configuration measure(const StateVector& state, Rng& rng) {
  const double n2 = squared_norm(state.amplitudes());
  if (!(std::abs(n2 - 1.0) <= 1e-6)) {
    throw NormalizationError("cannot measure a state with norm^2 " + std::to_string(n2));
  }
  const double target = rng.uniform() * n2;
  double cumulative = 0.0;
  std::size_t last_nonzero = 0;
  for (std::size_t a = 0; a < state.dimension(); ++a) {
    const double p = std::norm(state[a]);
    if (p == 0.0) continue;
    last_nonzero = a;
    cumulative += p;
    if (target < cumulative) return {static_cast<std::uint32_t>(a), state.n_qubits()};
  }
  return {static_cast<std::uint32_t>(last_nonzero), state.n_qubits()};
}

double overlap_sq(const StateVector& state, const Configuration& config) {
  if (config.n_qubits != state.n_qubits()) throw DimensionError("qubit count mismatch");
  if (config.bits >= state.dimension()) throw IndexError("configuration out of range");
  return std::norm(state[config.bits]);
}

}  // namespace hanneal
