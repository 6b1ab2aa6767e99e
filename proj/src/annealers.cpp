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

#include "hybrid_anneal/annealers.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "hybrid_anneal/errors.hpp"

namespace hanneal {

namespace {

StepRecord settle(const Configuration& current, const Landscape& landscape,
                  const Configuration& candidate, double candidate_energy, double beta,
                  CandidateSource source, double field, Rng& rng) {
  const double current_energy = landscape.energy(current);
  StepRecord r;
  r.candidate = candidate;
  r.candidate_energy = candidate_energy;
  r.source = source;
  r.field = field;
  r.beta = beta;
  r.accepted = metropolis_accept(candidate_energy - current_energy, beta, rng);
  r.config = r.accepted ? candidate : current;
  r.energy = r.accepted ? candidate_energy : current_energy;
  r.best_rank_so_far = landscape.rank_of(r.config);
  return r;
}

Configuration flip_random_spin(const Configuration& current, Rng& rng) {
  const auto spin = rng.index(static_cast<std::uint32_t>(current.n_qubits));
  return {current.bits ^ (std::uint32_t{1} << spin), current.n_qubits};
}

struct QuantumCandidate {
  Configuration config;
  double field;
};

QuantumCandidate quantum_candidate(const Configuration& current, const Landscape& landscape,
                                   const HAParams& params, Rng& rng) {
  const double field = params.field_min + (params.field_max - params.field_min) * rng.uniform();
  const auto evolved = evolve(landscape, {field, params.evolve_time, params.tolerance},
                              basis_state(current));
  return {measure(evolved, rng), field};
}

}  // namespace

std::string_view to_string(Algorithm algorithm) {
  switch (algorithm) {
    case Algorithm::ha: return "HA";
    case Algorithm::sa: return "SA";
    case Algorithm::sa2: return "SA2";
    case Algorithm::hasa: return "HA+SA";
    case Algorithm::aa: return "AA";
  }
  return "?";
}

Algorithm algorithm_from_string(std::string_view name) {
  for (auto a : {Algorithm::ha, Algorithm::sa, Algorithm::sa2, Algorithm::hasa, Algorithm::aa}) {
    if (name == to_string(a)) return a;
  }
  if (name == "HASA") return Algorithm::hasa;
  throw ParameterError("unknown algorithm '" + std::string(name) + "'");
}

void validate(const HAParams& p) {
  if (!(p.field_min >= 0.0) || !(p.field_max >= p.field_min) || !std::isfinite(p.field_max)) {
    throw ParameterError("HA field range must satisfy 0 <= field_min <= field_max");
  }
  if (!(p.beta > 0.0)) throw ParameterError("HA beta must be > 0");
  if (!(p.evolve_time > 0.0) || !std::isfinite(p.evolve_time)) {
    throw ParameterError("HA evolve_time must be > 0");
  }
  if (!(p.tolerance > 0.0 && p.tolerance <= 1e-4)) {
    throw ParameterError("HA propagator tolerance must lie in (0, 1e-4]");
  }
}

void validate(const SASchedule& s) {
  if (!(s.cooling > 0.0 && s.cooling < 1.0)) throw ParameterError("SA cooling must lie in (0, 1)");
  if (!(s.beta0 > 0.0)) throw ParameterError("SA beta0 must be > 0");
  if (s.success_quota < 1 || s.step_cap < 1) throw ParameterError("SA quotas must be positive");
}

bool metropolis_accept(double delta_e, double beta, Rng& rng) {
  if (!(beta >= 0.0)) throw ParameterError("inverse temperature must be >= 0");
  const double u = rng.uniform();
  if (delta_e <= 0.0) return true;
  return u < std::exp(-beta * delta_e);
}

StepRecord ha_step(const Configuration& current, const Landscape& landscape,
                   const HAParams& params, Rng& rng) {
  const auto q = quantum_candidate(current, landscape, params, rng);
  return settle(current, landscape, q.config, landscape.energy(q.config), params.beta,
                CandidateSource::quantum, q.field, rng);
}

StepRecord sa_step(const Configuration& current, const Landscape& landscape, double beta,
                   Rng& rng) {
  const auto candidate = flip_random_spin(current, rng);
  return settle(current, landscape, candidate, landscape.energy(candidate), beta,
                CandidateSource::thermal, 0.0, rng);
}

StepRecord sa2_step(const Configuration& current, const Landscape& landscape, double beta,
                    Rng& rng) {
  const auto first = flip_random_spin(current, rng);
  const auto second = flip_random_spin(current, rng);
  const double e1 = landscape.energy(first);
  const double e2 = landscape.energy(second);
  const bool take_second = e2 < e1;
  return settle(current, landscape, take_second ? second : first, take_second ? e2 : e1, beta,
                CandidateSource::thermal, 0.0, rng);
}

double sa_schedule_beta(const SASchedule& schedule, int k) {
  if (k < 0) throw ParameterError("schedule index must be >= 0");
  return schedule.beta0 * std::pow(schedule.cooling, -static_cast<double>(k));
}

ScheduleCounters advance_schedule(const SASchedule& schedule, ScheduleCounters counters,
                                  bool accepted) {
  if (accepted) ++counters.accepted;
  ++counters.steps;
  if (counters.accepted >= schedule.success_quota || counters.steps >= schedule.step_cap) {
    ++counters.k;
    counters.accepted = 0;
    counters.steps = 0;
  }
  return counters;
}

HasaProposal propose_hasa(const Configuration& current, const Landscape& landscape,
                          const HAParams& ha, Rng& rng) {
  HasaProposal p;
  const auto q = quantum_candidate(current, landscape, ha, rng);
  p.quantum = q.config;
  p.quantum_energy = landscape.energy(q.config);
  p.field = q.field;
  p.thermal = flip_random_spin(current, rng);
  p.thermal_energy = landscape.energy(p.thermal);
  return p;
}

CandidateSource select_candidate(const HasaProposal& proposal) {
  return proposal.thermal_energy < proposal.quantum_energy ? CandidateSource::thermal
                                                           : CandidateSource::quantum;
}

StepRecord hasa_step(const Configuration& current, const Landscape& landscape,
                     const HAParams& ha, double acceptance_beta, Rng& rng) {
  const auto p = propose_hasa(current, landscape, ha, rng);
  if (select_candidate(p) == CandidateSource::thermal) {
    return settle(current, landscape, p.thermal, p.thermal_energy, acceptance_beta,
                  CandidateSource::thermal, p.field, rng);
  }
  return settle(current, landscape, p.quantum, p.quantum_energy, acceptance_beta,
                CandidateSource::quantum, p.field, rng);
}

Trajectory run_markov(Algorithm algorithm, const Landscape& landscape,
                      const Configuration& start, int max_steps, const MarkovParams& params,
                      Rng& rng) {
  if (max_steps < 1) throw ParameterError("max_steps must be >= 1");
  if (algorithm == Algorithm::aa) {
    throw ParameterError("adiabatic annealing has no Markov steps; use run_adiabatic");
  }
  if (algorithm != Algorithm::sa && algorithm != Algorithm::sa2) validate(params.ha);
  if (algorithm == Algorithm::sa || algorithm == Algorithm::sa2) validate(params.sa);

  Trajectory traj;
  traj.algorithm = algorithm;
  traj.start = start;
  traj.start_rank = landscape.rank_of(start);
  traj.landscape_seed = landscape.seed();
  traj.run_seed = rng.seed();

  std::uint32_t best = traj.start_rank;
  if (best == 1) {
    traj.reached_ground_at = 0;
    if (params.stop_at_ground) return traj;
  }

  traj.records.reserve(static_cast<std::size_t>(max_steps));
  Configuration current = start;
  ScheduleCounters counters;
  for (int step = 1; step <= max_steps; ++step) {
    StepRecord r;
    switch (algorithm) {
      case Algorithm::ha:
        r = ha_step(current, landscape, params.ha, rng);
        break;
      case Algorithm::sa:
        r = sa_step(current, landscape, sa_schedule_beta(params.sa, counters.k), rng);
        counters = advance_schedule(params.sa, counters, r.accepted);
        break;
      case Algorithm::sa2:
        r = sa2_step(current, landscape, sa_schedule_beta(params.sa, counters.k), rng);
        counters = advance_schedule(params.sa, counters, r.accepted);
        break;
      case Algorithm::hasa:
        r = hasa_step(current, landscape, params.ha, params.ha.beta, rng);
        break;
      case Algorithm::aa:
        break;
    }
    r.step_index = step;
    best = std::min(best, r.best_rank_so_far);
    r.best_rank_so_far = best;
    current = r.config;
    traj.records.push_back(r);
    if (best == 1 && !traj.reached_ground_at) {
      traj.reached_ground_at = step;
      if (params.stop_at_ground) break;
    }
  }
  return traj;
}

double run_adiabatic(const Landscape& landscape, const AdiabaticSchedule& schedule,
                     AdiabaticStats* stats) {
  return overlap_sq(evolve_adiabatic(landscape, schedule, stats), landscape.ground());
}

}  // namespace hanneal
