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

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "hybrid_anneal/dynamics.hpp"
#include "hybrid_anneal/landscape.hpp"
#include "hybrid_anneal/random.hpp"

namespace hanneal {

enum class Algorithm { ha, sa, sa2, hasa, aa };

std::string_view to_string(Algorithm algorithm);
Algorithm algorithm_from_string(std::string_view name);

/// Hybrid annealing: evolve under a random transverse field, measure, Metropolis-accept.
struct HAParams {
  double beta = 10.0;
  double evolve_time = 10.0;
  double field_min = 0.0;
  double field_max = 1.0;
  double tolerance = 1e-8;
};

/// Simulated annealing cooling: beta(k) = beta0 * cooling^(-k), where k advances
/// after `success_quota` accepted updates or `step_cap` steps, whichever first.
struct SASchedule {
  double beta0 = 1.0;
  double cooling = 0.98;
  int success_quota = 10;
  int step_cap = 20;
};

void validate(const HAParams& params);
void validate(const SASchedule& schedule);

struct ScheduleCounters {
  int k = 0;
  int accepted = 0;
  int steps = 0;

  friend bool operator==(const ScheduleCounters&, const ScheduleCounters&) = default;
};

enum class CandidateSource { quantum, thermal };

/**
  Outcome of one annealing step. Step functions fill best_rank_so_far with the
  rank of the resulting configuration and leave step_index at 0; run_markov
  numbers the records and folds the running minimum.
*/
struct StepRecord {
  int step_index = 0;
  Configuration config;
  double energy = 0.0;
  bool accepted = false;
  std::uint32_t best_rank_so_far = 0;

  Configuration candidate;
  double candidate_energy = 0.0;
  CandidateSource source = CandidateSource::quantum;
  double field = 0.0;  ///< transverse field drawn this step (HA, HA+SA), else 0
  double beta = 0.0;   ///< inverse temperature of the acceptance test
};

struct Trajectory {
  Algorithm algorithm = Algorithm::ha;
  Configuration start;
  std::uint32_t start_rank = 0;
  std::vector<StepRecord> records;
  /// 0 when the start is the ground state, else the first step index holding it.
  std::optional<int> reached_ground_at;
  std::uint64_t landscape_seed = 0;
  std::uint64_t run_seed = 0;
};

/// True with probability min{exp(-beta * delta_e), 1}. Always consumes one uniform draw.
bool metropolis_accept(double delta_e, double beta, Rng& rng);

StepRecord ha_step(const Configuration& current, const Landscape& landscape,
                   const HAParams& params, Rng& rng);

/// Single random spin flip, Metropolis-accepted at beta.
StepRecord sa_step(const Configuration& current, const Landscape& landscape, double beta,
                   Rng& rng);

/// Better of two independent single-spin-flip candidates (they may coincide).
StepRecord sa2_step(const Configuration& current, const Landscape& landscape, double beta,
                    Rng& rng);

double sa_schedule_beta(const SASchedule& schedule, int k);

ScheduleCounters advance_schedule(const SASchedule& schedule, ScheduleCounters counters,
                                  bool accepted);

struct HasaProposal {
  Configuration quantum;
  double quantum_energy = 0.0;
  double field = 0.0;
  Configuration thermal;
  double thermal_energy = 0.0;
};

/// Draws the two HA+SA candidates: quantum first (field, measurement), then a spin flip.
HasaProposal propose_hasa(const Configuration& current, const Landscape& landscape,
                          const HAParams& ha, Rng& rng);

/// Lower-energy candidate of a proposal; ties go to the quantum candidate.
CandidateSource select_candidate(const HasaProposal& proposal);

StepRecord hasa_step(const Configuration& current, const Landscape& landscape,
                     const HAParams& ha, double acceptance_beta, Rng& rng);

struct MarkovParams {
  HAParams ha{};
  SASchedule sa{};
  /// Stop as soon as the ground state is held.
  bool stop_at_ground = false;
};

/// Iterates one step function up to max_steps times. HA+SA accepts at ha.beta.
Trajectory run_markov(Algorithm algorithm, const Landscape& landscape,
                      const Configuration& start, int max_steps, const MarkovParams& params,
                      Rng& rng);

/// Squared overlap of the adiabatically evolved state with the ground configuration.
double run_adiabatic(const Landscape& landscape, const AdiabaticSchedule& schedule,
                     AdiabaticStats* stats = nullptr);

}  // namespace hanneal
