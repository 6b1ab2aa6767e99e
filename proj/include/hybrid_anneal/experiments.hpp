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

#include <array>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include <json.hpp>

#include "hybrid_anneal/annealers.hpp"
#include "hybrid_anneal/statistics.hpp"

namespace hanneal {

enum class ExperimentKind { table1, success, trajectories, tunneling };

std::string_view to_string(ExperimentKind kind);
ExperimentKind experiment_from_string(std::string_view name);

struct ExperimentConfig {
  ExperimentKind experiment = ExperimentKind::table1;
  int qubits_min = 8;  ///< table1 sweeps [qubits_min, qubits_max]; others use qubits_min
  int qubits_max = 8;
  int instances = 1;
  int runs_per_instance = 1;
  std::uint64_t master_seed = 1;

  bool degenerate = false;
  int degenerate_k = 4;
  double degenerate_offset = 0.001;

  int steps = 200;              ///< fixed step budget (success, trajectories)
  long step_cap_factor = 100;   ///< table1 gives up after factor * 2^N steps

  HAParams ha{};
  SASchedule sa{};
  AdiabaticSchedule aa{};

  // tunneling sweep
  double barrier = 100.0;
  double tunnel_field = 1.0;
  double delta_min = 0.1;
  double delta_max = 100.0;
  int delta_points = 50;
  bool include_zero_detuning = true;
  double horizon = 1e4;
  double tunnel_step = 0.05;
  double tail_min = 10.0;

  unsigned workers = 0;  ///< 0 = one per hardware thread
  std::string output;
};

/// Default sizes and budgets for each experiment.
ExperimentConfig default_config(ExperimentKind kind);

void validate(const ExperimentConfig& config);

nlohmann::json to_json(const ExperimentConfig& config);

// Stream labels for derive_seed. Landscape streams are shared across
// experiments; each experiment draws run streams from its own labels.
std::string landscape_label(int n_qubits);
std::uint64_t landscape_seed(const ExperimentConfig& config, int n_qubits, int instance);

/// REM instance (made quasi-degenerate when the config asks for it).
Landscape make_instance(const ExperimentConfig& config, int n_qubits, int instance);

struct Table1Instance {
  int n_qubits = 0;
  int index = 0;
  std::uint64_t landscape_seed = 0;
  std::uint64_t run_seed = 0;
  std::optional<int> steps;  ///< empty when the step cap was hit
};

struct Table1Row {
  int n_qubits = 0;
  int instances = 0;
  int excluded = 0;
  double mean_steps = 0.0;
  double median_steps = 0.0;
  double stderr_steps = 0.0;
};

struct Table1Result {
  std::vector<Table1Instance> instances;
  std::vector<Table1Row> rows;
  FitResult mean_fit;
  FitResult median_fit;
};

struct SuccessInstance {
  int index = 0;
  std::uint64_t landscape_seed = 0;
  double p_aa = 0.0;
  int ha_successes = 0;
  int ha_runs = 0;
};

struct SuccessResult {
  std::vector<SuccessInstance> instances;
  double p_aa_mean = 0.0;
  double p_aa_stderr = 0.0;
  double p_ha = 0.0;  ///< pooled over every HA run
  double p_ha_stderr = 0.0;
  int total_runs = 0;
};

inline constexpr std::array<Algorithm, 4> kMarkovAlgorithms = {Algorithm::ha, Algorithm::sa,
                                                               Algorithm::sa2, Algorithm::hasa};

struct TrajectoryInstance {
  int index = 0;
  std::uint64_t landscape_seed = 0;
  /// best rank so far at steps 0..steps, one curve per kMarkovAlgorithms entry
  std::array<std::vector<std::uint32_t>, 4> best_rank;
};

struct TrajectoryResult {
  std::vector<TrajectoryInstance> instances;
  std::array<std::vector<double>, 4> mean_rank;
};

struct TunnelingPoint {
  double delta = 0.0;
  double rate = 0.0;
  double rate_doubled = 0.0;  ///< same quantity over twice the horizon
};

struct TunnelingResult {
  std::vector<TunnelingPoint> points;
  FitResult tail_fit;
  double max_relative_change = 0.0;
};

using ExperimentResult = std::variant<Table1Result, SuccessResult, TrajectoryResult, TunnelingResult>;

struct ExperimentReport {
  ExperimentConfig config;
  ExperimentResult result;
  double wall_seconds = 0.0;
};

ExperimentReport experiment_table1(const ExperimentConfig& config);
ExperimentReport experiment_success(const ExperimentConfig& config);
ExperimentReport experiment_trajectories(const ExperimentConfig& config);
ExperimentReport experiment_tunneling(const ExperimentConfig& config);
ExperimentReport run_experiment(const ExperimentConfig& config);

// Aggregation from per-instance data; the experiments use these, and they can
// be rerun on a stored report to check it.
std::vector<Table1Row> aggregate_table1(const std::vector<Table1Instance>& instances);
void aggregate_success(SuccessResult& result);
std::array<std::vector<double>, 4> aggregate_trajectories(
    const std::vector<TrajectoryInstance>& instances);

inline constexpr int kReportSchemaVersion = 1;

nlohmann::json to_json(const ExperimentReport& report);
void write_csv(const ExperimentReport& report, std::ostream& out);

/// Sidecar path for a CSV output: same stem, ".json" extension.
std::filesystem::path sidecar_path(const std::filesystem::path& csv_path);

/// Writes the CSV to `csv_path` and the JSON sidecar next to it.
void write_report(const ExperimentReport& report, const std::filesystem::path& csv_path);

}  // namespace hanneal
