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

// hybrid-anneal: runs one benchmark experiment and writes CSV + JSON sidecar.

#include <cstdio>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "hybrid_anneal/errors.hpp"
#include "hybrid_anneal/experiments.hpp"

using namespace hanneal;

namespace {

// "8" or "8-12"
void parse_qubits(const std::string& text, ExperimentConfig& config) {
  const auto dash = text.find('-');
  try {
    if (dash == std::string::npos) {
      config.qubits_min = config.qubits_max = std::stoi(text);
    } else {
      config.qubits_min = std::stoi(text.substr(0, dash));
      config.qubits_max = std::stoi(text.substr(dash + 1));
    }
  } catch (const std::exception&) {
    throw ParameterError("--qubits expects N or MIN-MAX, got '" + text + "'");
  }
}

void print_summary(const ExperimentReport& report) {
  std::visit(
      [](const auto& r) {
        using T = std::decay_t<decltype(r)>;
        if constexpr (std::is_same_v<T, Table1Result>) {
          for (const auto& row : r.rows) {
            std::printf("N=%2d  mean %8.1f  median %8.1f  (%d instances, %d capped)\n",
                        row.n_qubits, row.mean_steps, row.median_steps, row.instances,
                        row.excluded);
          }
          std::printf("fit b: mean %.3f +- %.3f, median %.3f +- %.3f\n", r.mean_fit.base_or_slope,
                      r.mean_fit.uncertainty, r.median_fit.base_or_slope,
                      r.median_fit.uncertainty);
        } else if constexpr (std::is_same_v<T, SuccessResult>) {
          std::printf("p_AA = %.4f +- %.4f   p_HA = %.4f +- %.4f  (%zu instances, %d runs)\n",
                      r.p_aa_mean, r.p_aa_stderr, r.p_ha, r.p_ha_stderr, r.instances.size(),
                      r.total_runs);
        } else if constexpr (std::is_same_v<T, TrajectoryResult>) {
          const auto last = r.mean_rank[0].size() - 1;
          std::printf("final mean best rank: HA %.2f  SA %.2f  SA2 %.2f  HA+SA %.2f\n",
                      r.mean_rank[0][last], r.mean_rank[1][last], r.mean_rank[2][last],
                      r.mean_rank[3][last]);
        } else {
          std::printf("tail slope %.4f +- %.4f, max horizon-doubling change %.3g\n",
                      r.tail_fit.base_or_slope, r.tail_fit.uncertainty, r.max_relative_change);
        }
      },
      report.result);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hybrid quantum-classical annealing benchmarks on the random energy model"};
  app.set_version_flag("--version", "hybrid-anneal 1.0");

  std::string experiment;
  std::string qubits;
  int instances = 0;
  int runs = 0;
  std::uint64_t seed = 1;
  std::string out;
  int steps = 200;
  double beta = 10.0;
  double evolve_time = 10.0;
  double t1 = 2000.0;
  double t0 = 200.0;
  double aa_field = 10.0;
  double dt = 0.1;
  unsigned workers = 0;

  app.add_option("experiment", experiment, "table1 | success | trajectories | tunneling")
      ->required()
      ->check(CLI::IsMember({"table1", "success", "trajectories", "tunneling"}));
  auto* o_qubits = app.add_option("--qubits", qubits, "qubit count N, or a range MIN-MAX for table1");
  auto* o_instances = app.add_option("--instances", instances, "landscape instances")
                          ->check(CLI::PositiveNumber);
  auto* o_runs = app.add_option("--runs", runs, "HA runs per instance (success)")
                     ->check(CLI::PositiveNumber);
  app.add_option("--seed", seed, "master seed");
  auto* o_degenerate = app.add_flag("--degenerate", "lift the four lowest excitations to E_GS + 0.001");
  app.add_option("--out", out, "CSV output path; a .json sidecar is written next to it");
  auto* o_steps = app.add_option("--steps", steps, "step budget per run")->check(CLI::PositiveNumber);
  auto* o_beta = app.add_option("--beta", beta, "HA inverse temperature");
  auto* o_time = app.add_option("--evolve-time", evolve_time, "HA evolution time per step");
  auto* o_t1 = app.add_option("--t1", t1, "adiabatic total time");
  auto* o_t0 = app.add_option("--t0", t0, "adiabatic field decay time");
  auto* o_field = app.add_option("--aa-field", aa_field, "adiabatic initial field");
  auto* o_dt = app.add_option("--dt", dt, "adiabatic integration step");
  app.add_option("--workers", workers, "worker threads (0 = all cores)");

  CLI11_PARSE(app, argc, argv);

  try {
    auto config = default_config(experiment_from_string(experiment));
    config.master_seed = seed;
    if (*o_qubits) parse_qubits(qubits, config);
    if (*o_instances) config.instances = instances;
    if (*o_runs) config.runs_per_instance = runs;
    if (*o_degenerate) config.degenerate = true;
    if (*o_steps) config.steps = steps;
    if (*o_beta) config.ha.beta = beta;
    if (*o_time) config.ha.evolve_time = evolve_time;
    if (*o_t1) config.aa.total_time = t1;
    if (*o_t0) config.aa.decay_time = t0;
    if (*o_field) config.aa.field = aa_field;
    if (*o_dt) config.aa.step = dt;
    config.workers = workers;
    config.output = out.empty() ? experiment + ".csv" : out;

    const auto report = run_experiment(config);
    write_report(report, config.output);
    print_summary(report);
    std::printf("wrote %s and %s (%.1f s)\n", config.output.c_str(),
                sidecar_path(config.output).string().c_str(), report.wall_seconds);
  } catch (const std::exception& e) {
    std::cerr << "hybrid-anneal: error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
