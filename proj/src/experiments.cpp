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

#include "hybrid_anneal/experiments.hpp"

#include <chrono>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <ostream>

#include "hybrid_anneal/errors.hpp"
#include "hybrid_anneal/parallel.hpp"
#include "hybrid_anneal/seeds.hpp"
#include "hybrid_anneal/tunneling.hpp"

namespace hanneal {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::uint32_t middle_rank(int n_qubits) { return std::uint32_t{1} << (n_qubits - 1); }

}  // namespace

std::string_view to_string(ExperimentKind kind) {
  switch (kind) {
    case ExperimentKind::table1: return "table1";
    case ExperimentKind::success: return "success";
    case ExperimentKind::trajectories: return "trajectories";
    case ExperimentKind::tunneling: return "tunneling";
  }
  return "?";
}

ExperimentKind experiment_from_string(std::string_view name) {
  for (auto k : {ExperimentKind::table1, ExperimentKind::success, ExperimentKind::trajectories,
                 ExperimentKind::tunneling}) {
    if (name == to_string(k)) return k;
  }
  throw ParameterError("unknown experiment '" + std::string(name) + "'");
}

ExperimentConfig default_config(ExperimentKind kind) {
  ExperimentConfig c;
  c.experiment = kind;
  switch (kind) {
    case ExperimentKind::table1:
      c.qubits_min = 8;
      c.qubits_max = 12;
      c.instances = 1000;
      break;
    case ExperimentKind::success:
      c.qubits_min = c.qubits_max = 10;
      c.instances = 100;
      c.runs_per_instance = 10;
      break;
    case ExperimentKind::trajectories:
      c.qubits_min = c.qubits_max = 11;
      c.instances = 1000;
      break;
    case ExperimentKind::tunneling:
      c.qubits_min = c.qubits_max = 2;
      break;
  }
  return c;
}

void validate(const ExperimentConfig& c) {
  if (c.instances < 1) throw ParameterError("instances must be >= 1");
  if (c.runs_per_instance < 1) throw ParameterError("runs per instance must be >= 1");
  if (c.steps < 1) throw ParameterError("steps must be >= 1");
  if (c.experiment == ExperimentKind::tunneling) {
    validate(TwoSpinParams{0.0, c.barrier, c.tunnel_field});
    if (!(c.delta_min > 0.0) || !(c.delta_max > c.delta_min) || c.delta_points < 2) {
      throw ParameterError("detuning grid needs 0 < delta_min < delta_max and >= 2 points");
    }
    return;
  }
  if (c.qubits_min < 1 || c.qubits_max < c.qubits_min || c.qubits_max > kMaxQubits) {
    throw SizeError("qubit range must satisfy 1 <= min <= max <= " + std::to_string(kMaxQubits));
  }
  if (c.step_cap_factor < 1) throw ParameterError("step cap factor must be >= 1");
  validate(c.ha);
  validate(c.sa);
  validate(c.aa);
}

nlohmann::json to_json(const ExperimentConfig& c) {
  return {
      {"experiment", to_string(c.experiment)},
      {"qubits_min", c.qubits_min},
      {"qubits_max", c.qubits_max},
      {"instances", c.instances},
      {"runs_per_instance", c.runs_per_instance},
      {"master_seed", c.master_seed},
      {"degenerate", c.degenerate},
      {"degenerate_k", c.degenerate_k},
      {"degenerate_offset", c.degenerate_offset},
      {"steps", c.steps},
      {"step_cap_factor", c.step_cap_factor},
      {"ha",
       {{"beta", c.ha.beta},
        {"evolve_time", c.ha.evolve_time},
        {"field_min", c.ha.field_min},
        {"field_max", c.ha.field_max},
        {"tolerance", c.ha.tolerance}}},
      {"sa",
       {{"beta0", c.sa.beta0},
        {"cooling", c.sa.cooling},
        {"success_quota", c.sa.success_quota},
        {"step_cap", c.sa.step_cap}}},
      {"aa",
       {{"total_time", c.aa.total_time},
        {"decay_time", c.aa.decay_time},
        {"field", c.aa.field},
        {"step", c.aa.step},
        {"tolerance", c.aa.tolerance}}},
      {"tunneling",
       {{"barrier", c.barrier},
        {"field", c.tunnel_field},
        {"delta_min", c.delta_min},
        {"delta_max", c.delta_max},
        {"delta_points", c.delta_points},
        {"include_zero_detuning", c.include_zero_detuning},
        {"horizon", c.horizon},
        {"step", c.tunnel_step},
        {"tail_min", c.tail_min}}},
  };
}

std::string landscape_label(int n_qubits) { return "landscape:n=" + std::to_string(n_qubits); }

std::uint64_t landscape_seed(const ExperimentConfig& config, int n_qubits, int instance) {
  return derive_seed(config.master_seed, landscape_label(n_qubits),
                     static_cast<std::uint64_t>(instance));
}

Landscape make_instance(const ExperimentConfig& config, int n_qubits, int instance) {
  auto landscape = generate_rem(n_qubits, landscape_seed(config, n_qubits, instance));
  if (!config.degenerate) return landscape;
  return make_quasi_degenerate(landscape, config.degenerate_k, config.degenerate_offset);
}

// ---------------------------------------------------------------------------
// table1: steps for HA to reach the ground state from the middle level.

std::vector<Table1Row> aggregate_table1(const std::vector<Table1Instance>& instances) {
  std::vector<Table1Row> rows;
  for (const auto& inst : instances) {
    if (rows.empty() || rows.back().n_qubits != inst.n_qubits) {
      rows.push_back({});
      rows.back().n_qubits = inst.n_qubits;
    }
  }
  for (auto& row : rows) {
    std::vector<double> steps;
    for (const auto& inst : instances) {
      if (inst.n_qubits != row.n_qubits) continue;
      ++row.instances;
      if (inst.steps) {
        steps.push_back(static_cast<double>(*inst.steps));
      } else {
        ++row.excluded;
      }
    }
    if (!steps.empty()) {
      row.mean_steps = mean(steps);
      row.median_steps = median(steps);
      row.stderr_steps = standard_error(steps);
    }
  }
  return rows;
}

ExperimentReport experiment_table1(const ExperimentConfig& config) {
  validate(config);
  const auto start = Clock::now();
  const int per_n = config.instances;
  const int n_sizes = config.qubits_max - config.qubits_min + 1;

  Table1Result result;
  result.instances.resize(static_cast<std::size_t>(per_n) * n_sizes);
  MarkovParams params;
  params.ha = config.ha;
  params.stop_at_ground = true;

  parallel_for(result.instances.size(), config.workers, [&](std::size_t task) {
    const int n = config.qubits_min + static_cast<int>(task / per_n);
    const int i = static_cast<int>(task % per_n);
    auto& inst = result.instances[task];
    inst.n_qubits = n;
    inst.index = i;
    const auto landscape = make_instance(config, n, i);
    inst.landscape_seed = landscape.seed();
    inst.run_seed = derive_seed(config.master_seed, "run:table1:n=" + std::to_string(n),
                                static_cast<std::uint64_t>(i));
    Rng rng(inst.run_seed);
    const long cap = config.step_cap_factor * (long{1} << n);
    const auto traj = run_markov(Algorithm::ha, landscape, landscape.level_at_rank(middle_rank(n)),
                                 static_cast<int>(std::min<long>(cap, 1L << 30)), params, rng);
    inst.steps = traj.reached_ground_at;
  });

  result.rows = aggregate_table1(result.instances);
  std::vector<std::pair<int, double>> means;
  std::vector<std::pair<int, double>> medians;
  for (const auto& row : result.rows) {
    if (row.instances == row.excluded) continue;
    means.emplace_back(row.n_qubits, row.mean_steps);
    medians.emplace_back(row.n_qubits, row.median_steps);
  }
  if (means.size() >= 3) {
    result.mean_fit = fit_exponential_base(means);
    result.median_fit = fit_exponential_base(medians);
  }
  return {config, std::move(result), seconds_since(start)};
}

// ---------------------------------------------------------------------------
// Success probabilities at a fixed runtime: AA overlap vs HA hit rate.

void aggregate_success(SuccessResult& r) {
  std::vector<double> p_aa;
  std::vector<double> p_ha;
  int successes = 0;
  r.total_runs = 0;
  for (const auto& inst : r.instances) {
    p_aa.push_back(inst.p_aa);
    p_ha.push_back(static_cast<double>(inst.ha_successes) / inst.ha_runs);
    successes += inst.ha_successes;
    r.total_runs += inst.ha_runs;
  }
  r.p_aa_mean = mean(p_aa);
  r.p_aa_stderr = standard_error(p_aa);
  r.p_ha = static_cast<double>(successes) / r.total_runs;
  r.p_ha_stderr = standard_error(p_ha);
}

ExperimentReport experiment_success(const ExperimentConfig& config) {
  validate(config);
  const auto start = Clock::now();
  const int n = config.qubits_min;
  SuccessResult result;
  result.instances.resize(static_cast<std::size_t>(config.instances));
  MarkovParams params;
  params.ha = config.ha;
  params.stop_at_ground = true;

  parallel_for(result.instances.size(), config.workers, [&](std::size_t task) {
    const int i = static_cast<int>(task);
    auto& inst = result.instances[task];
    inst.index = i;
    const auto landscape = make_instance(config, n, i);
    inst.landscape_seed = landscape.seed();
    inst.p_aa = run_adiabatic(landscape, config.aa);
    const auto label = "run:success:n=" + std::to_string(n) + ":instance=" + std::to_string(i);
    const auto from = landscape.level_at_rank(middle_rank(n));
    inst.ha_runs = config.runs_per_instance;
    for (int r = 0; r < config.runs_per_instance; ++r) {
      Rng rng(derive_seed(config.master_seed, label, static_cast<std::uint64_t>(r)));
      const auto traj = run_markov(Algorithm::ha, landscape, from, config.steps, params, rng);
      if (traj.reached_ground_at) ++inst.ha_successes;
    }
  });

  aggregate_success(result);
  return {config, std::move(result), seconds_since(start)};
}

// ---------------------------------------------------------------------------
// Lowest level found so far, averaged over instances, for the four Markov schemes.

std::array<std::vector<double>, 4> aggregate_trajectories(
    const std::vector<TrajectoryInstance>& instances) {
  std::array<std::vector<double>, 4> mean_rank;
  if (instances.empty()) return mean_rank;
  for (std::size_t a = 0; a < 4; ++a) {
    const std::size_t len = instances.front().best_rank[a].size();
    mean_rank[a].assign(len, 0.0);
    for (const auto& inst : instances) {
      for (std::size_t s = 0; s < len; ++s) mean_rank[a][s] += inst.best_rank[a][s];
    }
    for (double& v : mean_rank[a]) v /= static_cast<double>(instances.size());
  }
  return mean_rank;
}

ExperimentReport experiment_trajectories(const ExperimentConfig& config) {
  validate(config);
  const auto start = Clock::now();
  const int n = config.qubits_min;
  TrajectoryResult result;
  result.instances.resize(static_cast<std::size_t>(config.instances));
  MarkovParams params;
  params.ha = config.ha;
  params.sa = config.sa;
  // once rank 1 is held the curve is flat, so the remainder is filled in
  params.stop_at_ground = true;

  parallel_for(result.instances.size(), config.workers, [&](std::size_t task) {
    const int i = static_cast<int>(task);
    auto& inst = result.instances[task];
    inst.index = i;
    const auto landscape = make_instance(config, n, i);
    inst.landscape_seed = landscape.seed();
    const auto from = landscape.level_at_rank(middle_rank(n));
    for (std::size_t a = 0; a < kMarkovAlgorithms.size(); ++a) {
      const auto algorithm = kMarkovAlgorithms[a];
      const auto label = "run:trajectories:n=" + std::to_string(n) + ":" +
                         std::string(to_string(algorithm));
      Rng rng(derive_seed(config.master_seed, label, static_cast<std::uint64_t>(i)));
      const auto traj = run_markov(algorithm, landscape, from, config.steps, params, rng);
      auto& curve = inst.best_rank[a];
      curve.assign(static_cast<std::size_t>(config.steps) + 1, 1u);
      curve[0] = traj.start_rank;
      for (const auto& rec : traj.records) curve[static_cast<std::size_t>(rec.step_index)] = rec.best_rank_so_far;
    }
  });

  result.mean_rank = aggregate_trajectories(result.instances);
  return {config, std::move(result), seconds_since(start)};
}

// ---------------------------------------------------------------------------
// Two-spin tunneling rate against detuning.

ExperimentReport experiment_tunneling(const ExperimentConfig& config) {
  validate(config);
  const auto start = Clock::now();
  std::vector<double> grid;
  if (config.include_zero_detuning) grid.push_back(0.0);
  const double lo = std::log10(config.delta_min);
  const double hi = std::log10(config.delta_max);
  for (int k = 0; k < config.delta_points; ++k) {
    grid.push_back(std::pow(10.0, lo + (hi - lo) * k / (config.delta_points - 1)));
  }

  TunnelingResult result;
  result.points.resize(grid.size());
  parallel_for(grid.size(), config.workers, [&](std::size_t k) {
    const TwoSpinParams p{grid[k], config.barrier, config.tunnel_field};
    result.points[k] = {grid[k], tunneling_rate(p, config.horizon, config.tunnel_step),
                        tunneling_rate(p, 2.0 * config.horizon, config.tunnel_step)};
  });

  std::vector<std::pair<double, double>> tail;
  for (const auto& pt : result.points) {
    if (pt.delta >= config.tail_min && pt.rate > 0.0) tail.emplace_back(pt.delta, pt.rate);
    if (pt.rate > 0.0) {
      result.max_relative_change = std::max(result.max_relative_change,
                                            std::abs(pt.rate_doubled - pt.rate) / pt.rate);
    }
  }
  if (tail.size() >= 2) result.tail_fit = fit_power_law(tail);
  return {config, std::move(result), seconds_since(start)};
}

ExperimentReport run_experiment(const ExperimentConfig& config) {
  switch (config.experiment) {
    case ExperimentKind::table1: return experiment_table1(config);
    case ExperimentKind::success: return experiment_success(config);
    case ExperimentKind::trajectories: return experiment_trajectories(config);
    case ExperimentKind::tunneling: return experiment_tunneling(config);
  }
  throw ParameterError("unknown experiment");
}

// ---------------------------------------------------------------------------
// Output

namespace {

nlohmann::json fit_json(const FitResult& f) {
  return {{"value", f.base_or_slope}, {"uncertainty", f.uncertainty}, {"residual", f.residual}};
}

struct JsonBody {
  nlohmann::json& doc;

  void operator()(const Table1Result& r) const {
    auto& inst = doc["instances"] = nlohmann::json::array();
    int excluded = 0;
    for (const auto& i : r.instances) {
      inst.push_back({{"n_qubits", i.n_qubits},
                      {"index", i.index},
                      {"landscape_seed", i.landscape_seed},
                      {"run_seed", i.run_seed},
                      {"steps", i.steps ? nlohmann::json(*i.steps) : nlohmann::json(nullptr)}});
      if (!i.steps) ++excluded;
    }
    auto& rows = doc["aggregates"]["rows"] = nlohmann::json::array();
    for (const auto& row : r.rows) {
      rows.push_back({{"n_qubits", row.n_qubits},
                      {"instances", row.instances},
                      {"excluded", row.excluded},
                      {"mean_steps", row.mean_steps},
                      {"median_steps", row.median_steps},
                      {"stderr_steps", row.stderr_steps}});
    }
    doc["fits"] = {{"mean", fit_json(r.mean_fit)}, {"median", fit_json(r.median_fit)}};
    doc["metadata"]["excluded_instances"] = excluded;
  }

  void operator()(const SuccessResult& r) const {
    auto& inst = doc["instances"] = nlohmann::json::array();
    for (const auto& i : r.instances) {
      inst.push_back({{"index", i.index},
                      {"landscape_seed", i.landscape_seed},
                      {"p_aa", i.p_aa},
                      {"ha_successes", i.ha_successes},
                      {"ha_runs", i.ha_runs}});
    }
    doc["aggregates"] = {{"p_aa_mean", r.p_aa_mean},
                         {"p_aa_stderr", r.p_aa_stderr},
                         {"p_ha", r.p_ha},
                         {"p_ha_stderr", r.p_ha_stderr},
                         {"total_runs", r.total_runs}};
  }

  void operator()(const TrajectoryResult& r) const {
    auto& inst = doc["instances"] = nlohmann::json::array();
    for (const auto& i : r.instances) {
      nlohmann::json curves;
      for (std::size_t a = 0; a < 4; ++a) {
        curves[std::string(to_string(kMarkovAlgorithms[a]))] = i.best_rank[a];
      }
      inst.push_back({{"index", i.index}, {"landscape_seed", i.landscape_seed}, {"best_rank", curves}});
    }
    nlohmann::json curves;
    for (std::size_t a = 0; a < 4; ++a) {
      curves[std::string(to_string(kMarkovAlgorithms[a]))] = r.mean_rank[a];
    }
    doc["aggregates"] = {{"mean_best_rank", curves}};
  }

  void operator()(const TunnelingResult& r) const {
    auto& pts = doc["instances"] = nlohmann::json::array();
    for (const auto& p : r.points) {
      pts.push_back({{"delta", p.delta}, {"rate", p.rate}, {"rate_doubled_horizon", p.rate_doubled}});
    }
    doc["aggregates"] = {{"max_relative_change", r.max_relative_change}};
    doc["fits"] = {{"tail_slope", fit_json(r.tail_fit)}};
  }
};

struct CsvBody {
  std::ostream& out;

  void operator()(const Table1Result& r) const {
    out << "n_qubits,instances,excluded,mean_steps,median_steps,stderr_steps\n";
    for (const auto& row : r.rows) {
      out << row.n_qubits << ',' << row.instances << ',' << row.excluded << ',' << row.mean_steps
          << ',' << row.median_steps << ',' << row.stderr_steps << '\n';
    }
  }

  void operator()(const SuccessResult& r) const {
    out << "instance,landscape_seed,p_aa,ha_successes,ha_runs\n";
    for (const auto& i : r.instances) {
      out << i.index << ',' << i.landscape_seed << ',' << i.p_aa << ',' << i.ha_successes << ','
          << i.ha_runs << '\n';
    }
  }

  void operator()(const TrajectoryResult& r) const {
    out << "step,HA,SA,SA2,HA+SA\n";
    const std::size_t len = r.mean_rank[0].size();
    for (std::size_t s = 0; s < len; ++s) {
      out << s;
      for (std::size_t a = 0; a < 4; ++a) out << ',' << r.mean_rank[a][s];
      out << '\n';
    }
  }

  void operator()(const TunnelingResult& r) const {
    out << "delta,rate,rate_doubled_horizon\n";
    for (const auto& p : r.points) {
      out << p.delta << ',' << p.rate << ',' << p.rate_doubled << '\n';
    }
  }
};

}  // namespace

nlohmann::json to_json(const ExperimentReport& report) {
  nlohmann::json doc;
  doc["schema"] = "hybrid-anneal/report";
  doc["schema_version"] = kReportSchemaVersion;
  doc["experiment"] = to_string(report.config.experiment);
  doc["config"] = to_json(report.config);
  std::visit(JsonBody{doc}, report.result);
  doc["metadata"]["wall_seconds"] = report.wall_seconds;
  return doc;
}

void write_csv(const ExperimentReport& report, std::ostream& out) {
  const auto precision = out.precision(17);
  std::visit(CsvBody{out}, report.result);
  out.precision(precision);
}

std::filesystem::path sidecar_path(const std::filesystem::path& csv_path) {
  auto p = csv_path;
  if (p.extension() == ".json") p += ".json";
  else p.replace_extension(".json");
  return p;
}

void write_report(const ExperimentReport& report, const std::filesystem::path& csv_path) {
  if (csv_path.has_parent_path()) std::filesystem::create_directories(csv_path.parent_path());
  std::ofstream csv(csv_path);
  if (!csv) throw Error("cannot open " + csv_path.string() + " for writing");
  write_csv(report, csv);
  std::ofstream json(sidecar_path(csv_path));
  if (!json) throw Error("cannot open " + sidecar_path(csv_path).string() + " for writing");
  json << std::setw(2) << to_json(report) << '\n';
}

}  // namespace hanneal
