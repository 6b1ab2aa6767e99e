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

#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <unordered_set>
#include <utility>
#include <vector>

#include <Eigen/Dense>
#include <doctest.h>
#include <json.hpp>

#include "hybrid_anneal/errors.hpp"
#include "hybrid_anneal/experiments.hpp"
#include "hybrid_anneal/parallel.hpp"
#include "hybrid_anneal/seeds.hpp"
#include "hybrid_anneal/statistics.hpp"

using namespace hanneal;

namespace {

// Least squares via Householder QR, with the textbook slope variance.
std::pair<double, double> qr_slope(const std::vector<std::pair<double, double>>& xy) {
  const auto n = static_cast<Eigen::Index>(xy.size());
  Eigen::MatrixXd a(n, 2);
  Eigen::VectorXd y(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    a(i, 0) = 1.0;
    a(i, 1) = xy[static_cast<std::size_t>(i)].first;
    y(i) = xy[static_cast<std::size_t>(i)].second;
  }
  const Eigen::VectorXd coef = a.colPivHouseholderQr().solve(y);
  const double ssr = (a * coef - y).squaredNorm();
  const Eigen::MatrixXd cov = (a.transpose() * a).inverse() * (ssr / static_cast<double>(n - 2));
  return {coef(1), std::sqrt(cov(1, 1))};
}

std::vector<std::pair<int, double>> table(std::vector<double> values) {
  std::vector<std::pair<int, double>> pts;
  for (std::size_t i = 0; i < values.size(); ++i) pts.emplace_back(8 + static_cast<int>(i), values[i]);
  return pts;
}

ExperimentConfig small(ExperimentKind kind) {
  auto c = default_config(kind);
  c.master_seed = 2024;
  c.workers = 2;
  switch (kind) {
    case ExperimentKind::table1:
      c.qubits_min = 4;
      c.qubits_max = 6;
      c.instances = 6;
      break;
    case ExperimentKind::success:
      c.qubits_min = c.qubits_max = 5;
      c.instances = 4;
      c.runs_per_instance = 3;
      c.steps = 20;
      c.aa = {40.0, 4.0, 10.0, 0.1};
      break;
    case ExperimentKind::trajectories:
      c.qubits_min = c.qubits_max = 6;
      c.instances = 5;
      c.steps = 30;
      break;
    case ExperimentKind::tunneling:
      c.delta_points = 6;
      c.delta_min = 1.0;
      c.horizon = 1000.0;
      break;
  }
  return c;
}

}  // namespace

TEST_CASE("descriptive statistics") {
  const std::vector<double> odd{3.0, 1.0, 2.0};
  const std::vector<double> even{4.0, 1.0, 3.0, 2.0};
  CHECK(mean(odd) == 2.0);
  CHECK(median(odd) == 2.0);
  CHECK(median(even) == 2.5);
  CHECK(standard_error(odd) == doctest::Approx(1.0 / std::sqrt(3.0)));
  CHECK(standard_error(std::vector<double>{5.0}) == 0.0);
}

TEST_CASE("fit_exponential_base") {
  SUBCASE("noiseless") {
    const auto exact = fit_exponential_base(table({1, 2, 4, 8, 16}));
    CHECK(exact.base_or_slope == doctest::Approx(2.0).epsilon(1e-13));
    CHECK(exact.uncertainty < 1e-12);
    const auto flat = fit_exponential_base(table({7, 7, 7}));
    CHECK(flat.base_or_slope == doctest::Approx(1.0).epsilon(1e-13));
  }
  SUBCASE("reference step counts") {
    const std::vector<double> medians{60, 100, 150, 250, 390};
    const std::vector<double> means{100, 160, 240, 390, 650};
    for (const auto* values : {&medians, &means}) {
      std::vector<std::pair<double, double>> logs;
      for (std::size_t i = 0; i < values->size(); ++i) {
        logs.emplace_back(static_cast<double>(i), std::log((*values)[i]));
      }
      const auto [slope, se] = qr_slope(logs);
      const auto fit = fit_exponential_base(table(*values));
      CHECK(fit.base_or_slope == doctest::Approx(std::exp(slope)).epsilon(1e-12));
      CHECK(fit.uncertainty == doctest::Approx(std::exp(slope) * se).epsilon(1e-10));
      CHECK(std::abs(fit.base_or_slope - 1.60) < 0.02);
    }
    const auto fit = fit_exponential_base(table(medians));
    CHECK(fit.base_or_slope == doctest::Approx(1.5935902802162958).epsilon(1e-12));
    CHECK(fit.uncertainty == doctest::Approx(0.013931027897497783).epsilon(1e-9));
  }
  SUBCASE("domain") {
    CHECK_THROWS_AS(fit_exponential_base(table({1, 0, 2})), DomainError);
    CHECK_THROWS_AS(fit_exponential_base(table({1, -2, 2})), DomainError);
    CHECK_THROWS(fit_exponential_base(table({1, 2})));
  }
}

TEST_CASE("fit_power_law") {
  std::vector<std::pair<double, double>> pts;
  for (double x : {10.0, 20.0, 50.0, 100.0}) pts.emplace_back(x, 3.0 / x);
  const auto f = fit_power_law(pts);
  CHECK(f.base_or_slope == doctest::Approx(-1.0).epsilon(1e-13));
  CHECK(f.uncertainty >= 0.0);
  CHECK(f.residual < 1e-12);
}

TEST_CASE("derive_seed") {
  CHECK(derive_seed(1, "run", 5) == derive_seed(1, "run", 5));
  CHECK(derive_seed(1, "instance", 5) != derive_seed(1, "run", 5));
  CHECK(derive_seed(1, "run", 5) != derive_seed(2, "run", 5));
  std::unordered_set<std::uint64_t> seen;
  seen.reserve(1'000'000);
  for (std::uint64_t i = 0; i < 1'000'000; ++i) seen.insert(derive_seed(42, "landscape:n=10", i));
  CHECK(seen.size() == 1'000'000);
}

TEST_CASE("parallel_for covers every index once") {
  std::vector<int> hits(1000, 0);
  parallel_for(hits.size(), 4, [&](std::size_t i) { hits[i] += 1; });
  for (int h : hits) CHECK(h == 1);
}

TEST_CASE("config validation") {
  auto c = default_config(ExperimentKind::table1);
  CHECK_NOTHROW(validate(c));
  c.instances = 0;
  CHECK_THROWS_AS(validate(c), ParameterError);
  c = default_config(ExperimentKind::table1);
  c.qubits_max = c.qubits_min - 1;
  CHECK_THROWS_AS(validate(c), SizeError);
  c = default_config(ExperimentKind::table1);
  c.step_cap_factor = 0;
  CHECK_THROWS_AS(validate(c), ParameterError);
  CHECK(experiment_from_string("tunneling") == ExperimentKind::tunneling);
  CHECK_THROWS_AS(experiment_from_string("fig9"), ParameterError);
}

TEST_CASE("instance seeds do not depend on run counts") {
  auto a = small(ExperimentKind::success);
  auto b = a;
  b.runs_per_instance = 7;
  for (int i = 0; i < 4; ++i) CHECK(landscape_seed(a, 5, i) == landscape_seed(b, 5, i));
  b.degenerate = true;
  const auto plain = make_instance(a, 5, 1);
  const auto deg = make_instance(b, 5, 1);
  CHECK(deg.seed() == plain.seed());
  CHECK(deg.ground_energy() == plain.ground_energy());
}

TEST_CASE("table1 experiment") {
  const auto c = small(ExperimentKind::table1);
  const auto rep = experiment_table1(c);
  const auto& r = std::get<Table1Result>(rep.result);
  REQUIRE(r.instances.size() == 18);
  REQUIRE(r.rows.size() == 3);
  for (const auto& i : r.instances) {
    CHECK(i.steps.has_value());
    CHECK(*i.steps >= 1);
  }
  const auto rows = aggregate_table1(r.instances);
  for (std::size_t k = 0; k < rows.size(); ++k) {
    CHECK(rows[k].mean_steps == r.rows[k].mean_steps);
    CHECK(rows[k].median_steps == r.rows[k].median_steps);
    CHECK(rows[k].excluded == 0);
  }
  CHECK(r.mean_fit.base_or_slope > 0.0);

  const auto again = experiment_table1(c);
  const auto& r2 = std::get<Table1Result>(again.result);
  for (std::size_t k = 0; k < r.instances.size(); ++k) {
    CHECK(r.instances[k].steps == r2.instances[k].steps);
    CHECK(r.instances[k].run_seed == r2.instances[k].run_seed);
  }

  SUBCASE("cap hits are excluded and counted") {
    std::vector<Table1Instance> synthetic(4);
    for (int k = 0; k < 4; ++k) {
      synthetic[k].n_qubits = 5;
      synthetic[k].index = k;
      if (k != 2) synthetic[k].steps = 10 * (k + 1);
    }
    const auto rows = aggregate_table1(synthetic);
    REQUIRE(rows.size() == 1);
    CHECK(rows[0].instances == 4);
    CHECK(rows[0].excluded == 1);
    CHECK(rows[0].median_steps == 20.0);
    CHECK(rows[0].mean_steps == doctest::Approx(70.0 / 3.0));
  }
}

TEST_CASE("success experiment") {
  const auto c = small(ExperimentKind::success);
  const auto rep = experiment_success(c);
  auto r = std::get<SuccessResult>(rep.result);
  for (const auto& i : r.instances) {
    CHECK((i.p_aa >= 0.0 && i.p_aa <= 1.0));
    CHECK(i.ha_successes <= i.ha_runs);
    CHECK(i.ha_runs == c.runs_per_instance);
  }
  const auto stored = r;
  aggregate_success(r);
  CHECK(r.p_aa_mean == stored.p_aa_mean);
  CHECK(r.p_ha == stored.p_ha);
  CHECK(r.total_runs == 12);

  const auto rep2 = experiment_success(c);
  const auto& r2 = std::get<SuccessResult>(rep2.result);
  for (std::size_t k = 0; k < r.instances.size(); ++k) {
    CHECK(r.instances[k].p_aa == r2.instances[k].p_aa);
    CHECK(r.instances[k].ha_successes == r2.instances[k].ha_successes);
  }
}

TEST_CASE("trajectories experiment") {
  const auto c = small(ExperimentKind::trajectories);
  const auto rep = experiment_trajectories(c);
  const auto& r = std::get<TrajectoryResult>(rep.result);
  for (const auto& curve : r.mean_rank) {
    REQUIRE(curve.size() == 31);
    CHECK(curve[0] == 32.0);
    for (std::size_t s = 1; s < curve.size(); ++s) CHECK(curve[s] <= curve[s - 1]);
  }
  CHECK(aggregate_trajectories(r.instances) == r.mean_rank);

  auto one_worker = c;
  one_worker.workers = 1;
  const auto rep2 = experiment_trajectories(one_worker);
  const auto& r2 = std::get<TrajectoryResult>(rep2.result);
  for (std::size_t k = 0; k < r.instances.size(); ++k) {
    CHECK(r.instances[k].best_rank == r2.instances[k].best_rank);
  }
}

TEST_CASE("tunneling experiment") {
  const auto c = small(ExperimentKind::tunneling);
  const auto rep = experiment_tunneling(c);
  const auto& r = std::get<TunnelingResult>(rep.result);
  REQUIRE(r.points.size() == 7);
  CHECK(r.points[0].delta == 0.0);
  for (const auto& p : r.points) CHECK(p.rate <= r.points[0].rate);
  CHECK(r.max_relative_change < 0.05);
}

TEST_CASE("report output") {
  const auto rep = experiment_trajectories(small(ExperimentKind::trajectories));
  const auto doc = to_json(rep);
  CHECK(doc["schema"] == "hybrid-anneal/report");
  CHECK(doc["schema_version"] == kReportSchemaVersion);
  CHECK(doc["config"]["master_seed"] == 2024);
  CHECK(doc["instances"].size() == 5);
  CHECK(doc["metadata"].contains("wall_seconds"));

  std::ostringstream csv;
  write_csv(rep, csv);
  std::istringstream lines(csv.str());
  std::string header;
  std::getline(lines, header);
  CHECK(header == "step,HA,SA,SA2,HA+SA");
  int rows = 0;
  for (std::string line; std::getline(lines, line);) ++rows;
  CHECK(rows == 31);

  CHECK(sidecar_path("out/fig3.csv") == std::filesystem::path("out/fig3.json"));
  CHECK(sidecar_path("x.json") == std::filesystem::path("x.json.json"));

  const auto dir = std::filesystem::temp_directory_path() / "hanneal_report_test";
  std::filesystem::remove_all(dir);
  write_report(rep, dir / "fig3.csv");
  std::ifstream in(dir / "fig3.json");
  const auto parsed = nlohmann::json::parse(in);
  CHECK(parsed == nlohmann::json::parse(doc.dump()));
  std::filesystem::remove_all(dir);
}
