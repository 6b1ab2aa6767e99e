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

// Acceptance suite. Runs each criterion at its full size and prints one
// PASS/FAIL line per criterion. Exit status is nonzero if any criterion fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <set>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "hybrid_anneal/annealers.hpp"
#include "hybrid_anneal/dynamics.hpp"
#include "hybrid_anneal/experiments.hpp"
#include "support/chi_square.hpp"
#include "support/dense_oracle.hpp"

using namespace hanneal;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

struct Context {
  unsigned workers = 0;
  std::filesystem::path report_dir;
};

std::string fmt(const char* format, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, format, args...);
  return buf;
}

void note(const std::string& line) { std::fprintf(stderr, "  %s\n", line.c_str()); }

void save(const Context& ctx, const ExperimentReport& report, const std::string& name) {
  if (ctx.report_dir.empty()) return;
  write_report(report, ctx.report_dir / (name + ".csv"));
}

StateVector random_state(int n, Rng& rng) {
  Amplitudes amps(std::size_t{1} << n);
  for (auto& a : amps) a = Complex(rng.normal(), rng.normal());
  return StateVector::normalized(n, std::move(amps));
}

// 1. Step counts of HA from the middle level, N = 8..12.
Outcome table1(const Context& ctx) {
  auto c = default_config(ExperimentKind::table1);
  c.instances = 500;
  c.master_seed = 1;
  c.workers = ctx.workers;
  const auto report = experiment_table1(c);
  save(ctx, report, "table1");
  const auto& r = std::get<Table1Result>(report.result);

  const double target[] = {60, 100, 150, 250, 390};
  bool pass = true;
  std::string detail = "medians";
  for (std::size_t k = 0; k < r.rows.size(); ++k) {
    const auto& row = r.rows[k];
    const double rel = row.median_steps / target[k] - 1.0;
    pass = pass && std::abs(rel) <= 0.35 && row.excluded == 0;
    detail += fmt(" N=%d:%.1f(%+.0f%%)", row.n_qubits, row.median_steps, 100.0 * rel);
    note(fmt("N=%d mean=%.1f median=%.1f se=%.1f excluded=%d", row.n_qubits, row.mean_steps,
             row.median_steps, row.stderr_steps, row.excluded));
  }
  const double b_mean = r.mean_fit.base_or_slope;
  const double b_median = r.median_fit.base_or_slope;
  pass = pass && b_mean >= 1.45 && b_mean <= 1.75 && b_median >= 1.45 && b_median <= 1.75;
  detail += fmt("; b(mean)=%.3f+-%.3f b(median)=%.3f+-%.3f", b_mean, r.mean_fit.uncertainty,
                b_median, r.median_fit.uncertainty);
  return {pass, detail};
}

SuccessResult success_run(const Context& ctx, bool degenerate) {
  auto c = default_config(ExperimentKind::success);
  c.instances = 100;
  c.runs_per_instance = 10;
  c.master_seed = 2;
  c.degenerate = degenerate;
  c.workers = ctx.workers;
  const auto report = experiment_success(c);
  save(ctx, report, degenerate ? "success_degenerate" : "success");
  return std::get<SuccessResult>(report.result);
}

// 2 and 3 share the plain run on one instance set.
struct SuccessPair {
  SuccessResult plain;
  SuccessResult degenerate;
};

const SuccessPair& success_pair(const Context& ctx) {
  static const SuccessPair pair{success_run(ctx, false), success_run(ctx, true)};
  return pair;
}

Outcome success_plain(const Context& ctx) {
  const auto& r = success_pair(ctx).plain;
  const bool pass = r.p_aa_mean >= 0.73 && r.p_aa_mean <= 0.93 && r.p_ha >= 0.61 &&
                    r.p_ha <= 0.81 && r.total_runs >= 1000 && r.instances.size() >= 100;
  return {pass, fmt("p_AA=%.3f+-%.3f over %zu instances, p_HA=%.3f over %d runs", r.p_aa_mean,
                    r.p_aa_stderr, r.instances.size(), r.p_ha, r.total_runs)};
}

Outcome success_degenerate(const Context& ctx) {
  const auto& [plain, deg] = success_pair(ctx);
  const bool pass = deg.p_aa_mean <= 0.45 && deg.p_ha >= 0.78 &&
                    deg.p_aa_mean < plain.p_aa_mean && deg.p_ha > plain.p_ha;
  return {pass, fmt("p_AA=%.3f (plain %.3f), p_HA=%.3f (plain %.3f)", deg.p_aa_mean,
                    plain.p_aa_mean, deg.p_ha, plain.p_ha)};
}

// 4. Lowest level found by HA, SA, SA2 and HA+SA at N = 11.
Outcome trajectories(const Context& ctx) {
  auto c = default_config(ExperimentKind::trajectories);
  c.instances = 500;
  c.master_seed = 3;
  c.workers = ctx.workers;
  const auto report = experiment_trajectories(c);
  save(ctx, report, "trajectories");
  const auto& m = std::get<TrajectoryResult>(report.result).mean_rank;
  const auto& ha = m[0];
  const auto& sa = m[1];
  const auto& sa2 = m[2];
  const auto& hasa = m[3];

  int violations = 0;
  for (std::size_t s = 0; s < ha.size(); ++s) violations += hasa[s] <= ha[s] ? 0 : 1;
  const bool ordering = violations == 0;
  const bool sa_range = sa.back() >= 40.0 && sa.back() <= 130.0;
  const bool ha_final = ha.back() <= 5.0;
  const bool sa2_vs_ha = sa2.back() > ha.back();
  for (std::size_t s : {10, 25, 50, 100, 150, 200}) {
    note(fmt("step %3zu: HA %.2f SA %.2f SA2 %.2f HA+SA %.2f", s, ha[s], sa[s], sa2[s], hasa[s]));
  }
  return {ordering && sa_range && ha_final && sa2_vs_ha,
          fmt("HA+SA<=HA at every step: %s (%d violations); final SA %.2f in [40,130]: %s; "
              "final HA %.2f <= 5: %s; final SA2 %.2f > HA: %s",
              ordering ? "yes" : "no", violations, sa.back(), sa_range ? "yes" : "no", ha.back(),
              ha_final ? "yes" : "no", sa2.back(), sa2_vs_ha ? "yes" : "no")};
}

// 5. Two-spin tunneling against detuning.
Outcome tunneling(const Context& ctx) {
  auto c = default_config(ExperimentKind::tunneling);
  c.delta_min = 10.0;
  c.delta_max = 100.0;
  c.delta_points = 30;
  c.workers = ctx.workers;
  const auto report = experiment_tunneling(c);
  save(ctx, report, "tunneling");
  const auto& r = std::get<TunnelingResult>(report.result);
  const double slope = r.tail_fit.base_or_slope;
  const bool pass = std::abs(slope + 1.0) <= 0.1 && r.max_relative_change < 0.01;
  return {pass, fmt("tail slope %.4f+-%.4f over [10,100]; max change on doubling horizon %.5f",
                    slope, r.tail_fit.uncertainty, r.max_relative_change)};
}

// 6. Krylov propagation against dense diagonalization.
Outcome oracle() {
  Rng rng(6);
  double worst = 0.0;
  for (int trial = 0; trial < 50; ++trial) {
    const int n = 1 + static_cast<int>(rng.index(6));
    const auto l = generate_rem(n, 1000 + static_cast<std::uint64_t>(trial));
    const double field = rng.uniform();
    const double t = std::pow(10.0, -1.0 + 3.0 * rng.uniform());
    const auto s = random_state(n, rng);
    const auto krylov = evolve(l, {field, t, 1e-10}, s);
    const auto dense = testing::DensePropagator(l, field).apply(t, testing::to_eigen(s.amplitudes()));
    worst = std::max(worst, (testing::to_eigen(krylov.amplitudes()) - dense).norm());
  }
  return {worst <= 1e-8, fmt("max 2-norm difference %.2e over 50 triples", worst)};
}

// 7. Norm and energy conservation.
Outcome conservation() {
  Rng rng(7);
  double worst_call = 0.0;
  double worst_energy = 0.0;
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 4 + trial % 7;
    const auto l = generate_rem(n, 700 + static_cast<std::uint64_t>(trial));
    const double field = rng.uniform();
    const auto s = random_state(n, rng);
    EvolveStats st;
    const auto out = evolve(l, {field, 10.0 * (1 + trial % 5), 1e-10}, s, &st);
    worst_call = std::max(worst_call, st.norm_correction);
    worst_energy = std::max(worst_energy,
                            std::abs(expectation(l, field, out) - expectation(l, field, s)));
  }
  AdiabaticStats aa;
  const auto l = generate_rem(10, 77);
  const auto final_state = evolve_adiabatic(l, AdiabaticSchedule{}, &aa);
  const double final_norm = std::abs(final_state.norm() - 1.0);
  const bool pass = worst_call <= 1e-9 && aa.total_norm_correction <= 1e-7 &&
                    final_norm <= 1e-7 && worst_energy <= 1e-7;
  return {pass, fmt("max per-call norm drift %.2e; AA (N=10, %d steps) cumulative drift %.2e; "
                    "max <H> change %.2e",
                    worst_call, aa.steps, aa.total_norm_correction, worst_energy)};
}

// 8. Measurement statistics.
Outcome born_rule() {
  Rng rng(20260101);
  double min_p = 1.0;
  for (int trial = 0; trial < 10; ++trial) {
    const auto s = random_state(1 + trial % 4, rng);
    std::vector<long> counts(s.dimension(), 0);
    std::vector<double> probs(s.dimension());
    for (std::size_t a = 0; a < s.dimension(); ++a) probs[a] = std::norm(s[a]);
    for (int i = 0; i < 40000; ++i) ++counts[measure(s, rng).bits];
    min_p = std::min(min_p, testing::chi_square_p_value(counts, probs));
  }
  return {min_p > 0.01, fmt("smallest chi-square p-value %.4f over 10 states", min_p)};
}

// 9. Metropolis frequencies.
Outcome metropolis() {
  struct Case {
    double delta_e;
    double beta;
  };
  const Case cases[] = {{0.1, 10.0}, {-1.0, 0.1}, {-1.0, 1.0}, {-1.0, 10.0}, {-1.0, 1e6}, {0.5, 1.0}};
  Rng rng(9);
  bool pass = true;
  std::string detail;
  for (const auto& c : cases) {
    int hits = 0;
    for (int i = 0; i < 20000; ++i) hits += metropolis_accept(c.delta_e, c.beta, rng) ? 1 : 0;
    const double freq = hits / 20000.0;
    const double expected = std::min(1.0, std::exp(-c.beta * c.delta_e));
    pass = pass && std::abs(freq - expected) <= 0.01;
    detail += fmt("%s(%g,%g):%.4f/%.4f", detail.empty() ? "" : " ", c.delta_e, c.beta, freq, expected);
  }
  return {pass, detail};
}

// 10. Bit-identical reruns, also across worker counts.
Outcome determinism() {
  std::vector<ExperimentConfig> configs;
  auto t1 = default_config(ExperimentKind::table1);
  t1.qubits_min = 6;
  t1.qubits_max = 8;
  t1.instances = 40;
  configs.push_back(t1);
  auto su = default_config(ExperimentKind::success);
  su.qubits_min = su.qubits_max = 7;
  su.instances = 10;
  su.runs_per_instance = 5;
  su.aa.total_time = 200.0;
  su.aa.decay_time = 20.0;
  su.degenerate = true;
  configs.push_back(su);
  auto tr = default_config(ExperimentKind::trajectories);
  tr.qubits_min = tr.qubits_max = 8;
  tr.instances = 20;
  configs.push_back(tr);
  auto tu = default_config(ExperimentKind::tunneling);
  tu.delta_points = 8;
  configs.push_back(tu);

  std::string detail;
  bool pass = true;
  for (auto c : configs) {
    c.master_seed = 10;
    c.workers = 1;
    const auto a = to_json(run_experiment(c));
    c.workers = 3;
    const auto b = to_json(run_experiment(c));
    const bool same = a["instances"].dump() == b["instances"].dump() &&
                      a["aggregates"].dump() == b["aggregates"].dump();
    pass = pass && same;
    detail += fmt("%s%s:%s", detail.empty() ? "" : " ", std::string(to_string(c.experiment)).c_str(),
                  same ? "identical" : "DIFFERENT");
  }
  return {pass, detail};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"acceptance criteria"};
  std::vector<int> only;
  Context ctx;
  std::string report_dir = "acceptance_reports";
  app.add_option("--only", only, "run just these criteria (1-10)")->delimiter(',');
  app.add_option("--workers", ctx.workers, "worker threads (0 = all cores)");
  app.add_option("--report-dir", report_dir, "where to write experiment reports ('' to skip)");
  CLI11_PARSE(app, argc, argv);
  ctx.report_dir = report_dir;

  struct Criterion {
    int id;
    const char* name;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria = {
      {1, "table1 step counts", [&] { return table1(ctx); }},
      {2, "success rates", [&] { return success_plain(ctx); }},
      {3, "quasi-degenerate success rates", [&] { return success_degenerate(ctx); }},
      {4, "lowest-level trajectories", [&] { return trajectories(ctx); }},
      {5, "tunneling sweep", [&] { return tunneling(ctx); }},
      {6, "Krylov vs dense propagator", oracle},
      {7, "unitarity and conservation", conservation},
      {8, "Born-rule sampling", born_rule},
      {9, "Metropolis acceptance", metropolis},
      {10, "determinism", determinism},
  };

  const std::set<int> selected(only.begin(), only.end());
  int failures = 0;
  for (const auto& c : criteria) {
    if (!selected.empty() && !selected.count(c.id)) continue;
    std::fprintf(stderr, "[%2d] %s ...\n", c.id, c.name);
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("error: ") + e.what()};
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (!o.pass) ++failures;
    std::printf("%s criterion %d (%s): %s [%.1fs]\n", o.pass ? "PASS" : "FAIL", c.id, c.name,
                o.detail.c_str(), secs);
    std::fflush(stdout);
  }
  return failures == 0 ? 0 : 1;
}
