#include <cmath>
#include <vector>

#include "doctest.h"
#include "qcross/classical.hpp"
#include "qcross/crossover.hpp"
#include "qcross/errors.hpp"

using namespace qcross;

TEST_CASE("success probability scaling") {
  const QaoaScalingModel model;
  for (int n : {50, 179, 300}) {
    for (double p : {71.0, 623.0}) {
      CHECK(success_prob(n, p, model) ==
            doctest::Approx(std::exp2(-0.69 * std::pow(p, -0.32) * n)).epsilon(1e-12));
    }
  }
  CHECK_THROWS_AS(success_prob(0, 623.0, model), parameter_error);
  CHECK_THROWS_AS(success_prob(100, 0.5, model), parameter_error);
}

TEST_CASE("amplification schedule spends exactly the query bound") {
  const double P = success_prob(179, 623.0, {});
  const AaSchedule sched = aa_schedule(P);
  CHECK(sched.base_rounds == 185);
  CHECK(sched.overhead == 4);
  CHECK(sched.query_bound() == 740);
  CHECK(sched.total_queries() == sched.query_bound());
  REQUIRE(!sched.stages.empty());
  CHECK(sched.stages[0].rounds == 0);
  for (std::size_t i = 1; i < sched.stages.size(); ++i) {
    CHECK(sched.stages[i].rounds == std::int64_t{1} << (i - 1));
  }
  for (const AaStage& st : sched.stages) CHECK(st.reps >= 1);
}

TEST_CASE("amplification schedule succeeds with probability at least 1 - delta") {
  // Worst case over the amplitude: every repetition of stage with m rounds
  // hits independently with probability sin^2((2m+1) theta).
  for (double logP = -8.0; logP <= -0.5; logP += 0.25) {
    const double P = std::pow(10.0, logP);
    const AaSchedule sched = aa_schedule(P);
    CHECK(sched.total_queries() == sched.query_bound());
    const double theta = std::asin(std::sqrt(P));
    double fail = 1.0;
    for (const AaStage& st : sched.stages) {
      const double hit =
          std::pow(std::sin(static_cast<double>(2 * st.rounds + 1) * theta), 2.0);
      fail *= std::pow(1.0 - hit, static_cast<double>(st.reps));
    }
    CHECK(1.0 - fail >= 1.0 - 1.0 / 16.0);
  }
  CHECK_THROWS_AS(aa_schedule(0.0), parameter_error);
  CHECK_THROWS_AS(aa_schedule(0.5, 1.0), parameter_error);
}

TEST_CASE("optimal layer count minimizes the serial-time proxy") {
  const QaoaScalingModel model;
  auto proxy = [&](double p, int n) {
    return std::log(p) + 0.5 * model.a * std::pow(p, -model.b_exp) * n * std::log(2.0);
  };
  for (int n : {100, 179, 250}) {
    const std::int64_t p = optimal_p(n, model);
    const double at = proxy(static_cast<double>(p), n);
    CHECK(at <= proxy(static_cast<double>(p) * 1.02, n));
    CHECK(at <= proxy(static_cast<double>(p) * 0.98, n));
  }
  CHECK_THROWS_AS(optimal_p(0, model), parameter_error);
}

TEST_CASE("resource estimate chain at p=623, n=179") {
  const EngineConfig config;
  const ResourceEstimate est = quantum_tts(179, 623.0, config);
  CHECK(est.success == doctest::Approx(1.805e-5).epsilon(1e-3));
  CHECK(est.base_rounds == 185);
  CHECK(est.overhead == 4);
  CHECK(est.m == 31504);
  CHECK(est.c == 2112);
  CHECK(est.s == 15);
  CHECK(est.eta_eff == 22);
  CHECK(est.eps_T == doctest::Approx(6.46e-14).epsilon(0.01));
  CHECK(est.delta == doctest::Approx(1.41142e-7).epsilon(1e-3));
  CHECK(est.N_T == 23);
  CHECK(est.n_P == 25);
  CHECK(est.lambda == 36);
  CHECK(est.n_jobs == 540);
  CHECK(est.ancillas == 28080);
  CHECK(est.per_round_cycles == doctest::Approx(2723124.765).epsilon(1e-6));
  CHECK(est.logical_depth ==
        doctest::Approx(185.0 * est.per_round_cycles).epsilon(1e-12));
  CHECK(est.nonclifford_total == doctest::Approx(185.0 * 1183760881.0).epsilon(1e-9));
  CHECK(est.g_nc_budget == doctest::Approx(4.0 * est.nonclifford_total));
  CHECK(est.machine.d == 28);
  CHECK(est.machine.n_decoders == 33659);
  CHECK(est.machine.physical_qubits == doctest::Approx(73794112.0));
  CHECK(est.t_q_seconds ==
        doctest::Approx(4.0 * est.logical_depth * 28e-6).epsilon(1e-12));
  CHECK(est.t_q_seconds / 3600.0 == doctest::Approx(15.673).epsilon(1e-3));
}

TEST_CASE("classical attachment and crossover at p=623") {
  const EngineConfig config;
  const CrossoverPoint pt = find_crossover(623.0, config);
  CHECK(pt.quantum.n == 179);
  CHECK(pt.n_cores == 46);
  CHECK(pt.watts == doctest::Approx(269.272));
  CHECK(pt.speedup == doctest::Approx(35.4419).epsilon(1e-4));
  CHECK(pt.quantum.t_q_seconds <= pt.t_c_seconds);
  // One variable fewer and the quantum side still loses.
  const CrossoverPoint before = attach_classical(quantum_tts(178, 623.0, config), config);
  CHECK(before.quantum.t_q_seconds > before.t_c_seconds);
}

TEST_CASE("eta clamps to the level-1 latency") {
  EngineConfig config;
  config.colors = 40000;  // c = min(colors, m) = m, so s = 1 and L1 = 11
  const ResourceEstimate est = quantum_tts(179, 623.0, config);
  CHECK(est.s == 1);
  CHECK(est.eta_eff == 11);
}

TEST_CASE("results oracle uses the aggregate form") {
  EngineConfig config;
  config.results_oracle = true;
  const ResourceEstimate est = quantum_tts(179, 623.0, config);
  CHECK(est.times.t_oracle ==
        doctest::Approx(4.0 * 2112.0 * std::log2(8.0 * 31504.0 / 2112.0)));
}

TEST_CASE("sweep shapes") {
  const EngineConfig config;

  const SweepTable tau = sweep(SweepKind::tau_tradeoff, config);
  CHECK(tau.columns.size() == 6);
  CHECK(tau.rows.size() == 8);
  CHECK(tau.rows[0][0] == doctest::Approx(1.0));
  CHECK(tau.rows[1][0] == doctest::Approx(2.0));
  // Doubling tau halves the concurrent jobs at the reference point.
  CHECK(tau.rows[0][4] == doctest::Approx(540.0));
  CHECK(tau.rows[1][4] == doctest::Approx(270.0));

  const SweepTable ratio = sweep(SweepKind::speed_ratio_vs_n, config);
  REQUIRE(ratio.rows.size() == 1);
  CHECK(ratio.rows[0][0] == doctest::Approx(100.0));
  CHECK(ratio.rows[0][4] >= 100.0);
  CHECK(ratio.rows[0][1] == doctest::Approx(233.0).epsilon(0.03));

  const SweepTable grid = sweep(SweepKind::scenario_grid, config);
  CHECK(grid.rows.size() == 10);
  CHECK(grid.row_labels.size() == 10);
  CHECK(grid.row_labels[0] == "realistic/none");
  CHECK(grid.row_labels[9] == "perfect/combined");

  const SweepTable speed = sweep(SweepKind::speedup_vs_time, config);
  CHECK(speed.columns.size() == 5);
  CHECK(!speed.rows.empty());
  for (const auto& row : speed.rows) CHECK(row.size() == 5);

  const std::string csv = ratio.to_csv();
  CHECK(csv.find("target_ratio,n,t_q_hours,t_c_hours,ratio\n") == 0);
  CHECK_THROWS_AS(sweep_kind_from_name("pareto"), parameter_error);
}

TEST_CASE("crossover search failure is reported") {
  EngineConfig config;
  config.classical.mode = ClassicalMode::perfect;
  config.classical.cores = 1;  // quantum can never catch a free serial machine
  CHECK_THROWS_AS(find_crossover(3.0, config), search_error);
}
