#include <cmath>

#include "doctest.h"
#include "qcross/errors.hpp"
#include "qcross/gadgets.hpp"
#include "qcross/mathutil.hpp"

using namespace qcross;

TEST_CASE("and_tree_ccz by level sums") {
  CHECK(and_tree_ccz(1) == 0);
  CHECK(and_tree_ccz(2) == 1);
  CHECK(and_tree_ccz(3) == 1);
  CHECK(and_tree_ccz(4) == 3);
  CHECK(and_tree_ccz(5) == 3);
  CHECK(and_tree_ccz(6) == 4);
  CHECK(and_tree_ccz(7) == 4);
  CHECK(and_tree_ccz(8) == 7);
  CHECK(and_tree_ccz(16) == 15);
  CHECK_THROWS_AS(and_tree_ccz(0), parameter_error);
  // Independent recursion: pairing K inputs needs floor(K/2) ANDs; an odd
  // leftover is copied aside, so only the AND outputs continue upward.
  for (std::int64_t K = 2; K <= 64; ++K) {
    CHECK(and_tree_ccz(K) == K / 2 + and_tree_ccz(std::max<std::int64_t>(1, K / 2)));
  }
}

TEST_CASE("tacu_cost fields") {
  const GadgetCost c = tacu_cost(8, 25);
  CHECK(c.ccz_states == 7);
  CHECK(c.ancillas == 52);
  CHECK(c.data_touch_cycles == 1);
  CHECK(c.total_cycles == 25 + 4 * 3);
  CHECK(c.dispatch_writes_after == 9);
  CHECK(tacu_cost(1, 10).ccz_states == 0);
  CHECK_THROWS_AS(tacu_cost(0, 25), parameter_error);
  CHECK_THROWS_AS(tacu_cost(8, 0), parameter_error);
}

TEST_CASE("toffoli_cost fields") {
  const GadgetCost c2 = toffoli_cost(2);
  CHECK(c2.ccz_states == 1);
  CHECK(c2.ancillas == 3);
  CHECK(c2.total_cycles == 3);
  CHECK(c2.data_touch_cycles == 2);
  const GadgetCost c8 = toffoli_cost(8);
  CHECK(c8.ccz_states == 7);
  CHECK(c8.ancillas == 52);
  CHECK(c8.total_cycles == 4 * 3 - 1);
  CHECK_THROWS_AS(toffoli_cost(1), parameter_error);
}

TEST_CASE("oracle budget at the reference operating point") {
  const OracleBudget b = oracle_budget(2112, 8, 15, 22);
  CHECK(b.R1 == 119);
  CHECK(b.L1 == doctest::Approx(27.0));
  CHECK(b.A1 == 878);
  CHECK(b.L2 == doctest::Approx(155.094248).epsilon(1e-6));
  CHECK(b.R2 == 10993);
  CHECK(b.A2 == 19362);
  CHECK(b.L3 == doctest::Approx(14290.765).epsilon(1e-5));
  CHECK(b.R3 == 1011401);
  CHECK(b.A3 == 19408);
}

TEST_CASE("oracle budget matches a direct recomputation") {
  for (int eta : {4, 22}) {
    const std::int64_t c = 2112, s = 15;
    const int k = 8;
    const OracleBudget b = oracle_budget(c, k, s, eta);
    const std::int64_t root = 46;  // ceil(sqrt(2112))
    const double log_root = 4.0 * std::log2(46.0);
    const std::int64_t R1 = k * s - 1;
    const double L1 = 4 * 3 + 4 * 4 - 1;
    const std::int64_t A1 = ((13 * k + 1) / 2) * s + (13 * s + 1) / 2;
    CHECK(b.R1 == R1);
    CHECK(b.L1 == doctest::Approx(L1));
    CHECK(b.A1 == A1);
    CHECK(b.L2 ==
          doctest::Approx(std::ceil(2.0 * root * L1 / eta) + eta + log_root - 2.0));
    CHECK(b.R2 == 2 * root * R1 + root - 1);
    CHECK(b.A2 == A1 * eta + root);
    CHECK(b.L3 == doctest::Approx(2.0 * root * b.L2 + log_root));
    CHECK(b.R3 == 2 * root * b.R2 + root - 1);
    CHECK(b.A3 == b.A2 + root);
  }
  CHECK_THROWS_AS(oracle_budget(2112, 8, 15, 0), parameter_error);
  CHECK_THROWS_AS(oracle_budget(2112, 8, 15, 28), parameter_error);  // above L1
  CHECK_THROWS_AS(oracle_budget(0, 8, 15, 22), parameter_error);
}

TEST_CASE("component times, both oracle forms") {
  const std::int64_t c = 2112, m = 31504;
  const int k = 8, n = 179, n_P = 25;
  const ComponentTimes direct = component_times(c, k, n, m, n_P, 1, 22);
  CHECK(direct.t_mixer == doctest::Approx(25.0));
  CHECK(direct.t_phaser == doctest::Approx(1.0 * c + n_P + 12));
  CHECK(direct.t_zero == doctest::Approx(std::ceil(4.0 * std::log2(179.0))));
  CHECK(direct.t_oracle == doctest::Approx(oracle_budget(c, k, 15, 22).L3));

  const ComponentTimes agg = component_times(c, k, n, m, n_P, 2);
  CHECK(agg.t_phaser == doctest::Approx(2.0 * c + n_P + 12));
  CHECK(agg.t_oracle ==
        doctest::Approx(4.0 * c * std::log2(static_cast<double>(k) * m / c)));
  CHECK_THROWS_AS(component_times(0, 8, 179, m, n_P, 1), parameter_error);
}

TEST_CASE("phaser non-Clifford budget") {
  const PhaserNonClifford ph = phaser_nonclifford(31504, 8, 23);
  CHECK(ph.ccz == 31504 * 7);
  CHECK(ph.t == 31504 * 23);
  CHECK_THROWS_AS(phaser_nonclifford(0, 8, 23), parameter_error);
}
