#include <cmath>

#include "doctest.h"
#include "qcross/errors.hpp"
#include "qcross/gadgets.hpp"
#include "qcross/sat.hpp"
#include "qcross/sim/gadgets_sim.hpp"
#include "qcross/sim/simulate.hpp"

using namespace qcross;
using namespace qcross::sim;

namespace {

SatInstance tiny_instance() {
  // Four variables, three clauses; includes a duplicated literal and a clause
  // with both polarities of one variable (always satisfied).
  SatInstance inst;
  inst.n = 4;
  inst.k = 3;
  inst.ratio = 0.75;
  inst.seed = 0;
  inst.clauses = {
      {{0, false}, {1, true}, {2, false}},
      {{1, false}, {1, false}, {3, true}},   // duplicate literal
      {{2, false}, {2, true}, {0, false}},   // tautology
  };
  return inst;
}

}  // namespace

TEST_CASE("conjunction phase, inline ancilla uncomputation") {
  for (int k = 1; k <= 5; ++k) {
    for (double gamma : {0.7, -1.3}) {
      const Circuit c = tacu_semantic(k, gamma, {.inject_ccz = false});
      const auto report = check_z_equivalence(c, conjunction_diagonal(k, gamma));
      INFO("k=", k, " gamma=", gamma, " witness=", report.witness);
      CHECK(report.pass);
    }
  }
}

TEST_CASE("conjunction phase with injected CCZ states") {
  for (int k = 1; k <= 3; ++k) {
    for (double gamma : {0.7, -1.3, 2.9}) {
      const Circuit c = tacu_semantic(k, gamma);
      const auto report = check_z_equivalence(c, conjunction_diagonal(k, gamma));
      INFO("k=", k, " gamma=", gamma, " witness=", report.witness);
      CHECK(report.pass);
    }
  }
}

TEST_CASE("injection branch counts") {
  // k=2: one injected CCZ (8 outcome triples) times the ancilla X-measurement.
  auto branches = simulate(tacu_semantic(2, 0.5), uniform_state(2));
  CHECK(branches.size() == 16);
  // k=3: one more ancilla (the level-1 copy) doubles it again.
  branches = simulate(tacu_semantic(3, 0.5), uniform_state(3));
  CHECK(branches.size() == 32);
  for (const auto& b : branches) CHECK(b.live_qubits.size() == 3);
}

TEST_CASE("audit matches the static cost model") {
  for (int k = 1; k <= 16; ++k) {
    const Circuit inline_c = tacu_semantic(k, 0.9, {.inject_ccz = false});
    const AuditReport audit = resource_audit(inline_c);
    CHECK(audit.ccz_count == and_tree_ccz(k));
    CHECK(audit.max_data_touches == 1);

    const AuditReport injected = resource_audit(tacu_semantic(k, 0.9));
    CHECK(injected.ccz_count == and_tree_ccz(k));
  }
  // k=3 injected peak: three data, the AND target, plus three resource qubits.
  CHECK(resource_audit(tacu_semantic(3, 0.9)).peak_live_qubits == 7);
}

TEST_CASE("phase separation layer matches its diagonal") {
  const SatInstance inst = tiny_instance();
  for (double gamma : {0.9, -0.4}) {
    const Circuit c = phaser_tiny(inst, gamma);
    const auto report = check_z_equivalence(c, phaser_diagonal(inst, gamma));
    INFO(report.witness);
    CHECK(report.pass);
  }
}

TEST_CASE("phase separation layer on generated instances") {
  for (std::uint64_t seed : {11u, 12u}) {
    const SatInstance inst = generate_instance(5, 3, 0.8, seed);
    const Circuit c = phaser_tiny(inst, 1.1);
    const auto report = check_diagonal_action(c, phaser_diagonal(inst, 1.1));
    INFO(report.witness);
    CHECK(report.pass);
  }
}

TEST_CASE("phaser diagonal counts satisfied clauses") {
  const SatInstance inst = tiny_instance();
  const auto diag = phaser_diagonal(inst, 0.9);
  REQUIRE(diag.size() == 16);
  for (std::uint64_t x = 0; x < 16; ++x) {
    const EvalResult ev = evaluate(inst, assignment_from_bits(x, 4));
    const Amp expect = std::exp(Amp(0.0, -0.9 * ev.satisfied_clauses));
    CHECK(std::abs(diag[x] - expect) < 1e-12);
  }
}

TEST_CASE("sat oracle flips exactly the satisfying assignments") {
  const SatInstance inst = tiny_instance();
  const Circuit c = oracle_tiny(inst);
  const auto report = check_z_equivalence(c, oracle_diagonal(inst));
  INFO(report.witness);
  CHECK(report.pass);

  auto branches = simulate(c, uniform_state(inst.n));
  CHECK(branches.size() == 1);  // unitary: no measurements anywhere

  const auto diag = oracle_diagonal(inst);
  for (std::uint64_t x = 0; x < 16; ++x) {
    const bool sat = evaluate(inst, assignment_from_bits(x, 4)).is_sat;
    CHECK(std::abs(diag[x] - Amp(sat ? -1.0 : 1.0)) < 1e-15);
  }
}

TEST_CASE("sat oracle on generated instances") {
  for (std::uint64_t seed : {21u, 22u}) {
    const SatInstance inst = generate_instance(5, 3, 0.8, seed);
    const auto report = check_z_equivalence(oracle_tiny(inst), oracle_diagonal(inst));
    INFO(report.witness);
    CHECK(report.pass);
  }
}

TEST_CASE("reflection about the zero state") {
  for (int n = 1; n <= 4; ++n) {
    const auto report = check_z_equivalence(zero_oracle(n), zero_diagonal(n));
    INFO(report.witness);
    CHECK(report.pass);
  }
  const auto diag = zero_diagonal(3);
  CHECK(std::abs(diag[0] - Amp(-1.0)) < 1e-15);
  for (std::uint64_t x = 1; x < 8; ++x) CHECK(std::abs(diag[x] - Amp(1.0)) < 1e-15);
}

TEST_CASE("equivalence checker flags a wrong diagonal") {
  const Circuit c = tacu_semantic(2, 0.5, {.inject_ccz = false});
  const auto report = check_z_equivalence(c, conjunction_diagonal(2, 0.6));
  CHECK(!report.pass);
  CHECK(report.max_deviation > 1e-8);
  CHECK(!report.witness.empty());
}
