#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qcross/sat.hpp"
#include "qcross/sim/circuit.hpp"
#include "qcross/sim/simulate.hpp"

namespace qcross::sim {

struct GadgetOptions {
  // Consume CCZ resource states by teleportation instead of applying the gate
  // in place. Exercises the measurement corrections at the price of eight
  // branches per consumed state.
  bool inject_ccz = false;
};

// Appends the conjunction-phase gadget e^{i*gamma*x_a*x_b*...} over the given
// distinct qubits: a balanced AND tree that touches each input qubit exactly
// once, a parity-phase apex on the leftover set, then measurement-based
// uncomputation of every ancilla.
void append_tacu(Circuit& circuit, const std::vector<int>& qubits, double gamma,
                 const GadgetOptions& opts = {});

// Standalone conjunction-phase circuit on k data qubits.
Circuit tacu_semantic(int k, double gamma,
                      const GadgetOptions& opts = {.inject_ccz = true});

// Phase-separation layer: product over clauses of e^{-i*gamma*[clause sat]},
// realized per clause as a flip-conjugated conjunction phase on the violating
// pattern. Matches the target up to a global phase.
Circuit phaser_tiny(const SatInstance& inst, double gamma,
                    const GadgetOptions& opts = {});

// Phase oracle flipping the sign of every satisfying assignment. Unitary,
// measurement free.
Circuit oracle_tiny(const SatInstance& inst);

// Reflection about |0...0>: diag(-1, 1, ..., 1).
Circuit zero_oracle(int n);

std::vector<Amp> conjunction_diagonal(int k, double gamma);
std::vector<Amp> phaser_diagonal(const SatInstance& inst, double gamma);
std::vector<Amp> oracle_diagonal(const SatInstance& inst);
std::vector<Amp> zero_diagonal(int n);

struct ZEquivalenceReport {
  bool pass = false;
  double max_deviation = 0.0;
  std::int64_t branches_checked = 0;
  int inputs_checked = 0;
  std::string witness;  // empty when pass
};

// Runs the circuit on every basis state plus 20 seeded random states and
// requires each measurement branch to land on diagonal*input up to a branch
// global phase, within 1e-8.
ZEquivalenceReport check_z_equivalence(const Circuit& circuit,
                                       const std::vector<Amp>& diagonal,
                                       std::uint64_t seed = 1234);

// Cheaper spanning check for wider registers: one uniform superposition plus
// one random state. A diagonal target is already pinned down by the first.
ZEquivalenceReport check_diagonal_action(const Circuit& circuit,
                                         const std::vector<Amp>& diagonal,
                                         std::uint64_t seed = 1234);

struct AuditReport {
  std::int64_t ccz_count = 0;     // consumed CCZ states (inline or injected)
  int peak_live_qubits = 0;       // data plus concurrently live ancillas
  std::int64_t max_data_touches = 0;  // unconditioned ops on the busiest data qubit
};

// Static walk over the op list; no simulation.
AuditReport resource_audit(const Circuit& circuit);

}  // namespace qcross::sim
