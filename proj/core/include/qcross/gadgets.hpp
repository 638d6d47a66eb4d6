#pragma once

#include <cstdint>
#include <optional>

namespace qcross {

struct GadgetCost {
  std::int64_t ccz_states = 0;
  std::int64_t t_states = 0;
  std::int64_t ancillas = 0;
  std::int64_t data_touch_cycles = 0;
  std::int64_t total_cycles = 0;
  std::int64_t dispatch_writes_after = 0;
};

// Exact CCZ count of a K-input AND tree: sum over levels of floor(K/2^l).
std::int64_t and_tree_ccz(std::int64_t K);

// Temporarily-ANDed controlled phase on K qubits, phase register n_P wide.
GadgetCost tacu_cost(std::int64_t K, int n_P);

// K-controlled Toffoli (AND written to a target, then uncomputed).
GadgetCost toffoli_cost(std::int64_t K);

struct ComponentTimes {
  double t_mixer = 0.0;
  double t_phaser = 0.0;
  double t_oracle = 0.0;
  double t_zero = 0.0;
};

struct OracleBudget {
  int eta = 0;
  std::int64_t R1 = 0, R2 = 0, R3 = 0;
  double L1 = 0.0, L2 = 0.0, L3 = 0.0;
  std::int64_t A1 = 0, A2 = 0, A3 = 0;
};

// Three-level aggregation budget for the clause oracle: s clauses per part,
// ceil(sqrt(c)) x ceil(sqrt(c)) part grid, eta parts computed concurrently.
OracleBudget oracle_budget(std::int64_t c, int k, std::int64_t s, int eta);

// Logical-cycle costs of the four circuit components. Without eta the oracle
// uses the aggregate form 4c*log2(km/c); with eta it uses the level-3 budget
// (s defaults to ceil(m/c)).
ComponentTimes component_times(std::int64_t c, int k, int n, std::int64_t m, int n_P,
                               int tau, std::optional<int> eta = std::nullopt);

struct PhaserNonClifford {
  std::int64_t ccz = 0;
  std::int64_t t = 0;
};

// Non-Clifford consumption of one phaser application over m clauses.
PhaserNonClifford phaser_nonclifford(std::int64_t m, int k, int n_T);

}  // namespace qcross
