#include "qcross/gadgets.hpp"

#include <cmath>

#include "qcross/errors.hpp"
#include "qcross/mathutil.hpp"

namespace qcross {

std::int64_t and_tree_ccz(std::int64_t K) {
  if (K < 1) throw parameter_error("and_tree_ccz: K >= 1 required");
  std::int64_t total = 0;
  for (std::int64_t level = K / 2; level > 0; level /= 2) total += level;
  return total;
}

GadgetCost tacu_cost(std::int64_t K, int n_P) {
  if (K < 1) throw parameter_error("tacu_cost: K >= 1 required");
  if (n_P < 1) throw parameter_error("tacu_cost: n_P >= 1 required");
  const int depth = ceil_log2_int(K);
  GadgetCost cost;
  cost.ccz_states = and_tree_ccz(K);
  cost.ancillas = 13 * K / 2;
  cost.data_touch_cycles = 1;
  cost.total_cycles = n_P + 4 * depth;
  cost.dispatch_writes_after = 3 * depth;
  return cost;
}

GadgetCost toffoli_cost(std::int64_t K) {
  if (K < 2) throw parameter_error("toffoli_cost: K >= 2 required");
  const int depth = ceil_log2_int(K);
  GadgetCost cost;
  cost.ccz_states = and_tree_ccz(K);
  // One CCZ through three plain ancillas; larger fan-ins pay the tree rate.
  cost.ancillas = (K == 2) ? 3 : 13 * K / 2;
  cost.data_touch_cycles = 2;
  cost.dispatch_writes_after = 3 * depth;
  cost.total_cycles = 4 * depth - 1;
  return cost;
}

OracleBudget oracle_budget(std::int64_t c, int k, std::int64_t s, int eta) {
  if (c < 1 || k < 2 || s < 1) throw parameter_error("oracle_budget: c >= 1, k >= 2, s >= 1 required");
  OracleBudget b;
  b.eta = eta;
  b.R1 = static_cast<std::int64_t>(k) * s - 1;
  b.L1 = 4 * ceil_log2_int(k) + 4 * ceil_log2_int(s) - 1;
  b.A1 = ((13 * static_cast<std::int64_t>(k) + 1) / 2) * s + (13 * s + 1) / 2;
  if (eta < 1 || static_cast<double>(eta) > b.L1) {
    throw parameter_error("oracle_budget: eta must satisfy 1 <= eta <= L1");
  }
  const std::int64_t root = static_cast<std::int64_t>(std::ceil(std::sqrt(static_cast<double>(c))));
  const double log_root = 4.0 * std::log2(static_cast<double>(root));
  b.L2 = std::ceil(2.0 * static_cast<double>(root) * b.L1 / eta) + eta + log_root - 2.0;
  b.R2 = 2 * root * b.R1 + root - 1;
  b.A2 = b.A1 * eta + root;
  b.L3 = 2.0 * static_cast<double>(root) * b.L2 + log_root;
  b.R3 = 2 * root * b.R2 + root - 1;
  b.A3 = b.A2 + root;
  return b;
}

ComponentTimes component_times(std::int64_t c, int k, int n, std::int64_t m, int n_P,
                               int tau, std::optional<int> eta) {
  if (c < 1 || k < 2 || n < 1 || m < 1 || n_P < 1 || tau < 1) {
    throw parameter_error("component_times: positive inputs required");
  }
  ComponentTimes t;
  t.t_mixer = n_P;
  t.t_phaser = static_cast<double>(tau) * static_cast<double>(c) + n_P + 4 * ceil_log2_int(k);
  t.t_zero = std::ceil(4.0 * std::log2(static_cast<double>(n)));
  if (eta.has_value()) {
    const std::int64_t s = ceil_div(m, c);
    t.t_oracle = oracle_budget(c, k, s, *eta).L3;
  } else {
    const double ratio = static_cast<double>(k) * static_cast<double>(m) / static_cast<double>(c);
    t.t_oracle = 4.0 * static_cast<double>(c) * std::log2(ratio);
  }
  return t;
}

PhaserNonClifford phaser_nonclifford(std::int64_t m, int k, int n_T) {
  if (m < 1 || k < 2 || n_T < 1) throw parameter_error("phaser_nonclifford: positive inputs required");
  PhaserNonClifford out;
  out.ccz = m * and_tree_ccz(k);
  out.t = m * static_cast<std::int64_t>(n_T);
  return out;
}

}  // namespace qcross
