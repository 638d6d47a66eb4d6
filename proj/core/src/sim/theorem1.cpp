#include "qcross/sim/theorem1.hpp"

#include <cmath>

#include "qcross/errors.hpp"
#include "qcross/rng.hpp"

namespace qcross::sim {

Circuit uniform_prep(int n) {
  if (n < 1) throw parameter_error("register must have at least one qubit");
  Circuit circuit(n);
  for (int q = 0; q < n; ++q) circuit.gate(Gate::H, {q});
  return circuit;
}

State prep_output(const Circuit& prep) {
  std::vector<Branch> branches = simulate(prep, basis_state(prep.n_data(), 0));
  if (branches.size() != 1 ||
      static_cast<int>(branches[0].live_qubits.size()) != prep.n_data()) {
    throw parameter_error("prep circuit must act unitarily on the data register");
  }
  return branches[0].state;
}

Theorem1Result run_theorem1(const SatInstance& inst, const Circuit& prep,
                            double delta_fail, std::uint64_t seed) {
  if (prep.n_data() != inst.n) {
    throw parameter_error("prep register does not match the instance");
  }
  State psi = prep_output(prep);
  std::vector<Assignment> sols = brute_force_solutions(inst);
  if (sols.empty()) throw parameter_error("instance is unsatisfiable");

  double weight = 0.0;
  for (const Assignment& a : sols) {
    weight += std::norm(psi[bits_from_assignment(a)]);
  }
  if (weight <= 0.0) {
    throw parameter_error("prep state has no solution weight");
  }
  double amplitude = std::sqrt(std::min(1.0, weight));
  double theta = std::asin(amplitude);

  AaSchedule schedule = aa_schedule(weight, delta_fail);

  Theorem1Result result;
  result.query_bound = schedule.query_bound();
  result.success_amplitude = amplitude;
  result.theta = theta;

  rng draws(seed);
  for (const AaStage& stage : schedule.stages) {
    double boosted = std::sin((2.0 * static_cast<double>(stage.rounds) + 1.0) * theta);
    double p_succ = boosted * boosted;
    for (int rep = 0; rep < stage.reps; ++rep) {
      std::int64_t cost = 1 + stage.rounds;
      if (result.queries + cost > result.query_bound) return result;
      result.queries += cost;
      if (draws.bernoulli(p_succ)) {
        result.found = true;
        return result;
      }
    }
  }
  return result;
}

double grover_amplitude(const SatInstance& inst, const State& prep_state,
                        int rounds) {
  if (rounds < 0) throw parameter_error("round count must be nonnegative");
  if (prep_state.size() != (std::size_t{1} << inst.n)) {
    throw parameter_error("prep state does not match the instance");
  }
  std::vector<std::uint8_t> is_sol(prep_state.size(), 0);
  for (const Assignment& a : brute_force_solutions(inst)) {
    is_sol[bits_from_assignment(a)] = 1;
  }
  State psi = prep_state;
  for (int r = 0; r < rounds; ++r) {
    for (std::size_t x = 0; x < psi.size(); ++x) {
      if (is_sol[x]) psi[x] = -psi[x];
    }
    Amp c(0.0, 0.0);
    for (std::size_t x = 0; x < psi.size(); ++x) {
      c += std::conj(prep_state[x]) * psi[x];
    }
    for (std::size_t x = 0; x < psi.size(); ++x) {
      psi[x] = 2.0 * c * prep_state[x] - psi[x];
    }
  }
  double weight = 0.0;
  for (std::size_t x = 0; x < psi.size(); ++x) {
    if (is_sol[x]) weight += std::norm(psi[x]);
  }
  return std::sqrt(weight);
}

}  // namespace qcross::sim
