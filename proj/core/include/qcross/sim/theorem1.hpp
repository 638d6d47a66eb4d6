#pragma once

#include <cstdint>

#include "qcross/crossover.hpp"
#include "qcross/sat.hpp"
#include "qcross/sim/circuit.hpp"
#include "qcross/sim/simulate.hpp"

namespace qcross::sim {

// H on every data qubit.
Circuit uniform_prep(int n);

// Output state of a measurement-free prep circuit applied to |0...0>.
State prep_output(const Circuit& prep);

struct Theorem1Result {
  bool found = false;
  std::int64_t queries = 0;      // spent, counting 1 + rounds per repetition
  std::int64_t query_bound = 0;  // base_rounds * overhead for the exact P
  double success_amplitude = 0.0;
  double theta = 0.0;
};

// Runs the staged amplitude-amplification schedule on a satisfiable instance.
// Search is simulated at the amplitude level: the solution weight of the prep
// state fixes theta, each repetition after m rounds succeeds with probability
// sin^2((2m+1) theta).
Theorem1Result run_theorem1(const SatInstance& inst, const Circuit& prep,
                            double delta_fail, std::uint64_t seed);

// Solution-subspace amplitude after `rounds` amplification rounds, computed by
// explicit vector arithmetic (sign flip on solutions, reflection about prep).
double grover_amplitude(const SatInstance& inst, const State& prep_state,
                        int rounds);

}  // namespace qcross::sim
