#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "qcross/sim/circuit.hpp"

namespace qcross::sim {

using Amp = std::complex<double>;
using State = std::vector<Amp>;

struct BranchPolicy {
  enum class Mode { exhaustive, sampled };
  Mode mode = Mode::exhaustive;
  std::uint64_t seed = 0;
  int shots = 1;
  // Branches below this probability are dropped in exhaustive mode.
  double prune = 1e-14;
};

struct Branch {
  std::vector<std::uint8_t> outcomes;  // by slot; 255 = never recorded
  double probability = 1.0;
  State state;                  // over live qubits, axis i = live_qubits[i]
  std::vector<int> live_qubits; // qubit ids, axis order (LSB first)
};

inline constexpr int kExhaustiveCap = 16;
inline constexpr int kSampledCap = 22;

// Runs the circuit on `input` (a state over the data qubits). Exhaustive mode
// returns every measurement branch with its probability; sampled mode returns
// one branch per shot.
std::vector<Branch> simulate(const Circuit& circuit, const State& input,
                             const BranchPolicy& policy = {});

State basis_state(int n_qubits, std::uint64_t index);
State uniform_state(int n_qubits);

}  // namespace qcross::sim
