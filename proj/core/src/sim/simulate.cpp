#include "qcross/sim/simulate.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numbers>
#include <string>
#include <utility>

#include "qcross/errors.hpp"
#include "qcross/rng.hpp"

namespace qcross::sim {

namespace {

struct PathState {
  State psi;
  std::vector<int> axis_of;  // by qubit id, -1 when dead
  std::vector<int> live;     // qubit id per axis
  std::vector<std::uint8_t> outcomes;
  double probability = 1.0;
};

std::size_t dim_of(const PathState& s) { return s.psi.size(); }

void check_norm(const PathState& s, const char* where) {
  double n2 = 0.0;
  for (const Amp& a : s.psi) n2 += std::norm(a);
  if (std::abs(n2 - 1.0) > 1e-10) {
    throw consistency_error(std::string("state norm drifted at ") + where);
  }
}

void apply_h(State& psi, int axis) {
  const std::size_t bit = std::size_t{1} << axis;
  const double inv = std::numbers::sqrt2 / 2.0;
  for (std::size_t i = 0; i < psi.size(); ++i) {
    if (i & bit) continue;
    Amp a = psi[i];
    Amp b = psi[i | bit];
    psi[i] = (a + b) * inv;
    psi[i | bit] = (a - b) * inv;
  }
}

void apply_x(State& psi, int axis) {
  const std::size_t bit = std::size_t{1} << axis;
  for (std::size_t i = 0; i < psi.size(); ++i) {
    if (!(i & bit)) std::swap(psi[i], psi[i | bit]);
  }
}

void apply_phase(State& psi, int axis, Amp factor) {
  const std::size_t bit = std::size_t{1} << axis;
  for (std::size_t i = 0; i < psi.size(); ++i) {
    if (i & bit) psi[i] *= factor;
  }
}

void apply_cx(State& psi, int control, int target) {
  const std::size_t cb = std::size_t{1} << control;
  const std::size_t tb = std::size_t{1} << target;
  for (std::size_t i = 0; i < psi.size(); ++i) {
    if ((i & cb) && !(i & tb)) std::swap(psi[i], psi[i | tb]);
  }
}

void apply_cz(State& psi, int a, int b) {
  const std::size_t mask = (std::size_t{1} << a) | (std::size_t{1} << b);
  for (std::size_t i = 0; i < psi.size(); ++i) {
    if ((i & mask) == mask) psi[i] = -psi[i];
  }
}

void apply_ccz(State& psi, int a, int b, int c) {
  const std::size_t mask =
      (std::size_t{1} << a) | (std::size_t{1} << b) | (std::size_t{1} << c);
  for (std::size_t i = 0; i < psi.size(); ++i) {
    if ((i & mask) == mask) psi[i] = -psi[i];
  }
}

int axis_checked(const PathState& s, int qubit) {
  if (qubit < 0 || qubit >= static_cast<int>(s.axis_of.size()) ||
      s.axis_of[qubit] < 0) {
    throw consistency_error("op names a dead qubit");
  }
  return s.axis_of[qubit];
}

bool condition_met(const PathState& s, const Condition& cond) {
  for (int bit : cond.bits) {
    if (bit < 0 || bit >= static_cast<int>(s.outcomes.size()) ||
        s.outcomes[bit] == 255) {
      throw consistency_error("condition reads an unrecorded outcome");
    }
    if (s.outcomes[bit] != 1) return false;
  }
  return true;
}

void apply_gate(PathState& s, const Op& op) {
  switch (op.gate) {
    case Gate::H:
      apply_h(s.psi, axis_checked(s, op.qubits[0]));
      break;
    case Gate::X:
      apply_x(s.psi, axis_checked(s, op.qubits[0]));
      break;
    case Gate::Z:
      apply_phase(s.psi, axis_checked(s, op.qubits[0]), Amp(-1.0, 0.0));
      break;
    case Gate::S:
      apply_phase(s.psi, axis_checked(s, op.qubits[0]), Amp(0.0, 1.0));
      break;
    case Gate::P:
      apply_phase(s.psi, axis_checked(s, op.qubits[0]),
                  std::polar(1.0, op.angle));
      break;
    case Gate::PX: {
      int axis = axis_checked(s, op.qubits[0]);
      apply_h(s.psi, axis);
      apply_phase(s.psi, axis, std::polar(1.0, op.angle));
      apply_h(s.psi, axis);
      break;
    }
    case Gate::CX:
      apply_cx(s.psi, axis_checked(s, op.qubits[0]),
               axis_checked(s, op.qubits[1]));
      break;
    case Gate::CZ:
      apply_cz(s.psi, axis_checked(s, op.qubits[0]),
               axis_checked(s, op.qubits[1]));
      break;
    case Gate::CCZ:
      apply_ccz(s.psi, axis_checked(s, op.qubits[0]),
                axis_checked(s, op.qubits[1]), axis_checked(s, op.qubits[2]));
      break;
  }
}

void do_alloc(PathState& s, const Op& op, int cap) {
  int axes = static_cast<int>(s.live.size());
  if (axes + 1 > cap) {
    throw capacity_error("live qubits would exceed the simulator cap of " +
                         std::to_string(cap));
  }
  int qubit = op.qubits[0];
  if (qubit >= static_cast<int>(s.axis_of.size())) {
    s.axis_of.resize(qubit + 1, -1);
  }
  if (s.axis_of[qubit] >= 0) throw consistency_error("alloc of a live qubit");
  s.axis_of[qubit] = axes;
  s.live.push_back(qubit);
  State grown(dim_of(s) * 2, Amp(0.0, 0.0));
  std::copy(s.psi.begin(), s.psi.end(), grown.begin());
  s.psi = std::move(grown);
}

// Splits the state on the released axis and checks the qubit is unentangled
// (each slice proportional to a common rest-state vector).
void do_release(PathState& s, const Op& op) {
  int axis = axis_checked(s, op.qubits[0]);
  const std::size_t bit = std::size_t{1} << axis;
  const std::size_t half = dim_of(s) / 2;
  State c0(half), c1(half);
  for (std::size_t r = 0; r < half; ++r) {
    std::size_t low = r & (bit - 1);
    std::size_t high = (r ^ low) << 1;
    std::size_t i0 = high | low;
    c0[r] = s.psi[i0];
    c1[r] = s.psi[i0 | bit];
  }
  double n0 = 0.0, n1 = 0.0;
  for (std::size_t r = 0; r < half; ++r) {
    n0 += std::norm(c0[r]);
    n1 += std::norm(c1[r]);
  }
  const State& lead = (n0 >= n1) ? c0 : c1;
  double lead_norm = std::sqrt(std::max(n0, n1));
  if (lead_norm < 1e-12) throw consistency_error("release of a null state");
  State v(half);
  for (std::size_t r = 0; r < half; ++r) v[r] = lead[r] / lead_norm;
  Amp w0(0.0, 0.0), w1(0.0, 0.0);
  for (std::size_t r = 0; r < half; ++r) {
    w0 += std::conj(v[r]) * c0[r];
    w1 += std::conj(v[r]) * c1[r];
  }
  double residual = 0.0;
  for (std::size_t r = 0; r < half; ++r) {
    residual += std::norm(c0[r] - w0 * v[r]);
    residual += std::norm(c1[r] - w1 * v[r]);
  }
  if (residual > 1e-10) {
    throw consistency_error("release of an entangled qubit");
  }
  double keep = std::sqrt(std::norm(w0) + std::norm(w1));
  for (std::size_t r = 0; r < half; ++r) v[r] *= keep;
  s.psi = std::move(v);
  int qubit = s.live[axis];
  s.live.erase(s.live.begin() + axis);
  s.axis_of[qubit] = -1;
  for (std::size_t a = axis; a < s.live.size(); ++a) {
    s.axis_of[s.live[a]] = static_cast<int>(a);
  }
}

// Probability of outcome 1 for a Z measurement along `mask` parity.
double prob_odd(const State& psi, std::size_t mask) {
  double p = 0.0;
  for (std::size_t i = 0; i < psi.size(); ++i) {
    if (std::popcount(i & mask) & 1) p += std::norm(psi[i]);
  }
  return p;
}

void project_parity(State& psi, std::size_t mask, int outcome, double p) {
  double scale = 1.0 / std::sqrt(outcome ? p : 1.0 - p);
  for (std::size_t i = 0; i < psi.size(); ++i) {
    if ((std::popcount(i & mask) & 1) == outcome) {
      psi[i] *= scale;
    } else {
      psi[i] = Amp(0.0, 0.0);
    }
  }
}

struct Engine {
  const Circuit& circuit;
  const BranchPolicy& policy;
  int cap;
  bool sampled;
  rng draws;
  std::vector<Branch>* out;

  void finish(PathState&& s) {
    Branch b;
    b.outcomes = std::move(s.outcomes);
    b.probability = s.probability;
    b.state = std::move(s.psi);
    b.live_qubits = s.live;
    out->push_back(std::move(b));
  }

  void run(PathState s, std::size_t start) {
    const auto& ops = circuit.ops();
    for (std::size_t idx = start; idx < ops.size(); ++idx) {
      const Op& op = ops[idx];
      switch (op.kind) {
        case OpKind::gate:
          if (condition_met(s, op.cond)) {
            apply_gate(s, op);
            check_norm(s, "gate");
          }
          break;
        case OpKind::alloc:
          do_alloc(s, op, cap);
          break;
        case OpKind::release:
          do_release(s, op);
          check_norm(s, "release");
          break;
        case OpKind::measure: {
          bool x_basis =
              op.basis == MeasureBasis::X || op.basis == MeasureBasis::XX;
          for (int q : op.qubits) {
            if (x_basis) apply_h(s.psi, axis_checked(s, q));
          }
          std::size_t mask = 0;
          for (int q : op.qubits) mask |= std::size_t{1} << axis_checked(s, q);
          double p1 = std::clamp(prob_odd(s.psi, mask), 0.0, 1.0);
          auto settle = [&](PathState& t, int outcome) {
            project_parity(t.psi, mask, outcome, p1);
            t.probability *= outcome ? p1 : 1.0 - p1;
            t.outcomes[op.outcome_slot] = static_cast<std::uint8_t>(outcome);
            for (int q : op.qubits) {
              if (x_basis) apply_h(t.psi, axis_checked(t, q));
            }
            check_norm(t, "measure");
          };
          if (sampled) {
            int outcome = draws.uniform() < p1 ? 1 : 0;
            double p = outcome ? p1 : 1.0 - p1;
            if (p <= 0.0) outcome ^= 1;
            settle(s, outcome);
            break;
          }
          double p0 = 1.0 - p1;
          bool take0 = s.probability * p0 > policy.prune;
          bool take1 = s.probability * p1 > policy.prune;
          if (take0 && take1) {
            PathState other = s;
            settle(other, 1);
            run(std::move(other), idx + 1);
            settle(s, 0);
          } else if (take1) {
            settle(s, 1);
          } else if (take0) {
            settle(s, 0);
          } else {
            return;  // branch mass below prune threshold
          }
          break;
        }
      }
    }
    finish(std::move(s));
  }
};

}  // namespace

std::vector<Branch> simulate(const Circuit& circuit, const State& input,
                             const BranchPolicy& policy) {
  int n = circuit.n_data();
  if (input.size() != (std::size_t{1} << n)) {
    throw parameter_error("input dimension does not match the data register");
  }
  double n2 = 0.0;
  for (const Amp& a : input) n2 += std::norm(a);
  if (std::abs(n2 - 1.0) > 1e-8) {
    throw parameter_error("input state is not normalized");
  }
  bool sampled = policy.mode == BranchPolicy::Mode::sampled;
  int cap = sampled ? kSampledCap : kExhaustiveCap;
  if (n > cap) throw capacity_error("data register exceeds the simulator cap");

  PathState init;
  init.psi = input;
  init.axis_of.resize(n);
  init.live.resize(n);
  for (int q = 0; q < n; ++q) {
    init.axis_of[q] = q;
    init.live[q] = q;
  }
  init.outcomes.assign(circuit.n_outcomes(), 255);

  std::vector<Branch> branches;
  int shots = sampled ? std::max(1, policy.shots) : 1;
  rng root(policy.seed);
  for (int shot = 0; shot < shots; ++shot) {
    Engine engine{circuit, policy, cap, sampled,
                  root.child(static_cast<std::uint64_t>(shot)), &branches};
    engine.run(init, 0);
  }
  return branches;
}

State basis_state(int n_qubits, std::uint64_t index) {
  if (n_qubits < 0 || n_qubits > 30) throw parameter_error("bad register size");
  State psi(std::size_t{1} << n_qubits, Amp(0.0, 0.0));
  if (index >= psi.size()) throw parameter_error("basis index out of range");
  psi[index] = Amp(1.0, 0.0);
  return psi;
}

State uniform_state(int n_qubits) {
  if (n_qubits < 0 || n_qubits > 30) throw parameter_error("bad register size");
  std::size_t dim = std::size_t{1} << n_qubits;
  return State(dim, Amp(1.0 / std::sqrt(static_cast<double>(dim)), 0.0));
}

}  // namespace qcross::sim
