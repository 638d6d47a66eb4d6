#include "qcross/sim/gadgets_sim.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cmath>
#include <complex>
#include <set>
#include <sstream>
#include <utility>

#include "qcross/errors.hpp"
#include "qcross/mathutil.hpp"
#include "qcross/rng.hpp"

namespace qcross::sim {

namespace {

struct UndoStep {
  enum class Kind { and_gate, copy };
  Kind kind;
  int t;  // ancilla to retire
  int a;  // AND inputs, or copy source in `a`
  int b;
};

// AND via one CCZ in the Hadamard frame of a fresh target.
int append_and(Circuit& c, int a, int b, const GadgetOptions& opts,
               std::vector<UndoStep>& undo) {
  int t = c.alloc("and");
  c.gate(Gate::H, {t});
  if (opts.inject_ccz) {
    int r1 = c.alloc("res");
    int r2 = c.alloc("res");
    int r3 = c.alloc("res");
    c.gate(Gate::H, {r1});
    c.gate(Gate::H, {r2});
    c.gate(Gate::H, {r3});
    c.gate(Gate::CCZ, {r1, r2, r3}, "ccz_inject");
    c.gate(Gate::CX, {a, r1}, "dispatch");
    c.gate(Gate::CX, {b, r2}, "dispatch");
    c.gate(Gate::CX, {t, r3});
    int u1 = c.measure(MeasureBasis::Z, {r1});
    int u2 = c.measure(MeasureBasis::Z, {r2});
    int u3 = c.measure(MeasureBasis::Z, {r3});
    c.release(r1);
    c.release(r2);
    c.release(r3);
    c.cond_gate(Gate::CZ, {b, t}, {{u1}});
    c.cond_gate(Gate::CZ, {a, t}, {{u2}});
    c.cond_gate(Gate::CZ, {a, b}, {{u3}});
    c.cond_gate(Gate::Z, {t}, {{u1, u2}});
    c.cond_gate(Gate::Z, {b}, {{u1, u3}});
    c.cond_gate(Gate::Z, {a}, {{u2, u3}});
  } else {
    c.gate(Gate::CCZ, {a, b, t}, "ccz");
  }
  c.gate(Gate::H, {t});
  undo.push_back({UndoStep::Kind::and_gate, t, a, b});
  return t;
}

int append_copy(Circuit& c, int source, std::vector<UndoStep>& undo) {
  int t = c.alloc("copy");
  c.gate(Gate::CX, {source, t}, "dispatch");
  undo.push_back({UndoStep::Kind::copy, t, source, -1});
  return t;
}

void unwind(Circuit& c, std::vector<UndoStep>& undo) {
  for (auto it = undo.rbegin(); it != undo.rend(); ++it) {
    int slot = c.measure(MeasureBasis::X, {it->t});
    if (it->kind == UndoStep::Kind::and_gate) {
      c.cond_gate(Gate::CZ, {it->a, it->b}, {{slot}});
    } else {
      c.cond_gate(Gate::Z, {it->a}, {{slot}});
    }
    c.release(it->t);
  }
  undo.clear();
}

// Phase e^{i*angle*parity(qubits)} via a CX ladder onto the last qubit.
void parity_phase(Circuit& c, const std::vector<int>& qubits, double angle) {
  int target = qubits.back();
  for (std::size_t i = 0; i + 1 < qubits.size(); ++i) {
    c.gate(Gate::CX, {qubits[i], target});
  }
  c.phase(angle, target);
  for (std::size_t i = qubits.size() - 1; i-- > 0;) {
    c.gate(Gate::CX, {qubits[i], target});
  }
}

// Clause handling shared by the phaser and the oracle: distinct variables plus
// the X conjugation set that maps the violating assignment to all ones.
struct ClauseShape {
  std::vector<int> vars;
  std::vector<int> flips;  // variables appearing positively
  bool tautology = false;
};

ClauseShape clause_shape(const Clause& clause) {
  ClauseShape shape;
  std::vector<std::pair<int, bool>> seen;
  for (const Literal& lit : clause) {
    auto it = std::find_if(seen.begin(), seen.end(),
                           [&](const auto& p) { return p.first == lit.variable; });
    if (it == seen.end()) {
      seen.emplace_back(lit.variable, lit.negated);
    } else if (it->second != lit.negated) {
      shape.tautology = true;
      return shape;
    }
  }
  for (const auto& [var, negated] : seen) {
    shape.vars.push_back(var);
    if (!negated) shape.flips.push_back(var);
  }
  return shape;
}

bool clause_satisfied(const Clause& clause, std::uint64_t bits) {
  for (const Literal& lit : clause) {
    bool value = (bits >> lit.variable) & 1;
    if (value != lit.negated) return true;
  }
  return false;
}

}  // namespace

void append_tacu(Circuit& circuit, const std::vector<int>& qubits, double gamma,
                 const GadgetOptions& opts) {
  if (qubits.empty()) throw parameter_error("conjunction over no qubits");
  std::set<int> distinct(qubits.begin(), qubits.end());
  if (distinct.size() != qubits.size()) {
    throw parameter_error("conjunction qubits must be distinct");
  }
  std::vector<UndoStep> undo;
  int k = static_cast<int>(qubits.size());
  if (k == 1) {
    int t = append_copy(circuit, qubits[0], undo);
    circuit.phase(gamma, t);
    unwind(circuit, undo);
    return;
  }
  std::vector<int> members = qubits;
  int levels = ceil_log2_int(k);
  for (int level = 1; level <= levels; ++level) {
    int pairs = k >> level;
    std::vector<int> next;
    for (int i = 0; i < pairs; ++i) {
      next.push_back(append_and(circuit, members[2 * i], members[2 * i + 1],
                                opts, undo));
    }
    for (std::size_t j = 2 * static_cast<std::size_t>(pairs);
         j < members.size(); ++j) {
      // A level-1 leftover is a raw data qubit; hold it in a work copy so the
      // apex only ever phases ancillas.
      next.push_back(level == 1 ? append_copy(circuit, members[j], undo)
                                : members[j]);
    }
    members = std::move(next);
  }
  int j = static_cast<int>(members.size());
  if (j == 1) {
    circuit.phase(gamma, members[0]);
  } else {
    double unit = std::ldexp(gamma, -(j - 1));
    for (std::uint32_t mask = 1; mask < (1u << j); ++mask) {
      std::vector<int> subset;
      for (int q = 0; q < j; ++q) {
        if (mask & (1u << q)) subset.push_back(members[q]);
      }
      double sign = (std::popcount(mask) % 2 == 1) ? 1.0 : -1.0;
      parity_phase(circuit, subset, sign * unit);
    }
  }
  unwind(circuit, undo);
}

Circuit tacu_semantic(int k, double gamma, const GadgetOptions& opts) {
  if (k < 1) throw parameter_error("conjunction width must be positive");
  Circuit circuit(k);
  std::vector<int> qubits(k);
  for (int q = 0; q < k; ++q) qubits[q] = q;
  append_tacu(circuit, qubits, gamma, opts);
  return circuit;
}

Circuit phaser_tiny(const SatInstance& inst, double gamma,
                    const GadgetOptions& opts) {
  if (inst.n < 1) throw parameter_error("instance has no variables");
  Circuit circuit(inst.n);
  for (const Clause& clause : inst.clauses) {
    ClauseShape shape = clause_shape(clause);
    if (shape.tautology) continue;  // constant factor, global phase only
    for (int v : shape.flips) circuit.gate(Gate::X, {v});
    append_tacu(circuit, shape.vars, gamma, opts);
    for (int v : shape.flips) circuit.gate(Gate::X, {v});
  }
  return circuit;
}

namespace {

// Computes the clause violation flag into a fresh ancilla tree and returns the
// flag qubit after an X turns it into a satisfaction flag. `ops` records the
// exact gate sequence so the caller can replay its inverse.
struct ClauseBuild {
  int sat_flag = -1;
  std::vector<int> tree_allocs;           // in alloc order
  std::vector<std::array<int, 3>> ands;   // (a, b, t) in apply order
  int copy_source = -1;                   // single-variable case
  std::vector<int> flips;
};

ClauseBuild build_clause_flag(Circuit& c, const ClauseShape& shape) {
  ClauseBuild build;
  build.flips = shape.flips;
  for (int v : build.flips) c.gate(Gate::X, {v});
  std::vector<int> members = shape.vars;
  if (members.size() == 1) {
    int t = c.alloc("clause");
    c.gate(Gate::CX, {members[0], t});
    build.tree_allocs.push_back(t);
    build.copy_source = members[0];
    members = {t};
  }
  while (members.size() > 1) {
    std::vector<int> next;
    std::size_t pairs = members.size() / 2;
    for (std::size_t i = 0; i < pairs; ++i) {
      int t = c.alloc("clause");
      c.gate(Gate::H, {t});
      c.gate(Gate::CCZ, {members[2 * i], members[2 * i + 1], t}, "ccz");
      c.gate(Gate::H, {t});
      build.tree_allocs.push_back(t);
      build.ands.push_back({members[2 * i], members[2 * i + 1], t});
      next.push_back(t);
    }
    if (members.size() % 2 == 1) next.push_back(members.back());
    members = std::move(next);
  }
  build.sat_flag = members[0];
  c.gate(Gate::X, {build.sat_flag});
  return build;
}

void reverse_clause_flag(Circuit& c, const ClauseBuild& build) {
  c.gate(Gate::X, {build.sat_flag});
  for (auto it = build.ands.rbegin(); it != build.ands.rend(); ++it) {
    c.gate(Gate::H, {(*it)[2]});
    c.gate(Gate::CCZ, {(*it)[0], (*it)[1], (*it)[2]}, "ccz");
    c.gate(Gate::H, {(*it)[2]});
  }
  if (build.copy_source >= 0) {
    c.gate(Gate::CX, {build.copy_source, build.tree_allocs.front()});
  }
  for (auto it = build.tree_allocs.rbegin(); it != build.tree_allocs.rend();
       ++it) {
    c.release(*it);
  }
  for (int v : build.flips) c.gate(Gate::X, {v});
}

}  // namespace

Circuit oracle_tiny(const SatInstance& inst) {
  if (inst.n < 1) throw parameter_error("instance has no variables");
  if (inst.m() < 1) throw parameter_error("instance has no clauses");
  Circuit circuit(inst.n);
  std::vector<ClauseShape> shapes;
  for (const Clause& clause : inst.clauses) {
    ClauseShape shape = clause_shape(clause);
    if (shape.tautology) continue;  // always satisfied, drops out of the AND
    shapes.push_back(std::move(shape));
  }
  if (shapes.empty()) {
    // Every clause is a tautology: the oracle is -I, a global phase.
    return circuit;
  }
  int m_eff = static_cast<int>(shapes.size());
  std::vector<int> accs;
  auto fold = [&](int j, bool forward) {
    // acc_j = acc_{j-1} AND sat_j; acc_0 is the constant 1.
    ClauseBuild build = build_clause_flag(circuit, shapes[j]);
    if (forward) {
      int acc = circuit.alloc("acc");
      if (j == 0) {
        circuit.gate(Gate::CX, {build.sat_flag, acc});
      } else {
        circuit.gate(Gate::H, {acc});
        circuit.gate(Gate::CCZ, {accs.back(), build.sat_flag, acc}, "ccz");
        circuit.gate(Gate::H, {acc});
      }
      accs.push_back(acc);
    } else {
      int acc = accs.back();
      accs.pop_back();
      if (j == 0) {
        circuit.gate(Gate::CX, {build.sat_flag, acc});
      } else {
        circuit.gate(Gate::H, {acc});
        circuit.gate(Gate::CCZ, {accs.back(), build.sat_flag, acc}, "ccz");
        circuit.gate(Gate::H, {acc});
      }
      circuit.release(acc);
    }
    reverse_clause_flag(circuit, build);
  };
  for (int j = 0; j < m_eff; ++j) fold(j, true);
  circuit.gate(Gate::Z, {accs.back()});
  for (int j = m_eff - 1; j >= 0; --j) fold(j, false);
  return circuit;
}

Circuit zero_oracle(int n) {
  if (n < 1) throw parameter_error("register must have at least one qubit");
  Circuit circuit(n);
  for (int v = 0; v < n; ++v) circuit.gate(Gate::X, {v});
  if (n == 1) {
    circuit.gate(Gate::Z, {0});
  } else {
    ClauseShape all;
    all.vars.resize(n);
    for (int v = 0; v < n; ++v) all.vars[v] = v;
    ClauseBuild build = build_clause_flag(circuit, all);
    // build added an X to make a satisfaction flag; undo it, we want the AND.
    circuit.gate(Gate::X, {build.sat_flag});
    circuit.gate(Gate::Z, {build.sat_flag});
    circuit.gate(Gate::X, {build.sat_flag});
    reverse_clause_flag(circuit, build);
  }
  for (int v = 0; v < n; ++v) circuit.gate(Gate::X, {v});
  return circuit;
}

std::vector<Amp> conjunction_diagonal(int k, double gamma) {
  if (k < 1 || k > 24) throw parameter_error("bad conjunction width");
  std::vector<Amp> d(std::size_t{1} << k, Amp(1.0, 0.0));
  d.back() = std::polar(1.0, gamma);
  return d;
}

std::vector<Amp> phaser_diagonal(const SatInstance& inst, double gamma) {
  if (inst.n < 1 || inst.n > 24) throw parameter_error("bad register size");
  std::vector<Amp> d(std::size_t{1} << inst.n);
  for (std::uint64_t x = 0; x < d.size(); ++x) {
    int sat = 0;
    for (const Clause& clause : inst.clauses) {
      if (clause_satisfied(clause, x)) ++sat;
    }
    d[x] = std::polar(1.0, -gamma * sat);
  }
  return d;
}

std::vector<Amp> oracle_diagonal(const SatInstance& inst) {
  if (inst.n < 1 || inst.n > 24) throw parameter_error("bad register size");
  std::vector<Amp> d(std::size_t{1} << inst.n, Amp(1.0, 0.0));
  for (std::uint64_t x = 0; x < d.size(); ++x) {
    bool all = true;
    for (const Clause& clause : inst.clauses) {
      if (!clause_satisfied(clause, x)) {
        all = false;
        break;
      }
    }
    if (all) d[x] = Amp(-1.0, 0.0);
  }
  return d;
}

std::vector<Amp> zero_diagonal(int n) {
  if (n < 1 || n > 24) throw parameter_error("bad register size");
  std::vector<Amp> d(std::size_t{1} << n, Amp(1.0, 0.0));
  d[0] = Amp(-1.0, 0.0);
  return d;
}

namespace {

State random_state(int n, rng& draws) {
  State psi(std::size_t{1} << n);
  double norm2 = 0.0;
  for (Amp& a : psi) {
    a = Amp(draws.uniform() * 2.0 - 1.0, draws.uniform() * 2.0 - 1.0);
    norm2 += std::norm(a);
  }
  double inv = 1.0 / std::sqrt(norm2);
  for (Amp& a : psi) a *= inv;
  return psi;
}

ZEquivalenceReport check_against_inputs(const Circuit& circuit,
                                        const std::vector<Amp>& diagonal,
                                        const std::vector<State>& inputs) {
  int n = circuit.n_data();
  if (diagonal.size() != (std::size_t{1} << n)) {
    throw parameter_error("diagonal length does not match the register");
  }
  for (const Amp& d : diagonal) {
    if (std::abs(std::abs(d) - 1.0) > 1e-9) {
      throw parameter_error("diagonal is not unitary");
    }
  }
  ZEquivalenceReport report;
  report.pass = true;
  for (std::size_t idx = 0; idx < inputs.size(); ++idx) {
    const State& in = inputs[idx];
    State target(in.size());
    for (std::size_t x = 0; x < in.size(); ++x) target[x] = diagonal[x] * in[x];
    std::vector<Branch> branches = simulate(circuit, in);
    for (const Branch& b : branches) {
      if (static_cast<int>(b.live_qubits.size()) != n) {
        throw consistency_error("gadget left ancillas live");
      }
      Amp overlap(0.0, 0.0);
      for (std::size_t x = 0; x < target.size(); ++x) {
        overlap += std::conj(target[x]) * b.state[x];
      }
      // Residual norm after rotating away the branch global phase. Summing
      // the per-amplitude residuals directly keeps full precision where
      // sqrt(2(1 - |overlap|)) would bottom out near 1e-8.
      const double mag = std::abs(overlap);
      const Amp phase = mag > 0.0 ? overlap / mag : Amp(1.0, 0.0);
      double dev2 = 0.0;
      for (std::size_t x = 0; x < target.size(); ++x) {
        dev2 += std::norm(b.state[x] - phase * target[x]);
      }
      double dev = std::sqrt(dev2);
      ++report.branches_checked;
      if (dev > report.max_deviation) {
        report.max_deviation = dev;
        if (dev >= 1e-8) {
          std::ostringstream w;
          w << "input " << idx << ", outcomes";
          for (std::uint8_t o : b.outcomes) {
            w << ' ' << (o == 255 ? '-' : static_cast<char>('0' + o));
          }
          w << ", deviation " << dev;
          report.witness = w.str();
          report.pass = false;
        }
      }
    }
    ++report.inputs_checked;
  }
  return report;
}

}  // namespace

ZEquivalenceReport check_z_equivalence(const Circuit& circuit,
                                       const std::vector<Amp>& diagonal,
                                       std::uint64_t seed) {
  int n = circuit.n_data();
  std::vector<State> inputs;
  for (std::uint64_t x = 0; x < (std::uint64_t{1} << n); ++x) {
    inputs.push_back(basis_state(n, x));
  }
  rng draws(seed);
  for (int i = 0; i < 20; ++i) inputs.push_back(random_state(n, draws));
  return check_against_inputs(circuit, diagonal, inputs);
}

ZEquivalenceReport check_diagonal_action(const Circuit& circuit,
                                         const std::vector<Amp>& diagonal,
                                         std::uint64_t seed) {
  int n = circuit.n_data();
  std::vector<State> inputs;
  inputs.push_back(uniform_state(n));
  rng draws(seed);
  inputs.push_back(random_state(n, draws));
  return check_against_inputs(circuit, diagonal, inputs);
}

AuditReport resource_audit(const Circuit& circuit) {
  AuditReport report;
  int live = circuit.n_data();
  report.peak_live_qubits = live;
  std::vector<std::int64_t> touches(circuit.n_data(), 0);
  for (const Op& op : circuit.ops()) {
    switch (op.kind) {
      case OpKind::alloc:
        ++live;
        report.peak_live_qubits = std::max(report.peak_live_qubits, live);
        break;
      case OpKind::release:
        --live;
        break;
      case OpKind::gate:
        if (op.gate == Gate::CCZ &&
            (op.tag == "ccz" || op.tag == "ccz_inject")) {
          ++report.ccz_count;
        }
        if (op.cond.trivial()) {
          for (int q : op.qubits) {
            if (q < circuit.n_data()) ++touches[q];
          }
        }
        break;
      case OpKind::measure:
        break;
    }
  }
  for (std::int64_t t : touches) {
    report.max_data_touches = std::max(report.max_data_touches, t);
  }
  return report;
}

}  // namespace qcross::sim
