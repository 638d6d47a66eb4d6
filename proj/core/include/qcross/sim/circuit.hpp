#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace qcross::sim {

enum class Gate { H, X, Z, S, CX, CZ, CCZ, P, PX };
enum class MeasureBasis { Z, X, ZZ, XX };

enum class OpKind { gate, measure, alloc, release };

// Conditioned gates fire when every listed outcome bit is 1.
struct Condition {
  std::vector<int> bits;
  bool trivial() const { return bits.empty(); }
};

struct Op {
  OpKind kind = OpKind::gate;
  Gate gate = Gate::H;
  double angle = 0.0;
  std::vector<int> qubits;
  Condition cond;
  MeasureBasis basis = MeasureBasis::Z;
  int outcome_slot = -1;  // for measure ops
  std::string tag;
};

class Circuit {
public:
  explicit Circuit(int n_data);

  int n_data() const { return n_data_; }
  int n_qubits() const { return n_qubits_; }
  int n_outcomes() const { return n_outcomes_; }
  const std::vector<Op>& ops() const { return ops_; }

  int alloc(const std::string& tag = "");
  void release(int qubit);

  void gate(Gate g, std::vector<int> qubits, const std::string& tag = "");
  void phase(double gamma, int qubit, const std::string& tag = "");
  void phase_x(double gamma, int qubit);
  void cond_gate(Gate g, std::vector<int> qubits, Condition cond, double angle = 0.0);
  int measure(MeasureBasis basis, std::vector<int> qubits, const std::string& tag = "");

  std::string to_json() const;

private:
  void check_qubits(const std::vector<int>& qubits) const;

  int n_data_ = 0;
  int n_qubits_ = 0;
  int n_outcomes_ = 0;
  std::vector<bool> live_;
  std::vector<Op> ops_;
};

}  // namespace qcross::sim
