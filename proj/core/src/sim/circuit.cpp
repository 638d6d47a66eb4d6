#include "qcross/sim/circuit.hpp"

#include <nlohmann/json.hpp>

#include "qcross/errors.hpp"

namespace qcross::sim {

namespace {

const char* gate_name(Gate g) {
  switch (g) {
    case Gate::H: return "H";
    case Gate::X: return "X";
    case Gate::Z: return "Z";
    case Gate::S: return "S";
    case Gate::CX: return "CX";
    case Gate::CZ: return "CZ";
    case Gate::CCZ: return "CCZ";
    case Gate::P: return "P";
    case Gate::PX: return "PX";
  }
  return "?";
}

int gate_arity(Gate g) {
  switch (g) {
    case Gate::CX:
    case Gate::CZ: return 2;
    case Gate::CCZ: return 3;
    default: return 1;
  }
}

const char* basis_name(MeasureBasis b) {
  switch (b) {
    case MeasureBasis::Z: return "Z";
    case MeasureBasis::X: return "X";
    case MeasureBasis::ZZ: return "ZZ";
    case MeasureBasis::XX: return "XX";
  }
  return "?";
}

}  // namespace

Circuit::Circuit(int n_data) : n_data_(n_data), n_qubits_(n_data) {
  if (n_data < 1) throw parameter_error("Circuit: n_data >= 1 required");
  live_.assign(static_cast<std::size_t>(n_data), true);
}

void Circuit::check_qubits(const std::vector<int>& qubits) const {
  for (int q : qubits) {
    if (q < 0 || q >= n_qubits_ || !live_[static_cast<std::size_t>(q)]) {
      throw parameter_error("Circuit: op references dead or unknown qubit " + std::to_string(q));
    }
  }
}

int Circuit::alloc(const std::string& tag) {
  const int q = n_qubits_++;
  live_.push_back(true);
  Op op;
  op.kind = OpKind::alloc;
  op.qubits = {q};
  op.tag = tag;
  ops_.push_back(std::move(op));
  return q;
}

void Circuit::release(int qubit) {
  check_qubits({qubit});
  if (qubit < n_data_) throw parameter_error("Circuit: cannot release a data qubit");
  live_[static_cast<std::size_t>(qubit)] = false;
  Op op;
  op.kind = OpKind::release;
  op.qubits = {qubit};
  ops_.push_back(std::move(op));
}

void Circuit::gate(Gate g, std::vector<int> qubits, const std::string& tag) {
  check_qubits(qubits);
  if (static_cast<int>(qubits.size()) != gate_arity(g)) {
    throw parameter_error("Circuit: wrong qubit count for gate");
  }
  Op op;
  op.kind = OpKind::gate;
  op.gate = g;
  op.qubits = std::move(qubits);
  op.tag = tag;
  ops_.push_back(std::move(op));
}

void Circuit::phase(double gamma, int qubit, const std::string& tag) {
  check_qubits({qubit});
  Op op;
  op.kind = OpKind::gate;
  op.gate = Gate::P;
  op.angle = gamma;
  op.qubits = {qubit};
  op.tag = tag;
  ops_.push_back(std::move(op));
}

void Circuit::phase_x(double gamma, int qubit) {
  check_qubits({qubit});
  Op op;
  op.kind = OpKind::gate;
  op.gate = Gate::PX;
  op.angle = gamma;
  op.qubits = {qubit};
  ops_.push_back(std::move(op));
}

void Circuit::cond_gate(Gate g, std::vector<int> qubits, Condition cond, double angle) {
  check_qubits(qubits);
  if (static_cast<int>(qubits.size()) != gate_arity(g)) {
    throw parameter_error("Circuit: wrong qubit count for gate");
  }
  for (int bit : cond.bits) {
    if (bit < 0 || bit >= n_outcomes_) {
      throw parameter_error("Circuit: condition references unrecorded outcome bit");
    }
  }
  Op op;
  op.kind = OpKind::gate;
  op.gate = g;
  op.angle = angle;
  op.qubits = std::move(qubits);
  op.cond = std::move(cond);
  ops_.push_back(std::move(op));
}

int Circuit::measure(MeasureBasis basis, std::vector<int> qubits, const std::string& tag) {
  check_qubits(qubits);
  const int want = (basis == MeasureBasis::ZZ || basis == MeasureBasis::XX) ? 2 : 1;
  if (static_cast<int>(qubits.size()) != want) {
    throw parameter_error("Circuit: wrong qubit count for measurement");
  }
  Op op;
  op.kind = OpKind::measure;
  op.basis = basis;
  op.qubits = std::move(qubits);
  op.outcome_slot = n_outcomes_++;
  op.tag = tag;
  ops_.push_back(std::move(op));
  return op.outcome_slot;
}

std::string Circuit::to_json() const {
  nlohmann::json j;
  j["n_data"] = n_data_;
  j["n_qubits"] = n_qubits_;
  nlohmann::json ops = nlohmann::json::array();
  for (const Op& op : ops_) {
    nlohmann::json o;
    switch (op.kind) {
      case OpKind::gate:
        o["op"] = gate_name(op.gate);
        if (op.gate == Gate::P || op.gate == Gate::PX) o["angle"] = op.angle;
        if (!op.cond.trivial()) o["if_bits"] = op.cond.bits;
        break;
      case OpKind::measure:
        o["op"] = std::string("M") + basis_name(op.basis);
        o["slot"] = op.outcome_slot;
        break;
      case OpKind::alloc:
        o["op"] = "alloc";
        break;
      case OpKind::release:
        o["op"] = "release";
        break;
    }
    o["qubits"] = op.qubits;
    if (!op.tag.empty()) o["tag"] = op.tag;
    ops.push_back(std::move(o));
  }
  j["ops"] = std::move(ops);
  return j.dump(2);
}

}  // namespace qcross::sim
