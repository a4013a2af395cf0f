#include "microbench/circuit.hpp"

#include <algorithm>
#include <cmath>

#include "microbench/error.hpp"

namespace microbench {

int gate_arity(GateKind kind) {
  switch (kind) {
    case GateKind::CCX:
      return 3;
    case GateKind::CX:
    case GateKind::CZ:
    case GateKind::CP:
    case GateKind::SWAP:
      return 2;
    default:
      return 1;
  }
}

bool gate_has_param(GateKind kind) {
  switch (kind) {
    case GateKind::RX:
    case GateKind::RY:
    case GateKind::RZ:
    case GateKind::CP:
      return true;
    default:
      return false;
  }
}

std::string_view gate_name(GateKind kind) {
  switch (kind) {
    case GateKind::H: return "h";
    case GateKind::X: return "x";
    case GateKind::S: return "s";
    case GateKind::Sdg: return "sdg";
    case GateKind::T: return "t";
    case GateKind::Tdg: return "tdg";
    case GateKind::RX: return "rx";
    case GateKind::RY: return "ry";
    case GateKind::RZ: return "rz";
    case GateKind::CX: return "cx";
    case GateKind::CZ: return "cz";
    case GateKind::CP: return "cp";
    case GateKind::SWAP: return "swap";
    case GateKind::CCX: return "ccx";
  }
  return "?";
}

std::optional<GateKind> gate_from_name(std::string_view name) {
  static constexpr GateKind kAll[] = {
      GateKind::H,  GateKind::X,  GateKind::S,  GateKind::Sdg, GateKind::T,
      GateKind::Tdg, GateKind::RX, GateKind::RY, GateKind::RZ,  GateKind::CX,
      GateKind::CZ, GateKind::CP, GateKind::SWAP, GateKind::CCX,
  };
  for (GateKind k : kAll) {
    if (gate_name(k) == name) return k;
  }
  return std::nullopt;
}

bool Gate::touches(QubitIndex q) const {
  return std::find(qubits.begin(), qubits.end(), q) != qubits.end();
}

std::vector<Violation> validate(const Circuit& c) {
  std::vector<Violation> out;
  if (c.num_qubits == 0) {
    out.push_back({0, "circuit has zero qubits"});
  }
  for (std::size_t i = 0; i < c.gates.size(); ++i) {
    const Gate& g = c.gates[i];
    const int arity = gate_arity(g.kind);
    if (static_cast<int>(g.qubits.size()) != arity) {
      out.push_back({i, std::string(gate_name(g.kind)) + ": arity mismatch, expected " +
                            std::to_string(arity) + " operands, got " +
                            std::to_string(g.qubits.size())});
    }
    for (QubitIndex q : g.qubits) {
      if (q >= c.num_qubits) {
        out.push_back({i, std::string(gate_name(g.kind)) + ": operand out of range (q" +
                              std::to_string(q) + " on " + std::to_string(c.num_qubits) +
                              " qubits)"});
      }
    }
    for (std::size_t a = 0; a < g.qubits.size(); ++a) {
      for (std::size_t b = a + 1; b < g.qubits.size(); ++b) {
        if (g.qubits[a] == g.qubits[b]) {
          out.push_back({i, std::string(gate_name(g.kind)) + ": duplicate operand q" +
                                std::to_string(g.qubits[a])});
        }
      }
    }
    if (gate_has_param(g.kind)) {
      if (!g.param.has_value()) {
        out.push_back({i, std::string(gate_name(g.kind)) + ": missing parameter"});
      } else if (!std::isfinite(*g.param)) {
        out.push_back({i, std::string(gate_name(g.kind)) + ": non-finite parameter"});
      }
    } else if (g.param.has_value()) {
      out.push_back({i, std::string(gate_name(g.kind)) + ": extra parameter"});
    }
  }
  return out;
}

int depth(const Circuit& c) {
  std::vector<int> front(c.num_qubits, 0);
  int max_layer = 0;
  for (const Gate& g : c.gates) {
    int layer = 0;
    for (QubitIndex q : g.qubits) {
      layer = std::max(layer, front[q]);
    }
    ++layer;
    for (QubitIndex q : g.qubits) {
      front[q] = layer;
    }
    max_layer = std::max(max_layer, layer);
  }
  return max_layer;
}

int two_qubit_count(const Circuit& c) {
  int count = 0;
  for (const Gate& g : c.gates) {
    if (gate_arity(g.kind) == 2) ++count;
  }
  return count;
}

Circuit padded_to(const Circuit& c, std::uint32_t n) {
  if (n < c.num_qubits) {
    throw Error("padded_to: target size smaller than circuit");
  }
  Circuit out = c;
  out.num_qubits = n;
  return out;
}

}  // namespace microbench
