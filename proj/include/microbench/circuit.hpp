#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace microbench {

using QubitIndex = std::uint32_t;

enum class GateKind : std::uint8_t {
  H,
  X,
  S,
  Sdg,
  T,
  Tdg,
  RX,
  RY,
  RZ,
  CX,
  CZ,
  CP,
  SWAP,
  CCX,
};

/// Number of qubit operands the kind expects (1, 2 or 3).
int gate_arity(GateKind kind);

/// True for the parameterized rotations RX/RY/RZ/CP.
bool gate_has_param(GateKind kind);

/// Lowercase qelib1 name ("h", "ccx", ...).
std::string_view gate_name(GateKind kind);

/// Inverse of gate_name; nullopt for unknown names.
std::optional<GateKind> gate_from_name(std::string_view name);

struct Gate {
  GateKind kind = GateKind::H;
  std::vector<QubitIndex> qubits;
  std::optional<double> param;

  static Gate h(QubitIndex q) { return {GateKind::H, {q}, std::nullopt}; }
  static Gate x(QubitIndex q) { return {GateKind::X, {q}, std::nullopt}; }
  static Gate s(QubitIndex q) { return {GateKind::S, {q}, std::nullopt}; }
  static Gate sdg(QubitIndex q) { return {GateKind::Sdg, {q}, std::nullopt}; }
  static Gate t(QubitIndex q) { return {GateKind::T, {q}, std::nullopt}; }
  static Gate tdg(QubitIndex q) { return {GateKind::Tdg, {q}, std::nullopt}; }
  static Gate rx(double theta, QubitIndex q) { return {GateKind::RX, {q}, theta}; }
  static Gate ry(double theta, QubitIndex q) { return {GateKind::RY, {q}, theta}; }
  static Gate rz(double theta, QubitIndex q) { return {GateKind::RZ, {q}, theta}; }
  static Gate cx(QubitIndex control, QubitIndex target) {
    return {GateKind::CX, {control, target}, std::nullopt};
  }
  static Gate cz(QubitIndex a, QubitIndex b) { return {GateKind::CZ, {a, b}, std::nullopt}; }
  static Gate cp(double theta, QubitIndex a, QubitIndex b) {
    return {GateKind::CP, {a, b}, theta};
  }
  static Gate swap(QubitIndex a, QubitIndex b) { return {GateKind::SWAP, {a, b}, std::nullopt}; }
  static Gate ccx(QubitIndex c0, QubitIndex c1, QubitIndex target) {
    return {GateKind::CCX, {c0, c1, target}, std::nullopt};
  }

  bool touches(QubitIndex q) const;

  bool operator==(const Gate&) const = default;
};

/// Ordered gate list over a fixed qubit count. Treated as immutable once
/// shared; building happens through add() before that.
struct Circuit {
  std::uint32_t num_qubits = 0;
  std::string name;
  std::vector<Gate> gates;

  Circuit() = default;
  Circuit(std::uint32_t n, std::string circuit_name) : num_qubits(n), name(std::move(circuit_name)) {}

  void add(Gate g) { gates.push_back(std::move(g)); }
  std::size_t size() const { return gates.size(); }

  /// Equality of num_qubits and gate sequence; names are presentation only.
  bool structurally_equal(const Circuit& other) const {
    return num_qubits == other.num_qubits && gates == other.gates;
  }
};

struct Violation {
  std::size_t gate_index = 0;
  std::string message;
};

/// Every invariant violation in c: operand out of range, duplicate operands,
/// arity mismatch, missing/extra parameter, non-finite angle. Empty = ok.
std::vector<Violation> validate(const Circuit& c);

/// Critical path length: layers of an as-soon-as-possible schedule where a
/// gate depends on every earlier gate sharing a qubit. Empty circuit -> 0.
int depth(const Circuit& c);

/// Gates with exactly two qubit operands (CX, CZ, CP, SWAP). CCX counts 0.
int two_qubit_count(const Circuit& c);

/// Same gates on a wider register (extra wires idle). Throws if n is smaller
/// than c.num_qubits.
Circuit padded_to(const Circuit& c, std::uint32_t n);

}  // namespace microbench
