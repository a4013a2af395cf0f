#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "microbench/circuit.hpp"
#include "microbench/coupling.hpp"

namespace microbench::sim {

/// Corpus maximum is 8 qubits; 12 leaves headroom while keeping exhaustive
/// checks cheap.
inline constexpr std::uint32_t kMaxQubits = 12;

/// Dense state over 2^n amplitudes. Qubit 0 is the least significant bit of
/// the amplitude index.
struct StateVector {
  std::uint32_t num_qubits = 0;
  std::vector<std::complex<double>> amplitudes;

  static StateVector zero_state(std::uint32_t n);
  static StateVector basis_state(std::uint32_t n, std::uint64_t index);

  double norm_squared() const;
};

/// Applies every gate of c in sequence. Throws on qubit-count mismatch or
/// circuits beyond kMaxQubits.
StateVector run(const Circuit& c, StateVector input);

/// Semantic equivalence of c1 and c2 up to the wire permutation `perm`
/// (logical wire l of c1 lives on physical wire perm[l] of c2) and one global
/// phase. Exhaustive over all basis states for <= 6 qubits; for larger
/// circuits, 20 seeded random product states with fidelity > 1 - tol each.
bool equivalent(const Circuit& c1, const Circuit& c2, const LayoutMap& perm, double tol);

}  // namespace microbench::sim
