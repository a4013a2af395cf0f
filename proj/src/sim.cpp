#include "microbench/sim.hpp"

#include <cmath>
#include <numbers>

#include "microbench/error.hpp"
#include "microbench/prng.hpp"

namespace microbench::sim {

namespace {

using Complex = std::complex<double>;

void apply_single(std::vector<Complex>& amps, QubitIndex q, const Complex m[2][2]) {
  const std::uint64_t bit = 1ULL << q;
  const std::uint64_t n = amps.size();
  for (std::uint64_t idx = 0; idx < n; ++idx) {
    if (idx & bit) continue;
    const Complex a = amps[idx];
    const Complex b = amps[idx | bit];
    amps[idx] = m[0][0] * a + m[0][1] * b;
    amps[idx | bit] = m[1][0] * a + m[1][1] * b;
  }
}

void apply_phase_on_one(std::vector<Complex>& amps, QubitIndex q, Complex phase) {
  const std::uint64_t bit = 1ULL << q;
  for (std::uint64_t idx = 0; idx < amps.size(); ++idx) {
    if (idx & bit) amps[idx] *= phase;
  }
}

void apply_gate(std::vector<Complex>& amps, const Gate& g) {
  using std::numbers::pi;
  constexpr double kInvSqrt2 = 0.70710678118654752440;
  switch (g.kind) {
    case GateKind::H: {
      const Complex m[2][2] = {{kInvSqrt2, kInvSqrt2}, {kInvSqrt2, -kInvSqrt2}};
      apply_single(amps, g.qubits[0], m);
      break;
    }
    case GateKind::X: {
      const std::uint64_t bit = 1ULL << g.qubits[0];
      for (std::uint64_t idx = 0; idx < amps.size(); ++idx) {
        if (!(idx & bit)) std::swap(amps[idx], amps[idx | bit]);
      }
      break;
    }
    case GateKind::S:
      apply_phase_on_one(amps, g.qubits[0], Complex(0.0, 1.0));
      break;
    case GateKind::Sdg:
      apply_phase_on_one(amps, g.qubits[0], Complex(0.0, -1.0));
      break;
    case GateKind::T:
      apply_phase_on_one(amps, g.qubits[0], std::polar(1.0, pi / 4));
      break;
    case GateKind::Tdg:
      apply_phase_on_one(amps, g.qubits[0], std::polar(1.0, -pi / 4));
      break;
    case GateKind::RX: {
      const double half = *g.param / 2;
      const Complex m[2][2] = {{std::cos(half), Complex(0.0, -std::sin(half))},
                               {Complex(0.0, -std::sin(half)), std::cos(half)}};
      apply_single(amps, g.qubits[0], m);
      break;
    }
    case GateKind::RY: {
      const double half = *g.param / 2;
      const Complex m[2][2] = {{std::cos(half), -std::sin(half)},
                               {std::sin(half), std::cos(half)}};
      apply_single(amps, g.qubits[0], m);
      break;
    }
    case GateKind::RZ: {
      const double half = *g.param / 2;
      const std::uint64_t bit = 1ULL << g.qubits[0];
      const Complex lo = std::polar(1.0, -half);
      const Complex hi = std::polar(1.0, half);
      for (std::uint64_t idx = 0; idx < amps.size(); ++idx) {
        amps[idx] *= (idx & bit) ? hi : lo;
      }
      break;
    }
    case GateKind::CX: {
      const std::uint64_t ctrl = 1ULL << g.qubits[0];
      const std::uint64_t targ = 1ULL << g.qubits[1];
      for (std::uint64_t idx = 0; idx < amps.size(); ++idx) {
        if ((idx & ctrl) && !(idx & targ)) std::swap(amps[idx], amps[idx | targ]);
      }
      break;
    }
    case GateKind::CZ: {
      const std::uint64_t mask = (1ULL << g.qubits[0]) | (1ULL << g.qubits[1]);
      for (std::uint64_t idx = 0; idx < amps.size(); ++idx) {
        if ((idx & mask) == mask) amps[idx] = -amps[idx];
      }
      break;
    }
    case GateKind::CP: {
      const std::uint64_t mask = (1ULL << g.qubits[0]) | (1ULL << g.qubits[1]);
      const Complex phase = std::polar(1.0, *g.param);
      for (std::uint64_t idx = 0; idx < amps.size(); ++idx) {
        if ((idx & mask) == mask) amps[idx] *= phase;
      }
      break;
    }
    case GateKind::SWAP: {
      const std::uint64_t a = 1ULL << g.qubits[0];
      const std::uint64_t b = 1ULL << g.qubits[1];
      for (std::uint64_t idx = 0; idx < amps.size(); ++idx) {
        if ((idx & a) && !(idx & b)) std::swap(amps[idx], amps[(idx & ~a) | b]);
      }
      break;
    }
    case GateKind::CCX: {
      const std::uint64_t ctrl = (1ULL << g.qubits[0]) | (1ULL << g.qubits[1]);
      const std::uint64_t targ = 1ULL << g.qubits[2];
      for (std::uint64_t idx = 0; idx < amps.size(); ++idx) {
        if (((idx & ctrl) == ctrl) && !(idx & targ)) std::swap(amps[idx], amps[idx | targ]);
      }
      break;
    }
  }
}

/// Index whose bit perm[l] equals bit l of `logical`.
std::uint64_t permute_bits(std::uint64_t logical, const LayoutMap& perm) {
  std::uint64_t physical = 0;
  for (std::uint32_t l = 0; l < perm.size(); ++l) {
    if (logical & (1ULL << l)) physical |= 1ULL << perm.logical_to_physical[l];
  }
  return physical;
}

StateVector random_product_state(std::uint32_t n, SplitMix64& rng) {
  StateVector state = StateVector::basis_state(n, 0);
  for (std::uint32_t q = 0; q < n; ++q) {
    // Uniform on the Bloch sphere.
    const double cos_theta = 1.0 - 2.0 * rng.unit();
    const double theta = std::acos(cos_theta);
    const double phi = 2.0 * std::numbers::pi * rng.unit();
    const Complex m[2][2] = {{std::cos(theta / 2), -std::sin(theta / 2)},
                             {std::polar(std::sin(theta / 2), phi),
                              std::polar(std::cos(theta / 2), phi)}};
    apply_single(state.amplitudes, q, m);
  }
  return state;
}

}  // namespace

StateVector StateVector::zero_state(std::uint32_t n) { return basis_state(n, 0); }

StateVector StateVector::basis_state(std::uint32_t n, std::uint64_t index) {
  if (n > kMaxQubits) {
    throw Error("statevector capacity exceeded: " + std::to_string(n) + " qubits (max " +
                std::to_string(kMaxQubits) + ")");
  }
  StateVector state;
  state.num_qubits = n;
  state.amplitudes.assign(1ULL << n, Complex(0.0, 0.0));
  state.amplitudes.at(index) = Complex(1.0, 0.0);
  return state;
}

double StateVector::norm_squared() const {
  double total = 0.0;
  for (const auto& a : amplitudes) total += std::norm(a);
  return total;
}

StateVector run(const Circuit& c, StateVector input) {
  if (c.num_qubits > kMaxQubits) {
    throw Error("simulator capacity exceeded: " + std::to_string(c.num_qubits) +
                " qubits (max " + std::to_string(kMaxQubits) + ")");
  }
  if (input.num_qubits != c.num_qubits) {
    throw Error("statevector size does not match circuit qubit count");
  }
  for (const Gate& g : c.gates) {
    apply_gate(input.amplitudes, g);
  }
  return input;
}

bool equivalent(const Circuit& c1, const Circuit& c2, const LayoutMap& perm, double tol) {
  if (c1.num_qubits != c2.num_qubits) {
    throw Error("equivalent: qubit-count mismatch");
  }
  const std::uint32_t n = c1.num_qubits;
  if (perm.size() != n || !perm.is_permutation()) {
    throw Error("equivalent: perm is not a permutation of the circuit's qubits");
  }
  constexpr double kPhaseFloor = 1e-8;

  if (n <= 6) {
    // Column-by-column unitary comparison with one shared global phase,
    // fixed by the first amplitude pair that is nonzero in both.
    const std::uint64_t dim = 1ULL << n;
    std::vector<std::vector<Complex>> lhs(dim), rhs(dim);
    for (std::uint64_t k = 0; k < dim; ++k) {
      lhs[k] = run(c1, StateVector::basis_state(n, k)).amplitudes;
      const auto raw = run(c2, StateVector::basis_state(n, k)).amplitudes;
      rhs[k].resize(dim);
      for (std::uint64_t z = 0; z < dim; ++z) {
        rhs[k][z] = raw[permute_bits(z, perm)];
      }
    }
    Complex phase(1.0, 0.0);
    bool phase_found = false;
    for (std::uint64_t k = 0; k < dim && !phase_found; ++k) {
      for (std::uint64_t z = 0; z < dim && !phase_found; ++z) {
        if (std::abs(lhs[k][z]) > kPhaseFloor && std::abs(rhs[k][z]) > kPhaseFloor) {
          phase = lhs[k][z] / rhs[k][z];
          phase /= std::abs(phase);
          phase_found = true;
        }
      }
    }
    for (std::uint64_t k = 0; k < dim; ++k) {
      for (std::uint64_t z = 0; z < dim; ++z) {
        if (std::abs(lhs[k][z] - phase * rhs[k][z]) >= tol) return false;
      }
    }
    return true;
  }

  // Sampled mode: fidelity on seeded random product states.
  SplitMix64 rng(0x5eed0fc1u);
  for (int trial = 0; trial < 20; ++trial) {
    StateVector input = random_product_state(n, rng);
    const auto out1 = run(c1, input).amplitudes;
    const auto out2 = run(c2, std::move(input)).amplitudes;
    Complex overlap(0.0, 0.0);
    for (std::uint64_t z = 0; z < out1.size(); ++z) {
      overlap += std::conj(out1[z]) * out2[permute_bits(z, perm)];
    }
    if (std::norm(overlap) <= 1.0 - tol) return false;
  }
  return true;
}

}  // namespace microbench::sim
