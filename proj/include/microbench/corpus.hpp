#pragma once

#include <cstdint>
#include <vector>

#include "microbench/circuit.hpp"

namespace microbench::corpus {

using CorpusSeed = std::uint64_t;

inline constexpr CorpusSeed kDefaultSeed = 42;

/// 4-qubit one-bit full adder (VBE style): q0=a, q1=b, q2=carry-in,
/// q3=carry-out. Leaves q1 = a^b^cin and q3 = majority carry; on |a,b,0,0>
/// that is sum a^b and carry a&b.
Circuit build_adder();

/// Textbook QFT on n qubits: per qubit high to low one H plus controlled
/// phases from every lower qubit, then floor(n/2) bit-reversal swaps.
Circuit build_qft(std::uint32_t n = 5);

/// One Grover iteration on 3 qubits, oracle marking |111> via an H-conjugated
/// CCX, then the standard diffusion operator.
Circuit build_grover3();

/// Layered hardware-efficient ansatz: per layer RY then RZ on every qubit and
/// a linear CX chain. Parameters bound to 0.1*(k+1) in emission order.
Circuit build_hea(std::uint32_t n = 8, std::uint32_t layers = 2);

/// depth_layers layers, each touching every qubit: shuffled qubits are walked
/// two at a time, each candidate pair becomes one of {CX, CZ, SWAP} with
/// probability 1/2, leftover qubits get one of {H, S, X}.
Circuit build_random_clifford(std::uint32_t n, std::uint32_t depth_layers, CorpusSeed seed);

/// Controlled multiplication by 2 mod 5: q0 control, q1..q4 data (LSB first),
/// q5/q6 ancilla. On |1>|x> with x < 5 the register becomes 2x mod 5 with
/// clean ancilla; control 0 is the identity on the data register.
Circuit build_modmul();

/// The six benchmark circuits with default parameters, in fixed order:
/// adder, qft5, grover3, hea8, clifford8, modmul7.
std::vector<Circuit> corpus_all(CorpusSeed seed = kDefaultSeed);

}  // namespace microbench::corpus
