#include "microbench/corpus.hpp"

#include <algorithm>
#include <numbers>
#include <numeric>

#include "microbench/prng.hpp"

namespace microbench::corpus {

using std::numbers::pi;

Circuit build_adder() {
  Circuit c(4, "adder");
  c.add(Gate::ccx(0, 1, 3));  // carry  = a & b
  c.add(Gate::cx(0, 1));      // b      = a ^ b
  c.add(Gate::ccx(2, 1, 3));  // carry |= cin & (a ^ b)
  c.add(Gate::cx(2, 1));      // sum    = a ^ b ^ cin
  return c;
}

Circuit build_qft(std::uint32_t n) {
  Circuit c(n, "qft" + std::to_string(n));
  for (std::uint32_t j = n; j-- > 0;) {
    c.add(Gate::h(j));
    for (std::uint32_t i = j; i-- > 0;) {
      c.add(Gate::cp(pi / static_cast<double>(1ULL << (j - i)), i, j));
    }
  }
  for (std::uint32_t i = 0; i < n / 2; ++i) {
    c.add(Gate::swap(i, n - 1 - i));
  }
  return c;
}

namespace {

void add_ccz(Circuit& c, QubitIndex a, QubitIndex b, QubitIndex target) {
  c.add(Gate::h(target));
  c.add(Gate::ccx(a, b, target));
  c.add(Gate::h(target));
}

}  // namespace

Circuit build_grover3() {
  Circuit c(3, "grover3");
  for (QubitIndex q = 0; q < 3; ++q) c.add(Gate::h(q));
  // Oracle: phase flip on |111>.
  add_ccz(c, 0, 1, 2);
  // Diffusion.
  for (QubitIndex q = 0; q < 3; ++q) c.add(Gate::h(q));
  for (QubitIndex q = 0; q < 3; ++q) c.add(Gate::x(q));
  add_ccz(c, 0, 1, 2);
  for (QubitIndex q = 0; q < 3; ++q) c.add(Gate::x(q));
  for (QubitIndex q = 0; q < 3; ++q) c.add(Gate::h(q));
  return c;
}

Circuit build_hea(std::uint32_t n, std::uint32_t layers) {
  Circuit c(n, "hea" + std::to_string(n));
  std::uint32_t k = 0;
  auto next_theta = [&k] { return 0.1 * static_cast<double>(++k); };
  for (std::uint32_t layer = 0; layer < layers; ++layer) {
    for (QubitIndex q = 0; q < n; ++q) c.add(Gate::ry(next_theta(), q));
    for (QubitIndex q = 0; q < n; ++q) c.add(Gate::rz(next_theta(), q));
    for (QubitIndex q = 0; q + 1 < n; ++q) c.add(Gate::cx(q, q + 1));
  }
  return c;
}

Circuit build_random_clifford(std::uint32_t n, std::uint32_t depth_layers, CorpusSeed seed) {
  Circuit c(n, "clifford" + std::to_string(n));
  SplitMix64 rng(seed);
  constexpr GateKind kPairKinds[] = {GateKind::CX, GateKind::CZ, GateKind::SWAP};
  constexpr GateKind kSingleKinds[] = {GateKind::H, GateKind::S, GateKind::X};
  std::vector<QubitIndex> order(n);
  for (std::uint32_t layer = 0; layer < depth_layers; ++layer) {
    std::iota(order.begin(), order.end(), 0);
    for (std::uint32_t i = n; i-- > 1;) {
      std::swap(order[i], order[rng.below(i + 1)]);
    }
    // Every qubit gets exactly one gate, so construction layers never merge
    // and the layered depth equals depth_layers.
    std::vector<QubitIndex> unpaired;
    std::uint32_t i = 0;
    for (; i + 1 < n; i += 2) {
      if (rng.below(2) == 1) {
        const GateKind kind = kPairKinds[rng.below(3)];
        c.add({kind, {order[i], order[i + 1]}, std::nullopt});
      } else {
        unpaired.push_back(order[i]);
        unpaired.push_back(order[i + 1]);
      }
    }
    for (; i < n; ++i) unpaired.push_back(order[i]);
    std::sort(unpaired.begin(), unpaired.end());
    for (QubitIndex q : unpaired) {
      c.add({kSingleKinds[rng.below(3)], {q}, std::nullopt});
    }
  }
  return c;
}

namespace {

// Fredkin from CX + CCX; exact identity on (u, v) when the control is 0.
void add_cswap(Circuit& c, QubitIndex ctrl, QubitIndex u, QubitIndex v) {
  c.add(Gate::cx(v, u));
  c.add(Gate::ccx(ctrl, u, v));
  c.add(Gate::cx(v, u));
}

}  // namespace

Circuit build_modmul() {
  // Controlled x2 mod 5, shift-and-reduce: rotate the register left through
  // b3 (so x < 5 becomes 2x in {0,2,4,6,8}), then subtract 5 from 6 and from
  // 8 via compute/uncompute on the ancillas. Wires: q0 control, q1..q4 data
  // bits b0..b3, q5/q6 ancilla.
  Circuit c(7, "modmul7");
  const QubitIndex ctrl = 0, b0 = 1, b1 = 2, b2 = 3, b3 = 4, a1 = 5, a2 = 6;

  add_cswap(c, ctrl, b2, b3);
  add_cswap(c, ctrl, b1, b2);
  add_cswap(c, ctrl, b0, b1);

  // 6 -> 1: among reachable values {0,2,4,6,8} only 6 has b1 & b2 set, and
  // after the fix-up only 1 has b0 set.
  c.add(Gate::ccx(b1, b2, a1));
  c.add(Gate::ccx(ctrl, a1, b0));
  c.add(Gate::ccx(ctrl, a1, b1));
  c.add(Gate::ccx(ctrl, a1, b2));
  c.add(Gate::ccx(ctrl, b0, a1));

  // 8 -> 3: b3 identifies 8 in {0,2,4,1,8}; afterwards 3 is the only value
  // with both b0 and b1 set, uncomputed through a1 as scratch.
  c.add(Gate::ccx(ctrl, b3, a2));
  c.add(Gate::cx(a2, b0));
  c.add(Gate::cx(a2, b1));
  c.add(Gate::cx(a2, b3));
  c.add(Gate::ccx(b0, b1, a1));
  c.add(Gate::ccx(ctrl, a1, a2));
  c.add(Gate::ccx(b0, b1, a1));

  return c;
}

std::vector<Circuit> corpus_all(CorpusSeed seed) {
  std::vector<Circuit> circuits;
  circuits.push_back(build_adder());
  circuits.push_back(build_qft(5));
  circuits.push_back(build_grover3());
  circuits.push_back(build_hea(8, 2));
  circuits.push_back(build_random_clifford(8, 15, seed));
  circuits.push_back(build_modmul());
  return circuits;
}

}  // namespace microbench::corpus
