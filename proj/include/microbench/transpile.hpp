#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "microbench/circuit.hpp"
#include "microbench/coupling.hpp"

namespace microbench::transpile {

struct BasisGateSet {
  std::vector<GateKind> kinds;

  /// {CX, H, RZ}.
  static BasisGateSet default_set();

  bool contains(GateKind k) const;
};

enum class PipelineLevel {
  L0_route_only,
  L1_peephole,
  L2_aggressive,
};

const char* pipeline_level_name(PipelineLevel level);

struct TranspileResult {
  Circuit circuit;
  LayoutMap final_layout;
  std::map<std::string, std::int64_t> stats;
};

/// Rewrites every gate into basis kinds, unitarily equivalent up to global
/// phase. Gates already in the basis pass through unchanged.
Circuit decompose_to_basis(const Circuit& c, const BasisGateSet& basis = BasisGateSet::default_set());

/// Greedy SWAP insertion: each non-adjacent 2Q gate walks its lower-physical
/// endpoint along the lexicographically smallest shortest path. The final
/// permutation is recorded, not undone. Output is on coupling.num_qubits
/// wires and contains literal SWAP gates where they were inserted.
TranspileResult route(const Circuit& c, const CouplingMap& coupling, LayoutMap initial_layout);

/// Fixed-point local rewrites on a basis-gates-only circuit: H pair and CX
/// pair cancellation, RZ merging, zero-rotation removal.
Circuit peephole(const Circuit& c);

/// L0: decompose, route. L1: decompose, peephole, route, peephole.
/// L2: L1 plus commutation-aware CX cancellation re-run with peephole to a
/// fixed point. Router-inserted SWAPs are lowered to 3 CX at every level so
/// the result contains basis gates only.
TranspileResult run_pipeline(const Circuit& c, PipelineLevel level, const CouplingMap& coupling);

}  // namespace microbench::transpile
