#include "microbench/transpile.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "microbench/error.hpp"

namespace microbench::transpile {

using std::numbers::pi;

BasisGateSet BasisGateSet::default_set() {
  return {{GateKind::CX, GateKind::H, GateKind::RZ}};
}

bool BasisGateSet::contains(GateKind k) const {
  return std::find(kinds.begin(), kinds.end(), k) != kinds.end();
}

const char* pipeline_level_name(PipelineLevel level) {
  switch (level) {
    case PipelineLevel::L0_route_only: return "L0";
    case PipelineLevel::L1_peephole: return "L1";
    case PipelineLevel::L2_aggressive: return "L2";
  }
  return "?";
}

namespace {

// Standard 15-gate Toffoli network over {H, T, Tdg, CX}, T layer emitted
// directly as RZ(+-pi/4); exact up to global phase.
void lower_ccx(std::vector<Gate>& out, QubitIndex a, QubitIndex b, QubitIndex t) {
  out.push_back(Gate::h(t));
  out.push_back(Gate::cx(b, t));
  out.push_back(Gate::rz(-pi / 4, t));
  out.push_back(Gate::cx(a, t));
  out.push_back(Gate::rz(pi / 4, t));
  out.push_back(Gate::cx(b, t));
  out.push_back(Gate::rz(-pi / 4, t));
  out.push_back(Gate::cx(a, t));
  out.push_back(Gate::rz(pi / 4, b));
  out.push_back(Gate::rz(pi / 4, t));
  out.push_back(Gate::h(t));
  out.push_back(Gate::cx(a, b));
  out.push_back(Gate::rz(pi / 4, a));
  out.push_back(Gate::rz(-pi / 4, b));
  out.push_back(Gate::cx(a, b));
}

void lower_gate(std::vector<Gate>& out, const Gate& g, const BasisGateSet& basis) {
  if (basis.contains(g.kind)) {
    out.push_back(g);
    return;
  }
  switch (g.kind) {
    case GateKind::S:
      out.push_back(Gate::rz(pi / 2, g.qubits[0]));
      break;
    case GateKind::Sdg:
      out.push_back(Gate::rz(-pi / 2, g.qubits[0]));
      break;
    case GateKind::T:
      out.push_back(Gate::rz(pi / 4, g.qubits[0]));
      break;
    case GateKind::Tdg:
      out.push_back(Gate::rz(-pi / 4, g.qubits[0]));
      break;
    case GateKind::X:
      out.push_back(Gate::h(g.qubits[0]));
      out.push_back(Gate::rz(pi, g.qubits[0]));
      out.push_back(Gate::h(g.qubits[0]));
      break;
    case GateKind::RX:
      out.push_back(Gate::h(g.qubits[0]));
      out.push_back(Gate::rz(*g.param, g.qubits[0]));
      out.push_back(Gate::h(g.qubits[0]));
      break;
    case GateKind::RY:
      out.push_back(Gate::rz(-pi / 2, g.qubits[0]));
      out.push_back(Gate::h(g.qubits[0]));
      out.push_back(Gate::rz(*g.param, g.qubits[0]));
      out.push_back(Gate::h(g.qubits[0]));
      out.push_back(Gate::rz(pi / 2, g.qubits[0]));
      break;
    case GateKind::CZ:
      out.push_back(Gate::h(g.qubits[1]));
      out.push_back(Gate::cx(g.qubits[0], g.qubits[1]));
      out.push_back(Gate::h(g.qubits[1]));
      break;
    case GateKind::CP: {
      const double half = *g.param / 2;
      out.push_back(Gate::rz(half, g.qubits[0]));
      out.push_back(Gate::cx(g.qubits[0], g.qubits[1]));
      out.push_back(Gate::rz(-half, g.qubits[1]));
      out.push_back(Gate::cx(g.qubits[0], g.qubits[1]));
      out.push_back(Gate::rz(half, g.qubits[1]));
      break;
    }
    case GateKind::SWAP:
      out.push_back(Gate::cx(g.qubits[0], g.qubits[1]));
      out.push_back(Gate::cx(g.qubits[1], g.qubits[0]));
      out.push_back(Gate::cx(g.qubits[0], g.qubits[1]));
      break;
    case GateKind::CCX:
      lower_ccx(out, g.qubits[0], g.qubits[1], g.qubits[2]);
      break;
    default:
      throw Error("decomposition unsupported for gate '" + std::string(gate_name(g.kind)) +
                  "' with the given basis");
  }
}

bool in_basis(const Circuit& c, const BasisGateSet& basis) {
  return std::all_of(c.gates.begin(), c.gates.end(),
                     [&](const Gate& g) { return basis.contains(g.kind); });
}

constexpr double kAngleTol = 1e-12;
constexpr int kMaxSweeps = 1000;

bool zero_rotation(double theta) { return std::abs(std::remainder(theta, 2 * pi)) < kAngleTol; }

/// Index of the first gate after `start` touching any of g's qubits, or -1.
std::ptrdiff_t next_touching(const std::vector<Gate>& gates, std::size_t start, const Gate& g) {
  for (std::size_t j = start + 1; j < gates.size(); ++j) {
    for (QubitIndex q : g.qubits) {
      if (gates[j].touches(q)) return static_cast<std::ptrdiff_t>(j);
    }
  }
  return -1;
}

bool peephole_sweep(std::vector<Gate>& gates) {
  bool changed = false;
  std::size_t i = 0;
  while (i < gates.size()) {
    Gate& g = gates[i];
    if (g.kind == GateKind::RZ && zero_rotation(*g.param)) {
      gates.erase(gates.begin() + static_cast<std::ptrdiff_t>(i));
      changed = true;
      continue;
    }
    const std::ptrdiff_t j = next_touching(gates, i, g);
    if (j >= 0) {
      const Gate& h = gates[j];
      const bool hh = g.kind == GateKind::H && h.kind == GateKind::H && g.qubits == h.qubits;
      const bool cxcx = g.kind == GateKind::CX && h.kind == GateKind::CX && g.qubits == h.qubits;
      const bool rzrz = g.kind == GateKind::RZ && h.kind == GateKind::RZ && g.qubits == h.qubits;
      if (hh || cxcx) {
        gates.erase(gates.begin() + j);
        gates.erase(gates.begin() + static_cast<std::ptrdiff_t>(i));
        changed = true;
        continue;
      }
      if (rzrz) {
        g.param = *g.param + *h.param;
        gates.erase(gates.begin() + j);
        changed = true;
        continue;  // re-examine the merged rotation for the zero rule
      }
    }
    ++i;
  }
  return changed;
}

/// CX(c,t) pairs separated only by commuting gates: RZ or another CX control
/// on c, another CX sharing the target on t.
bool cx_cancel_pass(std::vector<Gate>& gates) {
  for (std::size_t i = 0; i < gates.size(); ++i) {
    const Gate& g = gates[i];
    if (g.kind != GateKind::CX) continue;
    const QubitIndex ctrl = g.qubits[0], targ = g.qubits[1];
    for (std::size_t j = i + 1; j < gates.size(); ++j) {
      const Gate& h = gates[j];
      const bool on_ctrl = h.touches(ctrl);
      const bool on_targ = h.touches(targ);
      if (!on_ctrl && !on_targ) continue;
      if (h.kind == GateKind::CX && h.qubits == g.qubits) {
        gates.erase(gates.begin() + static_cast<std::ptrdiff_t>(j));
        gates.erase(gates.begin() + static_cast<std::ptrdiff_t>(i));
        return true;
      }
      if (on_ctrl && on_targ) break;
      if (on_ctrl) {
        const bool commutes = (h.kind == GateKind::RZ) ||
                              (h.kind == GateKind::CX && h.qubits[0] == ctrl);
        if (!commutes) break;
      } else {
        if (!(h.kind == GateKind::CX && h.qubits[1] == targ)) break;
      }
    }
  }
  return false;
}

Circuit peephole_counted(const Circuit& c, std::int64_t& removed) {
  Circuit out = c;
  const auto before = static_cast<std::int64_t>(out.gates.size());
  int sweeps = 0;
  while (peephole_sweep(out.gates)) {
    if (++sweeps > kMaxSweeps) {
      throw Error("peephole did not reach a fixed point within " +
                  std::to_string(kMaxSweeps) + " sweeps");
    }
  }
  removed += before - static_cast<std::int64_t>(out.gates.size());
  return out;
}

}  // namespace

Circuit decompose_to_basis(const Circuit& c, const BasisGateSet& basis) {
  Circuit out(c.num_qubits, c.name);
  for (const Gate& g : c.gates) {
    lower_gate(out.gates, g, basis);
  }
  return out;
}

TranspileResult route(const Circuit& c, const CouplingMap& coupling, LayoutMap initial_layout) {
  if (coupling.num_qubits() < c.num_qubits) {
    throw Error("coupling map smaller than circuit (" + std::to_string(coupling.num_qubits()) +
                " < " + std::to_string(c.num_qubits) + " qubits)");
  }
  if (initial_layout.size() != coupling.num_qubits() || !initial_layout.is_permutation()) {
    throw Error("initial layout must be a permutation of the coupling map's qubits");
  }

  LayoutMap layout = std::move(initial_layout);
  std::vector<QubitIndex> physical_to_logical(coupling.num_qubits());
  for (QubitIndex l = 0; l < layout.size(); ++l) {
    physical_to_logical[layout.logical_to_physical[l]] = l;
  }
  auto swap_physical = [&](QubitIndex p, QubitIndex q) {
    const QubitIndex lp = physical_to_logical[p], lq = physical_to_logical[q];
    std::swap(physical_to_logical[p], physical_to_logical[q]);
    layout.logical_to_physical[lp] = q;
    layout.logical_to_physical[lq] = p;
  };

  Circuit out(coupling.num_qubits(), c.name);
  std::int64_t swaps_added = 0;
  for (const Gate& g : c.gates) {
    if (g.qubits.size() > 2) {
      throw Error("route expects 1- and 2-qubit gates only; decompose first");
    }
    if (g.qubits.size() == 1) {
      Gate mapped = g;
      mapped.qubits[0] = layout.physical(g.qubits[0]);
      out.add(std::move(mapped));
      continue;
    }
    QubitIndex p = layout.physical(g.qubits[0]);
    QubitIndex q = layout.physical(g.qubits[1]);
    if (!coupling.adjacent(p, q)) {
      // The lower-indexed endpoint walks the canonical shortest path until
      // adjacency is reached.
      const auto path = coupling.shortest_path(std::min(p, q), std::max(p, q));
      for (std::size_t step = 0; step + 2 < path.size(); ++step) {
        out.add(Gate::swap(path[step], path[step + 1]));
        swap_physical(path[step], path[step + 1]);
        ++swaps_added;
      }
      p = layout.physical(g.qubits[0]);
      q = layout.physical(g.qubits[1]);
    }
    Gate mapped = g;
    mapped.qubits = {p, q};
    out.add(std::move(mapped));
  }

  TranspileResult result{std::move(out), std::move(layout), {}};
  result.stats["route.swaps_added"] = swaps_added;
  return result;
}

Circuit peephole(const Circuit& c) {
  std::int64_t ignored = 0;
  return peephole_counted(c, ignored);
}

TranspileResult run_pipeline(const Circuit& c, PipelineLevel level, const CouplingMap& coupling) {
  const BasisGateSet basis = BasisGateSet::default_set();
  std::map<std::string, std::int64_t> stats;

  Circuit work = decompose_to_basis(c, basis);
  stats["decompose.gates_added"] =
      static_cast<std::int64_t>(work.gates.size()) - static_cast<std::int64_t>(c.gates.size());

  std::int64_t peephole_removed = 0;
  if (level != PipelineLevel::L0_route_only) {
    work = peephole_counted(work, peephole_removed);
  }

  TranspileResult routed = route(work, coupling, LayoutMap::identity(coupling.num_qubits()));
  stats.merge(routed.stats);

  // Lower the router's SWAP insertions so the result is basis-only.
  Circuit out = decompose_to_basis(routed.circuit, basis);

  if (level != PipelineLevel::L0_route_only) {
    out = peephole_counted(out, peephole_removed);
  }

  std::int64_t cx_removed = 0;
  if (level == PipelineLevel::L2_aggressive) {
    int rounds = 0;
    while (true) {
      bool any = false;
      while (cx_cancel_pass(out.gates)) {
        cx_removed += 2;
        any = true;
      }
      if (!any) break;
      out = peephole_counted(out, peephole_removed);
      if (++rounds > kMaxSweeps) {
        throw Error("cx cancellation did not reach a fixed point");
      }
    }
    stats["cx_cancel.gates_removed"] = cx_removed;
  }
  if (level != PipelineLevel::L0_route_only) {
    stats["peephole.gates_removed"] = peephole_removed;
  }

  return {std::move(out), std::move(routed.final_layout), std::move(stats)};
}

}  // namespace microbench::transpile
