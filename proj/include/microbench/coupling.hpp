#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "microbench/circuit.hpp"

namespace microbench {

/// Undirected connectivity over physical qubits. Edges are normalized to
/// (low, high), sorted and deduplicated; the graph must be connected.
class CouplingMap {
 public:
  CouplingMap(std::uint32_t num_qubits, std::vector<std::pair<QubitIndex, QubitIndex>> edges);

  static CouplingMap linear(std::uint32_t n);
  static CouplingMap ring(std::uint32_t n);
  static CouplingMap grid(std::uint32_t rows, std::uint32_t cols);

  std::uint32_t num_qubits() const { return num_qubits_; }
  const std::vector<std::pair<QubitIndex, QubitIndex>>& edges() const { return edges_; }

  bool adjacent(QubitIndex a, QubitIndex b) const;
  /// Ascending neighbor list.
  const std::vector<QubitIndex>& neighbors(QubitIndex q) const { return adjacency_[q]; }
  int distance(QubitIndex a, QubitIndex b) const;
  /// Lexicographically smallest shortest path from `from` to `to`, inclusive.
  std::vector<QubitIndex> shortest_path(QubitIndex from, QubitIndex to) const;

 private:
  std::uint32_t num_qubits_ = 0;
  std::vector<std::pair<QubitIndex, QubitIndex>> edges_;
  std::vector<std::vector<QubitIndex>> adjacency_;
};

/// Bijective logical -> physical wire assignment.
struct LayoutMap {
  std::vector<QubitIndex> logical_to_physical;

  static LayoutMap identity(std::uint32_t n);

  QubitIndex physical(QubitIndex logical) const { return logical_to_physical[logical]; }
  std::uint32_t size() const { return static_cast<std::uint32_t>(logical_to_physical.size()); }
  bool is_permutation() const;

  bool operator==(const LayoutMap&) const = default;
};

}  // namespace microbench
