#include "microbench/coupling.hpp"

#include <algorithm>
#include <deque>
#include <numeric>

#include "microbench/error.hpp"

namespace microbench {

CouplingMap::CouplingMap(std::uint32_t num_qubits,
                         std::vector<std::pair<QubitIndex, QubitIndex>> edges)
    : num_qubits_(num_qubits) {
  if (num_qubits == 0) {
    throw Error("coupling map needs at least one qubit");
  }
  for (auto& [a, b] : edges) {
    if (a == b) {
      throw Error("coupling map has a self-loop on q" + std::to_string(a));
    }
    if (a >= num_qubits || b >= num_qubits) {
      throw Error("coupling map edge endpoint out of range");
    }
    if (a > b) std::swap(a, b);
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  edges_ = std::move(edges);

  adjacency_.assign(num_qubits_, {});
  for (auto [a, b] : edges_) {
    adjacency_[a].push_back(b);
    adjacency_[b].push_back(a);
  }
  for (auto& nbrs : adjacency_) {
    std::sort(nbrs.begin(), nbrs.end());
  }

  // Reject disconnected maps.
  std::vector<bool> seen(num_qubits_, false);
  std::deque<QubitIndex> queue{0};
  seen[0] = true;
  std::uint32_t reached = 1;
  while (!queue.empty()) {
    QubitIndex q = queue.front();
    queue.pop_front();
    for (QubitIndex nbr : adjacency_[q]) {
      if (!seen[nbr]) {
        seen[nbr] = true;
        ++reached;
        queue.push_back(nbr);
      }
    }
  }
  if (reached != num_qubits_) {
    throw Error("coupling map is disconnected");
  }
}

CouplingMap CouplingMap::linear(std::uint32_t n) {
  std::vector<std::pair<QubitIndex, QubitIndex>> edges;
  for (std::uint32_t q = 0; q + 1 < n; ++q) {
    edges.emplace_back(q, q + 1);
  }
  return CouplingMap(n, std::move(edges));
}

CouplingMap CouplingMap::ring(std::uint32_t n) {
  std::vector<std::pair<QubitIndex, QubitIndex>> edges;
  for (std::uint32_t q = 0; q + 1 < n; ++q) {
    edges.emplace_back(q, q + 1);
  }
  if (n > 2) {
    edges.emplace_back(0, n - 1);
  }
  return CouplingMap(n, std::move(edges));
}

CouplingMap CouplingMap::grid(std::uint32_t rows, std::uint32_t cols) {
  std::vector<std::pair<QubitIndex, QubitIndex>> edges;
  auto at = [cols](std::uint32_t r, std::uint32_t c) { return r * cols + c; };
  for (std::uint32_t r = 0; r < rows; ++r) {
    for (std::uint32_t c = 0; c < cols; ++c) {
      if (c + 1 < cols) edges.emplace_back(at(r, c), at(r, c + 1));
      if (r + 1 < rows) edges.emplace_back(at(r, c), at(r + 1, c));
    }
  }
  return CouplingMap(rows * cols, std::move(edges));
}

bool CouplingMap::adjacent(QubitIndex a, QubitIndex b) const {
  const auto& nbrs = adjacency_[a];
  return std::binary_search(nbrs.begin(), nbrs.end(), b);
}

int CouplingMap::distance(QubitIndex a, QubitIndex b) const {
  return static_cast<int>(shortest_path(a, b).size()) - 1;
}

std::vector<QubitIndex> CouplingMap::shortest_path(QubitIndex from, QubitIndex to) const {
  if (from == to) return {from};
  // BFS visiting neighbors in ascending order; the first parent assignment
  // wins, which makes the reconstructed path lexicographically smallest among
  // shortest paths.
  std::vector<QubitIndex> parent(num_qubits_, num_qubits_);
  std::deque<QubitIndex> queue{from};
  parent[from] = from;
  while (!queue.empty()) {
    QubitIndex q = queue.front();
    queue.pop_front();
    if (q == to) break;
    for (QubitIndex nbr : adjacency_[q]) {
      if (parent[nbr] == num_qubits_) {
        parent[nbr] = q;
        queue.push_back(nbr);
      }
    }
  }
  if (parent[to] == num_qubits_) {
    throw Error("no path between q" + std::to_string(from) + " and q" + std::to_string(to));
  }
  std::vector<QubitIndex> path{to};
  while (path.back() != from) {
    path.push_back(parent[path.back()]);
  }
  std::reverse(path.begin(), path.end());
  return path;
}

LayoutMap LayoutMap::identity(std::uint32_t n) {
  LayoutMap layout;
  layout.logical_to_physical.resize(n);
  std::iota(layout.logical_to_physical.begin(), layout.logical_to_physical.end(), 0);
  return layout;
}

bool LayoutMap::is_permutation() const {
  std::vector<bool> seen(logical_to_physical.size(), false);
  for (QubitIndex p : logical_to_physical) {
    if (p >= logical_to_physical.size() || seen[p]) return false;
    seen[p] = true;
  }
  return true;
}

}  // namespace microbench
