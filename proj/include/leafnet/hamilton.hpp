#pragma once

#include <optional>
#include <vector>

#include "leafnet/graph.hpp"

namespace leafnet {

enum class PathKind { Cycle, Path };

struct PathWitness {
  std::vector<int> order;
  PathKind kind = PathKind::Path;

  Mask vertex_mask() const;
  int front() const { return order.front(); }
  int back() const { return order.back(); }
};

/// Checks the witness against g: adjacency, distinctness and, unless
/// `spanning` is false, coverage of `alive`.
bool is_valid_witness(const Graph& g, const PathWitness& w, Mask alive, bool spanning = true);

// Every search below works on the subgraph induced by `alive`, so callers can
// ask about G - v without relabelling.

std::optional<PathWitness> hamiltonian_cycle(const Graph& g, Mask alive);
inline std::optional<PathWitness> hamiltonian_cycle(const Graph& g) {
  return hamiltonian_cycle(g, g.vertices());
}

std::optional<PathWitness> hamiltonian_path_between(const Graph& g, int u, int v, Mask alive);
inline std::optional<PathWitness> hamiltonian_path_between(const Graph& g, int u, int v) {
  return hamiltonian_path_between(g, u, v, g.vertices());
}

/// Any hamiltonian path; with `start` set, only paths beginning there.
std::optional<PathWitness> hamiltonian_path(const Graph& g, Mask alive, std::optional<int> start = {});

bool is_hamiltonian(const Graph& g, Mask alive);
inline bool is_hamiltonian(const Graph& g) { return is_hamiltonian(g, g.vertices()); }

bool is_traceable(const Graph& g, Mask alive);
inline bool is_traceable(const Graph& g) { return is_traceable(g, g.vertices()); }

/// A maximum-order path of the subgraph on `alive`.
PathWitness longest_path(const Graph& g, Mask alive);
inline PathWitness longest_path(const Graph& g) { return longest_path(g, g.vertices()); }

bool is_1_hamiltonian(const Graph& g);

}  // namespace leafnet
