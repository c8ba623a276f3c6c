#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "leafnet/faultcost.hpp"
#include "leafnet/graph.hpp"
#include "leafnet/profile.hpp"

namespace leafnet {

enum class ConnectivityFilter { Any, TwoConnected, ThreeConnected };

struct GraphClassFilter {
  std::optional<int> min_girth;
  ConnectivityFilter connectivity = ConnectivityFilter::Any;
  std::optional<int> regular_degree;
  bool bipartite_only = false;

  bool accepts(const Graph& g) const;
  std::string describe() const;
};

using Edge = std::pair<int, int>;

/// Calls `visit` once per spanning tree. Guarded to n <= 12.
void for_each_spanning_tree(const Graph& g, const std::function<void(std::span<const Edge>)>& visit);
std::vector<std::vector<Edge>> all_spanning_trees(const Graph& g);
/// Kirchhoff count (floating point, rounded).
double spanning_tree_count(const Graph& g);

// Naive hamiltonicity: permutation enumeration up to 8 vertices, plain DFS above.
bool brute_hamiltonian(const Graph& g);
bool brute_traceable(const Graph& g);
bool brute_path_between(const Graph& g, int u, int v);
bool brute_1_hamiltonian(const Graph& g);

/// ml and ml-subgraph profiles from the definition (n <= 12).
MlProfile brute_ml_profile(const Graph& g);
/// φ from the definition with a naive τ (n <= 10). Vertex-deleted subgraphs are
/// relabelled compactly and mapped back, unlike the fast path.
FaultCostReport brute_fault_cost(const Graph& g);

int independence_number(const Graph& g);

/// Canonical labelling: the relabelled graph is the same for isomorphic inputs.
struct Canonical {
  Graph graph;
  std::vector<int> labelling;  // old label -> canonical label
};
Canonical canonical_form(const Graph& g);
/// Reference canonical form by trying every permutation (n <= 8).
Graph canonical_form_brute(const Graph& g);

/// One representative per isomorphism class that passes the filter, in a
/// fixed order. General graphs up to 8 vertices, regular graphs up to 12.
std::vector<Graph> generate_nonisomorphic(int n, const GraphClassFilter& filter);

/// Isomorphism classes of connected graphs on `n` vertices (n <= 8), canonical.
std::vector<Graph> connected_graphs(int n);

/// Random 2-connected graph whose spanning-tree count is at most `max_trees`.
Graph random_two_connected(std::mt19937_64& rng, int n, double max_trees = 5000);

}  // namespace leafnet
