#pragma once

#include <cstdint>

#include "leafnet/graph.hpp"
#include "leafnet/profile.hpp"

namespace leafnet {

/// Minimum leaf number: 1 for hamiltonian graphs, kInfinite when disconnected,
/// 0 for K1 and 2 for K2.
int ml_number(const Graph& g);
int ml_number(const Graph& g, Mask alive);

/// ml(G) and every distinct degree profile of an ml-subgraph.
MlProfile ml_profile(const Graph& g);
/// As ml_profile, but trees with more than `upper` leaves are never explored;
/// if none qualifies the result is empty with bound_exceeded set.
MlProfile ml_profile_with_bound(const Graph& g, int upper);
/// The same computation on the subgraph induced by `alive`, reported over the
/// labels of g (vertices outside `alive` have degree 0 in every profile).
MlProfile ml_profile_masked(const Graph& g, Mask alive, int upper = kInfinite);

struct TreeSearchStats {
  std::uint64_t nodes = 0;
  std::uint64_t trees = 0;
  /// Set if the partial leaf count was ever seen to drop along a root-to-node path.
  bool monotonicity_violated = false;
};

/// Statistics of the most recent spanning-tree search on this thread.
const TreeSearchStats& last_tree_search_stats();

}  // namespace leafnet
