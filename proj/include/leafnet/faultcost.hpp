#pragma once

#include <span>
#include <vector>

#include "leafnet/graph.hpp"
#include "leafnet/profile.hpp"

namespace leafnet {

/// τ(S, S_v): live vertices of sv whose degree differs from s. Returns
/// min(τ, ceiling + 1). Throws LabelSpaceMismatch unless s is a profile of the
/// whole graph and sv one of the same graph minus its `deleted` vertex.
int transition_cost(const DegreeProfile& s, const DegreeProfile& sv, int ceiling = kInfinite);

/// Smallest τ(s, c) over the candidates, capped at ceiling + 1. The scan stops
/// once a value no larger than `good_enough` turns up.
int min_transition_cost(const DegreeProfile& s, std::span<const DegreeProfile> candidates,
                        int ceiling = kInfinite, int good_enough = -1);

struct FaultCostReport {
  int phi = 0;
  int ml = 0;
  DegreeProfile optimal_profile;
  std::vector<int> per_vertex_cost;  // indexed by vertex, for optimal_profile
  std::vector<DegreeProfile> profiles;  // ml-subgraph profiles of g
  std::vector<int> per_profile_phi;     // φ_S for profiles[i]
  std::vector<MlProfile> vertex_deleted;  // ml profiles of g - v; empty when phi == 0
};

/// Full report: φ, the optimal profile and its per-vertex costs. Requires a 2-connected graph.
FaultCostReport fault_cost(const Graph& g);

/// φ(g) alone; abandons an ml-subgraph as soon as it cannot beat the best one.
int fault_cost_value(const Graph& g);

/// φ_S for one profile of g against precomputed vertex-deleted profile sets;
/// `per_vertex` (if given) receives the exact inner minima.
int phi_of_profile(const DegreeProfile& s, std::span<const MlProfile> vertex_deleted,
                   std::vector<int>* per_vertex = nullptr, int abandon_at = kInfinite);

}  // namespace leafnet
