#pragma once

#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "leafnet/graph.hpp"
#include "leafnet/hamilton.hpp"
#include "leafnet/profile.hpp"

namespace leafnet {

enum class LeafClass { LeafStable, LeafCritical, LeafGuaranteedMixed, NotLeafGuaranteed };

std::string_view to_string(LeafClass c);

struct ClassLabel {
  int ml = 0;
  std::vector<int> vertex_deleted_mls;  // kInfinite where g - v is disconnected
  LeafClass label = LeafClass::NotLeafGuaranteed;

  bool leaf_guaranteed() const { return label != LeafClass::NotLeafGuaranteed; }
};

ClassLabel classify_leaf_guaranteed(const Graph& g);

/// Structural facts every leaf-guaranteed graph has.
struct PropLggReport {
  int ml = 0;
  bool two_connected = false;
  int max_degree = 0;
  bool structure_ok = false;    // 2-connected with a vertex of degree >= 3
  bool two_value_law = false;   // every ml(g - v) is ml - 1 or ml
  bool non_leaf_everywhere = false;  // each vertex is a non-leaf in some ml-subgraph
  Mask always_leaf = 0;         // vertices that are leaves in every ml-subgraph
  Mask never_leaf = 0;          // vertices that are leaves in no ml-subgraph

  bool all_pass() const { return structure_ok && two_value_law && non_leaf_everywhere; }
};

PropLggReport verify_prop_lgg(const Graph& g);

/// A pair (a1, a2) with a hamiltonian a1a2-path in g and in every g - x,
/// x outside the pair. Requires g to be 2-leaf-stable.
std::optional<std::pair<int, int>> tfc1_certificate(const Graph& g);

enum class FragmentClass { NotWeak, Weak, Medium, Strong };

std::string_view to_string(FragmentClass c);

struct FragmentSpec {
  Graph h;
  int a = -1;
  int x = -1;
  int y = -1;
  FragmentClass cls = FragmentClass::NotWeak;
  /// Hamiltonian ax- or ay-paths: first the one in h (deleted = -1), then one
  /// per deleted vertex. Filled only as far as the check got.
  std::vector<std::pair<int, PathWitness>> witnesses;
};

FragmentSpec fragment_class(const Graph& h, int a, int x, int y);

struct FragmentRoles {
  int a;
  int x;
  int y;
  friend bool operator==(const FragmentRoles&, const FragmentRoles&) = default;
};

/// Every (a, x, y) with xy an edge (x < y) whose class is at least `want`.
std::vector<FragmentRoles> find_fragment_roles(const Graph& h, FragmentClass want);

}  // namespace leafnet
