#pragma once

#include <map>
#include <string>
#include <vector>

#include "leafnet/classify.hpp"
#include "leafnet/graph.hpp"

namespace leafnet {

/// A graph together with named vertices ("v", "w", "x", "a1", ...).
struct LabelledConstruction {
  std::string name;
  Graph graph;
  std::map<std::string, int> roles;

  /// Throws MissingRoles if the role is absent.
  int role(const std::string& r) const;
  bool has_role(const std::string& r) const { return roles.count(r) != 0; }
};

// Vertex numbering: the figure's or formula's vertices in declaration order,
// starting at 0. For graphs drawn with numbered nodes 1..n, node i is label i-1.

/// u = 0, v = 1, a_i = 2 + i, b_i = 2 + m + i.
LabelledConstruction build_Gm(int m);
/// G_m with the chords a0a1 and b2b3.
LabelledConstruction build_Hm(int m);
/// The 8-vertex gadget; v = 0, w = 3.
LabelledConstruction build_Xi8();

/// H' from the embedding construction: a k-cycle with g laid along it, plus a
/// hub "v0" joined to every cycle vertex. Role "g<i>" is input vertex i.
LabelledConstruction embed_1_leaf_guaranteed(const Graph& g);
/// H'': the same cycle with every cycle edge replaced by a copy of Xi8.
LabelledConstruction embed_k_leaf_guaranteed(const Graph& g);

/// k copies of Petersen minus an edge vw, all v merged into x and all w into y.
LabelledConstruction build_petersen_Gk(int k);
LabelledConstruction build_bipartite12();

LabelledConstruction build_type1_fig4();
LabelledConstruction build_type2_fig4();
/// One Type-1 graph and k Type-2 copies joined in a ring by w_i v_{i+1}.
LabelledConstruction build_cubic_fc3(int k);

/// Outcome of checking the six Type-1 conditions for roles v, w, x, y.
struct Type1Report {
  bool no_vw_path = false;                // (i)
  bool partition_paths = false;           // (ii)
  bool one_ended_paths = false;           // (iii)
  bool deleted_end_paths = false;         // (iv)
  bool vw_paths_after_deletion = false;   // (v)
  bool three_leaf_tree = false;           // (vi)

  bool all() const {
    return no_vw_path && partition_paths && one_ended_paths && deleted_end_paths &&
           vw_paths_after_deletion && three_leaf_tree;
  }
};

Type1Report check_type1(const Graph& h, int v, int w, int x, int y);

struct Type2Report {
  bool vw_path = false;
  bool every_deletion = false;    // H - u has a hamiltonian vw-path or a 3-leaf tree with v, w leaves
  bool exclusive_ends = false;    // no y has both a hamiltonian vy-path and a hamiltonian wy-path

  bool is_type2() const { return vw_path && every_deletion; }
};

Type2Report check_type2(const Graph& h, int v, int w);

/// G1:G2, merging x and y of g2 into x and y of g1. The other vertices of g2
/// follow those of g1 in order. Roles a1, a2 come from each side's "a".
LabelledConstruction glue(const LabelledConstruction& g1, const LabelledConstruction& g2);

/// Adds x', y' with edges xx', x'y', y'y; x' and y' become the new x and y.
/// Throws NotAFragment if f is not weak, or if the class drops.
FragmentSpec extend_fragment(const FragmentSpec& f);

/// Fragment roles of a construction carrying "a", "x", "y".
FragmentSpec as_fragment(const LabelledConstruction& c);

std::vector<LabelledConstruction> build_weak_fragments_fig5();
std::vector<LabelledConstruction> build_medium_fragments_fig6();
std::vector<LabelledConstruction> build_tfc1_fig7();

/// The fragment left after removing a1 from the first tfc1 graph: a = a2,
/// x and y the two former neighbours of a1.
LabelledConstruction build_strong_fragment_fig7();

/// Smallest graphs reaching fault cost 0, 2, 3, ..., 8, keyed by fault cost.
std::map<int, LabelledConstruction> build_min_order_exemplars();

/// Every 2-leaf-guaranteed graph of least order, then least size, in
/// canonical form. Computed once.
const std::vector<LabelledConstruction>& find_xi9_candidates();
/// The first of find_xi9_candidates().
LabelledConstruction find_xi9();

}  // namespace leafnet
