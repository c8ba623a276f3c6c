#include <doctest.h>

#include "fixtures.hpp"
#include "leafnet/constructions.hpp"
#include "leafnet/hamilton.hpp"
#include "leafnet/mlst.hpp"
#include "leafnet/oracle.hpp"

using namespace leafnet;
using namespace fixtures;

TEST_CASE("minimum leaf numbers") {
  CHECK(ml_number(complete(4)) == 1);
  CHECK(ml_number(petersen()) == 2);
  CHECK(ml_number(star(5)) == 5);
  CHECK(ml_number(disjoint_union(complete(2), complete(2))) == kInfinite);
  CHECK(ml_number(complete(1)) == 0);
  CHECK(ml_number(complete(2)) == 2);
}

TEST_CASE("profiles of hamiltonian and traceable graphs") {
  const MlProfile c5 = ml_profile(cycle(5));
  CHECK(c5.kind == MlKind::HamCycle);
  REQUIRE(c5.profiles.size() == 1);
  CHECK(c5.profiles[0].to_vector() == std::vector<int>(5, 2));

  // One profile per non-adjacent pair joined by a hamiltonian path.
  const Graph p = petersen();
  const MlProfile mp = ml_profile(p);
  CHECK(mp.kind == MlKind::HamPath);
  std::size_t pairs = 0;
  for (int u = 0; u < 10; ++u) {
    for (int v = u + 1; v < 10; ++v) pairs += !p.has_edge(u, v) && brute_path_between(p, u, v);
  }
  CHECK(mp.profiles.size() == pairs);
  for (const auto& s : mp.profiles) CHECK(s.leaves() == 2);

  const MlProfile k23 = ml_profile(complete_bipartite(2, 3));
  CHECK(k23.ml == 2);
  CHECK(k23.kind == MlKind::HamPath);
}

TEST_CASE("tree-kind profiles") {
  const auto h = embed_k_leaf_guaranteed(complete(2));
  const MlProfile mp = ml_profile(h.graph);
  CHECK(mp.ml == 3);
  CHECK(mp.kind == MlKind::Tree);
  for (const auto& s : mp.profiles) CHECK(s.leaves() == 3);
  CHECK_THROWS_AS(ml_profile(disjoint_union(complete(3), complete(3))), Error);
}

TEST_CASE("leaf bound") {
  const Graph p = petersen();
  const MlProfile plain = ml_profile(p);
  CHECK(ml_profile_with_bound(p, 2).profiles == plain.profiles);
  const Graph g = build_Gm(4).graph;
  const MlProfile full = ml_profile(g);
  CHECK(ml_profile_with_bound(g, full.ml).profiles == full.profiles);
  const Graph s = star(4);
  const MlProfile low = ml_profile_with_bound(s, 3);
  CHECK(low.bound_exceeded);
  CHECK(low.profiles.empty());
}

TEST_CASE("profiles agree with spanning-tree enumeration") {
  for (int n = 3; n <= 7; ++n) {
    for (const Graph& g : connected_graphs(n)) {
      const MlProfile fast = ml_profile(g);
      const MlProfile brute = brute_ml_profile(g);
      CHECK(fast.ml == brute.ml);
      CHECK(fast.profiles == brute.profiles);
      CHECK_FALSE(last_tree_search_stats().monotonicity_violated);
    }
  }
}

TEST_CASE("vertex-deletion bounds and the independence bound") {
  GraphClassFilter f;
  f.connectivity = ConnectivityFilter::TwoConnected;
  for (int n = 3; n <= 8; ++n) {
    for (const Graph& g : generate_nonisomorphic(n, f)) {
      const int ml = ml_number(g);
      for (int v = 0; v < n; ++v) {
        const int d = ml_number(g, g.vertices() & ~bit(v));
        CHECK(d >= ml - 1);
        CHECK(d <= ml + g.max_degree());
      }
      if (ml > 1) CHECK(ml <= independence_number(g));
    }
  }
}

TEST_CASE("masked profiles keep the original labels") {
  const Graph p = petersen();
  const MlProfile mp = ml_profile_masked(p, p.vertices() & ~bit(3));
  CHECK(mp.ml == 1);
  REQUIRE(mp.profiles.size() == 1);
  CHECK(mp.profiles[0].deleted == 3);
  CHECK(mp.profiles[0].degree(3) == 0);
}
