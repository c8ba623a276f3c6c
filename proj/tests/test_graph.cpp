#include <doctest.h>

#include <random>

#include "fixtures.hpp"
#include "leafnet/constructions.hpp"
#include "leafnet/oracle.hpp"

using namespace leafnet;
using namespace fixtures;

namespace {

Graph random_graph(std::mt19937_64& rng, int n, double p) {
  std::bernoulli_distribution coin(p);
  Graph g(n);
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (coin(rng)) g.connect(u, v);
    }
  }
  return g;
}

// k-connectivity by deleting every set of fewer than k vertices.
Connectivity brute_connectivity(const Graph& g) {
  const int n = g.order();
  if (!is_connected(g)) return Connectivity::Disconnected;
  auto survives = [&](int k) {
    if (n <= k) return false;
    for (Mask s = 0; s < bit(n); ++s) {
      if (popcount(s) < k && !is_connected(g, g.vertices() & ~s)) return false;
    }
    return true;
  };
  if (survives(3)) return Connectivity::ThreeConnected;
  if (survives(2)) return Connectivity::TwoConnected;
  return Connectivity::Connected1;
}

}  // namespace

TEST_CASE("graph6 matches a reference codec") {
  CHECK(parse_graph6("C~") == complete(4));
  CHECK(emit_graph6(complete(4)) == "C~");
  CHECK(emit_graph6(petersen()) == "IheA@GUAo");
  CHECK(emit_graph6(Graph(5)) == "D??");
  CHECK(emit_graph6(path(5)) == "DhC");
  const Graph one = parse_graph6("@");
  CHECK(one.order() == 1);
  CHECK(one.size() == 0);
  CHECK(emit_graph6(cycle(63)).substr(0, 4) == "~??~");
  const std::string k64 = emit_graph6(complete(64));
  CHECK(k64.size() == 340);
  CHECK(k64.substr(0, 5) == "~?@?~");
  CHECK(parse_graph6(k64) == complete(64));
}

TEST_CASE("graph6 rejects malformed lines") {
  CHECK_THROWS_AS(parse_graph6(""), Error);
  CHECK_THROWS_AS(parse_graph6("C"), Error);
  CHECK_THROWS_AS(parse_graph6("C~~"), Error);
  CHECK_THROWS_AS(parse_graph6("C\x7f"), Error);
  CHECK_THROWS_AS(parse_graph6("~?A?"), Error);  // 65 vertices
  try {
    parse_graph6("C");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::MalformedGraph6);
  }
  CHECK(parse_graph6("C~\r\n") == complete(4));
}

TEST_CASE("graph6 round trip on random graphs") {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 300; ++i) {
    const int n = static_cast<int>(rng() % 65);
    const Graph g = random_graph(rng, n, 0.3);
    CHECK(parse_graph6(emit_graph6(g)) == g);
  }
  for (const Graph& g : connected_graphs(6)) CHECK(emit_graph6(parse_graph6(emit_graph6(g))) == emit_graph6(g));
}

TEST_CASE("graph building rejects bad input") {
  CHECK_THROWS_AS(Graph(65), Error);
  Graph g(3);
  CHECK_THROWS_AS(g.connect(0, 3), Error);
  CHECK_THROWS_AS(g.connect(1, 1), Error);
  CHECK_THROWS_AS(delete_vertex(g, 5), Error);
  g.connect(0, 1);
  g.connect(0, 1);
  CHECK(g.size() == 1);
}

TEST_CASE("connectivity classes") {
  CHECK(connectivity_class(complete(4)) == Connectivity::ThreeConnected);
  CHECK(connectivity_class(path(3)) == Connectivity::Connected1);
  CHECK(connectivity_class(complete_bipartite(2, 3)) == Connectivity::TwoConnected);
  CHECK(connectivity_class(disjoint_union(complete(2), complete(2))) == Connectivity::Disconnected);
  CHECK(connectivity_class(complete(3)) == Connectivity::TwoConnected);
  CHECK(connectivity_class(complete(2)) == Connectivity::Connected1);
}

TEST_CASE("connectivity agrees with vertex-deletion brute force") {
  for (int n = 1; n <= 7; ++n) {
    for (const Graph& g : connected_graphs(n)) CHECK(connectivity_class(g) == brute_connectivity(g));
  }
  std::mt19937_64 rng(11);
  for (int i = 0; i < 200; ++i) {
    const Graph g = random_graph(rng, 8 + static_cast<int>(rng() % 3), 0.35);
    CHECK(connectivity_class(g) == brute_connectivity(g));
  }
}

TEST_CASE("two-separators") {
  CHECK(two_separators(complete(4)).empty());
  // triangles 0-1-2 and 0-1-3 share the edge 01
  const Graph diamond = Graph::from_edges(4, {{0, 1}, {0, 2}, {1, 2}, {0, 3}, {1, 3}});
  const auto seps = two_separators(diamond);
  REQUIRE(seps.size() == 1);
  CHECK(seps[0] == VertexSet::of({0, 1}));

  const auto fig7 = build_tfc1_fig7();
  const Graph& second = fig7[1].graph;
  bool non_adjacent = false;
  for (const auto& s : two_separators(second)) {
    const auto vs = s.to_vector();
    non_adjacent = non_adjacent || !second.has_edge(vs[0], vs[1]);
  }
  CHECK(non_adjacent);
}

TEST_CASE("fragments at a separator") {
  const Graph diamond = Graph::from_edges(4, {{0, 1}, {0, 2}, {1, 2}, {0, 3}, {1, 3}});
  const auto parts = fragments_of(diamond, VertexSet::of({0, 1}));
  REQUIRE(parts.size() == 2);
  CHECK(parts[0].graph == complete(3));
  CHECK(parts[1].graph == complete(3));
  CHECK_THROWS_AS(fragments_of(complete(4), VertexSet::of({0, 1})), Error);
  CHECK_THROWS_AS(fragments_of(diamond, VertexSet::of({0})), Error);

  // Removing the neighbours of a1 in the first tfc1 graph leaves K3 and the rest.
  const auto g1 = build_tfc1_fig7()[0];
  const Mask nb = g1.graph.neighbours(g1.role("a1"));
  const auto split = fragments_of(g1.graph, VertexSet{nb});
  REQUIRE(split.size() == 2);
  std::vector<int> orders = {split[0].graph.order(), split[1].graph.order()};
  std::sort(orders.begin(), orders.end());
  CHECK(orders == std::vector<int>{3, 19});
}

TEST_CASE("fragments cover the vertex set with overlap at the separator") {
  for (const auto& c : build_tfc1_fig7()) {
    for (const auto& sep : two_separators(c.graph)) {
      const auto parts = fragments_of(c.graph, sep);
      Mask covered = 0;
      Mask overlap = c.graph.vertices();
      Graph rebuilt(c.graph.order());
      for (const auto& p : parts) {
        Mask here = 0;
        for (int v : p.to_original) here |= bit(v);
        covered |= here;
        overlap &= here;
        for (auto [a, b] : p.graph.edges()) rebuilt.connect(p.to_original[a], p.to_original[b]);
      }
      CHECK(covered == c.graph.vertices());
      CHECK(overlap == sep.mask);
      CHECK(rebuilt == c.graph);
    }
  }
}

TEST_CASE("girth and bipartiteness") {
  CHECK(girth(complete(4)) == 3);
  CHECK(girth(petersen()) == 5);
  CHECK(girth(build_bipartite12().graph) == 6);
  CHECK_FALSE(girth(star(4)).has_value());
  CHECK(is_bipartite(build_bipartite12().graph));
  CHECK_FALSE(is_bipartite(complete(3)));
  CHECK(is_bipartite(cycle(6)));
}

TEST_CASE("vertex deletion, edge addition, identification") {
  CHECK(delete_vertex(complete(4), 2).graph == complete(3));
  const Relabelled r = delete_vertex(path(4), 1);
  CHECK(r.old_to_new == std::vector<int>{0, -1, 1, 2});
  CHECK(r.new_to_old == std::vector<int>{0, 2, 3});
  CHECK(parse_graph6(emit_graph6(r.graph)) == r.graph);

  const Graph two = Graph::from_edges(4, {{0, 1}, {2, 3}});
  const Relabelled merged = identify(two, VertexSet::of({1, 2}));
  CHECK(merged.graph == path(3));
  CHECK(add_edge(path(3), 0, 2) == complete(3));
  CHECK_THROWS_AS(add_edge(path(3), 0, 3), Error);
}
