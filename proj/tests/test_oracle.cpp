#include <doctest.h>

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <unordered_set>

#include "fixtures.hpp"
#include "leafnet/oracle.hpp"

using namespace leafnet;
using namespace fixtures;

namespace {

GraphClassFilter with_connectivity(ConnectivityFilter c) {
  GraphClassFilter f;
  f.connectivity = c;
  return f;
}

}  // namespace

TEST_CASE("spanning trees") {
  CHECK(spanning_tree_count(complete(3)) == 3);
  CHECK(spanning_tree_count(complete(4)) == 16);
  CHECK(spanning_tree_count(cycle(5)) == 5);
  CHECK(spanning_tree_count(petersen()) == 2000);
  CHECK(all_spanning_trees(complete(4)).size() == 16);

  std::mt19937_64 rng(3);
  for (int t = 0; t < 10; ++t) {
    const Graph g = random_two_connected(rng, 7, 400);
    long seen = 0;
    for_each_spanning_tree(g, [&](std::span<const Edge> tree) {
      CHECK(tree.size() == 6u);
      ++seen;
    });
    CHECK(seen == static_cast<long>(spanning_tree_count(g)));
    CHECK(seen <= 400);
  }
}

TEST_CASE("independence number") {
  CHECK(independence_number(complete(4)) == 1);
  CHECK(independence_number(cycle(5)) == 2);
  CHECK(independence_number(petersen()) == 4);
  CHECK(independence_number(star(5)) == 5);
}

TEST_CASE("generator counts") {
  CHECK(generate_nonisomorphic(4, {}).size() == 11);
  const std::vector<std::size_t> connected = {1, 1, 2, 6, 21, 112, 853};
  for (int n = 1; n <= 7; ++n) CHECK(connected_graphs(n).size() == connected[n - 1]);
  const auto two = with_connectivity(ConnectivityFilter::TwoConnected);
  CHECK(generate_nonisomorphic(5, two).size() == 10);
  CHECK(generate_nonisomorphic(6, two).size() == 56);
  CHECK(generate_nonisomorphic(7, two).size() == 468);
  CHECK(generate_nonisomorphic(8, two).size() == 7123);

  GraphClassFilter cubic = two;
  cubic.regular_degree = 3;
  CHECK(generate_nonisomorphic(10, cubic).size() == 18);
  CHECK(generate_nonisomorphic(8, cubic).size() == 5);
}

TEST_CASE("generated graphs are pairwise non-isomorphic") {
  for (int n = 3; n <= 7; ++n) {
    std::unordered_set<Graph, GraphHash> seen;
    for (const Graph& g : generate_nonisomorphic(n, {})) {
      CHECK(seen.insert(canonical_form(g).graph).second);
    }
  }
}

TEST_CASE("canonical form matches the permutation reference") {
  std::mt19937_64 rng(5);
  for (int n = 1; n <= 6; ++n) {
    std::map<std::string, std::string> fast_to_brute;
    for (const Graph& g : generate_nonisomorphic(n, {})) {
      // random relabelling must not change either form
      std::vector<int> perm(n);
      std::iota(perm.begin(), perm.end(), 0);
      std::shuffle(perm.begin(), perm.end(), rng);
      Graph h(n);
      for (auto [a, b] : g.edges()) h.connect(perm[a], perm[b]);
      const Canonical c = canonical_form(g);
      CHECK(c.graph == canonical_form(h).graph);
      CHECK(canonical_form_brute(g) == canonical_form_brute(h));
      for (auto [a, b] : g.edges()) CHECK(c.graph.has_edge(c.labelling[a], c.labelling[b]));
      CHECK(c.graph.size() == g.size());
    }
  }
}

TEST_CASE("brute-force predicates") {
  CHECK(brute_hamiltonian(cycle(6)));
  CHECK_FALSE(brute_hamiltonian(petersen()));
  CHECK(brute_traceable(petersen()));
  CHECK_FALSE(brute_1_hamiltonian(petersen()));
  CHECK(brute_1_hamiltonian(complete(5)));
  CHECK_FALSE(brute_1_hamiltonian(cycle(5)));
  CHECK(brute_path_between(path(4), 0, 3));
  CHECK_FALSE(brute_path_between(path(4), 0, 2));
  CHECK(brute_ml_profile(petersen()).ml == 2);
  CHECK(brute_fault_cost(complete(3)).phi == 2);
}

TEST_CASE("filters") {
  GraphClassFilter f;
  f.min_girth = 5;
  CHECK(f.accepts(petersen()));
  CHECK_FALSE(f.accepts(complete(4)));
  f = {};
  f.bipartite_only = true;
  CHECK(f.accepts(cycle(6)));
  CHECK_FALSE(f.accepts(cycle(5)));
  f = with_connectivity(ConnectivityFilter::ThreeConnected);
  CHECK(f.accepts(petersen()));
  CHECK_FALSE(f.accepts(cycle(6)));
}
