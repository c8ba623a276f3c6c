#include <doctest.h>

#include <random>

#include "fixtures.hpp"
#include "leafnet/constructions.hpp"
#include "leafnet/faultcost.hpp"
#include "leafnet/hamilton.hpp"
#include "leafnet/mlst.hpp"
#include "leafnet/oracle.hpp"

using namespace leafnet;
using namespace fixtures;

namespace {

std::vector<Graph> two_connected(int n) {
  GraphClassFilter f;
  f.connectivity = ConnectivityFilter::TwoConnected;
  return generate_nonisomorphic(n, f);
}

}  // namespace

TEST_CASE("transition cost basics") {
  const Mask all = low_bits(6);
  const DegreeProfile s = DegreeProfile::hamiltonian(6, all);
  const DegreeProfile cyc = DegreeProfile::hamiltonian(6, all & ~bit(2));
  CHECK(transition_cost(s, cyc) == 0);

  const DegreeProfile path = DegreeProfile::hamiltonian(6, all, 0, 5);
  CHECK(path.leaves() == 2);
  CHECK(transition_cost(path, cyc) == 2);
  CHECK(transition_cost(path, cyc, 0) == 1);

  CHECK_THROWS_AS(transition_cost(cyc, s), Error);
  CHECK_THROWS_AS(transition_cost(s, s), Error);
  const DegreeProfile smaller = DegreeProfile::hamiltonian(5, low_bits(5) & ~bit(1));
  CHECK_THROWS_AS(transition_cost(s, smaller), Error);
}

TEST_CASE("fault costs of small named graphs") {
  CHECK(fault_cost(complete(4)).phi == 0);
  CHECK(fault_cost(complete(3)).phi == 2);
  CHECK(fault_cost(find_xi9().graph).phi == 2);
  CHECK(fault_cost(build_Gm(3).graph).phi == 4);
  CHECK(fault_cost(build_Hm(5).graph).phi == 3);
  CHECK(fault_cost(petersen()).phi == 2);
  CHECK(brute_fault_cost(petersen()).phi == 2);
  CHECK_THROWS_AS(fault_cost(path(4)), Error);
  CHECK_THROWS_AS(fault_cost(star(3)), Error);
}

TEST_CASE("report is internally consistent") {
  for (const Graph& g : two_connected(6)) {
    const FaultCostReport r = fault_cost(g);
    CHECK(r.phi == *std::min_element(r.per_profile_phi.begin(), r.per_profile_phi.end()));
    CHECK(r.phi == *std::max_element(r.per_vertex_cost.begin(), r.per_vertex_cost.end()));
    CHECK((r.phi == 0) == is_1_hamiltonian(g));
    CHECK(r.optimal_profile.leaves() == (r.ml == 1 ? 0 : r.ml));
  }
}

TEST_CASE("fault cost agrees with brute force up to 7 vertices") {
  for (int n = 3; n <= 7; ++n) {
    for (const Graph& g : two_connected(n)) {
      const FaultCostReport fast = fault_cost(g);
      const FaultCostReport brute = brute_fault_cost(g);
      CHECK(fast.phi == brute.phi);
      CHECK(fast.ml == brute.ml);
      CHECK(fault_cost_value(g) == fast.phi);
    }
  }
}

TEST_CASE("fault cost agrees with brute force on random graphs") {
  std::mt19937_64 rng(2024);
  for (int i = 0; i < 60; ++i) {
    const Graph g = random_two_connected(rng, 8 + i % 3);
    CHECK(fault_cost(g).phi == brute_fault_cost(g).phi);
  }
}

TEST_CASE("early exit never changes the value") {
  for (const Graph& g : two_connected(7)) {
    const FaultCostReport r = fault_cost(g);
    if (r.phi == 0) continue;
    for (std::size_t i = 0; i < r.profiles.size(); ++i) {
      std::vector<int> exact;
      const int full = phi_of_profile(r.profiles[i], r.vertex_deleted, &exact);
      CHECK(full == r.per_profile_phi[i]);
      // With an abandon threshold the result is exact below it and at least the threshold otherwise.
      const int capped = phi_of_profile(r.profiles[i], r.vertex_deleted, nullptr, r.phi);
      if (full < r.phi) CHECK(capped == full);
      if (full >= r.phi) CHECK(capped >= r.phi);
      for (int v = 0; v < g.order(); ++v) {
        const auto& cand = r.vertex_deleted[v].profiles;
        int slow = kInfinite;
        for (const auto& c : cand) slow = std::min(slow, transition_cost(r.profiles[i], c));
        CHECK(exact[v] == slow);
        CHECK(min_transition_cost(r.profiles[i], cand) == slow);
      }
    }
  }
}

TEST_CASE("G_m and H_m families") {
  for (int m = 3; m <= 8; ++m) CHECK(fault_cost_value(build_Gm(m).graph) == (m % 2 ? m + 1 : m + 2));
  for (int m = 5; m <= 8; ++m) CHECK(fault_cost_value(build_Hm(m).graph) == (m % 2 ? m - 2 : m - 1));
}
