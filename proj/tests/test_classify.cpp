#include <doctest.h>

#include "fixtures.hpp"
#include "leafnet/classify.hpp"
#include "leafnet/constructions.hpp"
#include "leafnet/faultcost.hpp"
#include "leafnet/mlst.hpp"
#include "leafnet/oracle.hpp"

using namespace leafnet;
using namespace fixtures;

namespace {

bool contains(const std::vector<FragmentRoles>& roles, int a, int x, int y) {
  return std::find(roles.begin(), roles.end(), FragmentRoles{a, x, y}) != roles.end() ||
         std::find(roles.begin(), roles.end(), FragmentRoles{a, y, x}) != roles.end();
}

}  // namespace

TEST_CASE("leaf-guaranteed classes") {
  const ClassLabel p = classify_leaf_guaranteed(petersen());
  CHECK(p.label == LeafClass::LeafCritical);
  CHECK(p.ml == 2);
  const ClassLabel b = classify_leaf_guaranteed(build_bipartite12().graph);
  CHECK(b.label == LeafClass::LeafStable);
  CHECK(b.ml == 2);
  const ClassLabel k4 = classify_leaf_guaranteed(complete(4));
  CHECK(k4.label == LeafClass::LeafStable);
  CHECK(k4.ml == 1);
  CHECK(classify_leaf_guaranteed(cycle(5)).label == LeafClass::NotLeafGuaranteed);
  CHECK(classify_leaf_guaranteed(path(4)).label == LeafClass::NotLeafGuaranteed);
  CHECK_THROWS_AS(classify_leaf_guaranteed(complete(2)), Error);
}

TEST_CASE("classes agree with raw ml numbers") {
  GraphClassFilter f;
  f.connectivity = ConnectivityFilter::TwoConnected;
  for (int n = 3; n <= 8; ++n) {
    for (const Graph& g : generate_nonisomorphic(n, f)) {
      const ClassLabel c = classify_leaf_guaranteed(g);
      const int ml = ml_number(g);
      bool all_k = true, all_k1 = true, guaranteed = true;
      for (int v = 0; v < n; ++v) {
        const int d = ml_number(g, g.vertices() & ~bit(v));
        CHECK(c.vertex_deleted_mls[v] == d);
        all_k = all_k && d == ml;
        all_k1 = all_k1 && d == ml - 1;
        guaranteed = guaranteed && d <= ml;
      }
      const LeafClass want = !guaranteed ? LeafClass::NotLeafGuaranteed
                             : all_k     ? LeafClass::LeafStable
                             : all_k1    ? LeafClass::LeafCritical
                                         : LeafClass::LeafGuaranteedMixed;
      CHECK(c.label == want);
      if (c.leaf_guaranteed()) CHECK(verify_prop_lgg(g).all_pass());
    }
  }
}

TEST_CASE("structure of leaf-guaranteed graphs") {
  CHECK(verify_prop_lgg(petersen()).all_pass());
  CHECK(verify_prop_lgg(build_bipartite12().graph).all_pass());
  CHECK_THROWS_AS(verify_prop_lgg(cycle(5)), Error);

  const auto gk = build_petersen_Gk(2);
  const PropLggReport r = verify_prop_lgg(gk.graph);
  CHECK(r.ml == 2);
  CHECK(r.two_value_law);
  CHECK((r.never_leaf & bit(gk.role("x"))) != 0);
}

TEST_CASE("tfc1 certificates") {
  for (const auto& c : build_tfc1_fig7()) {
    const auto cert = tfc1_certificate(c.graph);
    REQUIRE(cert);
    CHECK(fault_cost_value(c.graph) == 1);
  }
  CHECK_FALSE(tfc1_certificate(build_bipartite12().graph));
  CHECK_THROWS_AS(tfc1_certificate(petersen()), Error);
  try {
    tfc1_certificate(petersen());
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotTwoLeafStable);
  }
}

TEST_CASE("certificate exists exactly when the fault cost is 1") {
  std::vector<Graph> corpus;
  GraphClassFilter f;
  f.connectivity = ConnectivityFilter::TwoConnected;
  for (int n = 3; n <= 8; ++n) {
    for (auto& g : generate_nonisomorphic(n, f)) corpus.push_back(std::move(g));
  }
  for (const auto& c : build_tfc1_fig7()) corpus.push_back(c.graph);
  corpus.push_back(build_bipartite12().graph);
  int stable = 0;
  for (const Graph& g : corpus) {
    const ClassLabel c = classify_leaf_guaranteed(g);
    if (c.label != LeafClass::LeafStable || c.ml != 2) continue;
    ++stable;
    CHECK(tfc1_certificate(g).has_value() == (fault_cost_value(g) == 1));
  }
  CHECK(stable >= 3);
}

TEST_CASE("tfc1 graphs: degree-2 law, separator closure, fragment paths") {
  for (const auto& c : build_tfc1_fig7()) {
    const Graph& g = c.graph;
    int deg2 = 0;
    for (int v = 0; v < g.order(); ++v) deg2 += g.degree(v) == 2;
    CHECK(deg2 <= 2);
    for (const auto& sep : two_separators(g)) {
      const auto xy = sep.to_vector();
      if (!g.has_edge(xy[0], xy[1])) {
        CHECK(fault_cost_value(add_edge(g, xy[0], xy[1])) == 1);
        continue;
      }
      if (!(sep == VertexSet::of({c.role("x"), c.role("y")}))) continue;
      // both sides of the glued pair are at least weak at their a_i
      for (const auto& part : fragments_of(g, sep)) {
        for (const std::string role : {"a1", "a2"}) {
          const auto it = std::find(part.to_original.begin(), part.to_original.end(), c.role(role));
          if (it == part.to_original.end()) continue;
          const int a = static_cast<int>(it - part.to_original.begin());
          const auto pos = [&](int v) {
            return static_cast<int>(std::find(part.to_original.begin(), part.to_original.end(), v) -
                                    part.to_original.begin());
          };
          CHECK(fragment_class(part.graph, a, pos(xy[0]), pos(xy[1])).cls >= FragmentClass::Weak);
        }
      }
    }
  }
}

TEST_CASE("fragment classes") {
  const FragmentSpec k3 = fragment_class(complete(3), 0, 1, 2);
  CHECK(k3.cls == FragmentClass::Weak);
  CHECK(k3.witnesses.size() == 3);
  for (const auto& [deleted, w] : k3.witnesses) {
    const Mask alive = deleted < 0 ? low_bits(3) : low_bits(3) & ~bit(deleted);
    CHECK(is_valid_witness(k3.h, w, alive));
    CHECK(w.front() == 0);
  }
  const auto fig6 = build_medium_fragments_fig6();
  CHECK(as_fragment(fig6[0]).cls == FragmentClass::Medium);
  CHECK(as_fragment(build_strong_fragment_fig7()).cls == FragmentClass::Strong);
  CHECK_THROWS_AS(fragment_class(path(3), 1, 0, 2), Error);
  CHECK_THROWS_AS(fragment_class(complete(3), 0, 0, 2), Error);
}

TEST_CASE("fragment role search") {
  CHECK(find_fragment_roles(complete(3), FragmentClass::Weak).size() == 3);
  CHECK(find_fragment_roles(complete(3), FragmentClass::Medium).empty());
  const auto f1 = build_medium_fragments_fig6()[0];
  CHECK(contains(find_fragment_roles(f1.graph, FragmentClass::Medium), f1.role("a"), f1.role("x"), f1.role("y")));
}
