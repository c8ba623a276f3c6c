#include "leafnet/classify.hpp"

#include <algorithm>
#include <tuple>

#include "leafnet/mlst.hpp"

namespace leafnet {

std::string_view to_string(LeafClass c) {
  switch (c) {
    case LeafClass::LeafStable: return "LeafStable";
    case LeafClass::LeafCritical: return "LeafCritical";
    case LeafClass::LeafGuaranteedMixed: return "LeafGuaranteedMixed";
    case LeafClass::NotLeafGuaranteed: return "NotLeafGuaranteed";
  }
  return "Unknown";
}

std::string_view to_string(FragmentClass c) {
  switch (c) {
    case FragmentClass::NotWeak: return "NotWeak";
    case FragmentClass::Weak: return "Weak";
    case FragmentClass::Medium: return "Medium";
    case FragmentClass::Strong: return "Strong";
  }
  return "Unknown";
}

ClassLabel classify_leaf_guaranteed(const Graph& g) {
  if (g.order() < 3) throw Error(ErrorCode::TooSmall, "classification needs at least 3 vertices");
  ClassLabel out;
  out.ml = ml_number(g);
  out.vertex_deleted_mls.reserve(g.order());
  for (int v = 0; v < g.order(); ++v) out.vertex_deleted_mls.push_back(ml_number(g, g.vertices() & ~bit(v)));

  const auto& d = out.vertex_deleted_mls;
  const int k = out.ml;
  if (k == kInfinite || std::any_of(d.begin(), d.end(), [&](int m) { return m > k; })) {
    out.label = LeafClass::NotLeafGuaranteed;
  } else if (std::all_of(d.begin(), d.end(), [&](int m) { return m == k; })) {
    out.label = LeafClass::LeafStable;
  } else if (std::all_of(d.begin(), d.end(), [&](int m) { return m == k - 1; })) {
    out.label = LeafClass::LeafCritical;
  } else {
    out.label = LeafClass::LeafGuaranteedMixed;
  }
  return out;
}

PropLggReport verify_prop_lgg(const Graph& g) {
  const ClassLabel label = classify_leaf_guaranteed(g);
  if (!label.leaf_guaranteed()) {
    throw Error(ErrorCode::NotLeafGuaranteed, "graph is not leaf-guaranteed");
  }
  PropLggReport r;
  r.ml = label.ml;
  r.two_connected = is_two_connected(g);
  r.max_degree = g.max_degree();
  r.structure_ok = r.two_connected && r.max_degree >= 3;
  r.two_value_law = std::all_of(label.vertex_deleted_mls.begin(), label.vertex_deleted_mls.end(),
                                [&](int m) { return m == r.ml || m == r.ml - 1; });

  const MlProfile profile = ml_profile(g);
  Mask some_leaf = 0;
  Mask every_leaf = g.vertices();
  for (const auto& p : profile.profiles) {
    some_leaf |= p.leaf_mask;
    every_leaf &= p.leaf_mask;
  }
  r.always_leaf = profile.profiles.empty() ? 0 : every_leaf;
  r.never_leaf = g.vertices() & ~some_leaf;
  r.non_leaf_everywhere = r.always_leaf == 0;
  return r;
}

std::optional<std::pair<int, int>> tfc1_certificate(const Graph& g) {
  if (g.order() < 3) throw Error(ErrorCode::NotTwoLeafStable, "graph is too small");
  const ClassLabel label = classify_leaf_guaranteed(g);
  if (label.label != LeafClass::LeafStable || label.ml != 2) {
    throw Error(ErrorCode::NotTwoLeafStable, "graph is not 2-leaf-stable");
  }
  std::vector<std::pair<int, int>> pairs;
  for (int a = 0; a < g.order(); ++a) {
    for (int b = a + 1; b < g.order(); ++b) {
      if (!g.has_edge(a, b)) pairs.emplace_back(a, b);
    }
  }
  std::stable_sort(pairs.begin(), pairs.end(), [&](const auto& p, const auto& q) {
    return g.degree(p.first) + g.degree(p.second) < g.degree(q.first) + g.degree(q.second);
  });
  for (auto [a, b] : pairs) {
    if (!hamiltonian_path_between(g, a, b)) continue;
    bool ok = true;
    for (int x = 0; x < g.order() && ok; ++x) {
      if (x == a || x == b) continue;
      ok = hamiltonian_path_between(g, a, b, g.vertices() & ~bit(x)).has_value();
    }
    if (ok) return std::make_pair(a, b);
  }
  return std::nullopt;
}

namespace {

std::optional<PathWitness> path_from_a(const Graph& h, int a, int x, int y, Mask alive) {
  if (alive & bit(x)) {
    if (auto p = hamiltonian_path_between(h, a, x, alive)) return p;
  }
  if (alive & bit(y)) return hamiltonian_path_between(h, a, y, alive);
  return std::nullopt;
}

}  // namespace

FragmentSpec fragment_class(const Graph& h, int a, int x, int y) {
  const int n = h.order();
  const auto in_range = [&](int v) { return v >= 0 && v < n; };
  if (!in_range(a) || !in_range(x) || !in_range(y) || a == x || a == y || x == y) {
    throw Error(ErrorCode::PreconditionViolated, "a, x, y must be three distinct vertices");
  }
  if (!h.has_edge(x, y)) throw Error(ErrorCode::PreconditionViolated, "xy must be an edge");
  if (!is_connected(h)) throw Error(ErrorCode::PreconditionViolated, "fragment must be connected");

  FragmentSpec spec{h, a, x, y, FragmentClass::NotWeak, {}};
  const Mask all = h.vertices();
  auto whole = path_from_a(h, a, x, y, all);
  if (!whole) return spec;
  spec.witnesses.emplace_back(-1, std::move(*whole));
  for (int v = 0; v < n; ++v) {
    if (v == a) continue;
    auto p = path_from_a(h, a, x, y, all & ~bit(v));
    if (!p) return spec;
    spec.witnesses.emplace_back(v, std::move(*p));
  }
  spec.cls = FragmentClass::Weak;

  if (hamiltonian_path_between(h, x, y)) return spec;
  spec.cls = FragmentClass::Medium;

  for (int v = 0; v < n; ++v) {
    if (v == a || v == x || v == y) continue;
    if (hamiltonian_path_between(h, x, y, all & ~bit(v))) return spec;
  }
  spec.cls = FragmentClass::Strong;
  return spec;
}

std::vector<FragmentRoles> find_fragment_roles(const Graph& h, FragmentClass want) {
  std::vector<FragmentRoles> out;
  for (auto [x, y] : h.edges()) {
    for (int a = 0; a < h.order(); ++a) {
      if (a == x || a == y) continue;
      if (fragment_class(h, a, x, y).cls >= want) out.push_back({a, x, y});
    }
  }
  std::sort(out.begin(), out.end(), [](const FragmentRoles& p, const FragmentRoles& q) {
    return std::tie(p.a, p.x, p.y) < std::tie(q.a, q.x, q.y);
  });
  return out;
}

}  // namespace leafnet
