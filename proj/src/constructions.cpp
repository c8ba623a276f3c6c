#include "leafnet/constructions.hpp"

#include <array>
#include <algorithm>
#include <mutex>
#include <set>

#include "leafnet/hamilton.hpp"
#include "leafnet/oracle.hpp"

namespace leafnet {

int LabelledConstruction::role(const std::string& r) const {
  auto it = roles.find(r);
  if (it == roles.end()) throw Error(ErrorCode::MissingRoles, name + " has no role " + r);
  return it->second;
}

namespace {

using EdgeList = std::vector<std::pair<int, int>>;

// Builds a graph from a drawing's node numbers; `nodes` lists them in
// declaration order and fixes the labels.
Graph from_numbered(const std::vector<int>& nodes, const EdgeList& edges) {
  auto label = [&](int node) {
    auto it = std::find(nodes.begin(), nodes.end(), node);
    if (it == nodes.end()) throw Error(ErrorCode::IndexOutOfRange, "unknown node " + std::to_string(node));
    return static_cast<int>(it - nodes.begin());
  };
  Graph g(static_cast<int>(nodes.size()));
  for (auto [a, b] : edges) g.connect(label(a), label(b));
  return g;
}

std::vector<int> one_to(int n) {
  std::vector<int> out(n);
  for (int i = 0; i < n; ++i) out[i] = i + 1;
  return out;
}

Graph numbered(int n, const EdgeList& edges) { return from_numbered(one_to(n), edges); }

// Outer cycle 1-2-4-5-3, spokes i -> i+5, inner 6-9-8-7-10.
const EdgeList kPetersen = {{1, 2}, {2, 4}, {4, 5}, {5, 3}, {3, 1}, {1, 6}, {2, 7}, {3, 8},
                            {4, 9}, {5, 10}, {6, 9}, {9, 8}, {8, 7}, {7, 10}, {10, 6}};

EdgeList with(EdgeList base, const EdgeList& extra) {
  base.insert(base.end(), extra.begin(), extra.end());
  return base;
}

// Some submask M of `free` such that g has a hamiltonian s1t1-path on
// M | ends1 and a hamiltonian s2t2-path on the rest | ends2.
bool split_paths(const Graph& g, Mask free, int s1, int t1, int s2, int t2) {
  const Mask ends1 = bit(s1) | bit(t1);
  const Mask ends2 = bit(s2) | bit(t2);
  Mask m = free;
  for (;;) {
    const Mask first = m | ends1;
    const Mask second = (free & ~m) | ends2;
    const bool a = s1 == t1 ? first == bit(s1) : hamiltonian_path_between(g, s1, t1, first).has_value();
    if (a) {
      const bool b = s2 == t2 ? second == bit(s2) : hamiltonian_path_between(g, s2, t2, second).has_value();
      if (b) return true;
    }
    if (m == 0) return false;
    m = (m - 1) & free;
  }
}

// A spanning tree of g[alive] whose leaves are exactly l1, l2, l3 and whose
// branch vertex is b: an l1 l2-path through b plus a b l3-path.
bool has_spider(const Graph& g, Mask alive, int b, int l1, int l2, int l3) {
  const Mask fixed = bit(b) | bit(l1) | bit(l2) | bit(l3);
  if (popcount(fixed) != 4 || (fixed & ~alive)) return false;
  const Mask free = alive & ~fixed;
  Mask m = free;
  for (;;) {
    const Mask path = m | bit(l1) | bit(l2) | bit(b);
    const Mask arm = (free & ~m) | bit(b) | bit(l3);
    if (hamiltonian_path_between(g, b, l3, arm) && hamiltonian_path_between(g, l1, l2, path)) return true;
    if (m == 0) return false;
    m = (m - 1) & free;
  }
}

bool path_from_to_any(const Graph& g, int s, std::initializer_list<int> ends, Mask alive) {
  for (int t : ends) {
    if (t != s && (alive & bit(t)) && hamiltonian_path_between(g, s, t, alive)) return true;
  }
  return false;
}

// Cycle and identification schedule shared by both embeddings. Cycle vertex
// v_i gets label i - 1.
struct CycleLayout {
  int k = 0;
  std::vector<int> position;  // input vertex -> cycle label
};

CycleLayout lay_out(const Graph& g) {
  const int n = g.order();
  if (n < 2) throw Error(ErrorCode::TooSmall, "the embedding needs at least 2 vertices");
  const PathWitness longest = longest_path(g);
  const int p = static_cast<int>(longest.order.size());
  CycleLayout out;
  out.k = 2 * n - p + 1;
  if (out.k > kMaxVertices) throw Error(ErrorCode::TooLarge, "cycle would exceed 64 vertices");
  out.position.assign(n, -1);
  for (int i = 0; i < p; ++i) out.position[longest.order[i]] = i;
  int j = 1;
  for (int u = 0; u < n; ++u) {
    if (out.position[u] >= 0) continue;
    out.position[u] = p + 2 * j - 1;
    ++j;
  }
  return out;
}

Graph cycle_with_input(const Graph& g, const CycleLayout& layout, int order) {
  Graph h(order);
  for (int i = 0; i < layout.k; ++i) h.connect(i, (i + 1) % layout.k);
  for (auto [a, b] : g.edges()) h.connect(layout.position[a], layout.position[b]);
  return h;
}

void add_input_roles(LabelledConstruction& c, const CycleLayout& layout) {
  for (std::size_t i = 0; i < layout.position.size(); ++i) c.roles["g" + std::to_string(i)] = layout.position[i];
}

LabelledConstruction fragment(std::string name, Graph g, int a, int x, int y) {
  return LabelledConstruction{std::move(name), std::move(g), {{"a", a}, {"x", x}, {"y", y}}};
}

}  // namespace

LabelledConstruction build_Gm(int m) {
  if (m < 3) throw Error(ErrorCode::MTooSmall, "G_m needs m >= 3");
  LabelledConstruction c{"G_" + std::to_string(m), Graph(2 * m + 2), {{"u", 0}, {"v", 1}}};
  for (int i = 0; i < m; ++i) {
    const int a = 2 + i;
    const int b = 2 + m + i;
    c.graph.connect(0, a);
    c.graph.connect(1, b);
    c.graph.connect(a, b);
    c.roles["a" + std::to_string(i)] = a;
    c.roles["b" + std::to_string(i)] = b;
  }
  return c;
}

LabelledConstruction build_Hm(int m) {
  if (m < 5) throw Error(ErrorCode::MTooSmall, "H_m needs m >= 5");
  LabelledConstruction c = build_Gm(m);
  c.name = "H_" + std::to_string(m);
  c.graph.connect(c.role("a0"), c.role("a1"));
  c.graph.connect(c.role("b2"), c.role("b3"));
  return c;
}

LabelledConstruction build_Xi8() {
  // v 1 2 w 3 4 5 6; two triangles v12, w34 joined by vw, 1-5-3 and 2-6-4.
  Graph g = Graph::from_edges(8, {{0, 3}, {0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}, {1, 6}, {6, 4},
                                  {2, 7}, {7, 5}});
  return LabelledConstruction{"Xi8", std::move(g), {{"v", 0}, {"w", 3}}};
}

LabelledConstruction embed_1_leaf_guaranteed(const Graph& g) {
  const CycleLayout layout = lay_out(g);
  const int hub = layout.k;
  if (hub + 1 > kMaxVertices) throw Error(ErrorCode::TooLarge, "H' would exceed 64 vertices");
  LabelledConstruction c{"H'", cycle_with_input(g, layout, layout.k + 1), {{"v0", hub}}};
  for (int i = 0; i < layout.k; ++i) c.graph.connect(hub, i);
  add_input_roles(c, layout);
  return c;
}

LabelledConstruction embed_k_leaf_guaranteed(const Graph& g) {
  const CycleLayout layout = lay_out(g);
  const int order = 7 * layout.k;
  if (order > kMaxVertices) throw Error(ErrorCode::TooLarge, "H'' would exceed 64 vertices");
  LabelledConstruction c{"H''", cycle_with_input(g, layout, order), {}};
  const Graph xi = build_Xi8().graph;
  // Xi8 labels 0 and 3 are the edge's ends; the other six are new.
  for (int i = 0; i < layout.k; ++i) {
    std::array<int, 8> at{};
    at[0] = i;
    at[3] = (i + 1) % layout.k;
    int next = layout.k + 6 * i;
    for (int t : {1, 2, 4, 5, 6, 7}) at[t] = next++;
    for (auto [a, b] : xi.edges()) c.graph.connect(at[a], at[b]);
  }
  add_input_roles(c, layout);
  return c;
}

LabelledConstruction build_petersen_Gk(int k) {
  if (k < 2) throw Error(ErrorCode::KTooSmall, "G_k needs k >= 2");
  const int order = 8 * k + 2;
  if (order > kMaxVertices) throw Error(ErrorCode::TooLarge, "G_k would exceed 64 vertices");
  const Graph petersen = numbered(10, kPetersen);
  // Petersen node 1 is v, node 2 is w; the edge between them is dropped.
  LabelledConstruction c{"Petersen G_" + std::to_string(k), Graph(order), {{"x", 0}, {"y", 1}}};
  for (int copy = 0; copy < k; ++copy) {
    auto label = [&](int u) { return u < 2 ? u : 2 + 8 * copy + (u - 2); };
    for (auto [a, b] : petersen.edges()) {
      if (a == 0 && b == 1) continue;
      c.graph.connect(label(a), label(b));
    }
  }
  return c;
}

LabelledConstruction build_bipartite12() {
  Graph g(12);
  for (int i = 0; i < 8; ++i) g.connect(i, (i + 1) % 8);
  for (int i = 0; i < 4; ++i) {
    g.connect(i, 8 + i);
    g.connect(8 + i, i + 4);
  }
  return LabelledConstruction{"bipartite12", std::move(g), {}};
}

LabelledConstruction build_type1_fig4() {
  // Nodes v 1 2 3 4 w x(5) 6 y(7) 8.
  const std::vector<int> nodes = {0, 1, 2, 3, 4, 100, 5, 6, 7, 8};
  Graph g = from_numbered(nodes, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 100}, {0, 5}, {5, 6}, {6, 7},
                                  {7, 100}, {6, 8}, {1, 8}, {4, 8}, {3, 5}, {2, 7}});
  return LabelledConstruction{"Type1", std::move(g), {{"v", 0}, {"w", 5}, {"x", 6}, {"y", 8}}};
}

LabelledConstruction build_type2_fig4() {
  // Nodes v 1 2 w 3 4.
  Graph g = Graph::from_edges(6, {{0, 1}, {1, 2}, {2, 3}, {0, 4}, {4, 5}, {5, 3}, {1, 5}, {2, 4}});
  return LabelledConstruction{"Type2", std::move(g), {{"v", 0}, {"w", 3}}};
}

LabelledConstruction build_cubic_fc3(int k) {
  if (k < 2) throw Error(ErrorCode::KTooSmall, "the ring needs k >= 2");
  const LabelledConstruction h0 = build_type1_fig4();
  const LabelledConstruction h1 = build_type2_fig4();
  const int order = h0.graph.order() + k * h1.graph.order();
  if (order > kMaxVertices) throw Error(ErrorCode::TooLarge, "ring would exceed 64 vertices");

  LabelledConstruction c{"cubic_fc3_" + std::to_string(k), Graph(order),
                         {{"v0", h0.role("v")}, {"w0", h0.role("w")}, {"x", h0.role("x")}, {"y", h0.role("y")}}};
  for (auto [a, b] : h0.graph.edges()) c.graph.connect(a, b);
  int prev_w = h0.role("w");
  for (int i = 1; i <= k; ++i) {
    const int base = h0.graph.order() + (i - 1) * h1.graph.order();
    for (auto [a, b] : h1.graph.edges()) c.graph.connect(base + a, base + b);
    const int vi = base + h1.role("v");
    const int wi = base + h1.role("w");
    c.graph.connect(prev_w, vi);
    c.roles["v" + std::to_string(i)] = vi;
    c.roles["w" + std::to_string(i)] = wi;
    prev_w = wi;
  }
  c.graph.connect(prev_w, h0.role("v"));
  return c;
}

Type1Report check_type1(const Graph& h, int v, int w, int x, int y) {
  const Mask all = h.vertices();
  Type1Report r;
  r.no_vw_path = !hamiltonian_path_between(h, v, w, all);
  r.partition_paths = split_paths(h, all & ~(bit(v) | bit(w) | bit(x) | bit(y)), v, x, w, y);
  r.one_ended_paths = path_from_to_any(h, v, {x, y}, all) && path_from_to_any(h, w, {x, y}, all);
  r.deleted_end_paths =
      path_from_to_any(h, w, {x, y}, all & ~bit(v)) && path_from_to_any(h, v, {x, y}, all & ~bit(w));
  r.vw_paths_after_deletion = true;
  for (int u = 0; u < h.order() && r.vw_paths_after_deletion; ++u) {
    if (u == v || u == w) continue;
    r.vw_paths_after_deletion = hamiltonian_path_between(h, v, w, all & ~bit(u)).has_value();
  }
  r.three_leaf_tree = has_spider(h, all, x, v, w, y) || has_spider(h, all, y, v, w, x);
  return r;
}

Type2Report check_type2(const Graph& h, int v, int w) {
  const Mask all = h.vertices();
  Type2Report r;
  r.vw_path = hamiltonian_path_between(h, v, w, all).has_value();
  r.every_deletion = true;
  for (int u = 0; u < h.order() && r.every_deletion; ++u) {
    if (u == v || u == w) continue;
    const Mask alive = all & ~bit(u);
    if (hamiltonian_path_between(h, v, w, alive)) continue;
    bool tree = false;
    for (int b : bits_of(alive & ~(bit(v) | bit(w)))) {
      for (int l : bits_of(alive & ~(bit(v) | bit(w) | bit(b)))) {
        if (has_spider(h, alive, b, v, w, l)) {
          tree = true;
          break;
        }
      }
      if (tree) break;
    }
    r.every_deletion = tree;
  }
  r.exclusive_ends = true;
  for (int y = 0; y < h.order() && r.exclusive_ends; ++y) {
    if (y == v || y == w) continue;
    r.exclusive_ends = !(hamiltonian_path_between(h, v, y, all) && hamiltonian_path_between(h, w, y, all));
  }
  return r;
}

LabelledConstruction glue(const LabelledConstruction& g1, const LabelledConstruction& g2) {
  for (const auto* c : {&g1, &g2}) {
    if (!c->has_role("x") || !c->has_role("y")) {
      throw Error(ErrorCode::MissingRoles, "gluing needs roles x and y on " + c->name);
    }
  }
  const int x1 = g1.role("x");
  const int y1 = g1.role("y");
  const int x2 = g2.role("x");
  const int y2 = g2.role("y");
  const int order = g1.graph.order() + g2.graph.order() - 2;
  if (order > kMaxVertices) throw Error(ErrorCode::TooLarge, "gluing would exceed 64 vertices");

  std::vector<int> map2(g2.graph.order());
  int next = g1.graph.order();
  for (int u = 0; u < g2.graph.order(); ++u) map2[u] = u == x2 ? x1 : u == y2 ? y1 : next++;

  LabelledConstruction out{g1.name + ":" + g2.name, Graph(order), {{"x", x1}, {"y", y1}}};
  for (auto [a, b] : g1.graph.edges()) out.graph.connect(a, b);
  for (auto [a, b] : g2.graph.edges()) {
    out.graph.connect(map2[a], map2[b]);
  }
  if (g1.has_role("a")) out.roles["a1"] = g1.role("a");
  if (g2.has_role("a")) out.roles["a2"] = map2[g2.role("a")];
  return out;
}

FragmentSpec extend_fragment(const FragmentSpec& f) {
  if (f.cls == FragmentClass::NotWeak) throw Error(ErrorCode::NotAFragment, "input is not a weak fragment");
  const int n = f.h.order();
  if (n + 2 > kMaxVertices) throw Error(ErrorCode::TooLarge, "extension would exceed 64 vertices");
  Graph h(n + 2);
  for (auto [a, b] : f.h.edges()) h.connect(a, b);
  const int xp = n;
  const int yp = n + 1;
  h.connect(f.x, xp);
  h.connect(xp, yp);
  h.connect(yp, f.y);
  FragmentSpec out = fragment_class(h, f.a, xp, yp);
  if (out.cls < f.cls) throw Error(ErrorCode::NotAFragment, "extension lost the fragment class");
  return out;
}

FragmentSpec as_fragment(const LabelledConstruction& c) {
  return fragment_class(c.graph, c.role("a"), c.role("x"), c.role("y"));
}

std::vector<LabelledConstruction> build_weak_fragments_fig5() {
  std::vector<LabelledConstruction> out;
  out.push_back(fragment("fig5_1", numbered(3, {{1, 2}, {2, 3}, {3, 1}}), 0, 1, 2));
  out.push_back(fragment("fig5_2", numbered(4, {{1, 2}, {3, 4}, {4, 1}, {1, 3}, {2, 4}}), 2, 3, 1));
  out.push_back(fragment("fig5_3", numbered(5, {{1, 2}, {3, 4}, {1, 3}, {1, 5}, {3, 5}, {2, 4}}), 4, 3, 1));
  return out;
}

std::vector<LabelledConstruction> build_medium_fragments_fig6() {
  const EdgeList one = with(kPetersen, {{11, 3}, {11, 5}});
  std::vector<LabelledConstruction> out;
  out.push_back(fragment("fig6_1", numbered(11, one), 10, 3, 1));
  out.push_back(fragment("fig6_2", numbered(12, with(kPetersen, {{11, 3}, {11, 5}, {12, 3}, {12, 5}, {11, 12}})),
                         11, 3, 1));
  out.push_back(fragment("fig6_3", numbered(13, with(one, {{2, 12}, {12, 13}, {13, 4}})), 10, 12, 11));
  return out;
}

std::vector<LabelledConstruction> build_tfc1_fig7() {
  const auto medium = build_medium_fragments_fig6();
  std::vector<LabelledConstruction> out;
  out.push_back(glue(medium[0], medium[0]));
  out.back().name = "fig7_1";
  out.push_back(glue(medium[0], medium[2]));
  out.back().name = "fig7_2";
  return out;
}

LabelledConstruction build_strong_fragment_fig7() {
  const LabelledConstruction whole = build_tfc1_fig7().front();
  const int a1 = whole.role("a1");
  const Mask nb = whole.graph.neighbours(a1);
  if (popcount(nb) != 2) throw Error(ErrorCode::PreconditionViolated, "a1 should have two neighbours");
  const Relabelled rest = delete_vertex(whole.graph, a1);
  const int x = rest.old_to_new[lowest(nb)];
  const int y = rest.old_to_new[lowest(nb & (nb - 1))];
  return fragment("fig7_strong", rest.graph, rest.old_to_new[whole.role("a2")], x, y);
}

std::map<int, LabelledConstruction> build_min_order_exemplars() {
  const EdgeList base = {{1, 3}, {1, 2}, {2, 4}, {4, 5}, {5, 3}, {1, 6}, {6, 5}, {2, 7}, {7, 5}};
  std::map<int, LabelledConstruction> out;
  auto put = [&](int phi, Graph g) {
    out.emplace(phi, LabelledConstruction{"phi" + std::to_string(phi), std::move(g), {}});
  };
  put(0, numbered(4, {{1, 2}, {2, 3}, {3, 4}, {4, 1}, {1, 3}, {2, 4}}));
  put(2, numbered(3, {{1, 2}, {2, 3}, {3, 1}}));
  put(3, numbered(8, {{1, 2}, {2, 8}, {8, 4}, {4, 5}, {5, 3}, {3, 1}, {1, 8}, {1, 6}, {6, 5}, {2, 7}, {7, 5}}));
  put(4, numbered(7, base));
  put(5, numbered(11, with(base, {{5, 8}, {8, 10}, {10, 11}, {11, 9}, {9, 5}, {1, 10}, {1, 11}, {2, 10}, {2, 11}})));
  put(6, numbered(10, {{1, 3}, {3, 4}, {4, 2}, {2, 6}, {6, 5}, {5, 1}, {1, 7}, {7, 8}, {8, 2}, {2, 10}, {10, 9},
                       {9, 1}}));
  put(7, from_numbered({1, 2, 3, 5, 6, 7, 8, 9, 11, 12, 13},
                       {{1, 3}, {1, 2}, {5, 3}, {1, 6}, {6, 5}, {2, 7}, {7, 5}, {5, 8}, {8, 12}, {5, 9}, {9, 12},
                        {5, 11}, {11, 13}, {12, 13}, {13, 2}}));
  put(8, numbered(13, with(base, {{5, 8}, {8, 12}, {5, 9}, {9, 12}, {5, 10}, {10, 13}, {5, 11}, {11, 13},
                                  {1, 12}, {12, 13}, {13, 2}})));
  return out;
}

namespace {

bool two_leaf_guaranteed(const Graph& g) {
  if (g.order() < 3 || g.min_degree() < 2) return false;
  if (is_hamiltonian(g) || !is_traceable(g)) return false;
  for (int v = 0; v < g.order(); ++v) {
    if (!is_traceable(g, g.vertices() & ~bit(v))) return false;
  }
  return true;
}

std::vector<LabelledConstruction> search_xi9() {
  std::set<std::string> found;
  GraphClassFilter filter;
  filter.connectivity = ConnectivityFilter::TwoConnected;
  for (int n = 3; n <= 8 && found.empty(); ++n) {
    int best = kInfinite;
    for (const Graph& g : generate_nonisomorphic(n, filter)) {
      if (g.size() > best || !two_leaf_guaranteed(g)) continue;
      if (g.size() < best) found.clear();
      best = g.size();
      found.insert(emit_graph6(canonical_form(g).graph));
    }
  }
  if (found.empty()) {
    // Order 9: any 2-connected graph minus a vertex is connected, so every
    // candidate is a connected 8-vertex graph plus one vertex. Sizes go up
    // until something qualifies.
    const auto base = connected_graphs(8);
    for (int size = 9; size <= 36 && found.empty(); ++size) {
      for (const Graph& h : base) {
        const int extra = size - h.size();
        if (extra < 2 || extra > 8) continue;
        for (Mask nb = 0; nb < bit(8); ++nb) {
          if (popcount(nb) != extra) continue;
          Graph g(9);
          for (auto [a, b] : h.edges()) g.connect(a, b);
          for (int u : bits_of(nb)) g.connect(u, 8);
          if (!is_two_connected(g) || !two_leaf_guaranteed(g)) continue;
          found.insert(emit_graph6(canonical_form(g).graph));
        }
      }
    }
  }
  std::vector<LabelledConstruction> out;
  for (const auto& s : found) out.push_back(LabelledConstruction{"Xi9", parse_graph6(s), {}});
  return out;
}

}  // namespace

const std::vector<LabelledConstruction>& find_xi9_candidates() {
  static std::once_flag once;
  static std::vector<LabelledConstruction> cached;
  std::call_once(once, [] { cached = search_xi9(); });
  return cached;
}

LabelledConstruction find_xi9() {
  const auto& all = find_xi9_candidates();
  if (all.empty()) throw Error(ErrorCode::PreconditionViolated, "no 2-leaf-guaranteed graph found");
  return all.front();
}

}  // namespace leafnet
