#include <Eigen/Dense>
#include <algorithm>
#include <numeric>
#include <set>

#include "leafnet/hamilton.hpp"
#include "leafnet/oracle.hpp"

namespace leafnet {

namespace {

struct UnionFind {
  std::array<int, kMaxVertices> parent{};
  explicit UnionFind(int n) { std::iota(parent.begin(), parent.begin() + n, 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[a] = b;
    return true;
  }
};

class TreeEnumerator {
 public:
  TreeEnumerator(const Graph& g, const std::function<void(std::span<const Edge>)>& visit)
      : n_(g.order()), edges_(g.edges()), visit_(visit) {}

  void run() {
    chosen_.clear();
    recurse(0, UnionFind(n_));
  }

 private:
  // True if the chosen edges together with edges[from..] still span the graph.
  bool can_span(std::size_t from) const {
    UnionFind uf(n_);
    int joined = 0;
    for (const auto& [a, b] : chosen_) joined += uf.unite(a, b);
    for (std::size_t i = from; i < edges_.size(); ++i) joined += uf.unite(edges_[i].first, edges_[i].second);
    return joined == n_ - 1;
  }

  void recurse(std::size_t i, UnionFind uf) {
    if (static_cast<int>(chosen_.size()) == n_ - 1) {
      visit_(chosen_);
      return;
    }
    if (i == edges_.size()) return;
    const auto [a, b] = edges_[i];
    UnionFind with = uf;
    if (with.unite(a, b)) {
      chosen_.push_back(edges_[i]);
      recurse(i + 1, with);
      chosen_.pop_back();
    }
    if (can_span(i + 1)) recurse(i + 1, uf);
  }

  int n_;
  std::vector<Edge> edges_;
  const std::function<void(std::span<const Edge>)>& visit_;
  std::vector<Edge> chosen_;
};

bool permutation_search(const Graph& g, bool cycle, int first, int last) {
  const int n = g.order();
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    if (first >= 0 && perm.front() != first) continue;
    if (last >= 0 && perm.back() != last) continue;
    bool ok = true;
    for (int i = 0; i + 1 < n && ok; ++i) ok = g.has_edge(perm[i], perm[i + 1]);
    if (ok && cycle) ok = g.has_edge(perm.back(), perm.front());
    if (ok) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

bool dfs_search(const Graph& g, int head, Mask visited, bool cycle, int first, int last) {
  if (visited == g.vertices()) {
    if (cycle) return g.has_edge(head, first);
    return last < 0 || head == last;
  }
  for (int w : bits_of(g.neighbours(head) & ~visited)) {
    if (w == last && (visited | bit(w)) != g.vertices()) continue;
    if (dfs_search(g, w, visited | bit(w), cycle, first, last)) return true;
  }
  return false;
}

bool naive_search(const Graph& g, bool cycle, int first, int last) {
  const int n = g.order();
  if (n <= 8) return permutation_search(g, cycle, first, last);
  if (first >= 0) return dfs_search(g, first, bit(first), cycle, first, last);
  for (int s = 0; s < n; ++s) {
    if (dfs_search(g, s, bit(s), cycle, s, last)) return true;
  }
  return false;
}

int naive_tau(const DegreeProfile& s, const DegreeProfile& sv, int deleted) {
  int c = 0;
  for (int w = 0; w < s.order; ++w) {
    if (w != deleted && s.degrees[w] != sv.degrees[w]) ++c;
  }
  return c;
}

}  // namespace

void for_each_spanning_tree(const Graph& g, const std::function<void(std::span<const Edge>)>& visit) {
  if (g.order() > 12) throw Error(ErrorCode::TooLarge, "spanning-tree enumeration is limited to 12 vertices");
  if (!is_connected(g)) throw Error(ErrorCode::Disconnected, "graph is disconnected");
  if (g.order() <= 1) {
    visit({});
    return;
  }
  TreeEnumerator(g, visit).run();
}

std::vector<std::vector<Edge>> all_spanning_trees(const Graph& g) {
  std::vector<std::vector<Edge>> out;
  for_each_spanning_tree(g, [&](std::span<const Edge> t) { out.emplace_back(t.begin(), t.end()); });
  return out;
}

double spanning_tree_count(const Graph& g) {
  const int n = g.order();
  if (n <= 1) return 1;
  Eigen::MatrixXd lap = Eigen::MatrixXd::Zero(n - 1, n - 1);
  for (int v = 1; v < n; ++v) {
    lap(v - 1, v - 1) = g.degree(v);
    for (int w : bits_of(g.neighbours(v))) {
      if (w > 0) lap(v - 1, w - 1) = -1;
    }
  }
  return std::round(lap.fullPivLu().determinant());
}

bool brute_hamiltonian(const Graph& g) { return g.order() >= 3 && naive_search(g, true, 0, -1); }

bool brute_traceable(const Graph& g) { return g.order() >= 1 && naive_search(g, false, -1, -1); }

bool brute_path_between(const Graph& g, int u, int v) { return u != v && naive_search(g, false, u, v); }

bool brute_1_hamiltonian(const Graph& g) {
  if (!brute_hamiltonian(g)) return false;
  for (int v = 0; v < g.order(); ++v) {
    if (!brute_hamiltonian(delete_vertex(g, v).graph)) return false;
  }
  return true;
}

MlProfile brute_ml_profile(const Graph& g) {
  const int n = g.order();
  if (n > 12) throw Error(ErrorCode::TooLarge, "brute ml is limited to 12 vertices");
  if (n == 0) throw Error(ErrorCode::TooSmall, "no vertices");
  if (!is_connected(g)) throw Error(ErrorCode::Disconnected, "graph is disconnected");
  MlProfile out;
  if (brute_hamiltonian(g)) {
    out.ml = 1;
    out.kind = MlKind::HamCycle;
    out.profiles.push_back(DegreeProfile::hamiltonian(n, g.vertices()));
    return out;
  }
  int best = kInfinite;
  std::set<std::vector<int>> sequences;
  for_each_spanning_tree(g, [&](std::span<const Edge> tree) {
    std::vector<int> deg(n, 0);
    for (const auto& [a, b] : tree) {
      ++deg[a];
      ++deg[b];
    }
    const int leaves = static_cast<int>(std::count(deg.begin(), deg.end(), 1));
    if (leaves < best) {
      best = leaves;
      sequences.clear();
    }
    if (leaves == best) sequences.insert(deg);
  });
  out.ml = best;
  out.kind = best == 2 ? MlKind::HamPath : MlKind::Tree;
  for (const auto& d : sequences) out.profiles.push_back(DegreeProfile::from_degrees(d, g.vertices()));
  std::sort(out.profiles.begin(), out.profiles.end());
  return out;
}

FaultCostReport brute_fault_cost(const Graph& g) {
  const int n = g.order();
  if (n > 10) throw Error(ErrorCode::TooLarge, "brute fault cost is limited to 10 vertices");
  if (n < 3) throw Error(ErrorCode::NotTwoConnected, "fewer than 3 vertices");
  FaultCostReport report;
  const MlProfile whole = brute_ml_profile(g);
  report.ml = whole.ml;
  report.profiles = whole.profiles;
  for (int v = 0; v < n; ++v) {
    const Relabelled r = delete_vertex(g, v);
    if (!is_connected(r.graph)) throw Error(ErrorCode::NotTwoConnected, "vertex deletion disconnects");
    MlProfile small = brute_ml_profile(r.graph);
    MlProfile lifted;
    lifted.ml = small.ml;
    lifted.kind = small.kind;
    for (const auto& p : small.profiles) {
      std::vector<int> deg(n, 0);
      for (int i = 0; i < r.graph.order(); ++i) deg[r.new_to_old[i]] = p.degrees[i];
      lifted.profiles.push_back(DegreeProfile::from_degrees(deg, g.vertices() & ~bit(v)));
    }
    std::sort(lifted.profiles.begin(), lifted.profiles.end());
    report.vertex_deleted.push_back(std::move(lifted));
  }

  std::vector<std::vector<int>> minima;
  for (const auto& s : whole.profiles) {
    std::vector<int> per_vertex(n, kInfinite);
    for (int v = 0; v < n; ++v) {
      for (const auto& sv : report.vertex_deleted[v].profiles) {
        per_vertex[v] = std::min(per_vertex[v], naive_tau(s, sv, v));
      }
    }
    report.per_profile_phi.push_back(*std::max_element(per_vertex.begin(), per_vertex.end()));
    minima.push_back(std::move(per_vertex));
  }
  const auto best = std::min_element(report.per_profile_phi.begin(), report.per_profile_phi.end()) -
                    report.per_profile_phi.begin();
  report.phi = report.per_profile_phi[best];
  report.optimal_profile = whole.profiles[best];
  report.per_vertex_cost = minima[best];
  return report;
}

int independence_number(const Graph& g) {
  const int n = g.order();
  if (n > 20) throw Error(ErrorCode::TooLarge, "brute independence number is limited to 20 vertices");
  int best = 0;
  for (Mask s = 0; s < bit(n); ++s) {
    const int size = popcount(s);
    if (size <= best) continue;
    bool independent = true;
    for (int v : bits_of(s)) {
      if (g.neighbours(v) & s) {
        independent = false;
        break;
      }
    }
    if (independent) best = size;
  }
  return best;
}

Graph random_two_connected(std::mt19937_64& rng, int n, double max_trees) {
  if (n < 3) throw Error(ErrorCode::TooSmall, "2-connected graphs need 3 vertices");
  std::uniform_real_distribution<double> density(0.2, 0.6);
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  for (;;) {
    const double p = density(rng);
    Graph g(n);
    for (int u = 0; u < n; ++u) {
      for (int v = u + 1; v < n; ++v) {
        if (coin(rng) < p) g.connect(u, v);
      }
    }
    if (is_two_connected(g) && spanning_tree_count(g) <= max_trees) return g;
  }
}

}  // namespace leafnet
