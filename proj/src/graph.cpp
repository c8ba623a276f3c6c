#include "leafnet/graph.hpp"

#include <algorithm>
#include <string>

namespace leafnet {

std::vector<int> VertexSet::to_vector() const {
  std::vector<int> out;
  out.reserve(size());
  for (int v : members()) out.push_back(v);
  return out;
}

Graph::Graph(int n) : n_(n) {
  if (n < 0 || n > kMaxVertices) {
    throw Error(ErrorCode::TooLarge, "graph order " + std::to_string(n) + " outside 0..64");
  }
}

Graph Graph::from_edges(int n, std::span<const std::pair<int, int>> edges) {
  Graph g(n);
  for (auto [u, v] : edges) g.connect(u, v);
  return g;
}

Graph Graph::from_edges(int n, std::initializer_list<std::pair<int, int>> edges) {
  return from_edges(n, std::span<const std::pair<int, int>>(edges.begin(), edges.size()));
}

void Graph::check_index(int v) const {
  if (v < 0 || v >= n_) {
    throw Error(ErrorCode::IndexOutOfRange,
                "vertex " + std::to_string(v) + " not in graph of order " + std::to_string(n_));
  }
}

void Graph::connect(int u, int v) {
  check_index(u);
  check_index(v);
  if (u == v) throw Error(ErrorCode::PreconditionViolated, "loops are not allowed");
  adj_[u] |= bit(v);
  adj_[v] |= bit(u);
}

void Graph::disconnect(int u, int v) {
  check_index(u);
  check_index(v);
  adj_[u] &= ~bit(v);
  adj_[v] &= ~bit(u);
}

int Graph::size() const {
  int twice = 0;
  for (int v = 0; v < n_; ++v) twice += degree(v);
  return twice / 2;
}

int Graph::max_degree() const {
  int d = 0;
  for (int v = 0; v < n_; ++v) d = std::max(d, degree(v));
  return d;
}

int Graph::min_degree() const {
  if (n_ == 0) return 0;
  int d = kMaxVertices;
  for (int v = 0; v < n_; ++v) d = std::min(d, degree(v));
  return d;
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int u = 0; u < n_; ++u) {
    for (int v : bits_of(adj_[u] & ~low_bits(u + 1))) out.emplace_back(u, v);
  }
  return out;
}

bool operator==(const Graph& a, const Graph& b) {
  if (a.n_ != b.n_) return false;
  return std::equal(a.adj_.begin(), a.adj_.begin() + a.n_, b.adj_.begin());
}

std::size_t GraphHash::operator()(const Graph& g) const noexcept {
  std::uint64_t h = 0x9e3779b97f4a7c15ULL ^ static_cast<std::uint64_t>(g.order());
  for (Mask row : g.rows()) {
    h ^= row + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return static_cast<std::size_t>(h);
}

Graph add_edge(const Graph& g, int u, int v) {
  Graph out = g;
  out.connect(u, v);
  return out;
}

Relabelled induced_subgraph(const Graph& g, Mask keep) {
  keep &= g.vertices();
  Relabelled r;
  r.old_to_new.assign(g.order(), -1);
  for (int v : bits_of(keep)) {
    r.old_to_new[v] = static_cast<int>(r.new_to_old.size());
    r.new_to_old.push_back(v);
  }
  r.graph = Graph(static_cast<int>(r.new_to_old.size()));
  for (int v : bits_of(keep)) {
    for (int w : bits_of(g.neighbours(v) & keep & ~low_bits(v + 1))) {
      r.graph.connect(r.old_to_new[v], r.old_to_new[w]);
    }
  }
  return r;
}

Relabelled delete_vertex(const Graph& g, int v) {
  if (v < 0 || v >= g.order()) {
    throw Error(ErrorCode::IndexOutOfRange, "cannot delete vertex " + std::to_string(v));
  }
  return induced_subgraph(g, g.vertices() & ~bit(v));
}

Relabelled identify(const Graph& g, VertexSet set) {
  if (set.empty() || (set.mask & ~g.vertices()) != 0) {
    throw Error(ErrorCode::IndexOutOfRange, "identification set outside the graph");
  }
  const int keep = lowest(set.mask);
  Relabelled r;
  r.old_to_new.assign(g.order(), -1);
  for (int v = 0; v < g.order(); ++v) {
    if (set.contains(v) && v != keep) continue;
    r.old_to_new[v] = static_cast<int>(r.new_to_old.size());
    r.new_to_old.push_back(v);
  }
  for (int v : set.members()) r.old_to_new[v] = r.old_to_new[keep];
  r.graph = Graph(static_cast<int>(r.new_to_old.size()));
  for (auto [u, v] : g.edges()) {
    const int a = r.old_to_new[u];
    const int b = r.old_to_new[v];
    if (a != b) r.graph.connect(a, b);
  }
  return r;
}

Graph disjoint_union(const Graph& a, const Graph& b) {
  Graph out(a.order() + b.order());
  for (auto [u, v] : a.edges()) out.connect(u, v);
  for (auto [u, v] : b.edges()) out.connect(u + a.order(), v + a.order());
  return out;
}

}  // namespace leafnet
