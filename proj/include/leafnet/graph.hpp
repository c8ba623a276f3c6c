#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "leafnet/errors.hpp"

namespace leafnet {

using Mask = std::uint64_t;

inline constexpr int kMaxVertices = 64;

constexpr Mask bit(int v) { return Mask{1} << v; }
constexpr Mask low_bits(int n) { return n >= 64 ? ~Mask{0} : bit(n) - 1; }
constexpr int popcount(Mask m) { return std::popcount(m); }
constexpr int lowest(Mask m) { return std::countr_zero(m); }

/// Iterates the set bits of a mask in increasing order.
class BitRange {
 public:
  class iterator {
   public:
    explicit iterator(Mask m) : m_(m) {}
    int operator*() const { return lowest(m_); }
    iterator& operator++() {
      m_ &= m_ - 1;
      return *this;
    }
    bool operator==(const iterator& o) const { return m_ == o.m_; }

   private:
    Mask m_;
  };

  explicit BitRange(Mask m) : m_(m) {}
  iterator begin() const { return iterator(m_); }
  iterator end() const { return iterator(0); }

 private:
  Mask m_;
};

inline BitRange bits_of(Mask m) { return BitRange(m); }

/// A set of vertex labels of one graph.
struct VertexSet {
  Mask mask = 0;

  static VertexSet of(std::initializer_list<int> vs) {
    VertexSet s;
    for (int v : vs) s.mask |= bit(v);
    return s;
  }

  bool contains(int v) const { return (mask >> v) & 1U; }
  int size() const { return popcount(mask); }
  bool empty() const { return mask == 0; }
  BitRange members() const { return BitRange(mask); }
  std::vector<int> to_vector() const;

  friend bool operator==(const VertexSet&, const VertexSet&) = default;
};

/// Simple undirected graph on at most 64 vertices; row v holds N(v) as a bit mask.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);

  static Graph from_edges(int n, std::span<const std::pair<int, int>> edges);
  static Graph from_edges(int n, std::initializer_list<std::pair<int, int>> edges);

  int order() const { return n_; }
  Mask vertices() const { return low_bits(n_); }
  Mask neighbours(int v) const { return adj_[v]; }
  std::span<const Mask> rows() const { return {adj_.data(), static_cast<std::size_t>(n_)}; }

  bool has_edge(int u, int v) const { return (adj_[u] >> v) & 1U; }
  int degree(int v) const { return popcount(adj_[v]); }
  int size() const;
  int max_degree() const;
  int min_degree() const;
  std::vector<std::pair<int, int>> edges() const;

  /// Builder mutators; graphs are treated as values once handed out.
  void connect(int u, int v);
  void disconnect(int u, int v);

  friend bool operator==(const Graph& a, const Graph& b);

 private:
  void check_index(int v) const;

  int n_ = 0;
  std::array<Mask, kMaxVertices> adj_{};
};

struct GraphHash {
  std::size_t operator()(const Graph& g) const noexcept;
};

// graph6 interchange

Graph parse_graph6(std::string_view line);
std::string emit_graph6(const Graph& g);

// structural queries

enum class Connectivity { Disconnected, Connected1, TwoConnected, ThreeConnected };

std::string_view to_string(Connectivity c);

/// Whether the subgraph induced by `within` is connected (empty counts as connected).
bool is_connected(const Graph& g, Mask within);
inline bool is_connected(const Graph& g) { return is_connected(g, g.vertices()); }

/// Vertices reachable from `from` inside the induced subgraph on `within`.
Mask reachable(const Graph& g, Mask from, Mask within);

Connectivity connectivity_class(const Graph& g);
bool is_two_connected(const Graph& g);

std::vector<VertexSet> two_separators(const Graph& g);

struct Fragment {
  Graph graph;
  std::vector<int> to_original;  // new label -> label in the host graph
};

std::vector<Fragment> fragments_of(const Graph& g, VertexSet separator);

/// Length of a shortest cycle; nullopt for forests.
std::optional<int> girth(const Graph& g);
bool is_bipartite(const Graph& g);
bool is_regular(const Graph& g, int degree);

struct Relabelled {
  Graph graph;
  std::vector<int> old_to_new;  // -1 for removed vertices
  std::vector<int> new_to_old;
};

Relabelled delete_vertex(const Graph& g, int v);
Relabelled induced_subgraph(const Graph& g, Mask keep);
Graph add_edge(const Graph& g, int u, int v);
/// Merges the vertices of `set` into one vertex (placed at the lowest label of the set).
Relabelled identify(const Graph& g, VertexSet set);
/// Disjoint union; vertices of `b` are shifted by a.order().
Graph disjoint_union(const Graph& a, const Graph& b);

}  // namespace leafnet
