#include <algorithm>
#include <array>
#include <climits>

#include "leafnet/graph.hpp"

namespace leafnet {

std::string_view to_string(Connectivity c) {
  switch (c) {
    case Connectivity::Disconnected: return "Disconnected";
    case Connectivity::Connected1: return "Connected1";
    case Connectivity::TwoConnected: return "TwoConnected";
    case Connectivity::ThreeConnected: return "ThreeConnected";
  }
  return "Unknown";
}

Mask reachable(const Graph& g, Mask from, Mask within) {
  Mask seen = from & within;
  Mask frontier = seen;
  while (frontier != 0) {
    Mask next = 0;
    for (int v : bits_of(frontier)) next |= g.neighbours(v);
    next &= within & ~seen;
    seen |= next;
    frontier = next;
  }
  return seen;
}

bool is_connected(const Graph& g, Mask within) {
  within &= g.vertices();
  if (within == 0) return true;
  return reachable(g, within & -within, within) == within;
}

namespace {

// Number of connected components of the subgraph induced by `within`.
int components(const Graph& g, Mask within) {
  int count = 0;
  while (within != 0) {
    within &= ~reachable(g, within & -within, within);
    ++count;
  }
  return count;
}

bool has_cut_vertex(const Graph& g) {
  const Mask all = g.vertices();
  for (int v = 0; v < g.order(); ++v) {
    if (!is_connected(g, all & ~bit(v))) return true;
  }
  return false;
}

}  // namespace

Connectivity connectivity_class(const Graph& g) {
  if (!is_connected(g)) return Connectivity::Disconnected;
  if (g.order() <= 2 || has_cut_vertex(g)) return Connectivity::Connected1;
  if (g.order() == 3) return Connectivity::TwoConnected;
  const Mask all = g.vertices();
  for (int x = 0; x < g.order(); ++x) {
    for (int y = x + 1; y < g.order(); ++y) {
      if (!is_connected(g, all & ~bit(x) & ~bit(y))) return Connectivity::TwoConnected;
    }
  }
  return Connectivity::ThreeConnected;
}

bool is_two_connected(const Graph& g) {
  const Connectivity c = connectivity_class(g);
  return c == Connectivity::TwoConnected || c == Connectivity::ThreeConnected;
}

std::vector<VertexSet> two_separators(const Graph& g) {
  std::vector<VertexSet> out;
  const Mask all = g.vertices();
  for (int x = 0; x < g.order(); ++x) {
    for (int y = x + 1; y < g.order(); ++y) {
      if (!is_connected(g, all & ~bit(x) & ~bit(y))) out.push_back(VertexSet{bit(x) | bit(y)});
    }
  }
  return out;
}

std::vector<Fragment> fragments_of(const Graph& g, VertexSet separator) {
  if (separator.size() != 2 || (separator.mask & ~g.vertices()) != 0) {
    throw Error(ErrorCode::NotASeparator, "a 2-separator needs two vertices of the graph");
  }
  Mask rest = g.vertices() & ~separator.mask;
  if (components(g, rest) < 2) {
    throw Error(ErrorCode::NotASeparator, "removing the pair leaves the graph connected");
  }
  std::vector<Fragment> out;
  while (rest != 0) {
    const Mask comp = reachable(g, rest & -rest, rest);
    rest &= ~comp;
    Relabelled r = induced_subgraph(g, comp | separator.mask);
    out.push_back(Fragment{std::move(r.graph), std::move(r.new_to_old)});
  }
  return out;
}

std::optional<int> girth(const Graph& g) {
  int best = INT_MAX;
  const int n = g.order();
  std::array<int, kMaxVertices> dist{};
  std::array<int, kMaxVertices> parent{};
  std::array<int, kMaxVertices> queue{};
  for (int s = 0; s < n; ++s) {
    dist.fill(-1);
    dist[s] = 0;
    parent[s] = -1;
    int head = 0;
    int tail = 0;
    queue[tail++] = s;
    while (head < tail) {
      const int u = queue[head++];
      if (2 * dist[u] + 1 >= best) break;
      for (int w : bits_of(g.neighbours(u))) {
        if (dist[w] < 0) {
          dist[w] = dist[u] + 1;
          parent[w] = u;
          queue[tail++] = w;
        } else if (w != parent[u]) {
          best = std::min(best, dist[u] + dist[w] + 1);
        }
      }
    }
  }
  if (best == INT_MAX) return std::nullopt;
  return best;
}

bool is_bipartite(const Graph& g) {
  Mask uncoloured = g.vertices();
  while (uncoloured != 0) {
    Mask side[2] = {uncoloured & -uncoloured, 0};
    Mask frontier = side[0];
    int parity = 0;
    uncoloured &= ~frontier;
    while (frontier != 0) {
      Mask next = 0;
      for (int v : bits_of(frontier)) next |= g.neighbours(v);
      if ((next & side[parity]) != 0) return false;
      next &= uncoloured;
      parity ^= 1;
      side[parity] |= next;
      uncoloured &= ~next;
      frontier = next;
    }
  }
  return true;
}

bool is_regular(const Graph& g, int degree) {
  for (int v = 0; v < g.order(); ++v) {
    if (g.degree(v) != degree) return false;
  }
  return true;
}

}  // namespace leafnet
