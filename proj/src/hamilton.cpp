#include "leafnet/hamilton.hpp"

#include <algorithm>
#include <array>

#include "leafnet/deadline.hpp"

namespace leafnet {

Mask PathWitness::vertex_mask() const {
  Mask m = 0;
  for (int v : order) m |= bit(v);
  return m;
}

bool is_valid_witness(const Graph& g, const PathWitness& w, Mask alive, bool spanning) {
  if (w.order.empty()) return !spanning || alive == 0;
  Mask seen = 0;
  for (std::size_t i = 0; i < w.order.size(); ++i) {
    const int v = w.order[i];
    if (v < 0 || v >= g.order() || !(alive & bit(v)) || (seen & bit(v))) return false;
    seen |= bit(v);
    if (i > 0 && !g.has_edge(w.order[i - 1], v)) return false;
  }
  if (w.kind == PathKind::Cycle && (w.order.size() < 3 || !g.has_edge(w.order.back(), w.order.front()))) {
    return false;
  }
  return !spanning || seen == alive;
}

namespace {

// Depth-first extension of a path from a fixed start. The path must absorb
// every vertex of the unvisited set; `end_` (if non-empty) is the single
// vertex the path has to step onto last, which for a cycle is the start.
class PathSearch {
 public:
  PathSearch(const Graph& g, Mask alive) {
    for (int v : bits_of(alive)) adj_[v] = g.neighbours(v) & alive;
  }

  std::optional<std::vector<int>> run(int start, Mask unvisited, Mask end, bool free_end) {
    end_ = end;
    free_ = free_end;
    path_.assign(1, start);
    if (!extend(start, unvisited)) return std::nullopt;
    return path_;
  }

 private:
  bool extend(int head, Mask unvisited) {
    Deadline::poll();
    if (unvisited == 0) return free_ || (adj_[head] & end_) != 0;

    const Mask open = unvisited | bit(head) | end_;
    if (end_ != 0 && (adj_[lowest(end_)] & (unvisited | bit(head))) == 0) return false;

    // When the head is also the closing vertex of a cycle, a neighbour with two
    // open slots may be the last vertex instead of the next one.
    const bool may_force = !free_ && (end_ & bit(head)) == 0;
    Mask forced = 0;
    int dangling = 0;
    std::array<int, kMaxVertices> avail{};
    for (int w : bits_of(unvisited)) {
      const int c = popcount(adj_[w] & open);
      avail[w] = c;
      if (c == 0) return false;
      if (c == 1) {
        if (!free_ || ++dangling > 1) return false;
      } else if (c == 2 && may_force && (adj_[w] & bit(head))) {
        forced |= bit(w);
      }
    }
    if (popcount(forced) > 1) return false;
    if (!covers(head, unvisited)) return false;

    const Mask cand = forced != 0 ? forced : (adj_[head] & unvisited);
    std::array<int, kMaxVertices> order{};
    int k = 0;
    for (int w : bits_of(cand)) order[k++] = w;
    std::stable_sort(order.begin(), order.begin() + k,
                     [&](int a, int b) { return avail[a] < avail[b]; });
    for (int i = 0; i < k; ++i) {
      const int w = order[i];
      path_.push_back(w);
      if (extend(w, unvisited & ~bit(w))) return true;
      path_.pop_back();
    }
    return false;
  }

  bool covers(int head, Mask unvisited) const {
    const Mask within = unvisited | bit(head);
    Mask seen = bit(head);
    Mask frontier = seen;
    while (frontier != 0) {
      Mask next = 0;
      for (int v : bits_of(frontier)) next |= adj_[v];
      next &= within & ~seen;
      seen |= next;
      frontier = next;
    }
    return (seen & unvisited) == unvisited;
  }

  std::array<Mask, kMaxVertices> adj_{};
  Mask end_ = 0;
  bool free_ = false;
  std::vector<int> path_;
};

int alive_degree(const Graph& g, int v, Mask alive) { return popcount(g.neighbours(v) & alive); }

void check_alive(const Graph& g, int v, Mask alive) {
  if (v < 0 || v >= g.order() || !(alive & bit(v))) {
    throw Error(ErrorCode::IndexOutOfRange, "vertex " + std::to_string(v) + " not present");
  }
}

}  // namespace

std::optional<PathWitness> hamiltonian_cycle(const Graph& g, Mask alive) {
  alive &= g.vertices();
  if (popcount(alive) < 3 || !is_connected(g, alive)) return std::nullopt;
  int anchor = -1;
  for (int v : bits_of(alive)) {
    const int d = alive_degree(g, v, alive);
    if (d < 2) return std::nullopt;
    if (anchor < 0 || d < alive_degree(g, anchor, alive)) anchor = v;
  }
  PathSearch search(g, alive);
  auto path = search.run(anchor, alive & ~bit(anchor), bit(anchor), false);
  if (!path) return std::nullopt;
  return PathWitness{std::move(*path), PathKind::Cycle};
}

std::optional<PathWitness> hamiltonian_path_between(const Graph& g, int u, int v, Mask alive) {
  alive &= g.vertices();
  check_alive(g, u, alive);
  check_alive(g, v, alive);
  if (u == v) throw Error(ErrorCode::PreconditionViolated, "path endpoints must differ");
  for (int w : bits_of(alive & ~bit(u) & ~bit(v))) {
    if (alive_degree(g, w, alive) < 2) return std::nullopt;
  }
  if (!is_connected(g, alive)) return std::nullopt;
  PathSearch search(g, alive);
  auto path = search.run(u, alive & ~bit(u) & ~bit(v), bit(v), false);
  if (!path) return std::nullopt;
  path->push_back(v);
  return PathWitness{std::move(*path), PathKind::Path};
}

std::optional<PathWitness> hamiltonian_path(const Graph& g, Mask alive, std::optional<int> start) {
  alive &= g.vertices();
  if (start) check_alive(g, *start, alive);
  if (alive == 0) return std::nullopt;
  if (popcount(alive) == 1) return PathWitness{{lowest(alive)}, PathKind::Path};
  if (!is_connected(g, alive)) return std::nullopt;

  Mask ends = 0;
  for (int v : bits_of(alive)) {
    if (alive_degree(g, v, alive) == 1) ends |= bit(v);
  }
  if (popcount(ends) > 2) return std::nullopt;

  std::vector<int> starts;
  if (start) {
    if (popcount(ends) == 2 && !(ends & bit(*start))) return std::nullopt;
    starts.push_back(*start);
  } else if (ends != 0) {
    starts.push_back(lowest(ends));
  } else {
    for (int v : bits_of(alive)) starts.push_back(v);
    std::stable_sort(starts.begin(), starts.end(), [&](int a, int b) {
      return alive_degree(g, a, alive) < alive_degree(g, b, alive);
    });
  }

  PathSearch search(g, alive);
  for (int s : starts) {
    if (auto path = search.run(s, alive & ~bit(s), 0, true)) {
      return PathWitness{std::move(*path), PathKind::Path};
    }
  }
  return std::nullopt;
}

bool is_hamiltonian(const Graph& g, Mask alive) { return hamiltonian_cycle(g, alive).has_value(); }

bool is_traceable(const Graph& g, Mask alive) { return hamiltonian_path(g, alive).has_value(); }

namespace {

class LongestPath {
 public:
  LongestPath(const Graph& g, Mask alive) : g_(g), alive_(alive) {}

  PathWitness run() {
    const int total = popcount(alive_);
    for (int s : bits_of(alive_)) {
      path_.assign(1, s);
      extend(s, alive_ & ~bit(s));
      if (static_cast<int>(best_.size()) == total) break;
    }
    return PathWitness{best_, PathKind::Path};
  }

 private:
  void extend(int head, Mask unvisited) {
    Deadline::poll();
    if (path_.size() > best_.size()) best_ = path_;
    const Mask reach = reachable(g_, bit(head), unvisited | bit(head)) & unvisited;
    if (path_.size() + popcount(reach) <= best_.size()) return;
    for (int w : bits_of(g_.neighbours(head) & unvisited)) {
      path_.push_back(w);
      extend(w, unvisited & ~bit(w));
      path_.pop_back();
      if (static_cast<int>(best_.size()) == popcount(alive_)) return;
    }
  }

  const Graph& g_;
  Mask alive_;
  std::vector<int> path_;
  std::vector<int> best_;
};

}  // namespace

PathWitness longest_path(const Graph& g, Mask alive) {
  alive &= g.vertices();
  if (alive == 0) return PathWitness{};
  if (auto ham = hamiltonian_path(g, alive)) return *ham;
  return LongestPath(g, alive).run();
}

bool is_1_hamiltonian(const Graph& g) {
  if (g.order() < 3) throw Error(ErrorCode::TooSmall, "1-hamiltonicity needs at least 3 vertices");
  if (!is_hamiltonian(g)) return false;
  for (int v = 0; v < g.order(); ++v) {
    if (!is_hamiltonian(g, g.vertices() & ~bit(v))) return false;
  }
  return true;
}

}  // namespace leafnet
