#include "leafnet/mlst.hpp"

#include <algorithm>
#include <unordered_set>

#include "leafnet/deadline.hpp"
#include "leafnet/hamilton.hpp"

namespace leafnet {

namespace {

thread_local TreeSearchStats t_stats;

using Degrees = std::array<std::uint8_t, kMaxVertices>;

struct DegreesHash {
  std::size_t operator()(const Degrees& d) const noexcept {
    std::uint64_t h = 1469598103934665603ULL;
    for (std::uint8_t x : d) {
      h ^= x;
      h *= 1099511628211ULL;
    }
    return static_cast<std::size_t>(h);
  }
};

// Exhaustive spanning-tree backtracking. Trees grow from a root; every node
// picks one undecided edge between the tree and the rest, first adds it and
// then forbids it, so each spanning tree is reached exactly once. Edges
// between two tree vertices count as forbidden.
class TreeSearch {
 public:
  TreeSearch(const Graph& g, Mask alive, bool first_only) : alive_(alive), first_only_(first_only) {
    for (int v : bits_of(alive)) adj_[v] = g.neighbours(v) & alive;
    root_ = -1;
    for (int v : bits_of(alive)) {
      if (root_ < 0 || popcount(adj_[v]) > popcount(adj_[root_])) root_ = v;
    }
  }

  /// Collects degree arrays of all spanning trees with at most `limit` leaves.
  const std::unordered_set<Degrees, DegreesHash>& run(int limit) {
    limit_ = limit;
    found_.clear();
    stop_ = false;
    forb_.fill(0);
    deg_.fill(0);
    tree_ = bit(root_);
    leaves_ = 0;
    node(0);
    return found_;
  }

 private:
  Mask allowed(int v) const { return adj_[v] & ~forb_[v]; }

  void node(int parent_leaves) {
    ++t_stats.nodes;
    Deadline::poll();
    if (leaves_ < parent_leaves) t_stats.monotonicity_violated = true;
    if (tree_ == alive_) {
      record();
      return;
    }

    const Mask rest = alive_ & ~tree_;
    Mask touched = 0;
    for (int v : bits_of(tree_)) touched |= allowed(v);
    touched &= rest;
    Mask frontier = touched;
    while (frontier != 0) {
      Mask next = 0;
      for (int w : bits_of(frontier)) next |= allowed(w);
      next &= rest & ~touched;
      touched |= next;
      frontier = next;
    }
    if (touched != rest) return;

    int dead = 0;
    int live = 0;
    int pick = -1;
    int pick_open = kMaxVertices + 1;
    for (int v : bits_of(tree_)) {
      const int open = popcount(allowed(v) & rest);
      if (deg_[v] == 1) {
        if (open == 0) ++dead;
        else ++live;
      }
      if (open > 0 && open < pick_open) {
        pick = v;
        pick_open = open;
      }
    }
    int forced = 0;
    for (int w : bits_of(rest)) {
      if (popcount(allowed(w)) == 1) ++forced;
    }
    if (dead + std::max(live, forced) > limit_) return;

    const int v = pick;
    int w = -1;
    int w_open = kMaxVertices + 1;
    for (int c : bits_of(allowed(v) & rest)) {
      const int open = popcount(allowed(c));
      if (open < w_open) {
        w = c;
        w_open = open;
      }
    }

    const int before = leaves_;
    if (deg_[v] == 0) leaves_ += 2;
    else if (deg_[v] >= 2) leaves_ += 1;
    ++deg_[v];
    deg_[w] = 1;
    tree_ |= bit(w);
    node(before);
    tree_ &= ~bit(w);
    deg_[w] = 0;
    --deg_[v];
    leaves_ = before;
    if (stop_) return;

    forb_[v] |= bit(w);
    forb_[w] |= bit(v);
    node(before);
    forb_[v] &= ~bit(w);
    forb_[w] &= ~bit(v);
  }

  void record() {
    ++t_stats.trees;
    if (leaves_ > limit_) return;
    found_.insert(deg_);
    if (first_only_) stop_ = true;
  }

  std::array<Mask, kMaxVertices> adj_{};
  std::array<Mask, kMaxVertices> forb_{};
  Degrees deg_{};
  Mask alive_;
  Mask tree_ = 0;
  int root_ = -1;
  int leaves_ = 0;
  int limit_ = 0;
  bool first_only_;
  bool stop_ = false;
  std::unordered_set<Degrees, DegreesHash> found_;
};

int count_pendant(const Graph& g, Mask alive) {
  int c = 0;
  for (int v : bits_of(alive)) c += popcount(g.neighbours(v) & alive) == 1 ? 1 : 0;
  return c;
}

MlProfile exceeded() {
  MlProfile out;
  out.bound_exceeded = true;
  return out;
}

MlProfile single(int ml, MlKind kind, DegreeProfile p) {
  MlProfile out;
  out.ml = ml;
  out.kind = kind;
  out.profiles.push_back(std::move(p));
  return out;
}

// Level-by-level search: the first leaf limit admitting any spanning tree is
// ml, and at that level every collected tree has exactly ml leaves.
std::optional<std::pair<int, std::vector<Degrees>>> tree_tier(const Graph& g, Mask alive, int upper,
                                                              bool first_only) {
  t_stats = TreeSearchStats{};
  const int m = popcount(alive);
  const int lo = std::max(3, count_pendant(g, alive));
  const int hi = std::min(upper, m - 1);
  TreeSearch search(g, alive, first_only);
  for (int limit = lo; limit <= hi; ++limit) {
    const auto& found = search.run(limit);
    if (!found.empty()) return std::make_pair(limit, std::vector<Degrees>(found.begin(), found.end()));
  }
  return std::nullopt;
}

}  // namespace

const TreeSearchStats& last_tree_search_stats() { return t_stats; }

MlProfile ml_profile_masked(const Graph& g, Mask alive, int upper) {
  alive &= g.vertices();
  const int n = g.order();
  const int m = popcount(alive);
  if (m == 0) throw Error(ErrorCode::TooSmall, "no vertices");
  if (!is_connected(g, alive)) throw Error(ErrorCode::Disconnected, "graph is disconnected");

  if (m == 1) {
    if (upper < 0) return exceeded();
    return single(0, MlKind::Tree, DegreeProfile::from_degrees(Degrees{}, n, alive));
  }
  if (m == 2) {
    if (upper < 2) return exceeded();
    return single(2, MlKind::HamPath,
                  DegreeProfile::hamiltonian(n, alive, lowest(alive), lowest(alive & (alive - 1))));
  }
  if (is_hamiltonian(g, alive)) {
    if (upper < 1) return exceeded();
    return single(1, MlKind::HamCycle, DegreeProfile::hamiltonian(n, alive));
  }

  if (auto first = hamiltonian_path(g, alive)) {
    if (upper < 2) return exceeded();
    MlProfile out;
    out.ml = 2;
    out.kind = MlKind::HamPath;
    const int a0 = std::min(first->front(), first->back());
    const int b0 = std::max(first->front(), first->back());
    Mask ends = 0;
    for (int v : bits_of(alive)) {
      if (popcount(g.neighbours(v) & alive) == 1) ends |= bit(v);
    }
    for (int a : bits_of(alive)) {
      for (int b : bits_of(alive & ~low_bits(a + 1) & ~g.neighbours(a))) {
        if (ends != 0 && (popcount(ends) == 2 ? (ends != (bit(a) | bit(b))) : !(ends & (bit(a) | bit(b))))) {
          continue;
        }
        if ((a == a0 && b == b0) || hamiltonian_path_between(g, a, b, alive)) {
          out.profiles.push_back(DegreeProfile::hamiltonian(n, alive, a, b));
        }
      }
    }
    std::sort(out.profiles.begin(), out.profiles.end());
    return out;
  }

  if (upper < 3) return exceeded();
  auto found = tree_tier(g, alive, upper, false);
  if (!found) return exceeded();
  MlProfile out;
  out.ml = found->first;
  out.kind = MlKind::Tree;
  out.profiles.reserve(found->second.size());
  for (const auto& d : found->second) out.profiles.push_back(DegreeProfile::from_degrees(d, n, alive));
  std::sort(out.profiles.begin(), out.profiles.end());
  return out;
}

MlProfile ml_profile(const Graph& g) { return ml_profile_masked(g, g.vertices(), kInfinite); }

MlProfile ml_profile_with_bound(const Graph& g, int upper) {
  return ml_profile_masked(g, g.vertices(), upper);
}

int ml_number(const Graph& g, Mask alive) {
  alive &= g.vertices();
  const int m = popcount(alive);
  if (m == 0) return 0;
  if (!is_connected(g, alive)) return kInfinite;
  if (m == 1) return 0;
  if (m == 2) return 2;
  if (is_hamiltonian(g, alive)) return 1;
  if (is_traceable(g, alive)) return 2;
  auto found = tree_tier(g, alive, kInfinite, true);
  return found->first;
}

int ml_number(const Graph& g) { return ml_number(g, g.vertices()); }

}  // namespace leafnet
