#include <map>
#include <mutex>
#include <set>

#include "leafnet/oracle.hpp"

namespace leafnet {

bool GraphClassFilter::accepts(const Graph& g) const {
  if (regular_degree && !is_regular(g, *regular_degree)) return false;
  if (bipartite_only && !is_bipartite(g)) return false;
  if (min_girth) {
    const auto gi = girth(g);
    if (gi && *gi < *min_girth) return false;
  }
  switch (connectivity) {
    case ConnectivityFilter::Any: break;
    case ConnectivityFilter::TwoConnected:
      if (!is_two_connected(g)) return false;
      break;
    case ConnectivityFilter::ThreeConnected:
      if (connectivity_class(g) != Connectivity::ThreeConnected) return false;
      break;
  }
  return true;
}

std::string GraphClassFilter::describe() const {
  std::string out;
  switch (connectivity) {
    case ConnectivityFilter::Any: out = "any"; break;
    case ConnectivityFilter::TwoConnected: out = "2-connected"; break;
    case ConnectivityFilter::ThreeConnected: out = "3-connected"; break;
  }
  if (regular_degree) out += ", " + std::to_string(*regular_degree) + "-regular";
  if (min_girth) out += ", girth>=" + std::to_string(*min_girth);
  if (bipartite_only) out += ", bipartite";
  return out;
}

namespace {

// Isomorphism classes by order, grown one vertex at a time: every connected
// graph on k+1 vertices has a vertex whose removal leaves it connected, so
// extending each connected class on k vertices by every non-empty
// neighbourhood reaches all of them. Without the connectivity requirement
// the empty neighbourhood is allowed too.
class Census {
 public:
  const std::vector<Graph>& level(int n, bool connected) {
    std::lock_guard lock(mutex_);
    auto& levels = connected ? connected_ : all_;
    if (levels.empty()) levels.push_back({Graph(0)});
    while (static_cast<int>(levels.size()) <= n) {
      const int k = static_cast<int>(levels.size()) - 1;
      levels.push_back(extend(levels[k], k, connected));
    }
    return levels[n];
  }

 private:
  static std::vector<Graph> extend(const std::vector<Graph>& from, int k, bool connected) {
    std::set<std::string> seen;
    for (const Graph& base : from) {
      for (Mask nb = connected && k > 0 ? 1 : 0; nb < bit(k); ++nb) {
        Graph g(k + 1);
        for (auto [u, v] : base.edges()) g.connect(u, v);
        for (int w : bits_of(nb)) g.connect(w, k);
        seen.insert(emit_graph6(canonical_form(g).graph));
      }
    }
    std::vector<Graph> out;
    out.reserve(seen.size());
    for (const auto& s : seen) out.push_back(parse_graph6(s));
    return out;
  }

  std::mutex mutex_;
  std::vector<std::vector<Graph>> connected_;
  std::vector<std::vector<Graph>> all_;
};

Census& census() {
  static Census c;
  return c;
}

// Connected d-regular graphs by backtracking: vertices are saturated in label
// order, each new neighbour is either an already introduced vertex or the
// next unused label, and one vertex's neighbours are added in increasing
// order. Isomorphic copies are merged by canonical form.
class RegularSearch {
 public:
  RegularSearch(int n, int d) : n_(n), d_(d), g_(n) {}

  std::set<std::string> run() {
    if (n_ == 0 || d_ >= n_ || (n_ * d_) % 2 != 0) return {};
    introduced_ = 1;
    saturate(0, -1);
    return found_;
  }

 private:
  void saturate(int v, int last) {
    if (v == n_) {
      found_.insert(emit_graph6(canonical_form(g_).graph));
      return;
    }
    if (g_.degree(v) == d_) {
      // Every vertex after v must already be reachable, otherwise the graph splits.
      if (introduced_ == v + 1 && v + 1 < n_) return;
      saturate(v + 1, -1);
      return;
    }
    const int top = std::min(introduced_, n_ - 1);
    for (int u = std::max(v + 1, last + 1); u <= top; ++u) {
      if (g_.degree(u) >= d_ || g_.has_edge(v, u)) continue;
      const bool fresh = u == introduced_;
      g_.connect(v, u);
      if (fresh) ++introduced_;
      saturate(v, u);
      if (fresh) --introduced_;
      g_.disconnect(v, u);
    }
  }

  int n_;
  int d_;
  Graph g_;
  int introduced_ = 0;
  std::set<std::string> found_;
};

std::vector<Graph> regular_graphs(int n, int d) {
  static std::mutex mutex;
  static std::map<std::pair<int, int>, std::vector<Graph>> memo;
  std::lock_guard lock(mutex);
  auto it = memo.find({n, d});
  if (it != memo.end()) return it->second;
  std::vector<Graph> out;
  for (const auto& s : RegularSearch(n, d).run()) out.push_back(parse_graph6(s));
  memo.emplace(std::make_pair(n, d), out);
  return out;
}

}  // namespace

std::vector<Graph> connected_graphs(int n) {
  if (n < 1) return {};
  if (n > 8) throw Error(ErrorCode::TooLarge, "the census generator stops at 8 vertices");
  return census().level(n, true);
}

std::vector<Graph> generate_nonisomorphic(int n, const GraphClassFilter& filter) {
  if (n < 1) throw Error(ErrorCode::TooSmall, "order must be positive");
  std::vector<Graph> pool;
  if (filter.regular_degree) {
    if (filter.connectivity == ConnectivityFilter::Any) {
      throw Error(ErrorCode::PreconditionViolated, "regular generation needs a connectivity filter");
    }
    if (n > 12) throw Error(ErrorCode::TooLarge, "regular generation stops at 12 vertices");
    pool = regular_graphs(n, *filter.regular_degree);
  } else {
    if (n > 8) throw Error(ErrorCode::TooLarge, "the census generator stops at 8 vertices");
    pool = census().level(n, filter.connectivity != ConnectivityFilter::Any);
  }
  std::vector<Graph> out;
  for (auto& g : pool) {
    if (filter.accepts(g)) out.push_back(std::move(g));
  }
  return out;
}

}  // namespace leafnet
