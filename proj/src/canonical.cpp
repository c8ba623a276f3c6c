#include <algorithm>
#include <numeric>

#include "leafnet/oracle.hpp"

namespace leafnet {

namespace {

using Colours = std::vector<int>;
using Code = std::vector<Mask>;

// Colour refinement: a vertex's new colour is its old colour together with
// how many neighbours it has in each colour class. New colours are numbered
// in the sorted order of those keys, so the result is labelling-invariant.
int refine(const Graph& g, Colours& colour) {
  const int n = g.order();
  int classes = 0;
  for (;;) {
    const int k = *std::max_element(colour.begin(), colour.end()) + 1;
    std::vector<std::vector<int>> key(n, std::vector<int>(k + 1, 0));
    for (int v = 0; v < n; ++v) {
      key[v][0] = colour[v];
      for (int w : bits_of(g.neighbours(v))) ++key[v][colour[w] + 1];
    }
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return key[a] < key[b]; });
    int next = 0;
    for (int i = 0; i < n; ++i) {
      if (i > 0 && key[order[i]] != key[order[i - 1]]) ++next;
      colour[order[i]] = next;
    }
    const int now = n == 0 ? 0 : next + 1;
    if (now == classes) return classes;
    classes = now;
  }
}

Code code_of(const Graph& g, const Colours& label) {
  const int n = g.order();
  Code rows(n, 0);
  for (int v = 0; v < n; ++v) {
    Mask row = 0;
    for (int w : bits_of(g.neighbours(v))) row |= bit(label[w]);
    rows[label[v]] = row;
  }
  return rows;
}

class CanonicalSearch {
 public:
  explicit CanonicalSearch(const Graph& g) : g_(g), orbit_(g.order()) {
    std::iota(orbit_.begin(), orbit_.end(), 0);
  }

  Colours run() {
    Colours colour(g_.order(), 0);
    explore(colour, 0);
    return best_label_;
  }

 private:
  int find(int x) {
    while (orbit_[x] != x) x = orbit_[x] = orbit_[orbit_[x]];
    return x;
  }

  void explore(Colours colour, int depth) {
    const int n = g_.order();
    if (refine(g_, colour) == n) {
      leaf(colour);
      return;
    }
    std::vector<int> counts(n, 0);
    for (int c : colour) ++counts[c];
    int target = 0;
    while (counts[target] == 1) ++target;
    for (int v = 0; v < n; ++v) {
      if (colour[v] != target) continue;
      // At the root, automorphisms found so far make some choices redundant.
      if (depth == 0 && explored_roots_.size() > 0) {
        const int r = find(v);
        if (std::any_of(explored_roots_.begin(), explored_roots_.end(), [&](int u) { return find(u) == r; })) {
          continue;
        }
      }
      Colours next(n);
      for (int u = 0; u < n; ++u) next[u] = 2 * colour[u] + (colour[u] == target && u != v ? 1 : 0);
      explore(std::move(next), depth + 1);
      if (depth == 0) explored_roots_.push_back(v);
    }
  }

  void leaf(const Colours& label) {
    Code code = code_of(g_, label);
    if (first_label_.empty()) {
      first_label_ = label;
      first_code_ = code;
    } else if (code == first_code_) {
      // label^-1 o first_label is an automorphism; merge its cycles.
      std::vector<int> inverse(label.size());
      for (std::size_t v = 0; v < label.size(); ++v) inverse[label[v]] = static_cast<int>(v);
      for (std::size_t v = 0; v < label.size(); ++v) {
        const int image = inverse[first_label_[v]];
        orbit_[find(static_cast<int>(v))] = find(image);
      }
    }
    if (best_label_.empty() || code > best_code_) {
      best_label_ = label;
      best_code_ = std::move(code);
    }
  }

  const Graph& g_;
  std::vector<int> orbit_;
  std::vector<int> explored_roots_;
  Colours first_label_;
  Code first_code_;
  Colours best_label_;
  Code best_code_;
};

Graph relabel(const Graph& g, const std::vector<int>& label) {
  Graph out(g.order());
  for (auto [u, v] : g.edges()) out.connect(label[u], label[v]);
  return out;
}

}  // namespace

Canonical canonical_form(const Graph& g) {
  if (g.order() == 0) return Canonical{g, {}};
  std::vector<int> label = CanonicalSearch(g).run();
  Graph canon = relabel(g, label);
  return Canonical{std::move(canon), std::move(label)};
}

Graph canonical_form_brute(const Graph& g) {
  const int n = g.order();
  if (n > 8) throw Error(ErrorCode::TooLarge, "permutation canonical form is limited to 8 vertices");
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  Code best;
  std::vector<int> best_perm = perm;
  do {
    Code code = code_of(g, perm);
    if (best.empty() || code > best) {
      best = std::move(code);
      best_perm = perm;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return relabel(g, best_perm);
}

}  // namespace leafnet
