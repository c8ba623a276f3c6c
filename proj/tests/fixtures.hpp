#pragma once

#include "leafnet/graph.hpp"

namespace fixtures {

using leafnet::Graph;

inline Graph complete(int n) {
  Graph g(n);
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) g.connect(u, v);
  }
  return g;
}

inline Graph cycle(int n) {
  Graph g(n);
  for (int i = 0; i < n; ++i) g.connect(i, (i + 1) % n);
  return g;
}

inline Graph path(int n) {
  Graph g(n);
  for (int i = 0; i + 1 < n; ++i) g.connect(i, i + 1);
  return g;
}

inline Graph star(int leaves) {
  Graph g(leaves + 1);
  for (int i = 1; i <= leaves; ++i) g.connect(0, i);
  return g;
}

inline Graph complete_bipartite(int a, int b) {
  Graph g(a + b);
  for (int u = 0; u < a; ++u) {
    for (int v = 0; v < b; ++v) g.connect(u, a + v);
  }
  return g;
}

// Outer 5-cycle 0..4, spokes i -> i+5, inner pentagram.
inline Graph petersen() {
  Graph g(10);
  for (int i = 0; i < 5; ++i) {
    g.connect(i, (i + 1) % 5);
    g.connect(i, i + 5);
    g.connect(5 + i, 5 + (i + 2) % 5);
  }
  return g;
}

}  // namespace fixtures
