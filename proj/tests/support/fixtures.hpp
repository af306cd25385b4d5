#pragma once

#include <utility>
#include <vector>

#include "chordkit/graph.hpp"

namespace fixture {

using chordkit::Graph;

inline Graph make(int n, std::vector<std::pair<int, int>> edges) { return chordkit::build_graph(n, edges); }

inline Graph path(int n) {
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  return make(n, e);
}

inline Graph cycle(int n) {
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
  return make(n, e);
}

inline Graph complete(int n) {
  std::vector<std::pair<int, int>> e;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) e.emplace_back(u, v);
  return make(n, e);
}

inline Graph star(int leaves) {
  std::vector<std::pair<int, int>> e;
  for (int i = 1; i <= leaves; ++i) e.emplace_back(0, i);
  return make(leaves + 1, e);
}

/// v = 0 adjacent to u1..u3 = 1..3 (pairwise non-adjacent); pendant
/// witnesses c1 = 4 ~ {u1,u2}, c2 = 5 ~ {u2,u3}, c3 = 6 ~ {u1,u2,u3}.
inline Graph three_separators() {
  return make(7, {{0, 1}, {0, 2}, {0, 3}, {4, 1}, {4, 2}, {5, 2}, {5, 3}, {6, 1}, {6, 2}, {6, 3}});
}

}  // namespace fixture
