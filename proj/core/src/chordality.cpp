#include "chordkit/chordality.hpp"

#include <algorithm>
#include <deque>

namespace chordkit {

std::vector<int> mcs_order(const Graph& g) {
  std::vector<int> weight(static_cast<std::size_t>(g.order()), 0);
  std::vector<int> visit;
  VertexSet open = g.vertices();
  while (!open.empty()) {
    int best = -1;
    for (int v : open) {
      if (best < 0 || weight[v] > weight[best]) best = v;
    }
    visit.push_back(best);
    open.erase(best);
    for (int u : g.neighbors(best) & open) ++weight[u];
  }
  return visit;
}

bool is_perfect_elimination_ordering(const Graph& g, const std::vector<int>& order) {
  VertexSet later = g.vertices();
  for (int v : order) {
    later.erase(v);
    if (!g.is_clique(g.neighbors(v) & later)) return false;
  }
  return true;
}

namespace {

// Shortest u-w path whose internal vertices avoid `blocked`; empty if none.
std::vector<int> shortest_path(const Graph& g, int u, int w, VertexSet blocked) {
  std::vector<int> parent(static_cast<std::size_t>(g.order()), -1);
  VertexSet seen = VertexSet::single(u);
  std::deque<int> queue{u};
  while (!queue.empty()) {
    int x = queue.front();
    queue.pop_front();
    for (int y : g.neighbors(x) - seen) {
      if (y != w && blocked.contains(y)) continue;
      seen.insert(y);
      parent[y] = x;
      if (y == w) {
        std::vector<int> path{w};
        while (path.back() != u) path.push_back(parent[path.back()]);
        std::reverse(path.begin(), path.end());
        return path;
      }
      queue.push_back(y);
    }
  }
  return {};
}

// Cycle v, u, ..., w closing back at v; internal path vertices avoid N[v].
std::vector<int> cycle_through(const Graph& g, int v, int u, int w) {
  VertexSet blocked = g.neighbors(v).with(v).without(u).without(w);
  std::vector<int> path = shortest_path(g, u, w, blocked);
  if (path.empty()) return {};
  path.insert(path.begin(), v);
  return path;
}

std::vector<int> normalize_cycle(std::vector<int> cycle) {
  auto lowest = std::min_element(cycle.begin(), cycle.end());
  std::rotate(cycle.begin(), lowest, cycle.end());
  if (cycle.size() > 2 && cycle.back() < cycle[1]) std::reverse(cycle.begin() + 1, cycle.end());
  return cycle;
}

}  // namespace

std::optional<std::vector<int>> find_chordless_cycle(const Graph& g) {
  std::vector<int> order = mcs_order(g);
  std::reverse(order.begin(), order.end());
  // The first peo violation usually yields a cycle directly.
  VertexSet later = g.vertices();
  for (int v : order) {
    later.erase(v);
    VertexSet up = g.neighbors(v) & later;
    for (int u : up) {
      for (int w : up - g.neighbors(u)) {
        if (w <= u) continue;
        std::vector<int> c = cycle_through(g, v, u, w);
        if (!c.empty()) return normalize_cycle(std::move(c));
      }
    }
    if (!g.is_clique(up)) break;
  }
  std::optional<std::vector<int>> best;
  for (int v : g.vertices()) {
    VertexSet nv = g.neighbors(v);
    for (int u : nv) {
      for (int w : nv - g.neighbors(u)) {
        if (w <= u) continue;
        std::vector<int> c = cycle_through(g, v, u, w);
        if (!c.empty() && (!best || c.size() < best->size())) best = normalize_cycle(std::move(c));
      }
    }
  }
  return best;
}

ChordalityVerdict check_chordal(const Graph& g) {
  std::vector<int> order = mcs_order(g);
  std::reverse(order.begin(), order.end());
  ChordalityVerdict verdict;
  if (is_perfect_elimination_ordering(g, order)) {
    verdict.chordal = true;
    verdict.peo = std::move(order);
  } else {
    verdict.witness = find_chordless_cycle(g);
  }
  return verdict;
}

bool is_simplicial(const Graph& g, int v) { return g.is_clique(g.neighbors(v)); }

std::optional<int> is_almost_simplicial(const Graph& g, int v) {
  return almost_clique_apex(g, g.neighbors(v));
}

std::vector<int> mcs_m_order(const Graph& g) {
  const int n = g.order();
  std::vector<int> weight(static_cast<std::size_t>(n), 0);
  std::vector<int> visit;
  VertexSet open = g.vertices();
  while (!open.empty()) {
    int v = -1;
    for (int x : open) {
      if (v < 0 || weight[x] > weight[v]) v = x;
    }
    visit.push_back(v);
    open.erase(v);
    // u is raised when some v-u path has all internal weights below weight[u];
    // best[x] is the least possible maximum internal weight on a path to x.
    VertexSet raise = g.neighbors(v) & open;
    std::vector<int> best(static_cast<std::size_t>(n), 1 << 30);
    std::deque<int> pending;
    for (int u : g.neighbors(v) & open) {
      best[u] = -1;
      pending.push_back(u);
    }
    while (!pending.empty()) {
      auto it = std::min_element(pending.begin(), pending.end(),
                                 [&](int a, int b) { return best[a] < best[b]; });
      int x = *it;
      pending.erase(it);
      int through = std::max(best[x], weight[x]);
      for (int y : g.neighbors(x) & open) {
        if (through < best[y]) {
          if (best[y] == (1 << 30)) pending.push_back(y);
          best[y] = through;
        }
      }
    }
    for (int u : open) {
      if (best[u] < weight[u]) raise.insert(u);
    }
    for (int u : raise) ++weight[u];
  }
  std::reverse(visit.begin(), visit.end());
  return visit;
}

}  // namespace chordkit
