#include "oracles.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <limits>

namespace oracle {

BruteForce min_fill_and_width(const Graph& g) {
  BruteForce best{std::numeric_limits<int>::max(), std::numeric_limits<int>::max()};
  std::function<void(const Graph&, int, int)> walk = [&](const Graph& h, int fill, int width) {
    if (h.empty()) {
      best.mfi = std::min(best.mfi, fill);
      best.tw = std::min(best.tw, width);
      return;
    }
    for (int v : h.vertices()) {
      auto step = chordkit::eliminate(h, v);
      walk(step.graph, fill + static_cast<int>(step.fill.size()), std::max(width, h.degree(v)));
    }
  };
  walk(g, 0, 0);
  return best;
}

int clique_number(const Graph& g) {
  std::vector<int> vs = g.vertices().to_vector();
  const int n = static_cast<int>(vs.size());
  int best = 0;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    std::vector<int> members;
    for (int i = 0; i < n; ++i)
      if ((mask >> i) & 1) members.push_back(vs[i]);
    bool clique = true;
    for (std::size_t i = 0; i < members.size() && clique; ++i)
      for (std::size_t j = i + 1; j < members.size() && clique; ++j) clique = g.adjacent(members[i], members[j]);
    if (clique) best = std::max(best, static_cast<int>(members.size()));
  }
  return best;
}

namespace {

void dfs(const Graph& g, VertexSet blocked, int v, std::vector<int>& label, int id) {
  label[v] = id;
  for (int u = 0; u < g.order(); ++u) {
    if (g.has_vertex(u) && !blocked.contains(u) && label[u] < 0 && g.adjacent(v, u)) dfs(g, blocked, u, label, id);
  }
}

std::vector<int> labels(const Graph& g, VertexSet s, int* count) {
  std::vector<int> label(static_cast<std::size_t>(g.order()), -1);
  int id = 0;
  for (int v = 0; v < g.order(); ++v) {
    if (g.has_vertex(v) && !s.contains(v) && label[v] < 0) dfs(g, s, v, label, id++);
  }
  if (count) *count = id;
  return label;
}

}  // namespace

int count_components(const Graph& g, VertexSet s) {
  int c = 0;
  labels(g, s, &c);
  return c;
}

bool separates(const Graph& g, VertexSet s, int a, int b) {
  std::vector<int> l = labels(g, s, nullptr);
  return l[a] != l[b];
}

bool is_minimal_separator(const Graph& g, VertexSet s) {
  for (int a : g.vertices() - s) {
    for (int b : g.vertices() - s) {
      if (b <= a || g.adjacent(a, b) || !separates(g, s, a, b)) continue;
      bool minimal = true;
      for (int x : s) minimal = minimal && !separates(g, s.without(x), a, b);
      if (minimal) return true;
    }
  }
  return false;
}

std::vector<VertexSet> all_minimal_separators(const Graph& g) {
  std::vector<VertexSet> out;
  const std::uint64_t all = g.vertices().bits();
  for (std::uint64_t m = all;; m = (m - 1) & all) {
    VertexSet s(m);
    if (is_minimal_separator(g, s)) out.push_back(s);
    if (m == 0) break;
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool is_chordless_cycle(const Graph& g, const std::vector<int>& cycle) {
  const std::size_t k = cycle.size();
  if (k < 4) return false;
  if (VertexSet::of(cycle).size() != static_cast<int>(k)) return false;
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = i + 1; j < k; ++j) {
      const bool consecutive = j == i + 1 || (i == 0 && j == k - 1);
      if (g.adjacent(cycle[i], cycle[j]) != consecutive) return false;
    }
  }
  return true;
}

bool is_chordal(const Graph& g) {
  std::vector<int> vs = g.vertices().to_vector();
  const int n = static_cast<int>(vs.size());
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    if (std::popcount(mask) < 4) continue;
    VertexSet s;
    for (int i = 0; i < n; ++i)
      if ((mask >> i) & 1) s.insert(vs[i]);
    bool all_two = true;
    for (int v : s) all_two = all_two && (g.neighbors(v) & s).size() == 2;
    if (all_two && count_components(g, g.vertices() - s) == 1) return false;
  }
  return true;
}

int vertex_connectivity(const Graph& g) {
  const int n = g.vertex_count();
  if (n <= 1) return 0;
  if (g.is_complete()) return n - 1;
  const std::uint64_t all = g.vertices().bits();
  int best = n - 1;
  for (std::uint64_t m = all;; m = (m - 1) & all) {
    VertexSet s(m);
    if (s.size() < best && s.size() <= n - 2 && count_components(g, s) >= 2) best = s.size();
    if (m == 0) break;
  }
  return best;
}

Graph random_connected(Rng& rng, int n, double p) {
  std::vector<std::pair<int, int>> edges;
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  for (int v = 1; v < n; ++v) {
    std::uniform_int_distribution<int> parent(0, v - 1);
    edges.emplace_back(parent(rng), v);
  }
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (coin(rng) < p) edges.emplace_back(u, v);
  return chordkit::build_graph(n, edges);
}

Graph random_graph(Rng& rng, int n, double p) {
  std::vector<std::pair<int, int>> edges;
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (coin(rng) < p) edges.emplace_back(u, v);
  return chordkit::build_graph(n, edges);
}

Graph random_partial_2tree(Rng& rng, int n, double keep) {
  std::vector<std::pair<int, int>> edges;
  if (n >= 2) edges.emplace_back(0, 1);
  for (int v = 2; v < n; ++v) {
    std::uniform_int_distribution<std::size_t> pick(0, edges.size() - 1);
    auto [a, b] = edges[pick(rng)];
    edges.emplace_back(a, v);
    edges.emplace_back(b, v);
  }
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  std::vector<std::pair<int, int>> kept;
  for (auto e : edges)
    if (coin(rng) < keep) kept.push_back(e);
  return chordkit::build_graph(n, kept);
}

Graph random_with_clique_separator(Rng& rng, int n1, int n2, int s, double p) {
  // Vertices 0..s-1 form the clique; the two sides follow.
  const int n = s + n1 + n2;
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < s; ++u)
    for (int v = u + 1; v < s; ++v) edges.emplace_back(u, v);
  auto side = [&](int first, int count) {
    Graph h = random_connected(rng, count + s, p);
    for (const auto& e : h.edges()) {
      auto map = [&](int x) { return x < s ? x : first + (x - s); };
      if (e.u < s && e.v < s) continue;
      edges.emplace_back(map(e.u), map(e.v));
    }
  };
  side(s, n1);
  side(s + n1, n2);
  std::vector<int> ids(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) ids[i] = i;
  std::vector<int> perm = random_permutation(rng, ids);
  std::vector<std::pair<int, int>> relabelled;
  for (auto [a, b] : edges) relabelled.emplace_back(perm[a], perm[b]);
  return chordkit::build_graph(n, relabelled);
}

std::vector<int> random_permutation(Rng& rng, const std::vector<int>& items) {
  std::vector<int> out = items;
  std::shuffle(out.begin(), out.end(), rng);
  return out;
}

}  // namespace oracle
