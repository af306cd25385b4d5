#include "chordkit/separators.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <optional>

#include "chordkit/chordality.hpp"

namespace chordkit {

int local_vertex_connectivity(const Graph& g, int s, int t, int cap) {
  // Vertex split: x_in = 2x, x_out = 2x+1, unit capacity inside each vertex
  // other than s and t, unbounded along edges.
  const int n = g.order();
  const int nodes = 2 * n;
  constexpr int kInf = 1 << 20;
  std::vector<int> capacity(static_cast<std::size_t>(nodes * nodes), 0);
  auto at = [&](int a, int b) -> int& { return capacity[static_cast<std::size_t>(a * nodes + b)]; };
  for (int x : g.vertices()) {
    at(2 * x, 2 * x + 1) = (x == s || x == t) ? kInf : 1;
    for (int y : g.neighbors(x)) at(2 * x + 1, 2 * y) = kInf;
  }
  const int source = 2 * s + 1;
  const int sink = 2 * t;
  int flow = 0;
  std::vector<int> parent(static_cast<std::size_t>(nodes));
  while (flow < cap) {
    std::fill(parent.begin(), parent.end(), -1);
    parent[source] = source;
    std::deque<int> queue{source};
    while (!queue.empty() && parent[sink] < 0) {
      int a = queue.front();
      queue.pop_front();
      for (int b = 0; b < nodes; ++b) {
        if (parent[b] < 0 && at(a, b) > 0) {
          parent[b] = a;
          queue.push_back(b);
        }
      }
    }
    if (parent[sink] < 0) break;
    for (int b = sink; b != source; b = parent[b]) {
      --at(parent[b], b);
      ++at(b, parent[b]);
    }
    ++flow;
  }
  return flow;
}

int vertex_connectivity(const Graph& g) {
  const int n = g.vertex_count();
  if (n <= 1) return 0;
  if (!g.is_connected()) return 0;
  if (g.is_complete()) return n - 1;
  int best = n - 1;
  for (int s : g.vertices()) {
    for (int t : g.vertices() - g.neighbors(s)) {
      if (t <= s) continue;
      best = std::min(best, local_vertex_connectivity(g, s, t, best));
    }
  }
  return best;
}

std::vector<VertexSet> components_after(const Graph& g, VertexSet s) {
  return components(g, g.vertices() - s);
}

std::vector<VertexSet> full_components(const Graph& g, VertexSet s) {
  std::vector<VertexSet> out;
  for (VertexSet c : components_after(g, s)) {
    if (g.neighbors(c) == s) out.push_back(c);
  }
  return out;
}

bool is_minimal_separator(const Graph& g, VertexSet s) {
  return full_components(g, s).size() >= 2;
}

std::vector<Separator> minimal_separators_in_neighborhood(const Graph& g, int v) {
  // A minimal separator S ⊆ N(v) has a full component C avoiding N[v]; then
  // S = N(C). Conversely N(C) always has C and the component of v as full
  // components.
  VertexSet closed = g.neighbors(v).with(v);
  std::vector<VertexSet> found;
  for (VertexSet c : components_after(g, closed)) found.push_back(g.neighbors(c));
  std::sort(found.begin(), found.end());
  found.erase(std::unique(found.begin(), found.end()), found.end());
  std::vector<Separator> out;
  for (VertexSet s : found) out.push_back({s, components_after(g, s)});
  return out;
}

std::vector<VertexSet> biconnected_components(const Graph& g) {
  const int n = g.order();
  std::vector<int> disc(static_cast<std::size_t>(n), -1);
  std::vector<int> low(static_cast<std::size_t>(n), 0);
  std::vector<Edge> stack;
  std::vector<VertexSet> blocks;
  int timer = 0;

  std::function<void(int, int)> dfs = [&](int u, int parent) {
    disc[u] = low[u] = timer++;
    for (int w : g.neighbors(u)) {
      if (disc[w] < 0) {
        stack.push_back({u, w});
        dfs(w, u);
        low[u] = std::min(low[u], low[w]);
        if (low[w] >= disc[u]) {
          VertexSet block;
          Edge e;
          do {
            e = stack.back();
            stack.pop_back();
            block.insert(e.u);
            block.insert(e.v);
          } while (!(e.u == u && e.v == w));
          blocks.push_back(block);
        }
      } else if (w != parent && disc[w] < disc[u]) {
        stack.push_back({u, w});
        low[u] = std::min(low[u], disc[w]);
      }
    }
  };

  for (int v : g.vertices()) {
    if (disc[v] >= 0) continue;
    if (g.degree(v) == 0) {
      disc[v] = timer++;
      blocks.push_back(VertexSet::single(v));
      continue;
    }
    dfs(v, -1);
  }
  std::sort(blocks.begin(), blocks.end(), [](VertexSet a, VertexSet b) {
    return a.front() != b.front() ? a.front() < b.front() : a < b;
  });
  return blocks;
}

namespace {

// A clique minimal separator of g, if one exists. Every clique minimal
// separator of g is a minimal separator of any minimal triangulation, and
// those all appear among the madj sets of its perfect elimination ordering.
std::optional<VertexSet> find_clique_minimal_separator(const Graph& g) {
  Graph h = g;
  for (int x : mcs_m_order(g)) {
    VertexSet s = h.neighbors(x);
    if (g.is_clique(s) && is_minimal_separator(g, s)) return s;
    h = eliminate(h, x).graph;
  }
  return std::nullopt;
}

void decompose(const Graph& g, VertexSet piece, AtomDecomposition& out) {
  Graph sub = g.induced(piece);
  std::optional<VertexSet> s = find_clique_minimal_separator(sub);
  if (!s) {
    out.atoms.push_back(piece);
    return;
  }
  out.separators_used.push_back(*s);
  for (VertexSet c : components_after(sub, *s)) decompose(g, c | *s, out);
}

}  // namespace

AtomDecomposition atoms(const Graph& g) {
  AtomDecomposition raw;
  if (!g.empty()) decompose(g, g.vertices(), raw);
  AtomDecomposition out;
  out.separators_used = std::move(raw.separators_used);
  std::sort(raw.atoms.begin(), raw.atoms.end());
  raw.atoms.erase(std::unique(raw.atoms.begin(), raw.atoms.end()), raw.atoms.end());
  for (VertexSet a : raw.atoms) {
    bool contained = std::any_of(raw.atoms.begin(), raw.atoms.end(),
                                 [&](VertexSet b) { return b != a && a.is_subset_of(b); });
    if (!contained) out.atoms.push_back(a);
  }
  return out;
}

}  // namespace chordkit
