#include "chordkit/graph.hpp"

#include <algorithm>
#include <sstream>

#include "chordkit/errors.hpp"

namespace chordkit {

void normalize(EdgeSet& edges) {
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
}

Graph::Graph(int n) {
  if (n < 0 || n > VertexSet::kCapacity) {
    throw InvalidInput("vertex count " + std::to_string(n) + " outside [0, " +
                       std::to_string(VertexSet::kCapacity) + "]");
  }
  present_ = VertexSet::range(n);
  adj_.assign(static_cast<std::size_t>(n), VertexSet{});
}

int Graph::edge_count() const {
  int twice = 0;
  for (int v : present_) twice += adj_[v].size();
  return twice / 2;
}

VertexSet Graph::neighbors(VertexSet s) const {
  VertexSet out;
  for (int v : s) out |= adj_[v];
  return out - s;
}

bool Graph::is_clique(VertexSet s) const {
  for (int v : s) {
    if (!(s.without(v)).is_subset_of(adj_[v])) return false;
  }
  return true;
}

int Graph::edges_within(VertexSet s) const {
  int twice = 0;
  for (int v : s) twice += (adj_[v] & s).size();
  return twice / 2;
}

bool Graph::is_connected() const {
  if (present_.empty()) return true;
  return component_of(*this, present_, present_.front()) == present_;
}

EdgeSet Graph::edges() const {
  EdgeSet out;
  for (int u : present_) {
    for (int v : adj_[u]) {
      if (u < v) out.push_back({u, v});
    }
  }
  return out;
}

void Graph::link(int u, int v) {
  adj_[u].insert(v);
  adj_[v].insert(u);
}

Graph Graph::with_edges(const EdgeSet& extra) const {
  Graph g = *this;
  for (const Edge& e : extra) {
    if (e.u == e.v || !has_vertex(e.u) || !has_vertex(e.v)) {
      throw InvalidInput("cannot add edge " + to_string(e));
    }
    g.link(e.u, e.v);
  }
  return g;
}

Graph Graph::without(VertexSet s) const {
  Graph g = *this;
  g.present_ -= s;
  for (int v = 0; v < order(); ++v) {
    if (g.present_.contains(v)) {
      g.adj_[v] -= s;
    } else {
      g.adj_[v] = VertexSet{};
    }
  }
  return g;
}

Graph Graph::compacted(std::vector<int>* old_ids) const {
  std::vector<int> ids = present_.to_vector();
  std::vector<int> new_id(adj_.size(), -1);
  for (std::size_t i = 0; i < ids.size(); ++i) new_id[ids[i]] = static_cast<int>(i);
  Graph g(static_cast<int>(ids.size()));
  for (int u : present_) {
    for (int v : adj_[u]) {
      if (u < v) g.link(new_id[u], new_id[v]);
    }
  }
  if (old_ids) *old_ids = std::move(ids);
  return g;
}

Graph build_graph(int n, const std::vector<std::pair<int, int>>& edges) {
  Graph g(n);
  for (auto [a, b] : edges) {
    if (a < 0 || b < 0 || a >= n || b >= n) {
      throw InvalidInput("edge (" + std::to_string(a) + "," + std::to_string(b) +
                         ") has an endpoint outside 0.." + std::to_string(n - 1));
    }
    if (a == b) throw InvalidInput("self-loop at vertex " + std::to_string(a));
    g.link(a, b);
  }
  return g;
}

Graph build_graph(int n, const EdgeSet& edges) {
  std::vector<std::pair<int, int>> pairs;
  pairs.reserve(edges.size());
  for (const Edge& e : edges) pairs.emplace_back(e.u, e.v);
  return build_graph(n, pairs);
}

EdgeSet fill_edges(const Graph& g, VertexSet x) {
  EdgeSet out;
  for (int u : x) {
    VertexSet missing = x - g.neighbors(u);
    for (int v : missing) {
      if (u < v) out.push_back({u, v});
    }
  }
  return out;
}

Elimination eliminate(const Graph& g, int v) {
  if (!g.has_vertex(v)) {
    throw InvalidInput("vertex " + std::to_string(v) + " is not in the graph");
  }
  EdgeSet fill = fill_edges(g, g.neighbors(v));
  Graph next = g.with_edges(fill).without(VertexSet::single(v));
  return {std::move(next), std::move(fill)};
}

VertexSet component_of(const Graph& g, VertexSet s, int v) {
  VertexSet region = VertexSet::single(v);
  VertexSet allowed = (s & g.vertices()).with(v);
  VertexSet frontier = region;
  while (!frontier.empty()) {
    VertexSet next = g.neighbors(frontier) & allowed;
    next -= region;
    region |= next;
    frontier = next;
  }
  return region;
}

std::vector<VertexSet> components(const Graph& g, VertexSet s) {
  std::vector<VertexSet> out;
  VertexSet rest = s & g.vertices();
  while (!rest.empty()) {
    VertexSet c = component_of(g, rest, rest.front());
    out.push_back(c);
    rest -= c;
  }
  return out;
}

std::vector<VertexSet> components(const Graph& g) { return components(g, g.vertices()); }

Graph eliminate_set(const Graph& g, VertexSet s) {
  s &= g.vertices();
  EdgeSet extra;
  // Every component C of g[S] turns N(C) into a clique once S is gone.
  for (VertexSet c : components(g, s)) {
    EdgeSet f = fill_edges(g, g.neighbors(c));
    extra.insert(extra.end(), f.begin(), f.end());
  }
  normalize(extra);
  return g.with_edges(extra).without(s);
}

std::optional<int> almost_clique_apex(const Graph& g, VertexSet x) {
  if (x.empty()) return std::nullopt;
  if (g.is_clique(x)) return x.front();
  for (int w : x) {
    if (g.is_clique(x.without(w))) return w;
  }
  return std::nullopt;
}

std::string to_string(const Edge& e) { return std::to_string(e.u) + "-" + std::to_string(e.v); }

std::string to_string(const EdgeSet& edges) {
  std::ostringstream os;
  for (std::size_t i = 0; i < edges.size(); ++i) {
    if (i) os << ',';
    os << to_string(edges[i]);
  }
  return os.str();
}

std::string to_string(VertexSet s) {
  std::ostringstream os;
  bool first = true;
  for (int v : s) {
    if (!first) os << ' ';
    os << v;
    first = false;
  }
  return os.str();
}

}  // namespace chordkit
