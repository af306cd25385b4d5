#pragma once

#include <compare>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "chordkit/vertex_set.hpp"

namespace chordkit {

/// An unordered vertex pair, always stored with u < v.
struct Edge {
  int u = 0;
  int v = 0;

  constexpr auto operator<=>(const Edge&) const = default;
};

/// Builds the canonical (min, max) form of a pair. Does not validate.
constexpr Edge make_edge(int a, int b) { return a < b ? Edge{a, b} : Edge{b, a}; }

/// Sorted, duplicate-free list of canonical edges.
using EdgeSet = std::vector<Edge>;

/// Sorts and deduplicates in place.
void normalize(EdgeSet& edges);

/// Simple undirected graph over the vertex ids {0, ..., order()-1}.
///
/// Not every id needs to be present: eliminating or removing a vertex keeps
/// the ids of the survivors, so orderings computed on the original graph stay
/// aligned with every intermediate graph. Values are never mutated after
/// construction; operations return new graphs.
class Graph {
 public:
  Graph() = default;

  /// n isolated vertices 0..n-1.
  explicit Graph(int n);

  /// Size of the id space (present or not).
  int order() const { return static_cast<int>(adj_.size()); }
  VertexSet vertices() const { return present_; }
  int vertex_count() const { return present_.size(); }
  int edge_count() const;
  bool empty() const { return present_.empty(); }

  bool has_vertex(int v) const { return v >= 0 && v < order() && present_.contains(v); }
  VertexSet neighbors(int v) const { return adj_[v]; }
  int degree(int v) const { return adj_[v].size(); }
  bool adjacent(int u, int v) const { return adj_[u].contains(v); }

  /// Union of the neighbourhoods of `s`, minus `s` itself.
  VertexSet neighbors(VertexSet s) const;

  bool is_clique(VertexSet s) const;
  /// Number of edges with both endpoints in `s`.
  int edges_within(VertexSet s) const;
  bool is_complete() const { return is_clique(present_); }
  bool is_connected() const;

  EdgeSet edges() const;

  /// g ⊕ F. Every edge must join two present, distinct vertices.
  Graph with_edges(const EdgeSet& extra) const;
  /// g - S; ids are kept.
  Graph without(VertexSet s) const;
  /// g[S]; ids are kept.
  Graph induced(VertexSet s) const { return without(present_ - s); }

  /// Same graph with ids compacted to 0..k-1 in ascending order of the old
  /// ids. `old_ids[i]` is the original id of new vertex i.
  Graph compacted(std::vector<int>* old_ids = nullptr) const;

  bool operator==(const Graph&) const = default;

 private:
  friend Graph build_graph(int n, const std::vector<std::pair<int, int>>& edges);

  void link(int u, int v);

  VertexSet present_;
  std::vector<VertexSet> adj_;
};

/// Validating constructor. Duplicate and reversed pairs are merged.
/// Throws InvalidInput on self-loops, out-of-range endpoints, or n outside
/// [0, VertexSet::kCapacity].
Graph build_graph(int n, const std::vector<std::pair<int, int>>& edges);
Graph build_graph(int n, const EdgeSet& edges);

/// fill(X): the non-adjacent pairs inside X, in canonical order.
EdgeSet fill_edges(const Graph& g, VertexSet x);

/// Result of eliminating a single vertex.
struct Elimination {
  Graph graph;   ///< (g ⊕ fill(N(v))) - v
  EdgeSet fill;  ///< fill_g(N(v))
};

/// Completes N(v) and removes v. Throws InvalidInput if v is not present.
Elimination eliminate(const Graph& g, int v);

/// Order-free elimination of a whole set: the result lives on V∖S and joins
/// u, w when they were adjacent or some u-w path has all its internal vertices
/// in S. Equals sequential elimination of S in any order.
Graph eliminate_set(const Graph& g, VertexSet s);

/// Some w ∈ x with x∖{w} a clique, preferring the smallest id; nullopt if x
/// is not an almost clique. A clique yields its smallest member.
std::optional<int> almost_clique_apex(const Graph& g, VertexSet x);

/// Connected components of g[s] (s defaults to all vertices), ordered by
/// smallest member.
std::vector<VertexSet> components(const Graph& g, VertexSet s);
std::vector<VertexSet> components(const Graph& g);

/// Component of g[s ∪ {v}] containing v.
VertexSet component_of(const Graph& g, VertexSet s, int v);

std::string to_string(const Edge& e);
std::string to_string(const EdgeSet& edges);
std::string to_string(VertexSet s);

}  // namespace chordkit
