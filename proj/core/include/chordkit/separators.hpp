#pragma once

#include <vector>

#include "chordkit/graph.hpp"

namespace chordkit {

struct Separator {
  VertexSet vertices;
  /// Components of G - vertices, ordered by smallest member.
  std::vector<VertexSet> components;

  bool operator==(const Separator&) const = default;
};

struct AtomDecomposition {
  std::vector<VertexSet> atoms;
  std::vector<VertexSet> separators_used;
};

/// κ(g): 0 when g is disconnected or has at most one vertex, k-1 for K_k,
/// otherwise the minimum vertex cut over non-adjacent pairs.
int vertex_connectivity(const Graph& g);

/// Size of a minimum s-t vertex cut (s, t distinct and non-adjacent), or
/// `cap` if it is at least `cap`.
int local_vertex_connectivity(const Graph& g, int s, int t, int cap);

/// Connected components of g - s.
std::vector<VertexSet> components_after(const Graph& g, VertexSet s);

/// Components C of g - s with N(C) = s.
std::vector<VertexSet> full_components(const Graph& g, VertexSet s);

/// s is a minimal separator iff g - s has at least two full components.
bool is_minimal_separator(const Graph& g, VertexSet s);

/// Every minimal separator contained in N(v): the sets N(C) for the
/// components C of g - N[v], deduplicated, ordered by mask value.
std::vector<Separator> minimal_separators_in_neighborhood(const Graph& g, int v);

/// Blocks (maximal 2-connected subgraphs or bridges); isolated vertices form
/// singleton blocks.
std::vector<VertexSet> biconnected_components(const Graph& g);

/// Decomposition by clique minimal separators. Atoms are sorted by mask.
AtomDecomposition atoms(const Graph& g);

}  // namespace chordkit
