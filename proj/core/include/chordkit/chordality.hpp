#pragma once

#include <optional>
#include <vector>

#include "chordkit/graph.hpp"

namespace chordkit {

struct ChordalityVerdict {
  bool chordal = false;
  /// Chordless cycle of length >= 4, present iff not chordal. Starts at its
  /// smallest vertex and continues toward the smaller of its two neighbours.
  std::optional<std::vector<int>> witness;
  /// Perfect elimination ordering, present iff chordal.
  std::optional<std::vector<int>> peo;
};

/// Maximum cardinality search visit order (ties to the smallest id). Its
/// reverse is a perfect elimination ordering iff g is chordal.
std::vector<int> mcs_order(const Graph& g);

/// True iff eliminating `order` front to back never adds fill.
bool is_perfect_elimination_ordering(const Graph& g, const std::vector<int>& order);

ChordalityVerdict check_chordal(const Graph& g);

/// A chordless cycle of length >= 4, normalized as in ChordalityVerdict;
/// nullopt if g is chordal.
std::optional<std::vector<int>> find_chordless_cycle(const Graph& g);

bool is_simplicial(const Graph& g, int v);

/// Apex w ∈ N(v) with N(v)∖{w} a clique (smallest such id; a simplicial vertex
/// with nonempty neighbourhood yields its smallest neighbour).
std::optional<int> is_almost_simplicial(const Graph& g, int v);

/// MCS-M: an elimination ordering whose supergraph is a minimal
/// triangulation of g.
std::vector<int> mcs_m_order(const Graph& g);

}  // namespace chordkit
