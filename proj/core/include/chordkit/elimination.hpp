#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "chordkit/graph.hpp"

namespace chordkit {

/// A permutation of a graph's vertices; step i (0-based) eliminates at(i).
class EliminationOrdering {
 public:
  EliminationOrdering() = default;

  /// Throws InvalidInput unless `order` lists every vertex of g exactly once.
  EliminationOrdering(const Graph& g, std::vector<int> order);

  /// Parses whitespace-separated ids. Throws ParseError on non-integers and
  /// InvalidInput on a non-permutation.
  static EliminationOrdering parse(const Graph& g, std::string_view text);

  const std::vector<int>& order() const { return order_; }
  int size() const { return static_cast<int>(order_.size()); }
  int at(int step) const { return order_[static_cast<std::size_t>(step)]; }

  /// One line, ids separated by single spaces.
  std::string to_string() const;

  bool operator==(const EliminationOrdering&) const = default;

 private:
  std::vector<int> order_;
};

struct TriangulationReport {
  std::vector<int> order;
  EdgeSet fill;                    ///< F, canonical order
  std::vector<VertexSet> madj;     ///< madj⁺ of the vertex eliminated at each step
  std::vector<int> madj_sizes;     ///< |madj[i]|
  int width = 0;                   ///< max madj size (0 on the empty graph)
  int total_fill = 0;              ///< |F|
  Graph supergraph;                ///< G⁺_α = G ⊕ F
  int sum_madj() const;
};

TriangulationReport apply_ordering(const Graph& g, const EliminationOrdering& alpha);

/// madj⁺ of v once `eliminated` is gone: N(R)∖R where R is the component of
/// v in g[eliminated ∪ {v}]. Throws InvalidInput if v is in `eliminated`.
VertexSet madj_of(const Graph& g, VertexSet eliminated, int v);

struct LowDegreeRecord {
  int threshold = 0;
  std::vector<int> vertices;  ///< in elimination order
  std::vector<int> steps;     ///< 0-based step of each member
};

/// Vertices eliminated at steps 1..|V|-(c+1) (1-based) with madj size exactly c.
LowDegreeRecord low_degree_prefix(const TriangulationReport& report, int c);

/// True iff every step whose vertex has no earlier-eliminated g-neighbour sees
/// madj equal to its g-neighbourhood.
bool stability_check(const Graph& g, const EliminationOrdering& alpha);

}  // namespace chordkit
