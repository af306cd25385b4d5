#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "chordkit/elimination.hpp"
#include "chordkit/graph.hpp"

namespace chordkit {

enum class FamilyKind { Path, Cycle, Complete, Grid, Rook, Cocktail, Halin, Tau };

/// Parameterized graph family. Canonical string forms:
///   path:N  cycle:N  complete:N  grid:MxN  rook:MxN  cocktail:R  tau:A,B,C
///   halin:U-V,U-V,...[;L1,L2,...]   (tree edges, then the leaf cycle order;
///                                    leaves default to ascending order)
///
/// Labels: grid/rook v_{r,c} is (r-1)*N + (c-1); cocktail pair i (0-based) is
/// (2i, 2i+1); tau lays out cliques A, B1, B2, C contiguously.
struct FamilySpec {
  FamilyKind kind = FamilyKind::Path;
  std::vector<int> params;
  std::vector<Edge> tree;      ///< halin only
  std::vector<int> leaf_order; ///< halin only; empty means ascending

  /// Throws ParseError on malformed text and InvalidInput on violated
  /// parameter constraints.
  static FamilySpec parse(std::string_view text);
  std::string to_string() const;

  static FamilySpec path(int n) { return {FamilyKind::Path, {n}, {}, {}}; }
  static FamilySpec cycle(int n) { return {FamilyKind::Cycle, {n}, {}, {}}; }
  static FamilySpec complete(int n) { return {FamilyKind::Complete, {n}, {}, {}}; }
  static FamilySpec grid(int m, int n) { return {FamilyKind::Grid, {m, n}, {}, {}}; }
  static FamilySpec rook(int m, int n) { return {FamilyKind::Rook, {m, n}, {}, {}}; }
  static FamilySpec cocktail(int r) { return {FamilyKind::Cocktail, {r}, {}, {}}; }
  static FamilySpec tau(int a, int b, int c) { return {FamilyKind::Tau, {a, b, c}, {}, {}}; }
  static FamilySpec halin(std::vector<Edge> tree, std::vector<int> leaf_order = {}) {
    return {FamilyKind::Halin, {}, std::move(tree), std::move(leaf_order)};
  }

  /// Throws InvalidInput when the parameters violate the family constraints.
  void validate() const;
};

Graph generate(const FamilySpec& spec);

/// Vertex id of v_{r,c} (1-based r, c) in grid/rook MxN.
constexpr int grid_vertex(int n_cols, int r, int c) { return (r - 1) * n_cols + (c - 1); }

struct RecipeOrdering {
  FamilySpec spec;
  EliminationOrdering ordering;
  std::optional<int> expected_fill;
  std::optional<int> expected_width;
  std::optional<int> expected_sum_madj;
  /// Length of the prefix certified safe (rules A/B) in the source argument.
  std::optional<int> safe_prefix;
};

/// Ordering transcribed from the argument for the family. Supported: grid 3xN
/// (N>=3), grid 4xN (N>=4), rook 3xN (N>=2), rook 4x4, rook 4xN (N>=6),
/// cocktail R, tau A,B,C. Throws InvalidInput for anything else.
RecipeOrdering recipe_ordering(const FamilySpec& spec);

/// Closed-form madj size at `step` (0-based) of α on rook MxN:
///   m*n - (m - |rows|)(n - |cols|) - |comp|
/// where comp is the component of the eliminated prefix plus α(step) that
/// contains α(step) and rows/cols are those it touches. Compares it with
/// madj_of and returns whether they agree.
bool rook_madj_check(const FamilySpec& spec, const EliminationOrdering& alpha, int step);

/// The closed-form value used by rook_madj_check.
int rook_madj_formula(int m, int n, VertexSet eliminated, int v);

}  // namespace chordkit
