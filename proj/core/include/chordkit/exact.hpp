#pragma once

#include <cstdint>
#include <optional>

#include "chordkit/elimination.hpp"
#include "chordkit/graph.hpp"

namespace chordkit {

/// Exact solvers run a dynamic program over the 2^k eliminated subsets of
/// each connected component (k vertices). `limit` bounds k; components
/// larger than `limit` raise CapacityError. `threads` > 1 splits each
/// popcount layer across workers; results do not depend on it.
struct SolverOptions {
  static constexpr int kDefaultLimit = 22;
  /// Hard ceiling regardless of `limit`: tables are indexed by 32-bit masks.
  static constexpr int kMaxLimit = 30;

  int limit = kDefaultLimit;
  int threads = 1;
};

struct SolverStats {
  std::uint64_t states = 0;
  double elapsed_seconds = 0.0;
};

struct SolverResult {
  int value = 0;
  EliminationOrdering witness;
  SolverStats stats;
};

struct TauPhiResult {
  int tau = 0;
  int phi = 0;
  int mfi = 0;
  int tw = 0;
  /// Fill-optimal ordering of least width (width = tw + tau).
  EliminationOrdering min_fill_witness;
  /// Width-optimal ordering of least fill (fill = mfi + phi).
  EliminationOrdering min_width_witness;
  SolverStats stats;
};

/// Minimum fill-in; disconnected graphs sum over components.
SolverResult exact_mfi(const Graph& g, const SolverOptions& opts = {});

/// Treewidth; disconnected graphs take the maximum over components.
SolverResult exact_tw(const Graph& g, const SolverOptions& opts = {});

/// Least fill over orderings whose every madj size is at most w; nullopt if
/// no ordering respects the cap. The witness is written to `witness` when
/// non-null and a value exists.
std::optional<int> width_capped_min_fill(const Graph& g, int w, const SolverOptions& opts = {},
                                         EliminationOrdering* witness = nullptr);

/// τ = (least width among fill-optimal orderings) - tw and
/// φ = (least fill among width-tw orderings) - mfi. On a disconnected graph a
/// fill-optimal triangulation is a union of fill-optimal triangulations of
/// the components, so the first term is the maximum over components.
TauPhiResult exact_tau_phi(const Graph& g, const SolverOptions& opts = {});

/// Yes iff some triangulation has width <= tw + k and fill <= mfi + c.
bool tfm_decide(const Graph& g, int k, int c, const SolverOptions& opts = {});

/// For κ(g) = tw(g) = k: checks that fill-optimal and width-optimal orderings
/// coincide (τ = φ = 0) and that the minimum triangulation has
/// k(|V|-k) + k(k-1)/2 edges. Throws InvalidInput when κ(g) != tw(g).
bool min_ordering_width_equivalence(const Graph& g, const SolverOptions& opts = {});

}  // namespace chordkit
