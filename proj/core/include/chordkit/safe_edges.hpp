#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "chordkit/elimination.hpp"
#include "chordkit/exact.hpp"
#include "chordkit/graph.hpp"

namespace chordkit {

enum class SafetyRule { NotSafe, A, B };

/// "NotSafe", "A" or "B".
std::string to_string(SafetyRule rule);

struct SafetyTag {
  SafetyRule rule = SafetyRule::NotSafe;
  EdgeSet f_v;
};

/// Chooses which pending edge f_v adds next; receives the missing
/// edges of all currently qualifying separators (canonical order, no
/// duplicates) and returns an index into that list.
using SeparatorPicker = std::function<std::size_t(const EdgeSet& candidates)>;

/// F^v: repeatedly adds the single missing edge of a minimal separator
/// S ⊆ N(v) of g ⊕ F with |fill(S)| = 1, until none remains. The default
/// picker takes the first candidate.
EdgeSet f_v(const Graph& g, int v);
EdgeSet f_v(const Graph& g, int v, const SeparatorPicker& pick);

/// A: v simplicial in g or g ⊕ F^v. B: deg(v) = κ(g) and v almost
/// simplicial in g or g ⊕ F^v.
SafetyTag safety(const Graph& g, int v);
/// Same, with κ(g) supplied by the caller.
SafetyTag safety(const Graph& g, int v, int kappa);

struct ReductionStep {
  int vertex = 0;
  SafetyTag tag;
  EdgeSet fill;  ///< fill(N(vertex)) in the graph it was eliminated from
};

struct ReductionTrace {
  std::vector<ReductionStep> steps;
  Graph residual;
  int total_fill_added = 0;

  /// One "step=<i> vertex=<v> tag=<A|B> fill=<u-w,...|->" line per step,
  /// 1-based.
  std::string log() const;
};

/// Eliminates safe vertices (rule A first, then B; smallest id within a rule)
/// until none qualifies or the residual is complete.
ReductionTrace reduce(const Graph& g);

/// Certificate for τ(g) = 0: steps 1..k of α each satisfy A or B in the
/// evolving graph, the rest of α is fill-optimal on G_k, and the width of α
/// is at most tw(g). Throws InvalidInput unless 0 <= k < |V|.
bool check_tau0_certificate(const Graph& g, const EliminationOrdering& alpha, int k,
                            const SolverOptions& opts = {});

}  // namespace chordkit
