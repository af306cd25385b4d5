#include "chordkit/safe_edges.hpp"

#include <optional>
#include <sstream>

#include "chordkit/chordality.hpp"
#include "chordkit/errors.hpp"
#include "chordkit/separators.hpp"

namespace chordkit {

std::string to_string(SafetyRule rule) {
  switch (rule) {
    case SafetyRule::A:
      return "A";
    case SafetyRule::B:
      return "B";
    case SafetyRule::NotSafe:
      break;
  }
  return "NotSafe";
}

EdgeSet f_v(const Graph& g, int v) {
  return f_v(g, v, [](const EdgeSet&) { return std::size_t{0}; });
}

EdgeSet f_v(const Graph& g, int v, const SeparatorPicker& pick) {
  if (!g.has_vertex(v)) throw InvalidInput("vertex " + std::to_string(v) + " is not in the graph");
  EdgeSet added;
  Graph h = g;
  for (;;) {
    // N_h(v) = N_g(v): every added edge lies inside N(v).
    EdgeSet candidates;
    for (const Separator& s : minimal_separators_in_neighborhood(h, v)) {
      EdgeSet missing = fill_edges(h, s.vertices);
      if (missing.size() == 1) candidates.push_back(missing.front());
    }
    normalize(candidates);
    if (candidates.empty()) break;
    std::size_t i = pick(candidates);
    if (i >= candidates.size()) throw InvalidInput("separator picker returned an out-of-range index");
    added.push_back(candidates[i]);
    h = h.with_edges({candidates[i]});
  }
  normalize(added);
  return added;
}

SafetyTag safety(const Graph& g, int v) { return safety(g, v, vertex_connectivity(g)); }

SafetyTag safety(const Graph& g, int v, int kappa) {
  SafetyTag tag;
  tag.f_v = f_v(g, v);
  Graph h = g.with_edges(tag.f_v);
  if (is_simplicial(g, v) || is_simplicial(h, v)) {
    tag.rule = SafetyRule::A;
  } else if (g.degree(v) == kappa && (is_almost_simplicial(g, v) || is_almost_simplicial(h, v))) {
    tag.rule = SafetyRule::B;
  }
  return tag;
}

std::string ReductionTrace::log() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < steps.size(); ++i) {
    const ReductionStep& s = steps[i];
    os << "step=" << i + 1 << " vertex=" << s.vertex << " tag=" << to_string(s.tag.rule)
       << " fill=" << (s.fill.empty() ? std::string("-") : to_string(s.fill)) << '\n';
  }
  return os.str();
}

ReductionTrace reduce(const Graph& g) {
  ReductionTrace trace;
  Graph current = g;
  while (!current.empty() && !current.is_complete()) {
    const int kappa = vertex_connectivity(current);
    std::optional<ReductionStep> pick;
    for (int v : current.vertices()) {
      SafetyTag tag = safety(current, v, kappa);
      if (tag.rule == SafetyRule::A) {
        pick = ReductionStep{v, std::move(tag), {}};
        break;
      }
      if (tag.rule == SafetyRule::B && !pick) pick = ReductionStep{v, std::move(tag), {}};
    }
    if (!pick) break;
    Elimination e = eliminate(current, pick->vertex);
    pick->fill = std::move(e.fill);
    trace.total_fill_added += static_cast<int>(pick->fill.size());
    trace.steps.push_back(std::move(*pick));
    current = std::move(e.graph);
  }
  trace.residual = std::move(current);
  return trace;
}

bool check_tau0_certificate(const Graph& g, const EliminationOrdering& alpha, int k,
                            const SolverOptions& opts) {
  if (alpha.size() != g.vertex_count()) throw InvalidInput("ordering does not match the graph");
  if (k < 0 || k >= g.vertex_count()) {
    throw InvalidInput("certificate prefix k=" + std::to_string(k) + " outside [0, |V|)");
  }
  Graph current = g;
  for (int i = 0; i < k; ++i) {
    const int v = alpha.at(i);
    if (safety(current, v).rule == SafetyRule::NotSafe) return false;
    current = eliminate(current, v).graph;
  }
  std::vector<int> rest(alpha.order().begin() + k, alpha.order().end());
  TriangulationReport tail = apply_ordering(current, EliminationOrdering(current, std::move(rest)));
  if (tail.total_fill != exact_mfi(current, opts).value) return false;
  return apply_ordering(g, alpha).width <= exact_tw(g, opts).value;
}

}  // namespace chordkit
