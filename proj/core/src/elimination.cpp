#include "chordkit/elimination.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <sstream>

#include "chordkit/errors.hpp"

namespace chordkit {

EliminationOrdering::EliminationOrdering(const Graph& g, std::vector<int> order) : order_(std::move(order)) {
  VertexSet seen;
  for (int v : order_) {
    if (!g.has_vertex(v)) throw InvalidInput("ordering names vertex " + std::to_string(v) + " not in the graph");
    if (seen.contains(v)) throw InvalidInput("ordering repeats vertex " + std::to_string(v));
    seen.insert(v);
  }
  if (seen != g.vertices()) {
    throw InvalidInput("ordering misses vertices: " + chordkit::to_string(g.vertices() - seen));
  }
}

EliminationOrdering EliminationOrdering::parse(const Graph& g, std::string_view text) {
  std::vector<int> order;
  std::istringstream in{std::string(text)};
  std::string tok;
  while (in >> tok) {
    int v = 0;
    auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc{} || p != tok.data() + tok.size()) {
      throw ParseError("ordering: bad vertex id '" + tok + "'");
    }
    order.push_back(v);
  }
  return EliminationOrdering(g, std::move(order));
}

std::string EliminationOrdering::to_string() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < order_.size(); ++i) {
    if (i) os << ' ';
    os << order_[i];
  }
  return os.str();
}

int TriangulationReport::sum_madj() const { return std::accumulate(madj_sizes.begin(), madj_sizes.end(), 0); }

TriangulationReport apply_ordering(const Graph& g, const EliminationOrdering& alpha) {
  TriangulationReport r;
  r.order = alpha.order();
  Graph current = g;
  for (int v : alpha.order()) {
    VertexSet up = current.neighbors(v);
    r.madj.push_back(up);
    r.madj_sizes.push_back(up.size());
    r.width = std::max(r.width, up.size());
    Elimination step = eliminate(current, v);
    r.fill.insert(r.fill.end(), step.fill.begin(), step.fill.end());
    current = std::move(step.graph);
  }
  normalize(r.fill);
  r.total_fill = static_cast<int>(r.fill.size());
  r.supergraph = g.with_edges(r.fill);
  return r;
}

VertexSet madj_of(const Graph& g, VertexSet eliminated, int v) {
  if (eliminated.contains(v)) throw InvalidInput("madj_of: vertex " + std::to_string(v) + " already eliminated");
  VertexSet region = component_of(g, eliminated, v);
  return g.neighbors(region) - eliminated;
}

LowDegreeRecord low_degree_prefix(const TriangulationReport& report, int c) {
  LowDegreeRecord rec;
  rec.threshold = c;
  const int last = static_cast<int>(report.order.size()) - (c + 1);
  for (int i = 0; i < last; ++i) {
    if (report.madj_sizes[static_cast<std::size_t>(i)] == c) {
      rec.vertices.push_back(report.order[static_cast<std::size_t>(i)]);
      rec.steps.push_back(i);
    }
  }
  return rec;
}

bool stability_check(const Graph& g, const EliminationOrdering& alpha) {
  VertexSet eliminated;
  Graph current = g;
  for (int v : alpha.order()) {
    if (!g.neighbors(v).intersects(eliminated) && current.neighbors(v) != g.neighbors(v)) return false;
    eliminated.insert(v);
    current = eliminate(current, v).graph;
  }
  return true;
}

}  // namespace chordkit
