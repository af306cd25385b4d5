#include "chordkit/families.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

#include "chordkit/errors.hpp"

namespace chordkit {

namespace {

int parse_int(std::string_view tok, std::string_view what) {
  int value = 0;
  auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (tok.empty() || ec != std::errc{} || p != tok.data() + tok.size()) {
    throw ParseError("family: bad " + std::string(what) + " '" + std::string(tok) + "'");
  }
  return value;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  for (;;) {
    auto i = s.find(sep);
    out.push_back(s.substr(0, i));
    if (i == std::string_view::npos) return out;
    s.remove_prefix(i + 1);
  }
}

void require(bool ok, const std::string& message) {
  if (!ok) throw InvalidInput("family: " + message);
}

// Vertex count after validation (halin uses the largest tree id).
int halin_order(const FamilySpec& spec) {
  int n = 0;
  for (const Edge& e : spec.tree) n = std::max(n, e.v + 1);
  return n;
}

std::vector<int> halin_leaves(const FamilySpec& spec) {
  std::vector<int> degree(static_cast<std::size_t>(halin_order(spec)), 0);
  for (const Edge& e : spec.tree) {
    ++degree[e.u];
    ++degree[e.v];
  }
  std::vector<int> leaves;
  for (int v = 0; v < static_cast<int>(degree.size()); ++v) {
    if (degree[v] == 1) leaves.push_back(v);
  }
  return leaves;
}

}  // namespace

FamilySpec FamilySpec::parse(std::string_view text) {
  auto colon = text.find(':');
  if (colon == std::string_view::npos) throw ParseError("family: expected KIND:PARAMS, got '" + std::string(text) + "'");
  std::string_view kind = text.substr(0, colon);
  std::string_view rest = text.substr(colon + 1);
  FamilySpec spec;
  auto dims = [&](FamilyKind k) {
    auto parts = split(rest, 'x');
    if (parts.size() != 2) throw ParseError("family: expected MxN, got '" + std::string(rest) + "'");
    spec.kind = k;
    spec.params = {parse_int(parts[0], "row count"), parse_int(parts[1], "column count")};
  };
  if (kind == "path" || kind == "cycle" || kind == "complete" || kind == "cocktail") {
    spec.kind = kind == "path"       ? FamilyKind::Path
                : kind == "cycle"    ? FamilyKind::Cycle
                : kind == "complete" ? FamilyKind::Complete
                                     : FamilyKind::Cocktail;
    spec.params = {parse_int(rest, "size")};
  } else if (kind == "grid") {
    dims(FamilyKind::Grid);
  } else if (kind == "rook") {
    dims(FamilyKind::Rook);
  } else if (kind == "tau") {
    auto parts = split(rest, ',');
    if (parts.size() != 3) throw ParseError("family: tau expects A,B,C");
    spec.kind = FamilyKind::Tau;
    for (auto p : parts) spec.params.push_back(parse_int(p, "block size"));
  } else if (kind == "halin") {
    spec.kind = FamilyKind::Halin;
    auto sections = split(rest, ';');
    if (sections.size() > 2) throw ParseError("family: halin expects EDGES[;LEAVES]");
    for (auto e : split(sections[0], ',')) {
      auto ends = split(e, '-');
      if (ends.size() != 2) throw ParseError("family: bad tree edge '" + std::string(e) + "'");
      int a = parse_int(ends[0], "vertex");
      int b = parse_int(ends[1], "vertex");
      spec.tree.push_back(make_edge(a, b));
    }
    if (sections.size() == 2) {
      for (auto l : split(sections[1], ',')) spec.leaf_order.push_back(parse_int(l, "leaf"));
    }
  } else {
    throw ParseError("family: unknown kind '" + std::string(kind) + "'");
  }
  spec.validate();
  return spec;
}

std::string FamilySpec::to_string() const {
  std::ostringstream os;
  switch (kind) {
    case FamilyKind::Path:
      os << "path:" << params[0];
      break;
    case FamilyKind::Cycle:
      os << "cycle:" << params[0];
      break;
    case FamilyKind::Complete:
      os << "complete:" << params[0];
      break;
    case FamilyKind::Grid:
      os << "grid:" << params[0] << 'x' << params[1];
      break;
    case FamilyKind::Rook:
      os << "rook:" << params[0] << 'x' << params[1];
      break;
    case FamilyKind::Cocktail:
      os << "cocktail:" << params[0];
      break;
    case FamilyKind::Tau:
      os << "tau:" << params[0] << ',' << params[1] << ',' << params[2];
      break;
    case FamilyKind::Halin: {
      os << "halin:";
      for (std::size_t i = 0; i < tree.size(); ++i) os << (i ? "," : "") << tree[i].u << '-' << tree[i].v;
      if (!leaf_order.empty()) {
        os << ';';
        for (std::size_t i = 0; i < leaf_order.size(); ++i) os << (i ? "," : "") << leaf_order[i];
      }
      break;
    }
  }
  return os.str();
}

void FamilySpec::validate() const {
  const int cap = VertexSet::kCapacity;
  switch (kind) {
    case FamilyKind::Path:
    case FamilyKind::Complete:
      require(params.size() == 1 && params[0] >= 1 && params[0] <= cap, "size must be in 1..64");
      break;
    case FamilyKind::Cycle:
      require(params.size() == 1 && params[0] >= 3 && params[0] <= cap, "cycle length must be in 3..64");
      break;
    case FamilyKind::Grid:
    case FamilyKind::Rook:
      require(params.size() == 2 && params[0] >= 1 && params[1] >= 1, "dimensions must be at least 1");
      require(params[0] * params[1] <= cap, "grid has more than 64 vertices");
      break;
    case FamilyKind::Cocktail:
      require(params.size() == 1 && params[0] >= 1 && 2 * params[0] <= cap, "r must be in 1..32");
      break;
    case FamilyKind::Tau: {
      require(params.size() == 3, "tau expects three block sizes");
      const int a = params[0], b = params[1], c = params[2];
      require(a >= 1, "block A must be nonempty");
      require(a < b && b < c && b * b < a * c, "tau needs a < b < c and b*b < a*c");
      require(a + 2 * b + c <= cap, "tau graph has more than 64 vertices");
      break;
    }
    case FamilyKind::Halin: {
      const int n = halin_order(*this);
      require(n >= 4 && n <= cap, "halin tree must have 4..64 vertices");
      require(static_cast<int>(tree.size()) == n - 1, "halin tree must have n-1 edges");
      for (const Edge& e : tree) require(e.u >= 0 && e.u != e.v, "halin tree edge is invalid");
      Graph t = build_graph(n, EdgeSet(tree));
      require(t.is_connected(), "halin tree must be connected");
      for (int v = 0; v < n; ++v) require(t.degree(v) != 2, "halin tree may not have degree-2 vertices");
      std::vector<int> leaves = halin_leaves(*this);
      if (!leaf_order.empty()) {
        std::vector<int> sorted = leaf_order;
        std::sort(sorted.begin(), sorted.end());
        require(sorted == leaves, "leaf order must list every leaf exactly once");
      }
      break;
    }
  }
}

Graph generate(const FamilySpec& spec) {
  spec.validate();
  std::vector<std::pair<int, int>> edges;
  const auto& p = spec.params;
  switch (spec.kind) {
    case FamilyKind::Path:
      for (int v = 0; v + 1 < p[0]; ++v) edges.emplace_back(v, v + 1);
      return build_graph(p[0], edges);
    case FamilyKind::Cycle:
      for (int v = 0; v < p[0]; ++v) edges.emplace_back(v, (v + 1) % p[0]);
      return build_graph(p[0], edges);
    case FamilyKind::Complete:
      for (int u = 0; u < p[0]; ++u)
        for (int v = u + 1; v < p[0]; ++v) edges.emplace_back(u, v);
      return build_graph(p[0], edges);
    case FamilyKind::Grid:
    case FamilyKind::Rook: {
      const int m = p[0], n = p[1];
      const bool rook = spec.kind == FamilyKind::Rook;
      for (int r = 1; r <= m; ++r) {
        for (int c = 1; c <= n; ++c) {
          const int v = grid_vertex(n, r, c);
          for (int c2 = c + 1; c2 <= (rook ? n : std::min(n, c + 1)); ++c2) edges.emplace_back(v, grid_vertex(n, r, c2));
          for (int r2 = r + 1; r2 <= (rook ? m : std::min(m, r + 1)); ++r2) edges.emplace_back(v, grid_vertex(n, r2, c));
        }
      }
      return build_graph(m * n, edges);
    }
    case FamilyKind::Cocktail: {
      const int n = 2 * p[0];
      for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
          if (!(u % 2 == 0 && v == u + 1)) edges.emplace_back(u, v);
      return build_graph(n, edges);
    }
    case FamilyKind::Tau: {
      const int a = p[0], b = p[1], c = p[2];
      // Blocks in layout order: A, B1, B2, C.
      const int start[4] = {0, a, a + b, a + 2 * b};
      const int size[4] = {a, b, b, c};
      auto clique = [&](int i) {
        for (int u = start[i]; u < start[i] + size[i]; ++u)
          for (int v = u + 1; v < start[i] + size[i]; ++v) edges.emplace_back(u, v);
      };
      auto join = [&](int i, int j) {
        for (int u = start[i]; u < start[i] + size[i]; ++u)
          for (int v = start[j]; v < start[j] + size[j]; ++v) edges.emplace_back(u, v);
      };
      for (int i = 0; i < 4; ++i) clique(i);
      join(0, 1);  // A-B1
      join(1, 3);  // B1-C
      join(3, 2);  // C-B2
      join(2, 0);  // B2-A
      return build_graph(a + 2 * b + c, edges);
    }
    case FamilyKind::Halin: {
      for (const Edge& e : spec.tree) edges.emplace_back(e.u, e.v);
      std::vector<int> leaves = spec.leaf_order.empty() ? halin_leaves(spec) : spec.leaf_order;
      for (std::size_t i = 0; i < leaves.size(); ++i) edges.emplace_back(leaves[i], leaves[(i + 1) % leaves.size()]);
      return build_graph(halin_order(spec), edges);
    }
  }
  throw Error("generate: unhandled family kind");
}

namespace {

// Collects a recipe ordering; a repeated vertex is a transcription bug.
class OrderBuilder {
 public:
  explicit OrderBuilder(int n_cols) : n_cols_(n_cols) {}

  void add(int v) {
    if (used_.contains(v)) throw Error("recipe lists vertex " + std::to_string(v) + " twice");
    used_.insert(v);
    order_.push_back(v);
  }
  void rc(int r, int c) { add(grid_vertex(n_cols_, r, c)); }
  int size() const { return static_cast<int>(order_.size()); }

  EliminationOrdering finish(const Graph& g) {
    for (int v : g.vertices() - used_) order_.push_back(v);
    return EliminationOrdering(g, std::move(order_));
  }

 private:
  int n_cols_;
  VertexSet used_;
  std::vector<int> order_;
};

int ceil_div(int a, int b) { return (a + b - 1) / b; }

RecipeOrdering grid3(const FamilySpec& spec, const Graph& g) {
  const int n = spec.params[1];
  OrderBuilder o(n);
  o.rc(1, 1);
  o.rc(1, n);
  o.rc(3, 1);
  o.rc(3, n);
  o.rc(2, 1);
  for (int c = 2; c <= n - 2; ++c) {
    o.rc(2, c);
    o.rc(1, c);
    o.rc(3, c);
  }
  RecipeOrdering r{spec, o.finish(g), 5 + 4 * (n - 3), 3, std::nullopt, 3 * n - 4};
  return r;
}

RecipeOrdering grid4(const FamilySpec& spec, const Graph& g) {
  const int n = spec.params[1];
  OrderBuilder o(n);
  // X: the corners.
  o.rc(1, 1);
  o.rc(1, n);
  o.rc(4, 1);
  o.rc(4, n);
  int fill = 0;
  if (n == 4) {
    o.rc(2, 1);
    o.rc(4, 3);
    o.rc(2, 4);
    o.rc(1, 3);
    o.rc(3, 1);
    o.rc(3, 2);
    o.rc(2, 2);
    o.rc(1, 2);
    fill = 18;
  } else {
    // X'.
    o.rc(2, 1);
    o.rc(1, 2);
    o.rc(4, 2);
    o.rc(4, n - 1);
    o.rc(2, n);
    o.rc(1, n - 1);
    if (n == 5) {
      for (auto [r, c] : {std::pair{3, 1}, {2, 2}, {3, 2}, {3, 3}, {2, 3}, {1, 3}}) o.rc(r, c);
      fill = 25;
    } else if (n == 6) {
      for (auto [r, c] : {std::pair{3, 1}, {2, 2}, {3, 2}, {1, 3}, {2, 3}, {3, 3}, {4, 3}, {3, 4}, {2, 4}, {1, 4}})
        o.rc(r, c);
      fill = 34;
    } else {
      // X'': rows 1 and 4 at even columns 4..n-3.
      for (int r : {1, 4})
        for (int c = 4; c <= n - 3; c += 2) o.rc(r, c);
      o.rc(3, 1);
      for (int c = 2; c <= 2 * ceil_div(n - 4, 2); ++c) {
        o.rc(2, c);
        o.rc(3, c);
        if (c % 2 == 1) {
          o.rc(1, c);
          o.rc(4, c);
        }
      }
      if (n % 2 == 0) {
        for (int r = 1; r <= 4; ++r) o.rc(r, n - 3);
      }
      o.rc(3, n);
      o.rc(2, n - 1);
      fill = n % 2 == 0 ? 18 + 8 * (n - 4) : 25 + 8 * (n - 5);
    }
  }
  return {spec, o.finish(g), fill, 4, std::nullopt, n == 4 ? 8 : 10};
}

RecipeOrdering rook3(const FamilySpec& spec, const Graph& g) {
  const int n = spec.params[1];
  OrderBuilder o(n);
  for (int i = 1; i <= n; ++i) o.rc((i - 1) % 3 + 1, i);
  const int k = n / 3;
  int fill = 0;
  switch (n % 3) {
    case 0:
      fill = k * (15 * k - 6);
      break;
    case 1:
      fill = k * (15 * k + 4);
      break;
    default:
      fill = (5 * k + 3) * (3 * k + 1);
      break;
  }
  return {spec, o.finish(g), fill, std::nullopt, std::nullopt, std::nullopt};
}

RecipeOrdering rook4(const FamilySpec& spec, const Graph& g) {
  const int n = spec.params[1];
  OrderBuilder o(n);
  if (n == 4) {
    for (int i = 1; i <= 4; ++i) o.rc(i, i);
    o.rc(1, 2);
    o.rc(2, 1);
    return {spec, o.finish(g), 38, 9, 86, std::nullopt};
  }
  const int half = ceil_div(n, 2);
  for (int i = 1; i <= half - 1; ++i) o.rc(1, i);
  for (int i = half; i <= n - 2; ++i) o.rc(2, i);
  for (int i = 1; i <= half - 1; ++i) o.rc(2, i);
  for (int i = half; i <= n - 2; ++i) o.rc(1, i);
  o.rc(3, n - 1);
  o.rc(4, n);
  const int sum = 6 * n * n - 4 * n - (n % 2 == 0 ? n / 2 : (n - 1) / 2) + 8;
  const int edges = 2 * n * (n - 1) + 6 * n;
  return {spec, o.finish(g), sum - edges, 3 * n - 3, sum, std::nullopt};
}

}  // namespace

RecipeOrdering recipe_ordering(const FamilySpec& spec) {
  spec.validate();
  const Graph g = generate(spec);
  const auto& p = spec.params;
  switch (spec.kind) {
    case FamilyKind::Grid:
      if (p[0] == 3 && p[1] >= 3) return grid3(spec, g);
      if (p[0] == 4 && p[1] >= 4) return grid4(spec, g);
      break;
    case FamilyKind::Rook:
      if (p[0] == 3 && p[1] >= 2) return rook3(spec, g);
      if (p[0] == 4 && (p[1] == 4 || p[1] >= 6)) return rook4(spec, g);
      break;
    case FamilyKind::Cocktail: {
      const int r = p[0];
      OrderBuilder o(0);
      o.add(0);
      return {spec, o.finish(g), r - 1, 2 * r - 2, std::nullopt, 0};
    }
    case FamilyKind::Tau: {
      const int a = p[0], b = p[1], c = p[2];
      OrderBuilder o(0);
      // A, then B1, then B2, then C: layout order.
      for (int v = 0; v < a + 2 * b + c; ++v) o.add(v);
      return {spec, o.finish(g), b * b, 2 * b + c - 1, std::nullopt, std::nullopt};
    }
    default:
      break;
  }
  throw InvalidInput("no recipe ordering for family " + spec.to_string());
}

int rook_madj_formula(int m, int n, VertexSet eliminated, int v) {
  const Graph g = generate(FamilySpec::rook(m, n));
  const VertexSet comp = component_of(g, eliminated, v);
  VertexSet rows, cols;
  for (int x : comp) {
    rows.insert(x / n);
    cols.insert(x % n);
  }
  return n * m - (m - rows.size()) * (n - cols.size()) - comp.size();
}

bool rook_madj_check(const FamilySpec& spec, const EliminationOrdering& alpha, int step) {
  if (spec.kind != FamilyKind::Rook) throw InvalidInput("rook_madj_check needs a rook family");
  if (step < 0 || step >= alpha.size()) throw InvalidInput("step out of range");
  const Graph g = generate(spec);
  VertexSet eliminated;
  for (int i = 0; i < step; ++i) eliminated.insert(alpha.at(i));
  const int v = alpha.at(step);
  return madj_of(g, eliminated, v).size() == rook_madj_formula(spec.params[0], spec.params[1], eliminated, v);
}

}  // namespace chordkit
