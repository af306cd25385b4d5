#include "chordkit/graph_io.hpp"

#include <algorithm>
#include <charconv>
#include <istream>
#include <iterator>
#include <optional>
#include <sstream>
#include <vector>

#include "chordkit/errors.hpp"

namespace chordkit {

namespace {

constexpr std::string_view kGraph6Header = ">>graph6<<";

std::string_view trim(std::string_view s) {
  const char* ws = " \t\r\n";
  auto b = s.find_first_not_of(ws);
  if (b == std::string_view::npos) return {};
  auto e = s.find_last_not_of(ws);
  return s.substr(b, e - b + 1);
}

bool is_graph6_char(char c) { return c >= 63 && c <= 126; }

}  // namespace

std::string to_graph6(const Graph& g) {
  const int n = g.order();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(63 + n));
  } else {
    out.push_back(static_cast<char>(126));
    out.push_back(static_cast<char>(63 + ((n >> 12) & 63)));
    out.push_back(static_cast<char>(63 + ((n >> 6) & 63)));
    out.push_back(static_cast<char>(63 + (n & 63)));
  }
  int acc = 0;
  int filled = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(63 + acc));
        acc = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>(63 + (acc << (6 - filled))));
  return out;
}

Graph from_graph6(std::string_view text) {
  std::string_view s = trim(text);
  if (s.substr(0, kGraph6Header.size()) == kGraph6Header) s.remove_prefix(kGraph6Header.size());
  if (s.empty()) throw ParseError("graph6: empty input");
  for (char c : s) {
    if (!is_graph6_char(c)) throw ParseError("graph6: invalid character");
  }
  std::size_t pos = 0;
  long n = 0;
  if (s[0] != 126) {
    n = s[0] - 63;
    pos = 1;
  } else if (s.size() >= 4 && s[1] != 126) {
    n = (long(s[1] - 63) << 12) | (long(s[2] - 63) << 6) | long(s[3] - 63);
    pos = 4;
  } else {
    throw ParseError("graph6: unsupported size header");
  }
  if (n > VertexSet::kCapacity) {
    throw CapacityError("graph6: " + std::to_string(n) + " vertices exceeds the " +
                        std::to_string(VertexSet::kCapacity) + "-vertex limit");
  }
  const long bits = n * (n - 1) / 2;
  const std::size_t need = static_cast<std::size_t>((bits + 5) / 6);
  if (s.size() - pos != need) {
    throw ParseError("graph6: expected " + std::to_string(need) + " data bytes, got " +
                     std::to_string(s.size() - pos));
  }
  std::vector<std::pair<int, int>> edges;
  long k = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++k) {
      int byte = s[pos + static_cast<std::size_t>(k / 6)] - 63;
      if ((byte >> (5 - k % 6)) & 1) edges.emplace_back(i, j);
    }
  }
  return build_graph(static_cast<int>(n), edges);
}

Graph parse_edge_list(std::string_view text) {
  std::vector<std::vector<long>> rows;
  std::istringstream in{std::string(text)};
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::string_view body = line;
    if (auto hash = body.find('#'); hash != std::string_view::npos) body = body.substr(0, hash);
    body = trim(body);
    if (body.empty()) continue;
    std::vector<long> nums;
    std::istringstream fields{std::string(body)};
    std::string tok;
    while (fields >> tok) {
      long value = 0;
      auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
      if (ec != std::errc{} || p != tok.data() + tok.size() || value < 0) {
        throw ParseError("edge list line " + std::to_string(lineno) + ": bad token '" + tok + "'");
      }
      nums.push_back(value);
    }
    if (nums.size() != 2) {
      throw ParseError("edge list line " + std::to_string(lineno) + ": expected two integers");
    }
    rows.push_back(std::move(nums));
  }

  std::size_t first_edge = 0;
  std::optional<long> declared;
  if (!rows.empty()) {
    const long n = rows[0][0];
    const long m = rows[0][1];
    bool header = static_cast<long>(rows.size()) - 1 == m;
    for (std::size_t i = 1; header && i < rows.size(); ++i) {
      header = rows[i][0] < n && rows[i][1] < n;
    }
    if (header) {
      declared = n;
      first_edge = 1;
    }
  }
  long n = declared.value_or(0);
  std::vector<std::pair<int, int>> edges;
  for (std::size_t i = first_edge; i < rows.size(); ++i) {
    if (rows[i][0] >= VertexSet::kCapacity || rows[i][1] >= VertexSet::kCapacity) {
      throw CapacityError("edge list: vertex id beyond the " +
                          std::to_string(VertexSet::kCapacity) + "-vertex limit");
    }
    if (!declared) n = std::max({n, rows[i][0] + 1, rows[i][1] + 1});
    edges.emplace_back(static_cast<int>(rows[i][0]), static_cast<int>(rows[i][1]));
  }
  if (n > VertexSet::kCapacity) {
    throw CapacityError("edge list: " + std::to_string(n) + " vertices exceeds the " +
                        std::to_string(VertexSet::kCapacity) + "-vertex limit");
  }
  return build_graph(static_cast<int>(n), edges);
}

std::string to_edge_list(const Graph& g) {
  std::ostringstream os;
  os << g.order() << ' ' << g.edge_count() << '\n';
  for (const Edge& e : g.edges()) os << e.u << ' ' << e.v << '\n';
  return os.str();
}

std::string to_dot(const Graph& g, std::string_view name) {
  std::ostringstream os;
  os << "graph " << name << " {\n";
  for (int v : g.vertices()) os << "  " << v << ";\n";
  for (const Edge& e : g.edges()) os << "  " << e.u << " -- " << e.v << ";\n";
  os << "}\n";
  return os.str();
}

Graph parse_graph(std::string_view text) {
  std::string_view s = trim(text);
  bool single_token = s.find_first_of(" \t\r\n") == std::string_view::npos;
  if (single_token && !s.empty() && s.substr(0, kGraph6Header.size()) == kGraph6Header) {
    return from_graph6(s);
  }
  bool graph6_chars = single_token && !s.empty();
  for (char c : s) graph6_chars = graph6_chars && is_graph6_char(c);
  if (graph6_chars) return from_graph6(s);
  return parse_edge_list(text);
}

std::string read_all(std::istream& in) {
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

}  // namespace chordkit
