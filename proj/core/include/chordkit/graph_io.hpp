#pragma once

#include <iosfwd>
#include <string>
#include <string_view>

#include "chordkit/graph.hpp"

namespace chordkit {

/// graph6 encoding of g over its full id space; absent ids become isolated
/// vertices. Supports up to 64 vertices (the 4-byte size header is used from 63).
std::string to_graph6(const Graph& g);

/// Decodes one graph6 string. A leading ">>graph6<<" header and trailing
/// whitespace are accepted. Throws ParseError on malformed input.
Graph from_graph6(std::string_view text);

/// Plain edge list: one "u v" pair per line, '#' starts a comment.
///
/// An optional first line "n m" declares the vertex count; it is treated as
/// a header only when exactly m edge lines follow and every endpoint is below
/// n. Without a header the vertex count is one more than the largest id.
Graph parse_edge_list(std::string_view text);

/// Edge list with a leading "n m" header, edges in canonical order.
std::string to_edge_list(const Graph& g);

/// Graphviz DOT; present vertices only.
std::string to_dot(const Graph& g, std::string_view name = "G");

/// Sniffs the format: a single token of printable graph6 characters is
/// graph6, anything else is an edge list.
Graph parse_graph(std::string_view text);

std::string read_all(std::istream& in);

}  // namespace chordkit
