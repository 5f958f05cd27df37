#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "estrada/graph.hpp"

namespace estrada {

/// Parses whitespace-separated "u v" pairs, one edge per line.
///
/// `#` starts a comment. Labels are 0-based when the smallest label seen is
/// 0 and 1-based otherwise; the vertex count is the largest normalized label
/// plus one. Duplicate edges collapse. Self-loops, non-integer tokens and
/// lines without exactly two labels throw ParseError with the line number.
Graph parse_edge_list(std::string_view text);

/// One "u v" line per edge, 0-based, u < v, lexicographic order.
std::string to_edge_list(const Graph& g);

/// Decodes one graph6 line (an optional ">>graph6<<" prefix is accepted).
/// Supports the 1-, 4- and 8-byte size headers.
Graph parse_graph6(std::string_view line);

/// Encodes with the shortest size header; the result has no trailing newline.
std::string to_graph6(const Graph& g);

/// Decodes every non-blank line of a graph6 file. Errors carry the line number.
std::vector<Graph> parse_graph6_file(std::string_view text);

}  // namespace estrada
