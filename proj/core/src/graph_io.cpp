#include "estrada/graph_io.hpp"

#include <algorithm>
#include <charconv>
#include <cstdint>
#include <limits>

#include "estrada/error.hpp"

namespace estrada {
namespace {

constexpr char kGraph6Bias = 63;
constexpr std::string_view kGraph6Marker = ">>graph6<<";

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

template <typename Fn>
void for_each_line(std::string_view text, Fn&& fn) {
  std::size_t line_no = 0;
  while (!text.empty()) {
    const auto nl = text.find('\n');
    ++line_no;
    fn(line_no, text.substr(0, nl));
    if (nl == std::string_view::npos) break;
    text.remove_prefix(nl + 1);
  }
}

std::uint64_t parse_label(std::string_view token, std::size_t line_no) {
  std::uint64_t value = 0;
  const auto* end = token.data() + token.size();
  const auto [ptr, ec] = std::from_chars(token.data(), end, value);
  if (ec != std::errc() || ptr != end) {
    throw ParseError(line_no, "invalid vertex label '" + std::string(token) + "'");
  }
  if (value >= std::numeric_limits<Vertex>::max()) {
    throw ParseError(line_no, "vertex label too large");
  }
  return value;
}

}  // namespace

Graph parse_edge_list(std::string_view text) {
  struct RawEdge {
    std::uint64_t u, v;
    std::size_t line;
  };
  std::vector<RawEdge> raw;
  for_each_line(text, [&](std::size_t line_no, std::string_view line) {
    line = trim(line.substr(0, line.find('#')));
    if (line.empty()) return;
    std::vector<std::string_view> tokens;
    while (!line.empty()) {
      const auto end = line.find_first_of(" \t,");
      tokens.push_back(line.substr(0, end));
      if (end == std::string_view::npos) break;
      line = trim(line.substr(end + 1));
    }
    if (tokens.size() != 2) {
      throw ParseError(line_no, "expected two vertex labels, found " + std::to_string(tokens.size()));
    }
    const auto u = parse_label(tokens[0], line_no);
    const auto v = parse_label(tokens[1], line_no);
    if (u == v) throw ParseError(line_no, "self-loop at vertex " + std::to_string(u));
    raw.push_back({u, v, line_no});
  });
  if (raw.empty()) throw InputError("edge list contains no edges");

  std::uint64_t lo = std::numeric_limits<std::uint64_t>::max();
  std::uint64_t hi = 0;
  for (const auto& e : raw) {
    lo = std::min({lo, e.u, e.v});
    hi = std::max({hi, e.u, e.v});
  }
  const std::uint64_t offset = lo == 0 ? 0 : 1;
  std::vector<Edge> edges;
  edges.reserve(raw.size());
  for (const auto& e : raw) {
    edges.emplace_back(static_cast<Vertex>(e.u - offset), static_cast<Vertex>(e.v - offset));
  }
  return Graph::from_edges(hi - offset + 1, edges);
}

std::string to_edge_list(const Graph& g) {
  std::string out;
  for (const auto& [u, v] : g.edges()) {
    out += std::to_string(u);
    out += ' ';
    out += std::to_string(v);
    out += '\n';
  }
  return out;
}

Graph parse_graph6(std::string_view line) {
  line = trim(line);
  if (line.starts_with(kGraph6Marker)) line.remove_prefix(kGraph6Marker.size());
  if (line.empty()) throw InputError("graph6: empty input");
  if (line.front() == ':' || line.front() == ';' || line.front() == '&') {
    throw InputError("graph6: sparse6/digraph6 input is not supported");
  }
  for (char c : line) {
    if (c < kGraph6Bias || c > 126) {
      throw InputError("graph6: character out of range (0x" +
                       std::to_string(static_cast<unsigned char>(c)) + ")");
    }
  }

  auto sextet = [&](std::size_t pos) -> std::uint64_t {
    return static_cast<std::uint64_t>(line[pos] - kGraph6Bias);
  };
  std::uint64_t n = 0;
  std::size_t header = 0;
  if (line[0] != 126) {
    n = sextet(0);
    header = 1;
  } else if (line.size() >= 2 && line[1] != 126) {
    if (line.size() < 4) throw InputError("graph6: truncated size header");
    n = (sextet(1) << 12) | (sextet(2) << 6) | sextet(3);
    header = 4;
  } else {
    if (line.size() < 8) throw InputError("graph6: truncated size header");
    for (std::size_t i = 2; i < 8; ++i) n = (n << 6) | sextet(i);
    header = 8;
  }
  if (n == 0) throw InputError("graph6: graph must have at least one vertex");
  if (n >= std::numeric_limits<Vertex>::max()) throw InputError("graph6: graph too large");

  const std::uint64_t bits = n * (n - 1) / 2;
  const std::uint64_t body_len = (bits + 5) / 6;
  if (line.size() - header != body_len) {
    throw InputError("graph6: expected " + std::to_string(body_len) + " body bytes for n=" +
                     std::to_string(n) + ", found " + std::to_string(line.size() - header));
  }

  std::vector<Edge> edges;
  std::uint64_t bit = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i, ++bit) {
      const auto byte = sextet(header + bit / 6);
      if ((byte >> (5 - bit % 6)) & 1U) edges.emplace_back(i, j);
    }
  }
  for (; bit < body_len * 6; ++bit) {
    if ((sextet(header + bit / 6) >> (5 - bit % 6)) & 1U) {
      throw InputError("graph6: nonzero padding bits");
    }
  }
  return Graph::from_edges(n, edges);
}

std::string to_graph6(const Graph& g) {
  const std::uint64_t n = g.order();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + kGraph6Bias));
  } else if (n <= 258047) {
    out.push_back(126);
    for (int shift : {12, 6, 0}) out.push_back(static_cast<char>(((n >> shift) & 63) + kGraph6Bias));
  } else {
    out.append(2, static_cast<char>(126));
    for (int shift : {30, 24, 18, 12, 6, 0}) {
      out.push_back(static_cast<char>(((n >> shift) & 63) + kGraph6Bias));
    }
  }
  const std::uint64_t bits = n * (n - 1) / 2;
  std::vector<unsigned char> body((bits + 5) / 6, 0);
  std::uint64_t bit = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i, ++bit) {
      if (g.has_edge(i, j)) body[bit / 6] |= static_cast<unsigned char>(1U << (5 - bit % 6));
    }
  }
  for (unsigned char b : body) out.push_back(static_cast<char>(b + kGraph6Bias));
  return out;
}

std::vector<Graph> parse_graph6_file(std::string_view text) {
  std::vector<Graph> graphs;
  for_each_line(text, [&](std::size_t line_no, std::string_view line) {
    if (trim(line).empty()) return;
    try {
      graphs.push_back(parse_graph6(line));
    } catch (const ParseError&) {
      throw;
    } catch (const InputError& e) {
      throw ParseError(line_no, e.what());
    }
  });
  if (graphs.empty()) throw InputError("graph6 file contains no graphs");
  return graphs;
}

}  // namespace estrada
