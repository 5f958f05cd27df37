#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace estrada {

using Vertex = std::uint32_t;
using Edge = std::pair<Vertex, Vertex>;

/// Simple undirected graph on vertices 0..n-1 stored as sorted neighbor lists.
///
/// Construction rejects self-loops and out-of-range endpoints and collapses
/// duplicate edges, so every instance satisfies: no loops, no repeated
/// neighbors, symmetric adjacency and sum of degrees == 2m.
class Graph {
 public:
  /// Edgeless graph on n vertices. Throws InputError for n == 0.
  explicit Graph(std::size_t n);

  /// Throws InputError on a self-loop or an endpoint >= n.
  static Graph from_edges(std::size_t n, std::span<const Edge> edges);

  std::size_t order() const noexcept { return adjacency_.size(); }
  std::size_t size() const noexcept { return edge_count_; }

  std::span<const Vertex> neighbors(Vertex v) const { return adjacency_.at(v); }
  std::size_t degree(Vertex v) const { return adjacency_.at(v).size(); }
  bool has_edge(Vertex u, Vertex v) const;

  /// Edges as (u, v) with u < v in lexicographic order.
  std::vector<Edge> edges() const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  Graph() = default;

  std::vector<std::vector<Vertex>> adjacency_;
  std::size_t edge_count_ = 0;
};

/// Walk counts d_k(i) for one k.
///
/// In exact mode `counts` holds the integer walk counts, `values` is the same
/// vector as doubles and `log_scale` is 0. Once the counts would overflow
/// 64 bits the vector switches to normalized mode: `values` has unit 2-norm
/// and d_k(i) = values[i] * exp(log_scale).
struct KDegreeVector {
  std::size_t k = 0;
  std::vector<double> values;
  double log_scale = 0.0;
  std::optional<std::vector<std::uint64_t>> counts;

  bool exact() const noexcept { return counts.has_value(); }
  /// d_k(i) as a double (may overflow to inf in normalized mode for huge k).
  double walk_count(std::size_t i) const;
};

/// d_k(i) = number of walks of length k starting at i.
KDegreeVector k_degrees(const Graph& g, std::size_t k);

/// Number of triangles, by sorted neighbor-list intersection.
std::uint64_t triangle_count(const Graph& g);

struct Bipartition {
  std::vector<Vertex> first;   // contains every component root and isolated vertices
  std::vector<Vertex> second;

  friend bool operator==(const Bipartition&, const Bipartition&) = default;
};

/// BFS two-colouring per component; nullopt if an odd cycle exists.
std::optional<Bipartition> is_bipartite(const Graph& g);

/// Connected component id per vertex, numbered by smallest member.
std::vector<std::size_t> connected_components(const Graph& g);
bool is_connected(const Graph& g);

}  // namespace estrada
