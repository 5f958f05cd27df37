#include "estrada/generators.hpp"

#include <random>
#include <string>

#include "estrada/error.hpp"

namespace estrada {
namespace {

void require_vertices(std::size_t n, const char* family) {
  if (n == 0) throw InputError(std::string(family) + ": n must be at least 1");
}

struct Builder {
  Graph operator()(const family::Complete& f) const { return complete_graph(f.n); }
  Graph operator()(const family::Path& f) const { return path_graph(f.n); }
  Graph operator()(const family::Cycle& f) const { return cycle_graph(f.n); }
  Graph operator()(const family::CompleteBipartite& f) const {
    return complete_bipartite_graph(f.p, f.q);
  }
  Graph operator()(const family::Star& f) const { return star_graph(f.n); }
  Graph operator()(const family::ErdosRenyi& f) const {
    return erdos_renyi_graph(f.n, f.p_edge, f.seed);
  }
};

}  // namespace

Graph generate(const FamilySpec& spec) { return std::visit(Builder{}, spec); }

Graph complete_graph(std::size_t n) {
  require_vertices(n, "complete");
  std::vector<Edge> edges;
  edges.reserve(n * (n - 1) / 2);
  for (Vertex i = 0; i < n; ++i)
    for (Vertex j = i + 1; j < n; ++j) edges.emplace_back(i, j);
  return Graph::from_edges(n, edges);
}

Graph path_graph(std::size_t n) {
  require_vertices(n, "path");
  std::vector<Edge> edges;
  for (Vertex i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  return Graph::from_edges(n, edges);
}

Graph cycle_graph(std::size_t n) {
  if (n < 3) throw InputError("cycle: n must be at least 3");
  std::vector<Edge> edges;
  for (Vertex i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  edges.emplace_back(0, static_cast<Vertex>(n - 1));
  return Graph::from_edges(n, edges);
}

Graph complete_bipartite_graph(std::size_t p, std::size_t q) {
  if (p == 0 || q == 0) throw InputError("complete-bipartite: both sides must be nonempty");
  std::vector<Edge> edges;
  edges.reserve(p * q);
  for (Vertex i = 0; i < p; ++i)
    for (Vertex j = 0; j < q; ++j) edges.emplace_back(i, static_cast<Vertex>(p + j));
  return Graph::from_edges(p + q, edges);
}

Graph star_graph(std::size_t n) {
  require_vertices(n, "star");
  std::vector<Edge> edges;
  for (Vertex i = 1; i < n; ++i) edges.emplace_back(0, i);
  return Graph::from_edges(n, edges);
}

Graph erdos_renyi_graph(std::size_t n, double p_edge, std::uint64_t seed) {
  require_vertices(n, "erdos-renyi");
  if (!(p_edge >= 0.0 && p_edge <= 1.0)) {
    throw InputError("erdos-renyi: edge probability must lie in [0, 1]");
  }
  std::mt19937_64 rng(seed);
  constexpr double kInv53 = 1.0 / 9007199254740992.0;  // 2^-53
  std::vector<Edge> edges;
  for (Vertex i = 0; i < n; ++i) {
    for (Vertex j = i + 1; j < n; ++j) {
      const double u = static_cast<double>(rng() >> 11) * kInv53;
      if (u < p_edge) edges.emplace_back(i, j);
    }
  }
  return Graph::from_edges(n, edges);
}

}  // namespace estrada
