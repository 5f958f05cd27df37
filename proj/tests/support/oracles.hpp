#pragma once

// Test-only reference computations. Nothing here calls into the estrada
// algorithms it is used to check, other than Graph accessors.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "estrada/graph.hpp"
#include "estrada/matrix.hpp"

namespace estrada::testing {

/// Dense 0/1 adjacency built from has_edge.
inline std::vector<std::vector<std::uint64_t>> dense_adjacency(const Graph& g) {
  const std::size_t n = g.order();
  std::vector<std::vector<std::uint64_t>> a(n, std::vector<std::uint64_t>(n, 0));
  for (Vertex i = 0; i < n; ++i)
    for (Vertex j = 0; j < n; ++j)
      if (i != j && g.has_edge(i, j)) a[i][j] = 1;
  return a;
}

/// Entry i of A^k * 1, by repeated dense matrix-matrix products.
inline std::vector<std::uint64_t> brute_force_walks(const Graph& g, std::size_t k) {
  const auto a = dense_adjacency(g);
  const std::size_t n = g.order();
  std::vector<std::vector<std::uint64_t>> power(n, std::vector<std::uint64_t>(n, 0));
  for (std::size_t i = 0; i < n; ++i) power[i][i] = 1;
  for (std::size_t step = 0; step < k; ++step) {
    std::vector<std::vector<std::uint64_t>> next(n, std::vector<std::uint64_t>(n, 0));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t l = 0; l < n; ++l)
        if (power[i][l])
          for (std::size_t j = 0; j < n; ++j) next[i][j] += power[i][l] * a[l][j];
    power = std::move(next);
  }
  std::vector<std::uint64_t> out(n, 0);
  for (std::size_t i = 0; i < n; ++i) out[i] = std::accumulate(power[i].begin(), power[i].end(), std::uint64_t{0});
  return out;
}

/// graph6 written from its definition: upper-triangle bits column by column,
/// as a '0'/'1' string, padded with zeros to a multiple of 6, each group of 6
/// read big-endian plus 63. Short header only (n <= 62).
inline std::string reference_graph6(std::size_t n, const std::set<std::pair<std::size_t, std::size_t>>& edges) {
  std::string bits;
  for (std::size_t j = 1; j < n; ++j)
    for (std::size_t i = 0; i < j; ++i) bits += edges.count({i, j}) ? '1' : '0';
  while (bits.size() % 6 != 0) bits += '0';
  std::string out(1, static_cast<char>(n + 63));
  for (std::size_t p = 0; p < bits.size(); p += 6) {
    out += static_cast<char>(std::stoi(bits.substr(p, 6), nullptr, 2) + 63);
  }
  return out;
}

/// All unordered pairs (i < j) of 0..n-1 in a fixed order; bit b of a mask selects pair b.
inline std::vector<std::pair<Vertex, Vertex>> all_pairs(std::size_t n) {
  std::vector<std::pair<Vertex, Vertex>> pairs;
  for (Vertex i = 0; i < n; ++i)
    for (Vertex j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
  return pairs;
}

inline Graph graph_from_mask(std::size_t n, std::uint64_t mask) {
  const auto pairs = all_pairs(n);
  std::vector<Edge> edges;
  for (std::size_t b = 0; b < pairs.size(); ++b)
    if ((mask >> b) & 1U) edges.push_back(pairs[b]);
  return Graph::from_edges(n, edges);
}

inline bool mask_connected(std::size_t n, std::uint64_t mask,
                           const std::vector<std::pair<Vertex, Vertex>>& pairs) {
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::size_t components = n;
  for (std::size_t b = 0; b < pairs.size(); ++b) {
    if (!((mask >> b) & 1U)) continue;
    const auto a = find(pairs[b].first), c = find(pairs[b].second);
    if (a != c) parent[a] = c, --components;
  }
  return components == 1;
}

/// One representative per isomorphism class of connected graphs on n vertices,
/// found by brute force: the canonical form is the smallest edge mask over all
/// vertex permutations. Counts for n = 1..6 are 1, 1, 2, 6, 21, 112.
inline std::vector<Graph> connected_graphs(std::size_t n) {
  const auto pairs = all_pairs(n);
  std::vector<std::vector<std::size_t>> pair_index(n, std::vector<std::size_t>(n));
  for (std::size_t b = 0; b < pairs.size(); ++b) {
    pair_index[pairs[b].first][pairs[b].second] = b;
    pair_index[pairs[b].second][pairs[b].first] = b;
  }
  std::vector<std::vector<std::size_t>> perm_maps;  // perm_maps[p][b] = image of pair b
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    std::vector<std::size_t> map(pairs.size());
    for (std::size_t b = 0; b < pairs.size(); ++b) {
      map[b] = pair_index[perm[pairs[b].first]][perm[pairs[b].second]];
    }
    perm_maps.push_back(std::move(map));
  } while (std::next_permutation(perm.begin(), perm.end()));

  std::set<std::uint64_t> canonical;
  const std::uint64_t total = std::uint64_t{1} << pairs.size();
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    if (!mask_connected(n, mask, pairs)) continue;
    std::uint64_t best = mask;
    for (const auto& map : perm_maps) {
      std::uint64_t image = 0;
      for (std::size_t b = 0; b < pairs.size(); ++b)
        if ((mask >> b) & 1U) image |= std::uint64_t{1} << map[b];
      best = std::min(best, image);
    }
    canonical.insert(best);
  }
  std::vector<Graph> out;
  for (auto mask : canonical) out.push_back(graph_from_mask(n, mask));
  return out;
}

/// Random tree (vertex v attaches to a uniform earlier vertex) plus each
/// remaining pair independently with probability p.
inline Graph random_connected_graph(std::size_t n, double p, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::vector<Edge> edges;
  for (Vertex v = 1; v < n; ++v) {
    std::uniform_int_distribution<Vertex> pick(0, v - 1);
    edges.emplace_back(pick(rng), v);
  }
  for (Vertex i = 0; i < n; ++i)
    for (Vertex j = i + 1; j < n; ++j)
      if (unit(rng) < p) edges.emplace_back(i, j);
  return Graph::from_edges(n, edges);
}

/// Any simple graph: each pair with probability p (may be disconnected).
inline Graph random_graph(std::size_t n, double p, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::vector<Edge> edges;
  for (Vertex i = 0; i < n; ++i)
    for (Vertex j = i + 1; j < n; ++j)
      if (unit(rng) < p) edges.emplace_back(i, j);
  return Graph::from_edges(n, edges);
}

/// Entries uniform in [0,1], then (B + B^T) / 2.
inline std::vector<double> random_symmetric_entries(std::size_t ell, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::vector<double> b(ell * ell);
  for (double& x : b) x = unit(rng);
  std::vector<double> s(ell * ell);
  for (std::size_t i = 0; i < ell; ++i)
    for (std::size_t j = 0; j < ell; ++j) s[i * ell + j] = 0.5 * (b[i * ell + j] + b[j * ell + i]);
  return s;
}

/// Eigenvalues (descending) from Eigen's self-adjoint solver.
inline std::vector<double> reference_eigenvalues(const SymNonnegMatrix& r) {
  const auto n = static_cast<Eigen::Index>(r.order());
  Eigen::MatrixXd m(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) m(i, j) = r(i, j);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(m, Eigen::EigenvaluesOnly);
  std::vector<double> out(solver.eigenvalues().data(), solver.eigenvalues().data() + n);
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

inline double rel_err(double a, double b) { return std::abs(a - b) / std::max(1.0, std::abs(b)); }

}  // namespace estrada::testing
