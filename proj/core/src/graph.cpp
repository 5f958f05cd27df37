#include "estrada/graph.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <queue>
#include <string>

#include "estrada/error.hpp"

namespace estrada {

Graph::Graph(std::size_t n) : adjacency_(n) {
  if (n == 0) throw InputError("graph must have at least one vertex");
  if (n > std::numeric_limits<Vertex>::max()) throw InputError("graph too large");
}

Graph Graph::from_edges(std::size_t n, std::span<const Edge> edges) {
  Graph g(n);
  for (const auto& [u, v] : edges) {
    if (u >= n || v >= n) {
      throw InputError("edge (" + std::to_string(u) + ", " + std::to_string(v) +
                       ") out of range for " + std::to_string(n) + " vertices");
    }
    if (u == v) throw InputError("self-loop at vertex " + std::to_string(u));
    g.adjacency_[u].push_back(v);
    g.adjacency_[v].push_back(u);
  }
  std::size_t degree_sum = 0;
  for (auto& nbrs : g.adjacency_) {
    std::sort(nbrs.begin(), nbrs.end());
    nbrs.erase(std::unique(nbrs.begin(), nbrs.end()), nbrs.end());
    nbrs.shrink_to_fit();
    degree_sum += nbrs.size();
  }
  g.edge_count_ = degree_sum / 2;
  return g;
}

bool Graph::has_edge(Vertex u, Vertex v) const {
  const auto& nbrs = adjacency_.at(u);
  return std::binary_search(nbrs.begin(), nbrs.end(), v);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (Vertex u = 0; u < adjacency_.size(); ++u) {
    for (Vertex v : adjacency_[u]) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

double KDegreeVector::walk_count(std::size_t i) const {
  if (counts) return static_cast<double>((*counts)[i]);
  return values[i] * std::exp(log_scale);
}

namespace {

// Normalizes to unit 2-norm and returns the norm (0 leaves x untouched).
double normalize(std::vector<double>& x) {
  double sq = 0.0;
  for (double v : x) sq += v * v;
  const double norm = std::sqrt(sq);
  if (norm > 0.0) {
    for (double& v : x) v /= norm;
  }
  return norm;
}

}  // namespace

KDegreeVector k_degrees(const Graph& g, std::size_t k) {
  const std::size_t n = g.order();
  std::vector<std::uint64_t> exact(n, 1);
  std::size_t step = 0;
  bool overflow = false;
  for (; step < k; ++step) {
    std::vector<std::uint64_t> next(n, 0);
    for (Vertex i = 0; i < n && !overflow; ++i) {
      std::uint64_t acc = 0;
      for (Vertex j : g.neighbors(i)) {
        if (__builtin_add_overflow(acc, exact[j], &acc)) {
          overflow = true;
          break;
        }
      }
      next[i] = acc;
    }
    if (overflow) break;
    exact = std::move(next);
  }

  KDegreeVector out;
  out.k = k;
  if (!overflow) {
    out.values.assign(exact.begin(), exact.end());
    out.counts = std::move(exact);
    return out;
  }

  // Continue from d_step in normalized form.
  std::vector<double> cur(exact.begin(), exact.end());
  double log_scale = std::log(normalize(cur));
  std::vector<double> next(n);
  for (; step < k; ++step) {
    for (Vertex i = 0; i < n; ++i) {
      double acc = 0.0;
      for (Vertex j : g.neighbors(i)) acc += cur[j];
      next[i] = acc;
    }
    log_scale += std::log(normalize(next));
    cur.swap(next);
  }
  out.values = std::move(cur);
  out.log_scale = log_scale;
  return out;
}

std::uint64_t triangle_count(const Graph& g) {
  std::uint64_t total = 0;
  for (Vertex u = 0; u < g.order(); ++u) {
    const auto nu = g.neighbors(u);
    for (Vertex v : nu) {
      if (v <= u) continue;
      const auto nv = g.neighbors(v);
      // Count common neighbours w > v so each triangle u < v < w is seen once.
      auto a = std::upper_bound(nu.begin(), nu.end(), v);
      auto b = std::upper_bound(nv.begin(), nv.end(), v);
      while (a != nu.end() && b != nv.end()) {
        if (*a < *b) {
          ++a;
        } else if (*b < *a) {
          ++b;
        } else {
          ++total;
          ++a;
          ++b;
        }
      }
    }
  }
  return total;
}

std::optional<Bipartition> is_bipartite(const Graph& g) {
  const std::size_t n = g.order();
  std::vector<int> colour(n, -1);
  std::queue<Vertex> frontier;
  for (Vertex root = 0; root < n; ++root) {
    if (colour[root] != -1) continue;
    colour[root] = 0;
    frontier.push(root);
    while (!frontier.empty()) {
      const Vertex u = frontier.front();
      frontier.pop();
      for (Vertex v : g.neighbors(u)) {
        if (colour[v] == -1) {
          colour[v] = 1 - colour[u];
          frontier.push(v);
        } else if (colour[v] == colour[u]) {
          return std::nullopt;
        }
      }
    }
  }
  Bipartition parts;
  for (Vertex v = 0; v < n; ++v) (colour[v] == 0 ? parts.first : parts.second).push_back(v);
  return parts;
}

std::vector<std::size_t> connected_components(const Graph& g) {
  const std::size_t n = g.order();
  constexpr auto unseen = std::numeric_limits<std::size_t>::max();
  std::vector<std::size_t> id(n, unseen);
  std::vector<Vertex> stack;
  std::size_t next_id = 0;
  for (Vertex root = 0; root < n; ++root) {
    if (id[root] != unseen) continue;
    id[root] = next_id;
    stack.push_back(root);
    while (!stack.empty()) {
      const Vertex u = stack.back();
      stack.pop_back();
      for (Vertex v : g.neighbors(u)) {
        if (id[v] == unseen) {
          id[v] = next_id;
          stack.push_back(v);
        }
      }
    }
    ++next_id;
  }
  return id;
}

bool is_connected(const Graph& g) {
  const auto ids = connected_components(g);
  return std::all_of(ids.begin(), ids.end(), [](std::size_t c) { return c == 0; });
}

}  // namespace estrada
