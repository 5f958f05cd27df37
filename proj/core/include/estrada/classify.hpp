#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>

#include "estrada/graph.hpp"

namespace estrada {

/// Nonnegative rational in lowest terms; den > 0.
struct Ratio {
  std::uint64_t num = 0;
  std::uint64_t den = 1;

  static Ratio make(std::uint64_t num, std::uint64_t den);
  double value() const noexcept { return static_cast<double>(num) / static_cast<double>(den); }
  std::string str() const;

  friend bool operator==(const Ratio&, const Ratio&) = default;
};

/// Membership in the degree-based graph classes.
///
/// Pairs are reported larger value first. Ratio tests use integer
/// cross-multiplication only. A vertex of degree 0 makes every class false,
/// except for the edgeless graph which is 0-regular and belongs to every
/// class with parameter 0.
struct GraphClassification {
  std::optional<std::uint64_t> regular;                            // r
  std::optional<std::pair<std::uint64_t, std::uint64_t>> semiregular;  // (a, b)
  std::optional<Ratio> pseudoregular;                              // mu: d2 = mu d
  std::optional<Ratio> semipseudoregular;                          // mu: d3 = mu d
  std::optional<std::pair<Ratio, Ratio>> pseudosemiregular;        // {d2/d} per edge = {a, b}
  std::optional<Bipartition> bipartition;
  bool connected = false;

  bool bipartite() const noexcept { return bipartition.has_value(); }
  bool strictly_semiregular() const noexcept { return semiregular && !regular; }
  bool strictly_semipseudoregular() const noexcept { return semipseudoregular && !pseudoregular; }
  bool strictly_pseudosemiregular() const noexcept { return pseudosemiregular && !pseudoregular; }

  friend bool operator==(const GraphClassification&, const GraphClassification&) = default;
};

GraphClassification classify(const Graph& g);

/// Side sizes (p, q), p <= q, when g is K_{p,q}: connected, bipartite and m == p*q.
std::optional<std::pair<std::size_t, std::size_t>> complete_bipartite_sides(const Graph& g);

}  // namespace estrada
