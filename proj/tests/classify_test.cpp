#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <set>

#include "estrada/classify.hpp"
#include "estrada/generators.hpp"
#include "support/oracles.hpp"

namespace estrada {
namespace {

using Pair = std::pair<std::uint64_t, std::uint64_t>;

// Fractions compared by cross multiplication on walk counts from dense powers.
bool eq_frac(Pair a, Pair b) { return a.first * b.second == b.first * a.second; }

struct OracleClasses {
  bool regular = false, semiregular = false, pseudoregular = false, semipseudoregular = false,
       pseudosemiregular = false;
};

OracleClasses oracle(const Graph& g) {
  const auto d = testing::brute_force_walks(g, 1);
  const auto d2 = testing::brute_force_walks(g, 2);
  const auto d3 = testing::brute_force_walks(g, 3);
  OracleClasses o;
  const auto edges = g.edges();
  o.regular = std::set<std::uint64_t>(d.begin(), d.end()).size() == 1;
  if (edges.empty()) {
    o.semiregular = o.pseudoregular = o.semipseudoregular = o.pseudosemiregular = true;
    return o;
  }
  if (std::count(d.begin(), d.end(), 0u)) return o;
  std::set<Pair> deg_pairs;
  for (auto [u, v] : edges) deg_pairs.insert(std::minmax(d[u], d[v]));
  o.semiregular = deg_pairs.size() == 1;
  o.pseudoregular = o.semipseudoregular = true;
  for (std::size_t i = 0; i < g.order(); ++i) {
    o.pseudoregular &= eq_frac({d2[i], d[i]}, {d2[0], d[0]});
    o.semipseudoregular &= eq_frac({d3[i], d[i]}, {d3[0], d[0]});
  }
  o.pseudosemiregular = true;
  const Pair a0{d2[edges[0].first], d[edges[0].first]};
  const Pair b0{d2[edges[0].second], d[edges[0].second]};
  for (auto [u, v] : edges) {
    const Pair a{d2[u], d[u]}, b{d2[v], d[v]};
    const bool same = (eq_frac(a, a0) && eq_frac(b, b0)) || (eq_frac(a, b0) && eq_frac(b, a0));
    o.pseudosemiregular &= same;
  }
  return o;
}

void expect_matches_oracle(const Graph& g) {
  const auto c = classify(g);
  const auto o = oracle(g);
  EXPECT_EQ(c.regular.has_value(), o.regular);
  EXPECT_EQ(c.semiregular.has_value(), o.semiregular);
  EXPECT_EQ(c.pseudoregular.has_value(), o.pseudoregular);
  EXPECT_EQ(c.semipseudoregular.has_value(), o.semipseudoregular);
  EXPECT_EQ(c.pseudosemiregular.has_value(), o.pseudosemiregular);
}

TEST(Classify, CompleteGraphK4) {
  const auto c = classify(complete_graph(4));
  EXPECT_EQ(c.regular, 3u);
  EXPECT_EQ(c.pseudoregular, Ratio::make(3, 1));
  EXPECT_EQ(c.semipseudoregular, Ratio::make(9, 1));
  EXPECT_FALSE(c.bipartite());
  EXPECT_TRUE(c.connected);
  EXPECT_FALSE(c.strictly_semiregular());
}

TEST(Classify, CompleteBipartiteK23) {
  const auto c = classify(complete_bipartite_graph(2, 3));
  EXPECT_FALSE(c.regular);
  EXPECT_EQ(c.semiregular, (Pair{3, 2}));
  EXPECT_TRUE(c.strictly_semiregular());
  EXPECT_TRUE(c.bipartite());
  EXPECT_FALSE(c.pseudoregular);
  EXPECT_EQ(c.semipseudoregular, Ratio::make(6, 1));
  ASSERT_TRUE(c.pseudosemiregular);
  EXPECT_EQ(c.pseudosemiregular->first, Ratio::make(3, 1));
  EXPECT_EQ(c.pseudosemiregular->second, Ratio::make(2, 1));
}

TEST(Classify, PathP4AgainstDirectPredicates) {
  // d = (1,2,2,1), d2 = (2,3,3,2): d2/d = (2, 3/2, 3/2, 2) is neither constant
  // nor the same unordered pair across every edge.
  const auto g = path_graph(4);
  const auto c = classify(g);
  EXPECT_FALSE(c.regular);
  EXPECT_FALSE(c.semiregular);
  EXPECT_FALSE(c.pseudoregular);
  EXPECT_FALSE(c.pseudosemiregular);
  EXPECT_FALSE(c.semipseudoregular);
  expect_matches_oracle(g);
}

TEST(Classify, Star) {
  const auto c = classify(star_graph(5));
  EXPECT_EQ(c.semiregular, (Pair{4, 1}));
  EXPECT_TRUE(c.bipartite());
  EXPECT_FALSE(c.pseudoregular);
  EXPECT_EQ(c.semipseudoregular, Ratio::make(4, 1));
  EXPECT_TRUE(c.strictly_semipseudoregular());
  EXPECT_TRUE(c.strictly_pseudosemiregular());
  expect_matches_oracle(star_graph(5));
}

TEST(Classify, BalancedCompleteBipartiteIsRegular) {
  const auto c = classify(complete_bipartite_graph(3, 3));
  EXPECT_EQ(c.regular, 3u);
  EXPECT_FALSE(c.strictly_semiregular());
  EXPECT_FALSE(c.strictly_pseudosemiregular());
}

TEST(Classify, EdgelessAndIsolatedVertex) {
  const auto e = classify(Graph(3));
  EXPECT_EQ(e.regular, 0u);
  EXPECT_EQ(e.pseudoregular, Ratio::make(0, 1));
  EXPECT_FALSE(e.connected);

  const std::vector<Edge> edges{{0, 1}};
  const auto c = classify(Graph::from_edges(3, edges));
  EXPECT_FALSE(c.regular);
  EXPECT_FALSE(c.semiregular);
  EXPECT_FALSE(c.pseudoregular);
  EXPECT_TRUE(c.bipartite());
}

TEST(Classify, RationalParameters) {
  // P3: d2/d = (2, 1, 2).
  const auto p = path_graph(3);
  const auto c = classify(p);
  ASSERT_TRUE(c.pseudosemiregular);
  EXPECT_EQ(c.pseudosemiregular->first, Ratio::make(2, 1));
  EXPECT_EQ(c.pseudosemiregular->second, Ratio::make(1, 1));
  EXPECT_EQ(Ratio::make(6, 4).str(), "3/2");
  EXPECT_EQ(Ratio::make(6, 3).str(), "2");
}

TEST(Classify, MatchesOracleOnAllGraphsUpToSix) {
  for (std::size_t n = 1; n <= 6; ++n) {
    const std::uint64_t total = std::uint64_t{1} << (n * (n - 1) / 2);
    for (std::uint64_t mask = 0; mask < total; ++mask) {
      expect_matches_oracle(testing::graph_from_mask(n, mask));
      if (HasFailure()) return;
    }
  }
}

TEST(Classify, Implications) {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 300; ++trial) {
    const auto g = testing::random_connected_graph(2 + trial % 14, 0.1 * (trial % 7), rng);
    const auto c = classify(g);
    if (c.regular) {
      EXPECT_TRUE(c.pseudoregular);
      EXPECT_EQ(c.pseudoregular->num, *c.regular);
      EXPECT_TRUE(c.semiregular);
    }
    if (c.semiregular) {
      ASSERT_TRUE(c.semipseudoregular);
      EXPECT_EQ(*c.semipseudoregular,
                Ratio::make(c.semiregular->first * c.semiregular->second, 1));
    }
    if (c.pseudoregular) EXPECT_TRUE(c.semipseudoregular);
    if (c.pseudoregular) EXPECT_TRUE(c.pseudosemiregular);
    expect_matches_oracle(g);
  }
}

TEST(Classify, CompleteBipartiteSides) {
  EXPECT_EQ(complete_bipartite_sides(complete_bipartite_graph(3, 2)), (std::pair<std::size_t, std::size_t>{2, 3}));
  EXPECT_EQ(complete_bipartite_sides(star_graph(4)), (std::pair<std::size_t, std::size_t>{1, 3}));
  EXPECT_FALSE(complete_bipartite_sides(path_graph(4)));
  EXPECT_FALSE(complete_bipartite_sides(complete_graph(3)));
  EXPECT_FALSE(complete_bipartite_sides(Graph(2)));
}

}  // namespace
}  // namespace estrada
