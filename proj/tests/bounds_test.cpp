#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "estrada/bounds.hpp"
#include "estrada/error.hpp"
#include "estrada/generators.hpp"
#include "estrada/spectral.hpp"
#include "support/oracles.hpp"

namespace estrada {
namespace {

double exact_lambda1(const Graph& g) {
  return testing::reference_eigenvalues(adjacency_matrix(g)).front();
}

double exact_ee(const SymNonnegMatrix& r) {
  double ee = 0.0;
  auto ev = testing::reference_eigenvalues(r);
  std::sort(ev.begin(), ev.end());
  for (double x : ev) ee += std::exp(x);
  return ee;
}

TEST(GammaSequence, PathP4) {
  const auto seq = gamma_sequence(path_graph(4));
  ASSERT_GE(seq.values.size(), 3u);
  EXPECT_NEAR(seq.values[0], std::sqrt(10.0 / 4.0), 1e-12);
  EXPECT_NEAR(seq.values[1], std::sqrt(26.0 / 10.0), 1e-12);
  EXPECT_EQ(seq.terminated_by, Termination::converged);
  EXPECT_NEAR(seq.final_estimate(), (1.0 + std::sqrt(5.0)) / 2.0, 1e-6);
  EXPECT_NEAR(seq.final_estimate(), exact_lambda1(path_graph(4)), 1e-6);
}

TEST(GammaSequence, ConstantForRegularAndCompleteBipartite) {
  for (double v : gamma_sequence(complete_graph(4)).values) EXPECT_NEAR(v, 3.0, 1e-12);
  for (double v : gamma_sequence(complete_bipartite_graph(2, 3)).values) EXPECT_NEAR(v, std::sqrt(6.0), 1e-10);
}

TEST(GammaSequence, EdgelessStopsOnZeroIterate) {
  const auto seq = gamma_sequence(Graph(3));
  EXPECT_EQ(seq.terminated_by, Termination::zero_iterate);
  EXPECT_EQ(seq.values, std::vector<double>{0.0});
}

TEST(GammaSequence, KmaxAndTolerance) {
  const auto seq = gamma_sequence(path_graph(30), 5);
  EXPECT_EQ(seq.values.size(), 6u);
  EXPECT_EQ(seq.terminated_by, Termination::kmax_reached);
  EXPECT_THROW(gamma_sequence(path_graph(3), 10, 0.0), InputError);
  EXPECT_THROW(gamma_sequence(path_graph(3), 10, -1.0), InputError);
}

TEST(GammaSequence, MatchesWalkCountDefinition) {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 50; ++trial) {
    const auto g = testing::random_connected_graph(3 + trial % 10, 0.3, rng);
    const auto seq = gamma_sequence(g, 6, 1e-300);
    for (std::size_t k = 0; k < std::min<std::size_t>(seq.values.size(), 6); ++k) {
      const auto a = testing::brute_force_walks(g, k);
      const auto b = testing::brute_force_walks(g, k + 1);
      long double sa = 0, sb = 0;
      for (auto x : a) sa += static_cast<long double>(x) * x;
      for (auto x : b) sb += static_cast<long double>(x) * x;
      EXPECT_NEAR(seq.values[k], static_cast<double>(std::sqrt(sb / sa)), 1e-12 * seq.values[k]);
    }
  }
}

TEST(XiSequence, Examples) {
  for (double v : xi_sequence(adjacency_matrix(complete_graph(4))).values) EXPECT_NEAR(v, 3.0, 1e-12);
  for (double v : xi_sequence(SymNonnegMatrix::identity(4)).values) EXPECT_NEAR(v, 1.0, 1e-15);
  std::mt19937_64 rng(5);
  auto entries = testing::random_symmetric_entries(5, rng);
  for (std::size_t i = 0; i < 5; ++i) entries[i * 5 + i] = 0.0;
  const auto r = SymNonnegMatrix::from_dense(5, entries);
  const auto seq = xi_sequence(r);
  for (std::size_t k = 1; k < seq.values.size(); ++k)
    EXPECT_GE(seq.values[k], seq.values[k - 1] * (1 - 1e-12));
  EXPECT_NEAR(seq.final_estimate(), testing::reference_eigenvalues(r).front(), 1e-7);
}

TEST(BoundFunctions, Examples) {
  EXPECT_NEAR(bound_general(3.0, 4), 20.086, 5e-3);
  EXPECT_EQ(bound_general(0.0, 7), 7.0);
  EXPECT_THROW(bound_general(-0.1, 4), DomainError);

  // 2cosh(sqrt(2.5)) + 2 evaluated directly; the value 6.2792 belongs to the general form.
  EXPECT_NEAR(bound_bipartite(std::sqrt(2.5), 4), 2.0 * std::cosh(std::sqrt(2.5)) + 2.0, 1e-12);
  EXPECT_NEAR(bound_bipartite(std::sqrt(2.5), 4), 7.06623, 5e-5);
  EXPECT_NEAR(bound_general(std::sqrt(2.5), 4), 6.2792, 5e-4);
  EXPECT_NEAR(bound_bipartite(std::sqrt(6.0), 5), 14.669, 5e-3);
  EXPECT_EQ(bound_bipartite(0.0, 6), 6.0);

  for (std::size_t ell = 1; ell <= 3; ++ell) {
    const double b = bound_matrix(1.0, ell, static_cast<double>(ell));
    EXPECT_NEAR(b, std::exp(1.0) + 2.0 * ell - 2.0, 1e-12);
    EXPECT_LE(b, ell * std::exp(1.0) + 1e-12);
  }
  EXPECT_EQ(bound_matrix(0.0, 4, 0.0), 4.0);
}

TEST(BoundTable, CompleteGraphK4) {
  const auto t = bound_table_graph(complete_graph(4));
  EXPECT_FALSE(t.has_bipartite_column());
  EXPECT_NEAR(t.exact_ee, 21.189, 5e-3);
  for (const auto& row : t.rows) {
    EXPECT_NEAR(row.bounds.general, 20.086, 5e-3);
    EXPECT_LT(row.bounds.general, t.exact_ee);
  }
}

TEST(BoundTable, PathP4) {
  const auto t = bound_table_graph(path_graph(4));
  ASSERT_TRUE(t.has_bipartite_column());
  EXPECT_NEAR(t.rows[0].bounds.general, 6.27935, 5e-5);
  EXPECT_NEAR(t.rows[1].bounds.general, 6.40264, 5e-5);
  EXPECT_NEAR(*t.rows[0].bounds.bipartite, 7.06623, 5e-5);
  EXPECT_NEAR(*t.rows[1].bounds.bipartite, 7.21449, 5e-5);
  const double lambda1 = exact_lambda1(path_graph(4));
  EXPECT_NEAR(t.at_radius.general, std::exp(lambda1) + 3.0 - lambda1, 1e-9);
  EXPECT_NEAR(t.exact_ee, exact_ee(adjacency_matrix(path_graph(4))), 1e-12);
  for (std::size_t k = 1; k < t.rows.size(); ++k) {
    EXPECT_GE(*t.rows[k].bounds.bipartite, *t.rows[k - 1].bounds.bipartite);
  }
  EXPECT_LT(*t.rows.back().bounds.bipartite, t.exact_ee);
}

TEST(BoundTable, CompleteBipartiteEquality) {
  const auto t = bound_table_graph(complete_bipartite_graph(2, 3));
  ASSERT_TRUE(t.has_bipartite_column());
  for (const auto& row : t.rows) {
    EXPECT_NEAR(row.seq_value, std::sqrt(6.0), 1e-10);
    EXPECT_LE(std::abs(t.exact_ee - *row.bounds.bipartite), 1e-8);
  }
  EXPECT_NEAR(t.exact_ee, 14.669, 5e-3);
}

TEST(BoundTable, HypothesisGuards) {
  const std::vector<Edge> edges{{0, 1}, {2, 3}};
  EXPECT_THROW(bound_table_graph(Graph::from_edges(4, edges)), HypothesisError);
  EXPECT_THROW(bound_table_graph(complete_graph(4), kDefaultKmax, kDefaultTol, BipartiteColumn::required),
               HypothesisError);
  EXPECT_THROW(bound_table_graph(complete_graph(2), kDefaultKmax, kDefaultTol, BipartiteColumn::required),
               HypothesisError);
  EXPECT_NO_THROW(bound_table_graph(path_graph(3), kDefaultKmax, kDefaultTol, BipartiteColumn::required));
}

TEST(BoundTable, SingleVertex) {
  const auto t = bound_table_graph(Graph(1));
  EXPECT_EQ(t.exact_ee, 1.0);
  EXPECT_EQ(t.terminated_by, Termination::zero_iterate);
  EXPECT_EQ(t.rows.front().bounds.general, 1.0);
}

TEST(BoundTable, MonotoneAndValidOnRandomGraphs) {
  std::mt19937_64 rng(500);
  for (int trial = 0; trial < 500; ++trial) {
    const std::size_t n = 3 + trial % 48;
    const auto g = testing::random_connected_graph(n, 0.02 + 0.3 * (trial % 4) / 3.0, rng);
    const auto t = bound_table_graph(g);
    const double lambda1 = exact_lambda1(g);
    for (std::size_t k = 1; k < t.rows.size(); ++k) {
      ASSERT_GE(t.rows[k].seq_value, t.rows[k - 1].seq_value * (1 - 1e-12));
    }
    EXPECT_LE(t.rows.back().seq_value, lambda1 + 1e-8);
    for (const auto& row : t.rows) {
      EXPECT_LE(row.bounds.tightest(), t.exact_ee * (1 + 1e-9));
      if (row.bounds.bipartite) EXPECT_GE(*row.bounds.bipartite, row.bounds.general);
    }
    EXPECT_GE(t.rows.front().bounds.general, *t.baseline_2m_over_n - 1e-12);
  }
}

TEST(BoundTable, PseudoregularGraphsGiveExactRadius) {
  // gamma is constant at lambda_1 exactly when d_2 = mu d.
  for (const auto& g : {complete_graph(6), cycle_graph(7), complete_bipartite_graph(3, 5), star_graph(6)}) {
    const auto seq = gamma_sequence(g);
    for (double v : seq.values) EXPECT_NEAR(v, exact_lambda1(g), 1e-10);
  }
  // Otherwise gamma^(0) falls strictly below.
  EXPECT_LT(gamma_sequence(path_graph(5)).values[0], exact_lambda1(path_graph(5)) - 1e-3);
}

TEST(BoundTable, ConvergesToRadiusBound) {
  std::mt19937_64 rng(600);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 10 + trial % 30;
    const auto g = testing::random_connected_graph(n, 0.3 + 0.1 * (trial % 5), rng);
    const auto t = bound_table_graph(g);
    ASSERT_EQ(t.terminated_by, Termination::converged);
    const double lambda1 = exact_lambda1(g);
    EXPECT_LE(std::abs(t.rows.back().bounds.general - bound_general(lambda1, n)),
              10 * t.tol * std::exp(lambda1));
  }
}

TEST(Bridge, GammaEqualsXiOnAdjacencyMatrices) {
  std::mt19937_64 rng(700);
  for (int trial = 0; trial < 200; ++trial) {
    const auto g = testing::random_connected_graph(2 + trial % 40, 0.1 + 0.05 * (trial % 8), rng);
    const auto gamma = gamma_sequence(g);
    const auto xi = xi_sequence(adjacency_matrix(g));
    ASSERT_EQ(gamma.values.size(), xi.values.size());
    for (std::size_t k = 0; k < gamma.values.size(); ++k)
      EXPECT_LE(testing::rel_err(xi.values[k], gamma.values[k]), 1e-12);
  }
}

TEST(MatrixTable, SeedInequalityAndValidity) {
  std::mt19937_64 rng(800);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t ell = 1 + trial % 30;
    const auto r = SymNonnegMatrix::from_dense(ell, testing::random_symmetric_entries(ell, rng));
    const auto t = bound_table_matrix(r);
    const double ee = exact_ee(r);
    EXPECT_NEAR(t.exact_ee, ee, 1e-9 * ee);
    EXPECT_GE(t.rows.front().seq_value, frobenius_norm(r) / std::sqrt(static_cast<double>(ell)) - 1e-12);
    for (std::size_t k = 1; k < t.rows.size(); ++k)
      EXPECT_GE(t.rows[k].seq_value, t.rows[k - 1].seq_value * (1 - 1e-12));
    EXPECT_NEAR(t.rows.back().seq_value, testing::reference_eigenvalues(r).front(), 1e-7);
    for (const auto& row : t.rows) {
      EXPECT_LE(*row.bounds.matrix, ee * (1 + 1e-9));
      EXPECT_LE(row.bounds.general, *row.bounds.matrix + 1e-12);
    }
    EXPECT_LE(*t.at_radius.matrix, ee * (1 + 1e-9));
  }
}

TEST(MatrixTable, AdjacencyOfK23MatchesGraphTable) {
  const auto g = complete_bipartite_graph(2, 3);
  const auto tg = bound_table_graph(g);
  const auto tm = bound_table_matrix(adjacency_matrix(g));
  EXPECT_EQ(tm.trace, 0.0);
  ASSERT_EQ(tg.rows.size(), tm.rows.size());
  for (std::size_t k = 0; k < tg.rows.size(); ++k) {
    EXPECT_EQ(*tm.rows[k].bounds.matrix, tg.rows[k].bounds.general);
  }
}

TEST(MatrixTable, ZeroMatrixEquality) {
  const auto t = bound_table_matrix(SymNonnegMatrix(4));
  for (const auto& row : t.rows) EXPECT_EQ(*row.bounds.matrix, 4.0);
  EXPECT_EQ(t.exact_ee, 4.0);
  const auto cert = equality_certificate(SymNonnegMatrix(4), t);
  EXPECT_TRUE(cert.holds_with_equality);
  EXPECT_EQ(cert.theorem, Theorem::matrix);
  EXPECT_EQ(cert.witness, "all non-Perron eigenvalues zero");
}

TEST(MatrixTable, RankOneMatrixAttainsEquality) {
  // u u^T has a single nonzero eigenvalue.
  const std::vector<double> u{0.5, 1.0, 2.0};
  std::vector<double> e;
  for (double a : u)
    for (double b : u) e.push_back(a * b);
  const auto r = SymNonnegMatrix::from_dense(3, e);
  const auto t = bound_table_matrix(r);
  const auto cert = equality_certificate(r, t);
  EXPECT_TRUE(cert.structural);
  EXPECT_TRUE(cert.holds_with_equality);
}

TEST(Certificate, CompleteBipartite) {
  const auto g = complete_bipartite_graph(2, 3);
  const auto cert = equality_certificate(g, bound_table_graph(g));
  EXPECT_EQ(cert.theorem, Theorem::bipartite_graph);
  EXPECT_TRUE(cert.holds_with_equality);
  EXPECT_EQ(cert.witness, "complete bipartite K_{2,3}");
  EXPECT_TRUE(cert.discrepancy.empty());
  for (bool b : cert.attains_radius) EXPECT_TRUE(b);
}

TEST(Certificate, PathP4) {
  const auto g = path_graph(4);
  const auto t = bound_table_graph(g);
  const auto cert = equality_certificate(g, t);
  EXPECT_FALSE(cert.holds_with_equality);
  EXPECT_TRUE(cert.strict_observed());
  EXPECT_NEAR(cert.numeric_gap, t.exact_ee - *t.rows.back().bounds.bipartite, 1e-12);
  EXPECT_NEAR(t.exact_ee - t.at_radius.general, 1.21060, 5e-5);
  EXPECT_FALSE(cert.attains_radius.front());
}

TEST(Certificate, EdgelessAndMismatch) {
  const auto e = Graph(1);
  const auto cert = equality_certificate(e, bound_table_graph(e));
  EXPECT_TRUE(cert.holds_with_equality);
  EXPECT_EQ(cert.witness, "edgeless graph on 1 vertices");
  EXPECT_THROW(equality_certificate(complete_graph(4), bound_table_graph(path_graph(4))), InputError);
  EXPECT_THROW(equality_certificate(complete_graph(4), bound_table_matrix(SymNonnegMatrix(4))),
               InputError);
}

TEST(Certificate, NonCompleteBipartiteIsStrict) {
  const auto g = path_graph(6);
  const auto cert = equality_certificate(g, bound_table_graph(g));
  EXPECT_FALSE(cert.structural);
  EXPECT_FALSE(cert.numeric);
  EXPECT_TRUE(cert.discrepancy.empty());
}

}  // namespace
}  // namespace estrada
