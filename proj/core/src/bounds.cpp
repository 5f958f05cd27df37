#include "estrada/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <string>

#include "estrada/classify.hpp"
#include "estrada/error.hpp"
#include "estrada/spectral.hpp"

namespace estrada {
namespace {

// Shared by the graph and matrix paths so both produce bit-identical values
// for an adjacency matrix: `apply` must sum contributions in ascending column order.
template <typename Apply>
RatioSequence ratio_iteration(SequenceKind kind, std::size_t n, Apply&& apply, std::size_t kmax,
                              double tol) {
  if (!(tol > 0.0)) throw InputError("tol must be positive");
  RatioSequence seq;
  seq.kind = kind;
  seq.tol = tol;

  std::vector<double> v(n, 1.0 / std::sqrt(static_cast<double>(n)));
  std::vector<double> w(n);
  for (std::size_t k = 0;; ++k) {
    apply(v, w);
    double sq = 0.0;
    for (double x : w) sq += x * x;
    const double norm = std::sqrt(sq);
    seq.values.push_back(norm);
    if (norm == 0.0) {
      seq.terminated_by = Termination::zero_iterate;
      break;
    }
    if (k >= 1 && std::abs(seq.values[k] - seq.values[k - 1]) <= tol) {
      seq.terminated_by = Termination::converged;
      break;
    }
    if (k == kmax) {
      seq.terminated_by = Termination::kmax_reached;
      break;
    }
    for (std::size_t i = 0; i < n; ++i) v[i] = w[i] / norm;
  }
  return seq;
}

std::string format_value(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6g", x);
  return buf;
}

void require_table_source(const BoundTable& table, SourceKind kind, std::size_t order,
                          bool matches) {
  if (table.source != kind || table.n_or_ell != order || !matches || table.rows.empty()) {
    throw InputError("bound table was not produced from this " +
                     std::string(to_string(kind)));
  }
}

template <typename Enum, std::size_t N>
Enum enum_from_string(std::string_view s, const std::pair<Enum, std::string_view> (&names)[N],
                      const char* what) {
  for (const auto& [value, name] : names) {
    if (name == s) return value;
  }
  throw InputError(std::string("unknown ") + what + " '" + std::string(s) + "'");
}

constexpr std::pair<SequenceKind, std::string_view> kSequenceKinds[] = {
    {SequenceKind::gamma_graph, "gamma_graph"}, {SequenceKind::xi_matrix, "xi_matrix"}};
constexpr std::pair<Termination, std::string_view> kTerminations[] = {
    {Termination::converged, "converged"},
    {Termination::kmax_reached, "kmax_reached"},
    {Termination::zero_iterate, "zero_iterate"}};
constexpr std::pair<SourceKind, std::string_view> kSourceKinds[] = {
    {SourceKind::graph, "graph"}, {SourceKind::matrix, "matrix"}};
constexpr std::pair<Theorem, std::string_view> kTheorems[] = {
    {Theorem::general_graph, "general_graph"},
    {Theorem::bipartite_graph, "bipartite_graph"},
    {Theorem::matrix, "matrix"}};

template <typename Enum, std::size_t N>
std::string_view enum_name(Enum value, const std::pair<Enum, std::string_view> (&names)[N]) {
  for (const auto& [v, name] : names) {
    if (v == value) return name;
  }
  return "?";
}

}  // namespace

std::string_view to_string(SequenceKind kind) { return enum_name(kind, kSequenceKinds); }
std::string_view to_string(Termination t) { return enum_name(t, kTerminations); }
std::string_view to_string(SourceKind kind) { return enum_name(kind, kSourceKinds); }
std::string_view to_string(Theorem t) { return enum_name(t, kTheorems); }
SequenceKind sequence_kind_from_string(std::string_view s) {
  return enum_from_string(s, kSequenceKinds, "sequence kind");
}
Termination termination_from_string(std::string_view s) {
  return enum_from_string(s, kTerminations, "termination");
}
SourceKind source_kind_from_string(std::string_view s) {
  return enum_from_string(s, kSourceKinds, "source kind");
}
Theorem theorem_from_string(std::string_view s) { return enum_from_string(s, kTheorems, "theorem"); }

RatioSequence gamma_sequence(const Graph& g, std::size_t kmax, double tol) {
  auto apply = [&g](const std::vector<double>& v, std::vector<double>& w) {
    for (Vertex i = 0; i < g.order(); ++i) {
      double acc = 0.0;
      for (Vertex j : g.neighbors(i)) acc += v[j];
      w[i] = acc;
    }
  };
  return ratio_iteration(SequenceKind::gamma_graph, g.order(), apply, kmax, tol);
}

RatioSequence xi_sequence(const SymNonnegMatrix& r, std::size_t kmax, double tol) {
  auto apply = [&r](const std::vector<double>& v, std::vector<double>& w) { r.multiply(v, w); };
  return ratio_iteration(SequenceKind::xi_matrix, r.order(), apply, kmax, tol);
}

double bound_general(double x, std::size_t n) {
  if (!(x >= 0.0)) throw DomainError("bound_general: argument must be nonnegative");
  return std::exp(x) + (static_cast<double>(n) - 1.0) - x;
}

double bound_bipartite(double x, std::size_t n) {
  return 2.0 * std::cosh(x) + (static_cast<double>(n) - 2.0);
}

double bound_matrix(double x, std::size_t ell, double trace) {
  return std::exp(x) + (static_cast<double>(ell) - 1.0) + trace - x;
}

double BoundValues::tightest() const {
  double best = general;
  if (bipartite) best = std::max(best, *bipartite);
  if (matrix) best = std::max(best, *matrix);
  return best;
}

BoundTable bound_table_graph(const Graph& g, std::size_t kmax, double tol,
                             BipartiteColumn bipartite) {
  const auto components = connected_components(g);
  const auto count = *std::max_element(components.begin(), components.end()) + 1;
  if (count > 1) {
    throw HypothesisError("graph is disconnected (" + std::to_string(count) +
                          " components); the bounds require a connected graph, "
                          "run each component separately");
  }
  const std::size_t n = g.order();
  const bool with_bipartite = n > 2 && is_bipartite(g).has_value();
  if (bipartite == BipartiteColumn::required && !with_bipartite) {
    throw HypothesisError("bipartite bound requested but the graph is not bipartite with n > 2");
  }

  BoundTable table;
  table.source = SourceKind::graph;
  table.n_or_ell = n;
  table.edges = g.size();
  table.tol = tol;

  const auto seq = gamma_sequence(g, kmax, tol);
  table.terminated_by = seq.terminated_by;
  for (std::size_t k = 0; k < seq.values.size(); ++k) {
    BoundRow row{k, seq.values[k], {bound_general(seq.values[k], n), std::nullopt, std::nullopt}};
    if (with_bipartite) row.bounds.bipartite = bound_bipartite(seq.values[k], n);
    table.rows.push_back(row);
  }

  const auto spectrum = eigenvalues(adjacency_matrix(g));
  table.exact_ee = estrada_index(spectrum);
  table.spectral_radius = std::max(0.0, spectrum.largest());
  table.at_radius.general = bound_general(table.spectral_radius, n);
  if (with_bipartite) table.at_radius.bipartite = bound_bipartite(table.spectral_radius, n);
  const double mean_degree = 2.0 * static_cast<double>(g.size()) / static_cast<double>(n);
  table.baseline_2m_over_n = bound_general(mean_degree, n);
  return table;
}

BoundTable bound_table_matrix(const SymNonnegMatrix& r, std::size_t kmax, double tol) {
  const std::size_t ell = r.order();
  BoundTable table;
  table.source = SourceKind::matrix;
  table.n_or_ell = ell;
  table.trace = r.trace();
  table.tol = tol;
  table.reducible = !r.irreducible();

  const auto seq = xi_sequence(r, kmax, tol);
  table.terminated_by = seq.terminated_by;
  for (std::size_t k = 0; k < seq.values.size(); ++k) {
    const double x = seq.values[k];
    table.rows.push_back({k, x, {bound_general(x, ell), std::nullopt, bound_matrix(x, ell, r.trace())}});
  }

  const auto spectrum = eigenvalues(r);
  table.exact_ee = estrada_index(spectrum);
  table.spectral_radius = std::max(0.0, spectrum.largest());
  table.at_radius.general = bound_general(table.spectral_radius, ell);
  table.at_radius.matrix = bound_matrix(table.spectral_radius, ell, r.trace());
  return table;
}

namespace {

void finish_certificate(EqualityCertificate& cert, const BoundTable& table) {
  cert.numeric_gap = table.gap(table.rows.back());
  cert.numeric = cert.numeric_gap <=
                 EqualityCertificate::kEqualityTolerance * std::max(1.0, table.exact_ee);
  cert.holds_with_equality = cert.structural && cert.numeric;
  const double radius = table.spectral_radius;
  for (const auto& row : table.rows) {
    cert.attains_radius.push_back(std::abs(row.seq_value - radius) <=
                                  1e-9 * std::max(1.0, radius));
  }
  if (cert.structural != cert.numeric) {
    cert.discrepancy = cert.structural
                           ? "equality condition holds but the final gap is " +
                                 format_value(cert.numeric_gap)
                           : "final gap " + format_value(cert.numeric_gap) +
                                 " is numerically zero but the equality condition fails";
  }
}

}  // namespace

EqualityCertificate equality_certificate(const Graph& g, const BoundTable& table) {
  require_table_source(table, SourceKind::graph, g.order(), table.edges == g.size());
  EqualityCertificate cert;
  if (table.has_bipartite_column()) {
    cert.theorem = Theorem::bipartite_graph;
    if (const auto sides = complete_bipartite_sides(g)) {
      cert.structural = true;
      cert.witness = "complete bipartite K_{" + std::to_string(sides->first) + "," +
                     std::to_string(sides->second) + "}";
    } else {
      cert.witness = "bipartite but not complete bipartite";
    }
  } else {
    cert.theorem = Theorem::general_graph;
    if (g.size() == 0) {
      cert.structural = true;
      cert.witness = "edgeless graph on " + std::to_string(g.order()) + " vertices";
    } else {
      cert.witness = "graph has an edge, so a non-Perron eigenvalue is nonzero";
    }
  }
  finish_certificate(cert, table);
  return cert;
}

EqualityCertificate equality_certificate(const SymNonnegMatrix& r, const BoundTable& table) {
  require_table_source(table, SourceKind::matrix, r.order(), table.trace == r.trace());
  EqualityCertificate cert;
  cert.theorem = Theorem::matrix;
  const auto spectrum = eigenvalues(r);
  const double radius = std::abs(spectrum.largest());
  double worst = 0.0;
  for (std::size_t i = 1; i < spectrum.order(); ++i) {
    worst = std::max(worst, std::abs(spectrum.eigenvalues[i]));
  }
  cert.structural = worst <= 1e-8 * std::max(1.0, radius);
  cert.witness = cert.structural ? "all non-Perron eigenvalues zero"
                                 : "non-Perron eigenvalue of magnitude " + format_value(worst);
  finish_certificate(cert, table);
  return cert;
}

}  // namespace estrada
