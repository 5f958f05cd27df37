#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "estrada/graph.hpp"
#include "estrada/matrix.hpp"

namespace estrada {

inline constexpr std::size_t kDefaultKmax = 1000;
inline constexpr double kDefaultTol = 1e-10;

enum class SequenceKind { gamma_graph, xi_matrix };
enum class Termination { converged, kmax_reached, zero_iterate };

std::string_view to_string(SequenceKind kind);
std::string_view to_string(Termination t);
SequenceKind sequence_kind_from_string(std::string_view s);
Termination termination_from_string(std::string_view s);

/// Iterates of ||R v_k|| with v_0 = e / sqrt(n) and v_{k+1} = R v_k / ||R v_k||.
///
/// For an adjacency matrix this is gamma^(k) = sqrt(sum d_{k+1}(i)^2 / sum d_k(i)^2);
/// for a general nonnegative symmetric matrix it is xi^(k) = ||R^{k+1} e|| / ||R^k e||.
/// Values are nondecreasing up to roundoff and approach the spectral radius.
struct RatioSequence {
  SequenceKind kind = SequenceKind::gamma_graph;
  std::vector<double> values;
  Termination terminated_by = Termination::kmax_reached;
  double tol = kDefaultTol;

  double final_estimate() const { return values.back(); }
  friend bool operator==(const RatioSequence&, const RatioSequence&) = default;
};

/// Stops at the first k >= 1 with |value_k - value_{k-1}| <= tol, at k == kmax,
/// or when R v_k = 0 (the zero value is recorded). Throws InputError if tol <= 0.
RatioSequence gamma_sequence(const Graph& g, std::size_t kmax = kDefaultKmax,
                             double tol = kDefaultTol);
RatioSequence xi_sequence(const SymNonnegMatrix& r, std::size_t kmax = kDefaultKmax,
                          double tol = kDefaultTol);

/// e^x + n - 1 - x. Throws DomainError for x < 0 or NaN.
double bound_general(double x, std::size_t n);
/// 2 cosh(x) + n - 2. Only meaningful for connected bipartite graphs with n > 2.
double bound_bipartite(double x, std::size_t n);
/// e^x + ell - 1 + trace - x.
double bound_matrix(double x, std::size_t ell, double trace);

struct BoundValues {
  double general = 0.0;
  std::optional<double> bipartite;
  std::optional<double> matrix;

  /// Largest of the available bounds.
  double tightest() const;
  friend bool operator==(const BoundValues&, const BoundValues&) = default;
};

struct BoundRow {
  std::size_t k = 0;
  double seq_value = 0.0;
  BoundValues bounds;

  friend bool operator==(const BoundRow&, const BoundRow&) = default;
};

enum class SourceKind { graph, matrix };
std::string_view to_string(SourceKind kind);
SourceKind source_kind_from_string(std::string_view s);

/// Lower-bound ladder for one graph or matrix, next to the exact Estrada index.
struct BoundTable {
  SourceKind source = SourceKind::graph;
  std::size_t n_or_ell = 0;
  std::size_t edges = 0;  // m for graphs, 0 for matrices
  double trace = 0.0;     // 0 for adjacency matrices

  std::vector<BoundRow> rows;
  Termination terminated_by = Termination::kmax_reached;
  double tol = kDefaultTol;

  double exact_ee = 0.0;
  double spectral_radius = 0.0;  // lambda_1 / rho_1 from the eigensolver
  BoundValues at_radius;         // every column evaluated at spectral_radius
  std::optional<double> baseline_2m_over_n;  // e^{2m/n} + n - 1 - 2m/n, graphs only
  bool reducible = false;

  bool has_bipartite_column() const { return !rows.empty() && rows.front().bounds.bipartite.has_value(); }
  bool has_matrix_column() const { return !rows.empty() && rows.front().bounds.matrix.has_value(); }
  double gap(const BoundRow& row) const { return exact_ee - row.bounds.tightest(); }

  friend bool operator==(const BoundTable&, const BoundTable&) = default;
};

enum class BipartiteColumn { automatic, required };

/// Requires a connected graph (HypothesisError otherwise). The bipartite
/// column is present iff the graph is bipartite and n > 2; with
/// BipartiteColumn::required its absence is a HypothesisError.
BoundTable bound_table_graph(const Graph& g, std::size_t kmax = kDefaultKmax,
                             double tol = kDefaultTol,
                             BipartiteColumn bipartite = BipartiteColumn::automatic);

/// Matrix column e^{xi} + ell - 1 + Tr(R) - xi. The general column holds the
/// trace-free form e^{xi} + ell - 1 - xi. Reducible input is flagged, not rejected.
BoundTable bound_table_matrix(const SymNonnegMatrix& r, std::size_t kmax = kDefaultKmax,
                              double tol = kDefaultTol);

enum class Theorem { general_graph, bipartite_graph, matrix };
std::string_view to_string(Theorem t);
Theorem theorem_from_string(std::string_view s);

/// Structural and numeric check of the equality case of the applicable theorem.
struct EqualityCertificate {
  /// Gaps at or below kEqualityTolerance * max(1, EE) count as numeric equality.
  static constexpr double kEqualityTolerance = 1e-6;

  Theorem theorem = Theorem::general_graph;
  bool holds_with_equality = false;  // structural && numeric
  bool structural = false;
  bool numeric = false;
  std::string witness;
  double numeric_gap = 0.0;  // EE minus the tightest bound of the last row
  /// Per k: whether the sequence value equals the spectral radius to 1e-9 relative.
  std::vector<bool> attains_radius;
  std::string discrepancy;  // empty when structural and numeric verdicts agree

  bool strict_observed() const noexcept { return !numeric; }
  friend bool operator==(const EqualityCertificate&, const EqualityCertificate&) = default;
};

/// Throws InputError when the table was not produced from this source.
EqualityCertificate equality_certificate(const Graph& g, const BoundTable& table);
EqualityCertificate equality_certificate(const SymNonnegMatrix& r, const BoundTable& table);

}  // namespace estrada
