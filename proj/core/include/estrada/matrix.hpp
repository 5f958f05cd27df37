#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "estrada/graph.hpp"

namespace estrada {

/// Dense real symmetric matrix with nonnegative entries, row-major storage.
///
/// Storage is exactly symmetric: inputs that are symmetric only up to the
/// relative tolerance are stored as (r_ij + r_ji) / 2.
class SymNonnegMatrix {
 public:
  /// Relative tolerance accepted for |r_ij - r_ji|.
  static constexpr double kSymmetryTolerance = 1e-12;

  /// Zero matrix of order ell (ell >= 1).
  explicit SymNonnegMatrix(std::size_t ell);

  /// Validates and symmetrizes a row-major ell*ell buffer. Throws InputError
  /// naming the 1-based (i, j) of a negative, non-finite or asymmetric entry.
  static SymNonnegMatrix from_dense(std::size_t ell, std::span<const double> row_major);

  static SymNonnegMatrix identity(std::size_t ell);

  std::size_t order() const noexcept { return ell_; }
  double operator()(std::size_t i, std::size_t j) const { return entries_[i * ell_ + j]; }
  std::span<const double> row(std::size_t i) const {
    return {entries_.data() + i * ell_, ell_};
  }
  std::span<const double> data() const noexcept { return entries_; }
  double trace() const noexcept { return trace_; }

  /// y = R x; each y_i sums r_ij x_j over ascending j.
  void multiply(std::span<const double> x, std::span<double> y) const;

  /// Off-diagonal nonzero pattern is connected (ell == 1 counts as irreducible).
  bool irreducible() const;

  friend bool operator==(const SymNonnegMatrix&, const SymNonnegMatrix&) = default;

 private:
  std::size_t ell_ = 0;
  std::vector<double> entries_;
  double trace_ = 0.0;
};

/// Reads "%%MatrixMarket matrix {coordinate|array} {real|integer}
/// {symmetric|general}". General storage must be symmetric within
/// kSymmetryTolerance. Pattern, complex, hermitian and skew-symmetric inputs
/// are rejected, as are negative entries.
SymNonnegMatrix parse_matrix_market(std::string_view text);

/// Coordinate/real/symmetric, lower triangle, nonzeros only, 17 significant digits.
std::string to_matrix_market(const SymNonnegMatrix& r);

SymNonnegMatrix adjacency_matrix(const Graph& g);

double frobenius_norm(const SymNonnegMatrix& r);

}  // namespace estrada
