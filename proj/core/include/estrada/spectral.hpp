#pragma once

#include <cstddef>
#include <vector>

#include "estrada/matrix.hpp"

namespace estrada {

/// Eigenvalues of a symmetric matrix, sorted descending.
struct Spectrum {
  std::vector<double> eigenvalues;
  /// Largest off-diagonal magnitude left when the solver stopped.
  double residual = 0.0;
  std::size_t sweeps = 0;

  std::size_t order() const noexcept { return eigenvalues.size(); }
  double largest() const { return eigenvalues.front(); }
};

/// Cyclic Jacobi. Sweeps visit the upper triangle row by row and stop once
/// every off-diagonal entry is at most 1e-12 * ||R||_F; more than
/// kMaxJacobiSweeps sweeps throws ConvergenceError.
inline constexpr std::size_t kMaxJacobiSweeps = 50;
Spectrum eigenvalues(const SymNonnegMatrix& r);

/// sum_i exp(lambda_i), accumulated from the smallest eigenvalue up.
double estrada_index(const Spectrum& s);

/// sum_i lambda_i^k.
double spectral_moment(const Spectrum& s, unsigned k);

/// Spectral radius by power iteration on R + sigma*I from the all-ones
/// vector, sigma = ||R||_inf / 2. The shift makes the Perron value strictly
/// dominant, so bipartite-like spectra (-rho present) still converge. Returns
/// the Rayleigh quotient v^T R v once successive estimates differ by at most
/// tol * max(1, estimate), or after kmax iterations. Returns 0 for R = 0.
double power_radius(const SymNonnegMatrix& r, double tol = 1e-13, std::size_t kmax = 100000);

}  // namespace estrada
