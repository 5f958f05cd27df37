#pragma once

#include <string>
#include <vector>

#include "estrada/bounds.hpp"
#include "estrada/graph.hpp"
#include "estrada/matrix.hpp"

namespace estrada::cli {

struct Violation {
  std::string invariant;
  std::string detail;
};

struct VerifyResult {
  std::vector<Violation> violations;
  std::vector<std::string> notes;

  bool ok() const noexcept { return violations.empty(); }
};

/// Tolerances used by every check below.
struct VerifyTolerances {
  double monotone_rel = 1e-12;    // values[k+1] >= values[k] - slack * max(1, values[k])
  double dominated_rel = 1e-8;    // seq <= radius + slack * max(1, radius)
  double bound_rel = 1e-9;        // bound <= EE + slack * max(1, EE)
  double bridge_rel = 1e-12;      // |xi - gamma| <= slack * max(1, gamma)
  double seed_rel = 1e-12;        // xi^(0) >= |R|_F / sqrt(ell) - slack * max(1, xi^(0))
  double baseline_abs = 1e-12;    // J^0 >= e^{2m/n} + n - 1 - 2m/n - slack
};

/// Checks that only need a stored table: sequence monotone and dominated by
/// the spectral radius, every bound column nondecreasing and at most EE, and
/// for graphs the first row not below the 2m/n baseline.
std::vector<Violation> verify_table(const BoundTable& table, const VerifyTolerances& tol = {});

/// Recomputes everything for a graph and adds the moment identities
/// (M0..M3 against n, 0, 2m, 6t), the spectrum trace identity, the
/// gamma == xi(adjacency) bridge and the xi^(0) >= |A|_F / sqrt(n) seed
/// inequality. Disconnected graphs skip the table checks (noted).
VerifyResult verify_graph(const Graph& g, std::size_t kmax, double tol,
                          const VerifyTolerances& tols = {});

/// Matrix analogue: table checks, seed inequality, the e^{rho}+ell-1+Tr-rho
/// baseline against EE, |R|_F^2 == M2 and the trace identity.
VerifyResult verify_matrix(const SymNonnegMatrix& r, std::size_t kmax, double tol,
                           const VerifyTolerances& tols = {});

}  // namespace estrada::cli
