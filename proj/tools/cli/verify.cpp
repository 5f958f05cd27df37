#include "cli/verify.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "estrada/classify.hpp"
#include "estrada/spectral.hpp"

namespace estrada::cli {
namespace {

std::string num(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void check_sequence(const std::vector<double>& values, double radius, const VerifyTolerances& tol,
                    std::vector<Violation>& out) {
  for (std::size_t k = 0; k < values.size(); ++k) {
    if (!(values[k] >= 0.0)) {
      out.push_back({"sequence_nonnegative", "k=" + std::to_string(k) + " value=" + num(values[k])});
    }
    if (k + 1 < values.size() &&
        values[k + 1] < values[k] - tol.monotone_rel * std::max(1.0, values[k])) {
      out.push_back({"sequence_monotone", "k=" + std::to_string(k + 1) + " value=" +
                                              num(values[k + 1]) + " < previous " + num(values[k])});
    }
    if (values[k] > radius + tol.dominated_rel * std::max(1.0, radius)) {
      out.push_back({"sequence_dominated", "k=" + std::to_string(k) + " value=" + num(values[k]) +
                                               " > spectral radius " + num(radius)});
    }
  }
}

void check_spectrum(const Spectrum& s, double trace, std::vector<Violation>& out) {
  double sum = 0.0;
  for (double l : s.eigenvalues) sum += l;
  if (std::abs(sum - trace) > 1e-9 * std::max(1.0, std::abs(trace))) {
    out.push_back({"trace_identity", "sum of eigenvalues " + num(sum) + " != trace " + num(trace)});
  }
}

void check_seed(double xi0, const SymNonnegMatrix& r, const VerifyTolerances& tol,
                std::vector<Violation>& out) {
  const double seed = frobenius_norm(r) / std::sqrt(static_cast<double>(r.order()));
  if (xi0 < seed - tol.seed_rel * std::max(1.0, xi0)) {
    out.push_back({"seed_inequality", "xi^(0)=" + num(xi0) + " < |R|_F/sqrt(ell)=" + num(seed)});
  }
}

}  // namespace

std::vector<Violation> verify_table(const BoundTable& table, const VerifyTolerances& tol) {
  std::vector<Violation> out;
  if (table.rows.empty()) {
    out.push_back({"table_nonempty", "no rows"});
    return out;
  }
  std::vector<double> seq;
  for (const auto& r : table.rows) seq.push_back(r.seq_value);
  check_sequence(seq, table.spectral_radius, tol, out);

  const double ceiling = table.exact_ee + tol.bound_rel * std::max(1.0, table.exact_ee);
  auto column = [&](const char* name, auto get) {
    for (std::size_t i = 0; i < table.rows.size(); ++i) {
      const auto v = get(table.rows[i].bounds);
      if (!v) continue;
      if (*v > ceiling) {
        out.push_back({"bound_validity", std::string(name) + " k=" + std::to_string(table.rows[i].k) +
                                             " bound=" + num(*v) + " > EE=" + num(table.exact_ee)});
      }
      if (i > 0) {
        const auto prev = get(table.rows[i - 1].bounds);
        if (prev && *v < *prev - tol.monotone_rel * std::max(1.0, std::abs(*prev))) {
          out.push_back({"bound_monotone", std::string(name) + " k=" +
                                               std::to_string(table.rows[i].k) + " bound=" +
                                               num(*v) + " < previous " + num(*prev)});
        }
      }
    }
  };
  column("bound_general", [](const BoundValues& b) { return std::optional<double>(b.general); });
  column("bound_bipartite", [](const BoundValues& b) { return b.bipartite; });
  column("bound_matrix", [](const BoundValues& b) { return b.matrix; });

  if (table.baseline_2m_over_n &&
      table.rows.front().bounds.general < *table.baseline_2m_over_n - tol.baseline_abs) {
    out.push_back({"baseline_dominance", "J^0=" + num(table.rows.front().bounds.general) +
                                             " < e^{2m/n} baseline " +
                                             num(*table.baseline_2m_over_n)});
  }
  return out;
}

VerifyResult verify_graph(const Graph& g, std::size_t kmax, double tol,
                          const VerifyTolerances& tols) {
  VerifyResult result;
  auto& out = result.violations;
  const auto a = adjacency_matrix(g);
  const auto spectrum = eigenvalues(a);
  check_spectrum(spectrum, 0.0, out);

  const double n = static_cast<double>(g.order());
  const double two_m = 2.0 * static_cast<double>(g.size());
  const double six_t = 6.0 * static_cast<double>(triangle_count(g));
  const double m0 = spectral_moment(spectrum, 0);
  const double m1 = spectral_moment(spectrum, 1);
  const double m2 = spectral_moment(spectrum, 2);
  const double m3 = spectral_moment(spectrum, 3);
  if (m0 != n) out.push_back({"moment_M0", "M0=" + num(m0) + " != n=" + num(n)});
  if (std::abs(m1) > 1e-9 * n) out.push_back({"moment_M1", "M1=" + num(m1)});
  if (std::abs(m2 - two_m) > 1e-8 * std::max(1.0, two_m)) {
    out.push_back({"moment_M2", "M2=" + num(m2) + " != 2m=" + num(two_m)});
  }
  if (std::abs(m3 - six_t) > 1e-7 * std::max(1.0, six_t)) {
    out.push_back({"moment_M3", "M3=" + num(m3) + " != 6t=" + num(six_t)});
  }

  const auto gamma = gamma_sequence(g, kmax, tol);
  const auto xi = xi_sequence(a, kmax, tol);
  if (gamma.values.size() != xi.values.size()) {
    out.push_back({"gamma_xi_bridge", "lengths differ: " + std::to_string(gamma.values.size()) +
                                          " vs " + std::to_string(xi.values.size())});
  } else {
    for (std::size_t k = 0; k < gamma.values.size(); ++k) {
      if (std::abs(gamma.values[k] - xi.values[k]) >
          tols.bridge_rel * std::max(1.0, gamma.values[k])) {
        out.push_back({"gamma_xi_bridge", "k=" + std::to_string(k) + " gamma=" +
                                              num(gamma.values[k]) + " xi=" + num(xi.values[k])});
      }
    }
  }
  check_seed(xi.values.front(), a, tols, out);

  if (!is_connected(g)) {
    check_sequence(gamma.values, std::max(0.0, spectrum.largest()), tols, out);
    result.notes.push_back("disconnected: bound table checks skipped");
    return result;
  }
  const auto table = bound_table_graph(g, kmax, tol);
  auto table_violations = verify_table(table, tols);
  out.insert(out.end(), table_violations.begin(), table_violations.end());

  const auto cert = equality_certificate(g, table);
  if (cert.holds_with_equality) {
    result.notes.push_back("equality (" + std::string(to_string(cert.theorem)) + "): " +
                           cert.witness + ", gap " + num(cert.numeric_gap));
  }
  if (!cert.discrepancy.empty()) result.notes.push_back("certificate: " + cert.discrepancy);
  return result;
}

VerifyResult verify_matrix(const SymNonnegMatrix& r, std::size_t kmax, double tol,
                           const VerifyTolerances& tols) {
  VerifyResult result;
  auto& out = result.violations;
  const auto spectrum = eigenvalues(r);
  check_spectrum(spectrum, r.trace(), out);

  const double frob = frobenius_norm(r);
  const double m2 = spectral_moment(spectrum, 2);
  if (std::abs(frob * frob - m2) > 1e-9 * std::max(1.0, m2)) {
    out.push_back({"frobenius_moment", "|R|_F^2=" + num(frob * frob) + " != M2=" + num(m2)});
  }

  const auto table = bound_table_matrix(r, kmax, tol);
  auto table_violations = verify_table(table, tols);
  out.insert(out.end(), table_violations.begin(), table_violations.end());
  check_seed(table.rows.front().seq_value, r, tols, out);

  const double baseline = *table.at_radius.matrix;
  if (baseline > table.exact_ee + tols.bound_rel * std::max(1.0, table.exact_ee)) {
    out.push_back({"radius_baseline", "e^rho+ell-1+Tr-rho=" + num(baseline) + " > EE=" +
                                          num(table.exact_ee)});
  }
  if (table.reducible) result.notes.push_back("reducible matrix");

  const auto cert = equality_certificate(r, table);
  if (cert.holds_with_equality) {
    result.notes.push_back("equality (matrix): " + cert.witness + ", gap " + num(cert.numeric_gap));
  }
  if (!cert.discrepancy.empty()) result.notes.push_back("certificate: " + cert.discrepancy);
  return result;
}

}  // namespace estrada::cli
