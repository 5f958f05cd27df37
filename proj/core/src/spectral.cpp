#include "estrada/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <string>

#include "estrada/error.hpp"

namespace estrada {
namespace {

double max_off_diagonal(const std::vector<double>& a, std::size_t n, std::size_t ld) {
  double off = 0.0;
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t q = p + 1; q < n; ++q) off = std::max(off, std::abs(a[p * ld + q]));
  return off;
}

// Zeroes a(p,q) with one Jacobi rotation, keeping `a` fully symmetric.
void rotate(std::vector<double>& a, std::size_t n, std::size_t ld, std::size_t p, std::size_t q) {
  const double apq = a[p * ld + q];
  const double theta = (a[q * ld + q] - a[p * ld + p]) / (2.0 * apq);
  double t;
  if (std::abs(theta) > 1e150) {
    t = 0.5 / theta;
  } else {
    t = (theta >= 0.0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
  }
  const double c = 1.0 / std::sqrt(t * t + 1.0);
  const double s = t * c;
  const double tau = s / (1.0 + c);

  a[p * ld + p] -= t * apq;
  a[q * ld + q] += t * apq;
  a[p * ld + q] = 0.0;
  a[q * ld + p] = 0.0;
  for (std::size_t r = 0; r < n; ++r) {
    if (r == p || r == q) continue;
    const double g = a[r * ld + p];
    const double h = a[r * ld + q];
    const double rp = g - s * (h + g * tau);
    const double rq = h + s * (g - h * tau);
    a[r * ld + p] = a[p * ld + r] = rp;
    a[r * ld + q] = a[q * ld + r] = rq;
  }
}

}  // namespace

Spectrum eigenvalues(const SymNonnegMatrix& r) {
  const std::size_t n = r.order();
  // Row stride padded by one so column walks do not alias in the cache
  // when n is a power of two.
  const std::size_t ld = n + 1;
  std::vector<double> a(n * ld, 0.0);
  for (std::size_t i = 0; i < n; ++i)
    std::copy(r.row(i).begin(), r.row(i).end(), a.begin() + static_cast<std::ptrdiff_t>(i * ld));
  const double threshold = 1e-12 * frobenius_norm(r);

  Spectrum out;
  double off = max_off_diagonal(a, n, ld);
  while (off > threshold) {
    if (out.sweeps == kMaxJacobiSweeps) {
      throw ConvergenceError("Jacobi eigensolver did not converge in " +
                                 std::to_string(kMaxJacobiSweeps) + " sweeps",
                             off);
    }
    for (std::size_t p = 0; p < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        // Entries already under the threshold are left alone; rotating them
        // drives values into the subnormal range for no gain in accuracy.
        if (std::abs(a[p * ld + q]) > threshold) rotate(a, n, ld, p, q);
      }
    }
    ++out.sweeps;
    off = max_off_diagonal(a, n, ld);
  }
  out.residual = off;
  out.eigenvalues.resize(n);
  for (std::size_t i = 0; i < n; ++i) out.eigenvalues[i] = a[i * ld + i];
  std::sort(out.eigenvalues.begin(), out.eigenvalues.end(), std::greater<>());
  return out;
}

double estrada_index(const Spectrum& s) {
  double sum = 0.0;
  for (auto it = s.eigenvalues.rbegin(); it != s.eigenvalues.rend(); ++it) sum += std::exp(*it);
  return sum;
}

double spectral_moment(const Spectrum& s, unsigned k) {
  double sum = 0.0;
  for (double lambda : s.eigenvalues) {
    double term = 1.0;
    for (unsigned i = 0; i < k; ++i) term *= lambda;
    sum += term;
  }
  return sum;
}

double power_radius(const SymNonnegMatrix& r, double tol, std::size_t kmax) {
  if (!(tol > 0.0)) throw InputError("power_radius: tol must be positive");
  if (kmax == 0) throw InputError("power_radius: kmax must be at least 1");
  const std::size_t n = r.order();

  double row_max = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    double s = 0.0;
    for (double v : r.row(i)) s += v;
    row_max = std::max(row_max, s);
  }
  const double shift = 0.5 * row_max;

  std::vector<double> v(n, 1.0 / std::sqrt(static_cast<double>(n)));
  std::vector<double> y(n);
  double previous = 0.0;
  double estimate = 0.0;
  for (std::size_t it = 0; it < kmax; ++it) {
    r.multiply(v, y);
    estimate = 0.0;
    for (std::size_t i = 0; i < n; ++i) estimate += v[i] * y[i];
    if (it > 0 && std::abs(estimate - previous) <= tol * std::max(1.0, std::abs(estimate))) {
      break;
    }
    previous = estimate;
    double sq = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      y[i] += shift * v[i];
      sq += y[i] * y[i];
    }
    const double norm = std::sqrt(sq);
    if (norm == 0.0) return 0.0;
    for (std::size_t i = 0; i < n; ++i) v[i] = y[i] / norm;
  }
  return estimate;
}

}  // namespace estrada
