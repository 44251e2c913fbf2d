#include "spoly/roots.hpp"

#include <algorithm>
#include <cmath>

#include <Eigen/Dense>

namespace spoly {

namespace {

Cplx horner(std::span<const Cplx> c, Cplx z) {
  Cplx v = 0.0;
  for (std::size_t k = c.size(); k-- > 0;) v = v * z + c[k];
  return v;
}

Cplx horner_deriv(std::span<const Cplx> c, Cplx z) {
  Cplx v = 0.0;
  for (std::size_t k = c.size(); k-- > 1;) v = v * z + c[k] * double(k);
  return v;
}

// Cauchy-style inclusion radius for all roots.
double root_bound(std::span<const Cplx> c) {
  const double lead = std::abs(c.back());
  double m = 0.0;
  for (std::size_t k = 0; k + 1 < c.size(); ++k)
    m = std::max(m, std::abs(c[k]));
  return 1.0 + m / lead;
}

std::vector<Cplx> companion_roots(std::span<const Cplx> c) {
  const int d = static_cast<int>(c.size()) - 1;
  Eigen::MatrixXcd M = Eigen::MatrixXcd::Zero(d, d);
  for (int i = 1; i < d; ++i) M(i, i - 1) = 1.0;
  for (int i = 0; i < d; ++i) M(i, d - 1) = -c[i] / c[d];
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(M, false);
  std::vector<Cplx> r(d);
  for (int i = 0; i < d; ++i) r[i] = es.eigenvalues()(i);
  return r;
}

void polish(std::span<const Cplx> c, std::vector<Cplx>& roots) {
  for (auto& z : roots) {
    for (int it = 0; it < 12; ++it) {
      const Cplx f = horner(c, z);
      const Cplx df = horner_deriv(c, z);
      if (std::abs(df) == 0.0) break;
      const Cplx step = f / df;
      z -= step;
      if (std::abs(step) <= 1e-16 * (1.0 + std::abs(z))) break;
    }
  }
}

// Canonical order so results are reproducible run to run.
void sort_roots(std::vector<Cplx>& r) {
  std::sort(r.begin(), r.end(), [](Cplx a, Cplx b) {
    if (a.real() != b.real()) return a.real() < b.real();
    return a.imag() < b.imag();
  });
}

}  // namespace

std::vector<Cplx> univariate_roots(std::vector<Cplx> coeffs) {
  double scale = 0.0;
  for (const Cplx& c : coeffs) scale = std::max(scale, std::abs(c));
  if (scale == 0.0) throw std::domain_error("roots of the zero polynomial");
  while (coeffs.size() > 1 && std::abs(coeffs.back()) <= 1e-14 * scale)
    coeffs.pop_back();
  const int d = static_cast<int>(coeffs.size()) - 1;
  if (d == 0) return {};

  std::vector<Cplx> roots;
  int zeros_at_origin = 0;
  while (zeros_at_origin < d &&
         std::abs(coeffs[zeros_at_origin]) <= 1e-300 * scale)
    ++zeros_at_origin;
  for (int k = 0; k < zeros_at_origin; ++k) roots.push_back(0.0);
  std::vector<Cplx> c(coeffs.begin() + zeros_at_origin, coeffs.end());
  const int m = static_cast<int>(c.size()) - 1;
  if (m == 0) {
    sort_roots(roots);
    return roots;
  }
  if (m == 1) {
    roots.push_back(-c[0] / c[1]);
    sort_roots(roots);
    return roots;
  }

  // Aberth-Ehrlich from a fixed slightly-irrational spiral on the root bound
  // circle. The offset breaks symmetric starting configurations.
  const double R = root_bound(c);
  std::vector<Cplx> z(m);
  for (int k = 0; k < m; ++k) {
    const double ang = 2.0 * 3.14159265358979323846 * (k + 0.25) / m + 0.43;
    z[k] = std::polar(R * (0.5 + 0.5 * (k + 1.0) / m), ang);
  }
  bool converged = false;
  for (int sweep = 0; sweep < 200 && !converged; ++sweep) {
    converged = true;
    for (int k = 0; k < m; ++k) {
      const Cplx f = horner(c, z[k]);
      const Cplx df = horner_deriv(c, z[k]);
      Cplx sum = 0.0;
      for (int j = 0; j < m; ++j) {
        if (j == k) continue;
        const Cplx diff = z[k] - z[j];
        if (std::abs(diff) < 1e-300) continue;
        sum += 1.0 / diff;
      }
      const Cplx w = (std::abs(df) == 0.0 && std::abs(f) == 0.0)
                         ? Cplx(0.0)
                         : f / (df - f * sum);
      z[k] -= w;
      if (std::abs(w) > 1e-14 * (1.0 + std::abs(z[k]))) converged = false;
    }
  }
  if (!converged && m <= 30) z = companion_roots(c);
  polish(c, z);
  roots.insert(roots.end(), z.begin(), z.end());
  sort_roots(roots);
  return roots;
}

std::vector<Cplx> univariate_roots(const Polynomial& f) {
  return univariate_roots(f.univariate_coeffs());
}

double root_residual(std::span<const Cplx> coeffs, Cplx root) {
  double scale = 0.0;
  for (const Cplx& c : coeffs) scale = std::max(scale, std::abs(c));
  const int d = static_cast<int>(coeffs.size()) - 1;
  const double grow = std::pow(std::max(1.0, std::abs(root)), d);
  return std::abs(horner(coeffs, root)) / std::max(scale * grow, 1e-300);
}

bool all_roots_real(std::span<const Cplx> roots, double tol) {
  for (const Cplx& r : roots)
    if (std::abs(r.imag()) > tol * std::max(1.0, std::abs(r))) return false;
  return true;
}

}  // namespace spoly
