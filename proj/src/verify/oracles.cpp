#include "shrinker/verify/oracles.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>

namespace shrinker::oracle {

std::vector<double> toeplitz_eigenvalues(double d, double e, std::size_t n) {
  std::vector<double> values(n);
  for (std::size_t j = 1; j <= n; ++j) {
    values[j - 1] = d + 2.0 * e * std::cos(static_cast<double>(j) * std::numbers::pi /
                                           static_cast<double>(n + 1));
  }
  std::sort(values.begin(), values.end());
  return values;
}

DenseMatrix dense_from_tridiagonal(std::span<const double> diagonal,
                                   std::span<const double> off_diagonal) {
  const std::size_t n = diagonal.size();
  DenseMatrix a(n, std::vector<double>(n, 0.0));
  for (std::size_t i = 0; i < n; ++i) {
    a[i][i] = diagonal[i];
    if (i + 1 < n) {
      a[i][i + 1] = off_diagonal[i];
      a[i + 1][i] = off_diagonal[i];
    }
  }
  return a;
}

std::vector<double> characteristic_polynomial(const DenseMatrix& a) {
  const std::size_t n = a.size();
  std::vector<double> c(n + 1, 0.0);
  c[n] = 1.0;
  // M_0 = 0; M_k = A M_{k-1} + c_{n-k+1} I; c_{n-k} = -tr(A M_k) / k.
  DenseMatrix m(n, std::vector<double>(n, 0.0));
  for (std::size_t k = 1; k <= n; ++k) {
    DenseMatrix next(n, std::vector<double>(n, 0.0));
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        double s = 0.0;
        for (std::size_t l = 0; l < n; ++l) s += a[i][l] * m[l][j];
        next[i][j] = s;
      }
      next[i][i] += c[n - k + 1];
    }
    m = std::move(next);
    double trace = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t l = 0; l < n; ++l) trace += a[i][l] * m[l][i];
    }
    c[n - k] = -trace / static_cast<double>(k);
  }
  return c;
}

double evaluate_polynomial(std::span<const double> coeffs, double t) {
  double v = 0.0;
  for (std::size_t i = coeffs.size(); i-- > 0;) v = v * t + coeffs[i];
  return v;
}

namespace {

std::complex<double> evaluate_complex(std::span<const double> coeffs, std::complex<double> z) {
  std::complex<double> v = 0.0;
  for (std::size_t i = coeffs.size(); i-- > 0;) v = v * z + coeffs[i];
  return v;
}

double evaluate_derivative(std::span<const double> coeffs, double t) {
  double v = 0.0;
  for (std::size_t i = coeffs.size(); i-- > 1;) v = v * t + static_cast<double>(i) * coeffs[i];
  return v;
}

}  // namespace

std::vector<double> real_roots(std::span<const double> coeffs) {
  const std::size_t n = coeffs.size() - 1;
  if (n == 0) return {};
  // Normalize to a monic polynomial.
  std::vector<double> monic(coeffs.begin(), coeffs.end());
  for (auto& c : monic) c /= coeffs[n];

  double radius = 0.0;
  for (std::size_t i = 0; i < n; ++i) radius = std::max(radius, std::abs(monic[i]));
  radius += 1.0;

  std::vector<std::complex<double>> z(n);
  const std::complex<double> seed(0.4, 0.9);
  for (std::size_t i = 0; i < n; ++i) z[i] = radius * std::pow(seed, static_cast<double>(i));

  for (int iter = 0; iter < 2000; ++iter) {
    double change = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      std::complex<double> denom = 1.0;
      for (std::size_t j = 0; j < n; ++j) {
        if (j != i) denom *= z[i] - z[j];
      }
      const auto delta = evaluate_complex(monic, z[i]) / denom;
      z[i] -= delta;
      change = std::max(change, std::abs(delta));
    }
    if (change < 1e-15 * radius) break;
  }

  std::vector<double> roots(n);
  for (std::size_t i = 0; i < n; ++i) {
    double t = z[i].real();
    for (int k = 0; k < 3; ++k) {
      const double d = evaluate_derivative(monic, t);
      if (d == 0.0) break;
      t -= evaluate_polynomial(monic, t) / d;
    }
    roots[i] = t;
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

namespace {

// u(half_width) for u'' = x u' - lambda u with parity-fixed data at 0.
double shoot(double half_width, double lambda, bool even) {
  constexpr int kSteps = 20000;
  const double h = half_width / kSteps;
  double u = even ? 1.0 : 0.0;
  double p = even ? 0.0 : 1.0;
  auto accel = [lambda](double x, double uu, double pp) { return x * pp - lambda * uu; };
  double x = 0.0;
  for (int s = 0; s < kSteps; ++s) {
    const double k1u = p;
    const double k1p = accel(x, u, p);
    const double k2u = p + 0.5 * h * k1p;
    const double k2p = accel(x + 0.5 * h, u + 0.5 * h * k1u, p + 0.5 * h * k1p);
    const double k3u = p + 0.5 * h * k2p;
    const double k3p = accel(x + 0.5 * h, u + 0.5 * h * k2u, p + 0.5 * h * k2p);
    const double k4u = p + h * k3p;
    const double k4p = accel(x + h, u + h * k3u, p + h * k3p);
    u += h / 6.0 * (k1u + 2.0 * k2u + 2.0 * k3u + k4u);
    p += h / 6.0 * (k1p + 2.0 * k2p + 2.0 * k3p + k4p);
    x += h;
  }
  return u;
}

}  // namespace

double continuum_dirichlet_eigenvalue(double half_width, int index) {
  if (index < 1) throw std::invalid_argument("index must be >= 1");
  // Odd indices are even eigenfunctions; the r-th root within a parity family
  // gives eigenvalue number 2r-1 (even) or 2r (odd).
  const bool even = index % 2 == 1;
  const int wanted = (index + 1) / 2;
  constexpr double kStep = 0.01;
  int found = 0;
  double lo = 0.0;
  double f_lo = shoot(half_width, lo, even);
  for (int s = 1; s < 1000000; ++s) {
    const double hi = s * kStep;
    const double f_hi = shoot(half_width, hi, even);
    if ((f_lo < 0.0) != (f_hi < 0.0)) {
      if (++found == wanted) {
        double a = lo;
        double b = hi;
        double fa = f_lo;
        for (int it = 0; it < 80; ++it) {
          const double mid = 0.5 * (a + b);
          const double fm = shoot(half_width, mid, even);
          if ((fa < 0.0) == (fm < 0.0)) {
            a = mid;
            fa = fm;
          } else {
            b = mid;
          }
        }
        return 0.5 * (a + b);
      }
    }
    lo = hi;
    f_lo = f_hi;
  }
  throw std::runtime_error("continuum eigenvalue not bracketed");
}

}  // namespace shrinker::oracle
