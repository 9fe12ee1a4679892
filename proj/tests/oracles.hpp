// Test-only oracles. Everything here goes through plain dense linear
// algebra (Gauss-Jordan, explicit quadrature, scalar formulas) so that it
// stays independent of the spectral-decomposition path it is used to check.
#pragma once

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

namespace oracle {

// Inverse by Gauss-Jordan elimination with partial pivoting; row-major.
inline std::vector<double> gj_inverse(int n, std::vector<double> a) {
  std::vector<double> inv(n * n, 0.0);
  for (int i = 0; i < n; ++i) inv[i * n + i] = 1.0;
  for (int col = 0; col < n; ++col) {
    int pivot = col;
    for (int r = col + 1; r < n; ++r)
      if (std::abs(a[r * n + col]) > std::abs(a[pivot * n + col])) pivot = r;
    if (a[pivot * n + col] == 0.0)
      throw std::runtime_error("gj_inverse: singular matrix");
    if (pivot != col) {
      for (int c = 0; c < n; ++c) {
        std::swap(a[pivot * n + c], a[col * n + c]);
        std::swap(inv[pivot * n + c], inv[col * n + c]);
      }
    }
    const double d = a[col * n + col];
    for (int c = 0; c < n; ++c) {
      a[col * n + c] /= d;
      inv[col * n + c] /= d;
    }
    for (int r = 0; r < n; ++r) {
      if (r == col) continue;
      const double f = a[r * n + col];
      if (f == 0.0) continue;
      for (int c = 0; c < n; ++c) {
        a[r * n + c] -= f * a[col * n + c];
        inv[r * n + c] -= f * inv[col * n + c];
      }
    }
  }
  return inv;
}

inline std::vector<double> matmul(int n, const std::vector<double>& a,
                                  const std::vector<double>& b) {
  std::vector<double> c(n * n, 0.0);
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) {
      const double aik = a[i * n + k];
      for (int j = 0; j < n; ++j) c[i * n + j] += aik * b[k * n + j];
    }
  return c;
}

inline double frobenius(const std::vector<double>& a) {
  double s = 0.0;
  for (double x : a) s += x * x;
  return std::sqrt(s);
}

// A^lambda for SPD A via the integral representation
//   x^lambda = sin(lambda pi)/pi * Int_0^inf t^(lambda-1) (1 + t x^-1)^-1 dt,
// substituting t = e^s (the integrand then decays exponentially both ways)
// and refining a trapezoid rule by step halving until the change is below
// tol relative. Uses only Gauss-Jordan solves.
inline std::vector<double> power_via_integral(int n,
                                              const std::vector<double>& a,
                                              double lambda, double tol) {
  if (!(lambda > 0.0 && lambda < 1.0))
    throw std::runtime_error("power_via_integral needs lambda in (0,1)");
  const std::vector<double> a_inv = gj_inverse(n, a);

  // Generous truncation: the integrand norm is ~e^(lambda s) on the left and
  // ~||A|| e^((lambda-1) s) on the right.
  const double s_lo = std::log(1e-18) / lambda - 8.0;
  const double s_hi = -std::log(1e-18) / (1.0 - lambda) +
                      std::log(1.0 + frobenius(a)) + 8.0;

  const auto integrand = [&](double s) {
    const double t = std::exp(s);
    std::vector<double> m(n * n);
    for (int i = 0; i < n * n; ++i) m[i] = t * a_inv[i];
    for (int i = 0; i < n; ++i) m[i * n + i] += 1.0;
    std::vector<double> r = gj_inverse(n, std::move(m));
    const double w = std::exp(lambda * s);
    for (double& x : r) x *= w;
    return r;
  };

  const auto trapezoid = [&](double h) {
    std::vector<double> acc(n * n, 0.0);
    const int steps = static_cast<int>(std::ceil((s_hi - s_lo) / h));
    for (int k = 0; k <= steps; ++k) {
      const double s = s_lo + k * h;
      const double w = (k == 0 || k == steps) ? 0.5 : 1.0;
      const std::vector<double> f = integrand(s);
      for (int i = 0; i < n * n; ++i) acc[i] += w * h * f[i];
    }
    return acc;
  };

  std::vector<double> prev = trapezoid(1.0);
  for (double h = 0.5; h >= 1.0 / 256.0; h *= 0.5) {
    std::vector<double> cur = trapezoid(h);
    std::vector<double> diff(n * n);
    for (int i = 0; i < n * n; ++i) diff[i] = cur[i] - prev[i];
    const double rel = frobenius(diff) / frobenius(cur);
    prev = std::move(cur);
    if (rel < tol) break;
  }
  const double factor = std::sin(lambda * std::numbers::pi) / std::numbers::pi;
  for (double& x : prev) x *= factor;
  return prev;
}

// Scalar weighted means; in the commuting case every implemented mean acts
// entrywise through these.
inline double arithmetic(double a, double b, double l) {
  return (1.0 - l) * a + l * b;
}
inline double harmonic(double a, double b, double l) {
  return 1.0 / ((1.0 - l) / a + l / b);
}
inline double geometric(double a, double b, double l) {
  return std::pow(a, 1.0 - l) * std::pow(b, l);
}

}  // namespace oracle
