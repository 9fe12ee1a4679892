#include "jordan/means2.hpp"

#include <cmath>

namespace jordan {

Mean2 parse_mean2(const std::string& name) {
  if (name == "arithmetic") return Mean2::arithmetic;
  if (name == "harmonic") return Mean2::harmonic;
  if (name == "geometric") return Mean2::geometric;
  if (name == "spectral") return Mean2::spectral;
  throw DomainError("unknown 2-mean: " + name);
}

std::string mean2_name(Mean2 m) {
  switch (m) {
    case Mean2::arithmetic: return "arithmetic";
    case Mean2::harmonic: return "harmonic";
    case Mean2::geometric: return "geometric";
    case Mean2::spectral: return "spectral";
  }
  return "?";
}

namespace {

void validate_pair(const AlgebraElement& a, const AlgebraElement& b,
                   const char* what) {
  require_same_algebra(a, b);
  require_positive(a, what);
  require_positive(b, what);
}

}  // namespace

AlgebraElement arithmetic_mean2(const AlgebraElement& a,
                                const AlgebraElement& b, double lambda) {
  validate_pair(a, b, "arithmetic_mean2");
  return (1.0 - lambda) * a + lambda * b;
}

AlgebraElement harmonic_mean2(const AlgebraElement& a, const AlgebraElement& b,
                              double lambda) {
  validate_pair(a, b, "harmonic_mean2");
  return inverse((1.0 - lambda) * inverse(a) + lambda * inverse(b));
}

AlgebraElement geometric_mean2(const AlgebraElement& a,
                               const AlgebraElement& b, double lambda) {
  validate_pair(a, b, "geometric_mean2");
  const SpectralDecomposition sd = spectral_decompose(a);
  const AlgebraElement a_half =
      apply_spectral(sd, [](double l) { return std::sqrt(l); });
  const AlgebraElement a_minus_half =
      apply_spectral(sd, [](double l) { return 1.0 / std::sqrt(l); });
  const AlgebraElement m = quadratic_rep(a_minus_half, b);
  return quadratic_rep(a_half, powm(m, lambda));
}

AlgebraElement spectral_geometric_mean2(const AlgebraElement& a,
                                        const AlgebraElement& b,
                                        double lambda) {
  validate_pair(a, b, "spectral_geometric_mean2");
  const AlgebraElement g = geometric_mean2(inverse(a), b, 0.5);  // A^-1 # B
  return quadratic_rep(powm(g, lambda), a);
}

AlgebraElement mean2(Mean2 kind, const AlgebraElement& a,
                     const AlgebraElement& b, double lambda) {
  switch (kind) {
    case Mean2::arithmetic: return arithmetic_mean2(a, b, lambda);
    case Mean2::harmonic: return harmonic_mean2(a, b, lambda);
    case Mean2::geometric: return geometric_mean2(a, b, lambda);
    case Mean2::spectral: return spectral_geometric_mean2(a, b, lambda);
  }
  throw DomainError("unknown 2-mean kind");
}

double riccati_residual(const AlgebraElement& a, const AlgebraElement& b,
                        const AlgebraElement& x) {
  require_same_algebra(a, b);
  require_same_algebra(a, x);
  require_positive(a, "riccati_residual");
  require_positive(b, "riccati_residual");
  require_positive(x, "riccati_residual");
  return norm(quadratic_rep(x, inverse(a)) - b) / norm(b);
}

double semi_metric(const AlgebraElement& a, const AlgebraElement& b) {
  validate_pair(a, b, "semi_metric");
  return 2.0 * norm(logm(geometric_mean2(inverse(a), b, 0.5)));
}

double spectral_defining_residual(const AlgebraElement& a,
                                  const AlgebraElement& b, double lambda) {
  validate_pair(a, b, "spectral_defining_residual");
  const AlgebraElement x = spectral_geometric_mean2(a, b, lambda);
  const AlgebraElement lhs = geometric_mean2(inverse(a), x, 0.5);
  const AlgebraElement rhs = powm(geometric_mean2(inverse(a), b, 0.5), lambda);
  return norm(lhs - rhs) / norm(rhs);
}

SpectralBounds spectral_bounds_check(const AlgebraElement& a,
                                     const AlgebraElement& b, double lambda,
                                     double tol) {
  validate_pair(a, b, "spectral_bounds_check");
  const AlgebraElement x = spectral_geometric_mean2(a, b, lambda);
  const double two_pow = std::pow(2.0, 1.0 + lambda);

  SpectralBounds result;
  const AlgebraElement lower =
      two_pow * powm(a + inverse(b), -lambda) - inverse(a);
  {
    const double scale = std::max({1.0, norm(lower), norm(x)});
    result.lower_violation = loewner_violation(lower, x) / scale;
    result.lower_ok = result.lower_violation <= tol;
  }

  const AlgebraElement bracket = two_pow * powm(inverse(a) + b, -lambda) - a;
  result.upper_applicable = is_positive_invertible(bracket);
  if (result.upper_applicable) {
    const AlgebraElement upper = inverse(bracket);
    const double scale = std::max({1.0, norm(upper), norm(x)});
    result.upper_violation = loewner_violation(x, upper) / scale;
    result.upper_ok = result.upper_violation <= tol;
  } else {
    result.upper_ok = true;  // vacuous; reported as not applicable
  }
  return result;
}

double characterization_residual(const AlgebraElement& a,
                                 const AlgebraElement& b, double lambda) {
  if (!(lambda > 0.0 && lambda < 1.0))
    throw DomainError("characterization_residual requires lambda in (0,1)");
  validate_pair(a, b, "characterization_residual");
  const AlgebraElement x_inv = inverse(spectral_geometric_mean2(a, b, lambda));
  const AlgebraElement u = geometric_mean2(a, x_inv, 0.5);
  const AlgebraElement v = geometric_mean2(b, x_inv, 0.5);
  return norm(geometric_mean2(u, v, lambda) - a.algebra_ptr()->unit());
}

}  // namespace jordan
