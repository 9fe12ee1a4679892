#pragma once

#include <string>

#include "jordan/algebra.hpp"

namespace jordan {

/// The four weighted 2-means.
enum class Mean2 { arithmetic, harmonic, geometric, spectral };

Mean2 parse_mean2(const std::string& name);
std::string mean2_name(Mean2 m);

/// (1-lambda) A + lambda B.
AlgebraElement arithmetic_mean2(const AlgebraElement& a,
                                const AlgebraElement& b, double lambda);

/// ((1-lambda) A^-1 + lambda B^-1)^-1.
AlgebraElement harmonic_mean2(const AlgebraElement& a, const AlgebraElement& b,
                              double lambda);

/// A #_lambda B = U_{A^{1/2}}( (U_{A^{-1/2}} B)^lambda ). A is decomposed
/// once; both half powers come from the same decomposition.
AlgebraElement geometric_mean2(const AlgebraElement& a,
                               const AlgebraElement& b, double lambda);

/// A natural_lambda B = U_{(A^{-1} # B)^lambda}(A), the weighted spectral
/// geometric mean.
AlgebraElement spectral_geometric_mean2(const AlgebraElement& a,
                                        const AlgebraElement& b,
                                        double lambda);

AlgebraElement mean2(Mean2 kind, const AlgebraElement& a,
                     const AlgebraElement& b, double lambda);

/// ||{X A^-1 X} - B|| / ||B||. Zero (up to round-off) at X = A # B.
double riccati_residual(const AlgebraElement& a, const AlgebraElement& b,
                        const AlgebraElement& x);

/// d(A, B) = 2 ||log(A^-1 # B)||. Symmetric, nondegenerate; no triangle
/// inequality is claimed for it.
double semi_metric(const AlgebraElement& a, const AlgebraElement& b);

/// ||A^-1 # (A natural_lambda B) - (A^-1 # B)^lambda|| relative to the
/// right-hand side: the defining equation of the spectral geometric mean.
double spectral_defining_residual(const AlgebraElement& a,
                                  const AlgebraElement& b, double lambda);

/// Two-sided bounds on the spectral geometric mean:
///   2^{1+lambda}(A + B^-1)^{-lambda} - A^-1  <=  A natural_lambda B
///                <=  [2^{1+lambda}(A^-1 + B)^{-lambda} - A]^{-1}.
/// The upper bound only applies when its bracket is positive invertible;
/// otherwise upper_applicable is false and upper_ok reports true vacuously.
struct SpectralBounds {
  bool lower_ok = false;
  bool upper_ok = false;
  bool upper_applicable = false;
  double lower_violation = 0.0;  ///< eigenvalue deficit, scale-relative
  double upper_violation = 0.0;
};

SpectralBounds spectral_bounds_check(const AlgebraElement& a,
                                     const AlgebraElement& b, double lambda,
                                     double tol);

/// || (A # X^-1) #_lambda (B # X^-1) - I || at X = A natural_lambda B.
/// Zero up to round-off for lambda in (0,1).
double characterization_residual(const AlgebraElement& a,
                                 const AlgebraElement& b, double lambda);

}  // namespace jordan
