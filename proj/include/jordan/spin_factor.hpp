#pragma once

#include <memory>
#include <string>
#include <vector>

#include "jordan/algebra.hpp"
#include "jordan/symmetric_matrix.hpp"

namespace jordan {

/// Spin factor R (+) R^d: elements (s, u) with Jordan product
/// (s,u) o (t,v) = (st + <u,v>, sv + tu) and unit (1, 0).
/// Coordinates: [s, u_0, ..., u_{d-1}].
class SpinFactorAlgebra final : public Algebra {
 public:
  explicit SpinFactorAlgebra(int d);

  int d() const { return d_; }
  const std::string& tag() const override { return tag_; }
  int coord_dim() const override { return d_ + 1; }

  void product(std::span<const double> a, std::span<const double> b,
               std::span<double> out) const override;

  /// Closed form: eigenvalues s -+ ||u|| with idempotents (1, -+u/||u||)/2;
  /// ||u|| <= 1e-14 * (1 + |s|) is treated as u = 0 (single eigenvalue s,
  /// idempotent I).
  SpectralDecomposition decompose(const AlgebraElement& a) const override;

  AlgebraElement from_parts(double s, std::vector<double> u) const;

  static double scalar_part(const AlgebraElement& a) { return a.coords()[0]; }
  static std::vector<double> vector_part(const AlgebraElement& a);

 protected:
  std::vector<double> unit_coords() const override;

 private:
  int d_;
  std::string tag_;
};

/// Jordan isomorphism of the d=1 spin factor onto diagonal 2x2 matrices:
/// (s, u) -> diag(s + u, s - u). Transport oracle for cross-algebra checks.
/// Throws DomainError unless the element lives in a d=1 spin factor and the
/// target is a 2x2 symmetric matrix algebra.
AlgebraElement spin_to_diag(
    const AlgebraElement& a,
    const std::shared_ptr<const SymmetricMatrixAlgebra>& target);

/// Inverse of spin_to_diag; requires the matrix to be diagonal within
/// round-off of its norm.
AlgebraElement diag_to_spin(
    const AlgebraElement& m,
    const std::shared_ptr<const SpinFactorAlgebra>& target);

}  // namespace jordan
