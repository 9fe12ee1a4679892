#pragma once

#include <memory>
#include <string>
#include <vector>

#include "jordan/algebra.hpp"

namespace jordan {

/// Real symmetric n x n matrices with the Jordan product
/// A o B = (AB + BA)/2. Coordinates are the full matrix, row-major;
/// ingest symmetrizes. This is a special JB-algebra: {ABA} equals the
/// associative triple product ABA.
class SymmetricMatrixAlgebra final : public Algebra {
 public:
  explicit SymmetricMatrixAlgebra(int n);

  int n() const { return n_; }
  const std::string& tag() const override { return tag_; }
  int coord_dim() const override { return n_ * n_; }

  void product(std::span<const double> a, std::span<const double> b,
               std::span<double> out) const override;

  /// Cyclic Jacobi with off-diagonal Frobenius threshold 1e-13 * ||A||_F and
  /// a 100-sweep cap; eigenvalues that coincide to machine scale
  /// (gap < 1e-13 * (1 + ||A||)) are grouped into a single idempotent.
  SpectralDecomposition decompose(const AlgebraElement& a) const override;

  /// Ingest from rows; symmetrized.
  AlgebraElement from_rows(const std::vector<std::vector<double>>& rows) const;

 protected:
  std::vector<double> unit_coords() const override;
  void canonicalize(std::vector<double>& coords) const override;

 private:
  int n_;
  std::string tag_;
};

/// Plain associative product A*B (not symmetrized). Verification oracle for
/// special-algebra identities such as {ABA} = A*B*A and
/// A o B = (A*B + B*A)/2. Only defined on SymmetricMatrixAlgebra elements;
/// the result's coordinates are generally not symmetric.
AlgebraElement associative_product(const AlgebraElement& a,
                                   const AlgebraElement& b);

}  // namespace jordan
