#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace jordan {

// ---------------------------------------------------------------------------
// Errors
// ---------------------------------------------------------------------------

/// Base class for all library errors.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Invalid input: mismatched algebras, values outside a function's domain,
/// malformed weights, and similar caller mistakes.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Operands belong to different algebras.
class AlgebraMismatchError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// An operation required a positive invertible element and did not get one.
class NotPositiveError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// Numerical failure, e.g. the eigensolver did not reach its threshold
/// within the sweep cap. The message carries the residual.
class NumericError : public Error {
 public:
  using Error::Error;
};

// ---------------------------------------------------------------------------
// Tolerances
// ---------------------------------------------------------------------------

/// Tolerance bundle shared by structural checks and property suites.
struct Tolerances {
  double spec = 1e-10;  ///< relative tolerance for structural identities
  double pos = 1e-10;   ///< relative positivity margin
  double prop = 1e-9;   ///< tolerance for property suites

  /// All members must be strictly positive; `pos` at machine-epsilon scale
  /// or above.
  void validate() const;
};

class Algebra;

// ---------------------------------------------------------------------------
// AlgebraElement
// ---------------------------------------------------------------------------

/// An element of a concrete finite-dimensional JB-algebra, stored as a real
/// coordinate vector in the algebra's fixed basis. Value-semantic; the
/// owning algebra is shared and immutable.
class AlgebraElement {
 public:
  AlgebraElement() = default;

  const Algebra& algebra() const { return *algebra_; }
  const std::shared_ptr<const Algebra>& algebra_ptr() const { return algebra_; }
  const std::vector<double>& coords() const { return coords_; }
  bool valid() const { return algebra_ != nullptr; }
  int size() const { return static_cast<int>(coords_.size()); }

  AlgebraElement& operator+=(const AlgebraElement& rhs);
  AlgebraElement& operator-=(const AlgebraElement& rhs);
  AlgebraElement& operator*=(double s);

  friend AlgebraElement operator+(AlgebraElement a, const AlgebraElement& b) {
    a += b;
    return a;
  }
  friend AlgebraElement operator-(AlgebraElement a, const AlgebraElement& b) {
    a -= b;
    return a;
  }
  friend AlgebraElement operator*(AlgebraElement a, double s) {
    a *= s;
    return a;
  }
  friend AlgebraElement operator*(double s, AlgebraElement a) {
    a *= s;
    return a;
  }
  friend AlgebraElement operator-(AlgebraElement a) {
    a *= -1.0;
    return a;
  }

  /// Construct without canonicalization (trusted internal paths and oracles
  /// that intentionally hold non-canonical coordinates). Coordinates must be
  /// finite and of the algebra's coordinate dimension.
  static AlgebraElement raw(std::shared_ptr<const Algebra> algebra,
                            std::vector<double> coords);

 private:
  AlgebraElement(std::shared_ptr<const Algebra> algebra,
                 std::vector<double> coords);

  std::shared_ptr<const Algebra> algebra_;
  std::vector<double> coords_;

  friend class Algebra;
};

/// Throws AlgebraMismatchError unless both elements live in the same algebra
/// (identified by tag).
void require_same_algebra(const AlgebraElement& a, const AlgebraElement& b);

// ---------------------------------------------------------------------------
// SpectralDecomposition
// ---------------------------------------------------------------------------

/// Eigenvalues (ascending) with matching orthogonal idempotents:
/// A = sum_i lambda_i e_i,  e_i o e_j = delta_ij e_i,  sum_i e_i = I.
struct SpectralDecomposition {
  std::vector<double> eigenvalues;
  std::vector<AlgebraElement> idempotents;

  double min_eigenvalue() const { return eigenvalues.front(); }
  double max_eigenvalue() const { return eigenvalues.back(); }
  /// max |lambda_i|, the spectral norm of the decomposed element.
  double sup_abs_eigenvalue() const;
};

// ---------------------------------------------------------------------------
// Algebra
// ---------------------------------------------------------------------------

/// A concrete unital JB-algebra: fixed coordinate basis, Jordan product, and
/// a spectral decomposition routine. Instances are immutable after
/// construction and shared by their elements.
class Algebra : public std::enable_shared_from_this<Algebra> {
 public:
  virtual ~Algebra() = default;

  /// Identifier such as "symmetric:4" or "spin:3"; elements are compatible
  /// iff their tags agree.
  virtual const std::string& tag() const = 0;

  /// Length of the coordinate vector.
  virtual int coord_dim() const = 0;

  /// Jordan product in coordinates; out must not alias a or b.
  virtual void product(std::span<const double> a, std::span<const double> b,
                       std::span<double> out) const = 0;

  virtual SpectralDecomposition decompose(const AlgebraElement& a) const = 0;

  /// Public element factory: canonicalizes (e.g. symmetrizes) and validates.
  AlgebraElement element(std::vector<double> coords) const;
  AlgebraElement unit() const;
  AlgebraElement zero() const;

 protected:
  virtual std::vector<double> unit_coords() const = 0;
  /// Bring raw coordinates to the algebra's canonical form. Default: no-op.
  virtual void canonicalize(std::vector<double>& coords) const;
};

// ---------------------------------------------------------------------------
// Core operations
// ---------------------------------------------------------------------------

/// A o B.
AlgebraElement jordan_product(const AlgebraElement& a, const AlgebraElement& b);

/// Quadratic representation {ABA} = 2(A o B) o A - A^2 o B.
AlgebraElement quadratic_rep(const AlgebraElement& a, const AlgebraElement& b);

SpectralDecomposition spectral_decompose(const AlgebraElement& a);

/// sum_i f(lambda_i) e_i over a precomputed decomposition. Throws DomainError
/// naming the offending eigenvalue when f evaluates non-finite.
AlgebraElement apply_spectral(const SpectralDecomposition& sd,
                              const std::function<double(double)>& f);

/// Functional calculus: decompose, then apply_spectral.
AlgebraElement apply_function(const AlgebraElement& a,
                              const std::function<double(double)>& f);

/// A^p. Non-integer p requires a strictly positive spectrum.
AlgebraElement powm(const AlgebraElement& a, double p);
AlgebraElement expm(const AlgebraElement& a);
/// log A, spectrum must be strictly positive.
AlgebraElement logm(const AlgebraElement& a);
AlgebraElement sqrtm(const AlgebraElement& a);
/// Jordan inverse via functional calculus; zero eigenvalue -> DomainError.
AlgebraElement inverse(const AlgebraElement& a);

/// True iff min eigenvalue > tol_pos * max(1, ||A||).
bool is_positive_invertible(const AlgebraElement& a, double tol_pos = 1e-10);

/// Loewner order with slack: min eigenvalue of (B - A) >= -slack.
bool loewner_leq(const AlgebraElement& a, const AlgebraElement& b,
                 double slack);

/// Eigenvalue deficit of A <= B: max(0, -min_eig(B - A)). Zero when the
/// inequality holds exactly.
double loewner_violation(const AlgebraElement& a, const AlgebraElement& b);

/// The JB norm on these algebras: max |eigenvalue|.
double norm(const AlgebraElement& a);
/// Spectral radius; coincides with norm for self-adjoint elements.
double spectral_radius(const AlgebraElement& a);
double min_eigenvalue(const AlgebraElement& a);

/// ||a - b|| / max(1, ||b||).
double rel_distance(const AlgebraElement& a, const AlgebraElement& b);

/// Throws NotPositiveError unless is_positive_invertible(a, tol_pos).
void require_positive(const AlgebraElement& a, const char* what,
                      double tol_pos = 1e-10);

// ---------------------------------------------------------------------------
// Symmetry
// ---------------------------------------------------------------------------

/// An element S with S^2 = I. Congruence by U_S preserves the means and the
/// semi-metric.
class Symmetry {
 public:
  /// Validates ||S o S - I|| <= tol; throws DomainError otherwise.
  explicit Symmetry(AlgebraElement s, double tol = 1e-8);

  const AlgebraElement& element() const { return element_; }

  /// U_S(x) = {SxS}.
  AlgebraElement congruence(const AlgebraElement& x) const;

 private:
  AlgebraElement element_;
};

}  // namespace jordan
