#include "jordan/algebra.hpp"

#include <cmath>
#include <sstream>

namespace jordan {

namespace {

std::string describe_eigenvalue(const char* op, double lambda) {
  std::ostringstream os;
  os << op << ": function undefined at eigenvalue " << lambda;
  return os.str();
}

void check_finite(const std::vector<double>& coords) {
  for (double c : coords) {
    if (!std::isfinite(c)) throw DomainError("element has non-finite coordinates");
  }
}

}  // namespace

void Tolerances::validate() const {
  if (!(spec > 0.0) || !(pos > 0.0) || !(prop > 0.0))
    throw DomainError("tolerances must be strictly positive");
  if (pos < 1e-15) throw DomainError("tol_pos below machine-epsilon scale");
}

// ---------------------------------------------------------------------------
// AlgebraElement
// ---------------------------------------------------------------------------

AlgebraElement::AlgebraElement(std::shared_ptr<const Algebra> algebra,
                               std::vector<double> coords)
    : algebra_(std::move(algebra)), coords_(std::move(coords)) {}

AlgebraElement AlgebraElement::raw(std::shared_ptr<const Algebra> algebra,
                                   std::vector<double> coords) {
  if (!algebra) throw DomainError("null algebra");
  if (static_cast<int>(coords.size()) != algebra->coord_dim())
    throw DomainError("coordinate length does not match algebra dimension");
  check_finite(coords);
  return AlgebraElement(std::move(algebra), std::move(coords));
}

AlgebraElement& AlgebraElement::operator+=(const AlgebraElement& rhs) {
  require_same_algebra(*this, rhs);
  for (size_t i = 0; i < coords_.size(); ++i) coords_[i] += rhs.coords_[i];
  return *this;
}

AlgebraElement& AlgebraElement::operator-=(const AlgebraElement& rhs) {
  require_same_algebra(*this, rhs);
  for (size_t i = 0; i < coords_.size(); ++i) coords_[i] -= rhs.coords_[i];
  return *this;
}

AlgebraElement& AlgebraElement::operator*=(double s) {
  for (double& c : coords_) c *= s;
  return *this;
}

void require_same_algebra(const AlgebraElement& a, const AlgebraElement& b) {
  if (!a.valid() || !b.valid()) throw DomainError("uninitialized element");
  if (a.algebra().tag() != b.algebra().tag())
    throw AlgebraMismatchError("algebra mismatch: " + a.algebra().tag() +
                               " vs " + b.algebra().tag());
}

// ---------------------------------------------------------------------------
// Algebra
// ---------------------------------------------------------------------------

AlgebraElement Algebra::element(std::vector<double> coords) const {
  if (static_cast<int>(coords.size()) != coord_dim())
    throw DomainError("coordinate length does not match algebra dimension");
  canonicalize(coords);
  check_finite(coords);
  return AlgebraElement(shared_from_this(), std::move(coords));
}

AlgebraElement Algebra::unit() const {
  return AlgebraElement(shared_from_this(), unit_coords());
}

AlgebraElement Algebra::zero() const {
  return AlgebraElement(shared_from_this(),
                        std::vector<double>(coord_dim(), 0.0));
}

void Algebra::canonicalize(std::vector<double>&) const {}

// ---------------------------------------------------------------------------
// SpectralDecomposition
// ---------------------------------------------------------------------------

double SpectralDecomposition::sup_abs_eigenvalue() const {
  double m = 0.0;
  for (double l : eigenvalues) m = std::max(m, std::abs(l));
  return m;
}

// ---------------------------------------------------------------------------
// Core operations
// ---------------------------------------------------------------------------

AlgebraElement jordan_product(const AlgebraElement& a,
                              const AlgebraElement& b) {
  require_same_algebra(a, b);
  std::vector<double> out(a.coords().size());
  a.algebra().product(a.coords(), b.coords(), out);
  return AlgebraElement::raw(a.algebra_ptr(), std::move(out));
}

AlgebraElement quadratic_rep(const AlgebraElement& a,
                             const AlgebraElement& b) {
  require_same_algebra(a, b);
  const AlgebraElement ab = jordan_product(a, b);
  const AlgebraElement aab = jordan_product(ab, a);
  const AlgebraElement a2 = jordan_product(a, a);
  const AlgebraElement a2b = jordan_product(a2, b);
  return 2.0 * aab - a2b;
}

SpectralDecomposition spectral_decompose(const AlgebraElement& a) {
  if (!a.valid()) throw DomainError("uninitialized element");
  return a.algebra().decompose(a);
}

AlgebraElement apply_spectral(const SpectralDecomposition& sd,
                              const std::function<double(double)>& f) {
  AlgebraElement out = sd.idempotents.front().algebra_ptr()->zero();
  for (size_t i = 0; i < sd.eigenvalues.size(); ++i) {
    const double v = f(sd.eigenvalues[i]);
    if (!std::isfinite(v))
      throw DomainError(describe_eigenvalue("apply_function", sd.eigenvalues[i]));
    out += v * sd.idempotents[i];
  }
  return out;
}

AlgebraElement apply_function(const AlgebraElement& a,
                              const std::function<double(double)>& f) {
  return apply_spectral(spectral_decompose(a), f);
}

AlgebraElement powm(const AlgebraElement& a, double p) {
  const bool integral = (p == std::floor(p)) && std::abs(p) < 1e9;
  const SpectralDecomposition sd = spectral_decompose(a);
  for (double l : sd.eigenvalues) {
    if (!integral && l <= 0.0)
      throw DomainError(describe_eigenvalue("powm", l));
    if (integral && p < 0.0 && l == 0.0)
      throw DomainError(describe_eigenvalue("powm", l));
  }
  return apply_spectral(sd, [p](double l) { return std::pow(l, p); });
}

AlgebraElement expm(const AlgebraElement& a) {
  return apply_function(a, [](double l) { return std::exp(l); });
}

AlgebraElement logm(const AlgebraElement& a) {
  const SpectralDecomposition sd = spectral_decompose(a);
  for (double l : sd.eigenvalues)
    if (l <= 0.0) throw DomainError(describe_eigenvalue("logm", l));
  return apply_spectral(sd, [](double l) { return std::log(l); });
}

AlgebraElement sqrtm(const AlgebraElement& a) {
  const SpectralDecomposition sd = spectral_decompose(a);
  for (double l : sd.eigenvalues)
    if (l < 0.0) throw DomainError(describe_eigenvalue("sqrtm", l));
  return apply_spectral(sd, [](double l) { return std::sqrt(l); });
}

AlgebraElement inverse(const AlgebraElement& a) {
  const SpectralDecomposition sd = spectral_decompose(a);
  for (double l : sd.eigenvalues)
    if (l == 0.0) throw DomainError(describe_eigenvalue("inverse", l));
  return apply_spectral(sd, [](double l) { return 1.0 / l; });
}

bool is_positive_invertible(const AlgebraElement& a, double tol_pos) {
  const SpectralDecomposition sd = spectral_decompose(a);
  return sd.min_eigenvalue() >
         tol_pos * std::max(1.0, sd.sup_abs_eigenvalue());
}

bool loewner_leq(const AlgebraElement& a, const AlgebraElement& b,
                 double slack) {
  require_same_algebra(a, b);
  return min_eigenvalue(b - a) >= -slack;
}

double loewner_violation(const AlgebraElement& a, const AlgebraElement& b) {
  require_same_algebra(a, b);
  return std::max(0.0, -min_eigenvalue(b - a));
}

double norm(const AlgebraElement& a) {
  return spectral_decompose(a).sup_abs_eigenvalue();
}

double spectral_radius(const AlgebraElement& a) { return norm(a); }

double min_eigenvalue(const AlgebraElement& a) {
  return spectral_decompose(a).min_eigenvalue();
}

double rel_distance(const AlgebraElement& a, const AlgebraElement& b) {
  return norm(a - b) / std::max(1.0, norm(b));
}

void require_positive(const AlgebraElement& a, const char* what,
                      double tol_pos) {
  if (!is_positive_invertible(a, tol_pos)) {
    std::ostringstream os;
    os << what << ": element is not positive invertible (min eigenvalue "
       << min_eigenvalue(a) << ")";
    throw NotPositiveError(os.str());
  }
}

// ---------------------------------------------------------------------------
// Symmetry
// ---------------------------------------------------------------------------

Symmetry::Symmetry(AlgebraElement s, double tol) : element_(std::move(s)) {
  const AlgebraElement sq = jordan_product(element_, element_);
  if (norm(sq - element_.algebra_ptr()->unit()) > tol)
    throw DomainError("not a symmetry: S^2 differs from I");
}

AlgebraElement Symmetry::congruence(const AlgebraElement& x) const {
  return quadratic_rep(element_, x);
}

}  // namespace jordan
