#include "jordan/spin_factor.hpp"

#include <cmath>

namespace jordan {

namespace {
constexpr double kVectorPartTol = 1e-14;
}

SpinFactorAlgebra::SpinFactorAlgebra(int d)
    : d_(d), tag_("spin:" + std::to_string(d)) {
  if (d < 1) throw DomainError("spin factor dimension must be >= 1");
}

void SpinFactorAlgebra::product(std::span<const double> a,
                                std::span<const double> b,
                                std::span<double> out) const {
  const double s = a[0];
  const double t = b[0];
  double dot = 0.0;
  for (int i = 1; i <= d_; ++i) dot += a[i] * b[i];
  out[0] = s * t + dot;
  for (int i = 1; i <= d_; ++i) out[i] = s * b[i] + t * a[i];
}

std::vector<double> SpinFactorAlgebra::unit_coords() const {
  std::vector<double> c(d_ + 1, 0.0);
  c[0] = 1.0;
  return c;
}

AlgebraElement SpinFactorAlgebra::from_parts(double s,
                                             std::vector<double> u) const {
  if (static_cast<int>(u.size()) != d_)
    throw DomainError("spin ingest: vector part has wrong dimension");
  std::vector<double> coords(d_ + 1);
  coords[0] = s;
  for (int i = 0; i < d_; ++i) coords[i + 1] = u[i];
  return element(std::move(coords));
}

std::vector<double> SpinFactorAlgebra::vector_part(const AlgebraElement& a) {
  return std::vector<double>(a.coords().begin() + 1, a.coords().end());
}

SpectralDecomposition SpinFactorAlgebra::decompose(
    const AlgebraElement& a) const {
  const double s = a.coords()[0];
  double nu2 = 0.0;
  for (int i = 1; i <= d_; ++i) nu2 += a.coords()[i] * a.coords()[i];
  const double nu = std::sqrt(nu2);

  const auto self = shared_from_this();
  SpectralDecomposition sd;
  if (nu <= kVectorPartTol * (1.0 + std::abs(s))) {
    sd.eigenvalues = {s};
    sd.idempotents = {unit()};
    return sd;
  }

  std::vector<double> lo(d_ + 1), hi(d_ + 1);
  lo[0] = 0.5;
  hi[0] = 0.5;
  for (int i = 1; i <= d_; ++i) {
    const double dir = a.coords()[i] / nu;
    lo[i] = -0.5 * dir;
    hi[i] = 0.5 * dir;
  }
  sd.eigenvalues = {s - nu, s + nu};
  sd.idempotents = {AlgebraElement::raw(self, std::move(lo)),
                    AlgebraElement::raw(self, std::move(hi))};
  return sd;
}

AlgebraElement spin_to_diag(
    const AlgebraElement& a,
    const std::shared_ptr<const SymmetricMatrixAlgebra>& target) {
  const auto* spin = dynamic_cast<const SpinFactorAlgebra*>(&a.algebra());
  if (spin == nullptr || spin->d() != 1)
    throw DomainError("spin_to_diag requires a d=1 spin factor element");
  if (!target || target->n() != 2)
    throw DomainError("spin_to_diag target must be symmetric:2");
  const double s = a.coords()[0];
  const double u = a.coords()[1];
  return target->element({s + u, 0.0, 0.0, s - u});
}

AlgebraElement diag_to_spin(
    const AlgebraElement& m,
    const std::shared_ptr<const SpinFactorAlgebra>& target) {
  const auto* mat = dynamic_cast<const SymmetricMatrixAlgebra*>(&m.algebra());
  if (mat == nullptr || mat->n() != 2)
    throw DomainError("diag_to_spin requires a symmetric:2 element");
  if (!target || target->d() != 1)
    throw DomainError("diag_to_spin target must be spin:1");
  const auto& c = m.coords();
  const double scale = std::max({std::abs(c[0]), std::abs(c[3]), 1.0});
  if (std::abs(c[1]) > 1e-12 * scale)
    throw DomainError("diag_to_spin requires a diagonal matrix");
  return target->from_parts(0.5 * (c[0] + c[3]), {0.5 * (c[0] - c[3])});
}

}  // namespace jordan
