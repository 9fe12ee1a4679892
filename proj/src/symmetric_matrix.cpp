#include "jordan/symmetric_matrix.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

namespace jordan {

namespace {

constexpr double kOffDiagTolFactor = 1e-13;
constexpr int kMaxSweeps = 100;
// Grouping is for exact (and machine-level) degeneracies only. A larger
// threshold would replace clustered eigenvalues by their mean and corrupt
// norms and order checks of small-norm elements such as differences.
constexpr double kGroupGapFactor = 1e-13;

// C = A*B, all row-major n x n. C must not alias A or B.
void matmul(int n, const double* a, const double* b, double* c) {
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      double s = 0.0;
      for (int k = 0; k < n; ++k) s += a[i * n + k] * b[k * n + j];
      c[i * n + j] = s;
    }
  }
}

double offdiag_frobenius(int n, const std::vector<double>& a) {
  double s = 0.0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j) s += a[i * n + j] * a[i * n + j];
  return std::sqrt(s);
}

}  // namespace

SymmetricMatrixAlgebra::SymmetricMatrixAlgebra(int n)
    : n_(n), tag_("symmetric:" + std::to_string(n)) {
  if (n < 1) throw DomainError("matrix dimension must be >= 1");
}

void SymmetricMatrixAlgebra::product(std::span<const double> a,
                                     std::span<const double> b,
                                     std::span<double> out) const {
  const int n = n_;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      double s = 0.0;
      for (int k = 0; k < n; ++k)
        s += a[i * n + k] * b[k * n + j] + b[i * n + k] * a[k * n + j];
      out[i * n + j] = 0.5 * s;
    }
  }
}

std::vector<double> SymmetricMatrixAlgebra::unit_coords() const {
  std::vector<double> c(n_ * n_, 0.0);
  for (int i = 0; i < n_; ++i) c[i * n_ + i] = 1.0;
  return c;
}

void SymmetricMatrixAlgebra::canonicalize(std::vector<double>& coords) const {
  for (int i = 0; i < n_; ++i) {
    for (int j = i + 1; j < n_; ++j) {
      const double m = 0.5 * (coords[i * n_ + j] + coords[j * n_ + i]);
      coords[i * n_ + j] = m;
      coords[j * n_ + i] = m;
    }
  }
}

AlgebraElement SymmetricMatrixAlgebra::from_rows(
    const std::vector<std::vector<double>>& rows) const {
  if (static_cast<int>(rows.size()) != n_)
    throw DomainError("matrix ingest: wrong row count");
  std::vector<double> coords(n_ * n_);
  for (int i = 0; i < n_; ++i) {
    if (static_cast<int>(rows[i].size()) != n_)
      throw DomainError("matrix ingest: ragged rows");
    for (int j = 0; j < n_; ++j) coords[i * n_ + j] = rows[i][j];
  }
  return element(std::move(coords));
}

SpectralDecomposition SymmetricMatrixAlgebra::decompose(
    const AlgebraElement& el) const {
  const int n = n_;
  std::vector<double> a = el.coords();
  // Work on the symmetric part; elements built through the public factory
  // are already symmetric.
  canonicalize(a);

  std::vector<double> v(n * n, 0.0);
  for (int i = 0; i < n; ++i) v[i * n + i] = 1.0;

  double fro = 0.0;
  for (double x : a) fro += x * x;
  fro = std::sqrt(fro);
  const double threshold = kOffDiagTolFactor * fro;

  if (fro > 0.0) {
    int sweep = 0;
    while (offdiag_frobenius(n, a) > threshold) {
      if (++sweep > kMaxSweeps) {
        std::ostringstream os;
        os << "jacobi eigensolver did not converge after " << kMaxSweeps
           << " sweeps: off-diagonal " << offdiag_frobenius(n, a)
           << " vs threshold " << threshold;
        throw NumericError(os.str());
      }
      for (int p = 0; p < n - 1; ++p) {
        for (int q = p + 1; q < n; ++q) {
          const double apq = a[p * n + q];
          if (apq == 0.0) continue;
          const double app = a[p * n + p];
          const double aqq = a[q * n + q];
          const double theta = (aqq - app) / (2.0 * apq);
          double t;
          if (std::abs(theta) > 1e150) {
            t = 1.0 / (2.0 * theta);
          } else {
            t = 1.0 / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
            if (theta < 0.0) t = -t;
          }
          const double c = 1.0 / std::sqrt(t * t + 1.0);
          const double s = t * c;

          for (int k = 0; k < n; ++k) {
            const double akp = a[k * n + p];
            const double akq = a[k * n + q];
            a[k * n + p] = c * akp - s * akq;
            a[k * n + q] = s * akp + c * akq;
          }
          for (int k = 0; k < n; ++k) {
            const double apk = a[p * n + k];
            const double aqk = a[q * n + k];
            a[p * n + k] = c * apk - s * aqk;
            a[q * n + k] = s * apk + c * aqk;
          }
          for (int k = 0; k < n; ++k) {
            const double vkp = v[k * n + p];
            const double vkq = v[k * n + q];
            v[k * n + p] = c * vkp - s * vkq;
            v[k * n + q] = s * vkp + c * vkq;
          }
        }
      }
    }
  }

  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int i, int j) {
    return a[i * n + i] < a[j * n + j];
  });

  std::vector<double> lambda(n);
  for (int i = 0; i < n; ++i) lambda[i] = a[order[i] * n + order[i]];

  double sup = 0.0;
  for (double l : lambda) sup = std::max(sup, std::abs(l));
  const double gap_tol = kGroupGapFactor * (1.0 + sup);

  SpectralDecomposition sd;
  const auto self = shared_from_this();
  int i = 0;
  while (i < n) {
    int j = i;
    while (j + 1 < n && lambda[j + 1] - lambda[j] < gap_tol) ++j;
    // Projector onto the (grouped) eigenspace: sum of v_k v_k^T.
    std::vector<double> proj(n * n, 0.0);
    double mean = 0.0;
    for (int k = i; k <= j; ++k) {
      mean += lambda[k];
      const int col = order[k];
      for (int r = 0; r < n; ++r)
        for (int cidx = 0; cidx < n; ++cidx)
          proj[r * n + cidx] += v[r * n + col] * v[cidx * n + col];
    }
    mean /= (j - i + 1);
    sd.eigenvalues.push_back(mean);
    sd.idempotents.push_back(AlgebraElement::raw(self, std::move(proj)));
    i = j + 1;
  }
  return sd;
}

AlgebraElement associative_product(const AlgebraElement& a,
                                   const AlgebraElement& b) {
  require_same_algebra(a, b);
  const auto* alg =
      dynamic_cast<const SymmetricMatrixAlgebra*>(&a.algebra());
  if (alg == nullptr)
    throw DomainError(
        "associative_product is only defined on symmetric matrix algebras");
  const int n = alg->n();
  std::vector<double> out(n * n);
  matmul(n, a.coords().data(), b.coords().data(), out.data());
  return AlgebraElement::raw(a.algebra_ptr(), std::move(out));
}

}  // namespace jordan
