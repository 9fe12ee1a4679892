#include <doctest.h>

#include <cmath>

#include "jordan/means2.hpp"
#include "jordan/random.hpp"
#include "jordan/spin_factor.hpp"
#include "jordan/symmetric_matrix.hpp"
#include "oracles.hpp"

using namespace jordan;

namespace {

std::shared_ptr<const SymmetricMatrixAlgebra> sym(int n) {
  return std::make_shared<SymmetricMatrixAlgebra>(n);
}

std::shared_ptr<const SpinFactorAlgebra> spin(int d) {
  return std::make_shared<SpinFactorAlgebra>(d);
}

}  // namespace

TEST_CASE("associative product oracle") {
  auto alg = sym(5);
  Rng rng(21);

  const AlgebraElement b = random_symmetric(alg, rng);
  CHECK(norm(associative_product(alg->unit(), b) - b) < 1e-14);

  for (int i = 0; i < 30; ++i) {
    const AlgebraElement a = random_symmetric(alg, rng);
    const AlgebraElement c = random_symmetric(alg, rng);
    const AlgebraElement jp = jordan_product(a, c);
    const AlgebraElement half_sum =
        0.5 * (associative_product(a, c) + associative_product(c, a));
    CHECK(norm(jp - half_sum) < 1e-12 * std::max(1.0, norm(a) * norm(c)));
  }

  // Unsupported on spin factors.
  auto sf = spin(2);
  Rng rng2(3);
  CHECK_THROWS_AS(
      associative_product(random_symmetric(sf, rng2), sf->unit()),
      DomainError);
}

TEST_CASE("special-algebra consistency across dimensions") {
  Rng rng(500);
  for (int dim = 2; dim <= 8; ++dim) {
    auto alg = sym(dim);
    for (int i = 0; i < 20; ++i) {
      const AlgebraElement a = random_symmetric(alg, rng);
      const AlgebraElement b = random_symmetric(alg, rng);
      const AlgebraElement triple =
          associative_product(associative_product(a, b), a);
      CHECK(norm(quadratic_rep(a, b) - triple) <=
            1e-12 * std::max(1.0, norm(a) * norm(a) * norm(b)));
    }
  }
}

TEST_CASE("spin factor spectral decomposition") {
  auto sf = spin(3);

  SUBCASE("scalar element") {
    const SpectralDecomposition sd =
        spectral_decompose(sf->from_parts(2.0, {0, 0, 0}));
    REQUIRE(sd.eigenvalues.size() == 1);
    CHECK(sd.eigenvalues[0] == doctest::Approx(2.0));
    CHECK(norm(sd.idempotents[0] - sf->unit()) < 1e-15);
  }

  SUBCASE("unit-vector part gives eigenvalues +-1") {
    const SpectralDecomposition sd =
        spectral_decompose(sf->from_parts(0.0, {1, 0, 0}));
    REQUIRE(sd.eigenvalues.size() == 2);
    CHECK(sd.eigenvalues[0] == doctest::Approx(-1.0));
    CHECK(sd.eigenvalues[1] == doctest::Approx(1.0));
  }

  SUBCASE("(2, u) with |u| = 1 decomposes as 1 and 3") {
    const double inv_sqrt3 = 1.0 / std::sqrt(3.0);
    const AlgebraElement a =
        sf->from_parts(2.0, {inv_sqrt3, inv_sqrt3, inv_sqrt3});
    const SpectralDecomposition sd = spectral_decompose(a);
    REQUIRE(sd.eigenvalues.size() == 2);
    CHECK(sd.eigenvalues[0] == doctest::Approx(1.0));
    CHECK(sd.eigenvalues[1] == doctest::Approx(3.0));
    // Idempotents (1, -+u)/2.
    CHECK(norm(sd.idempotents[0] -
               sf->from_parts(0.5, {-0.5 * inv_sqrt3, -0.5 * inv_sqrt3,
                                    -0.5 * inv_sqrt3})) < 1e-14);
    CHECK(norm(sd.idempotents[1] -
               sf->from_parts(0.5, {0.5 * inv_sqrt3, 0.5 * inv_sqrt3,
                                    0.5 * inv_sqrt3})) < 1e-14);
  }

  SUBCASE("axioms on random elements") {
    Rng rng(44);
    for (int i = 0; i < 50; ++i) {
      const AlgebraElement a = random_symmetric(sf, rng);
      const SpectralDecomposition sd = spectral_decompose(a);
      AlgebraElement rebuilt = sf->zero();
      AlgebraElement sum = sf->zero();
      for (size_t k = 0; k < sd.eigenvalues.size(); ++k) {
        const AlgebraElement& e = sd.idempotents[k];
        CHECK(norm(jordan_product(e, e) - e) < 1e-12);
        sum += e;
        rebuilt += sd.eigenvalues[k] * e;
      }
      CHECK(norm(sum - sf->unit()) < 1e-12);
      CHECK(norm(rebuilt - a) < 1e-12 * std::max(1.0, norm(a)));
    }
  }
}

TEST_CASE("spin factor jordan structure") {
  auto sf = spin(4);
  Rng rng(8);

  SUBCASE("unit acts as identity") {
    const AlgebraElement a = random_symmetric(sf, rng);
    CHECK(norm(jordan_product(sf->unit(), a) - a) < 1e-15);
  }

  SUBCASE("jordan identity") {
    for (int i = 0; i < 50; ++i) {
      const AlgebraElement a = random_symmetric(sf, rng);
      const AlgebraElement b = random_symmetric(sf, rng);
      const AlgebraElement a2 = jordan_product(a, a);
      CHECK(norm(jordan_product(jordan_product(a2, b), a) -
                 jordan_product(a2, jordan_product(b, a))) <
            1e-12 * std::max(1.0, norm(a) * norm(a) * norm(b)));
    }
  }

  SUBCASE("closed-form inverse satisfies both jordan-inverse axioms") {
    for (int i = 0; i < 50; ++i) {
      const double s = rng.uniform(-3.0, 3.0);
      std::vector<double> u(4);
      for (double& x : u) x = rng.normal();
      double nu2 = 0.0;
      for (double x : u) nu2 += x * x;
      if (std::abs(s * s - nu2) < 1e-3) continue;  // stay away from the cone edge
      const AlgebraElement a = sf->from_parts(s, u);
      std::vector<double> v = u;
      for (double& x : v) x = -x / (s * s - nu2);
      const AlgebraElement b = sf->from_parts(s / (s * s - nu2), v);
      CHECK(norm(jordan_product(a, b) - sf->unit()) < 1e-11);
      CHECK(norm(jordan_product(jordan_product(a, a), b) - a) < 1e-10);
      // And the functional-calculus inverse agrees.
      CHECK(norm(inverse(a) - b) < 1e-11 * std::max(1.0, norm(b)));
    }
  }

  SUBCASE("positivity iff s > |u|") {
    CHECK(is_positive_invertible(sf->from_parts(2.0, {1, 0, 0, 0})));
    CHECK_FALSE(is_positive_invertible(sf->from_parts(1.0, {1, 0, 0, 0})));
    CHECK_FALSE(is_positive_invertible(sf->from_parts(0.5, {1, 0, 0, 0})));
    CHECK_FALSE(is_positive_invertible(sf->from_parts(-2.0, {1, 0, 0, 0})));
    // Cross-check with the decomposition on random draws.
    for (int i = 0; i < 40; ++i) {
      const AlgebraElement a = random_symmetric(sf, rng);
      const double s = SpinFactorAlgebra::scalar_part(a);
      double nu = 0.0;
      for (double x : SpinFactorAlgebra::vector_part(a)) nu += x * x;
      nu = std::sqrt(nu);
      const bool expect = s - nu > 1e-10 * std::max(1.0, std::abs(s) + nu);
      CHECK(is_positive_invertible(a) == expect);
    }
  }

  SUBCASE("norm is |s| + |u|") {
    for (int i = 0; i < 20; ++i) {
      const AlgebraElement a = random_symmetric(sf, rng);
      const double s = SpinFactorAlgebra::scalar_part(a);
      double nu = 0.0;
      for (double x : SpinFactorAlgebra::vector_part(a)) nu += x * x;
      nu = std::sqrt(nu);
      CHECK(norm(a) == doctest::Approx(std::abs(s) + nu).epsilon(1e-12));
    }
  }
}

TEST_CASE("spin-diag isomorphism at d=1") {
  auto sf = spin(1);
  auto m2 = sym(2);

  CHECK(norm(spin_to_diag(sf->from_parts(1.0, {0.0}), m2) - m2->unit()) <
        1e-15);
  CHECK(norm(spin_to_diag(sf->from_parts(2.0, {1.0}), m2) -
             m2->element({3, 0, 0, 1})) < 1e-15);

  Rng rng(15);
  SUBCASE("transports products and powers") {
    for (int i = 0; i < 50; ++i) {
      const AlgebraElement a = random_symmetric(sf, rng);
      const AlgebraElement b = random_symmetric(sf, rng);
      CHECK(norm(spin_to_diag(jordan_product(a, b), m2) -
                 jordan_product(spin_to_diag(a, m2), spin_to_diag(b, m2))) <
            1e-13 * std::max(1.0, norm(a) * norm(b)));
      const AlgebraElement p = random_positive(sf, 10.0, rng);
      CHECK(norm(spin_to_diag(powm(p, 0.3), m2) -
                 powm(spin_to_diag(p, m2), 0.3)) < 1e-12);
    }
  }

  SUBCASE("round-trips") {
    const AlgebraElement a = random_symmetric(sf, rng);
    CHECK(norm(diag_to_spin(spin_to_diag(a, m2), sf) - a) < 1e-15);
  }

  SUBCASE("rejects wrong dimensions") {
    auto sf2 = spin(2);
    Rng r2(1);
    CHECK_THROWS_AS(spin_to_diag(random_symmetric(sf2, r2), m2), DomainError);
    CHECK_THROWS_AS(diag_to_spin(sym(2)->element({1, 2, 2, 1}), sf),
                    DomainError);
  }
}

TEST_CASE("random positive elements") {
  for (const auto& alg : std::vector<std::shared_ptr<const Algebra>>{
           sym(4), spin(3)}) {
    SUBCASE(alg->tag().c_str()) {
      // condition_cap = 1 collapses to the unit.
      Rng rng(123);
      CHECK(norm(random_positive(alg, 1.0, rng) - alg->unit()) < 1e-14);

      // Deterministic given the seed.
      const AlgebraElement a1 = random_positive(alg, 10.0, 77u);
      const AlgebraElement a2 = random_positive(alg, 10.0, 77u);
      CHECK(a1.coords() == a2.coords());

      int checked = 0;
      for (int i = 0; i < 1000; ++i) {
        const AlgebraElement p = random_positive(alg, 50.0, mix_seed(5, i));
        CHECK(is_positive_invertible(p));
        if (++checked <= 100) {
          const SpectralDecomposition sd = spectral_decompose(p);
          CHECK(sd.max_eigenvalue() / sd.min_eigenvalue() <=
                50.0 * (1.0 + 1e-9));
        }
      }
    }
  }
  CHECK_THROWS_AS(random_positive(sym(2), 0.5, 1u), DomainError);
}

TEST_CASE("random symmetries square to the unit") {
  for (const auto& alg : std::vector<std::shared_ptr<const Algebra>>{
           sym(5), spin(4)}) {
    Rng rng(31);
    for (int i = 0; i < 50; ++i) {
      const Symmetry s = make_symmetry(alg, rng);
      CHECK(norm(jordan_product(s.element(), s.element()) - alg->unit()) <=
            1e-10);
    }
  }
  // Spin symmetry (0, u) with |u| = 1 squares to (1, 0).
  auto sf = spin(2);
  const AlgebraElement s = sf->from_parts(0.0, {0.6, 0.8});
  CHECK(norm(jordan_product(s, s) - sf->unit()) < 1e-15);
  CHECK_NOTHROW(Symmetry{s});
}

TEST_CASE("random psd elements") {
  auto alg = sym(4);
  Rng rng(62);
  for (int i = 0; i < 50; ++i) {
    const AlgebraElement p = random_psd(alg, 3.0, rng);
    CHECK(min_eigenvalue(p) >= -1e-12);
    CHECK(norm(p) <= 3.0 * (1.0 + 1e-12));
  }
}
