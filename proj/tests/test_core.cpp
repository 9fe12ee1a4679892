#include <doctest.h>

#include <cmath>
#include <limits>
#include <string>

#include "jordan/random.hpp"
#include "jordan/symmetric_matrix.hpp"
#include "oracles.hpp"

using namespace jordan;

namespace {

std::shared_ptr<const SymmetricMatrixAlgebra> sym(int n) {
  return std::make_shared<SymmetricMatrixAlgebra>(n);
}

AlgebraElement diag2(const std::shared_ptr<const SymmetricMatrixAlgebra>& alg,
                     double a, double b) {
  return alg->element({a, 0.0, 0.0, b});
}

}  // namespace

TEST_CASE("jordan product basics") {
  auto alg = sym(2);
  const AlgebraElement b = alg->element({1.0, 2.0, 2.0, -0.5});

  CHECK(norm(jordan_product(alg->unit(), b) - b) < 1e-15);

  const AlgebraElement d1 = diag2(alg, 1, 2);
  const AlgebraElement d2 = diag2(alg, 3, 4);
  CHECK(norm(jordan_product(d1, d2) - diag2(alg, 3, 8)) < 1e-15);

  // Anticommuting pair: A o B = 0.
  const AlgebraElement a = alg->element({0, 1, 1, 0});
  const AlgebraElement s3 = alg->element({1, 0, 0, -1});
  const AlgebraElement prod = jordan_product(a, s3);
  CHECK(norm(prod) < 1e-15);
  // Cross-check against (AB + BA)/2 from the associative oracle.
  const AlgebraElement assoc =
      0.5 * (associative_product(a, s3) + associative_product(s3, a));
  CHECK(norm(prod - assoc) < 1e-15);
}

TEST_CASE("jordan identity holds on random elements") {
  for (int dim : {2, 4, 6}) {
    auto alg = sym(dim);
    Rng rng(2024 + dim);
    for (int i = 0; i < 50; ++i) {
      const AlgebraElement a = random_symmetric(alg, rng);
      const AlgebraElement b = random_symmetric(alg, rng);
      CHECK(norm(jordan_product(a, b) - jordan_product(b, a)) <=
            1e-14 * norm(a) * norm(b));
      const AlgebraElement a2 = jordan_product(a, a);
      const AlgebraElement lhs = jordan_product(jordan_product(a2, b), a);
      const AlgebraElement rhs = jordan_product(a2, jordan_product(b, a));
      CHECK(norm(lhs - rhs) <= 1e-10 * norm(a) * norm(a) * norm(b) + 1e-14);
    }
  }
}

TEST_CASE("quadratic representation") {
  auto alg = sym(4);
  Rng rng(7);

  SUBCASE("U_I is the identity map") {
    const AlgebraElement b = random_symmetric(alg, rng);
    CHECK(norm(quadratic_rep(alg->unit(), b) - b) < 1e-14);
  }

  SUBCASE("{A A^-1 A} = A") {
    const AlgebraElement a = random_positive(alg, 10.0, rng);
    CHECK(rel_distance(quadratic_rep(a, inverse(a)), a) < 1e-12);
  }

  SUBCASE("matches the associative triple product") {
    for (int i = 0; i < 50; ++i) {
      const AlgebraElement a = random_symmetric(alg, rng);
      const AlgebraElement b = random_symmetric(alg, rng);
      const AlgebraElement oracle =
          associative_product(associative_product(a, b), a);
      CHECK(norm(quadratic_rep(a, b) - oracle) <
            1e-13 * std::max(1.0, norm(a) * norm(a) * norm(b)));
    }
  }

  SUBCASE("positivity: B >= 0 implies {ABA} >= 0") {
    for (int i = 0; i < 50; ++i) {
      const AlgebraElement a = random_symmetric(alg, rng);
      const AlgebraElement b = random_psd(alg, 2.0, rng);
      CHECK(min_eigenvalue(quadratic_rep(a, b)) >= -1e-10);
    }
  }

  SUBCASE("inverse of {ABA} is {A^-1 B^-1 A^-1}") {
    for (int i = 0; i < 25; ++i) {
      const AlgebraElement a = random_positive(alg, 8.0, rng);
      const AlgebraElement b = random_positive(alg, 8.0, rng);
      CHECK(rel_distance(inverse(quadratic_rep(a, b)),
                         quadratic_rep(inverse(a), inverse(b))) < 1e-9);
    }
  }
}

TEST_CASE("spectral decomposition of a diagonal matrix") {
  auto alg = sym(2);
  const SpectralDecomposition sd = spectral_decompose(diag2(alg, 3, 1));
  REQUIRE(sd.eigenvalues.size() == 2);
  CHECK(sd.eigenvalues[0] == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(sd.eigenvalues[1] == doctest::Approx(3.0).epsilon(1e-14));
  CHECK(norm(sd.idempotents[0] - diag2(alg, 0, 1)) < 1e-14);
  CHECK(norm(sd.idempotents[1] - diag2(alg, 1, 0)) < 1e-14);
}

TEST_CASE("spectral decomposition axioms on random elements") {
  const Tolerances tol;
  for (int dim : {2, 3, 6}) {
    auto alg = sym(dim);
    Rng rng(100 + dim);
    for (int trial = 0; trial < 20; ++trial) {
      const AlgebraElement a = random_symmetric(alg, rng);
      const SpectralDecomposition sd = spectral_decompose(a);

      AlgebraElement sum = alg->zero();
      AlgebraElement rebuilt = alg->zero();
      for (size_t i = 0; i < sd.eigenvalues.size(); ++i) {
        const AlgebraElement& e = sd.idempotents[i];
        CHECK(norm(jordan_product(e, e) - e) <= tol.spec);
        for (size_t j = i + 1; j < sd.idempotents.size(); ++j)
          CHECK(norm(jordan_product(e, sd.idempotents[j])) <= tol.spec);
        if (i > 0) CHECK(sd.eigenvalues[i] > sd.eigenvalues[i - 1]);
        sum += e;
        rebuilt += sd.eigenvalues[i] * e;
      }
      CHECK(norm(sum - alg->unit()) <= tol.spec);
      CHECK(norm(rebuilt - a) <= tol.spec * std::max(norm(a), 1e-30));
    }
  }
}

TEST_CASE("decomposition groups exact degeneracies") {
  auto alg = sym(3);
  const SpectralDecomposition sd = spectral_decompose(alg->unit() * 2.0);
  CHECK(sd.eigenvalues.size() == 1);
  CHECK(norm(sd.idempotents[0] - alg->unit()) < 1e-13);
}

TEST_CASE("apply_function and the power family") {
  auto alg = sym(2);
  Rng rng(11);

  SUBCASE("A^0 = I for positive invertible A") {
    const AlgebraElement a = random_positive(alg, 20.0, rng);
    CHECK(norm(powm(a, 0.0) - alg->unit()) < 1e-13);
  }

  SUBCASE("diag(4,9)^(1/2) = diag(2,3)") {
    CHECK(norm(sqrtm(diag2(alg, 4, 9)) - diag2(alg, 2, 3)) < 1e-14);
  }

  SUBCASE("identity function reproduces the input") {
    const AlgebraElement a = random_symmetric(alg, rng);
    CHECK(norm(apply_function(a, [](double l) { return l; }) - a) <=
          1e-10 * std::max(1.0, norm(a)));
  }

  SUBCASE("power composition (A^x)^y = A^(xy)") {
    auto alg5 = sym(5);
    for (int i = 0; i < 20; ++i) {
      const AlgebraElement a = random_positive(alg5, 10.0, rng);
      const double x = rng.uniform(-2.0, 2.0);
      const double y = rng.uniform(-2.0, 2.0);
      CHECK(rel_distance(powm(powm(a, x), y), powm(a, x * y)) < 1e-9);
    }
  }

  SUBCASE("exp and log invert each other") {
    const AlgebraElement a = random_symmetric(alg, rng);
    CHECK(norm(logm(expm(a)) - a) < 1e-12 * std::max(1.0, norm(a)));
  }

  SUBCASE("log of a non-positive element names the eigenvalue") {
    try {
      logm(diag2(alg, 2, -3));
      FAIL("expected DomainError");
    } catch (const DomainError& e) {
      CHECK(std::string(e.what()).find("-3") != std::string::npos);
    }
  }
}

TEST_CASE("fractional power matches the integral representation") {
  const int n = 5;
  auto alg = sym(n);
  Rng rng(37);
  const double lambda = 0.37;
  for (int trial = 0; trial < 5; ++trial) {
    const AlgebraElement a = random_positive(alg, 10.0, rng);
    const AlgebraElement via_spectrum = powm(a, lambda);
    const std::vector<double> via_integral =
        oracle::power_via_integral(n, a.coords(), lambda, 1e-13);
    const AlgebraElement diff =
        via_spectrum - AlgebraElement::raw(alg, via_integral);
    CHECK(norm(diff) < 1e-9 * norm(via_spectrum));
  }
}

TEST_CASE("positivity predicate") {
  auto alg = sym(2);
  CHECK(is_positive_invertible(alg->unit()));
  CHECK_FALSE(is_positive_invertible(diag2(alg, 1, -1)));
  CHECK_FALSE(is_positive_invertible(diag2(alg, 1, 0)));
  CHECK_FALSE(is_positive_invertible(diag2(alg, 1, 1e-14)));
}

TEST_CASE("loewner order") {
  auto alg = sym(2);
  Rng rng(5);
  const AlgebraElement a = random_positive(alg, 10.0, rng);
  CHECK(loewner_leq(a, a, 0.0));
  CHECK(loewner_leq(diag2(alg, 1, 1), diag2(alg, 2, 3), 0.0));
  CHECK_FALSE(loewner_leq(diag2(alg, 2, 3), diag2(alg, 1, 1), 1e-9));
  CHECK(loewner_violation(diag2(alg, 2, 1), diag2(alg, 1, 5)) ==
        doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("norms") {
  auto alg = sym(2);
  CHECK(norm(alg->unit()) == doctest::Approx(1.0));
  CHECK(norm(diag2(alg, -3, 2)) == doctest::Approx(3.0));

  Rng rng(9);
  auto alg4 = sym(4);
  for (int i = 0; i < 30; ++i) {
    const AlgebraElement a = random_symmetric(alg4, rng);
    const AlgebraElement b = random_symmetric(alg4, rng);
    CHECK(spectral_radius(a) == norm(a));
    // JB norm axioms at round-off scale.
    CHECK(norm(jordan_product(a, a)) ==
          doctest::Approx(norm(a) * norm(a)).epsilon(1e-10));
    CHECK(norm(jordan_product(a, b)) <= norm(a) * norm(b) * (1.0 + 1e-10));
  }
}

TEST_CASE("algebra mismatch is rejected") {
  auto a2 = sym(2);
  auto a3 = sym(3);
  Rng rng(1);
  const AlgebraElement x = random_symmetric(a2, rng);
  const AlgebraElement y = random_symmetric(a3, rng);
  CHECK_THROWS_AS(jordan_product(x, y), AlgebraMismatchError);
  CHECK_THROWS_AS(x + y, AlgebraMismatchError);
}

TEST_CASE("element construction validation") {
  auto alg = sym(2);
  CHECK_THROWS_AS(alg->element({1.0, 2.0}), DomainError);
  CHECK_THROWS_AS(
      alg->element({1.0, 0.0, 0.0, std::numeric_limits<double>::quiet_NaN()}),
      DomainError);
  // Ingest symmetrizes.
  const AlgebraElement a = alg->element({1.0, 4.0, 2.0, 5.0});
  CHECK(a.coords()[1] == doctest::Approx(3.0));
  CHECK(a.coords()[2] == doctest::Approx(3.0));
}

TEST_CASE("tolerances validation") {
  Tolerances tol;
  CHECK_NOTHROW(tol.validate());
  tol.pos = 0.0;
  CHECK_THROWS_AS(tol.validate(), DomainError);
  tol.pos = 1e-16;
  CHECK_THROWS_AS(tol.validate(), DomainError);
}

TEST_CASE("symmetry type validates S^2 = I") {
  auto alg = sym(3);
  CHECK_NOTHROW(Symmetry(alg->element({1, 0, 0, 0, -1, 0, 0, 0, 1})));
  CHECK_THROWS_AS(Symmetry(alg->unit() * 2.0), DomainError);
  Rng rng(77);
  const Symmetry s = make_symmetry(alg, rng);
  const AlgebraElement x = random_symmetric(alg, rng);
  // U_S is an involution.
  CHECK(norm(s.congruence(s.congruence(x)) - x) < 1e-12);
}
