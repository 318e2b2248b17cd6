#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "gen.hpp"
#include "quon/energy.hpp"
#include "quon/zagier.hpp"

using namespace quon;

namespace {

const QPolynomial kOne = QPolynomial::one();
const QPolynomial kQ = QPolynomial::q();
const QPolynomial kDen2 = QPolynomial::one() - QPolynomial::monomial(2);

const XGroupPolynomial& product4() {
  static const XGroupPolynomial value = coeffs_via_product(4);
  return value;
}

}  // namespace

TEST_CASE("grading bounds are enforced") {
  XGroupPolynomial x(3);
  CHECK_THROWS_AS(x.add_term(Permutation::identity(3), 3, QRational::one()),
                  std::invalid_argument);
  CHECK_THROWS_AS(x.add_term(Permutation::identity(3), -1, QRational::one()),
                  std::invalid_argument);
  CHECK_THROWS_AS(x.add_term(Permutation::identity(2), 0, QRational::one()),
                  std::invalid_argument);
}

TEST_CASE("graded convolution respects the embedding") {
  Rng rng(7001);
  const GroupAlgebraElement a = alpha(3);
  const GroupAlgebraElement b = alpha_inverse(3);
  CHECK(multiply(embed(a), embed(b)) == XGroupPolynomial::identity(3));
}

TEST_CASE("lowest-degree coefficient tables") {
  CHECK(coeffs_via_product(1) == XGroupPolynomial::identity(1));

  const XGroupPolynomial c2 = coeffs_via_product(2);
  const Permutation e2 = Permutation::identity(2);
  const Permutation t = t1k(2, 2);
  CHECK(c2.terms().size() == 4);
  CHECK(c2.coefficient(e2, 0) == QRational(kOne, kDen2));
  CHECK(c2.coefficient(e2, 1) == QRational(QPolynomial::monomial(2), kDen2));
  CHECK(c2.coefficient(t, 0) == QRational(-kQ, kDen2));
  CHECK(c2.coefficient(t, 1) == QRational(-kQ, kDen2));
  CHECK(c2.coefficient(e2, 0).evaluate_at(Rat(1, 2)) == Rat(4, 3));
  CHECK(c2.coefficient(e2, 1).evaluate_at(Rat(1, 2)) == Rat(1, 3));
  CHECK(c2.coefficient(t, 0).evaluate_at(Rat(1, 2)) == Rat(-2, 3));
}

TEST_CASE("both formulas produce the same coefficients") {
  for (int n = 1; n <= 3; ++n)
    CHECK(coeffs_via_product(n) == coeffs_via_explicit(n));
  CHECK(product4() == coeffs_via_explicit(4));
}

TEST_CASE("both formulas agree under specialization at degree five") {
  for (const Rat& q0 : {Rat(1, 3), Rat(-1, 2)})
    CHECK(coeffs_via_product_at(5, q0) == coeffs_via_explicit_at(5, q0));
}

TEST_CASE("specializing the symbolic coefficients matches the direct "
          "specialized run") {
  Rng rng(7002);
  for (int n = 1; n <= 3; ++n) {
    const XGroupPolynomial sym = coeffs_via_product(n);
    Rat q0;
    do {
      q0 = testgen::random_rat(rng, 5);
    } while (q0 == 1 || q0 == -1);
    const XGroupPolynomial spec = coeffs_via_product_at(n, q0);
    for (const Permutation& p : all_permutations(n))
      for (int d = 0; d < n; ++d)
        CHECK(spec.coefficient(p, d).constant_value() ==
              sym.coefficient(p, d).evaluate_at(q0));
  }
}

TEST_CASE("coefficients collapse to the minimal table at q = 0") {
  for (int n = 1; n <= 5; ++n) {
    const XGroupPolynomial at0 = coeffs_via_product_at(n, Rat(0));
    CHECK(at0.terms().size() == 1);
    CHECK(at0.coefficient(Permutation::identity(n), 0) == QRational::one());
  }
}

TEST_CASE("coefficient denominators divide the product of determinant "
          "factors") {
  for (int n = 1; n <= 3; ++n) {
    const QPolynomial bound = delta(n);
    const XGroupPolynomial coeffs = coeffs_via_product(n);
    for (const auto& [key, c] : coeffs.terms()) {
      const auto [quot, rem] = QPolynomial::divmod(bound, c.den());
      CHECK(rem.is_zero());
    }
  }
  const QPolynomial bound4 = delta(4);
  for (const auto& [key, c] : product4().terms()) {
    const auto [quot, rem] = QPolynomial::divmod(bound4, c.den());
    CHECK(rem.is_zero());
  }
}

TEST_CASE("closed form of the contraction element") {
  CHECK(r_p_closed(1) == XGroupPolynomial::identity(1));

  XGroupPolynomial expect2(2);
  expect2.add_term(Permutation::identity(2), 0, QRational::one());
  expect2.add_term(t1k(2, 2), 1, -QRational(kQ));
  CHECK(r_p_closed(2) == expect2);

  XGroupPolynomial expect3(3);
  expect3.add_term(Permutation::identity(3), 0, QRational::one());
  expect3.add_term(t1k(3, 2), 1, -QRational(kQ));
  expect3.add_term(t1k(3, 3), 1, -QRational::q_power(2));
  expect3.add_term(compose(t1k(3, 2), t1k(3, 3)), 2, QRational::q_power(3));
  CHECK(r_p_closed(3) == expect3);
}

TEST_CASE("defining and closed contraction elements agree") {
  for (int p = 1; p <= 3; ++p)
    CHECK(r_p_defining(p) == r_p_closed(p));
  CHECK(r_p_defining(4) == r_p_closed(4));
  CHECK(r_p_defining_at(5, Rat(1, 2)) == r_p_closed_at(5, Rat(1, 2)));
  CHECK(r_p_closed_at(3, Rat(1, 2)) ==
        r_p_defining_at(3, Rat(1, 2)));
}

TEST_CASE("coefficient symmetry holds symbolically through degree four") {
  for (int n = 1; n <= 4; ++n) {
    const CoefficientSymmetryReport report = check_coefficient_symmetry(n);
    CHECK(report.n == n);
    CHECK(!report.specialized);
    CHECK(report.pairs_checked == factorial(n) * n);
    CHECK(report.holds);
    CHECK(report.violations.empty());
  }
}

TEST_CASE("degree-five symmetry scan completes and reports") {
  const CoefficientSymmetryReport report =
      check_coefficient_symmetry_at(5, Rat(2, 7));
  CHECK(report.n == 5);
  CHECK(report.specialized);
  CHECK(report.q0 == Rat(2, 7));
  CHECK(report.pairs_checked == 600);
  CHECK(report.holds == report.violations.empty());
}

TEST_CASE("symbolic bounds on the coefficient builders") {
  CHECK_THROWS_AS(coeffs_via_product(5), std::invalid_argument);
  CHECK_THROWS_AS(coeffs_via_explicit(5), std::invalid_argument);
  CHECK_THROWS_AS(coeffs_via_product_at(6, Rat(1, 3)), std::invalid_argument);
  CHECK_THROWS_AS(coeffs_via_product_at(3, Rat(1)), singular_error);
}
