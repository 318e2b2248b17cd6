#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>

#include "gen.hpp"
#include "quon/zagier.hpp"

using namespace quon;

namespace {

QPolynomial P(std::vector<Rat> ascending) {
  return QPolynomial::from_coeffs(std::move(ascending));
}

const QPolynomial kOne = QPolynomial::one();

QPolynomial one_minus_q_to(int e) { return kOne - QPolynomial::monomial(e); }

Rat eval(const QPolynomial& p, const Rat& q0) { return p.evaluate(q0); }

}  // namespace

TEST_CASE("matrix entries for small degrees") {
  const ZagierMatrix one = ZagierMatrix::build(1);
  CHECK(one.order() == 1);
  CHECK(one.entry(0, 0) == kOne);

  const ZagierMatrix two = ZagierMatrix::build(2);
  CHECK(two.order() == 2);
  CHECK(two.entry(0, 0) == kOne);
  CHECK(two.entry(0, 1) == QPolynomial::q());
  CHECK(two.entry(1, 0) == QPolynomial::q());
  CHECK(two.entry(1, 1) == kOne);

  const ZagierMatrix three = ZagierMatrix::build(3);
  REQUIRE(three.permutations()[0].is_identity());
  std::vector<int> row;
  for (std::size_t c = 0; c < three.order(); ++c)
    row.push_back(three.exponent(0, c));
  std::sort(row.begin(), row.end());
  CHECK(row == std::vector<int>{0, 1, 1, 2, 2, 3});

  CHECK_THROWS_AS(ZagierMatrix::build(0), std::invalid_argument);
  CHECK_THROWS_AS(ZagierMatrix::build(7), std::invalid_argument);
}

TEST_CASE("matrix is symmetric with unit diagonal and monomial entries") {
  for (int n = 1; n <= 6; ++n) {
    const ZagierMatrix m = ZagierMatrix::build(n);
    const int top = m.max_exponent();
    for (std::size_t r = 0; r < m.order(); ++r) {
      CHECK(m.exponent(r, r) == 0);
      for (std::size_t c = r + 1; c < m.order(); ++c) {
        CHECK(m.exponent(r, c) == m.exponent(c, r));
        CHECK(m.exponent(r, c) >= 0);
        CHECK(m.exponent(r, c) <= top);
      }
    }
  }
}

TEST_CASE("denominator products") {
  CHECK(delta(1) == one_minus_q_to(2));
  CHECK(delta(2) == one_minus_q_to(2) * one_minus_q_to(6));
  CHECK(delta(3) == one_minus_q_to(2) * one_minus_q_to(6) * one_minus_q_to(12));
}

TEST_CASE("determinant product formula expands correctly") {
  CHECK(zagier_formula(1) == kOne);
  CHECK(zagier_formula(2) == P({1, 0, -1}));
  CHECK(zagier_formula(3) == one_minus_q_to(2).pow(6) * one_minus_q_to(6));
  CHECK(zagier_formula(4) ==
        one_minus_q_to(2).pow(36) * one_minus_q_to(6).pow(8) *
            one_minus_q_to(12).pow(2));
}

TEST_CASE("determinants match the product formula") {
  for (int n = 1; n <= 4; ++n)
    CHECK(determinant(ZagierMatrix::build(n)) == zagier_formula(n));
}

TEST_CASE("specialized determinant values agree with the symbolic ones") {
  Rng rng(5001);
  for (int n = 1; n <= 4; ++n) {
    const ZagierMatrix m = ZagierMatrix::build(n);
    const QPolynomial det = determinant(m);
    for (int trial = 0; trial < 4; ++trial) {
      const Rat q0 = testgen::random_rat(rng, 7);
      CHECK(determinant_at(m, q0) == eval(det, q0));
    }
  }
}

TEST_CASE("formula evaluation agrees with expansion") {
  Rng rng(5002);
  for (int n = 1; n <= 5; ++n)
    for (int trial = 0; trial < 3; ++trial) {
      const Rat q0 = testgen::random_rat(rng, 5);
      CHECK(zagier_formula_at(n, q0) == eval(zagier_formula(n), q0));
    }
}

TEST_CASE("symbolic inverse for the smallest degrees") {
  const auto inv1 = invert(ZagierMatrix::build(1));
  CHECK(inv1(0, 0) == QRational::one());

  const auto inv2 = invert(ZagierMatrix::build(2));
  const QPolynomial den = P({1, 0, -1});
  CHECK(inv2(0, 0) == QRational(kOne, den));
  CHECK(inv2(0, 1) == QRational(-QPolynomial::q(), den));
  CHECK(inv2(1, 0) == QRational(-QPolynomial::q(), den));
  CHECK(inv2(1, 1) == QRational(kOne, den));
  CHECK(inv2(0, 0).evaluate_at(Rat(1, 2)) == Rat(4, 3));
}

TEST_CASE("inverse composes to the identity") {
  for (int n = 1; n <= 3; ++n) {
    const ZagierMatrix m = ZagierMatrix::build(n);
    const auto inv = invert(m);
    for (std::size_t r = 0; r < m.order(); ++r)
      for (std::size_t c = 0; c < m.order(); ++c) {
        QRational acc;
        for (std::size_t k = 0; k < m.order(); ++k)
          acc += QRational(m.entry(r, k)) * inv(k, c);
        CHECK(acc == (r == c ? QRational::one() : QRational::zero()));
      }
  }
}

TEST_CASE("adjugate satisfies its defining identity") {
  const ZagierMatrix m = ZagierMatrix::build(3);
  const auto sol = adjugate(m);
  CHECK(sol.det == determinant(m));
  for (std::size_t r = 0; r < m.order(); ++r)
    for (std::size_t c = 0; c < m.order(); ++c) {
      QPolynomial acc;
      for (std::size_t k = 0; k < m.order(); ++k)
        acc += m.entry(r, k) * sol.scaled(k, c);
      CHECK(acc == (r == c ? sol.det : QPolynomial::zero()));
    }
}

TEST_CASE("inverse entries depend only on the left quotient of their indices") {
  for (int n = 2; n <= 4; ++n) {
    const ZagierMatrix m = ZagierMatrix::build(n);
    const auto sol = adjugate(m);
    const auto& perms = m.permutations();
    for (std::size_t r = 0; r < m.order(); ++r)
      for (std::size_t c = 0; c < m.order(); ++c) {
        const Permutation quotient = compose(perms[c].inverse(), perms[r]);
        CHECK(sol.scaled(r, c) == sol.scaled(quotient.lex_rank(), 0));
      }
  }
}

TEST_CASE("specialized inverse agrees with the symbolic inverse") {
  Rng rng(5003);
  for (int n = 1; n <= 3; ++n) {
    const ZagierMatrix m = ZagierMatrix::build(n);
    const auto sym = invert(m);
    const Rat q0 = Rat(Int(rng.int_in(-4, 4)), Int(7));
    const auto spec = invert_at(m, q0);
    for (std::size_t r = 0; r < m.order(); ++r)
      for (std::size_t c = 0; c < m.order(); ++c)
        CHECK(spec(r, c) == sym(r, c).evaluate_at(q0));
  }
}

TEST_CASE("specialized inverse solves the system at degree four") {
  const ZagierMatrix m = ZagierMatrix::build(4);
  const Rat q0(1, 3);
  const auto inv = invert_at(m, q0);
  for (std::size_t r = 0; r < m.order(); ++r)
    for (std::size_t c = 0; c < m.order(); ++c) {
      Rat acc(0);
      for (std::size_t k = 0; k < m.order(); ++k)
        acc += eval(m.entry(r, k), q0) * inv(k, c);
      CHECK(acc == (r == c ? Rat(1) : Rat(0)));
    }
}

TEST_CASE("inversion at the singular points is rejected") {
  const ZagierMatrix m = ZagierMatrix::build(2);
  CHECK_THROWS_AS(invert_at(m, Rat(1)), singular_error);
  CHECK_THROWS_AS(invert_at(m, Rat(-1)), singular_error);
}

TEST_CASE("scaled inverse entries are integer polynomials") {
  for (int n = 1; n <= 3; ++n) {
    const auto report = check_integrality(n);
    CHECK(report.n == n);
    CHECK(report.holds);
    CHECK(report.entries_checked == factorial(n) * factorial(n));
    CHECK(report.violations.empty());
  }
}

TEST_CASE("scaled inverse at degree two matches the worked-out entries") {
  const auto sol = adjugate(ZagierMatrix::build(2));
  const QPolynomial scale = delta(2);
  const QPolynomial expect_diag = one_minus_q_to(6);
  const QPolynomial expect_off = -QPolynomial::q() * one_minus_q_to(6);
  CHECK(QPolynomial::exact_div(scale * sol.scaled(0, 0), sol.det) == expect_diag);
  CHECK(QPolynomial::exact_div(scale * sol.scaled(0, 1), sol.det) == expect_off);
  CHECK(QPolynomial::exact_div(scale * sol.scaled(1, 0), sol.det) == expect_off);
  CHECK(QPolynomial::exact_div(scale * sol.scaled(1, 1), sol.det) == expect_diag);
}

TEST_CASE("positivity of leading principal minors inside the unit interval") {
  CHECK(positivity_probe(2, Rat(0)));
  CHECK(positivity_probe(3, Rat(1, 2)));
  CHECK(positivity_probe(3, Rat(-1, 2)));
  CHECK(positivity_probe(4, Rat(9, 10)));
  CHECK_THROWS_AS(positivity_probe(2, Rat(1)), std::invalid_argument);
  CHECK_THROWS_AS(positivity_probe(2, Rat(-3, 2)), std::invalid_argument);
}
