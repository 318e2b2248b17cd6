#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "quon/linalg.hpp"
#include "quon/permutation.hpp"
#include "quon/scalar.hpp"

namespace quon {

/// The n! x n! inner-product matrix of the n-particle sector: rows and
/// columns indexed by lexicographically ordered permutations, entry at
/// (pi, sigma) the monomial q^I(sigma^-1 pi). Stored as the exponent
/// table; entries materialize on demand.
class ZagierMatrix {
public:
  /// 1 <= n <= 6.
  static ZagierMatrix build(int n);

  int n() const { return n_; }
  std::size_t order() const { return order_; }
  /// Largest possible exponent, n(n-1)/2.
  int max_exponent() const { return n_ * (n_ - 1) / 2; }

  int exponent(std::size_t row, std::size_t col) const {
    return exponents_[row * order_ + col];
  }
  QPolynomial entry(std::size_t row, std::size_t col) const {
    return QPolynomial::monomial(exponent(row, col));
  }

  /// Row/column labels in matrix order.
  const std::vector<Permutation>& permutations() const { return perms_; }

private:
  int n_ = 0;
  std::size_t order_ = 0;
  std::vector<std::uint8_t> exponents_;
  std::vector<Permutation> perms_;
};

/// Product of (1 - q^(k^2+k)) for k = 1..n.
QPolynomial delta(int n);

/// Product formula for the determinant:
/// prod_k (1 - q^(k^2+k))^(n!(n-k)/(k^2+k)), expanded. Supported for
/// n <= 5; every exponent is checked to be a non-negative integer.
QPolynomial zagier_formula(int n);

/// The product formula evaluated exactly at q = q0 (any n <= 6).
Rat zagier_formula_at(int n, const Rat& q0);

/// Exact determinant in Z[q]. Fraction-free elimination for n <= 4; for
/// n = 5 computed by modular evaluation/interpolation with a certified
/// prime-count bound. Symbolic n = 6 is rejected.
QPolynomial determinant(const ZagierMatrix& m);

/// Exact determinant value at q = q0 (all supported n, including 6).
Rat determinant_at(const ZagierMatrix& m, const Rat& q0);

/// Adjugate matrix together with the determinant (n <= 4): the inverse is
/// scaled/det without the per-entry gcd reduction, which large callers
/// can skip.
FractionFreeSolution<QPolynomial> adjugate(const ZagierMatrix& m);

/// Symbolic inverse, n <= 4. Entries are reduced rational functions.
Matrix<QRational> invert(const ZagierMatrix& m);

/// Exact inverse at q = q0, n <= 5; throws singular_error at q0 = +-1.
Matrix<Rat> invert_at(const ZagierMatrix& m, const Rat& q0);

struct IntegralityReport {
  int n = 0;
  bool holds = false;
  std::size_t entries_checked = 0;
  /// (row, col) pairs whose scaled inverse entry is not an integer polynomial.
  std::vector<std::pair<std::size_t, std::size_t>> violations;
};

/// Tests whether delta(n) * inverse(A_n) has integer polynomial entries,
/// entry by entry. n <= 4.
IntegralityReport check_integrality(int n);

/// True iff every leading principal minor of A_n(q0) is positive; requires
/// |q0| < 1 and n <= 5.
bool positivity_probe(int n, const Rat& q0);

}  // namespace quon
