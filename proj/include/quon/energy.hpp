#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "quon/group_algebra.hpp"
#include "quon/permutation.hpp"
#include "quon/scalar.hpp"

namespace quon {

/// Polynomial in a commuting grading variable X with group-algebra
/// coefficients: a finitely supported map (permutation, X-degree) -> scalar.
/// X-degrees are bounded by n-1. The energy coefficient c_i(q, pi) is stored
/// at key (pi, i-1).
class XGroupPolynomial {
public:
  using Key = std::pair<Permutation, int>;

  explicit XGroupPolynomial(int n);

  static XGroupPolynomial identity(int n);

  int degree() const { return n_; }
  bool is_zero() const { return terms_.empty(); }
  const std::map<Key, QRational>& terms() const { return terms_; }

  QRational coefficient(const Permutation& p, int x_degree) const;
  /// Adds c at (p, x_degree), erasing the term if the sum vanishes.
  void add_term(const Permutation& p, int x_degree, const QRational& c);

  XGroupPolynomial& operator+=(const XGroupPolynomial& other);
  XGroupPolynomial& operator-=(const XGroupPolynomial& other);
  bool operator==(const XGroupPolynomial& other) const;
  bool operator!=(const XGroupPolynomial& other) const {
    return !(*this == other);
  }

  std::string str() const;

private:
  int n_;
  std::map<Key, QRational> terms_;
};

/// Convolution product; permutations compose, X-degrees add.
XGroupPolynomial multiply(const XGroupPolynomial& a, const XGroupPolynomial& b);

/// A group-algebra element viewed at X-degree zero.
XGroupPolynomial embed(const GroupAlgebraElement& a);

/// Energy coefficients from the generating product
/// alpha_n^{-1} (1 - q X T_{12}) (1 - q^2 X T_{13}) ... (1 - q^{n-1} X T_{1n}),
/// expanded left to right. Symbolic in q; n <= 4.
XGroupPolynomial coeffs_via_product(int n);
/// Same with q specialized to q0 (n <= 5).
XGroupPolynomial coeffs_via_product_at(int n, const Rat& q0);

/// Coefficient tables for every degree p = 1..max_n from the generating
/// product; levels[p-1] has degree p. Symbolic in q; max_n <= 4.
std::vector<XGroupPolynomial> energy_levels(int max_n);
/// Same with q specialized to q0 (max_n <= 5).
std::vector<XGroupPolynomial> energy_levels_at(int max_n, const Rat& q0);

/// Energy coefficients from the explicit double sum
/// c_i(q, pi) = (-1)^(i-1) sum over tau in S_{n,i-1} of
/// b(pi tau^{-1}) q^{I(tau)}, where b(sigma) is the coefficient of sigma
/// in alpha_n^{-1}, read off the inverse Gram matrix. Symbolic in q; n <= 4.
XGroupPolynomial coeffs_via_explicit(int n);
/// Same with q specialized to q0 (n <= 5).
XGroupPolynomial coeffs_via_explicit_at(int n, const Rat& q0);

/// alpha_p times the coefficient element of degree p. Symbolic; p <= 4.
XGroupPolynomial r_p_defining(int p);
/// Same with q specialized to q0 (p <= 5).
XGroupPolynomial r_p_defining_at(int p, const Rat& q0);

/// The closed form: sum over s and 1 < m_1 < ... < m_s <= p of
/// (-1)^s q^{(m_1-1)+...+(m_s-1)} X^s T_{1 m_1} ... T_{1 m_s}.
XGroupPolynomial r_p_closed(int p);
/// Same with q specialized to q0.
XGroupPolynomial r_p_closed_at(int p, const Rat& q0);

struct CoefficientSymmetryViolation {
  Permutation perm;
  int i;
  std::string value_at_i;
  std::string value_at_image;
};

/// Result of testing c_i(q, pi) = c_{pi(i)}(q, pi) over all pairs.
struct CoefficientSymmetryReport {
  int n = 0;
  bool specialized = false;
  Rat q0 = 0;
  std::size_t pairs_checked = 0;
  bool holds = false;
  std::vector<CoefficientSymmetryViolation> violations;
};

/// Checks the coefficient symmetry with symbolic q (n <= 4).
CoefficientSymmetryReport check_coefficient_symmetry(int n);
/// Checks it at a rational specialization (n <= 5).
CoefficientSymmetryReport check_coefficient_symmetry_at(int n, const Rat& q0);

/// Result of comparing, at q = 0, the assembled energy operator against the
/// number-operator form sum_i E(i) n(i) on random n-particle states.
struct GreenbergReport {
  int n = 0;
  std::uint64_t seed = 0;
  int draws = 0;
  bool coefficients_degenerate = false;
  bool actions_match = false;
  bool holds = false;
  std::vector<std::string> mismatches;
};

GreenbergReport greenberg_limit_check(int n, std::uint64_t seed = 2026,
                                      int draws = 10);

}  // namespace quon
