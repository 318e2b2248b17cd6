#pragma once

#include <map>
#include <string>

#include "quon/permutation.hpp"
#include "quon/scalar.hpp"

namespace quon {

/// Element of the group algebra of the symmetric group on n letters with
/// exact rational-function coefficients. Zero coefficients are never stored.
class GroupAlgebraElement {
public:
  explicit GroupAlgebraElement(int n);

  static GroupAlgebraElement identity(int n);

  int degree() const { return n_; }
  bool is_zero() const { return terms_.empty(); }
  const std::map<Permutation, QRational>& terms() const { return terms_; }

  QRational coefficient(const Permutation& p) const;
  /// Adds c to the coefficient of p, erasing the term if the sum vanishes.
  void add_term(const Permutation& p, const QRational& c);

  GroupAlgebraElement& operator+=(const GroupAlgebraElement& other);
  GroupAlgebraElement& operator-=(const GroupAlgebraElement& other);
  friend GroupAlgebraElement operator+(GroupAlgebraElement a,
                                       const GroupAlgebraElement& b) {
    a += b;
    return a;
  }
  friend GroupAlgebraElement operator-(GroupAlgebraElement a,
                                       const GroupAlgebraElement& b) {
    a -= b;
    return a;
  }
  /// Scalar multiple.
  friend GroupAlgebraElement operator*(const QRational& s,
                                       const GroupAlgebraElement& a);

  bool operator==(const GroupAlgebraElement& other) const;
  bool operator!=(const GroupAlgebraElement& other) const {
    return !(*this == other);
  }

  std::string str() const;

private:
  int n_;
  std::map<Permutation, QRational> terms_;
};

/// Convolution product: the coefficient of rho in the result is the sum of
/// a(sigma)*b(tau) over all factorizations compose(sigma, tau) = rho.
GroupAlgebraElement multiply(const GroupAlgebraElement& a,
                             const GroupAlgebraElement& b);

/// The element whose coefficient at each permutation is q^(inversion count).
GroupAlgebraElement alpha(int n);

/// Inverse of alpha(n) in the group algebra, symbolically in q, obtained by
/// solving one column of the left-multiplication matrix of alpha(n).
/// Degree 5 costs minutes of CPU and is refused unless allow_slow is set;
/// degrees above 5 are not supported symbolically.
GroupAlgebraElement alpha_inverse(int n, bool allow_slow = false);

/// Inverse of alpha(n) with q specialized to q0 (n <= 5); throws
/// singular_error at q0 = +1 or -1.
GroupAlgebraElement alpha_inverse_at(int n, const Rat& q0);

namespace detail {

/// Evaluation-interpolation route for alpha_inverse, exposed so the small
/// cases can be cross-checked against the direct elimination route.
GroupAlgebraElement alpha_inverse_interpolated(int n);

}  // namespace detail

}  // namespace quon
