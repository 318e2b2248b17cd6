#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace quon {

/// Arbitrary-precision integer backbone.
using Int = boost::multiprecision::cpp_int;

/// Exact rational number (always stored reduced, positive denominator).
using Rat = boost::multiprecision::cpp_rational;

/// Thrown when a computation is asked to specialize q at a point where the
/// relevant denominator (a factor of some Delta_n) vanishes.
class singular_error : public std::domain_error {
public:
  using std::domain_error::domain_error;
};

/// Parses "a/b" or "a" with optional sign into an exact rational.
/// Throws std::invalid_argument on malformed input or zero denominator.
Rat parse_rational(const std::string& text);

/// Canonical text form: "a/b" when the denominator is not 1, else "a".
std::string rational_str(const Rat& r);

/// Dense univariate polynomial in q over the rationals.
///
/// Coefficients are stored by ascending degree with the top coefficient
/// nonzero; the zero polynomial has an empty coefficient vector and
/// degree() == -1.
class QPolynomial {
public:
  QPolynomial() = default;
  explicit QPolynomial(const Rat& constant);
  explicit QPolynomial(long constant) : QPolynomial(Rat(constant)) {}

  static QPolynomial zero() { return {}; }
  static QPolynomial one() { return QPolynomial(Rat(1)); }
  /// The variable q itself.
  static QPolynomial q() { return monomial(1); }
  static QPolynomial monomial(int degree, const Rat& coeff = Rat(1));
  static QPolynomial from_coeffs(std::vector<Rat> ascending);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_one() const;
  Rat coeff(int degree) const;
  const Rat& leading() const;
  const std::vector<Rat>& coeffs() const { return coeffs_; }

  QPolynomial operator-() const;
  QPolynomial operator+(const QPolynomial& o) const;
  QPolynomial operator-(const QPolynomial& o) const;
  QPolynomial operator*(const QPolynomial& o) const;
  QPolynomial& operator+=(const QPolynomial& o) { return *this = *this + o; }
  QPolynomial& operator-=(const QPolynomial& o) { return *this = *this - o; }
  QPolynomial& operator*=(const QPolynomial& o) { return *this = *this * o; }
  QPolynomial operator*(const Rat& s) const;
  QPolynomial pow(unsigned e) const;

  bool operator==(const QPolynomial& o) const { return coeffs_ == o.coeffs_; }

  Rat evaluate(const Rat& q0) const;

  /// gcd of the coefficients as a nonnegative rational (0 for the zero
  /// polynomial): gcd of numerators over lcm of denominators.
  Rat content() const;
  /// this / content(); integer coefficients with content 1. Sign preserved.
  QPolynomial primitive_part() const;
  /// Unit-normalized associate: primitive with positive leading coefficient.
  QPolynomial normalized() const;

  /// Quotient and remainder over the rationals; divisor must be nonzero.
  static std::pair<QPolynomial, QPolynomial> divmod(const QPolynomial& a,
                                                    const QPolynomial& b);
  /// Division known to be exact; throws std::logic_error on nonzero remainder.
  static QPolynomial exact_div(const QPolynomial& a, const QPolynomial& b);
  /// Normalized greatest common divisor via the primitive remainder sequence.
  static QPolynomial gcd(const QPolynomial& a, const QPolynomial& b);

  /// "1 - q^2 + 3*q^5": ascending degree, rational coefficients as a/b.
  std::string str() const;

private:
  void trim();
  std::vector<Rat> coeffs_;
};

inline QPolynomial operator*(const Rat& s, const QPolynomial& p) { return p * s; }

/// Reduced rational function in q.
///
/// Canonical form: gcd(num, den) is a unit and the denominator is a primitive
/// integer polynomial with positive leading coefficient, so two equal values
/// have identical representations and operator== is exact.
class QRational {
public:
  QRational() : num_(), den_(QPolynomial::one()) {}
  QRational(const QPolynomial& num, const QPolynomial& den);
  /* implicit */ QRational(const QPolynomial& p) : num_(p), den_(QPolynomial::one()) {}
  explicit QRational(const Rat& constant) : QRational(QPolynomial(constant)) {}
  explicit QRational(long constant) : QRational(QPolynomial(constant)) {}

  static QRational zero() { return {}; }
  static QRational one() { return QRational(QPolynomial::one()); }
  /// q^degree as a rational function.
  static QRational q_power(int degree) { return QRational(QPolynomial::monomial(degree)); }

  const QPolynomial& num() const { return num_; }
  const QPolynomial& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return num_.is_one() && den_.is_one(); }
  bool is_polynomial() const { return den_.is_one(); }

  /// Value of a degree-0/degree-0 element; throws std::logic_error otherwise.
  Rat constant_value() const;

  QRational operator-() const;
  QRational operator+(const QRational& o) const;
  QRational operator-(const QRational& o) const;
  QRational operator*(const QRational& o) const;
  QRational operator/(const QRational& o) const;
  QRational& operator+=(const QRational& o) { return *this = *this + o; }
  QRational& operator-=(const QRational& o) { return *this = *this - o; }
  QRational& operator*=(const QRational& o) { return *this = *this * o; }
  QRational operator*(const Rat& s) const { return *this * QRational(s); }

  bool operator==(const QRational& o) const {
    return num_ == o.num_ && den_ == o.den_;
  }

  /// Exact value at q = q0; throws singular_error at a pole.
  Rat evaluate_at(const Rat& q0) const;
  /// The constant rational function with value evaluate_at(q0).
  QRational specialize(const Rat& q0) const { return QRational(evaluate_at(q0)); }

  /// "(num)/(den)", or just the numerator text when the denominator is 1.
  std::string str() const;

private:
  void normalize();
  QPolynomial num_;
  QPolynomial den_;
};

inline QRational operator*(const Rat& s, const QRational& x) { return x * s; }

}  // namespace quon
