#include "quon/scalar.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace quon {

Rat parse_rational(const std::string& text) {
  auto bad = [&] {
    throw std::invalid_argument("not a rational number: '" + text + "'");
  };
  auto parse_int = [&](std::string s) {
    if (s.empty()) bad();
    bool negative = false;
    if (s[0] == '-' || s[0] == '+') {
      negative = (s[0] == '-');
      s.erase(0, 1);
    }
    if (s.empty()) bad();
    for (char ch : s)
      if (!std::isdigit(static_cast<unsigned char>(ch))) bad();
    Int v(s);
    return negative ? Int(-v) : v;
  };
  const auto slash = text.find('/');
  if (slash == std::string::npos) return Rat(parse_int(text));
  const Int n = parse_int(text.substr(0, slash));
  const Int d = parse_int(text.substr(slash + 1));
  if (d == 0) throw std::invalid_argument("zero denominator in '" + text + "'");
  return Rat(n) / Rat(d);
}

std::string rational_str(const Rat& r) {
  return r.str();
}

// ---------------------------------------------------------------------------
// QPolynomial

QPolynomial::QPolynomial(const Rat& constant) {
  if (constant != 0) coeffs_.push_back(constant);
}

QPolynomial QPolynomial::monomial(int degree, const Rat& coeff) {
  QPolynomial p;
  if (coeff == 0) return p;
  if (degree < 0) throw std::invalid_argument("negative monomial degree");
  p.coeffs_.assign(static_cast<std::size_t>(degree) + 1, Rat(0));
  p.coeffs_.back() = coeff;
  return p;
}

QPolynomial QPolynomial::from_coeffs(std::vector<Rat> ascending) {
  QPolynomial p;
  p.coeffs_ = std::move(ascending);
  p.trim();
  return p;
}

void QPolynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

bool QPolynomial::is_one() const {
  return coeffs_.size() == 1 && coeffs_[0] == 1;
}

Rat QPolynomial::coeff(int degree) const {
  if (degree < 0 || degree >= static_cast<int>(coeffs_.size())) return Rat(0);
  return coeffs_[static_cast<std::size_t>(degree)];
}

const Rat& QPolynomial::leading() const {
  if (coeffs_.empty()) throw std::logic_error("leading() of zero polynomial");
  return coeffs_.back();
}

QPolynomial QPolynomial::operator-() const {
  QPolynomial r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

QPolynomial QPolynomial::operator+(const QPolynomial& o) const {
  QPolynomial r;
  r.coeffs_.resize(std::max(coeffs_.size(), o.coeffs_.size()), Rat(0));
  for (std::size_t i = 0; i < r.coeffs_.size(); ++i) {
    if (i < coeffs_.size()) r.coeffs_[i] += coeffs_[i];
    if (i < o.coeffs_.size()) r.coeffs_[i] += o.coeffs_[i];
  }
  r.trim();
  return r;
}

QPolynomial QPolynomial::operator-(const QPolynomial& o) const {
  return *this + (-o);
}

QPolynomial QPolynomial::operator*(const QPolynomial& o) const {
  if (is_zero() || o.is_zero()) return {};
  QPolynomial r;
  r.coeffs_.assign(coeffs_.size() + o.coeffs_.size() - 1, Rat(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < o.coeffs_.size(); ++j) {
      if (o.coeffs_[j] == 0) continue;
      r.coeffs_[i + j] += coeffs_[i] * o.coeffs_[j];
    }
  }
  r.trim();
  return r;
}

QPolynomial QPolynomial::operator*(const Rat& s) const {
  if (s == 0) return {};
  QPolynomial r = *this;
  for (auto& c : r.coeffs_) c *= s;
  return r;
}

QPolynomial QPolynomial::pow(unsigned e) const {
  QPolynomial base = *this;
  QPolynomial acc = one();
  while (e > 0) {
    if (e & 1u) acc *= base;
    e >>= 1u;
    if (e > 0) base *= base;
  }
  return acc;
}

Rat QPolynomial::evaluate(const Rat& q0) const {
  Rat acc(0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * q0 + *it;
  return acc;
}

Rat QPolynomial::content() const {
  Int num_gcd = 0;
  Int den_lcm = 1;
  for (const auto& c : coeffs_) {
    if (c == 0) continue;
    num_gcd = boost::multiprecision::gcd(num_gcd, boost::multiprecision::numerator(c));
    den_lcm = boost::multiprecision::lcm(den_lcm, boost::multiprecision::denominator(c));
  }
  if (num_gcd == 0) return Rat(0);
  return Rat(boost::multiprecision::abs(num_gcd), den_lcm);
}

QPolynomial QPolynomial::primitive_part() const {
  if (is_zero()) return {};
  const Rat c = content();
  QPolynomial r = *this;
  for (auto& x : r.coeffs_) x /= c;
  return r;
}

QPolynomial QPolynomial::normalized() const {
  if (is_zero()) return {};
  QPolynomial p = primitive_part();
  if (p.leading() < 0) p = -p;
  return p;
}

std::pair<QPolynomial, QPolynomial> QPolynomial::divmod(const QPolynomial& a,
                                                        const QPolynomial& b) {
  if (b.is_zero()) throw std::invalid_argument("polynomial division by zero");
  QPolynomial rem = a;
  QPolynomial quot;
  const int db = b.degree();
  if (rem.degree() >= db)
    quot.coeffs_.assign(static_cast<std::size_t>(rem.degree() - db) + 1, Rat(0));
  const Rat& lead_b = b.leading();
  while (!rem.is_zero() && rem.degree() >= db) {
    const int shift = rem.degree() - db;
    const Rat f = rem.leading() / lead_b;
    quot.coeffs_[static_cast<std::size_t>(shift)] = f;
    // rem -= f * q^shift * b, done in place.
    for (int i = 0; i <= db; ++i)
      rem.coeffs_[static_cast<std::size_t>(shift + i)] -= f * b.coeffs_[static_cast<std::size_t>(i)];
    rem.trim();
  }
  quot.trim();
  return {quot, rem};
}

QPolynomial QPolynomial::exact_div(const QPolynomial& a, const QPolynomial& b) {
  auto [q, r] = divmod(a, b);
  if (!r.is_zero()) throw std::logic_error("polynomial division expected exact");
  return q;
}

QPolynomial QPolynomial::gcd(const QPolynomial& a, const QPolynomial& b) {
  QPolynomial x = a.normalized();
  QPolynomial y = b.normalized();
  while (!y.is_zero()) {
    auto [q, r] = divmod(x, y);
    (void)q;
    x = std::move(y);
    // Keeping remainders primitive bounds coefficient growth.
    y = r.normalized();
  }
  return x;
}

std::string QPolynomial::str() const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (std::size_t d = 0; d < coeffs_.size(); ++d) {
    const Rat& c = coeffs_[d];
    if (c == 0) continue;
    const bool negative = c < 0;
    const Rat mag = negative ? Rat(-c) : c;
    if (first) {
      if (negative) out << "-";
      first = false;
    } else {
      out << (negative ? " - " : " + ");
    }
    const bool unit = (mag == 1);
    if (d == 0) {
      out << rational_str(mag);
    } else {
      if (!unit) out << rational_str(mag) << "*";
      out << "q";
      if (d > 1) out << "^" << d;
    }
  }
  return out.str();
}

// ---------------------------------------------------------------------------
// QRational

QRational::QRational(const QPolynomial& num, const QPolynomial& den)
    : num_(num), den_(den) {
  if (den_.is_zero()) throw std::invalid_argument("zero denominator");
  normalize();
}

void QRational::normalize() {
  if (num_.is_zero()) {
    den_ = QPolynomial::one();
    return;
  }
  const QPolynomial g = QPolynomial::gcd(num_, den_);
  if (g.degree() > 0 || !g.is_one()) {
    num_ = QPolynomial::exact_div(num_, g);
    den_ = QPolynomial::exact_div(den_, g);
  }
  // Scale so the denominator is primitive with positive leading coefficient.
  Rat c = den_.content();
  if (den_.leading() < 0) c = -c;
  if (c != 1) {
    const Rat inv = Rat(1) / c;
    num_ = num_ * inv;
    den_ = den_ * inv;
  }
}

Rat QRational::constant_value() const {
  if (num_.degree() > 0 || den_.degree() > 0)
    throw std::logic_error("constant_value() of non-constant rational function");
  if (num_.is_zero()) return Rat(0);
  return num_.coeff(0) / den_.coeff(0);
}

QRational QRational::operator-() const {
  QRational r = *this;
  r.num_ = -r.num_;
  return r;
}

QRational QRational::operator+(const QRational& o) const {
  return QRational(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

QRational QRational::operator-(const QRational& o) const {
  return QRational(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

QRational QRational::operator*(const QRational& o) const {
  return QRational(num_ * o.num_, den_ * o.den_);
}

QRational QRational::operator/(const QRational& o) const {
  if (o.is_zero()) throw std::invalid_argument("division by zero rational function");
  return QRational(num_ * o.den_, den_ * o.num_);
}

Rat QRational::evaluate_at(const Rat& q0) const {
  const Rat d = den_.evaluate(q0);
  if (d == 0)
    throw singular_error("pole at q = " + rational_str(q0));
  return num_.evaluate(q0) / d;
}

std::string QRational::str() const {
  if (den_.is_one()) return num_.str();
  return "(" + num_.str() + ")/(" + den_.str() + ")";
}

}  // namespace quon
