#include "quon/group_algebra.hpp"

#include <cstdint>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "quon/linalg.hpp"
#include "quon/modular.hpp"

namespace quon {

GroupAlgebraElement::GroupAlgebraElement(int n) : n_(n) {
  if (n < 1) throw std::invalid_argument("degree must be positive");
}

GroupAlgebraElement GroupAlgebraElement::identity(int n) {
  GroupAlgebraElement e(n);
  e.add_term(Permutation::identity(n), QRational::one());
  return e;
}

QRational GroupAlgebraElement::coefficient(const Permutation& p) const {
  const auto it = terms_.find(p);
  return it == terms_.end() ? QRational::zero() : it->second;
}

void GroupAlgebraElement::add_term(const Permutation& p, const QRational& c) {
  if (p.degree() != n_) throw std::invalid_argument("degree mismatch");
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(p, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

GroupAlgebraElement& GroupAlgebraElement::operator+=(
    const GroupAlgebraElement& other) {
  if (other.n_ != n_) throw std::invalid_argument("degree mismatch");
  for (const auto& [p, c] : other.terms_) add_term(p, c);
  return *this;
}

GroupAlgebraElement& GroupAlgebraElement::operator-=(
    const GroupAlgebraElement& other) {
  if (other.n_ != n_) throw std::invalid_argument("degree mismatch");
  for (const auto& [p, c] : other.terms_) add_term(p, -c);
  return *this;
}

GroupAlgebraElement operator*(const QRational& s, const GroupAlgebraElement& a) {
  GroupAlgebraElement out(a.degree());
  if (s.is_zero()) return out;
  for (const auto& [p, c] : a.terms()) out.add_term(p, s * c);
  return out;
}

bool GroupAlgebraElement::operator==(const GroupAlgebraElement& other) const {
  return n_ == other.n_ && terms_ == other.terms_;
}

std::string GroupAlgebraElement::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [p, c] : terms_) {
    if (!first) out << " + ";
    first = false;
    out << c.str() << "*" << p.str();
  }
  return out.str();
}

GroupAlgebraElement multiply(const GroupAlgebraElement& a,
                             const GroupAlgebraElement& b) {
  if (a.degree() != b.degree())
    throw std::invalid_argument("degree mismatch");
  GroupAlgebraElement out(a.degree());
  for (const auto& [sigma, ca] : a.terms())
    for (const auto& [tau, cb] : b.terms())
      out.add_term(compose(sigma, tau), ca * cb);
  return out;
}

GroupAlgebraElement alpha(int n) {
  GroupAlgebraElement out(n);
  for (const Permutation& p : all_permutations(n))
    out.add_term(p, QRational::q_power(p.inversions()));
  return out;
}

namespace {

// Exponent table of the left-multiplication matrix of alpha(n): entry (r, c)
// is the q-exponent of the coefficient of perms[r] in alpha(n)*perms[c].
std::vector<std::uint8_t> left_regular_exponents(
    const std::vector<Permutation>& perms) {
  const std::size_t order = perms.size();
  std::vector<Permutation> inverses;
  inverses.reserve(order);
  for (const Permutation& p : perms) inverses.push_back(p.inverse());
  std::vector<std::uint8_t> exps(order * order);
  for (std::size_t r = 0; r < order; ++r)
    for (std::size_t c = 0; c < order; ++c)
      exps[r * order + c] =
          static_cast<std::uint8_t>(compose(perms[r], inverses[c]).inversions());
  return exps;
}

// The d-th cyclotomic polynomial, via q^d - 1 = prod over divisors.
const QPolynomial& cyclotomic(int d, std::map<int, QPolynomial>& cache) {
  const auto it = cache.find(d);
  if (it != cache.end()) return it->second;
  QPolynomial value = QPolynomial::monomial(d) - QPolynomial::one();
  for (int e = 1; e < d; ++e)
    if (d % e == 0) value = QPolynomial::exact_div(value, cyclotomic(e, cache));
  return cache.emplace(d, std::move(value)).first->second;
}

// The determinant of the left-multiplication matrix factors as
// prod_k (1 - q^(k^2+k))^(n!(n-k)/(k^2+k)); strip the cyclotomic factors it
// shares with num from both parts before the final normalization.
void strip_known_denominator_factors(int n, QPolynomial& num,
                                     QPolynomial& den) {
  // Fast path: if num carries the full cofactor den / prod_k (1 - q^(k^2+k)),
  // one exact division reduces the denominator to that small product.
  QPolynomial delta = QPolynomial::one();
  for (int k = 1; k < n; ++k)
    delta = delta * (QPolynomial::one() - QPolynomial::monomial(k * k + k));
  {
    auto [cofactor, crem] = QPolynomial::divmod(den, delta);
    if (crem.is_zero()) {
      auto [reduced, nrem] = QPolynomial::divmod(num, cofactor);
      if (nrem.is_zero()) {
        num = std::move(reduced);
        den = delta;
        return;
      }
    }
  }
  std::map<int, long> multiplicity;
  for (int k = 1; k < n; ++k) {
    const int m = k * k + k;
    const long e = static_cast<long>(factorial(n)) * (n - k) / m;
    for (int d = 1; d <= m; ++d)
      if (m % d == 0) multiplicity[d] += e;
  }
  std::map<int, QPolynomial> cache;
  for (auto it = multiplicity.rbegin(); it != multiplicity.rend(); ++it) {
    const QPolynomial& phi = cyclotomic(it->first, cache);
    for (long rep = 0; rep < it->second; ++rep) {
      auto [qn, rn] = QPolynomial::divmod(num, phi);
      if (!rn.is_zero()) break;
      auto [qd, rd] = QPolynomial::divmod(den, phi);
      if (!rd.is_zero()) break;
      num = std::move(qn);
      den = std::move(qd);
    }
  }
}

GroupAlgebraElement alpha_inverse_direct(int n) {
  const std::vector<Permutation> perms = all_permutations(n);
  const std::size_t order = perms.size();
  const std::vector<std::uint8_t> exps = left_regular_exponents(perms);
  Matrix<QPolynomial> a(order, order);
  for (std::size_t r = 0; r < order; ++r)
    for (std::size_t c = 0; c < order; ++c)
      a(r, c) = QPolynomial::monomial(exps[r * order + c]);
  Matrix<QPolynomial> rhs(order, 1);
  rhs(0, 0) = QPolynomial::one();
  const auto sol = fraction_free_solve(a, rhs);
  GroupAlgebraElement out(n);
  for (std::size_t r = 0; r < order; ++r) {
    QPolynomial num = sol.scaled(r, 0);
    QPolynomial den = sol.det;
    strip_known_denominator_factors(n, num, den);
    out.add_term(perms[r], QRational(num, den));
  }
  return out;
}

}  // namespace

namespace detail {

GroupAlgebraElement alpha_inverse_interpolated(int n) {
  if (n < 2 || n > 5)
    throw std::invalid_argument("interpolated inverse supports 2 <= n <= 5");
  const std::vector<Permutation> perms = all_permutations(n);
  const std::size_t order = perms.size();
  const std::vector<std::uint8_t> exps = left_regular_exponents(perms);
  const int top = n * (n - 1) / 2;

  // Degree bound: every determinant or adjugate term picks one monomial per
  // row. Coefficient bound: at most order! products of +-1 per coefficient.
  const std::size_t points_needed = static_cast<std::size_t>(order) * top + 1;
  Int bound = 1;
  for (std::size_t r = 0; r < order; ++r) bound *= Int(order);
  std::vector<std::uint64_t> primes;
  {
    Int coverage = 1;
    std::vector<std::uint64_t> pool = generate_primes(64);
    for (std::uint64_t p : pool) {
      if (coverage > 2 * bound) break;
      primes.push_back(p);
      coverage *= p;
    }
    if (coverage <= 2 * bound) throw std::logic_error("prime pool exhausted");
  }

  const std::size_t streams = order + 1;  // adjugate column plus determinant
  std::vector<std::vector<std::vector<std::uint64_t>>> coeff_residues(
      streams, std::vector<std::vector<std::uint64_t>>(
                   points_needed, std::vector<std::uint64_t>(primes.size())));

  std::vector<std::uint64_t> matrix(order * order);
  std::vector<std::uint64_t> column;
  std::vector<std::uint64_t> powers(static_cast<std::size_t>(top) + 1);
  for (std::size_t pi = 0; pi < primes.size(); ++pi) {
    const MontgomeryDomain dom(primes[pi]);
    std::vector<std::uint64_t> xs, det_values;
    std::vector<std::vector<std::uint64_t>> col_values(order);
    xs.reserve(points_needed);
    for (std::uint64_t t = 0; xs.size() < points_needed; ++t) {
      const std::uint64_t x = dom.to_residue(t);
      powers[0] = dom.one();
      for (int e = 1; e <= top; ++e) powers[e] = dom.mul(powers[e - 1], x);
      for (std::size_t i = 0; i < matrix.size(); ++i)
        matrix[i] = powers[exps[i]];
      const std::uint64_t det =
          adjugate_column_mod(dom, matrix, order, 0, column);
      if (det == 0) continue;  // x is a root of the determinant mod p
      xs.push_back(x);
      det_values.push_back(det);
      for (std::size_t r = 0; r < order; ++r)
        col_values[r].push_back(column[r]);
    }
    for (std::size_t s = 0; s < streams; ++s) {
      const std::vector<std::uint64_t> coeffs = interpolate_mod(
          dom, xs, s < order ? col_values[s] : det_values);
      for (std::size_t i = 0; i < points_needed; ++i)
        coeff_residues[s][i][pi] = dom.from_residue(coeffs[i]);
    }
  }

  const auto lift = [&](std::size_t s) {
    std::vector<Rat> coeffs(points_needed);
    for (std::size_t i = 0; i < points_needed; ++i)
      coeffs[i] = Rat(crt_symmetric(coeff_residues[s][i], primes));
    return QPolynomial::from_coeffs(std::move(coeffs));
  };

  const QPolynomial det = lift(order);
  GroupAlgebraElement out(n);
  for (std::size_t r = 0; r < order; ++r) {
    QPolynomial num = lift(r);
    QPolynomial den = det;
    strip_known_denominator_factors(n, num, den);
    out.add_term(perms[r], QRational(num, den));
  }
  return out;
}

}  // namespace detail

GroupAlgebraElement alpha_inverse(int n, bool allow_slow) {
  if (n < 1) throw std::invalid_argument("degree must be positive");
  if (n <= 4) return alpha_inverse_direct(n);
  if (n == 5 && allow_slow) return detail::alpha_inverse_interpolated(n);
  throw std::invalid_argument(
      "symbolic inverse is limited to n <= 4 (n = 5 with allow_slow); "
      "use alpha_inverse_at for specialized q");
}

GroupAlgebraElement alpha_inverse_at(int n, const Rat& q0) {
  if (n < 1 || n > 5)
    throw std::invalid_argument("specialized inverse supports 1 <= n <= 5");
  if (q0 == 1 || q0 == -1)
    throw singular_error("alpha is singular at q = 1 and q = -1");
  const std::vector<Permutation> perms = all_permutations(n);
  const std::size_t order = perms.size();
  const std::vector<std::uint8_t> exps = left_regular_exponents(perms);
  const int top = n * (n - 1) / 2;

  // Scale every entry by den^top so the elimination runs over the integers.
  const Int num0 = boost::multiprecision::numerator(q0);
  const Int den0 = boost::multiprecision::denominator(q0);
  std::vector<Int> num_pow(top + 1), den_pow(top + 1);
  num_pow[0] = den_pow[0] = 1;
  for (int e = 1; e <= top; ++e) {
    num_pow[e] = num_pow[e - 1] * num0;
    den_pow[e] = den_pow[e - 1] * den0;
  }
  Matrix<Int> a(order, order);
  for (std::size_t r = 0; r < order; ++r)
    for (std::size_t c = 0; c < order; ++c) {
      const int e = exps[r * order + c];
      a(r, c) = num_pow[e] * den_pow[top - e];
    }
  Matrix<Int> rhs(order, 1);
  rhs(0, 0) = 1;
  const auto sol = fraction_free_solve(a, rhs);
  GroupAlgebraElement out(n);
  for (std::size_t r = 0; r < order; ++r) {
    const Rat value = Rat(den_pow[top] * sol.scaled(r, 0)) / Rat(sol.det);
    out.add_term(perms[r], QRational(value));
  }
  return out;
}

}  // namespace quon
