#include "quon/zagier.hpp"

#include <algorithm>

#include "quon/modular.hpp"

namespace quon {

namespace {

Rat rat_pow(Rat base, std::uint64_t e) {
  Rat acc(1);
  while (e > 0) {
    if (e & 1u) acc *= base;
    base *= base;
    e >>= 1u;
  }
  return acc;
}

Int int_pow(Int base, std::uint64_t e) {
  Int acc(1);
  while (e > 0) {
    if (e & 1u) acc *= base;
    base *= base;
    e >>= 1u;
  }
  return acc;
}

/// Entry values of the matrix scaled by den^max_exponent: the (r,c) entry
/// becomes num^e * den^(max-e), an integer.
Matrix<Int> scaled_integer_matrix(const ZagierMatrix& m, const Rat& q0) {
  const Int num = boost::multiprecision::numerator(q0);
  const Int den = boost::multiprecision::denominator(q0);
  const int top = m.max_exponent();
  std::vector<Int> table(static_cast<std::size_t>(top) + 1);
  for (int e = 0; e <= top; ++e)
    table[static_cast<std::size_t>(e)] =
        int_pow(num, static_cast<std::uint64_t>(e)) *
        int_pow(den, static_cast<std::uint64_t>(top - e));
  Matrix<Int> out(m.order(), m.order());
  for (std::size_t r = 0; r < m.order(); ++r)
    for (std::size_t c = 0; c < m.order(); ++c)
      out(r, c) = table[static_cast<std::size_t>(m.exponent(r, c))];
  return out;
}

/// Certified absolute bound on the determinant of a matrix whose (r,c)
/// entry has 1-norm given by table[exponent(r,c)]: the product over rows
/// of the row sums dominates the Leibniz expansion termwise.
Int determinant_l1_bound(const ZagierMatrix& m, const std::vector<Int>& table) {
  Int bound = 1;
  for (std::size_t r = 0; r < m.order(); ++r) {
    Int row_sum = 0;
    for (std::size_t c = 0; c < m.order(); ++c)
      row_sum += table[static_cast<std::size_t>(m.exponent(r, c))];
    bound *= row_sum;
  }
  return bound;
}

std::vector<std::uint64_t> primes_covering(const Int& bound) {
  std::vector<std::uint64_t> primes;
  Int product = 1;
  std::uint64_t candidate = (std::uint64_t{1} << 62) - 1;
  while (product <= bound * 2) {
    while (!is_prime_u64(candidate)) candidate -= 2;
    primes.push_back(candidate);
    product *= candidate;
    candidate -= 2;
  }
  return primes;
}

/// det of the integer matrix det(num^e * den^(max-e)) by CRT over enough
/// 62-bit primes to cover the certified coefficient bound.
Int scaled_determinant_crt(const ZagierMatrix& m, const Rat& q0) {
  const Int num = boost::multiprecision::numerator(q0);
  const Int den = boost::multiprecision::denominator(q0);
  const int top = m.max_exponent();
  std::vector<Int> table(static_cast<std::size_t>(top) + 1);
  for (int e = 0; e <= top; ++e)
    table[static_cast<std::size_t>(e)] =
        int_pow(boost::multiprecision::abs(num), static_cast<std::uint64_t>(e)) *
        int_pow(den, static_cast<std::uint64_t>(top - e));
  const auto primes = primes_covering(determinant_l1_bound(m, table));

  const std::size_t n = m.order();
  std::vector<std::uint64_t> residues;
  residues.reserve(primes.size());
  std::vector<std::uint64_t> work(n * n);
  for (std::uint64_t p : primes) {
    const MontgomeryDomain dom(p);
    const Int num_mod = ((num % p) + p) % p;
    const std::uint64_t rn = dom.to_residue(num_mod.convert_to<std::uint64_t>());
    const std::uint64_t rd =
        dom.to_residue(Int(den % p).convert_to<std::uint64_t>());
    std::vector<std::uint64_t> entry(static_cast<std::size_t>(top) + 1);
    for (int e = 0; e <= top; ++e)
      entry[static_cast<std::size_t>(e)] =
          dom.mul(dom.pow(rn, static_cast<std::uint64_t>(e)),
                  dom.pow(rd, static_cast<std::uint64_t>(top - e)));
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c)
        work[r * n + c] = entry[static_cast<std::size_t>(m.exponent(r, c))];
    residues.push_back(dom.from_residue(det_mod(dom, work, n)));
  }
  return crt_symmetric(residues, primes);
}

/// Symbolic determinant by per-prime evaluation at enough points followed
/// by interpolation and CRT; certified by the degree bound (sum of row
/// maxima) and the coefficient 1-norm bound (product of row counts).
QPolynomial determinant_by_interpolation(const ZagierMatrix& m) {
  const std::size_t n = m.order();
  std::size_t degree_bound = 0;
  for (std::size_t r = 0; r < n; ++r) {
    int row_max = 0;
    for (std::size_t c = 0; c < n; ++c)
      row_max = std::max(row_max, m.exponent(r, c));
    degree_bound += static_cast<std::size_t>(row_max);
  }
  const std::size_t points = degree_bound + 1;

  const std::vector<Int> ones(static_cast<std::size_t>(m.max_exponent()) + 1,
                              Int(1));
  const auto primes = primes_covering(determinant_l1_bound(m, ones));

  std::vector<std::vector<std::uint64_t>> coeffs_per_prime;
  coeffs_per_prime.reserve(primes.size());
  std::vector<std::uint64_t> work(n * n);
  std::vector<std::uint64_t> values(points);
  const int top = m.max_exponent();
  for (std::uint64_t p : primes) {
    const MontgomeryDomain dom(p);
    for (std::size_t x = 0; x < points; ++x) {
      std::vector<std::uint64_t> powx(static_cast<std::size_t>(top) + 1);
      powx[0] = dom.one();
      const std::uint64_t xr = dom.to_residue(static_cast<std::uint64_t>(x));
      for (int e = 1; e <= top; ++e)
        powx[static_cast<std::size_t>(e)] =
            dom.mul(powx[static_cast<std::size_t>(e - 1)], xr);
      for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c)
          work[r * n + c] = powx[static_cast<std::size_t>(m.exponent(r, c))];
      values[x] = det_mod(dom, work, n);
    }
    auto interp = interpolate_mod(dom, values);
    for (auto& c : interp) c = dom.from_residue(c);
    coeffs_per_prime.push_back(std::move(interp));
  }

  std::vector<Rat> coeffs(points);
  std::vector<std::uint64_t> residues(primes.size());
  for (std::size_t i = 0; i < points; ++i) {
    for (std::size_t k = 0; k < primes.size(); ++k)
      residues[k] = coeffs_per_prime[k][i];
    coeffs[i] = Rat(crt_symmetric(residues, primes));
  }
  return QPolynomial::from_coeffs(std::move(coeffs));
}

}  // namespace

ZagierMatrix ZagierMatrix::build(int n) {
  if (n < 1 || n > 6)
    throw std::invalid_argument("matrix degree must be between 1 and 6");
  ZagierMatrix m;
  m.n_ = n;
  m.perms_ = all_permutations(n);
  m.order_ = m.perms_.size();
  std::vector<Permutation> inverses;
  inverses.reserve(m.order_);
  for (const auto& p : m.perms_) inverses.push_back(p.inverse());
  m.exponents_.resize(m.order_ * m.order_);
  for (std::size_t r = 0; r < m.order_; ++r)
    for (std::size_t c = 0; c < m.order_; ++c)
      m.exponents_[r * m.order_ + c] = static_cast<std::uint8_t>(
          compose(inverses[c], m.perms_[r]).inversions());
  return m;
}

QPolynomial delta(int n) {
  if (n < 1) throw std::invalid_argument("degree must be positive");
  QPolynomial product = QPolynomial::one();
  for (int k = 1; k <= n; ++k)
    product *= QPolynomial::one() - QPolynomial::monomial(k * k + k);
  return product;
}

QPolynomial zagier_formula(int n) {
  if (n < 1 || n > 5)
    throw std::invalid_argument("expanded product formula supported for n <= 5");
  QPolynomial product = QPolynomial::one();
  for (int k = 1; k <= n; ++k) {
    const std::uint64_t numer = factorial(n) * static_cast<std::uint64_t>(n - k);
    const std::uint64_t denom = static_cast<std::uint64_t>(k * k + k);
    if (numer % denom != 0)
      throw std::logic_error("non-integer exponent in determinant formula");
    const QPolynomial base =
        QPolynomial::one() - QPolynomial::monomial(k * k + k);
    product *= base.pow(static_cast<unsigned>(numer / denom));
  }
  return product;
}

Rat zagier_formula_at(int n, const Rat& q0) {
  if (n < 1 || n > 6)
    throw std::invalid_argument("degree must be between 1 and 6");
  Rat product(1);
  for (int k = 1; k <= n; ++k) {
    const std::uint64_t numer = factorial(n) * static_cast<std::uint64_t>(n - k);
    const std::uint64_t denom = static_cast<std::uint64_t>(k * k + k);
    if (numer % denom != 0)
      throw std::logic_error("non-integer exponent in determinant formula");
    product *= rat_pow(Rat(1) - rat_pow(q0, static_cast<std::uint64_t>(k * k + k)),
                       numer / denom);
  }
  return product;
}

QPolynomial determinant(const ZagierMatrix& m) {
  if (m.n() <= 4) {
    Matrix<QPolynomial> a(m.order(), m.order());
    for (std::size_t r = 0; r < m.order(); ++r)
      for (std::size_t c = 0; c < m.order(); ++c) a(r, c) = m.entry(r, c);
    return fraction_free_determinant(std::move(a));
  }
  if (m.n() == 5) return determinant_by_interpolation(m);
  throw std::invalid_argument("symbolic determinant supported for n <= 5");
}

Rat determinant_at(const ZagierMatrix& m, const Rat& q0) {
  const Int den = boost::multiprecision::denominator(q0);
  const std::uint64_t scale_exp =
      static_cast<std::uint64_t>(m.max_exponent()) * m.order();
  Int scaled_det;
  if (m.n() <= 4) {
    scaled_det = fraction_free_determinant(scaled_integer_matrix(m, q0));
  } else {
    scaled_det = scaled_determinant_crt(m, q0);
  }
  return Rat(scaled_det) / Rat(int_pow(den, scale_exp));
}

FractionFreeSolution<QPolynomial> adjugate(const ZagierMatrix& m) {
  if (m.n() > 4)
    throw std::invalid_argument("symbolic inverse supported for n <= 4");
  Matrix<QPolynomial> a(m.order(), m.order());
  for (std::size_t r = 0; r < m.order(); ++r)
    for (std::size_t c = 0; c < m.order(); ++c) a(r, c) = m.entry(r, c);
  return fraction_free_solve(std::move(a),
                             Matrix<QPolynomial>::identity(m.order()));
}

Matrix<QRational> invert(const ZagierMatrix& m) {
  auto sol = adjugate(m);
  Matrix<QRational> inv(m.order(), m.order(), QRational::zero());
  for (std::size_t r = 0; r < m.order(); ++r)
    for (std::size_t c = 0; c < m.order(); ++c)
      inv(r, c) = QRational(sol.scaled(r, c), sol.det);
  return inv;
}

Matrix<Rat> invert_at(const ZagierMatrix& m, const Rat& q0) {
  if (m.n() > 5)
    throw std::invalid_argument("specialized inverse supported for n <= 5");
  const Int den = boost::multiprecision::denominator(q0);
  const Rat scale =
      Rat(int_pow(den, static_cast<std::uint64_t>(m.max_exponent())));
  auto sol = fraction_free_solve(scaled_integer_matrix(m, q0),
                                 Matrix<Int>::identity(m.order()));
  Matrix<Rat> inv(m.order(), m.order());
  const Rat det(sol.det);
  for (std::size_t r = 0; r < m.order(); ++r)
    for (std::size_t c = 0; c < m.order(); ++c)
      inv(r, c) = Rat(sol.scaled(r, c)) * scale / det;
  return inv;
}

IntegralityReport check_integrality(int n) {
  if (n < 1 || n > 4)
    throw std::invalid_argument("integrality check supported for n <= 4");
  const ZagierMatrix m = ZagierMatrix::build(n);
  auto sol = adjugate(m);
  const QPolynomial scale = delta(n);

  IntegralityReport report;
  report.n = n;
  report.holds = true;
  for (std::size_t r = 0; r < m.order(); ++r)
    for (std::size_t c = 0; c < m.order(); ++c) {
      ++report.entries_checked;
      auto [quot, rem] = QPolynomial::divmod(scale * sol.scaled(r, c), sol.det);
      bool ok = rem.is_zero();
      if (ok)
        for (const Rat& coeff : quot.coeffs())
          if (boost::multiprecision::denominator(coeff) != 1) {
            ok = false;
            break;
          }
      if (!ok) {
        report.holds = false;
        report.violations.emplace_back(r, c);
      }
    }
  return report;
}

bool positivity_probe(int n, const Rat& q0) {
  if (n < 1 || n > 5)
    throw std::invalid_argument("positivity probe supported for n <= 5");
  if (boost::multiprecision::abs(q0) >= 1)
    throw std::invalid_argument("q must lie strictly between -1 and 1");
  const ZagierMatrix m = ZagierMatrix::build(n);
  const auto minors = leading_principal_minors(scaled_integer_matrix(m, q0));
  if (minors.size() != m.order()) return false;
  for (const Int& d : minors)
    if (d <= 0) return false;
  return true;
}

}  // namespace quon
