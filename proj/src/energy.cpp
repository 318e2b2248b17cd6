#include "quon/energy.hpp"

#include <sstream>
#include <stdexcept>

#include "quon/zagier.hpp"

namespace quon {

XGroupPolynomial::XGroupPolynomial(int n) : n_(n) {
  if (n < 1) throw std::invalid_argument("degree must be positive");
}

XGroupPolynomial XGroupPolynomial::identity(int n) {
  XGroupPolynomial e(n);
  e.add_term(Permutation::identity(n), 0, QRational::one());
  return e;
}

QRational XGroupPolynomial::coefficient(const Permutation& p,
                                        int x_degree) const {
  const auto it = terms_.find({p, x_degree});
  return it == terms_.end() ? QRational::zero() : it->second;
}

void XGroupPolynomial::add_term(const Permutation& p, int x_degree,
                                const QRational& c) {
  if (p.degree() != n_) throw std::invalid_argument("degree mismatch");
  if (x_degree < 0 || x_degree >= n_)
    throw std::invalid_argument("X-degree out of range");
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(Key{p, x_degree}, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

XGroupPolynomial& XGroupPolynomial::operator+=(const XGroupPolynomial& other) {
  if (other.n_ != n_) throw std::invalid_argument("degree mismatch");
  for (const auto& [key, c] : other.terms_) add_term(key.first, key.second, c);
  return *this;
}

XGroupPolynomial& XGroupPolynomial::operator-=(const XGroupPolynomial& other) {
  if (other.n_ != n_) throw std::invalid_argument("degree mismatch");
  for (const auto& [key, c] : other.terms_) add_term(key.first, key.second, -c);
  return *this;
}

bool XGroupPolynomial::operator==(const XGroupPolynomial& other) const {
  return n_ == other.n_ && terms_ == other.terms_;
}

std::string XGroupPolynomial::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [key, c] : terms_) {
    if (!first) out << " + ";
    first = false;
    out << c.str() << "*X^" << key.second << "*" << key.first.str();
  }
  return out.str();
}

XGroupPolynomial multiply(const XGroupPolynomial& a, const XGroupPolynomial& b) {
  if (a.degree() != b.degree())
    throw std::invalid_argument("degree mismatch");
  XGroupPolynomial out(a.degree());
  for (const auto& [ka, ca] : a.terms())
    for (const auto& [kb, cb] : b.terms())
      out.add_term(compose(ka.first, kb.first), ka.second + kb.second, ca * cb);
  return out;
}

XGroupPolynomial embed(const GroupAlgebraElement& a) {
  XGroupPolynomial out(a.degree());
  for (const auto& [p, c] : a.terms()) out.add_term(p, 0, c);
  return out;
}

namespace {

// Shared expansion of the generating product, starting from the inverse
// element and multiplying by (1 - w_j X T_{1j}) for j = 2..n in ascending
// order, where w_j is q^{j-1} or its specialization.
XGroupPolynomial expand_product(int n, const GroupAlgebraElement& inverse,
                                const Rat* q0) {
  XGroupPolynomial acc = embed(inverse);
  for (int j = 2; j <= n; ++j) {
    XGroupPolynomial factor(n);
    factor.add_term(Permutation::identity(n), 0, QRational::one());
    const QRational weight =
        q0 ? QRational(QPolynomial::monomial(j - 1).evaluate(*q0))
           : QRational::q_power(j - 1);
    factor.add_term(t1k(n, j), 1, -weight);
    acc = multiply(acc, factor);
  }
  return acc;
}

// Shared double sum for the explicit formula given any way of reading off
// the inverse-matrix entry at (row, col). The value attached to the pair
// (pi, tau) is the inverse entry at (pi^{-1}, tau^{-1}): under the project
// composition convention that is the entry whose left quotient is
// tau pi^{-1}, i.e. the coefficient of pi tau^{-1} in the inverse element.
template <typename EntryAt>
XGroupPolynomial explicit_sum(int n, const Rat* q0, EntryAt inverse_entry) {
  const std::vector<Permutation> perms = all_permutations(n);
  XGroupPolynomial out(n);
  for (std::size_t r = 0; r < perms.size(); ++r) {
    const std::size_t row = perms[r].inverse().lex_rank();
    for (int i = 1; i <= n; ++i) {
      QRational sum;
      for (const Permutation& tau : enumerate_snp(n, i - 1)) {
        const QRational weight =
            q0 ? QRational(QPolynomial::monomial(tau.inversions()).evaluate(*q0))
               : QRational::q_power(tau.inversions());
        sum += inverse_entry(row, tau.inverse().lex_rank()) * weight;
      }
      if (i % 2 == 0) sum = -sum;
      out.add_term(perms[r], i - 1, sum);
    }
  }
  return out;
}

}  // namespace

XGroupPolynomial coeffs_via_product(int n) {
  if (n < 1 || n > 4)
    throw std::invalid_argument("symbolic coefficients support 1 <= n <= 4");
  return expand_product(n, alpha_inverse(n), nullptr);
}

XGroupPolynomial coeffs_via_product_at(int n, const Rat& q0) {
  if (n < 1 || n > 5)
    throw std::invalid_argument("specialized coefficients support 1 <= n <= 5");
  return expand_product(n, alpha_inverse_at(n, q0), &q0);
}

std::vector<XGroupPolynomial> energy_levels(int max_n) {
  std::vector<XGroupPolynomial> levels;
  for (int p = 1; p <= max_n; ++p) levels.push_back(coeffs_via_product(p));
  return levels;
}

std::vector<XGroupPolynomial> energy_levels_at(int max_n, const Rat& q0) {
  std::vector<XGroupPolynomial> levels;
  for (int p = 1; p <= max_n; ++p)
    levels.push_back(coeffs_via_product_at(p, q0));
  return levels;
}

XGroupPolynomial coeffs_via_explicit(int n) {
  if (n < 1 || n > 4)
    throw std::invalid_argument("symbolic coefficients support 1 <= n <= 4");
  const auto sol = adjugate(ZagierMatrix::build(n));
  return explicit_sum(n, nullptr, [&](std::size_t r, std::size_t c) {
    return QRational(sol.scaled(r, c), sol.det);
  });
}

XGroupPolynomial coeffs_via_explicit_at(int n, const Rat& q0) {
  if (n < 1 || n > 5)
    throw std::invalid_argument("specialized coefficients support 1 <= n <= 5");
  const Matrix<Rat> inv = invert_at(ZagierMatrix::build(n), q0);
  return explicit_sum(n, &q0, [&](std::size_t r, std::size_t c) {
    return QRational(inv(r, c));
  });
}

XGroupPolynomial r_p_defining(int p) {
  return multiply(embed(alpha(p)), coeffs_via_product(p));
}

XGroupPolynomial r_p_defining_at(int p, const Rat& q0) {
  GroupAlgebraElement a(p);
  for (const Permutation& perm : all_permutations(p))
    a.add_term(perm,
               QRational(QPolynomial::monomial(perm.inversions()).evaluate(q0)));
  return multiply(embed(a), coeffs_via_product_at(p, q0));
}

XGroupPolynomial r_p_closed(int p) {
  if (p < 1) throw std::invalid_argument("degree must be positive");
  XGroupPolynomial out(p);
  for (int s = 0; s < p; ++s)
    for (const Permutation& sigma : enumerate_snp(p, s)) {
      QRational weight = QRational::q_power(sigma.inversions());
      if (s % 2 == 1) weight = -weight;
      out.add_term(sigma, s, weight);
    }
  return out;
}

XGroupPolynomial r_p_closed_at(int p, const Rat& q0) {
  if (p < 1) throw std::invalid_argument("degree must be positive");
  XGroupPolynomial out(p);
  for (int s = 0; s < p; ++s)
    for (const Permutation& sigma : enumerate_snp(p, s)) {
      QRational weight =
          QRational(QPolynomial::monomial(sigma.inversions()).evaluate(q0));
      if (s % 2 == 1) weight = -weight;
      out.add_term(sigma, s, weight);
    }
  return out;
}

namespace {

CoefficientSymmetryReport symmetry_report(int n, const XGroupPolynomial& coeffs,
                                          bool specialized, const Rat& q0) {
  CoefficientSymmetryReport report;
  report.n = n;
  report.specialized = specialized;
  report.q0 = q0;
  for (const Permutation& perm : all_permutations(n))
    for (int i = 1; i <= n; ++i) {
      ++report.pairs_checked;
      const QRational lhs = coeffs.coefficient(perm, i - 1);
      const QRational rhs = coeffs.coefficient(perm, perm(i) - 1);
      if (lhs == rhs) continue;
      report.violations.push_back(
          {perm, i, lhs.str(), rhs.str()});
    }
  report.holds = report.violations.empty();
  return report;
}

}  // namespace

CoefficientSymmetryReport check_coefficient_symmetry(int n) {
  return symmetry_report(n, coeffs_via_product(n), false, Rat(0));
}

CoefficientSymmetryReport check_coefficient_symmetry_at(int n, const Rat& q0) {
  return symmetry_report(n, coeffs_via_product_at(n, q0), true, q0);
}

}  // namespace quon
