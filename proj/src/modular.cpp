#include "quon/modular.hpp"

#include <stdexcept>

namespace quon {

MontgomeryDomain::MontgomeryDomain(std::uint64_t modulus) : mod_(modulus) {
  if (modulus < 3 || modulus % 2 == 0 || modulus >= (std::uint64_t{1} << 62))
    throw std::invalid_argument("modulus must be odd and below 2^62");
  // Newton iteration doubles correct low bits each round: inv = mod^{-1} mod 2^64.
  std::uint64_t inv = mod_;
  for (int round = 0; round < 5; ++round) inv *= 2 - mod_ * inv;
  neg_inv_ = ~inv + 1;
  const std::uint64_t r = (~std::uint64_t{0} % mod_) + 1;  // 2^64 mod mod
  r2_ = static_cast<std::uint64_t>(
      static_cast<unsigned __int128>(r) * r % mod_);
  one_ = to_residue(1);
}

std::uint64_t MontgomeryDomain::to_residue_signed(std::int64_t x) const {
  if (x >= 0) return to_residue(static_cast<std::uint64_t>(x));
  const std::uint64_t mag = static_cast<std::uint64_t>(-(x + 1)) + 1;
  return sub(0, to_residue(mag));
}

std::uint64_t MontgomeryDomain::pow(std::uint64_t base,
                                    std::uint64_t exponent) const {
  std::uint64_t acc = one_;
  while (exponent > 0) {
    if (exponent & 1u) acc = mul(acc, base);
    base = mul(base, base);
    exponent >>= 1u;
  }
  return acc;
}

namespace {

std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(
      static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t powmod_u64(std::uint64_t base, std::uint64_t e, std::uint64_t m) {
  std::uint64_t acc = 1 % m;
  base %= m;
  while (e > 0) {
    if (e & 1u) acc = mulmod_u64(acc, base, m);
    base = mulmod_u64(base, base, m);
    e >>= 1u;
  }
  return acc;
}

}  // namespace

bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull,
                          23ull, 29ull, 31ull, 37ull}) {
    if (n == p) return true;
    if (n % p == 0) return false;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while (d % 2 == 0) {
    d /= 2;
    ++s;
  }
  // This fixed witness set decides primality for every 64-bit integer.
  for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull,
                          23ull, 29ull, 31ull, 37ull}) {
    std::uint64_t x = powmod_u64(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int round = 1; round < s; ++round) {
      x = mulmod_u64(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

std::vector<std::uint64_t> generate_primes(std::size_t count) {
  std::vector<std::uint64_t> primes;
  primes.reserve(count);
  std::uint64_t candidate = (std::uint64_t{1} << 62) - 1;
  while (primes.size() < count) {
    if (is_prime_u64(candidate)) primes.push_back(candidate);
    candidate -= 2;
  }
  return primes;
}

std::uint64_t det_mod(const MontgomeryDomain& dom,
                      std::vector<std::uint64_t>& a, std::size_t n) {
  std::uint64_t det = dom.one();
  bool negate = false;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t piv = k;
    while (piv < n && a[piv * n + k] == 0) ++piv;
    if (piv == n) return 0;
    if (piv != k) {
      for (std::size_t j = k; j < n; ++j)
        std::swap(a[k * n + j], a[piv * n + j]);
      negate = !negate;
    }
    const std::uint64_t pivot = a[k * n + k];
    det = dom.mul(det, pivot);
    const std::uint64_t inv = dom.inverse(pivot);
    for (std::size_t i = k + 1; i < n; ++i) {
      const std::uint64_t factor = dom.mul(a[i * n + k], inv);
      if (factor == 0) continue;
      const std::uint64_t* row_k = &a[k * n];
      std::uint64_t* row_i = &a[i * n];
      for (std::size_t j = k + 1; j < n; ++j)
        row_i[j] = dom.sub(row_i[j], dom.mul(factor, row_k[j]));
      row_i[k] = 0;
    }
  }
  return negate ? dom.sub(0, det) : det;
}

std::uint64_t adjugate_column_mod(const MontgomeryDomain& dom,
                                  std::vector<std::uint64_t>& a, std::size_t n,
                                  std::size_t rhs_index,
                                  std::vector<std::uint64_t>& column) {
  std::vector<std::uint64_t> rhs(n, 0);
  rhs[rhs_index] = dom.one();
  std::uint64_t det = dom.one();
  bool negate = false;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t piv = k;
    while (piv < n && a[piv * n + k] == 0) ++piv;
    if (piv == n) return 0;
    if (piv != k) {
      for (std::size_t j = k; j < n; ++j)
        std::swap(a[k * n + j], a[piv * n + j]);
      std::swap(rhs[k], rhs[piv]);
      negate = !negate;
    }
    const std::uint64_t pivot = a[k * n + k];
    det = dom.mul(det, pivot);
    const std::uint64_t inv = dom.inverse(pivot);
    for (std::size_t i = k + 1; i < n; ++i) {
      const std::uint64_t factor = dom.mul(a[i * n + k], inv);
      if (factor == 0) continue;
      const std::uint64_t* row_k = &a[k * n];
      std::uint64_t* row_i = &a[i * n];
      for (std::size_t j = k + 1; j < n; ++j)
        row_i[j] = dom.sub(row_i[j], dom.mul(factor, row_k[j]));
      row_i[k] = 0;
      rhs[i] = dom.sub(rhs[i], dom.mul(factor, rhs[k]));
    }
  }
  if (negate) det = dom.sub(0, det);
  column.assign(n, 0);
  for (std::size_t i = n; i-- > 0;) {
    std::uint64_t acc = rhs[i];
    for (std::size_t j = i + 1; j < n; ++j)
      acc = dom.sub(acc, dom.mul(a[i * n + j], column[j]));
    column[i] = dom.mul(acc, dom.inverse(a[i * n + i]));
  }
  for (std::size_t i = 0; i < n; ++i) column[i] = dom.mul(column[i], det);
  return det;
}

Int crt_symmetric(const std::vector<std::uint64_t>& residues,
                  const std::vector<std::uint64_t>& primes) {
  if (residues.size() != primes.size())
    throw std::invalid_argument("residue/prime count mismatch");
  Int x = 0;
  Int modulus = 1;
  for (std::size_t i = 0; i < primes.size(); ++i) {
    const std::uint64_t p = primes[i];
    const std::uint64_t x_mod_p =
        static_cast<std::uint64_t>(((x % p) + p) % p);
    const std::uint64_t m_mod_p = static_cast<std::uint64_t>(modulus % p);
    const std::uint64_t diff =
        residues[i] >= x_mod_p ? residues[i] - x_mod_p
                               : residues[i] + p - x_mod_p;
    const std::uint64_t t =
        mulmod_u64(diff, powmod_u64(m_mod_p, p - 2, p), p);
    x += modulus * t;
    modulus *= p;
  }
  if (x * 2 > modulus) x -= modulus;
  return x;
}

std::vector<std::uint64_t> interpolate_mod(
    const MontgomeryDomain& dom, const std::vector<std::uint64_t>& values) {
  std::vector<std::uint64_t> points(values.size());
  for (std::size_t j = 0; j < values.size(); ++j)
    points[j] = dom.to_residue(static_cast<std::uint64_t>(j));
  return interpolate_mod(dom, points, values);
}

std::vector<std::uint64_t> interpolate_mod(
    const MontgomeryDomain& dom, const std::vector<std::uint64_t>& points,
    const std::vector<std::uint64_t>& values) {
  const std::size_t n = values.size();
  if (points.size() != n)
    throw std::invalid_argument("point/value count mismatch");
  if (n == 0) return {};

  // master(x) = prod_j (x - x_j), ascending coefficients, built in place:
  // multiplying by (x - c) sends coeff[i] to coeff[i-1] - c*coeff[i].
  std::vector<std::uint64_t> master(n + 1, 0);
  master[0] = dom.one();
  for (std::size_t j = 0; j < n; ++j) {
    const std::uint64_t c = points[j];
    for (std::size_t i = j + 2; i-- > 0;) {
      const std::uint64_t lower = i > 0 ? master[i - 1] : 0;
      master[i] = dom.sub(lower, dom.mul(c, master[i]));
    }
  }

  std::vector<std::uint64_t> result(n, 0);
  std::vector<std::uint64_t> quotient(n, 0);
  for (std::size_t j = 0; j < n; ++j) {
    const std::uint64_t c = points[j];
    // Synthetic division: master / (x - x_j), quotient degree n-1.
    quotient[n - 1] = master[n];
    for (std::size_t i = n - 1; i-- > 0;)
      quotient[i] = dom.add(master[i + 1], dom.mul(c, quotient[i + 1]));
    // Denominator prod_{k != j} (x_j - x_k) = quotient evaluated at x_j.
    std::uint64_t denom = 0;
    for (std::size_t i = n; i-- > 0;)
      denom = dom.add(dom.mul(denom, c), quotient[i]);
    const std::uint64_t w = dom.mul(values[j], dom.inverse(denom));
    if (w == 0) continue;
    for (std::size_t i = 0; i < n; ++i)
      result[i] = dom.add(result[i], dom.mul(w, quotient[i]));
  }
  return result;
}

}  // namespace quon
