#pragma once

#include <cstdint>
#include <vector>

#include "quon/scalar.hpp"

namespace quon {

/// Arithmetic modulo an odd prime below 2^62, with operands kept in
/// Montgomery form (scaled by 2^64) so products need no hardware division.
class MontgomeryDomain {
public:
  explicit MontgomeryDomain(std::uint64_t modulus);

  std::uint64_t modulus() const { return mod_; }

  std::uint64_t to_residue(std::uint64_t x) const { return mul(x % mod_, r2_); }
  std::uint64_t to_residue_signed(std::int64_t x) const;
  std::uint64_t from_residue(std::uint64_t m) const {
    return redc(static_cast<unsigned __int128>(m));
  }

  std::uint64_t zero() const { return 0; }
  std::uint64_t one() const { return one_; }

  std::uint64_t add(std::uint64_t a, std::uint64_t b) const {
    const std::uint64_t s = a + b;
    return s >= mod_ ? s - mod_ : s;
  }
  std::uint64_t sub(std::uint64_t a, std::uint64_t b) const {
    return a >= b ? a - b : a + mod_ - b;
  }
  std::uint64_t mul(std::uint64_t a, std::uint64_t b) const {
    return redc(static_cast<unsigned __int128>(a) * b);
  }
  std::uint64_t pow(std::uint64_t base, std::uint64_t exponent) const;
  /// Inverse of a nonzero residue (prime modulus assumed).
  std::uint64_t inverse(std::uint64_t a) const { return pow(a, mod_ - 2); }

private:
  std::uint64_t redc(unsigned __int128 t) const {
    const std::uint64_t m = static_cast<std::uint64_t>(t) * neg_inv_;
    const std::uint64_t r = static_cast<std::uint64_t>(
        (t + static_cast<unsigned __int128>(m) * mod_) >> 64);
    return r >= mod_ ? r - mod_ : r;
  }

  std::uint64_t mod_;
  std::uint64_t neg_inv_;
  std::uint64_t r2_;
  std::uint64_t one_;
};

/// Deterministic Miller-Rabin, exact for all 64-bit inputs.
bool is_prime_u64(std::uint64_t n);

/// The first `count` primes descending from just below 2^62.
std::vector<std::uint64_t> generate_primes(std::size_t count);

/// Determinant of an n x n matrix of Montgomery residues stored row-major;
/// destroys the input.
std::uint64_t det_mod(const MontgomeryDomain& dom,
                      std::vector<std::uint64_t>& a, std::size_t n);

/// Determinant of `a` together with column `rhs_index` of its adjugate,
/// i.e. det(a) * a^{-1} * e_{rhs_index}; destroys the input. Returns 0 and
/// leaves `column` unspecified when the matrix is singular.
std::uint64_t adjugate_column_mod(const MontgomeryDomain& dom,
                                  std::vector<std::uint64_t>& a, std::size_t n,
                                  std::size_t rhs_index,
                                  std::vector<std::uint64_t>& column);

/// Symmetric-range integer with the given residues modulo pairwise distinct
/// primes; |result| <= prod(primes)/2.
Int crt_symmetric(const std::vector<std::uint64_t>& residues,
                  const std::vector<std::uint64_t>& primes);

/// Coefficients (Montgomery form, ascending degree) of the unique
/// polynomial of degree < values.size() taking values[j] at x = j.
std::vector<std::uint64_t> interpolate_mod(const MontgomeryDomain& dom,
                                           const std::vector<std::uint64_t>& values);

/// Same, at arbitrary pairwise distinct points (Montgomery form).
std::vector<std::uint64_t> interpolate_mod(
    const MontgomeryDomain& dom, const std::vector<std::uint64_t>& points,
    const std::vector<std::uint64_t>& values);

}  // namespace quon
