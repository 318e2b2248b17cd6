#pragma once

#include <map>
#include <string>
#include <vector>

#include "quon/energy.hpp"
#include "quon/permutation.hpp"
#include "quon/scalar.hpp"

namespace quon {

/// Finitely supported linear combination of basis vectors labeled by
/// ordered tuples of pairwise-distinct modes. The stored tuple
/// (k_1, ..., k_n) labels the monomial with k_n created outermost.
/// Tuples of different lengths may mix in one formal sum.
class FockState {
public:
  FockState() = default;

  static FockState vacuum();
  static FockState basis(const OrderedTuple& modes);

  bool is_zero() const { return amplitudes_.empty(); }
  const std::map<OrderedTuple, QRational>& amplitudes() const {
    return amplitudes_;
  }
  QRational amplitude(const OrderedTuple& modes) const;

  /// Adds c on the given basis tuple, erasing the term if the sum vanishes.
  void add_term(const OrderedTuple& modes, const QRational& c);

  /// Sorted list of every mode appearing in the support.
  std::vector<int> support_modes() const;
  /// Largest tuple length over the support; 0 for the zero state.
  int max_particles() const;

  FockState& operator+=(const FockState& other);
  FockState& operator-=(const FockState& other);
  bool operator==(const FockState& other) const {
    return amplitudes_ == other.amplitudes_;
  }
  bool operator!=(const FockState& other) const { return !(*this == other); }

  std::string str() const;

private:
  std::map<OrderedTuple, QRational> amplitudes_;
};

FockState operator+(FockState a, const FockState& b);
FockState operator-(FockState a, const FockState& b);
FockState operator*(const QRational& s, const FockState& a);

/// Exact rational single-particle energy per mode label.
class EnergyAssignment {
public:
  EnergyAssignment() = default;

  void set(int mode, const Rat& value) { table_[mode] = value; }
  /// Throws std::out_of_range if the mode has no assigned energy.
  const Rat& at(int mode) const;
  const std::map<int, Rat>& table() const { return table_; }

private:
  std::map<int, Rat> table_;
};

/// Creation operator: appends k outermost to every basis tuple. Throws
/// std::invalid_argument if k already occurs anywhere in the support.
FockState create(const FockState& s, int k);

/// Annihilation operator, by the rewriting rule
/// a(k) x_{(k_1..k_n)} = sum over j with k_j = k of q^{n-j} x_{without j};
/// the vacuum maps to zero.
FockState annihilate(const FockState& s, int k,
                     const QRational& q = QRational::q_power(1));

/// Pairing computed by rewriting: the bra's annihilators act on the ket
/// outermost mode first and the vacuum amplitude is read off. Tuples from
/// different sectors or with different mode sets pair to zero.
QRational inner_product(const FockState& x, const FockState& y,
                        const QRational& q = QRational::q_power(1));

/// Applies the degree-p energy operator by literal rewriting. For each
/// basis tuple the mode sum runs over ordered p-arrangements (k_1..k_p) of
/// its modes; the word a+(k_pi(p))..a+(k_pi(1)) a(k_1)..a(k_p) is realized
/// through annihilate/create with weight sum_i c_i(q, pi) E(k_pi(i)).
/// coeffs must have degree p.
FockState apply_energy_term(int p, const XGroupPolynomial& coeffs,
                            const EnergyAssignment& energies,
                            const FockState& s,
                            const QRational& q = QRational::q_power(1));

/// Sum of apply_energy_term over p = 1..levels.size(); levels[p-1] must
/// have degree p and no support tuple of s may exceed levels.size()
/// particles. On a basis state this returns (sum of mode energies) times
/// the state.
FockState apply_energy(const EnergyAssignment& energies, const FockState& s,
                       const std::vector<XGroupPolynomial>& levels,
                       const QRational& q = QRational::q_power(1));

/// The same degree-p action computed through the subset expansion instead
/// of operator words: for each size-p subsequence J of a basis tuple K the
/// contraction contributes q^{I_K((K-J) u J)}, the degree-p contraction
/// element r_p rearranges J, and an X-degree d selects the energy slot
/// E(T(n-p+d+1)) of the rearranged tuple T. Cross-check for
/// apply_energy_term; r_p must have degree p.
FockState apply_energy_term_sets(int p, const XGroupPolynomial& r_p,
                                 const EnergyAssignment& energies,
                                 const FockState& s,
                                 const QRational& q = QRational::q_power(1));

/// Greenberg's number operator
/// n(i) = sum_{s>=0} sum_{k_1..k_s} a+(k_1)..a+(k_s) a+(i) a(i) a(k_s)..a(k_1)
/// applied by literal rewriting, with the mode sum restricted to modes
/// present in s (all other summands vanish).
FockState number_operator_apply(const FockState& s, int i,
                                const QRational& q = QRational::q_power(1));

/// Independent coefficient oracle: imposes the eigenvalue equation on the
/// generic p-particle state with indicator energies, level by level, and
/// solves the resulting linear systems at q = q0. Returns the degree-n
/// table. n <= 4; q0 = +-1 is rejected as singular.
XGroupPolynomial brute_force_coefficients(int n, const Rat& q0);

}  // namespace quon
