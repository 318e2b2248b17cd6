#include "quon/fock.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>

#include "quon/linalg.hpp"

namespace quon {
namespace {

QRational qr_pow(const QRational& base, int e) {
  QRational out = QRational::one();
  for (int i = 0; i < e; ++i) out = out * base;
  return out;
}

Rat rat_pow(const Rat& base, int e) {
  Rat out = 1;
  for (int i = 0; i < e; ++i) out *= base;
  return out;
}

}  // namespace

FockState FockState::vacuum() {
  FockState s;
  s.add_term(OrderedTuple(), QRational::one());
  return s;
}

FockState FockState::basis(const OrderedTuple& modes) {
  FockState s;
  s.add_term(modes, QRational::one());
  return s;
}

QRational FockState::amplitude(const OrderedTuple& modes) const {
  const auto it = amplitudes_.find(modes);
  return it == amplitudes_.end() ? QRational::zero() : it->second;
}

void FockState::add_term(const OrderedTuple& modes, const QRational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = amplitudes_.emplace(modes, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) amplitudes_.erase(it);
}

std::vector<int> FockState::support_modes() const {
  std::set<int> modes;
  for (const auto& [tuple, c] : amplitudes_)
    modes.insert(tuple.entries().begin(), tuple.entries().end());
  return std::vector<int>(modes.begin(), modes.end());
}

int FockState::max_particles() const {
  int n = 0;
  for (const auto& [tuple, c] : amplitudes_) n = std::max(n, tuple.size());
  return n;
}

FockState& FockState::operator+=(const FockState& other) {
  for (const auto& [tuple, c] : other.amplitudes_) add_term(tuple, c);
  return *this;
}

FockState& FockState::operator-=(const FockState& other) {
  for (const auto& [tuple, c] : other.amplitudes_) add_term(tuple, -c);
  return *this;
}

std::string FockState::str() const {
  if (amplitudes_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [tuple, c] : amplitudes_) {
    if (!first) out << " + ";
    first = false;
    out << "(" << c.str() << ") * |";
    const auto& e = tuple.entries();
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (i) out << ",";
      out << e[i];
    }
    out << ">";
  }
  return out.str();
}

FockState operator+(FockState a, const FockState& b) { return a += b; }
FockState operator-(FockState a, const FockState& b) { return a -= b; }

FockState operator*(const QRational& s, const FockState& a) {
  FockState out;
  for (const auto& [tuple, c] : a.amplitudes()) out.add_term(tuple, s * c);
  return out;
}

const Rat& EnergyAssignment::at(int mode) const {
  const auto it = table_.find(mode);
  if (it == table_.end())
    throw std::out_of_range("no energy assigned to mode " +
                            std::to_string(mode));
  return it->second;
}

FockState create(const FockState& s, int k) {
  FockState out;
  for (const auto& [tuple, c] : s.amplitudes()) {
    if (tuple.contains(k))
      throw std::invalid_argument("mode " + std::to_string(k) +
                                  " already present in " + tuple.str());
    out.add_term(tuple.appended(k), c);
  }
  return out;
}

FockState annihilate(const FockState& s, int k, const QRational& q) {
  FockState out;
  for (const auto& [tuple, c] : s.amplitudes()) {
    const int n = tuple.size();
    for (int j = 1; j <= n; ++j)
      if (tuple(j) == k) out.add_term(tuple.without_position(j), c * qr_pow(q, n - j));
  }
  return out;
}

QRational inner_product(const FockState& x, const FockState& y,
                        const QRational& q) {
  const OrderedTuple vac;
  QRational out;
  for (const auto& [bra, c] : x.amplitudes()) {
    FockState t = y;
    for (int j = bra.size(); j >= 1; --j) t = annihilate(t, bra(j), q);
    out += c * t.amplitude(vac);
  }
  return out;
}

namespace {

// Ordered p-arrangements of the entries of tuple, visited in a fixed order.
void for_each_arrangement(const OrderedTuple& tuple, int p,
                          const std::function<void(const std::vector<int>&)>& visit) {
  const int m = tuple.size();
  std::vector<int> chosen;
  std::vector<bool> used(static_cast<std::size_t>(m), false);
  std::function<void()> rec = [&] {
    if (static_cast<int>(chosen.size()) == p) {
      visit(chosen);
      return;
    }
    for (int j = 1; j <= m; ++j) {
      if (used[static_cast<std::size_t>(j - 1)]) continue;
      used[static_cast<std::size_t>(j - 1)] = true;
      chosen.push_back(tuple(j));
      rec();
      chosen.pop_back();
      used[static_cast<std::size_t>(j - 1)] = false;
    }
  };
  rec();
}

}  // namespace

FockState apply_energy_term(int p, const XGroupPolynomial& coeffs,
                            const EnergyAssignment& energies,
                            const FockState& s, const QRational& q) {
  if (p < 1) throw std::invalid_argument("operator degree must be positive");
  if (coeffs.degree() != p)
    throw std::invalid_argument("coefficient table degree mismatch");
  const std::vector<Permutation> perms = all_permutations(p);
  FockState out;
  for (const auto& [tuple, amp] : s.amplitudes()) {
    if (tuple.size() < p) continue;
    const FockState term = FockState::basis(tuple);
    for_each_arrangement(tuple, p, [&](const std::vector<int>& k) {
      // word a+(k_pi(p))..a+(k_pi(1)) a(k_1)..a(k_p): rightmost factor first
      FockState reduced = term;
      for (int j = p; j >= 1; --j)
        reduced = annihilate(reduced, k[static_cast<std::size_t>(j - 1)], q);
      for (const Permutation& pi : perms) {
        QRational weight;
        for (int i = 1; i <= p; ++i) {
          const QRational c = coeffs.coefficient(pi, i - 1);
          if (c.is_zero()) continue;
          weight += c * QRational(energies.at(k[static_cast<std::size_t>(pi(i) - 1)]));
        }
        if (weight.is_zero()) continue;
        FockState built = reduced;
        for (int i = 1; i <= p; ++i)
          built = create(built, k[static_cast<std::size_t>(pi(i) - 1)]);
        out += (amp * weight) * built;
      }
    });
  }
  return out;
}

FockState apply_energy(const EnergyAssignment& energies, const FockState& s,
                       const std::vector<XGroupPolynomial>& levels,
                       const QRational& q) {
  const int top = static_cast<int>(levels.size());
  if (s.max_particles() > top)
    throw std::invalid_argument("state has more particles than coefficient levels");
  FockState out;
  for (int p = 1; p <= top; ++p)
    out += apply_energy_term(p, levels[static_cast<std::size_t>(p - 1)],
                             energies, s, q);
  return out;
}

FockState apply_energy_term_sets(int p, const XGroupPolynomial& r_p,
                                 const EnergyAssignment& energies,
                                 const FockState& s, const QRational& q) {
  if (p < 1) throw std::invalid_argument("operator degree must be positive");
  if (r_p.degree() != p)
    throw std::invalid_argument("contraction element degree mismatch");
  FockState out;
  for (const auto& [tuple, amp] : s.amplitudes()) {
    const int n = tuple.size();
    if (n < p) continue;
    for (const std::vector<int>& indices : index_subsets(n, p)) {
      const OrderedTuple J = tuple.subsequence(indices);
      const auto [rearranged, inversions] = split_concat(tuple, J);
      const QRational contraction = amp * qr_pow(q, inversions);
      const OrderedTuple rest = subtract(tuple, J);
      for (const auto& [key, r] : r_p.terms()) {
        const OrderedTuple T = concat(rest, apply(key.first, J));
        const int slot = (n - p) + key.second + 1;
        out.add_term(T, contraction * r * QRational(energies.at(T(slot))));
      }
    }
  }
  return out;
}

FockState number_operator_apply(const FockState& s, int i, const QRational& q) {
  FockState out;
  for (const auto& [tuple, amp] : s.amplitudes()) {
    if (!tuple.contains(i)) continue;
    std::vector<int> others;
    for (int j = 1; j <= tuple.size(); ++j)
      if (tuple(j) != i) others.push_back(tuple(j));
    const OrderedTuple pool{others};
    // terms with a repeated spectator mode or one equal to i vanish, so the
    // mode sum reduces to arrangements drawn from the remaining modes
    for (int len = 0; len <= pool.size(); ++len) {
      for_each_arrangement(pool, len, [&](const std::vector<int>& k) {
        FockState t = FockState::basis(tuple);
        for (int j = 0; j < len; ++j)
          t = annihilate(t, k[static_cast<std::size_t>(j)], q);
        t = annihilate(t, i, q);
        t = create(t, i);
        for (int j = len; j-- > 0;)
          t = create(t, k[static_cast<std::size_t>(j)]);
        out += amp * t;
      });
    }
  }
  return out;
}

XGroupPolynomial brute_force_coefficients(int n, const Rat& q0) {
  if (n < 1 || n > 4)
    throw std::invalid_argument("brute force supports degrees 1 through 4");
  if (q0 == 1 || q0 == -1)
    throw singular_error("coefficient system is singular at q = 1 and q = -1");
  const QRational qc{q0};
  std::vector<XGroupPolynomial> solved;
  for (int p = 1; p <= n; ++p) {
    const std::vector<Permutation> perms = all_permutations(p);
    const std::size_t order = perms.size();
    std::vector<int> labels(static_cast<std::size_t>(p));
    std::iota(labels.begin(), labels.end(), 1);
    const OrderedTuple ref{labels};
    const FockState x = FockState::basis(ref);

    // Gram matrix of the p-sector in the rearrangement basis:
    // M(r, c) = q0^{I(perms[r] perms[c]^{-1})}.
    Matrix<Rat> gram(order, order);
    for (std::size_t r = 0; r < order; ++r)
      for (std::size_t c = 0; c < order; ++c)
        gram(r, c) =
            rat_pow(q0, compose(perms[r], perms[c].inverse()).inversions());

    // Lower-level action on x under the indicator energy E = delta_{mode, t}.
    std::vector<FockState> lower(static_cast<std::size_t>(p));
    for (int t = 1; t <= p; ++t) {
      EnergyAssignment indicator;
      for (int m = 1; m <= p; ++m) indicator.set(m, m == t ? 1 : 0);
      FockState acc;
      for (int r = 1; r < p; ++r)
        acc += apply_energy_term(r, solved[static_cast<std::size_t>(r - 1)],
                                 indicator, x, qc);
      lower[static_cast<std::size_t>(t - 1)] = acc;
    }

    // The coefficient of x_{rho} in the eigenvalue equation with indicator
    // mode t = rho(i) constrains exactly the slot-i unknowns:
    // sum_pi M(rho, pi) c_i(pi) = [rho = id] - lower_t amplitude at rho.
    XGroupPolynomial table(p);
    for (int i = 1; i <= p; ++i) {
      Matrix<Rat> rhs(order, 1);
      for (std::size_t r = 0; r < order; ++r) {
        const Permutation& rho = perms[r];
        const int t = rho(i);
        Rat v = rho.is_identity() ? 1 : 0;
        v -= lower[static_cast<std::size_t>(t - 1)]
                 .amplitude(apply(rho, ref))
                 .constant_value();
        rhs(r, 0) = v;
      }
      const FractionFreeSolution<Rat> sol = fraction_free_solve(gram, rhs);
      for (std::size_t c = 0; c < order; ++c)
        table.add_term(perms[c], i - 1, QRational(sol.scaled(c, 0) / sol.det));
    }
    solved.push_back(table);
  }
  return solved.back();
}

}  // namespace quon
