#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "quon/energy.hpp"
#include "quon/fock.hpp"
#include "quon/rng.hpp"

namespace quon {
namespace {

Rat random_energy(Rng& rng) {
  return Rat(rng.int_in(-6, 6)) / Rat(rng.int_in(1, 5));
}

}  // namespace

GreenbergReport greenberg_limit_check(int n, std::uint64_t seed, int draws) {
  if (n < 1 || n > 5)
    throw std::invalid_argument("number-operator check supports 1 <= n <= 5");
  GreenbergReport report;
  report.n = n;
  report.seed = seed;
  report.draws = draws;

  const std::vector<XGroupPolynomial> levels = energy_levels_at(n, 0);
  report.coefficients_degenerate = true;
  for (int p = 1; p <= n; ++p) {
    XGroupPolynomial single(p);
    single.add_term(Permutation::identity(p), 0, QRational::one());
    if (levels[static_cast<std::size_t>(p - 1)] != single)
      report.coefficients_degenerate = false;
  }

  const QRational q0{Rat(0)};
  Rng rng(seed);
  for (int d = 0; d < draws; ++d) {
    std::vector<int> modes;
    while (static_cast<int>(modes.size()) < n) {
      const int c = static_cast<int>(rng.int_in(1, 12));
      if (std::find(modes.begin(), modes.end(), c) == modes.end())
        modes.push_back(c);
    }
    FockState state = FockState::basis(OrderedTuple(modes));
    if (n >= 2 && rng.coin()) {
      std::vector<int> swapped = modes;
      std::swap(swapped[0], swapped[1]);
      state.add_term(OrderedTuple(swapped), QRational(random_energy(rng)));
    }
    EnergyAssignment energies;
    for (int m : modes) energies.set(m, random_energy(rng));

    const FockState via_operator = apply_energy(energies, state, levels, q0);
    FockState via_number;
    for (int m : modes)
      via_number +=
          QRational(energies.at(m)) * number_operator_apply(state, m, q0);
    if (via_operator != via_number) {
      std::ostringstream msg;
      msg << "draw " << d << ": energy operator gave " << via_operator.str()
          << " but the number-operator sum gave " << via_number.str();
      report.mismatches.push_back(msg.str());
    }
  }
  report.actions_match = report.mismatches.empty();
  report.holds = report.coefficients_degenerate && report.actions_match;
  return report;
}

}  // namespace quon
