// Acceptance suite: nine exact checks covering the determinant formula, the
// eigenvalue property, coefficient identities, the classical limit, and the
// rewriting oracle.  Run a single check with --criterion N (1..9) or all of
// them with no arguments.  Exit 0 iff every executed check passes.

#include <chrono>
#include <cstdint>
#include <iostream>
#include <string>
#include <vector>

#include "gen.hpp"
#include "quon/energy.hpp"
#include "quon/fock.hpp"
#include "quon/permutation.hpp"
#include "quon/scalar.hpp"
#include "quon/zagier.hpp"

namespace {

using namespace quon;

struct Outcome {
  bool pass = false;
  std::string detail;
};

const QRational kSymbolicQ = QRational::q_power(1);

Rat random_energy(Rng& rng) {
  return Rat(Int(rng.int_in(-6, 6))) / Rat(Int(rng.int_in(1, 5)));
}

Rat random_nonzero_energy(Rng& rng) {
  Rat e;
  do {
    e = random_energy(rng);
  } while (e == 0);
  return e;
}

// Draws `draws` random (mode tuple, energy table) pairs for n particles and
// checks apply_energy against (sum of energies) times the basis state.
// Returns the number of failing draws; `detail` describes the first failure.
int failing_eigen_draws(int n, const std::vector<XGroupPolynomial>& levels,
                        const QRational& q, std::uint64_t seed, int draws,
                        bool nonzero_energies, std::string& detail) {
  Rng rng(seed);
  int failures = 0;
  for (int d = 0; d < draws; ++d) {
    const std::vector<int> modes = testgen::random_distinct_modes(rng, n);
    EnergyAssignment energies;
    Rat total = 0;
    for (int m : modes) {
      const Rat e =
          nonzero_energies ? random_nonzero_energy(rng) : random_energy(rng);
      energies.set(m, e);
      total += e;
    }
    const FockState x = FockState::basis(OrderedTuple(modes));
    if (apply_energy(energies, x, levels, q) != QRational(total) * x) {
      ++failures;
      if (detail.empty()) {
        detail = "n = " + std::to_string(n) + ", draw " + std::to_string(d);
      }
    }
  }
  return failures;
}

Outcome criterion_determinant() {
  for (int n = 2; n <= 5; ++n) {
    if (determinant(ZagierMatrix::build(n)) != zagier_formula(n)) {
      return {false, "symbolic mismatch at n = " + std::to_string(n)};
    }
  }
  const ZagierMatrix six = ZagierMatrix::build(6);
  for (const Rat& q0 : {Rat(1, 3), Rat(-1, 2), Rat(3, 7)}) {
    if (determinant_at(six, q0) != zagier_formula_at(6, q0)) {
      return {false, "value mismatch at n = 6, q = " + q0.str()};
    }
  }
  return {true, "n = 2..5 symbolic, n = 6 at q = 1/3, -1/2, 3/7"};
}

Outcome criterion_eigenvalue() {
  std::string detail;
  for (int n = 1; n <= 3; ++n) {
    const std::vector<XGroupPolynomial> levels = energy_levels(n);
    if (failing_eigen_draws(n, levels, kSymbolicQ, 4100 + n, 20, false,
                            detail) != 0) {
      return {false, "symbolic q, " + detail};
    }
  }
  const std::vector<Rat> points = {Rat(1, 2), Rat(-1, 3), Rat(2, 7)};
  for (std::size_t i = 0; i < points.size(); ++i) {
    const std::vector<XGroupPolynomial> levels = energy_levels_at(4, points[i]);
    if (failing_eigen_draws(4, levels, QRational(points[i]), 4200 + i, 20,
                            false, detail) != 0) {
      return {false, "q = " + points[i].str() + ", " + detail};
    }
  }
  return {true, "n = 1..3 symbolic and n = 4 at three points, 20 draws each"};
}

Outcome criterion_formula_agreement() {
  for (int n = 1; n <= 4; ++n) {
    if (coeffs_via_product(n) != coeffs_via_explicit(n)) {
      return {false, "symbolic mismatch at n = " + std::to_string(n)};
    }
  }
  for (const Rat& q0 : {Rat(1, 3), Rat(-2, 7)}) {
    if (coeffs_via_product_at(5, q0) != coeffs_via_explicit_at(5, q0)) {
      return {false, "mismatch at n = 5, q = " + q0.str()};
    }
  }
  return {true, "n = 1..4 symbolic, n = 5 at q = 1/3 and -2/7"};
}

Outcome criterion_recursion_closed_form() {
  for (int p = 1; p <= 4; ++p) {
    if (r_p_defining(p) != r_p_closed(p)) {
      return {false, "mismatch at p = " + std::to_string(p)};
    }
  }
  const std::vector<Permutation> perms = all_permutations(2);
  XGroupPolynomial expected(2);
  expected.add_term(perms[0], 0, QRational(Rat(1)));
  expected.add_term(perms[1], 1, -kSymbolicQ);
  if (r_p_closed(2) != expected) {
    return {false, "p = 2 closed form is not e - q X T_12"};
  }
  return {true, "p = 1..4 symbolic; p = 2 equals e - q X T_12"};
}

Outcome criterion_coefficient_symmetry() {
  for (int n = 2; n <= 4; ++n) {
    const CoefficientSymmetryReport rep = check_coefficient_symmetry(n);
    if (!rep.holds || !rep.violations.empty()) {
      return {false, "violations at n = " + std::to_string(n)};
    }
  }
  const CoefficientSymmetryReport five =
      check_coefficient_symmetry_at(5, Rat(1, 2));
  return {true, "zero violations for n = 2, 3, 4; n = 5 evidence at q = 1/2: " +
                    std::to_string(five.violations.size()) + " violations in " +
                    std::to_string(five.pairs_checked) + " pairs"};
}

Outcome criterion_number_operator_limit() {
  for (int n = 1; n <= 3; ++n) {
    const GreenbergReport rep = greenberg_limit_check(n, 5200 + n, 10);
    if (!rep.holds) {
      return {false, "mismatch at n = " + std::to_string(n) +
                         (rep.mismatches.empty() ? "" : ": " + rep.mismatches[0])};
    }
  }
  return {true, "operator actions agree at q = 0 for n = 1..3, 10 states each"};
}

Outcome criterion_integrality() {
  std::size_t entries = 0;
  for (int n = 2; n <= 4; ++n) {
    const IntegralityReport rep = check_integrality(n);
    if (!rep.holds || !rep.violations.empty()) {
      return {false, "non-integer entry at n = " + std::to_string(n)};
    }
    entries += rep.entries_checked;
  }
  return {true, "all " + std::to_string(entries) +
                    " scaled inverse entries are integer polynomials"};
}

Outcome criterion_inner_product_oracle() {
  Rng rng(6300);
  std::size_t pairs = 0;
  for (int n = 1; n <= 4; ++n) {
    const OrderedTuple base(testgen::random_distinct_modes(rng, n));
    const std::vector<Permutation> perms = all_permutations(n);
    for (const Permutation& pi : perms) {
      for (const Permutation& sigma : perms) {
        const QRational expect = QRational::q_power(
            compose(sigma.inverse(), pi).inversions());
        if (inner_product(FockState::basis(apply(pi, base)),
                          FockState::basis(apply(sigma, base))) != expect) {
          return {false, "mismatch at n = " + std::to_string(n)};
        }
        ++pairs;
      }
    }
  }
  return {true, "all " + std::to_string(pairs) +
                    " permutation pairs match the inversion-count power"};
}

Outcome criterion_uniqueness() {
  const Rat q0(1, 2);
  const QRational q(q0);
  std::size_t perturbations = 0;
  for (int n = 1; n <= 3; ++n) {
    const std::vector<XGroupPolynomial> levels = energy_levels_at(n, q0);
    for (int p = 1; p <= n; ++p) {
      for (const Permutation& pi : all_permutations(p)) {
        for (int i = 1; i <= p; ++i) {
          std::vector<XGroupPolynomial> bumped = levels;
          bumped[p - 1].add_term(pi, i - 1, QRational(Rat(1)));
          std::string detail;
          const int failures =
              failing_eigen_draws(n, bumped, q, 6400 + 17 * perturbations, 5,
                                  true, detail);
          if (failures == 0) {
            return {false, "n = " + std::to_string(n) + ": bumping c_" +
                               std::to_string(i) + " at level " +
                               std::to_string(p) +
                               " left every eigenvalue draw intact"};
          }
          ++perturbations;
        }
      }
    }
  }
  return {true, "each of " + std::to_string(perturbations) +
                    " unit bumps broke the eigenvalue equation at q = 1/2"};
}

struct Criterion {
  const char* name;
  Outcome (*run)();
};

const std::vector<Criterion> kCriteria = {
    {"determinant product formula", criterion_determinant},
    {"eigenvalue equation", criterion_eigenvalue},
    {"coefficient formula agreement", criterion_formula_agreement},
    {"recursion closed form", criterion_recursion_closed_form},
    {"coefficient symmetry", criterion_coefficient_symmetry},
    {"number operator limit", criterion_number_operator_limit},
    {"scaled inverse integrality", criterion_integrality},
    {"inner product oracle", criterion_inner_product_oracle},
    {"uniqueness probe", criterion_uniqueness},
};

}  // namespace

int main(int argc, char** argv) {
  int selected = 0;
  if (argc == 3 && std::string(argv[1]) == "--criterion") {
    selected = std::atoi(argv[2]);
    if (selected < 1 || selected > static_cast<int>(kCriteria.size())) {
      std::cerr << "criterion must be between 1 and " << kCriteria.size()
                << "\n";
      return 2;
    }
  } else if (argc != 1) {
    std::cerr << "usage: acceptance [--criterion N]\n";
    return 2;
  }

  bool all_pass = true;
  for (std::size_t i = 0; i < kCriteria.size(); ++i) {
    if (selected != 0 && static_cast<int>(i + 1) != selected) continue;
    const auto start = std::chrono::steady_clock::now();
    const Outcome outcome = kCriteria[i].run();
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
            .count();
    all_pass = all_pass && outcome.pass;
    std::cout << "criterion " << (i + 1) << " (" << kCriteria[i].name
              << "): " << (outcome.pass ? "PASS" : "FAIL") << " [" << secs
              << " s] " << outcome.detail << "\n";
  }
  return all_pass ? 0 : 1;
}
