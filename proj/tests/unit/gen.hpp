#pragma once

#include <algorithm>
#include <vector>

#include "quon/rng.hpp"
#include "quon/scalar.hpp"

namespace quon::testgen {

inline std::vector<int> random_distinct_modes(Rng& rng, int count, int lo = 1,
                                              int hi = 12) {
  std::vector<int> modes;
  while (static_cast<int>(modes.size()) < count) {
    const int c = static_cast<int>(rng.int_in(lo, hi));
    if (std::find(modes.begin(), modes.end(), c) == modes.end())
      modes.push_back(c);
  }
  return modes;
}

inline Rat random_rat(Rng& rng, long long bound = 9) {
  return Rat(Int(rng.int_in(-bound, bound)), Int(rng.int_in(1, bound)));
}

inline QPolynomial random_poly(Rng& rng, int max_degree = 8) {
  const int deg = static_cast<int>(rng.int_in(0, max_degree));
  std::vector<Rat> c;
  for (int i = 0; i <= deg; ++i) c.push_back(random_rat(rng));
  return QPolynomial::from_coeffs(std::move(c));
}

inline QPolynomial random_nonzero_poly(Rng& rng, int max_degree = 8) {
  for (;;) {
    QPolynomial p = random_poly(rng, max_degree);
    if (!p.is_zero()) return p;
  }
}

inline QRational random_qrational(Rng& rng, int max_degree = 5) {
  return QRational(random_poly(rng, max_degree),
                   random_nonzero_poly(rng, max_degree));
}

}  // namespace quon::testgen
