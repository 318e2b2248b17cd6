#pragma once

#include <cstdint>
#include <random>

namespace quon {

/// Seeded deterministic generator. Bounded draws use fixed rejection
/// sampling instead of std distributions so identical seeds produce
/// identical streams on every platform and standard library.
class Rng {
public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t u64() { return engine_(); }

  /// Uniform in [0, bound); bound > 0.
  std::uint64_t below(std::uint64_t bound) {
    const std::uint64_t threshold = (-bound) % bound;
    for (;;) {
      const std::uint64_t r = engine_();
      if (r >= threshold) return r % bound;
    }
  }

  /// Uniform in [lo, hi], inclusive on both ends.
  long long int_in(long long lo, long long hi) {
    return lo + static_cast<long long>(
                    below(static_cast<std::uint64_t>(hi - lo) + 1));
  }

  bool coin() { return (engine_() & 1u) != 0; }

private:
  std::mt19937_64 engine_;
};

}  // namespace quon
