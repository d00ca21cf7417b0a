#pragma once

#include <cstdint>
#include <random>

#include "nilcone/rational.hpp"

namespace nilcone {

/// Seeded sampling source. The engine is mt19937_64 and bounded integers are
/// drawn by rejection sampling, so a seed produces the same stream on every
/// platform and standard library.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform integer in [lo, hi].
  std::int64_t uniform_int(std::int64_t lo, std::int64_t hi);
  /// Uniform over [-bound, bound] \ {0}.
  std::int64_t nonzero_int(std::int64_t bound = 9);
  /// p / q with p uniform in [-9, 9] and q uniform in [1, 4].
  Rational small_rational();
  /// Same but never zero.
  Rational nonzero_small_rational();
  std::uint64_t next() { return engine_(); }

 private:
  std::mt19937_64 engine_;
};

}  // namespace nilcone
