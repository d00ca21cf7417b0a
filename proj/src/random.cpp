#include "nilcone/random.hpp"

#include <limits>

namespace nilcone {

std::int64_t Rng::uniform_int(std::int64_t lo, std::int64_t hi) {
  const auto span = static_cast<std::uint64_t>(hi - lo) + 1U;
  if (span == 0) return static_cast<std::int64_t>(engine_());
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % span;
  std::uint64_t draw = engine_();
  while (draw >= limit) draw = engine_();
  return lo + static_cast<std::int64_t>(draw % span);
}

std::int64_t Rng::nonzero_int(std::int64_t bound) {
  const std::int64_t k = uniform_int(1, bound);
  return uniform_int(0, 1) == 0 ? k : -k;
}

Rational Rng::small_rational() {
  const std::int64_t p = uniform_int(-9, 9);
  const std::int64_t q = uniform_int(1, 4);
  Rational r(static_cast<long>(p), static_cast<unsigned long>(q));
  r.canonicalize();
  return r;
}

Rational Rng::nonzero_small_rational() {
  const std::int64_t p = nonzero_int(9);
  const std::int64_t q = uniform_int(1, 4);
  Rational r(static_cast<long>(p), static_cast<unsigned long>(q));
  r.canonicalize();
  return r;
}

}  // namespace nilcone
