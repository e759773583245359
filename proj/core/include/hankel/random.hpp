#pragma once

#include <cstddef>
#include <cstdint>

#include "hankel/matrix.hpp"
#include "hankel/sequence.hpp"

namespace hankel {

// Reproducible 64-bit linear congruential generator (Knuth's MMIX constants):
//   state <- state * 6364136223846793005 + 1442695040888963407  (mod 2^64)
// The state is advanced before every draw and the high 32 bits are returned.
// uniform(lo, hi) is lo + (draw mod (hi - lo + 1)).
class Lcg {
 public:
  static constexpr std::uint64_t kMultiplier = 6364136223846793005ULL;
  static constexpr std::uint64_t kIncrement = 1442695040888963407ULL;

  explicit Lcg(std::uint64_t seed) : state_(seed) {}

  std::uint32_t next() {
    state_ = state_ * kMultiplier + kIncrement;
    return static_cast<std::uint32_t>(state_ >> 32);
  }

  // Inclusive on both ends; requires lo <= hi and a span below 2^32.
  std::int64_t uniform(std::int64_t lo, std::int64_t hi);

 private:
  std::uint64_t state_;
};

// dim x dim integer matrix, entries drawn row by row from [-bound, bound].
SquareMatrix random_integer_matrix(Lcg& rng, std::size_t dim, std::int64_t bound);

// Rational constants (a, b, c1, c2) with numerators in [-5, 5] and
// denominators in [1, 4]; c2 is redrawn until nonzero. Draw order is
// a, b, c1, c2, numerator before denominator.
RecurrenceSpec random_rational_spec(Lcg& rng);

}  // namespace hankel
