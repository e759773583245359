#pragma once

#include <cstdint>
#include <deque>
#include <string>
#include <string_view>
#include <vector>

#include "hankel/scalar.hpp"

namespace hankel {

// W_0 = a, W_1 = b, W_k = c1 W_{k-1} + c2 W_{k-2} for every other integer k.
//
// All four constants live in one domain; integer constants are widened on
// construction when mixed with rational or polynomial ones.
class RecurrenceSpec {
 public:
  RecurrenceSpec(Scalar a, Scalar b, Scalar c1, Scalar c2);

  // fibonacci (0,1,1,1), lucas (2,1,1,1), pell (0,1,2,1), jacobsthal (0,1,1,2).
  static RecurrenceSpec fibonacci(Domain d = Domain::integer);
  static RecurrenceSpec lucas(Domain d = Domain::integer);
  static RecurrenceSpec pell(Domain d = Domain::integer);
  static RecurrenceSpec jacobsthal(Domain d = Domain::integer);
  static RecurrenceSpec preset(std::string_view name, Domain d = Domain::integer);
  static const std::vector<std::string>& preset_names();
  // Generic (a, b, c1, c2) over the polynomial domain.
  static RecurrenceSpec symbolic();

  // Same coefficients with seeds (0, 1): the U sequence.
  RecurrenceSpec companion() const;

  const Scalar& a() const { return a_; }
  const Scalar& b() const { return b_; }
  const Scalar& c1() const { return c1_; }
  const Scalar& c2() const { return c2_; }
  Domain domain() const { return a_.domain(); }

  friend bool operator==(const RecurrenceSpec&, const RecurrenceSpec&) = default;

 private:
  Scalar a_, b_, c1_, c2_;
};

// b^2 - c1 a b - c2 a^2, the determinant of rows (W_1, W_2), (W_0, W_1).
Scalar delta(const RecurrenceSpec& spec);

// Memoized terms of one recurrence, materialized on demand in both
// directions. Single-writer: clone per thread rather than sharing.
//
// Backward terms use W_k = (W_{k+2} - c1 W_{k+1}) / c2, which requires
// c2 != 0 and, outside the rational domain, exact division at every step.
class SequenceCache {
 public:
  explicit SequenceCache(RecurrenceSpec spec);

  const RecurrenceSpec& spec() const { return spec_; }

  // W_k. The reference stays valid for the lifetime of the cache.
  const Scalar& term(std::int64_t k);

  // W_m W_{m+1} ... W_{m+r-1}; the multiplicative identity when r == 0.
  // Multiplications are added to *mul_count when given.
  Scalar rising_power(std::int64_t m, std::int64_t r, std::uint64_t* mul_count = nullptr);

 private:
  RecurrenceSpec spec_;
  std::deque<Scalar> forward_;   // W_0, W_1, ...
  std::deque<Scalar> backward_;  // W_{-1}, W_{-2}, ...
};

}  // namespace hankel
