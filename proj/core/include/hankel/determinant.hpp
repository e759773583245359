#pragma once

#include <cstddef>
#include <cstdint>
#include <string_view>

#include "hankel/matrix.hpp"
#include "hankel/op_counter.hpp"
#include "hankel/scalar.hpp"
#include "hankel/sequence.hpp"

namespace hankel {

enum class Algorithm { cofactor, bareiss, condensation, condensation_fallback, closed_form };

std::string_view to_string(Algorithm a);

struct DetReport {
  Scalar value;
  Algorithm algorithm = Algorithm::bareiss;
  std::uint64_t mul_count = 0;
  std::uint64_t div_count = 0;
  bool fallback_used = false;
};

inline constexpr std::size_t kCofactorMaxDimension = 10;

// Laplace expansion along the first row, division-free. Minors are memoized
// by their column set so each is expanded once. Throws
// Error(dimension_guard) above kCofactorMaxDimension.
DetReport det_cofactor(const SquareMatrix& m);

// Fraction-free Bareiss elimination. The pivot is the first nonzero entry at
// or below the diagonal; each row swap flips the sign.
DetReport det_bareiss(const SquareMatrix& m);

// Dodgson condensation: repeatedly replace the k x k array by its
// (k-1) x (k-1) array of contiguous 2 x 2 minors, divided entrywise by the
// interior of the array from two steps earlier. A zero divisor anywhere
// hands the whole matrix to det_bareiss and sets fallback_used.
DetReport det_condensation(const SquareMatrix& m);

// D(n, r, d) = det[W_{n+i+j}^<r>] from the Desnanot-Jacobi recurrence
//   D(n, r, k+1) = (D(n, r, k) D(n+2, r, k) - D(n+1, r, k)^2) / D(n+2, r, k-1)
// seeded with D(., r, 0) = 1 and D(., r, 1) = W^<r>. Throws
// Error(zero_divisor) when an intermediate divisor vanishes; callers fall
// back to det_bareiss on the built matrix.
Scalar condense_structured(SequenceCache& cache, std::int64_t n, std::int64_t r, std::int64_t d,
                           OpCounter* counter = nullptr);
Scalar condense_structured(const RecurrenceSpec& spec, std::int64_t n, std::int64_t r, std::int64_t d,
                           OpCounter* counter = nullptr);

}  // namespace hankel
