#pragma once

#include <cstdint>

#include <gmpxx.h>

#include "hankel/op_counter.hpp"
#include "hankel/scalar.hpp"
#include "hankel/sequence.hpp"

namespace hankel {

// Exponent e of a sign factor (-1)^e. Only the parity matters, so signs are
// applied by negation and never by powering -1 in a scalar domain.
struct SignExponent {
  std::int64_t value = 0;

  bool odd() const { return value % 2 != 0; }
  Scalar apply(Scalar x) const { return odd() ? -x : std::move(x); }
};

// C(n, k) by the multiplicative rule; 0 when k < 0 or k > n. Requires n >= 0.
mpz_class binomial(std::int64_t n, std::int64_t k);

// n C(d, 2) + C(d + 1, 3), shared by both rising-power determinant theorems.
SignExponent hankel_sign(std::int64_t n, std::int64_t d);

// det[F_{n+i+j}^<r>]_{0<=i,j<d} for 1 <= d <= r + 1:
//   (-1)^{n C(d,2) + C(d+1,3)} prod_{i=1}^{d-1} (F_i F_{r+1-i})^{d-i}
//     prod_{i=d-1}^{2(d-1)} F_{n+i}^<r+1-d>
Scalar theorem1_rhs(std::int64_t n, std::int64_t r, std::int64_t d);

// det[W_{n+i+j}^<r>]_{0<=i,j<d} for 1 <= d <= r + 1 and any recurrence:
//   (-1)^{n C(d,2) + C(d+1,3)} c2^{(n+d-2) C(d,2)} Delta^{C(d,2)}
//     prod_{i=1}^{d-1} (U_i U_{r+1-i})^{d-i} prod_{i=d-1}^{2(d-1)} W_{n+i}^<r+1-d>
// The U product is accumulated from running prefixes, so the multiplication
// count is linear in d for fixed r.
Scalar theorem2_rhs(const RecurrenceSpec& spec, std::int64_t n, std::int64_t r, std::int64_t d,
                    OpCounter* counter = nullptr);

// det[F_{n+i+j}^<r>]_{0<=i,j<=r} = (-1)^{n C(r+1,2) + C(r+2,3)} (F_1 ... F_r)^{r+1}
Scalar prodinger_rhs(std::int64_t n, std::int64_t r);

// det[F_{n+i+j}^r]_{0<=i,j<=r} = (-1)^{(n+1) C(r+1,2)} (F_1^r F_2^{r-1} ... F_r)^2 prod_{i=0}^r C(r,i)
Scalar carlitz_rhs(std::int64_t n, std::int64_t r);

// F_n F_{n+i+j} - F_{n+i} F_{n+j}  and  (-1)^{n+1} F_i F_j
Scalar vajda_lhs(std::int64_t n, std::int64_t i, std::int64_t j);
Scalar vajda_rhs(std::int64_t n, std::int64_t i, std::int64_t j);

// W_n W_{n+i+j} - W_{n+i} W_{n+j}  and  -(-c2)^n Delta U_i U_j
Scalar generalized_vajda_lhs(const RecurrenceSpec& spec, std::int64_t n, std::int64_t i, std::int64_t j);
Scalar generalized_vajda_rhs(const RecurrenceSpec& spec, std::int64_t n, std::int64_t i, std::int64_t j);

// Value used when d > r + 1, where the theorems' rising power would have a
// negative order. Always zero: the matrix has rank at most r + 1, a
// convention checked against the determinant oracles in the test suite.
Scalar hankel_rank_bound_value(const RecurrenceSpec& spec, std::int64_t n, std::int64_t r, std::int64_t d);

}  // namespace hankel
