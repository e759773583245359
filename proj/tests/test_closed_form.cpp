#include <doctest.h>

#include "hankel/closed_form.hpp"
#include "hankel/determinant.hpp"
#include "hankel/error.hpp"
#include "test_support.hpp"

using namespace hankel;
using hankel::testing::error_code;

namespace {

Scalar q(long p, long d) { return Scalar::rational(p, d); }

Scalar oracle(const RecurrenceSpec& spec, std::int64_t n, std::int64_t r, std::int64_t d,
              EntryMode mode = EntryMode::rising_power) {
  return det_bareiss(build(spec, {n, r, d, mode})).value;
}

}  // namespace

TEST_CASE("binomial coefficients") {
  CHECK(binomial(0, 0) == 1);
  CHECK(binomial(5, 2) == 10);
  CHECK(binomial(4, 5) == 0);
  CHECK(binomial(4, -1) == 0);
  CHECK(binomial(30, 15) == 155117520);
  CHECK(binomial(100, 50) == mpz_class("100891344545564193334812497256"));
  for (std::int64_t n = 1; n <= 40; ++n) {
    for (std::int64_t k = 1; k < n; ++k) CHECK(binomial(n, k) == binomial(n - 1, k - 1) + binomial(n - 1, k));
  }
}

TEST_CASE("sign exponent") {
  CHECK(hankel_sign(0, 1).value == 0);
  CHECK(hankel_sign(1, 2).value == 2);
  CHECK(hankel_sign(0, 3).value == 4);
  CHECK(hankel_sign(-1, 2).value == 0);
  CHECK(SignExponent{3}.apply(Scalar(5)) == Scalar(-5));
  CHECK(SignExponent{-3}.odd());
  CHECK(SignExponent{-4}.apply(Scalar(5)) == Scalar(5));
}

TEST_CASE("Fibonacci rising-power closed form") {
  CHECK(theorem1_rhs(1, 2, 2) == Scalar(2));
  CHECK(theorem1_rhs(1, 1, 2) == Scalar(1));
  CHECK(theorem1_rhs(1, 3, 3) == Scalar(-120));
  CHECK(theorem1_rhs(-3, 4, 3) == Scalar(0));
  CHECK(theorem1_rhs(2, 5, 4) == Scalar(mpz_class("3648939840000")));
  CHECK(theorem1_rhs(0, 2, 3) == Scalar(1));
  SequenceCache fib(RecurrenceSpec::fibonacci());
  for (std::int64_t n = -6; n <= 6; ++n) CHECK(theorem1_rhs(n, 3, 1) == fib.rising_power(n, 3));
  CHECK(error_code([] { (void)theorem1_rhs(0, 2, 4); }) == Errc::invalid_argument);
  CHECK(error_code([] { (void)theorem1_rhs(0, 2, 0); }) == Errc::invalid_argument);
  CHECK(error_code([] { (void)theorem1_rhs(0, -1, 1); }) == Errc::invalid_argument);
}

TEST_CASE("general recurrence closed form") {
  CHECK(theorem2_rhs(RecurrenceSpec::lucas(), 1, 1, 2) == Scalar(-5));
  CHECK(theorem2_rhs(RecurrenceSpec::jacobsthal(), 1, 1, 2) == Scalar(2));
  CHECK(theorem2_rhs(RecurrenceSpec::lucas(), 0, 2, 3) == Scalar(-125));
  CHECK(theorem2_rhs(RecurrenceSpec::pell(), 1, 3, 2) == Scalar(3000));
  CHECK(theorem2_rhs(RecurrenceSpec::jacobsthal(), 1, 2, 3) == Scalar(-64));

  const RecurrenceSpec odd(q(1, 2), q(-2, 3), Scalar(3), q(5, 4));
  CHECK(theorem2_rhs(odd, -2, 3, 3) == Scalar(mpq_class("80079842777/248832000")));

  const std::string e022 =
      theorem2_rhs(RecurrenceSpec::symbolic(), 0, 2, 2).to_string();
  CHECK(e022 == oracle(RecurrenceSpec::symbolic(), 0, 2, 2).to_string());

  // c2 = 2 with a negative exponent; W_{-1} = 0 is still an exact integer.
  const RecurrenceSpec halving(Scalar(1), Scalar(1), Scalar(1), Scalar(2));
  CHECK(oracle(halving, -1, 1, 2) == Scalar(-1));
  CHECK(error_code([&] { (void)theorem2_rhs(halving, -1, 1, 2); }) == Errc::not_invertible);
  CHECK(error_code([] { (void)theorem2_rhs(RecurrenceSpec::lucas(), 0, 1, 3); }) == Errc::invalid_argument);
}

TEST_CASE("symbolic determinant expands to the expected polynomial") {
  const Polynomial got = theorem2_rhs(RecurrenceSpec::symbolic(), 0, 2, 2).as_polynomial();
  const auto a = Polynomial::variable(Var::a), b = Polynomial::variable(Var::b);
  const auto c1 = Polynomial::variable(Var::c1), c2 = Polynomial::variable(Var::c2);
  const Polynomial frozen = a * a * a * b * c1 * c2 * c2 + Polynomial(2) * a * a * b * b * c1 * c1 * c2 +
                            a * b * b * b * c1 * c1 * c1 - a * b * b * b * c1 * c2 - b * b * b * b * c1 * c1;
  CHECK(got == frozen);
}

TEST_CASE("Fibonacci spec reduces the general form") {
  const RecurrenceSpec fib = RecurrenceSpec::fibonacci();
  for (std::int64_t n = -6; n <= 6; ++n) {
    for (std::int64_t r = 0; r <= 6; ++r) {
      for (std::int64_t d = 1; d <= r + 1; ++d) CHECK(theorem2_rhs(fib, n, r, d) == theorem1_rhs(n, r, d));
    }
  }
}

TEST_CASE("closed forms match the oracle on small grids") {
  for (const auto& name : RecurrenceSpec::preset_names()) {
    const RecurrenceSpec spec = RecurrenceSpec::preset(name, Domain::rational);
    for (std::int64_t n = -3; n <= 4; ++n) {
      for (std::int64_t r = 0; r <= 4; ++r) {
        for (std::int64_t d = 1; d <= r + 1; ++d) CHECK(theorem2_rhs(spec, n, r, d) == oracle(spec, n, r, d));
      }
    }
  }
}

TEST_CASE("Prodinger and Carlitz forms") {
  CHECK(prodinger_rhs(1, 1) == Scalar(1));
  CHECK(prodinger_rhs(0, 2) == Scalar(1));
  CHECK(prodinger_rhs(0, 2) == oracle(RecurrenceSpec::fibonacci(), 0, 2, 3));
  CHECK(carlitz_rhs(0, 2) == Scalar(-2));
  CHECK(carlitz_rhs(1, 1) == Scalar(1));
  CHECK(carlitz_rhs(2, 3) == Scalar(36));
  for (std::int64_t n = -5; n <= 5; ++n) {
    CHECK(prodinger_rhs(n, 0) == Scalar(1));
    CHECK(carlitz_rhs(n, 0) == Scalar(1));
    for (std::int64_t r = 0; r <= 5; ++r) {
      CHECK(prodinger_rhs(n, r) == theorem1_rhs(n, r, r + 1));
      CHECK(carlitz_rhs(n, r) == oracle(RecurrenceSpec::fibonacci(), n, r, r + 1, EntryMode::plain_power));
    }
  }
}

TEST_CASE("Vajda identity") {
  CHECK(vajda_lhs(2, 1, 1) == Scalar(-1));
  CHECK(vajda_rhs(2, 1, 1) == Scalar(-1));
  CHECK(vajda_lhs(1, 2, 3) == Scalar(2));
  CHECK(vajda_rhs(1, 2, 3) == Scalar(2));
  for (std::int64_t n = -6; n <= 6; ++n) {
    CHECK(vajda_lhs(n, 0, 4).is_zero());
    CHECK(vajda_rhs(n, 0, 4).is_zero());
  }
}

TEST_CASE("generalized Vajda identity") {
  CHECK(generalized_vajda_lhs(RecurrenceSpec::lucas(), 1, 1, 1) == Scalar(-5));
  CHECK(generalized_vajda_rhs(RecurrenceSpec::lucas(), 1, 1, 1) == Scalar(-5));
  const RecurrenceSpec sym = RecurrenceSpec::symbolic();
  CHECK(generalized_vajda_lhs(sym, 0, 1, 1) == -delta(sym));
  CHECK(generalized_vajda_rhs(sym, 0, 1, 1) == -delta(sym));
  for (std::int64_t n = 0; n <= 3; ++n) {
    for (std::int64_t i = 0; i <= 3; ++i) {
      for (std::int64_t j = 0; j <= 3; ++j) {
        CHECK(generalized_vajda_lhs(sym, n, i, j) == generalized_vajda_rhs(sym, n, i, j));
      }
    }
  }
  CHECK(error_code([] { (void)generalized_vajda_rhs(RecurrenceSpec::jacobsthal(), -1, 1, 1); }) ==
        Errc::not_invertible);
}

TEST_CASE("vanishing convention") {
  CHECK(hankel_rank_bound_value(RecurrenceSpec::fibonacci(), 4, 0, 2).is_zero());
  CHECK(hankel_rank_bound_value(RecurrenceSpec::fibonacci(), 1, 1, 3).is_zero());
  CHECK(hankel_rank_bound_value(RecurrenceSpec::lucas(), 0, 1, 3).is_zero());
  CHECK(oracle(RecurrenceSpec::lucas(), 0, 1, 3).is_zero());
  CHECK(error_code([] { (void)hankel_rank_bound_value(RecurrenceSpec::fibonacci(), 0, 2, 3); }) ==
        Errc::invalid_argument);
}

TEST_CASE("closed-form multiplication count is linear in d") {
  const RecurrenceSpec fib = RecurrenceSpec::fibonacci();
  std::uint64_t previous = 0;
  for (std::int64_t d = 1; d <= 12; ++d) {
    OpCounter ops;
    (void)theorem2_rhs(fib, 1, 11, d, &ops);
    CHECK(ops.mul <= static_cast<std::uint64_t>(12 * d + 12));
    if (d > 1) CHECK(ops.mul >= previous / 2);
    previous = ops.mul;
  }
}
