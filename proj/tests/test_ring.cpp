#include <doctest.h>

#include "hankel/error.hpp"
#include "hankel/polynomial.hpp"
#include "hankel/scalar.hpp"
#include "test_support.hpp"

using namespace hankel;
using hankel::testing::error_code;
using hankel::testing::Generator;

namespace {

const Scalar a = Scalar::variable(Var::a);
const Scalar b = Scalar::variable(Var::b);
const Scalar c1 = Scalar::variable(Var::c1);
const Scalar c2 = Scalar::variable(Var::c2);

}  // namespace

TEST_CASE("integer and rational arithmetic") {
  CHECK(Scalar(2) + Scalar(3) == Scalar(5));
  const Scalar product = Scalar::rational(1, 2) * Scalar::rational(2, 3);
  CHECK(product.to_string() == "1/3");
  CHECK(product.domain() == Domain::rational);
  CHECK(Scalar::rational(4, -6).to_string() == "-2/3");
  CHECK(Scalar::rational(4, 2).to_string() == "2");
  CHECK((Scalar(7) - Scalar(10)).to_string() == "-3");
}

TEST_CASE("symbolic expansion has canonical text") {
  const Scalar p = b * b - c1 * (a * b);
  CHECK(p.to_string() == "b^2 - c1*a*b");
  CHECK((b * b - c1 * a * b - c2 * a * a).to_string() == "b^2 - c1*a*b - c2*a^2");
  CHECK((-(a * a) + Scalar(3) * c1 - Scalar(1)).to_string() == "-1 + 3*c1 - a^2");
  CHECK(Scalar::zero(Domain::polynomial).to_string() == "0");
}

TEST_CASE("zero coefficients are dropped") {
  const Scalar p = (a + b) - b;
  CHECK(p == a);
  CHECK(p.as_polynomial().size() == 1);
  CHECK(((a - a) * c1).is_zero());
  CHECK(Polynomial::from_terms({{Monomial::variable(Var::a), 2}, {Monomial::variable(Var::a), -2}}).is_zero());
}

TEST_CASE("integer widening and domain mismatch") {
  CHECK((Scalar(1) + Scalar::rational(1, 2)).to_string() == "3/2");
  CHECK((Scalar(2) * a).to_string() == "2*a");
  CHECK(Scalar(2) == Scalar::rational(4, 2));
  CHECK_FALSE(Scalar::rational(1, 2) == a);
  CHECK(error_code([] { (void)(Scalar::rational(1, 2) + a); }) == Errc::domain_mismatch);
  CHECK(error_code([] { (void)Scalar::rational(1, 2).widen_to(Domain::integer); }) == Errc::domain_mismatch);
}

TEST_CASE("exact division") {
  CHECK(exact_div(Scalar(6), Scalar(3)) == Scalar(2));
  const Scalar q = exact_div(b * b - c2 * a * b, b);
  CHECK(q.to_string() == "b - c2*a");
  CHECK(error_code([] { (void)exact_div(Scalar(7), Scalar(2)); }) == Errc::inexact_division);
  CHECK(error_code([] { (void)exact_div(Scalar(7), Scalar(0)); }) == Errc::division_by_zero);
  CHECK(error_code([] { (void)exact_div(a * b + Scalar(1), b); }) == Errc::inexact_division);
  CHECK(error_code([] { (void)exact_div(Scalar(2) * a, Scalar(4)); }) == Errc::inexact_division);
  CHECK(exact_div(Scalar(7), Scalar::rational(2, 1)).to_string() == "7/2");
  CHECK(exact_div(Scalar::zero(Domain::polynomial), a).is_zero());
}

TEST_CASE("signed powers") {
  CHECK(pow_signed(Scalar(2), 10) == Scalar(1024));
  CHECK(pow_signed(Scalar::rational(2, 1), -2).to_string() == "1/4");
  CHECK(error_code([] { (void)pow_signed(c2, -1); }) == Errc::not_invertible);
  CHECK(error_code([] { (void)pow_signed(Scalar(2), -1); }) == Errc::not_invertible);
  CHECK(error_code([] { (void)pow_signed(Scalar(0), 0); }) == Errc::division_by_zero);
  CHECK(error_code([] { (void)pow_signed(Scalar::rational(0, 1), -3); }) == Errc::division_by_zero);
  CHECK(pow_signed(Scalar(-1), -3) == Scalar(-1));
  CHECK(pow_signed(Scalar(5), 0) == Scalar(1));
  CHECK(pow_signed(a + b, 3) == (a + b) * (a + b) * (a + b));
  CHECK(pow_signed(Scalar::rational(-2, 3), -3).to_string() == "-27/8");
}

TEST_CASE("literal parsing") {
  CHECK(Scalar::parse("-35").to_string() == "-35");
  CHECK(Scalar::parse("22/7").to_string() == "22/7");
  CHECK(Scalar::parse("-4/6").to_string() == "-2/3");
  CHECK(Scalar::parse("+3") == Scalar(3));
  CHECK(Scalar::parse("123456789012345678901234567890").to_string() == "123456789012345678901234567890");
  CHECK(error_code([] { (void)Scalar::parse("1/0"); }) == Errc::division_by_zero);
  for (const char* bad : {"", "abc", "1.5", "1/", "/2", "1/-2", "--1"}) {
    CHECK(error_code([bad] { (void)Scalar::parse(bad); }) == Errc::parse_error);
  }
}

TEST_CASE("monomial packing") {
  const Monomial m = Monomial::from_exponents({1, 2, 0, 3});
  CHECK(m.degree() == 6);
  CHECK(m.exponent(Var::b) == 2);
  CHECK(m.exponent(Var::c2) == 3);
  CHECK(Monomial::variable(Var::a).divides(m));
  CHECK_FALSE(Monomial::variable(Var::c1).divides(m));
  // graded first, then lex on (a, b, c1, c2)
  CHECK(Monomial::from_exponents({0, 2, 0, 0}) < Monomial::from_exponents({1, 1, 1, 0}));
  CHECK(Monomial::from_exponents({1, 1, 1, 0}) < Monomial::from_exponents({2, 0, 0, 1}));
  CHECK(error_code([] { (void)Monomial::from_exponents({4000, 100, 0, 0}); }) == Errc::exponent_overflow);
  const Scalar big = pow_signed(a, 3000);
  CHECK(error_code([&] { (void)(big * big); }) == Errc::exponent_overflow);
}

TEST_CASE("ring axioms on random triples") {
  Generator gen(20240611);
  for (Domain d : {Domain::integer, Domain::rational, Domain::polynomial}) {
    CAPTURE(to_string(d));
    for (int trial = 0; trial < 200; ++trial) {
      const Scalar x = gen.of(d), y = gen.of(d), z = gen.of(d);
      CHECK((x + y) + z == x + (y + z));
      CHECK((x * y) * z == x * (y * z));
      CHECK(x * (y + z) == x * y + x * z);
      CHECK(x + y == y + x);
      CHECK(x * y == y * x);
      CHECK(x - x == Scalar::zero(d));
      CHECK(x * Scalar::one(d) == x);
    }
  }
}

TEST_CASE("exact_div inverts multiplication") {
  Generator gen(7);
  for (Domain d : {Domain::integer, Domain::rational, Domain::polynomial}) {
    CAPTURE(to_string(d));
    for (int trial = 0; trial < 200; ++trial) {
      const Scalar x = gen.of(d);
      Scalar y = gen.of(d);
      while (y.is_zero()) y = gen.of(d);
      CHECK(exact_div(x * y, y) == x);
    }
  }
}

TEST_CASE("rational results are canonical") {
  Generator gen(99);
  for (int trial = 0; trial < 200; ++trial) {
    const Scalar x = gen.rational() * gen.rational() + gen.rational();
    const mpq_class& q = x.as_rational();
    CHECK(q.get_den() > 0);
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    CHECK(g == 1);
    CHECK(Scalar::parse(x.to_string()) == x);
  }
}

TEST_CASE("polynomial evaluation is a ring homomorphism") {
  Generator gen(31337);
  for (int trial = 0; trial < 200; ++trial) {
    const Scalar p = gen.polynomial(6, 3);
    const Scalar q = gen.polynomial(6, 3);
    std::array<mpz_class, kVarCount> point;
    for (auto& v : point) v = static_cast<long>(gen.uniform(-7, 7));
    CHECK(evaluate(p * q, point) == evaluate(p, point) * evaluate(q, point));
    CHECK(evaluate(p + q, point) == evaluate(p, point) + evaluate(q, point));
    CHECK(evaluate(-p, point) == -evaluate(p, point));
  }
  CHECK(evaluate(Scalar(5), {1, 2, 3, 4}) == 5);
  CHECK(error_code([] { (void)evaluate(Scalar::rational(1, 2), {0, 0, 0, 0}); }) == Errc::domain_mismatch);
}
