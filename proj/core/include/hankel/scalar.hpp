#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <string_view>
#include <variant>

#include <gmpxx.h>

#include "hankel/polynomial.hpp"

namespace hankel {

enum class Domain { integer, rational, polynomial };

std::string_view to_string(Domain d);
// Accepts "int"/"integer", "rat"/"rational", "poly"/"polynomial".
Domain parse_domain(std::string_view text);

// An exact value in one of three coefficient domains.
//
// Binary operations require both operands to share a domain, except that an
// integer is silently embedded into the rational or polynomial domain of the
// other operand. Every other combination throws Error(domain_mismatch).
// Rational payloads are always canonical (reduced, positive denominator).
class Scalar {
 public:
  Scalar() : value_(mpz_class(0)) {}
  Scalar(long v) : value_(mpz_class(v)) {}  // NOLINT: integer literals are scalars
  explicit Scalar(mpz_class v) : value_(std::move(v)) {}
  explicit Scalar(mpq_class v);
  explicit Scalar(Polynomial v) : value_(std::move(v)) {}

  static Scalar rational(const mpz_class& num, const mpz_class& den);
  static Scalar variable(Var v) { return Scalar(Polynomial::variable(v)); }
  static Scalar zero(Domain d);
  static Scalar one(Domain d);

  // Integer ("-35") or rational ("22/7") literal.
  static Scalar parse(std::string_view text);

  Domain domain() const { return static_cast<Domain>(value_.index()); }
  bool is_zero() const;
  bool is_one() const;
  // ±1, the units of Z and Z[a,b,c1,c2]; every nonzero rational.
  bool is_unit() const;

  const mpz_class& as_integer() const;
  const mpq_class& as_rational() const;
  const Polynomial& as_polynomial() const;

  // Lossless embedding into a wider domain (integer -> rational/polynomial).
  Scalar widen_to(Domain target) const;

  Scalar operator-() const;
  friend Scalar operator+(const Scalar& x, const Scalar& y);
  friend Scalar operator-(const Scalar& x, const Scalar& y);
  friend Scalar operator*(const Scalar& x, const Scalar& y);
  Scalar& operator+=(const Scalar& y) { return *this = *this + y; }
  Scalar& operator-=(const Scalar& y) { return *this = *this - y; }
  Scalar& operator*=(const Scalar& y) { return *this = *this * y; }

  // Equality after integer widening; values in incompatible domains compare
  // unequal.
  friend bool operator==(const Scalar& x, const Scalar& y);

  std::string to_string() const;

 private:
  std::variant<mpz_class, mpq_class, Polynomial> value_;
};

// The domain both operands land in, or Error(domain_mismatch).
Domain common_domain(Domain x, Domain y);

// q with q * y == x. Integer and polynomial domains reject inexact quotients.
Scalar exact_div(const Scalar& x, const Scalar& y);

// x^k for any integer k. Negative k needs a unit x (a nonzero rational, or
// ±1 in the integer and polynomial domains); 0^k with k <= 0 is rejected.
Scalar pow_signed(const Scalar& x, std::int64_t k);

// Evaluate a scalar at an integer point of (a, b, c1, c2). Integers evaluate
// to themselves; rationals are rejected.
mpz_class evaluate(const Scalar& x, const std::array<mpz_class, kVarCount>& point);

}  // namespace hankel
