#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace hankel {

// The four indeterminates of a symbolic recurrence: W_0 = a, W_1 = b and the
// coefficients c1, c2.
enum class Var : std::uint8_t { a = 0, b = 1, c1 = 2, c2 = 3 };
inline constexpr std::size_t kVarCount = 4;

std::string_view to_string(Var v);

class Polynomial;
Polynomial operator*(const Polynomial& x, const Polynomial& y);

// Exponent vector over (a, b, c1, c2).
//
// Packed as [degree | a | b | c1 | c2] in 12-bit fields, so comparing keys as
// unsigned integers is the graded-lex order (total degree first, then lex on
// a, b, c1, c2) and multiplying monomials is a single addition.
class Monomial {
 public:
  static constexpr unsigned kFieldBits = 12;
  static constexpr std::uint32_t kMaxDegree = (1u << kFieldBits) - 1;

  constexpr Monomial() = default;

  static Monomial from_exponents(const std::array<std::uint32_t, kVarCount>& e);
  static Monomial variable(Var v) {
    std::array<std::uint32_t, kVarCount> e{};
    e[static_cast<std::size_t>(v)] = 1;
    return from_exponents(e);
  }

  std::uint32_t exponent(Var v) const;
  std::uint32_t degree() const { return field(0); }
  std::uint64_t key() const { return key_; }
  bool is_one() const { return key_ == 0; }

  // True when every exponent of *this is <= the matching exponent of other.
  bool divides(Monomial other) const;

  friend Monomial operator*(Monomial x, Monomial y);
  friend Monomial operator/(Monomial x, Monomial y);
  friend constexpr auto operator<=>(Monomial, Monomial) = default;

 private:
  friend class Polynomial;
  friend Polynomial operator*(const Polynomial& x, const Polynomial& y);

  explicit constexpr Monomial(std::uint64_t key) : key_(key) {}
  // Field 0 is the degree, fields 1..4 are a, b, c1, c2.
  std::uint32_t field(unsigned i) const {
    return static_cast<std::uint32_t>((key_ >> (kFieldBits * (4 - i))) & kMaxDegree);
  }

  std::uint64_t key_ = 0;
};

// Sparse polynomial in Z[a, b, c1, c2]. Terms are kept sorted by ascending
// graded-lex monomial order with no zero coefficients, so equality is
// structural.
class Polynomial {
 public:
  using Term = std::pair<Monomial, mpz_class>;

  Polynomial() = default;
  explicit Polynomial(const mpz_class& constant);
  explicit Polynomial(long constant) : Polynomial(mpz_class(constant)) {}

  static Polynomial variable(Var v);
  // Accepts terms in any order, with repeats and zeros.
  static Polynomial from_terms(std::vector<Term> terms);

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].first.is_one()); }
  // Constant term value; only meaningful when is_constant().
  mpz_class constant_value() const;
  std::uint32_t degree() const;
  std::size_t size() const { return terms_.size(); }
  std::span<const Term> terms() const { return terms_; }
  const Term& leading_term() const { return terms_.back(); }

  Polynomial operator-() const;
  friend Polynomial operator+(const Polynomial& x, const Polynomial& y);
  friend Polynomial operator-(const Polynomial& x, const Polynomial& y);
  friend Polynomial operator*(const Polynomial& x, const Polynomial& y);
  friend bool operator==(const Polynomial& x, const Polynomial& y) = default;

  // Exact quotient x / y by repeated leading-term elimination. Throws
  // Error(division_by_zero) or Error(inexact_division).
  static Polynomial exact_div(const Polynomial& x, const Polynomial& y);

  // Value at an integer point, indexed by Var.
  mpz_class evaluate(const std::array<mpz_class, kVarCount>& point) const;

  // e.g. "b^2 - c1*a*b - c2*a^2": ascending graded-lex term order, with the
  // coefficient symbols c1, c2 printed before a, b inside each monomial.
  std::string to_string() const;

 private:
  std::vector<Term> terms_;
};

}  // namespace hankel
