#include "hankel/scalar.hpp"

#include <charconv>

#include "hankel/error.hpp"

namespace hankel {

std::string_view to_string(Domain d) {
  switch (d) {
    case Domain::integer: return "int";
    case Domain::rational: return "rat";
    case Domain::polynomial: return "poly";
  }
  return "?";
}

Domain parse_domain(std::string_view text) {
  if (text == "int" || text == "integer") return Domain::integer;
  if (text == "rat" || text == "rational") return Domain::rational;
  if (text == "poly" || text == "polynomial") return Domain::polynomial;
  throw Error(Errc::parse_error, "unknown domain '" + std::string(text) + "'");
}

Scalar::Scalar(mpq_class v) : value_(std::move(v)) {
  std::get<mpq_class>(value_).canonicalize();
}

Scalar Scalar::rational(const mpz_class& num, const mpz_class& den) {
  if (den == 0) throw Error(Errc::division_by_zero, "rational with zero denominator");
  return Scalar(mpq_class(num, den));
}

Scalar Scalar::zero(Domain d) { return Scalar(0L).widen_to(d); }
Scalar Scalar::one(Domain d) { return Scalar(1L).widen_to(d); }

namespace {

bool is_integer_literal(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  if (s.empty()) return false;
  for (char c : s) {
    if (c < '0' || c > '9') return false;
  }
  return true;
}

mpz_class parse_integer(std::string_view s) {
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  return mpz_class(std::string(s), 10);
}

}  // namespace

Scalar Scalar::parse(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    if (!is_integer_literal(text)) {
      throw Error(Errc::parse_error, "not an integer literal: '" + std::string(text) + "'");
    }
    return Scalar(parse_integer(text));
  }
  const auto num = text.substr(0, slash);
  const auto den = text.substr(slash + 1);
  if (!is_integer_literal(num) || !is_integer_literal(den) || den.front() == '-' || den.front() == '+') {
    throw Error(Errc::parse_error, "not a rational literal: '" + std::string(text) + "'");
  }
  return rational(parse_integer(num), parse_integer(den));
}

bool Scalar::is_zero() const {
  switch (domain()) {
    case Domain::integer: return std::get<mpz_class>(value_) == 0;
    case Domain::rational: return std::get<mpq_class>(value_) == 0;
    case Domain::polynomial: return std::get<Polynomial>(value_).is_zero();
  }
  return false;
}

bool Scalar::is_one() const {
  switch (domain()) {
    case Domain::integer: return std::get<mpz_class>(value_) == 1;
    case Domain::rational: return std::get<mpq_class>(value_) == 1;
    case Domain::polynomial: {
      const auto& p = std::get<Polynomial>(value_);
      return !p.is_zero() && p.is_constant() && p.constant_value() == 1;
    }
  }
  return false;
}

bool Scalar::is_unit() const {
  switch (domain()) {
    case Domain::integer: return abs(std::get<mpz_class>(value_)) == 1;
    case Domain::rational: return std::get<mpq_class>(value_) != 0;
    case Domain::polynomial: {
      const auto& p = std::get<Polynomial>(value_);
      return !p.is_zero() && p.is_constant() && abs(p.constant_value()) == 1;
    }
  }
  return false;
}

const mpz_class& Scalar::as_integer() const {
  if (domain() != Domain::integer) throw Error(Errc::domain_mismatch, "scalar is not an integer");
  return std::get<mpz_class>(value_);
}

const mpq_class& Scalar::as_rational() const {
  if (domain() != Domain::rational) throw Error(Errc::domain_mismatch, "scalar is not a rational");
  return std::get<mpq_class>(value_);
}

const Polynomial& Scalar::as_polynomial() const {
  if (domain() != Domain::polynomial) throw Error(Errc::domain_mismatch, "scalar is not a polynomial");
  return std::get<Polynomial>(value_);
}

Domain common_domain(Domain x, Domain y) {
  if (x == y) return x;
  if (x == Domain::integer) return y;
  if (y == Domain::integer) return x;
  throw Error(Errc::domain_mismatch,
              "cannot combine " + std::string(to_string(x)) + " and " + std::string(to_string(y)));
}

Scalar Scalar::widen_to(Domain target) const {
  const Domain from = domain();
  if (from == target) return *this;
  if (from != Domain::integer) {
    throw Error(Errc::domain_mismatch,
                "cannot convert " + std::string(hankel::to_string(from)) + " to " +
                    std::string(hankel::to_string(target)));
  }
  const auto& z = std::get<mpz_class>(value_);
  if (target == Domain::rational) return Scalar(mpq_class(z));
  return Scalar(Polynomial(z));
}

namespace {

template <typename Op>
Scalar apply_same(const Scalar& x, const Scalar& y, Op op) {
  switch (x.domain()) {
    case Domain::integer: return Scalar(mpz_class(op(x.as_integer(), y.as_integer())));
    case Domain::rational: return Scalar(mpq_class(op(x.as_rational(), y.as_rational())));
    case Domain::polynomial: return Scalar(op(x.as_polynomial(), y.as_polynomial()));
  }
  return {};
}

// Applies op to the payloads after bringing both operands to their common
// domain.
template <typename Op>
Scalar binary(const Scalar& x, const Scalar& y, Op op) {
  if (x.domain() == y.domain()) return apply_same(x, y, op);
  const Domain d = common_domain(x.domain(), y.domain());
  return apply_same(x.widen_to(d), y.widen_to(d), op);
}

}  // namespace

Scalar Scalar::operator-() const {
  switch (domain()) {
    case Domain::integer: return Scalar(mpz_class(-std::get<mpz_class>(value_)));
    case Domain::rational: return Scalar(mpq_class(-std::get<mpq_class>(value_)));
    case Domain::polynomial: return Scalar(-std::get<Polynomial>(value_));
  }
  return {};
}

Scalar operator+(const Scalar& x, const Scalar& y) {
  return binary(x, y, [](const auto& l, const auto& r) { return l + r; });
}

Scalar operator-(const Scalar& x, const Scalar& y) {
  return binary(x, y, [](const auto& l, const auto& r) { return l - r; });
}

Scalar operator*(const Scalar& x, const Scalar& y) {
  return binary(x, y, [](const auto& l, const auto& r) { return l * r; });
}

bool operator==(const Scalar& x, const Scalar& y) {
  if (x.domain() == y.domain()) return x.value_ == y.value_;
  if (x.domain() != Domain::integer && y.domain() != Domain::integer) return false;
  const Domain d = common_domain(x.domain(), y.domain());
  return x.widen_to(d).value_ == y.widen_to(d).value_;
}

std::string Scalar::to_string() const {
  switch (domain()) {
    case Domain::integer: return std::get<mpz_class>(value_).get_str();
    case Domain::rational: return std::get<mpq_class>(value_).get_str();
    case Domain::polynomial: return std::get<Polynomial>(value_).to_string();
  }
  return {};
}

Scalar exact_div(const Scalar& x, const Scalar& y) {
  const Domain d = common_domain(x.domain(), y.domain());
  if (y.is_zero()) throw Error(Errc::division_by_zero, "division of " + x.to_string() + " by zero");
  const Scalar wx = x.widen_to(d);
  const Scalar wy = y.widen_to(d);
  switch (d) {
    case Domain::integer: {
      const auto& n = wx.as_integer();
      const auto& m = wy.as_integer();
      if (!mpz_divisible_p(n.get_mpz_t(), m.get_mpz_t())) {
        throw Error(Errc::inexact_division, n.get_str() + " / " + m.get_str());
      }
      mpz_class q;
      mpz_divexact(q.get_mpz_t(), n.get_mpz_t(), m.get_mpz_t());
      return Scalar(std::move(q));
    }
    case Domain::rational: return Scalar(mpq_class(wx.as_rational() / wy.as_rational()));
    case Domain::polynomial: return Scalar(Polynomial::exact_div(wx.as_polynomial(), wy.as_polynomial()));
  }
  return {};
}

Scalar pow_signed(const Scalar& x, std::int64_t k) {
  if (k <= 0 && x.is_zero()) {
    throw Error(Errc::division_by_zero, "0^" + std::to_string(k) + " is undefined");
  }
  if (k < 0 && !x.is_unit()) {
    throw Error(Errc::not_invertible, x.to_string() + " has no inverse in the " +
                                          std::string(to_string(x.domain())) + " domain");
  }
  const Domain d = x.domain();
  Scalar base = k < 0 ? exact_div(Scalar::one(d), x) : x;
  std::uint64_t e = k < 0 ? static_cast<std::uint64_t>(-(k + 1)) + 1 : static_cast<std::uint64_t>(k);

  switch (d) {
    case Domain::integer: {
      mpz_class r;
      mpz_pow_ui(r.get_mpz_t(), base.as_integer().get_mpz_t(), e);
      return Scalar(std::move(r));
    }
    case Domain::rational: {
      mpz_class num, den;
      mpz_pow_ui(num.get_mpz_t(), base.as_rational().get_num_mpz_t(), e);
      mpz_pow_ui(den.get_mpz_t(), base.as_rational().get_den_mpz_t(), e);
      return Scalar::rational(num, den);
    }
    case Domain::polynomial: {
      Scalar result = Scalar::one(d);
      while (e > 0) {
        if (e & 1) result *= base;
        e >>= 1;
        if (e > 0) base *= base;
      }
      return result;
    }
  }
  return {};
}

mpz_class evaluate(const Scalar& x, const std::array<mpz_class, kVarCount>& point) {
  switch (x.domain()) {
    case Domain::integer: return x.as_integer();
    case Domain::polynomial: return x.as_polynomial().evaluate(point);
    case Domain::rational: break;
  }
  throw Error(Errc::domain_mismatch, "cannot evaluate a rational at an integer point");
}

}  // namespace hankel
