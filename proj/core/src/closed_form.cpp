#include "hankel/closed_form.hpp"

#include <optional>
#include <string>

#include "hankel/error.hpp"

namespace hankel {

namespace {

void require_theorem_range(std::int64_t r, std::int64_t d) {
  if (r < 0) throw Error(Errc::invalid_argument, "r must be >= 0, got " + std::to_string(r));
  if (d < 1 || d > r + 1) {
    throw Error(Errc::invalid_argument,
                "d must lie in [1, r+1] = [1, " + std::to_string(r + 1) + "], got " + std::to_string(d));
  }
}

std::int64_t small_binomial(std::int64_t n, std::int64_t k) {
  const mpz_class c = binomial(n, k);
  if (!c.fits_slong_p()) throw Error(Errc::exponent_overflow, "binomial coefficient too large");
  return c.get_si();
}

// Running product that counts every multiplication after the first factor.
class Product {
 public:
  Product(Domain domain, OpCounter* ops) : domain_(domain), ops_(ops) {}

  void times(const Scalar& x) {
    if (!value_) {
      value_ = x;
      return;
    }
    *value_ *= x;
    if (ops_ != nullptr) ++ops_->mul;
  }

  // x^k by square-and-multiply; k == 0 contributes nothing.
  void times_power(const Scalar& x, std::int64_t k) {
    if (k == 0) return;
    Scalar base = x;
    if (k < 0) {
      if (!x.is_unit()) {
        throw Error(Errc::not_invertible, x.to_string() + "^" + std::to_string(k) + " is not defined in the " +
                                              std::string(to_string(x.domain())) + " domain");
      }
      base = exact_div(Scalar::one(domain_), x);
      if (ops_ != nullptr) ++ops_->div;
    }
    auto e = static_cast<std::uint64_t>(k < 0 ? -k : k);
    while (true) {
      if (e & 1) times(base);
      e >>= 1;
      if (e == 0) break;
      base *= base;
      if (ops_ != nullptr) ++ops_->mul;
    }
  }

  Scalar value() const { return value_ ? *value_ : Scalar::one(domain_); }

 private:
  Domain domain_;
  OpCounter* ops_;
  std::optional<Scalar> value_;
};

}  // namespace

mpz_class binomial(std::int64_t n, std::int64_t k) {
  if (n < 0) throw Error(Errc::invalid_argument, "binomial requires n >= 0");
  if (k < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  mpz_class c = 1;
  for (std::int64_t t = 1; t <= k; ++t) {
    c *= n - k + t;
    c /= t;  // exact: c is C(n-k+t, t) after this step
  }
  return c;
}

SignExponent hankel_sign(std::int64_t n, std::int64_t d) {
  return {n * small_binomial(d, 2) + small_binomial(d + 1, 3)};
}

Scalar theorem1_rhs(std::int64_t n, std::int64_t r, std::int64_t d) {
  require_theorem_range(r, d);
  SequenceCache fib(RecurrenceSpec::fibonacci());

  Scalar value = 1L;
  for (std::int64_t i = 1; i <= d - 1; ++i) {
    value *= pow_signed(fib.term(i) * fib.term(r + 1 - i), d - i);
  }
  for (std::int64_t i = d - 1; i <= 2 * (d - 1); ++i) {
    value *= fib.rising_power(n + i, r + 1 - d);
  }
  return hankel_sign(n, d).apply(std::move(value));
}

Scalar theorem2_rhs(const RecurrenceSpec& spec, std::int64_t n, std::int64_t r, std::int64_t d,
                    OpCounter* counter) {
  require_theorem_range(r, d);
  const Domain domain = spec.domain();
  SequenceCache w(spec);
  SequenceCache u(spec.companion());

  Product product(domain, counter);

  // prod_{i=1}^{d-1} (U_i U_{r+1-i})^{d-i} = prod_{k=1}^{d-1} prod_{i=1}^{k} U_i U_{r+1-i}
  Product prefix(domain, counter);
  for (std::int64_t k = 1; k <= d - 1; ++k) {
    prefix.times(u.term(k));
    prefix.times(u.term(r + 1 - k));
    product.times(prefix.value());
  }

  for (std::int64_t i = d - 1; i <= 2 * (d - 1); ++i) {
    std::uint64_t muls = 0;
    const Scalar factor = w.rising_power(n + i, r + 1 - d, &muls);
    if (counter != nullptr) counter->mul += muls;
    if (r + 1 - d > 0) product.times(factor);
  }

  const std::int64_t pairs = small_binomial(d, 2);
  product.times_power(delta(spec), pairs);
  product.times_power(spec.c2(), (n + d - 2) * pairs);

  return hankel_sign(n, d).apply(product.value());
}

Scalar prodinger_rhs(std::int64_t n, std::int64_t r) {
  if (r < 0) throw Error(Errc::invalid_argument, "r must be >= 0, got " + std::to_string(r));
  SequenceCache fib(RecurrenceSpec::fibonacci());
  const SignExponent sign{n * small_binomial(r + 1, 2) + small_binomial(r + 2, 3)};
  return sign.apply(pow_signed(fib.rising_power(1, r), r + 1));
}

Scalar carlitz_rhs(std::int64_t n, std::int64_t r) {
  if (r < 0) throw Error(Errc::invalid_argument, "r must be >= 0, got " + std::to_string(r));
  SequenceCache fib(RecurrenceSpec::fibonacci());

  Scalar powers = 1L;
  for (std::int64_t i = 1; i <= r; ++i) {
    powers *= pow_signed(fib.term(i), r + 1 - i);
  }
  mpz_class binomials = 1;
  for (std::int64_t i = 0; i <= r; ++i) binomials *= binomial(r, i);

  const SignExponent sign{(n + 1) * small_binomial(r + 1, 2)};
  return sign.apply(powers * powers * Scalar(binomials));
}

Scalar vajda_lhs(std::int64_t n, std::int64_t i, std::int64_t j) {
  return generalized_vajda_lhs(RecurrenceSpec::fibonacci(), n, i, j);
}

Scalar vajda_rhs(std::int64_t n, std::int64_t i, std::int64_t j) {
  SequenceCache fib(RecurrenceSpec::fibonacci());
  return SignExponent{n + 1}.apply(fib.term(i) * fib.term(j));
}

Scalar generalized_vajda_lhs(const RecurrenceSpec& spec, std::int64_t n, std::int64_t i, std::int64_t j) {
  SequenceCache w(spec);
  return w.term(n) * w.term(n + i + j) - w.term(n + i) * w.term(n + j);
}

Scalar generalized_vajda_rhs(const RecurrenceSpec& spec, std::int64_t n, std::int64_t i, std::int64_t j) {
  SequenceCache u(spec.companion());
  Product product(spec.domain(), nullptr);
  product.times_power(-spec.c2(), n);
  product.times(delta(spec));
  product.times(u.term(i));
  product.times(u.term(j));
  return -product.value();
}

Scalar hankel_rank_bound_value(const RecurrenceSpec& spec, std::int64_t n, std::int64_t r, std::int64_t d) {
  (void)n;
  if (r < 0) throw Error(Errc::invalid_argument, "r must be >= 0, got " + std::to_string(r));
  if (d <= r + 1) {
    throw Error(Errc::invalid_argument, "rank bound applies only for d > r+1; got d = " + std::to_string(d) +
                                            ", r = " + std::to_string(r));
  }
  return Scalar::zero(spec.domain());
}

}  // namespace hankel
