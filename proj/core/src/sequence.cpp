#include "hankel/sequence.hpp"

#include "hankel/error.hpp"

namespace hankel {

RecurrenceSpec::RecurrenceSpec(Scalar a, Scalar b, Scalar c1, Scalar c2) {
  Domain d = a.domain();
  for (const Scalar* s : {&b, &c1, &c2}) d = common_domain(d, s->domain());
  a_ = a.widen_to(d);
  b_ = b.widen_to(d);
  c1_ = c1.widen_to(d);
  c2_ = c2.widen_to(d);
}

namespace {

RecurrenceSpec make(long a, long b, long c1, long c2, Domain d) {
  if (d == Domain::polynomial) {
    throw Error(Errc::invalid_argument, "presets are numeric; use RecurrenceSpec::symbolic()");
  }
  return RecurrenceSpec(Scalar(a).widen_to(d), Scalar(b).widen_to(d), Scalar(c1).widen_to(d),
                        Scalar(c2).widen_to(d));
}

}  // namespace

RecurrenceSpec RecurrenceSpec::fibonacci(Domain d) { return make(0, 1, 1, 1, d); }
RecurrenceSpec RecurrenceSpec::lucas(Domain d) { return make(2, 1, 1, 1, d); }
RecurrenceSpec RecurrenceSpec::pell(Domain d) { return make(0, 1, 2, 1, d); }
RecurrenceSpec RecurrenceSpec::jacobsthal(Domain d) { return make(0, 1, 1, 2, d); }

const std::vector<std::string>& RecurrenceSpec::preset_names() {
  static const std::vector<std::string> names{"fibonacci", "lucas", "pell", "jacobsthal"};
  return names;
}

RecurrenceSpec RecurrenceSpec::preset(std::string_view name, Domain d) {
  if (name == "fibonacci") return fibonacci(d);
  if (name == "lucas") return lucas(d);
  if (name == "pell") return pell(d);
  if (name == "jacobsthal") return jacobsthal(d);
  throw Error(Errc::invalid_argument, "unknown preset '" + std::string(name) + "'");
}

RecurrenceSpec RecurrenceSpec::symbolic() {
  return RecurrenceSpec(Scalar::variable(Var::a), Scalar::variable(Var::b), Scalar::variable(Var::c1),
                        Scalar::variable(Var::c2));
}

RecurrenceSpec RecurrenceSpec::companion() const {
  return RecurrenceSpec(Scalar::zero(domain()), Scalar::one(domain()), c1_, c2_);
}

Scalar delta(const RecurrenceSpec& spec) {
  const Scalar& a = spec.a();
  const Scalar& b = spec.b();
  return b * b - spec.c1() * a * b - spec.c2() * a * a;
}

SequenceCache::SequenceCache(RecurrenceSpec spec) : spec_(std::move(spec)) {
  forward_.push_back(spec_.a());
  forward_.push_back(spec_.b());
}

const Scalar& SequenceCache::term(std::int64_t k) {
  if (k >= 0) {
    const auto index = static_cast<std::size_t>(k);
    while (forward_.size() <= index) {
      const std::size_t n = forward_.size();
      forward_.push_back(spec_.c1() * forward_[n - 1] + spec_.c2() * forward_[n - 2]);
    }
    return forward_[index];
  }

  const auto index = static_cast<std::size_t>(-(k + 1));  // W_{-1} at 0
  if (backward_.size() <= index && spec_.c2().is_zero()) {
    throw Error(Errc::negative_index, "W_" + std::to_string(k) + " is undefined when c2 = 0");
  }
  while (backward_.size() <= index) {
    // Next is W_j with j = -(size + 1); it needs W_{j+1} and W_{j+2}.
    const std::int64_t j = -static_cast<std::int64_t>(backward_.size()) - 1;
    const Scalar& next1 = term(j + 1);
    const Scalar& next2 = term(j + 2);
    try {
      backward_.push_back(exact_div(next2 - spec_.c1() * next1, spec_.c2()));
    } catch (const Error& e) {
      if (e.code() != Errc::inexact_division) throw;
      throw Error(Errc::inexact_division, "W_" + std::to_string(j) + " is not integral in the " +
                                              std::string(to_string(spec_.domain())) + " domain");
    }
  }
  return backward_[index];
}

Scalar SequenceCache::rising_power(std::int64_t m, std::int64_t r, std::uint64_t* mul_count) {
  if (r < 0) {
    throw Error(Errc::invalid_argument, "rising power order must be >= 0, got " + std::to_string(r));
  }
  if (r == 0) return Scalar::one(spec_.domain());
  Scalar product = term(m);
  for (std::int64_t t = 1; t < r; ++t) {
    product *= term(m + t);
  }
  if (mul_count != nullptr) *mul_count += static_cast<std::uint64_t>(r - 1);
  return product;
}

}  // namespace hankel
