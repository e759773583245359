#include "hankel/determinant.hpp"

#include <bit>
#include <optional>
#include <utility>
#include <vector>

#include "hankel/error.hpp"

namespace hankel {

std::string_view to_string(Algorithm a) {
  switch (a) {
    case Algorithm::cofactor: return "cofactor";
    case Algorithm::bareiss: return "bareiss";
    case Algorithm::condensation: return "condensation";
    case Algorithm::condensation_fallback: return "condensation-fallback";
    case Algorithm::closed_form: return "closed-form";
  }
  return "?";
}

namespace {

// x*y, skipping (and not counting) products with a zero factor.
Scalar counted_mul(const Scalar& x, const Scalar& y, OpCounter& ops, Domain d) {
  if (x.is_zero() || y.is_zero()) return Scalar::zero(d);
  ++ops.mul;
  return x * y;
}

Scalar counted_div(const Scalar& x, const Scalar& y, OpCounter& ops) {
  if (x.is_zero()) return x;
  ++ops.div;
  return exact_div(x, y);
}

class CofactorExpansion {
 public:
  explicit CofactorExpansion(const SquareMatrix& m)
      : m_(m), n_(m.dimension()), memo_(std::size_t{1} << n_) {}

  // Determinant of the minor on the last popcount(columns) rows and the
  // given column set.
  const Scalar& minor(std::uint32_t columns) {
    auto& slot = memo_[columns];
    if (slot) return *slot;
    const auto size = static_cast<std::size_t>(std::popcount(columns));
    if (size == 0) {
      slot = Scalar::one(m_.domain());
      return *slot;
    }
    const std::size_t row = n_ - size;
    Scalar sum = Scalar::zero(m_.domain());
    std::size_t position = 0;
    for (std::size_t col = 0; col < n_; ++col) {
      const std::uint32_t bit = std::uint32_t{1} << col;
      if ((columns & bit) == 0) continue;
      const Scalar& entry = m_(row, col);
      if (!entry.is_zero()) {
        Scalar term = counted_mul(entry, minor(columns & ~bit), ops_, m_.domain());
        if (position % 2 == 0) {
          sum += term;
        } else {
          sum -= term;
        }
      }
      ++position;
    }
    slot = std::move(sum);
    return *slot;
  }

  const OpCounter& ops() const { return ops_; }

 private:
  const SquareMatrix& m_;
  std::size_t n_;
  std::vector<std::optional<Scalar>> memo_;
  OpCounter ops_;
};

}  // namespace

DetReport det_cofactor(const SquareMatrix& m) {
  const std::size_t n = m.dimension();
  if (n > kCofactorMaxDimension) {
    throw Error(Errc::dimension_guard, "cofactor expansion limited to dimension " +
                                           std::to_string(kCofactorMaxDimension) + ", got " +
                                           std::to_string(n));
  }
  CofactorExpansion expansion(m);
  DetReport report;
  report.value = expansion.minor(static_cast<std::uint32_t>((std::size_t{1} << n) - 1));
  report.algorithm = Algorithm::cofactor;
  report.mul_count = expansion.ops().mul;
  return report;
}

DetReport det_bareiss(const SquareMatrix& m) {
  const std::size_t n = m.dimension();
  const Domain domain = m.domain();
  DetReport report;
  report.algorithm = Algorithm::bareiss;
  if (n == 0) {
    report.value = Scalar::one(domain);
    return report;
  }

  std::vector<Scalar> a;
  a.reserve(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a.push_back(m(i, j));
  }
  auto at = [&](std::size_t i, std::size_t j) -> Scalar& { return a[i * n + j]; };

  OpCounter ops;
  bool negate = false;
  Scalar previous = Scalar::one(domain);
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (at(k, k).is_zero()) {
      std::size_t pivot = k + 1;
      while (pivot < n && at(pivot, k).is_zero()) ++pivot;
      if (pivot == n) {
        report.value = Scalar::zero(domain);
        report.mul_count = ops.mul;
        report.div_count = ops.div;
        return report;
      }
      for (std::size_t j = k; j < n; ++j) std::swap(at(k, j), at(pivot, j));
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Scalar value = counted_mul(at(i, j), at(k, k), ops, domain) -
                       counted_mul(at(i, k), at(k, j), ops, domain);
        at(i, j) = k == 0 ? std::move(value) : counted_div(value, previous, ops);
      }
    }
    previous = at(k, k);
  }

  report.value = negate ? -at(n - 1, n - 1) : at(n - 1, n - 1);
  report.mul_count = ops.mul;
  report.div_count = ops.div;
  return report;
}

DetReport det_condensation(const SquareMatrix& m) {
  const std::size_t n = m.dimension();
  const Domain domain = m.domain();
  DetReport report;
  report.algorithm = Algorithm::condensation;
  if (n == 0) {
    report.value = Scalar::one(domain);
    return report;
  }

  OpCounter ops;
  SquareMatrix current = m;
  std::optional<SquareMatrix> previous;  // absent means "all ones"
  for (std::size_t size = n; size > 1; --size) {
    if (previous) {
      for (std::size_t i = 1; i < size; ++i) {
        for (std::size_t j = 1; j < size; ++j) {
          if (!(*previous)(i, j).is_zero()) continue;
          DetReport fallback = det_bareiss(m);
          fallback.algorithm = Algorithm::condensation_fallback;
          fallback.fallback_used = true;
          fallback.mul_count += ops.mul;
          fallback.div_count += ops.div;
          return fallback;
        }
      }
    }

    SquareMatrix next(size - 1, domain);
    for (std::size_t i = 0; i + 1 < size; ++i) {
      for (std::size_t j = 0; j + 1 < size; ++j) {
        Scalar minor = counted_mul(current(i, j), current(i + 1, j + 1), ops, domain) -
                       counted_mul(current(i, j + 1), current(i + 1, j), ops, domain);
        next.set(i, j, previous ? counted_div(minor, (*previous)(i + 1, j + 1), ops) : minor);
      }
    }
    previous = std::move(current);
    current = std::move(next);
  }

  report.value = current(0, 0);
  report.mul_count = ops.mul;
  report.div_count = ops.div;
  return report;
}

Scalar condense_structured(SequenceCache& cache, std::int64_t n, std::int64_t r, std::int64_t d,
                           OpCounter* counter) {
  if (d < 1) throw Error(Errc::invalid_argument, "dimension must be >= 1");
  if (r < 0) throw Error(Errc::invalid_argument, "rising power order must be >= 0");

  const Domain domain = cache.spec().domain();
  const auto levels = static_cast<std::size_t>(d);
  OpCounter ops;

  // level_k[x] holds D(n + x, r, k); level k spans x in [0, 2(d - k)].
  std::vector<Scalar> lower(2 * levels + 1, Scalar::one(domain));
  std::vector<Scalar> upper;
  upper.reserve(2 * levels - 1);
  for (std::size_t x = 0; x + 1 < 2 * levels; ++x) {
    upper.push_back(cache.rising_power(n + static_cast<std::int64_t>(x), r));
  }

  for (std::size_t k = 1; k < levels; ++k) {
    std::vector<Scalar> next;
    const std::size_t width = 2 * (levels - k) - 1;
    next.reserve(width);
    for (std::size_t x = 0; x < width; ++x) {
      Scalar numerator = counted_mul(upper[x], upper[x + 2], ops, domain) -
                         counted_mul(upper[x + 1], upper[x + 1], ops, domain);
      if (k == 1) {
        next.push_back(std::move(numerator));
        continue;
      }
      const Scalar& divisor = lower[x + 2];
      if (divisor.is_zero()) {
        if (counter != nullptr) *counter += ops;
        throw Error(Errc::zero_divisor, "D(" + std::to_string(n + static_cast<std::int64_t>(x) + 2) + ", " +
                                            std::to_string(r) + ", " + std::to_string(k - 1) + ") = 0");
      }
      next.push_back(counted_div(numerator, divisor, ops));
    }
    lower = std::move(upper);
    upper = std::move(next);
  }

  if (counter != nullptr) *counter += ops;
  return upper.front();
}

Scalar condense_structured(const RecurrenceSpec& spec, std::int64_t n, std::int64_t r, std::int64_t d,
                           OpCounter* counter) {
  SequenceCache cache(spec);
  return condense_structured(cache, n, r, d, counter);
}

}  // namespace hankel
