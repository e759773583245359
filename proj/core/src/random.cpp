#include "hankel/random.hpp"

#include <vector>

#include "hankel/error.hpp"

namespace hankel {

std::int64_t Lcg::uniform(std::int64_t lo, std::int64_t hi) {
  if (lo > hi || static_cast<std::uint64_t>(hi - lo) >= (std::uint64_t{1} << 32)) {
    throw Error(Errc::invalid_argument, "invalid uniform range");
  }
  const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<std::int64_t>(next() % span);
}

SquareMatrix random_integer_matrix(Lcg& rng, std::size_t dim, std::int64_t bound) {
  std::vector<Scalar> entries;
  entries.reserve(dim * dim);
  for (std::size_t k = 0; k < dim * dim; ++k) entries.emplace_back(rng.uniform(-bound, bound));
  return SquareMatrix::from_entries(dim, std::move(entries));
}

RecurrenceSpec random_rational_spec(Lcg& rng) {
  auto draw = [&rng] {
    const auto num = rng.uniform(-5, 5);
    const auto den = rng.uniform(1, 4);
    return Scalar::rational(num, den);
  };
  Scalar a = draw();
  Scalar b = draw();
  Scalar c1 = draw();
  Scalar c2 = draw();
  while (c2.is_zero()) c2 = draw();
  return RecurrenceSpec(a, b, c1, c2);
}

}  // namespace hankel
