#include "hankel/matrix.hpp"

#include <utility>

#include "hankel/error.hpp"

namespace hankel {

SquareMatrix::SquareMatrix(std::size_t dimension, Domain d)
    : dim_(dimension), domain_(d), entries_(dimension * dimension, Scalar::zero(d)) {}

SquareMatrix SquareMatrix::from_rows(std::initializer_list<std::initializer_list<long>> rows) {
  SquareMatrix m(rows.size(), Domain::integer);
  std::size_t i = 0;
  for (const auto& row : rows) {
    if (row.size() != rows.size()) throw Error(Errc::invalid_argument, "rows must form a square matrix");
    std::size_t j = 0;
    for (long v : row) m.entries_[i * m.dim_ + j++] = Scalar(v);
    ++i;
  }
  return m;
}

SquareMatrix SquareMatrix::from_entries(std::size_t dimension, std::vector<Scalar> row_major) {
  if (row_major.size() != dimension * dimension) {
    throw Error(Errc::invalid_argument, "expected " + std::to_string(dimension * dimension) + " entries");
  }
  Domain d = Domain::integer;
  for (const auto& s : row_major) d = common_domain(d, s.domain());
  SquareMatrix m;
  m.dim_ = dimension;
  m.domain_ = d;
  m.entries_.reserve(row_major.size());
  for (auto& s : row_major) m.entries_.push_back(s.widen_to(d));
  return m;
}

SquareMatrix SquareMatrix::identity(std::size_t dimension, Domain d) {
  SquareMatrix m(dimension, d);
  for (std::size_t i = 0; i < dimension; ++i) m.entries_[i * dimension + i] = Scalar::one(d);
  return m;
}

void SquareMatrix::set(std::size_t i, std::size_t j, const Scalar& v) {
  entries_[i * dim_ + j] = v.widen_to(domain_);
}

SquareMatrix SquareMatrix::transpose() const {
  SquareMatrix t = *this;
  for (std::size_t i = 0; i < dim_; ++i) {
    for (std::size_t j = 0; j < dim_; ++j) t.entries_[j * dim_ + i] = entries_[i * dim_ + j];
  }
  return t;
}

SquareMatrix SquareMatrix::block(std::size_t row, std::size_t col, std::size_t size) const {
  if (row + size > dim_ || col + size > dim_) throw Error(Errc::invalid_argument, "block out of range");
  SquareMatrix b(size, domain_);
  for (std::size_t i = 0; i < size; ++i) {
    for (std::size_t j = 0; j < size; ++j) b.entries_[i * size + j] = entries_[(row + i) * dim_ + col + j];
  }
  return b;
}

SquareMatrix SquareMatrix::with_rows_swapped(std::size_t i, std::size_t j) const {
  SquareMatrix s = *this;
  for (std::size_t c = 0; c < dim_; ++c) std::swap(s.entries_[i * dim_ + c], s.entries_[j * dim_ + c]);
  return s;
}

std::string_view to_string(EntryMode mode) {
  return mode == EntryMode::rising_power ? "rising" : "power";
}

EntryMode parse_entry_mode(std::string_view text) {
  if (text == "rising" || text == "rising-power") return EntryMode::rising_power;
  if (text == "power" || text == "plain-power") return EntryMode::plain_power;
  throw Error(Errc::parse_error, "unknown entry mode '" + std::string(text) + "'");
}

SquareMatrix build(SequenceCache& cache, const MatrixQuery& q) {
  if (q.d < 1) throw Error(Errc::invalid_argument, "matrix dimension must be >= 1");
  if (q.r < 0) throw Error(Errc::invalid_argument, "power order must be >= 0");

  const Domain domain = cache.spec().domain();
  const auto d = static_cast<std::size_t>(q.d);

  // One value per anti-diagonal.
  std::vector<Scalar> diagonal;
  diagonal.reserve(2 * d - 1);
  for (std::size_t s = 0; s + 1 < 2 * d; ++s) {
    const std::int64_t k = q.n + static_cast<std::int64_t>(s);
    if (q.mode == EntryMode::rising_power) {
      diagonal.push_back(cache.rising_power(k, q.r));
    } else {
      Scalar v = Scalar::one(domain);
      for (std::int64_t t = 0; t < q.r; ++t) v *= cache.term(k);
      diagonal.push_back(std::move(v));
    }
  }

  std::vector<Scalar> entries;
  entries.reserve(d * d);
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) entries.push_back(diagonal[i + j]);
  }
  return SquareMatrix::from_entries(d, std::move(entries));
}

SquareMatrix build(const RecurrenceSpec& spec, const MatrixQuery& q) {
  SequenceCache cache(spec);
  return build(cache, q);
}

}  // namespace hankel
