#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <string_view>
#include <vector>

#include "hankel/scalar.hpp"
#include "hankel/sequence.hpp"

namespace hankel {

// Dense row-major d x d matrix over a single domain.
class SquareMatrix {
 public:
  SquareMatrix() = default;
  // All-zero matrix of the given dimension in domain d.
  SquareMatrix(std::size_t dimension, Domain d);
  static SquareMatrix from_rows(std::initializer_list<std::initializer_list<long>> rows);
  static SquareMatrix from_entries(std::size_t dimension, std::vector<Scalar> row_major);
  static SquareMatrix identity(std::size_t dimension, Domain d = Domain::integer);

  std::size_t dimension() const { return dim_; }
  Domain domain() const { return domain_; }

  const Scalar& operator()(std::size_t i, std::size_t j) const { return entries_[i * dim_ + j]; }
  // Assigned values must stay in the matrix domain (integers are widened).
  void set(std::size_t i, std::size_t j, const Scalar& v);

  SquareMatrix transpose() const;
  // Contiguous square block with top-left corner (row, col).
  SquareMatrix block(std::size_t row, std::size_t col, std::size_t size) const;
  SquareMatrix with_rows_swapped(std::size_t i, std::size_t j) const;

  friend bool operator==(const SquareMatrix&, const SquareMatrix&) = default;

 private:
  std::size_t dim_ = 0;
  Domain domain_ = Domain::integer;
  std::vector<Scalar> entries_;
};

enum class EntryMode {
  rising_power,  // W_{n+i+j}^<r>
  plain_power,   // (W_{n+i+j})^r
};

std::string_view to_string(EntryMode mode);
EntryMode parse_entry_mode(std::string_view text);

struct MatrixQuery {
  std::int64_t n = 0;  // base index
  std::int64_t r = 0;  // order of the (rising) power, >= 0
  std::int64_t d = 1;  // dimension, >= 1
  EntryMode mode = EntryMode::rising_power;
};

// Hankel matrix with entry (i, j) built from W_{n+i+j}. In plain-power mode
// W^0 is 1 for every term, including a zero one.
SquareMatrix build(SequenceCache& cache, const MatrixQuery& q);
SquareMatrix build(const RecurrenceSpec& spec, const MatrixQuery& q);

}  // namespace hankel
