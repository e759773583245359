#pragma once

#include <cstdint>

namespace hankel {

// Scalar multiplications and divisions performed by an algorithm. Products
// with a zero operand are skipped and not counted.
struct OpCounter {
  std::uint64_t mul = 0;
  std::uint64_t div = 0;

  OpCounter& operator+=(const OpCounter& o) {
    mul += o.mul;
    div += o.div;
    return *this;
  }
  friend bool operator==(const OpCounter&, const OpCounter&) = default;
};

}  // namespace hankel
