#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace hankel {

enum class Errc {
  domain_mismatch,
  division_by_zero,
  inexact_division,
  not_invertible,
  negative_index,
  exponent_overflow,
  dimension_guard,
  zero_divisor,
  invalid_argument,
  parse_error,
};

std::string_view to_string(Errc code);

// Every failure raised by the library carries one of the codes above so
// callers (the verification engine in particular) can report it per point.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what);

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace hankel
