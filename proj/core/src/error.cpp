#include "hankel/error.hpp"

namespace hankel {

std::string_view to_string(Errc code) {
  switch (code) {
    case Errc::domain_mismatch: return "domain-mismatch";
    case Errc::division_by_zero: return "division-by-zero";
    case Errc::inexact_division: return "inexact-division";
    case Errc::not_invertible: return "not-invertible";
    case Errc::negative_index: return "negative-index";
    case Errc::exponent_overflow: return "exponent-overflow";
    case Errc::dimension_guard: return "dimension-guard";
    case Errc::zero_divisor: return "zero-divisor";
    case Errc::invalid_argument: return "invalid-argument";
    case Errc::parse_error: return "parse-error";
  }
  return "unknown";
}

Error::Error(Errc code, const std::string& what)
    : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

}  // namespace hankel
