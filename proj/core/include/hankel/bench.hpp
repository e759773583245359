#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "hankel/matrix.hpp"
#include "hankel/sequence.hpp"
#include "hankel/verify.hpp"

namespace hankel {

// Alphabetical, which is also the CSV row order.
enum class BenchAlgorithm { bareiss, closed, cofactor, condensation, structured };

std::string_view to_string(BenchAlgorithm a);
BenchAlgorithm parse_bench_algorithm(std::string_view text);

struct BenchSpec {
  RecurrenceSpec spec = RecurrenceSpec::fibonacci();
  IndexRange n{1, 1};
  IndexRange r{0, 0};
  IndexRange d{1, 1};
  EntryMode mode = EntryMode::rising_power;
  std::vector<BenchAlgorithm> algorithms{BenchAlgorithm::bareiss};
  bool timing = true;  // false writes wall_ns = 0 for byte-stable output
};

struct BenchRow {
  BenchAlgorithm algorithm = BenchAlgorithm::bareiss;
  Domain domain = Domain::integer;
  std::int64_t n = 0;
  std::int64_t r = 0;
  std::int64_t d = 0;
  std::uint64_t mul_count = 0;
  std::uint64_t div_count = 0;
  bool fallback = false;
  std::int64_t wall_ns = 0;
};

// One row per (algorithm, grid point), sorted by (algorithm, n, r, d).
// "closed" evaluates theorem2_rhs for d <= r + 1 and the vanishing
// convention beyond; "structured" falls back to Bareiss on a zero divisor.
// Matrix construction is excluded from the counts and the timing.
std::vector<BenchRow> run_bench(const BenchSpec& spec);

// Header: algorithm,domain,n,r,d,mul_count,div_count,fallback,wall_ns
std::string to_csv(std::span<const BenchRow> rows);

}  // namespace hankel
