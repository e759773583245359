#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hankel/op_counter.hpp"
#include "hankel/scalar.hpp"
#include "hankel/sequence.hpp"

namespace hankel {

enum class Identity {
  theorem1,                // Fibonacci rising-power Hankel determinant vs oracle
  theorem2,                // general recurrence version vs oracle
  prodinger,               // theorem1 at d = r + 1 vs its specialized form
  carlitz,                 // plain powers, d = r + 1, vs oracle
  vajda,                   // F_n F_{n+i+j} - F_{n+i} F_{n+j}
  eq4,                     // the same for W, U
  rank_zero,               // d > r + 1 vanishes
  desnanot_jacobi_random,  // corner-minor identity on random integer matrices
};

std::string_view to_string(Identity id);
Identity parse_identity(std::string_view text);

enum class Oracle { cofactor, bareiss };

std::string_view to_string(Oracle o);
Oracle parse_oracle(std::string_view text);

// Inclusive integer range, written "lo..hi" (or a single integer).
struct IndexRange {
  std::int64_t lo = 0;
  std::int64_t hi = 0;

  bool empty() const { return lo > hi; }
  friend bool operator==(const IndexRange&, const IndexRange&) = default;
};

IndexRange parse_range(std::string_view text);
std::string to_string(const IndexRange& range);

struct GridSpec {
  Identity identity = Identity::theorem1;
  IndexRange n{0, 0};
  IndexRange r{0, 0};
  // Absent: [1, r+1] for the theorems, [r+2, r+3] for rank_zero.
  std::optional<IndexRange> d;
  IndexRange i{0, 0};
  IndexRange j{0, 0};

  // Used by theorem2, eq4 and rank_zero; the Fibonacci identities always
  // run over the integer Fibonacci recurrence.
  RecurrenceSpec spec = RecurrenceSpec::fibonacci();
  std::string spec_label = "fibonacci";

  Oracle oracle = Oracle::bareiss;

  // desnanot_jacobi_random only.
  std::uint64_t seed = 1;
  std::size_t count = 100;
  std::size_t dim = 5;
  std::int64_t entry_bound = 9;

  unsigned jobs = 1;
};

struct GridPoint {
  std::int64_t n = 0;
  std::int64_t r = 0;
  std::int64_t d = 0;
  std::int64_t i = 0;
  std::int64_t j = 0;
  std::size_t sample = 0;  // desnanot_jacobi_random
};

struct Mismatch {
  GridPoint point;
  std::string lhs;
  std::string rhs;
  std::string error;  // set when the point could not be evaluated
};

struct VerifyReport {
  GridSpec grid;
  std::uint64_t checked = 0;
  bool pass = true;
  std::vector<Mismatch> mismatches;
  std::int64_t elapsed_ms = 0;
  OpCounter ops;  // summed over all oracle determinants
};

// Replaces the closed-form side of a grid; used to check that the engine
// catches a wrong formula. Called concurrently when jobs > 1.
using RhsOverride = std::function<Scalar(const GridPoint&)>;

// Throws Error(invalid_argument) for an empty range or an invalid DJ size.
std::vector<GridPoint> enumerate_points(const GridSpec& grid);

// Evaluates both sides at every point and compares them exactly. Points that
// fail to evaluate (domain gates, out-of-range d) are reported as mismatches
// carrying an error message. Points are listed in lexicographic order
// whatever the number of worker threads.
VerifyReport run_grid(const GridSpec& grid, const RhsOverride& rhs_override = {});

// det(M) det(interior) = det(drop first row/col) det(drop last row/col)
//                      - det(drop first row, last col) det(drop last row, first col)
// on `count` matrices from Lcg(seed), entries in [-bound, bound], 3 <= dim <= 7.
VerifyReport run_random_dj(std::uint64_t seed, std::size_t count, std::size_t dim, std::int64_t bound,
                           Oracle oracle = Oracle::cofactor);

// {"identity", "checked", "pass", "mismatches": [{"point", "lhs", "rhs"}],
//  "elapsed_ms", "grid", "ops"}. Without timing, elapsed_ms is written as 0.
std::string to_json(const VerifyReport& report, bool include_timing = true);

}  // namespace hankel
