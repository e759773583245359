#include "hankel/bench.hpp"

#include <algorithm>
#include <chrono>
#include <sstream>
#include <tuple>

#include "hankel/closed_form.hpp"
#include "hankel/determinant.hpp"
#include "hankel/error.hpp"

namespace hankel {

std::string_view to_string(BenchAlgorithm a) {
  switch (a) {
    case BenchAlgorithm::bareiss: return "bareiss";
    case BenchAlgorithm::closed: return "closed";
    case BenchAlgorithm::cofactor: return "cofactor";
    case BenchAlgorithm::condensation: return "condensation";
    case BenchAlgorithm::structured: return "structured";
  }
  return "?";
}

BenchAlgorithm parse_bench_algorithm(std::string_view text) {
  for (auto a : {BenchAlgorithm::bareiss, BenchAlgorithm::closed, BenchAlgorithm::cofactor,
                 BenchAlgorithm::condensation, BenchAlgorithm::structured}) {
    if (text == to_string(a)) return a;
  }
  throw Error(Errc::parse_error, "unknown algorithm '" + std::string(text) + "'");
}

namespace {

void measure(BenchRow& row, SequenceCache& cache, const MatrixQuery& q, const SquareMatrix& m) {
  using clock = std::chrono::steady_clock;
  const auto start = clock::now();
  switch (row.algorithm) {
    case BenchAlgorithm::bareiss:
    case BenchAlgorithm::cofactor:
    case BenchAlgorithm::condensation: {
      const DetReport report = row.algorithm == BenchAlgorithm::bareiss   ? det_bareiss(m)
                               : row.algorithm == BenchAlgorithm::cofactor ? det_cofactor(m)
                                                                           : det_condensation(m);
      row.mul_count = report.mul_count;
      row.div_count = report.div_count;
      row.fallback = report.fallback_used;
      break;
    }
    case BenchAlgorithm::closed: {
      OpCounter ops;
      if (q.d <= q.r + 1) {
        (void)theorem2_rhs(cache.spec(), q.n, q.r, q.d, &ops);
      } else {
        (void)hankel_rank_bound_value(cache.spec(), q.n, q.r, q.d);
      }
      row.mul_count = ops.mul;
      row.div_count = ops.div;
      break;
    }
    case BenchAlgorithm::structured: {
      OpCounter ops;
      try {
        (void)condense_structured(cache, q.n, q.r, q.d, &ops);
      } catch (const Error& e) {
        if (e.code() != Errc::zero_divisor) throw;
        const DetReport report = det_bareiss(m);
        ops.mul += report.mul_count;
        ops.div += report.div_count;
        row.fallback = true;
      }
      row.mul_count = ops.mul;
      row.div_count = ops.div;
      break;
    }
  }
  row.wall_ns = std::chrono::duration_cast<std::chrono::nanoseconds>(clock::now() - start).count();
}

}  // namespace

std::vector<BenchRow> run_bench(const BenchSpec& spec) {
  for (const auto* range : {&spec.n, &spec.r, &spec.d}) {
    if (range->empty()) throw Error(Errc::invalid_argument, "empty bench range " + to_string(*range));
  }
  if (spec.d.lo < 1) throw Error(Errc::invalid_argument, "bench dimensions must be >= 1");
  if (spec.r.lo < 0) throw Error(Errc::invalid_argument, "bench orders must be >= 0");
  if (spec.mode == EntryMode::plain_power) {
    for (auto a : spec.algorithms) {
      if (a == BenchAlgorithm::closed || a == BenchAlgorithm::structured) {
        throw Error(Errc::invalid_argument,
                    std::string(to_string(a)) + " is only defined for rising-power matrices");
      }
    }
  }

  std::vector<BenchAlgorithm> algorithms = spec.algorithms;
  std::sort(algorithms.begin(), algorithms.end());
  algorithms.erase(std::unique(algorithms.begin(), algorithms.end()), algorithms.end());

  SequenceCache cache(spec.spec);
  std::vector<BenchRow> rows;
  for (auto algorithm : algorithms) {
    for (auto n = spec.n.lo; n <= spec.n.hi; ++n) {
      for (auto r = spec.r.lo; r <= spec.r.hi; ++r) {
        for (auto d = spec.d.lo; d <= spec.d.hi; ++d) {
          const MatrixQuery q{n, r, d, spec.mode};
          const SquareMatrix m = build(cache, q);
          BenchRow row{.algorithm = algorithm, .domain = spec.spec.domain(), .n = n, .r = r, .d = d};
          measure(row, cache, q, m);
          if (!spec.timing) row.wall_ns = 0;
          rows.push_back(row);
        }
      }
    }
  }
  return rows;
}

std::string to_csv(std::span<const BenchRow> rows) {
  std::ostringstream out;
  out << "algorithm,domain,n,r,d,mul_count,div_count,fallback,wall_ns\n";
  for (const auto& row : rows) {
    out << to_string(row.algorithm) << ',' << to_string(row.domain) << ',' << row.n << ',' << row.r << ','
        << row.d << ',' << row.mul_count << ',' << row.div_count << ',' << (row.fallback ? "true" : "false")
        << ',' << row.wall_ns << '\n';
  }
  return out.str();
}

}  // namespace hankel
