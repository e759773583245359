#include "hankel/verify.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <chrono>
#include <thread>

#include <json.hpp>

#include "hankel/closed_form.hpp"
#include "hankel/determinant.hpp"
#include "hankel/error.hpp"
#include "hankel/matrix.hpp"
#include "hankel/random.hpp"

namespace hankel {

std::string_view to_string(Identity id) {
  switch (id) {
    case Identity::theorem1: return "theorem1";
    case Identity::theorem2: return "theorem2";
    case Identity::prodinger: return "prodinger";
    case Identity::carlitz: return "carlitz";
    case Identity::vajda: return "vajda";
    case Identity::eq4: return "eq4";
    case Identity::rank_zero: return "rank-zero";
    case Identity::desnanot_jacobi_random: return "desnanot-jacobi-random";
  }
  return "?";
}

Identity parse_identity(std::string_view text) {
  for (Identity id : {Identity::theorem1, Identity::theorem2, Identity::prodinger, Identity::carlitz,
                      Identity::vajda, Identity::eq4, Identity::rank_zero, Identity::desnanot_jacobi_random}) {
    if (text == to_string(id)) return id;
  }
  throw Error(Errc::parse_error, "unknown identity '" + std::string(text) + "'");
}

std::string_view to_string(Oracle o) { return o == Oracle::cofactor ? "cofactor" : "bareiss"; }

Oracle parse_oracle(std::string_view text) {
  if (text == "cofactor") return Oracle::cofactor;
  if (text == "bareiss") return Oracle::bareiss;
  throw Error(Errc::parse_error, "unknown oracle '" + std::string(text) + "'");
}

namespace {

std::int64_t parse_int(std::string_view text) {
  std::int64_t value = 0;
  const char* first = text.data();
  const char* last = text.data() + text.size();
  if (first != last && *first == '+') ++first;
  const auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc{} || ptr != last || first == last) {
    throw Error(Errc::parse_error, "not an integer: '" + std::string(text) + "'");
  }
  return value;
}

}  // namespace

IndexRange parse_range(std::string_view text) {
  const auto dots = text.find("..");
  if (dots == std::string_view::npos) {
    const auto v = parse_int(text);
    return {v, v};
  }
  IndexRange range{parse_int(text.substr(0, dots)), parse_int(text.substr(dots + 2))};
  if (range.empty()) throw Error(Errc::parse_error, "empty range '" + std::string(text) + "'");
  return range;
}

std::string to_string(const IndexRange& range) {
  return std::to_string(range.lo) + ".." + std::to_string(range.hi);
}

namespace {

void require_nonempty(const IndexRange& range, std::string_view name) {
  if (range.empty()) {
    throw Error(Errc::invalid_argument, "range " + std::string(name) + " = " + to_string(range) + " is empty");
  }
}

Scalar oracle_det(const SquareMatrix& m, Oracle oracle, OpCounter& ops) {
  const DetReport report = oracle == Oracle::cofactor ? det_cofactor(m) : det_bareiss(m);
  ops.mul += report.mul_count;
  ops.div += report.div_count;
  return report.value;
}

struct Outcome {
  Scalar lhs;
  Scalar rhs;
  std::string error;
  OpCounter ops;
};

class PointEvaluator {
 public:
  PointEvaluator(const GridSpec& grid, const RhsOverride& rhs_override, const std::vector<SquareMatrix>& samples)
      : grid_(grid), override_(rhs_override), samples_(samples) {}

  Outcome operator()(const GridPoint& p) const {
    Outcome out;
    try {
      evaluate(p, out);
    } catch (const Error& e) {
      out.error = e.what();
    }
    return out;
  }

 private:
  void evaluate(const GridPoint& p, Outcome& out) const {
    const Oracle oracle = grid_.oracle;
    const RecurrenceSpec fibonacci = RecurrenceSpec::fibonacci();
    switch (grid_.identity) {
      case Identity::theorem1:
        out.lhs = oracle_det(build(fibonacci, {p.n, p.r, p.d, EntryMode::rising_power}), oracle, out.ops);
        out.rhs = override_ ? override_(p) : theorem1_rhs(p.n, p.r, p.d);
        return;
      case Identity::theorem2:
        out.lhs = oracle_det(build(grid_.spec, {p.n, p.r, p.d, EntryMode::rising_power}), oracle, out.ops);
        out.rhs = override_ ? override_(p) : theorem2_rhs(grid_.spec, p.n, p.r, p.d);
        return;
      case Identity::prodinger:
        out.lhs = theorem1_rhs(p.n, p.r, p.r + 1);
        out.rhs = override_ ? override_(p) : prodinger_rhs(p.n, p.r);
        return;
      case Identity::carlitz:
        out.lhs = oracle_det(build(fibonacci, {p.n, p.r, p.r + 1, EntryMode::plain_power}), oracle, out.ops);
        out.rhs = override_ ? override_(p) : carlitz_rhs(p.n, p.r);
        return;
      case Identity::vajda:
        out.lhs = vajda_lhs(p.n, p.i, p.j);
        out.rhs = override_ ? override_(p) : vajda_rhs(p.n, p.i, p.j);
        return;
      case Identity::eq4:
        out.lhs = generalized_vajda_lhs(grid_.spec, p.n, p.i, p.j);
        out.rhs = override_ ? override_(p) : generalized_vajda_rhs(grid_.spec, p.n, p.i, p.j);
        return;
      case Identity::rank_zero:
        out.lhs = oracle_det(build(grid_.spec, {p.n, p.r, p.d, EntryMode::rising_power}), oracle, out.ops);
        out.rhs = override_ ? override_(p) : hankel_rank_bound_value(grid_.spec, p.n, p.r, p.d);
        return;
      case Identity::desnanot_jacobi_random: {
        const SquareMatrix& m = samples_[p.sample];
        const std::size_t k = m.dimension();
        const Scalar whole = oracle_det(m, oracle, out.ops);
        const Scalar interior = oracle_det(m.block(1, 1, k - 2), oracle, out.ops);
        const Scalar south_east = oracle_det(m.block(1, 1, k - 1), oracle, out.ops);
        const Scalar north_west = oracle_det(m.block(0, 0, k - 1), oracle, out.ops);
        const Scalar south_west = oracle_det(m.block(1, 0, k - 1), oracle, out.ops);
        const Scalar north_east = oracle_det(m.block(0, 1, k - 1), oracle, out.ops);
        out.lhs = whole * interior;
        out.rhs = override_ ? override_(p) : south_east * north_west - south_west * north_east;
        return;
      }
    }
  }

  const GridSpec& grid_;
  const RhsOverride& override_;
  const std::vector<SquareMatrix>& samples_;
};

}  // namespace

std::vector<GridPoint> enumerate_points(const GridSpec& grid) {
  std::vector<GridPoint> points;
  switch (grid.identity) {
    case Identity::theorem1:
    case Identity::theorem2:
    case Identity::rank_zero:
      require_nonempty(grid.n, "n");
      require_nonempty(grid.r, "r");
      if (grid.d) require_nonempty(*grid.d, "d");
      for (auto n = grid.n.lo; n <= grid.n.hi; ++n) {
        for (auto r = grid.r.lo; r <= grid.r.hi; ++r) {
          IndexRange d = grid.identity == Identity::rank_zero ? IndexRange{r + 2, r + 3} : IndexRange{1, r + 1};
          if (grid.d) d = *grid.d;
          for (auto k = d.lo; k <= d.hi; ++k) points.push_back({.n = n, .r = r, .d = k});
        }
      }
      break;
    case Identity::prodinger:
    case Identity::carlitz:
      require_nonempty(grid.n, "n");
      require_nonempty(grid.r, "r");
      for (auto n = grid.n.lo; n <= grid.n.hi; ++n) {
        for (auto r = grid.r.lo; r <= grid.r.hi; ++r) points.push_back({.n = n, .r = r});
      }
      break;
    case Identity::vajda:
    case Identity::eq4:
      require_nonempty(grid.n, "n");
      require_nonempty(grid.i, "i");
      require_nonempty(grid.j, "j");
      for (auto n = grid.n.lo; n <= grid.n.hi; ++n) {
        for (auto i = grid.i.lo; i <= grid.i.hi; ++i) {
          for (auto j = grid.j.lo; j <= grid.j.hi; ++j) points.push_back({.n = n, .i = i, .j = j});
        }
      }
      break;
    case Identity::desnanot_jacobi_random:
      if (grid.dim < 3 || grid.dim > 7) {
        throw Error(Errc::invalid_argument, "Desnanot-Jacobi dimension must lie in [3, 7]");
      }
      if (grid.entry_bound < 0) throw Error(Errc::invalid_argument, "entry bound must be >= 0");
      for (std::size_t s = 0; s < grid.count; ++s) points.push_back({.sample = s});
      break;
  }
  return points;
}

VerifyReport run_grid(const GridSpec& grid, const RhsOverride& rhs_override) {
  const auto start = std::chrono::steady_clock::now();
  const std::vector<GridPoint> points = enumerate_points(grid);

  std::vector<SquareMatrix> samples;
  if (grid.identity == Identity::desnanot_jacobi_random) {
    Lcg rng(grid.seed);
    samples.reserve(grid.count);
    for (std::size_t s = 0; s < grid.count; ++s) {
      samples.push_back(random_integer_matrix(rng, grid.dim, grid.entry_bound));
    }
  }

  const PointEvaluator evaluate(grid, rhs_override, samples);
  std::vector<Outcome> outcomes(points.size());
  const unsigned workers = std::max(1u, std::min<unsigned>(grid.jobs, static_cast<unsigned>(points.size())));
  if (workers <= 1) {
    for (std::size_t k = 0; k < points.size(); ++k) outcomes[k] = evaluate(points[k]);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) {
      pool.emplace_back([&] {
        for (std::size_t k = next++; k < points.size(); k = next++) outcomes[k] = evaluate(points[k]);
      });
    }
  }

  VerifyReport report;
  report.grid = grid;
  report.checked = points.size();
  for (std::size_t k = 0; k < points.size(); ++k) {
    Outcome& o = outcomes[k];
    report.ops += o.ops;
    if (!o.error.empty()) {
      report.mismatches.push_back({points[k], "", "", std::move(o.error)});
    } else if (!(o.lhs == o.rhs)) {
      report.mismatches.push_back({points[k], o.lhs.to_string(), o.rhs.to_string(), ""});
    }
  }
  report.pass = report.mismatches.empty();
  report.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start)
                          .count();
  return report;
}

VerifyReport run_random_dj(std::uint64_t seed, std::size_t count, std::size_t dim, std::int64_t bound,
                           Oracle oracle) {
  GridSpec grid;
  grid.identity = Identity::desnanot_jacobi_random;
  grid.seed = seed;
  grid.count = count;
  grid.dim = dim;
  grid.entry_bound = bound;
  grid.oracle = oracle;
  return run_grid(grid);
}

namespace {

using Json = nlohmann::ordered_json;

Json point_json(Identity id, const GridPoint& p) {
  Json j = Json::object();
  switch (id) {
    case Identity::theorem1:
    case Identity::theorem2:
    case Identity::rank_zero:
      j["n"] = p.n;
      j["r"] = p.r;
      j["d"] = p.d;
      break;
    case Identity::prodinger:
    case Identity::carlitz:
      j["n"] = p.n;
      j["r"] = p.r;
      break;
    case Identity::vajda:
    case Identity::eq4:
      j["n"] = p.n;
      j["i"] = p.i;
      j["j"] = p.j;
      break;
    case Identity::desnanot_jacobi_random:
      j["sample"] = p.sample;
      break;
  }
  return j;
}

Json grid_json(const GridSpec& g) {
  Json j = Json::object();
  j["identity"] = std::string(to_string(g.identity));
  switch (g.identity) {
    case Identity::theorem1:
    case Identity::theorem2:
    case Identity::rank_zero:
      j["n"] = to_string(g.n);
      j["r"] = to_string(g.r);
      j["d"] = g.d ? to_string(*g.d) : std::string("auto");
      break;
    case Identity::prodinger:
    case Identity::carlitz:
      j["n"] = to_string(g.n);
      j["r"] = to_string(g.r);
      break;
    case Identity::vajda:
    case Identity::eq4:
      j["n"] = to_string(g.n);
      j["i"] = to_string(g.i);
      j["j"] = to_string(g.j);
      break;
    case Identity::desnanot_jacobi_random:
      j["seed"] = g.seed;
      j["count"] = g.count;
      j["dim"] = g.dim;
      j["bound"] = g.entry_bound;
      break;
  }
  if (g.identity == Identity::theorem2 || g.identity == Identity::eq4 || g.identity == Identity::rank_zero) {
    j["spec"] = g.spec_label;
    j["domain"] = std::string(to_string(g.spec.domain()));
  }
  j["oracle"] = std::string(to_string(g.oracle));
  return j;
}

}  // namespace

std::string to_json(const VerifyReport& report, bool include_timing) {
  Json j;
  j["identity"] = std::string(to_string(report.grid.identity));
  j["checked"] = report.checked;
  j["pass"] = report.pass;
  Json mismatches = Json::array();
  for (const auto& m : report.mismatches) {
    Json entry;
    entry["point"] = point_json(report.grid.identity, m.point);
    entry["lhs"] = m.lhs;
    entry["rhs"] = m.rhs;
    if (!m.error.empty()) entry["error"] = m.error;
    mismatches.push_back(std::move(entry));
  }
  j["mismatches"] = std::move(mismatches);
  j["elapsed_ms"] = include_timing ? report.elapsed_ms : 0;
  j["grid"] = grid_json(report.grid);
  j["ops"] = Json{{"mul", report.ops.mul}, {"div", report.ops.div}};
  return j.dump(2);
}

}  // namespace hankel
