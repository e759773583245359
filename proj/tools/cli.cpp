#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "hankel/bench.hpp"
#include "hankel/closed_form.hpp"
#include "hankel/determinant.hpp"
#include "hankel/error.hpp"
#include "hankel/matrix.hpp"
#include "hankel/sequence.hpp"
#include "hankel/verify.hpp"

namespace hankel::cli {

namespace {

// Raised for flag combinations that parse but make no sense together.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct SpecFlags {
  std::optional<std::string> preset;
  std::optional<std::string> a, b, c1, c2;
  std::string domain = "int";
};

void add_spec_flags(CLI::App& cmd, SpecFlags& f) {
  cmd.add_option("--preset", f.preset, "Named recurrence: fibonacci, lucas, pell, jacobsthal (default fibonacci)")
      ->check(CLI::IsMember(RecurrenceSpec::preset_names()));
  cmd.add_option("--a", f.a, "W_0 as an integer or p/q literal");
  cmd.add_option("--b", f.b, "W_1 as an integer or p/q literal");
  cmd.add_option("--c1", f.c1, "Coefficient of W_{n-1}");
  cmd.add_option("--c2", f.c2, "Coefficient of W_{n-2}");
  cmd.add_option("--domain", f.domain, "Scalar domain: int, rat or poly (poly uses symbolic a, b, c1, c2)")
      ->check(CLI::IsMember({"int", "rat", "poly"}));
}

struct ResolvedSpec {
  RecurrenceSpec spec;
  std::string label;
};

ResolvedSpec resolve(const SpecFlags& f) {
  const Domain domain = parse_domain(f.domain);
  const bool any_explicit = f.a || f.b || f.c1 || f.c2;
  const bool all_explicit = f.a && f.b && f.c1 && f.c2;
  if (any_explicit && f.preset) throw UsageError("--preset and explicit --a/--b/--c1/--c2 are mutually exclusive");
  if (domain == Domain::polynomial) {
    if (any_explicit) throw UsageError("--domain poly is symbolic and takes no explicit constants");
    return {RecurrenceSpec::symbolic(), "symbolic"};
  }
  if (any_explicit) {
    if (!all_explicit) throw UsageError("explicit constants need all of --a, --b, --c1, --c2");
    std::vector<Scalar> values;
    for (const auto* text : {&*f.a, &*f.b, &*f.c1, &*f.c2}) {
      Scalar v = Scalar::parse(*text);
      if (v.domain() != Domain::integer && domain == Domain::integer) {
        throw UsageError("rational constant '" + *text + "' requires --domain rat");
      }
      values.push_back(v.widen_to(domain));
    }
    std::string label = "explicit(" + *f.a + "," + *f.b + "," + *f.c1 + "," + *f.c2 + ")";
    return {RecurrenceSpec(values[0], values[1], values[2], values[3]), std::move(label)};
  }
  const std::string name = f.preset.value_or("fibonacci");
  return {RecurrenceSpec::preset(name, domain), name};
}

std::string matrix_json(const SquareMatrix& m) {
  nlohmann::json rows = nlohmann::json::array();
  for (std::size_t i = 0; i < m.dimension(); ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (std::size_t j = 0; j < m.dimension(); ++j) row.push_back(m(i, j).to_string());
    rows.push_back(std::move(row));
  }
  return rows.dump();
}

std::string report_json(const DetReport& r) {
  nlohmann::ordered_json j;
  j["value"] = r.value.to_string();
  j["algorithm"] = std::string(to_string(r.algorithm));
  j["mul_count"] = r.mul_count;
  j["div_count"] = r.div_count;
  j["fallback_used"] = r.fallback_used;
  return j.dump();
}

// --- seq ---------------------------------------------------------------------

struct SeqOptions {
  SpecFlags spec;
  std::int64_t from = 0;
  std::int64_t to = 10;
  std::optional<std::int64_t> rising;
};

int cmd_seq(const SeqOptions& o, std::ostream& out) {
  if (o.from > o.to) throw UsageError("--from must not exceed --to");
  SequenceCache cache(resolve(o.spec).spec);
  std::ostringstream text;
  for (auto k = o.from; k <= o.to; ++k) {
    const Scalar value = o.rising ? cache.rising_power(k, *o.rising) : cache.term(k);
    text << k << '\t' << value.to_string() << '\n';
  }
  out << text.str();
  return kExitOk;
}

// --- det ---------------------------------------------------------------------

struct DetOptions {
  SpecFlags spec;
  std::int64_t n = 0;
  std::int64_t r = 0;
  std::int64_t d = 1;
  std::string mode = "rising";
  std::string algorithm = "bareiss";
  bool stats = false;
  bool print_matrix = false;
};

DetReport closed_form_report(const RecurrenceSpec& spec, const MatrixQuery& q) {
  DetReport report;
  report.algorithm = Algorithm::closed_form;
  OpCounter ops;
  if (q.mode == EntryMode::plain_power) {
    if (!(spec == RecurrenceSpec::fibonacci()) || q.d != q.r + 1) {
      throw Error(Errc::invalid_argument, "plain powers have a closed form only for fibonacci with d = r+1");
    }
    report.value = carlitz_rhs(q.n, q.r);
  } else if (q.d <= q.r + 1) {
    report.value = theorem2_rhs(spec, q.n, q.r, q.d, &ops);
  } else {
    report.value = hankel_rank_bound_value(spec, q.n, q.r, q.d);
  }
  report.mul_count = ops.mul;
  report.div_count = ops.div;
  return report;
}

int cmd_det(const DetOptions& o, std::ostream& out) {
  const RecurrenceSpec spec = resolve(o.spec).spec;
  const MatrixQuery q{o.n, o.r, o.d, parse_entry_mode(o.mode)};
  SequenceCache cache(spec);
  const SquareMatrix m = build(cache, q);

  DetReport report;
  if (o.algorithm == "cofactor") {
    report = det_cofactor(m);
  } else if (o.algorithm == "bareiss") {
    report = det_bareiss(m);
  } else if (o.algorithm == "condensation") {
    report = det_condensation(m);
  } else if (o.algorithm == "structured") {
    if (q.mode != EntryMode::rising_power) throw UsageError("--algorithm structured needs --mode rising");
    OpCounter ops;
    report.algorithm = Algorithm::condensation;
    try {
      report.value = condense_structured(cache, q.n, q.r, q.d, &ops);
    } catch (const Error& e) {
      if (e.code() != Errc::zero_divisor) throw;
      const DetReport fallback = det_bareiss(m);
      report.value = fallback.value;
      report.algorithm = Algorithm::condensation_fallback;
      report.fallback_used = true;
      ops.mul += fallback.mul_count;
      ops.div += fallback.div_count;
    }
    report.mul_count = ops.mul;
    report.div_count = ops.div;
  } else {
    report = closed_form_report(spec, q);
  }

  std::ostringstream text;
  if (o.print_matrix) text << matrix_json(m) << '\n';
  text << report.value.to_string() << '\n';
  if (o.stats) text << report_json(report) << '\n';
  out << text.str();
  return kExitOk;
}

// --- closed ------------------------------------------------------------------

struct ClosedOptions {
  SpecFlags spec;
  std::string identity;
  std::int64_t n = 0, r = 0, d = 1, i = 0, j = 0;
};

int cmd_closed(const ClosedOptions& o, std::ostream& out) {
  const Identity id = parse_identity(o.identity);
  const RecurrenceSpec spec = resolve(o.spec).spec;
  Scalar value;
  switch (id) {
    case Identity::theorem1: value = theorem1_rhs(o.n, o.r, o.d); break;
    case Identity::theorem2: value = theorem2_rhs(spec, o.n, o.r, o.d); break;
    case Identity::prodinger: value = prodinger_rhs(o.n, o.r); break;
    case Identity::carlitz: value = carlitz_rhs(o.n, o.r); break;
    case Identity::vajda: value = vajda_rhs(o.n, o.i, o.j); break;
    case Identity::eq4: value = generalized_vajda_rhs(spec, o.n, o.i, o.j); break;
    case Identity::rank_zero: value = hankel_rank_bound_value(spec, o.n, o.r, o.d); break;
    case Identity::desnanot_jacobi_random: throw UsageError("desnanot-jacobi-random has no closed form");
  }
  out << value.to_string() << '\n';
  return kExitOk;
}

// --- verify ------------------------------------------------------------------

struct VerifyOptions {
  SpecFlags spec;
  std::string identity;
  std::string n = "0", r = "0", i = "0", j = "0";
  std::optional<std::string> d;
  std::string oracle = "bareiss";
  std::uint64_t seed = 1;
  std::size_t count = 100;
  std::size_t dim = 5;
  std::int64_t bound = 9;
  unsigned jobs = 1;
  bool no_timing = false;
};

int cmd_verify(const VerifyOptions& o, std::ostream& out) {
  GridSpec grid;
  grid.identity = parse_identity(o.identity);
  grid.n = parse_range(o.n);
  grid.r = parse_range(o.r);
  if (o.d) grid.d = parse_range(*o.d);
  grid.i = parse_range(o.i);
  grid.j = parse_range(o.j);
  auto resolved = resolve(o.spec);
  grid.spec = std::move(resolved.spec);
  grid.spec_label = std::move(resolved.label);
  grid.oracle = parse_oracle(o.oracle);
  grid.seed = o.seed;
  grid.count = o.count;
  grid.dim = o.dim;
  grid.entry_bound = o.bound;
  grid.jobs = o.jobs;

  const VerifyReport report = run_grid(grid);
  out << to_json(report, !o.no_timing) << '\n';
  return report.pass ? kExitOk : kExitVerifyFailed;
}

// --- bench -------------------------------------------------------------------

struct BenchOptions {
  SpecFlags spec;
  std::string n = "1", r = "0", d = "1";
  std::string mode = "rising";
  std::vector<std::string> algorithms{"bareiss", "condensation", "closed"};
  std::optional<std::string> out_path;
  bool no_timing = false;
};

int cmd_bench(const BenchOptions& o, std::ostream& out) {
  BenchSpec spec;
  spec.spec = resolve(o.spec).spec;
  spec.n = parse_range(o.n);
  spec.r = parse_range(o.r);
  spec.d = parse_range(o.d);
  spec.mode = parse_entry_mode(o.mode);
  spec.algorithms.clear();
  for (const auto& name : o.algorithms) spec.algorithms.push_back(parse_bench_algorithm(name));
  spec.timing = !o.no_timing;

  const std::string csv = to_csv(run_bench(spec));
  if (o.out_path) {
    std::ofstream file(*o.out_path, std::ios::binary);
    if (!file) throw Error(Errc::invalid_argument, "cannot open " + *o.out_path + " for writing");
    file << csv;
  } else {
    out << csv;
  }
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact Hankel determinants of rising powers of second-order recurrences", "hankel"};
  app.require_subcommand(1);
  app.fallthrough(false);

  SeqOptions seq;
  auto* seq_cmd = app.add_subcommand("seq", "Print W_k (or W_k^<r> with --rising) for k in [from, to]");
  add_spec_flags(*seq_cmd, seq.spec);
  seq_cmd->add_option("--from", seq.from, "First index")->required();
  seq_cmd->add_option("--to", seq.to, "Last index")->required();
  seq_cmd->add_option("--rising", seq.rising, "Print rising powers of this order");

  DetOptions det;
  auto* det_cmd = app.add_subcommand("det", "Determinant of the Hankel matrix [W_{n+i+j}^<r>] of dimension d");
  add_spec_flags(*det_cmd, det.spec);
  det_cmd->add_option("--n", det.n, "Base index")->required();
  det_cmd->add_option("--r", det.r, "Power order (>= 0)")->required();
  det_cmd->add_option("--d", det.d, "Dimension (>= 1)")->required();
  det_cmd->add_option("--mode", det.mode, "Entries: rising (W^<r>) or power (W^r)")
      ->check(CLI::IsMember({"rising", "power"}));
  det_cmd->add_option("--algorithm", det.algorithm, "cofactor, bareiss, condensation, structured or closed")
      ->check(CLI::IsMember({"cofactor", "bareiss", "condensation", "structured", "closed"}));
  det_cmd->add_flag("--stats", det.stats, "Also print the determinant report as JSON");
  det_cmd->add_flag("--matrix", det.print_matrix, "Print the matrix as a JSON array of rows first");

  ClosedOptions closed;
  auto* closed_cmd = app.add_subcommand("closed", "Evaluate the closed-form side of an identity at one point");
  add_spec_flags(*closed_cmd, closed.spec);
  closed_cmd->add_option("--identity", closed.identity,
                         "theorem1, theorem2, prodinger, carlitz, vajda, eq4 or rank-zero")
      ->required();
  closed_cmd->add_option("--n", closed.n, "Base index");
  closed_cmd->add_option("--r", closed.r, "Power order");
  closed_cmd->add_option("--d", closed.d, "Dimension");
  closed_cmd->add_option("--i", closed.i, "Vajda offset i");
  closed_cmd->add_option("--j", closed.j, "Vajda offset j");

  VerifyOptions verify;
  auto* verify_cmd = app.add_subcommand("verify", "Check an identity on a grid; prints a JSON report, exit 0 iff pass");
  add_spec_flags(*verify_cmd, verify.spec);
  verify_cmd->add_option("--identity", verify.identity,
                         "theorem1, theorem2, prodinger, carlitz, vajda, eq4, rank-zero or desnanot-jacobi-random")
      ->required();
  verify_cmd->add_option("--n", verify.n, "Range lo..hi of n (inclusive; negative bounds allowed)");
  verify_cmd->add_option("--r", verify.r, "Range of r");
  verify_cmd->add_option("--d", verify.d, "Range of d (default [1, r+1], or [r+2, r+3] for rank-zero)");
  verify_cmd->add_option("--i", verify.i, "Range of i (vajda, eq4)");
  verify_cmd->add_option("--j", verify.j, "Range of j (vajda, eq4)");
  verify_cmd->add_option("--oracle", verify.oracle, "Determinant oracle: cofactor or bareiss")
      ->check(CLI::IsMember({"cofactor", "bareiss"}));
  verify_cmd->add_option("--seed", verify.seed, "LCG seed (desnanot-jacobi-random)");
  verify_cmd->add_option("--count", verify.count, "Number of random matrices (desnanot-jacobi-random)");
  verify_cmd->add_option("--dim", verify.dim, "Random matrix dimension, 3..7 (desnanot-jacobi-random)");
  verify_cmd->add_option("--bound", verify.bound, "Random entries lie in [-bound, bound]");
  verify_cmd->add_option("--jobs", verify.jobs, "Worker threads")->check(CLI::PositiveNumber);
  verify_cmd->add_flag("--no-timing", verify.no_timing, "Write elapsed_ms as 0 for byte-stable output");

  BenchOptions bench;
  auto* bench_cmd = app.add_subcommand("bench", "Operation counts and wall time per algorithm, as CSV");
  add_spec_flags(*bench_cmd, bench.spec);
  bench_cmd->add_option("--n", bench.n, "Range of n (default 1)");
  bench_cmd->add_option("--r", bench.r, "Range of r");
  bench_cmd->add_option("--d", bench.d, "Range of d");
  bench_cmd->add_option("--mode", bench.mode, "Entries: rising or power")->check(CLI::IsMember({"rising", "power"}));
  bench_cmd->add_option("--algorithms", bench.algorithms,
                        "Comma-separated: bareiss, closed, cofactor, condensation, structured")
      ->delimiter(',');
  bench_cmd->add_option("--out", bench.out_path, "Write the CSV here instead of stdout");
  bench_cmd->add_flag("--no-timing", bench.no_timing, "Write wall_ns as 0 for byte-stable output");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*seq_cmd) return cmd_seq(seq, out);
    if (*det_cmd) return cmd_det(det, out);
    if (*closed_cmd) return cmd_closed(closed, out);
    if (*verify_cmd) return cmd_verify(verify, out);
    if (*bench_cmd) return cmd_bench(bench, out);
  } catch (const UsageError& e) {
    err << "hankel: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    err << "hankel: " << e.what() << '\n';
    return e.code() == Errc::parse_error ? kExitUsage : kExitComputation;
  }
  return kExitUsage;
}

}  // namespace hankel::cli
