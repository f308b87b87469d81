#include "pibound/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <ostream>

#include "pibound/analytic.hpp"
#include "pibound/bounds.hpp"
#include "pibound/csv.hpp"
#include "pibound/error.hpp"
#include "pibound/prime_table.hpp"
#include "pibound/proof_oracle.hpp"
#include "pibound/scan.hpp"
#include "pibound/table_cache.hpp"

namespace pibound {
namespace {

constexpr double kDefaultLimit = 1e6;
constexpr std::size_t kListedViolations = 20;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::optional<double> limit;
  std::string grid = "integers";
  std::optional<double> from;
  std::optional<double> to;
  double step = 1.0;
  std::string csv;
  std::vector<std::string> bounds;
  std::optional<int> j_max;
  std::optional<double> c1;
  bool extended = false;
  std::uint64_t chain_x = 0;
};

void add_common(CLI::App& cmd, Options& o) {
  cmd.add_option("--limit", o.limit, "Sieve limit (default 1e6, max 1e8)");
  cmd.add_flag("--extended", o.extended, "Two-double θ accumulation");
  cmd.add_option("--j-max", o.j_max, "Terms in the geometric bound (default 64)");
  cmd.add_option("--c1", o.c1, "Chebyshev constant (default 0.92129)");
}

void add_range(CLI::App& cmd, Options& o) {
  cmd.add_option("--from", o.from, "Lower end of the range");
  cmd.add_option("--to", o.to, "Upper end of the range");
}

BoundKind make_kind(const std::string& name, const Options& o) {
  const auto tag = parse_bound_tag(name);
  if (!tag) throw UsageError("unknown bound '" + name + "'");
  const bool geometric = *tag == BoundTag::geometric;
  const bool chebyshev = *tag == BoundTag::chebyshev_lower || *tag == BoundTag::chebyshev_upper;
  if (o.j_max && !geometric) throw UsageError("--j-max only applies to geometric");
  if (o.c1 && !chebyshev) throw UsageError("--c1 only applies to the Chebyshev bounds");
  return BoundKind(*tag, geometric ? std::optional<int>(o.j_max.value_or(kDefaultGeometricTerms)) : std::nullopt,
                   chebyshev ? std::optional<double>(o.c1.value_or(kChebyshevC1)) : std::nullopt);
}

std::uint64_t resolve_limit(const Options& o, double needed) {
  double limit = o.limit.value_or(std::max(kDefaultLimit, std::ceil(needed)));
  if (!(limit >= 2.0) || limit != std::floor(limit)) throw UsageError("--limit must be an integer >= 2");
  if (limit > static_cast<double>(kDefaultMaxLimit)) throw UsageError("--limit exceeds the 1e8 cap");
  if (needed > limit) throw UsageError("range exceeds --limit");
  return static_cast<std::uint64_t>(limit);
}

PrimeTable load_primes(std::uint64_t limit, const Options& o) {
  SieveOptions sieve;
  sieve.summation = o.extended ? SummationMode::double_double : SummationMode::kahan;
  if (const char* dir = std::getenv("PIBOUND_CACHE_DIR"); dir != nullptr && *dir != '\0') {
    return load_or_build(dir, limit, sieve);
  }
  return PrimeTable::build(limit, sieve);
}

void check_range(double lo, double hi) {
  if (std::isnan(lo) || std::isnan(hi) || lo < 2.0 || hi < lo) throw UsageError("range needs 2 <= from <= to");
}

std::string describe_range(const AssertedRange& r) {
  if (!r.from) return "none (sufficiently large x only)";
  return format_double(*r.from) + (r.source == ThresholdSource::stated ? " (stated)" : " (empirical)");
}

int cmd_verify(const Options& o, std::ostream& out) {
  const BoundKind kind = make_kind(o.bounds.empty() ? "theorem1_ceiling" : o.bounds.front(), o);
  const GridSpec grid = GridSpec::parse(o.grid);
  const double lo = o.from.value_or(2.0);
  const std::uint64_t limit = resolve_limit(o, o.to.value_or(0.0));
  const double hi = o.to.value_or(static_cast<double>(limit));
  check_range(lo, hi);
  const PrimeTable table = load_primes(limit, o);

  std::ofstream csv;
  if (!o.csv.empty()) {
    csv.open(o.csv, std::ios::binary | std::ios::trunc);
    if (!csv) throw UsageError("cannot open " + o.csv);
    write_report_header(csv);
  }
  ReportSink sink;
  if (csv.is_open()) sink = [&](const BoundReport& r) { write_report_row(csv, r); };
  const ScanResult r = scan(kind, table, lo, hi, grid, std::nullopt, sink);

  out << "bound: " << kind.name() << '\n'
      << "range: [" << format_double(lo) << ", " << format_double(hi) << "] grid " << r.grid << '\n'
      << "asserted from: " << describe_range(r.range) << '\n'
      << "points evaluated: " << r.points_evaluated << " (skipped " << r.points_skipped << ")\n"
      << "min margin: " << format_double(r.min_margin) << " at x = " << format_double(r.argmin_x) << '\n'
      << "violations: " << r.violations.size() << " (asserted " << r.asserted_violations << ")\n";
  for (std::size_t i = 0; i < std::min(r.violations.size(), kListedViolations); ++i) {
    out << "  x = " << format_double(r.violations[i].x) << " margin " << format_double(r.violations[i].margin)
        << (r.range.contains(r.violations[i].x) ? "" : " [not asserted]") << '\n';
  }
  out << "near ties: " << r.near_ties.size() << '\n';
  for (const double x : r.near_ties) out << "  x = " << format_double(x) << '\n';
  const int code = exit_code(r);
  out << "status: " << (code == kExitOk ? "OK" : "VIOLATED") << '\n';
  return code;
}

int cmd_table(const Options& o, std::ostream& out) {
  std::vector<BoundKind> kinds;
  if (o.bounds.empty()) {
    for (const BoundTag tag : kAllBoundTags) kinds.push_back(make_kind(std::string(to_string(tag)), Options{}));
  } else {
    for (const std::string& name : o.bounds) kinds.push_back(make_kind(name, o));
  }
  const double lo = o.from.value_or(2.0);
  const double hi = o.to.value_or(100.0);
  check_range(lo, hi);
  if (!(o.step > 0.0)) throw UsageError("--step must be positive");
  const PrimeTable table = load_primes(resolve_limit(o, hi), o);
  if (o.csv.empty()) {
    write_bound_table(out, table, lo, hi, o.step, kinds);
  } else {
    std::ofstream csv(o.csv, std::ios::binary | std::ios::trunc);
    if (!csv) throw UsageError("cannot open " + o.csv);
    const std::uint64_t rows = write_bound_table(csv, table, lo, hi, o.step, kinds);
    out << "wrote " << rows << " rows to " << o.csv << '\n';
  }
  return kExitOk;
}

int cmd_threshold(const Options& o, std::ostream& out) {
  if (o.bounds.empty()) throw UsageError("threshold needs --bound");
  const BoundKind kind = make_kind(o.bounds.front(), o);
  const GridSpec grid = GridSpec::parse(o.grid);
  const double lo = o.from.value_or(2.0);
  const std::uint64_t limit = resolve_limit(o, o.to.value_or(0.0));
  const double hi = o.to.value_or(static_cast<double>(limit));
  check_range(lo, hi);
  const PrimeTable table = load_primes(limit, o);
  const ThresholdResult t = find_threshold(kind, table, lo, hi, grid);

  out << "bound: " << kind.name() << '\n'
      << "scan: [" << format_double(lo) << ", " << format_double(hi) << "] grid " << t.scan.grid << ", "
      << t.scan.points_evaluated << " points\n"
      << "empirical threshold: "
      << (t.empirical_from ? "x0 = " + format_double(*t.empirical_from) : std::string("none (fails at end of scan)"))
      << '\n'
      << "stated threshold: " << describe_range(t.stated) << '\n'
      << "violations in scan: " << t.scan.violations.size() << '\n';
  if (kind.tag() == BoundTag::li_gap) {
    const auto crossover = li_below_pi_integral_from(table, std::max(lo, 2.0), hi);
    out << "Li(x) <= integral pi(t)/t from: "
        << (crossover ? "x = " + format_double(*crossover) : std::string("not reached in scan")) << '\n';
  }
  out
      << "note: empirical over the scanned grid only\n";
  return kExitOk;
}

int cmd_chain(const Options& o, std::ostream& out) {
  const auto xd = static_cast<double>(o.chain_x);
  if (o.chain_x < 3 || o.chain_x % 2 == 0) throw UsageError("chain needs an odd integer x >= 3");
  const PrimeTable table = load_primes(resolve_limit(o, xd), o);
  const CountingChain c = counting_chain(o.chain_x, table);
  const std::vector<ChainLink> links = verify_proof_chain(o.chain_x, table);

  out << "x = " << c.x << ", pi(x) = " << c.pi_x << ", theta(x) = " << format_double(c.theta_x) << '\n'
      << "evens available (x-1)/2 = " << c.evens_available << '\n'
      << "sum floor(log2(x/p)) = " << c.s_exact << "  (powers-of-two variant: " << c.s_powers_of_two << ")\n"
      << "sum log2(x/p) = " << format_double(c.value_sum) << ", sum frac = " << format_double(c.frac_sum) << '\n';
  bool all = true;
  for (const ChainLink& link : links) {
    all = all && link.holds;
    out << (link.holds ? "[holds] " : "[FAILS] ") << link.name << ": " << link.relation << "  ("
        << format_double(link.lhs) << " >= " << format_double(link.rhs) << ", margin "
        << format_double(link.lhs - link.rhs) << ")\n";
  }
  return all ? kExitOk : kExitViolation;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Prime-counting bound toolkit"};
  app.name("pibound");
  app.require_subcommand(1);
  Options o;

  auto* verify = app.add_subcommand("verify", "Scan a bound over a range and report violations");
  add_common(*verify, o);
  add_range(*verify, o);
  verify->add_option("--grid", o.grid, "integers | log:N | prime-adjacent (comma-separated union)");
  verify->add_option("--bound", o.bounds, "Bound kind")->expected(1);
  verify->add_option("--csv", o.csv, "Write every evaluated point to this file");

  auto* table = app.add_subcommand("table", "CSV table of π, θ and bound values");
  add_common(*table, o);
  add_range(*table, o);
  table->add_option("--step", o.step, "Row spacing");
  table->add_option("--bound", o.bounds, "Bound columns (repeatable; default all)");
  table->add_option("--csv", o.csv, "Output file (default stdout)");

  auto* threshold = app.add_subcommand("threshold", "Empirical start of validity for a bound");
  add_common(*threshold, o);
  add_range(*threshold, o);
  threshold->add_option("--grid", o.grid, "integers | log:N | prime-adjacent");
  threshold->add_option("--bound", o.bounds, "Bound kind")->expected(1);

  auto* chain = app.add_subcommand("chain", "Replay the even-integer counting argument at odd x");
  add_common(*chain, o);
  chain->add_option("x", o.chain_x, "Odd integer >= 3")->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*verify) return cmd_verify(o, out);
    if (*table) return cmd_table(o, out);
    if (*threshold) return cmd_threshold(o, out);
    return cmd_chain(o, out);
  } catch (const UsageError& e) {
    err << "pibound: " << e.what() << '\n';
  } catch (const DomainError& e) {
    err << "pibound: " << e.what() << '\n';
  } catch (const OutOfRangeError& e) {
    err << "pibound: " << e.what() << '\n';
  } catch (const CapacityError& e) {
    err << "pibound: " << e.what() << '\n';
  }
  return kExitUsage;
}

}  // namespace pibound
