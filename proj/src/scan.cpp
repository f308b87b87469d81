#include "pibound/scan.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <limits>
#include <string>

#include "pibound/analytic.hpp"
#include "pibound/compensated.hpp"
#include "pibound/error.hpp"

namespace pibound {
namespace {

// Per-step tolerance when Li is accumulated along a scan.
constexpr double kLiStepTolerance = 1e-12;

GridPart parse_part(std::string_view text) {
  if (text == "integers") return {GridKind::integers, 0};
  if (text == "prime-adjacent") return {GridKind::prime_adjacent, 0};
  if (text.starts_with("log:")) {
    const std::string_view digits = text.substr(4);
    std::size_t n = 0;
    const auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), n);
    if (ec != std::errc{} || ptr != digits.data() + digits.size() || n < 2) {
      throw DomainError("log grid needs an integer point count >= 2: '" + std::string(text) + "'");
    }
    return {GridKind::log_spaced, n};
  }
  throw DomainError("unknown grid '" + std::string(text) + "'");
}

}  // namespace

GridSpec GridSpec::parse(std::string_view text) {
  GridSpec spec;
  while (true) {
    const std::size_t comma = text.find(',');
    spec.parts.push_back(parse_part(text.substr(0, comma)));
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  return spec;
}

std::string GridSpec::str() const {
  std::string out;
  for (const GridPart& part : parts) {
    if (!out.empty()) out += ',';
    switch (part.kind) {
      case GridKind::integers: out += "integers"; break;
      case GridKind::prime_adjacent: out += "prime-adjacent"; break;
      case GridKind::log_spaced: out += "log:" + std::to_string(part.count); break;
    }
  }
  return out;
}

std::vector<double> grid_points(const GridSpec& grid, double lo, double hi, const PrimeTable& table) {
  if (std::isnan(lo) || std::isnan(hi) || lo > hi) throw DomainError("grid range is empty or reversed");
  if (hi > static_cast<double>(table.limit())) throw OutOfRangeError("grid exceeds sieve limit");
  std::vector<double> points;
  for (const GridPart& part : grid.parts) {
    switch (part.kind) {
      case GridKind::integers:
        for (double x = std::ceil(lo); x <= hi; x += 1.0) points.push_back(x);
        break;
      case GridKind::log_spaced: {
        if (!(lo > 0.0)) throw DomainError("log grid needs lo > 0");
        const double ratio = std::log(hi / lo);
        const auto n = static_cast<double>(part.count - 1);
        for (std::size_t i = 0; i < part.count; ++i) {
          // Endpoints exact; interior points clamped against rounding.
          double x = i == 0 ? lo : i + 1 == part.count ? hi : lo * std::exp(ratio * static_cast<double>(i) / n);
          points.push_back(std::clamp(x, lo, hi));
        }
        break;
      }
      case GridKind::prime_adjacent:
        for (const std::uint32_t p : table.primes_in(std::nextafter(lo, -1.0), hi)) {
          const auto x = static_cast<double>(p);
          const double below = std::nextafter(x, 0.0);
          if (below >= lo) points.push_back(below);
          points.push_back(x);
        }
        break;
    }
  }
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());
  return points;
}

int exit_code(const ScanResult& result) { return result.asserted_violations == 0 ? 0 : 1; }

ScanResult scan(const BoundKind& kind, const PrimeTable& table, double lo, double hi, const GridSpec& grid,
                const std::optional<AssertedRange>& range, const ReportSink& sink) {
  const std::vector<double> points = grid_points(grid, lo, hi, table);
  ScanResult result;
  result.kind = kind;
  result.lo = lo;
  result.hi = hi;
  result.grid = grid.str();
  result.range = range.value_or(stated_range(kind.tag()));
  result.min_margin = std::numeric_limits<double>::infinity();
  result.argmin_x = std::numeric_limits<double>::quiet_NaN();

  const Domain dom = domain(kind.tag());
  const bool needs_li = kind.tag() == BoundTag::li_gap;
  CompensatedSum li_sum;
  double li_at = 2.0;

  for (const double x : points) {
    if (!dom.contains(x)) {
      ++result.points_skipped;
      continue;
    }
    std::optional<double> li_x;
    if (needs_li) {
      li_sum += li_between(li_at, x, kLiStepTolerance).value;
      li_at = x;
      li_x = li_sum.value();
    }
    const BoundReport report = evaluate(kind, x, table.pi(x), table.theta(x), li_x, result.range);
    ++result.points_evaluated;
    if (report.margin < result.min_margin) {
      result.min_margin = report.margin;
      result.argmin_x = x;
    }
    if (!report.holds) {
      result.violations.push_back({x, report.margin});
      if (report.asserted) ++result.asserted_violations;
    }
    if (report.near_tie) result.near_ties.push_back(x);
    if (sink) sink(report);
  }
  return result;
}

ThresholdResult find_threshold(const BoundKind& kind, const PrimeTable& table, double lo, double hi,
                               const GridSpec& grid) {
  ThresholdResult out;
  out.stated = stated_range(kind.tag());
  std::vector<double> evaluated;
  out.scan = scan(kind, table, lo, hi, grid, std::nullopt, [&](const BoundReport& r) { evaluated.push_back(r.x); });
  if (evaluated.empty()) return out;
  if (out.scan.violations.empty()) {
    out.empirical_from = evaluated.front();
    return out;
  }
  const double last_bad = out.scan.violations.back().x;
  const auto next = std::upper_bound(evaluated.begin(), evaluated.end(), last_bad);
  if (next != evaluated.end()) out.empirical_from = *next;
  return out;
}

std::string format_double(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[32];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, ptr);
}

}  // namespace pibound
