#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "pibound/bounds.hpp"
#include "pibound/prime_table.hpp"

namespace pibound {

enum class GridKind {
  integers,        ///< every integer in [lo, hi]
  log_spaced,      ///< n points geometrically spaced over [lo, hi]
  prime_adjacent,  ///< each prime p in [lo, hi] and the double just below it
};

struct GridPart {
  GridKind kind = GridKind::integers;
  std::size_t count = 0;  ///< log_spaced only

  friend bool operator==(const GridPart&, const GridPart&) = default;
};

/// Union of grid parts, e.g. "log:100000,prime-adjacent".
struct GridSpec {
  std::vector<GridPart> parts;

  /// Throws DomainError on an unknown part or a bad point count.
  static GridSpec parse(std::string_view text);
  [[nodiscard]] std::string str() const;
};

/// Ascending, duplicate-free evaluation points in [lo, hi].
std::vector<double> grid_points(const GridSpec& grid, double lo, double hi, const PrimeTable& table);

struct Violation {
  double x;
  double margin;
};

struct ScanResult {
  BoundKind kind{BoundTag::theorem1_ceiling};
  double lo = 0.0;
  double hi = 0.0;
  std::string grid;
  AssertedRange range;
  std::uint64_t points_evaluated = 0;
  /// Grid points outside the expression's domain (e.g. x = 2 for theorem1_sharp).
  std::uint64_t points_skipped = 0;
  double min_margin = 0.0;
  double argmin_x = 0.0;
  /// Every evaluated point with negative margin, ascending.
  std::vector<Violation> violations;
  /// Violations inside the asserted range.
  std::uint64_t asserted_violations = 0;
  std::vector<double> near_ties;
};

/// 0 when no asserted violation occurred, 1 otherwise.
int exit_code(const ScanResult& result);

using ReportSink = std::function<void(const BoundReport&)>;

/// Evaluates a bound over a grid. Li for li_gap is accumulated along the
/// ascending grid. `range` overrides the stated asserted range.
ScanResult scan(const BoundKind& kind, const PrimeTable& table, double lo, double hi, const GridSpec& grid,
                const std::optional<AssertedRange>& range = std::nullopt, const ReportSink& sink = {});

struct ThresholdResult {
  /// Smallest scanned x0 with margin >= 0 at every scanned x >= x0;
  /// nullopt when the last scanned point fails.
  std::optional<double> empirical_from;
  AssertedRange stated;
  ScanResult scan;
};

ThresholdResult find_threshold(const BoundKind& kind, const PrimeTable& table, double lo, double hi,
                               const GridSpec& grid);

/// Shortest decimal that round-trips; "inf", "-inf", "nan" for non-finite.
std::string format_double(double v);

}  // namespace pibound
