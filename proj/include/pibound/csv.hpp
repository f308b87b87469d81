#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>

#include "pibound/bounds.hpp"
#include "pibound/prime_table.hpp"

namespace pibound {

/// Rows x = from + k·step (k = 0, 1, ...) while x <= to, with columns
///   x,pi,theta,<kind>...,<kind>_margin...
/// Cells where a bound is undefined at x are left empty. LF endings and
/// shortest round-trip decimals, so output is byte-identical across runs.
/// Returns the number of data rows.
std::uint64_t write_bound_table(std::ostream& out, const PrimeTable& table, double from, double to, double step,
                                std::span<const BoundKind> kinds);

/// Per-point rows of a scan: x,pi,bound,margin,holds,asserted.
void write_report_header(std::ostream& out);
void write_report_row(std::ostream& out, const BoundReport& report);

}  // namespace pibound
