#include "pibound/csv.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "pibound/analytic.hpp"
#include "pibound/compensated.hpp"
#include "pibound/error.hpp"
#include "pibound/scan.hpp"

namespace pibound {

std::uint64_t write_bound_table(std::ostream& out, const PrimeTable& table, double from, double to, double step,
                                std::span<const BoundKind> kinds) {
  if (std::isnan(from) || std::isnan(to) || from < 2.0 || to < from) throw DomainError("table needs 2 <= from <= to");
  if (!(step > 0.0)) throw DomainError("table step must be positive");
  if (to > static_cast<double>(table.limit())) throw OutOfRangeError("table range exceeds sieve limit");

  out << "x,pi,theta";
  for (const BoundKind& k : kinds) out << ',' << k.name();
  for (const BoundKind& k : kinds) out << ',' << k.name() << "_margin";
  out << '\n';

  // Tolerate representation error in (to - from) / step, e.g. 0.1 steps.
  const auto rows = static_cast<std::uint64_t>(std::floor((to - from) / step * (1.0 + 1e-12))) + 1;
  CompensatedSum li_sum;
  double li_at = 2.0;
  std::vector<std::optional<BoundReport>> reports(kinds.size());
  for (std::uint64_t k = 0; k < rows; ++k) {
    const double x = std::min(from + static_cast<double>(k) * step, to);
    const std::uint64_t pi_x = table.pi(x);
    const double theta_x = table.theta(x);
    std::optional<double> li_x;
    if (x >= 3.0) {
      li_sum += li_between(li_at, x, 1e-12).value;
      li_at = x;
      li_x = li_sum.value();
    }
    for (std::size_t i = 0; i < kinds.size(); ++i) {
      reports[i].reset();
      if (domain(kinds[i].tag()).contains(x)) reports[i] = evaluate(kinds[i], x, pi_x, theta_x, li_x);
    }
    out << format_double(x) << ',' << pi_x << ',' << format_double(theta_x);
    for (const auto& r : reports) out << ',' << (r ? format_double(r->bound) : "");
    for (const auto& r : reports) out << ',' << (r ? format_double(r->margin) : "");
    out << '\n';
  }
  return rows;
}

void write_report_header(std::ostream& out) { out << "x,pi,bound,margin,holds,asserted\n"; }

void write_report_row(std::ostream& out, const BoundReport& r) {
  out << format_double(r.x) << ',' << r.pi_x << ',' << format_double(r.bound) << ',' << format_double(r.margin)
      << ',' << (r.holds ? 1 : 0) << ',' << (r.asserted ? 1 : 0) << '\n';
}

}  // namespace pibound
