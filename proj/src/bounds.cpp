#include "pibound/bounds.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "pibound/analytic.hpp"
#include "pibound/compensated.hpp"
#include "pibound/error.hpp"

namespace pibound {
namespace {

const double kLog2 = std::log(2.0);

constexpr double kDusartLowerFrom = 5393.0;
constexpr double kDusartUpperFrom = 60184.0;

void require_domain(BoundTag tag, double x) {
  const Domain d = domain(tag);
  if (std::isnan(x) || !d.contains(x)) {
    throw DomainError(std::string(to_string(tag)) + ": x = " + std::to_string(x) + " outside domain");
  }
}

}  // namespace

std::string_view to_string(BoundTag tag) {
  switch (tag) {
    case BoundTag::theorem1_ceiling: return "theorem1_ceiling";
    case BoundTag::theorem1_sharp: return "theorem1_sharp";
    case BoundTag::geometric: return "geometric";
    case BoundTag::asymptotic_13: return "asymptotic_13";
    case BoundTag::linear_rest: return "linear_rest";
    case BoundTag::chebyshev_lower: return "chebyshev_lower";
    case BoundTag::chebyshev_upper: return "chebyshev_upper";
    case BoundTag::intro_upper: return "intro_upper";
    case BoundTag::dusart_lower: return "dusart_lower";
    case BoundTag::dusart_upper: return "dusart_upper";
    case BoundTag::li_gap: return "li_gap";
  }
  return "unknown";
}

std::optional<BoundTag> parse_bound_tag(std::string_view name) {
  for (const BoundTag tag : kAllBoundTags) {
    if (to_string(tag) == name) return tag;
  }
  return std::nullopt;
}

BoundSense sense(BoundTag tag) {
  switch (tag) {
    case BoundTag::chebyshev_lower:
    case BoundTag::dusart_lower: return BoundSense::lower;
    case BoundTag::li_gap: return BoundSense::gap;
    default: return BoundSense::upper;
  }
}

BoundKind::BoundKind(BoundTag tag)
    : tag_(tag),
      j_max_(tag == BoundTag::geometric ? std::optional<int>(kDefaultGeometricTerms) : std::nullopt),
      c1_(tag == BoundTag::chebyshev_lower || tag == BoundTag::chebyshev_upper ? std::optional<double>(kChebyshevC1)
                                                                                : std::nullopt) {}

BoundKind::BoundKind(BoundTag tag, std::optional<int> j_max, std::optional<double> c1)
    : tag_(tag), j_max_(j_max), c1_(c1) {
  const bool wants_j = tag == BoundTag::geometric;
  const bool wants_c1 = tag == BoundTag::chebyshev_lower || tag == BoundTag::chebyshev_upper;
  if (wants_j != j_max.has_value()) throw DomainError("j_max is required for geometric and only for geometric");
  if (wants_c1 != c1.has_value()) throw DomainError("c1 is required for the Chebyshev bounds and only for them");
  if (j_max && *j_max < 0) throw DomainError("j_max must be nonnegative");
  if (c1 && !(*c1 > 0.0)) throw DomainError("c1 must be positive");
}

AssertedRange stated_range(BoundTag tag) {
  switch (tag) {
    case BoundTag::theorem1_ceiling:
    case BoundTag::theorem1_sharp:
    case BoundTag::geometric:
    case BoundTag::asymptotic_13:
    case BoundTag::intro_upper: return {2.0, ThresholdSource::stated};
    case BoundTag::linear_rest: return {3.0, ThresholdSource::stated};
    case BoundTag::dusart_lower: return {kDusartLowerFrom, ThresholdSource::stated};
    case BoundTag::dusart_upper: return {kDusartUpperFrom, ThresholdSource::stated};
    case BoundTag::chebyshev_lower:
    case BoundTag::chebyshev_upper:
    case BoundTag::li_gap: return {std::nullopt, ThresholdSource::none};
  }
  return {};
}

AssertedRange empirical_range(double from) { return {from, ThresholdSource::empirical}; }

Domain domain(BoundTag tag) {
  switch (tag) {
    case BoundTag::theorem1_sharp:
    case BoundTag::geometric: return {2.0, true};
    case BoundTag::asymptotic_13: return {1.0, true};
    case BoundTag::linear_rest: return {-std::numeric_limits<double>::infinity(), false};
    case BoundTag::li_gap: return {3.0, false};
    default: return {2.0, false};
  }
}

double theorem1_pre_ceiling(double x, double theta_x) { return (0.5 * (x - 1.0) * kLog2 + theta_x) / std::log(x); }

CeilingBound bound_theorem1_ceiling(double x, double theta_x) {
  require_domain(BoundTag::theorem1_ceiling, x);
  const double pre = theorem1_pre_ceiling(x, theta_x);
  const bool near_tie = std::abs(pre - std::nearbyint(pre)) <= kNearTieWidth;
  return {std::ceil(pre), pre, near_tie};
}

double bound_theorem1_sharp(double x, double theta_x) {
  require_domain(BoundTag::theorem1_sharp, x);
  // log x - log 2 written as log(x/2) loses nothing and stays positive.
  return (0.5 * (x - 1.0) * kLog2 + theta_x) / std::log(x / 2.0);
}

GeometricBound bound_geometric(double x, double theta_x, int j_max) {
  require_domain(BoundTag::geometric, x);
  if (j_max < 0) throw DomainError("j_max must be nonnegative");
  const double first = theorem1_pre_ceiling(x, theta_x);
  const double r = kLog2 / std::log(x);
  CompensatedSum sum;
  double term = first;
  for (int j = 0; j <= j_max; ++j) {
    sum += term;
    term *= r;
  }
  // term == first · r^(j_max+1) here
  return {sum.value(), term / (1.0 - r)};
}

double bound_asymptotic_13(double x) {
  require_domain(BoundTag::asymptotic_13, x);
  return (1.0 + kLog2 / 2.0) * x / std::log(x);
}

double bound_linear_rest(double x) {
  if (std::isnan(x)) throw DomainError("linear_rest: x is NaN");
  return kLog2 / 2.0 * x + 2.0;
}

double li_gap_rhs(double x) {
  require_domain(BoundTag::li_gap, x);
  const double lx = std::log(x);
  return 0.5 * (x - 1.0) * kLog2 + lx - x / lx;
}

double bound_value(const BoundKind& kind, double x, double theta_x) {
  require_domain(kind.tag(), x);
  switch (kind.tag()) {
    case BoundTag::theorem1_ceiling: return bound_theorem1_ceiling(x, theta_x).value;
    case BoundTag::theorem1_sharp: return bound_theorem1_sharp(x, theta_x);
    case BoundTag::geometric: return bound_geometric(x, theta_x, *kind.j_max()).value;
    case BoundTag::asymptotic_13: return bound_asymptotic_13(x);
    case BoundTag::linear_rest: return bound_linear_rest(x);
    case BoundTag::chebyshev_lower: return *kind.c1() * x / std::log(x);
    case BoundTag::chebyshev_upper: return 6.0 * *kind.c1() / 5.0 * x / std::log(x);
    case BoundTag::intro_upper: {
      const double lx = std::log(x);
      return x / lx * (1.0 + 3.0 / (2.0 * lx));
    }
    // Denominators vanish near e and e^1.1; the raw expression is returned
    // there, far outside the stated ranges.
    case BoundTag::dusart_lower: return x / (std::log(x) - 1.0);
    case BoundTag::dusart_upper: return x / (std::log(x) - 1.1);
    case BoundTag::li_gap: return li_gap_rhs(x);
  }
  return std::numeric_limits<double>::quiet_NaN();
}

std::vector<ComparisonBound> comparison_bounds(double x) {
  if (std::isnan(x) || x < 2.0) throw DomainError("comparison bounds require x >= 2");
  std::vector<ComparisonBound> out;
  for (const BoundTag tag : {BoundTag::chebyshev_lower, BoundTag::chebyshev_upper, BoundTag::intro_upper,
                             BoundTag::dusart_lower, BoundTag::dusart_upper}) {
    const BoundKind kind(tag);
    out.push_back({kind, bound_value(kind, x, 0.0), stated_range(tag).contains(x)});
  }
  return out;
}

BoundReport bound_li_gap(double x, std::uint64_t pi_x, double li_x) {
  return evaluate(BoundKind(BoundTag::li_gap), x, pi_x, 0.0, li_x);
}

BoundReport evaluate(const BoundKind& kind, double x, std::uint64_t pi_x, double theta_x, std::optional<double> li_x,
                     const std::optional<AssertedRange>& range) {
  require_domain(kind.tag(), x);
  BoundReport report;
  report.x = x;
  report.pi_x = pi_x;
  report.kind = kind;
  const auto pi = static_cast<double>(pi_x);
  switch (sense(kind.tag())) {
    case BoundSense::upper:
      if (kind.tag() == BoundTag::theorem1_ceiling) {
        const CeilingBound c = bound_theorem1_ceiling(x, theta_x);
        report.bound = c.value;
        report.near_tie = c.near_tie;
      } else {
        report.bound = bound_value(kind, x, theta_x);
      }
      report.margin = report.bound - pi;
      break;
    case BoundSense::lower:
      report.bound = bound_value(kind, x, theta_x);
      report.margin = pi - report.bound;
      break;
    case BoundSense::gap:
      if (!li_x) throw DomainError("li_gap needs Li(x)");
      report.bound = li_gap_rhs(x);
      report.margin = report.bound - std::abs(pi - *li_x);
      break;
  }
  report.holds = report.margin >= 0.0;
  report.asserted = range.value_or(stated_range(kind.tag())).contains(x);
  return report;
}

BoundReport evaluate(const BoundKind& kind, double x, const PrimeTable& table) {
  require_domain(kind.tag(), x);
  const std::uint64_t pi_x = table.pi(x);
  const double theta_x = table.theta(x);
  std::optional<double> li_x;
  if (kind.tag() == BoundTag::li_gap) li_x = li(x).value;
  return evaluate(kind, x, pi_x, theta_x, li_x);
}

}  // namespace pibound
