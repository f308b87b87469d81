#include "pibound/analytic.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <span>

#include "pibound/compensated.hpp"
#include "pibound/error.hpp"

namespace pibound {
namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();
// Per-piece relative rounding allowance for the closed-form antiderivatives.
constexpr double kPieceRounding = 8.0;

double inv_log(double t) { return 1.0 / std::log(t); }

struct SimpsonState {
  double error = 0.0;
  std::size_t leaves = 0;
};

double simpson(double a, double b, double fa, double fm, double fb) { return (b - a) / 6.0 * (fa + 4.0 * fm + fb); }

double adaptive(double a, double b, double fa, double fm, double fb, double whole, double tol, int depth,
                SimpsonState& state) {
  const double m = 0.5 * (a + b);
  const double lm = 0.5 * (a + m);
  const double rm = 0.5 * (m + b);
  const double flm = inv_log(lm);
  const double frm = inv_log(rm);
  const double left = simpson(a, m, fa, flm, fm);
  const double right = simpson(m, b, fm, frm, fb);
  const double delta = left + right - whole;
  if (depth >= kSimpsonMaxDepth || std::abs(delta) <= 15.0 * tol || !(a < lm && rm < b)) {
    state.error += std::abs(delta) / 15.0;
    ++state.leaves;
    return left + right + delta / 15.0;
  }
  return adaptive(a, m, fa, flm, fm, left, 0.5 * tol, depth + 1, state) +
         adaptive(m, b, fm, frm, fb, right, 0.5 * tol, depth + 1, state);
}

void check_interval(const PrimeTable& table, double a, double b) {
  if (std::isnan(a) || std::isnan(b) || a < 2.0) throw DomainError("integral lower limit must be at least 2");
  if (b < a) throw DomainError("integral upper limit below lower limit");
  if (b > static_cast<double>(table.limit())) throw OutOfRangeError("integral upper limit exceeds sieve limit");
}

// Walks the maximal subintervals of [a, b] on which π is constant and calls
// piece(lo, hi, index) where index = π(lo) (so θ(lo) = theta_prefix[index-1]).
template <typename Piece>
IntegralValue piecewise(const PrimeTable& table, double a, double b, Piece&& piece) {
  check_interval(table, a, b);
  CompensatedSum sum(table.summation());
  std::size_t pieces = 0;
  std::size_t index = table.count_upto(a);
  double lo = a;
  for (const std::uint32_t p : table.primes_in(a, b)) {
    const double hi = static_cast<double>(p);
    if (hi > lo) {
      sum += piece(lo, hi, index);
      ++pieces;
    }
    lo = hi;
    ++index;
  }
  if (b > lo) {
    sum += piece(lo, b, index);
    ++pieces;
  }
  const double value = sum.value();
  return {value, kPieceRounding * static_cast<double>(pieces) * kEps * std::abs(value),
          IntegrationMethod::piecewise_exact, pieces};
}

}  // namespace

IntegralValue li_between(double a, double b, double tol) {
  if (std::isnan(a) || std::isnan(b) || a < 2.0) throw DomainError("Li requires x >= 2");
  if (b < a) throw DomainError("Li interval is reversed");
  if (!(tol > 0.0)) throw DomainError("Li tolerance must be positive");
  if (b == a) return {0.0, 0.0, IntegrationMethod::adaptive_quadrature, 0};
  const double fa = inv_log(a);
  const double fb = inv_log(b);
  const double fm = inv_log(0.5 * (a + b));
  SimpsonState state;
  const double value = adaptive(a, b, fa, fm, fb, simpson(a, b, fa, fm, fb), tol, 0, state);
  const double rounding = 4.0 * static_cast<double>(state.leaves) * kEps * std::abs(value);
  return {value, state.error + rounding, IntegrationMethod::adaptive_quadrature, state.leaves};
}

IntegralValue li(double x, double tol) {
  if (std::isnan(x) || x < 2.0) throw DomainError("Li requires x >= 2");
  return li_between(2.0, x, tol);
}

IntegralValue theta_integral(const PrimeTable& table, double a, double b) {
  const std::span<const DoubleDouble> theta = table.theta_prefix();
  return piecewise(table, a, b, [&](double lo, double hi, std::size_t index) {
    if (index == 0) return 0.0;
    // 1/log lo - 1/log hi without cancellation.
    const double diff = std::log1p((hi - lo) / lo) / (std::log(lo) * std::log(hi));
    return theta[index - 1].value() * diff;
  });
}

IntegralValue pi_integral(const PrimeTable& table, double a, double b) {
  return piecewise(table, a, b, [](double lo, double hi, std::size_t index) {
    return static_cast<double>(index) * std::log1p((hi - lo) / lo);
  });
}

double abel_pi_residual(const PrimeTable& table, double x) {
  const IntegralValue integral = theta_integral(table, x);
  return static_cast<double>(table.pi(x)) - table.theta(x) / std::log(x) - integral.value;
}

double abel_theta_residual(const PrimeTable& table, double x) {
  const IntegralValue integral = pi_integral(table, x);
  return table.theta(x) - static_cast<double>(table.pi(x)) * std::log(x) + integral.value;
}

std::optional<double> li_below_pi_integral_from(const PrimeTable& table, double lo, double hi) {
  lo = std::max(std::ceil(lo), 2.0);
  check_interval(table, lo, hi);
  CompensatedSum li_sum;
  CompensatedSum pi_sum;
  double at = 2.0;
  std::optional<double> from;
  for (double x = lo; x <= hi; x += 1.0) {
    li_sum += li_between(at, x, 1e-12).value;
    pi_sum += pi_integral(table, at, x).value;
    at = x;
    if (li_sum.value() <= pi_sum.value()) {
      if (!from) from = x;
    } else {
      from.reset();
    }
  }
  return from;
}

}  // namespace pibound
