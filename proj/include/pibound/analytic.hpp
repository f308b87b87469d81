#pragma once

#include <cstddef>
#include <optional>

#include "pibound/prime_table.hpp"

namespace pibound {

enum class IntegrationMethod { piecewise_exact, adaptive_quadrature };

struct IntegralValue {
  double value = 0.0;
  /// Quadrature: Richardson estimate plus rounding. Piecewise: rounding only.
  double abs_error_bound = 0.0;
  IntegrationMethod method = IntegrationMethod::piecewise_exact;
  /// Leaf intervals (quadrature) or constant pieces (piecewise).
  std::size_t pieces = 0;
};

inline constexpr double kDefaultLiTolerance = 1e-10;
inline constexpr int kSimpsonMaxDepth = 60;

/// Li(x) = ∫_2^x dt / log t by adaptive Simpson.
IntegralValue li(double x, double tol = kDefaultLiTolerance);
/// ∫_a^b dt / log t for 2 <= a <= b; lets ascending scans accumulate Li.
IntegralValue li_between(double a, double b, double tol = kDefaultLiTolerance);

/// ∫_a^b θ(t) / (t log² t) dt, exact on each interval where θ is constant.
IntegralValue theta_integral(const PrimeTable& table, double a, double b);
inline IntegralValue theta_integral(const PrimeTable& table, double x) { return theta_integral(table, 2.0, x); }

/// ∫_a^b π(t) / t dt, exact on each interval where π is constant.
IntegralValue pi_integral(const PrimeTable& table, double a, double b);
inline IntegralValue pi_integral(const PrimeTable& table, double x) { return pi_integral(table, 2.0, x); }

/// π(x) - θ(x)/log x - ∫_2^x θ(t)/(t log² t) dt. Zero up to rounding.
double abel_pi_residual(const PrimeTable& table, double x);
/// θ(x) - π(x) log x + ∫_2^x π(t)/t dt. Zero up to rounding.
double abel_theta_residual(const PrimeTable& table, double x);

/// Smallest integer x0 in [lo, hi] with Li(x) <= ∫_2^x π(t)/t dt at every
/// integer x in [x0, hi]; nullopt if the inequality fails at hi. Empirical.
std::optional<double> li_below_pi_integral_from(const PrimeTable& table, double lo, double hi);

}  // namespace pibound
