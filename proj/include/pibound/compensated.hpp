#pragma once

#include <cmath>

namespace pibound {

/// Unevaluated sum hi + lo of two doubles.
struct DoubleDouble {
  double hi = 0.0;
  double lo = 0.0;

  [[nodiscard]] constexpr double value() const { return hi + lo; }

  friend constexpr bool operator==(const DoubleDouble&, const DoubleDouble&) = default;
};

/// Error-free transformation: a + b == s + e exactly.
constexpr DoubleDouble two_sum(double a, double b) {
  const double s = a + b;
  const double bb = s - a;
  const double e = (a - (s - bb)) + (b - bb);
  return {s, e};
}

/// Requires |a| >= |b|.
constexpr DoubleDouble fast_two_sum(double a, double b) {
  const double s = a + b;
  return {s, b - (s - a)};
}

enum class SummationMode {
  kahan,          ///< Neumaier-compensated double accumulation
  double_double,  ///< renormalised two-double accumulation
};

/*!
  Accumulates a sum with a running correction term.

  In kahan mode the correction collects the rounding error of each addition
  (Neumaier's variant, so it also handles addends larger than the running sum).
  In double_double mode the pair is renormalised after every addition, which
  keeps roughly 106 bits of the running sum.
*/
class CompensatedSum {
 public:
  explicit constexpr CompensatedSum(SummationMode mode = SummationMode::kahan) : mode_(mode) {}

  constexpr CompensatedSum& operator+=(double x) {
    const DoubleDouble t = two_sum(state_.hi, x);
    if (mode_ == SummationMode::kahan) {
      state_.hi = t.hi;
      state_.lo += t.lo;
    } else {
      state_ = fast_two_sum(t.hi, state_.lo + t.lo);
    }
    return *this;
  }

  [[nodiscard]] constexpr double value() const { return state_.value(); }
  [[nodiscard]] constexpr DoubleDouble pair() const { return state_; }
  [[nodiscard]] constexpr SummationMode mode() const { return mode_; }

 private:
  SummationMode mode_;
  DoubleDouble state_{};
};

}  // namespace pibound
