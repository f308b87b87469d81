#include <doctest.h>

#include <cmath>
#include <random>

#include "oracles.hpp"
#include "pibound/analytic.hpp"
#include "pibound/error.hpp"

using namespace pibound;

namespace {

const PrimeTable& table() {
  static const PrimeTable t = PrimeTable::build(1'000'000);
  return t;
}

}  // namespace

TEST_CASE("li against the composite Simpson oracle") {
  CHECK(li(2.0).value == 0.0);
  const double ref10 = oracle::li_composite_simpson(2.0, 10.0, 1'000'000);
  const double ref100 = oracle::li_composite_simpson(2.0, 100.0, 1'000'000);
  const IntegralValue v10 = li(10.0, 1e-10);
  const IntegralValue v100 = li(100.0, 1e-10);
  CHECK(v10.method == IntegrationMethod::adaptive_quadrature);
  CHECK(std::abs(v10.value - ref10) <= 1e-10);
  CHECK(std::abs(v100.value - ref100) <= 1e-10);
  // mpmath li(x) - li(2) to 30 digits
  CHECK(std::abs(v10.value - 5.120435724669806) <= 1e-10);
  CHECK(std::abs(v100.value - 29.08097780396214) <= 1e-10);
  CHECK(v10.abs_error_bound <= 1e-10);
}

TEST_CASE("li at 1e6 within its error bound") {
  const IntegralValue v = li(1e6, 1e-8);
  CHECK(std::abs(v.value - 78626.50399568207) <= std::max(1e-8, v.abs_error_bound));
}

TEST_CASE("li errors") {
  CHECK_THROWS_AS(li(1.9), DomainError);
  CHECK_THROWS_AS(li(10.0, 0.0), DomainError);
  CHECK_THROWS_AS(li(10.0, -1.0), DomainError);
  CHECK_THROWS_AS(li_between(5.0, 4.0), DomainError);
}

TEST_CASE("li is monotone and below x") {
  double prev = 0.0;
  for (double x = 2.5; x <= 1e5; x *= 1.37) {
    const double v = li(x).value;
    CHECK(v > prev);
    CHECK(v < x);
    prev = v;
  }
}

TEST_CASE("li_between is additive") {
  const double whole = li(500.0, 1e-12).value;
  const double parts = li(123.4, 1e-12).value + li_between(123.4, 500.0, 1e-12).value;
  CHECK(std::abs(whole - parts) <= 1e-10);
}

TEST_CASE("theta_integral examples") {
  const auto& t = table();
  CHECK(theta_integral(t, 2.0).value == 0.0);
  // θ = log 2 on [2, 3): log 2 · (1/log 2 - 1/log 3)
  CHECK(theta_integral(t, 3.0).value == doctest::Approx(0.3690702464285426).epsilon(1e-14));
  const IntegralValue v = theta_integral(t, 1e4);
  CHECK(v.method == IntegrationMethod::piecewise_exact);
  CHECK(v.pieces == 1229);
  CHECK(v.value <= (1e4 - 1) / 2 * std::log(2.0) / std::log(1e4) + 1 + v.abs_error_bound);
  CHECK_THROWS_AS(theta_integral(t, 1.5), DomainError);
  CHECK_THROWS_AS(theta_integral(t, 2e6), OutOfRangeError);
}

TEST_CASE("pi_integral examples") {
  const auto& t = table();
  CHECK(pi_integral(t, 2.0).value == 0.0);
  CHECK(pi_integral(t, 3.0).value == doctest::Approx(std::log(1.5)).epsilon(1e-15));
  // log(3/2) + 2 log(5/3) + 3 log(7/5) + 4 log(10/7)
  CHECK(pi_integral(t, 10.0).value == doctest::Approx(3.8632328412587142).epsilon(1e-14));
  CHECK(pi_integral(t, 10.0).pieces == 4);
  const IntegralValue v = pi_integral(t, 1e4);
  CHECK(v.value <= (1e4 - 1) / 2 * std::log(2.0) + std::log(1e4));
}

TEST_CASE("piecewise integrals match a unit-interval oracle") {
  // Independent route: integrate the closed form per unit interval using π(n)
  // from trial division, for x up to 300.
  const auto& t = table();
  double pi_ref = 0.0;
  double theta_ref = 0.0;
  std::uint64_t count = 0;
  double theta = 0.0;
  for (std::uint32_t n = 2; n < 300; ++n) {
    if (oracle::is_prime_trial(n)) {
      ++count;
      theta += std::log(static_cast<double>(n));
    }
    const double a = n;
    const double b = n + 1.0;
    pi_ref += static_cast<double>(count) * (std::log(b) - std::log(a));
    theta_ref += theta * (1.0 / std::log(a) - 1.0 / std::log(b));
  }
  CHECK(pi_integral(t, 300.0).value == doctest::Approx(pi_ref).epsilon(1e-12));
  CHECK(theta_integral(t, 300.0).value == doctest::Approx(theta_ref).epsilon(1e-12));
}

TEST_CASE("piecewise integrals are additive") {
  const auto& t = table();
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> dist(2.0, 1e6);
  for (int i = 0; i < 200; ++i) {
    double a = dist(rng);
    double b = dist(rng);
    if (a > b) std::swap(a, b);
    for (const auto integral : {+[](const PrimeTable& tb, double lo, double hi) { return theta_integral(tb, lo, hi); },
                                +[](const PrimeTable& tb, double lo, double hi) { return pi_integral(tb, lo, hi); }}) {
      const IntegralValue left = integral(t, 2.0, a);
      const IntegralValue right = integral(t, a, b);
      const IntegralValue whole = integral(t, 2.0, b);
      const double slack = left.abs_error_bound + right.abs_error_bound + whole.abs_error_bound;
      REQUIRE(std::abs(left.value + right.value - whole.value) <= slack);
    }
  }
}

TEST_CASE("Abel residuals") {
  const auto& t = table();
  CHECK(abel_pi_residual(t, 2.0) == 0.0);
  CHECK(abel_theta_residual(t, 2.0) == 0.0);
  for (const double x : {1e3, 1e4}) {
    CHECK(std::abs(abel_pi_residual(t, x)) <= 1e-9);
    CHECK(std::abs(abel_theta_residual(t, x)) <= 1e-9);
  }
  CHECK(std::abs(abel_pi_residual(t, 1e6)) <= 1e-7);
  CHECK(std::abs(abel_theta_residual(t, 1e6)) <= 1e-7);
}

TEST_CASE("Abel residuals on a random real sample below 1e6") {
  const auto& t = table();
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> dist(2.0, 1e6);
  for (int i = 0; i < 300; ++i) {
    const double x = dist(rng);
    REQUIRE(std::abs(abel_pi_residual(t, x)) <= 1e-7);
    REQUIRE(std::abs(abel_theta_residual(t, x)) <= 1e-7);
  }
}

TEST_CASE("Li versus the pi integral crossover") {
  const auto& t = table();
  const auto from = li_below_pi_integral_from(t, 2.0, 1e5);
  REQUIRE(from.has_value());
  // Direct evaluation on both sides of the reported point.
  CHECK(li(*from).value <= pi_integral(t, *from).value);
  if (*from > 2.0) CHECK(li(*from - 1.0).value > pi_integral(t, *from - 1.0).value);
  for (double x = *from; x <= 1e5; x += 97.0) CHECK(li(x).value <= pi_integral(t, x).value);
  CHECK(*from == 44.0);  // independently: Li(43) = 15.5997 > 15.5467, Li(44) = 15.8647 <= 15.8686
}
