#include <doctest.h>

#include <cmath>
#include <numbers>

#include "pibound/analytic.hpp"
#include "pibound/bounds.hpp"
#include "pibound/error.hpp"

using namespace pibound;

namespace {

const double kLn2 = std::log(2.0);

const PrimeTable& table() {
  static const PrimeTable t = PrimeTable::build(1'000'000);
  return t;
}

}  // namespace

TEST_CASE("bound tags round-trip through their names") {
  for (const BoundTag tag : kAllBoundTags) CHECK(parse_bound_tag(to_string(tag)) == tag);
  CHECK_FALSE(parse_bound_tag("dusart").has_value());
}

TEST_CASE("BoundKind parameters exist exactly where needed") {
  CHECK(BoundKind(BoundTag::geometric).j_max() == kDefaultGeometricTerms);
  CHECK(BoundKind(BoundTag::chebyshev_upper).c1() == kChebyshevC1);
  CHECK_FALSE(BoundKind(BoundTag::li_gap).j_max().has_value());
  CHECK_THROWS_AS(BoundKind(BoundTag::geometric, std::nullopt, std::nullopt), DomainError);
  CHECK_THROWS_AS(BoundKind(BoundTag::linear_rest, 3, std::nullopt), DomainError);
  CHECK_THROWS_AS(BoundKind(BoundTag::chebyshev_lower, std::nullopt, std::nullopt), DomainError);
  CHECK_THROWS_AS(BoundKind(BoundTag::geometric, -1, std::nullopt), DomainError);
  CHECK_NOTHROW(BoundKind(BoundTag::chebyshev_lower, std::nullopt, 0.9));
}

TEST_CASE("theorem1_ceiling examples") {
  const CeilingBound at2 = bound_theorem1_ceiling(2.0, kLn2);
  CHECK(at2.pre_ceiling == 1.5);
  CHECK(at2.value == 2.0);
  CHECK_FALSE(at2.near_tie);
  const CeilingBound at5 = bound_theorem1_ceiling(5.0, std::log(30.0));
  CHECK(at5.pre_ceiling == doctest::Approx(2.9746358687061645).epsilon(1e-14));
  CHECK(at5.value == 3.0);
  const CeilingBound at10 = bound_theorem1_ceiling(10.0, std::log(210.0));
  CHECK(at10.pre_ceiling == doctest::Approx(3.6768542752218343).epsilon(1e-14));
  CHECK(at10.value == 4.0);
  CHECK_THROWS_AS(bound_theorem1_ceiling(1.99, 0.0), DomainError);
}

TEST_CASE("near ties are flagged") {
  // Choose θ so the pre-ceiling value is exactly 7 at x = 16.
  const double x = 16.0;
  const double theta = 7.0 * std::log(x) - 7.5 * kLn2;
  const CeilingBound c = bound_theorem1_ceiling(x, theta);
  CHECK(c.near_tie);
  CHECK_FALSE(bound_theorem1_ceiling(x, theta + 1e-9).near_tie);
}

TEST_CASE("theorem1_sharp examples") {
  CHECK(bound_theorem1_sharp(4.0, std::log(6.0)) == doctest::Approx(4.084962500721156).epsilon(1e-14));
  CHECK(bound_theorem1_sharp(5.0, std::log(30.0)) == doctest::Approx(5.22486103617991).epsilon(1e-14));
  // log x - log 2 == 1 at x = 2e, so the bound is just the numerator.
  const double x = 2.0 * std::numbers::e;
  CHECK(bound_theorem1_sharp(x, std::log(30.0)) ==
        doctest::Approx((x - 1) / 2 * kLn2 + std::log(30.0)).epsilon(1e-15));
  CHECK(bound_theorem1_sharp(x, std::log(30.0)) == doctest::Approx(4.938793176745904).epsilon(1e-14));
  CHECK_THROWS_AS(bound_theorem1_sharp(2.0, kLn2), DomainError);
}

TEST_CASE("sharp form dominates the pre-ceiling value for x > 2") {
  const auto& t = table();
  for (double x = 2.001; x <= 1e6; x *= 1.01) {
    const double theta = t.theta(x);
    REQUIRE(bound_theorem1_sharp(x, theta) > theorem1_pre_ceiling(x, theta));
  }
}

TEST_CASE("geometric partial sums") {
  const double theta10 = std::log(210.0);
  const double first = theorem1_pre_ceiling(10.0, theta10);
  CHECK(bound_geometric(10.0, theta10, 0).value == first);
  CHECK(bound_geometric(10.0, theta10, 1).value == doctest::Approx(4.783697701748954).epsilon(1e-14));
  const double sharp = bound_theorem1_sharp(10.0, theta10);
  CHECK(sharp == doctest::Approx(5.260389219011814).epsilon(1e-14));
  CHECK(std::abs(bound_geometric(10.0, theta10, 50).value - sharp) <= 1e-12);
  CHECK_THROWS_AS(bound_geometric(2.0, kLn2, 3), DomainError);
  CHECK_THROWS_AS(bound_geometric(3.0, kLn2, -1), DomainError);
}

TEST_CASE("geometric convergence and monotone truncation over a grid") {
  const auto& t = table();
  for (double x = 2.01; x <= 1e6; x *= 1.3) {
    const double theta = t.theta(x);
    const double first = theorem1_pre_ceiling(x, theta);
    const double r = kLn2 / std::log(x);
    const double sharp = bound_theorem1_sharp(x, theta);
    double prev = 0.0;
    for (int j = 0; j <= 80; j += 4) {
      const GeometricBound g = bound_geometric(x, theta, j);
      // closed-form partial sum, independent of the term loop
      const double closed = first * (1.0 - std::pow(r, j + 1)) / (1.0 - r);
      REQUIRE(g.value == doctest::Approx(closed).epsilon(1e-12));
      REQUIRE(std::abs(g.value - sharp) <= first * std::pow(r, j + 1) / (1.0 - r) * (1 + 1e-9) + 1e-12 * sharp);
      REQUIRE(g.remainder_bound == doctest::Approx(first * std::pow(r, j + 1) / (1.0 - r)).epsilon(1e-12));
      REQUIRE(g.value >= prev);
      prev = g.value;
    }
  }
}

TEST_CASE("asymptotic_13 and linear_rest") {
  CHECK(bound_asymptotic_13(std::numbers::e) == doctest::Approx(3.6603665211409053).epsilon(1e-14));
  CHECK(bound_asymptotic_13(100.0) == doctest::Approx(29.24047398676212).epsilon(1e-14));
  CHECK(bound_asymptotic_13(2.0) == doctest::Approx(3.885390081777927).epsilon(1e-14));
  CHECK_THROWS_AS(bound_asymptotic_13(1.0), DomainError);
  CHECK(bound_linear_rest(0.0) == 2.0);
  CHECK(bound_linear_rest(3.0) == doctest::Approx(3.039720770839918).epsilon(1e-14));
  CHECK(bound_linear_rest(1000.0) == doctest::Approx(348.5735902799726).epsilon(1e-14));
}

TEST_CASE("comparison bounds and applicability") {
  const auto at_1e5 = comparison_bounds(1e5);
  REQUIRE(at_1e5.size() == 5);
  for (const ComparisonBound& b : at_1e5) {
    if (b.kind.tag() == BoundTag::dusart_lower) {
      CHECK(b.value == doctest::Approx(9512.100160246231).epsilon(1e-14));
      CHECK(b.applicable);
    }
    if (b.kind.tag() == BoundTag::intro_upper) {
      CHECK(b.value == doctest::Approx(9817.55982013472).epsilon(1e-14));
      CHECK(b.applicable);
    }
    if (b.kind.tag() == BoundTag::dusart_upper) CHECK(b.applicable);
    if (b.kind.tag() == BoundTag::chebyshev_lower || b.kind.tag() == BoundTag::chebyshev_upper) {
      CHECK_FALSE(b.applicable);
    }
  }
  for (const ComparisonBound& b : comparison_bounds(100.0)) {
    if (b.kind.tag() == BoundTag::dusart_upper) CHECK_FALSE(b.applicable);
  }
  CHECK_THROWS_AS(comparison_bounds(1.0), DomainError);
}

TEST_CASE("li_gap examples") {
  const BoundReport at10 = bound_li_gap(10.0, 4, li(10.0).value);
  CHECK(at10.bound == doctest::Approx(1.0788025864812827).epsilon(1e-13));
  CHECK(at10.margin == doctest::Approx(-0.04163313818852199).epsilon(1e-8));
  CHECK_FALSE(at10.holds);
  CHECK_FALSE(at10.asserted);

  const BoundReport at100 = bound_li_gap(100.0, 25, li(100.0).value);
  CHECK(at100.bound == doctest::Approx(17.201231528542795).epsilon(1e-13));
  CHECK(at100.margin == doctest::Approx(13.12025372458066).epsilon(1e-10));
  CHECK(at100.holds);

  const BoundReport at1e4 = bound_li_gap(1e4, 1229, li(1e4).value);
  CHECK(at1e4.bound == doctest::Approx(2388.863464823293).epsilon(1e-13));
  CHECK(at1e4.margin == doctest::Approx(2372.7714127040217).epsilon(1e-11));

  CHECK_THROWS_AS(bound_li_gap(2.5, 1, 0.5), DomainError);
}

TEST_CASE("evaluate dispatch") {
  const auto& t = table();
  const BoundReport r5 = evaluate(BoundKind(BoundTag::theorem1_ceiling), 5.0, t);
  CHECK(r5.pi_x == 3);
  CHECK(r5.margin == 0.0);
  CHECK(r5.holds);
  CHECK(r5.asserted);

  const BoundReport r2 = evaluate(BoundKind(BoundTag::asymptotic_13), 2.0, t);
  CHECK(r2.holds);
  CHECK(r2.margin == doctest::Approx(3.885390081777927 - 1.0).epsilon(1e-14));

  const BoundReport cheb = evaluate(BoundKind(BoundTag::chebyshev_upper), 10.0, t);
  CHECK_FALSE(cheb.asserted);

  // Lower bounds measure π - bound.
  const BoundReport low = evaluate(BoundKind(BoundTag::dusart_lower), 1e5, t);
  CHECK(low.pi_x == 9592);
  CHECK(low.margin == doctest::Approx(9592 - 9512.100160246231).epsilon(1e-13));
  CHECK(low.asserted);

  CHECK_THROWS_AS(evaluate(BoundKind(BoundTag::theorem1_sharp), 2.0, t), DomainError);
  CHECK_THROWS_AS(evaluate(BoundKind(BoundTag::linear_rest), 2e6, t), OutOfRangeError);
}

TEST_CASE("evaluate is deterministic and holds matches margin sign") {
  const auto& t = table();
  for (const BoundTag tag : kAllBoundTags) {
    const BoundKind kind(tag);
    for (double x = 3.0; x <= 1e6; x *= 2.7) {
      const BoundReport a = evaluate(kind, x, t);
      const BoundReport b = evaluate(kind, x, t);
      REQUIRE(a.bound == b.bound);
      REQUIRE(a.margin == b.margin);
      REQUIRE(a.holds == (a.margin >= 0.0));
      REQUIRE(a.pi_x == t.pi(x));
    }
  }
}

TEST_CASE("stated ranges") {
  CHECK(stated_range(BoundTag::dusart_upper).from == 60184.0);
  CHECK(stated_range(BoundTag::dusart_lower).from == 5393.0);
  CHECK(stated_range(BoundTag::linear_rest).from == 3.0);
  CHECK(stated_range(BoundTag::asymptotic_13).from == 2.0);
  CHECK_FALSE(stated_range(BoundTag::li_gap).from.has_value());
  CHECK(stated_range(BoundTag::li_gap).source == ThresholdSource::none);
  CHECK(empirical_range(11.0).contains(11.0));
  CHECK_FALSE(empirical_range(11.0).contains(10.0));
}
