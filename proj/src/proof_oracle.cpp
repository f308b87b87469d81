#include "pibound/proof_oracle.hpp"

#include <cmath>
#include <string>

#include "pibound/bounds.hpp"
#include "pibound/compensated.hpp"
#include "pibound/error.hpp"

namespace pibound {
namespace {

void check_odd(std::uint64_t x, const PrimeTable& table) {
  if (x < 3) throw DomainError("counting chain needs x >= 3");
  if (x % 2 == 0) throw DomainError("counting chain needs odd x, got " + std::to_string(x));
  if (x > table.limit()) throw OutOfRangeError("x exceeds sieve limit");
}

}  // namespace

std::uint64_t floor_log2_ratio(std::uint64_t x, std::uint64_t p) {
  if (p < 1 || p > x) throw DomainError("floor_log2_ratio needs 1 <= p <= x");
  std::uint64_t k = 0;
  // p · 2 <= x  <=>  p <= ⌊x / 2⌋, which never overflows.
  for (std::uint64_t v = p; v <= x / 2; v *= 2) ++k;
  return k;
}

std::uint64_t floor_sum_by_levels(std::uint64_t x, const PrimeTable& table) {
  if (x > table.limit()) throw OutOfRangeError("x exceeds sieve limit");
  std::uint64_t total = 0;
  for (std::uint64_t q = x / 2; q >= 2; q /= 2) total += table.pi(static_cast<double>(q));
  return total;
}

CountingChain counting_chain(std::uint64_t x, const PrimeTable& table) {
  check_odd(x, table);
  CountingChain chain;
  chain.x = x;
  chain.evens_available = (x - 1) / 2;
  const double xd = static_cast<double>(x);
  CompensatedSum frac(table.summation());
  CompensatedSum value(table.summation());
  for (const std::uint32_t p : table.primes_in(0.0, xd)) {
    const std::uint64_t k = floor_log2_ratio(x, p);
    chain.s_exact += k;
    const double y = std::log2(xd / static_cast<double>(p));
    value += y;
    // The integer floor is authoritative; y - k stays in [0, 1) because x/p
    // is never within rounding distance of a power of two without equalling it.
    frac += y - static_cast<double>(k);
    ++chain.pi_x;
  }
  chain.s_powers_of_two = chain.s_exact - floor_log2_ratio(x, 2) + floor_log2_ratio(x, 1);
  chain.frac_sum = frac.value();
  chain.value_sum = value.value();
  chain.theta_x = table.theta(xd);
  return chain;
}

std::vector<ChainLink> verify_proof_chain(std::uint64_t x, const PrimeTable& table) {
  const CountingChain c = counting_chain(x, table);
  const double xd = static_cast<double>(x);
  const double log2 = std::log(2.0);
  const double lx = std::log(xd);
  const double pi = static_cast<double>(c.pi_x);
  const double tol = kChainTolerance * pi;
  const double half = 0.5 * (xd - 1.0);

  CompensatedSum log_ratios(table.summation());
  for (const std::uint32_t p : table.primes_in(0.0, xd)) log_ratios += std::log(xd / static_cast<double>(p));

  std::vector<ChainLink> links;
  auto add = [&](std::string name, std::string relation, double lhs, double rhs, double slack) {
    links.push_back({std::move(name), std::move(relation), lhs, rhs, lhs >= rhs - slack});
  };

  add("evens_vs_floor_sum", "(x-1)/2 >= sum floor(log2(x/p))", static_cast<double>(c.evens_available),
      static_cast<double>(c.s_exact), 0.0);
  add("floor_decomposition", "sum floor(.) >= sum log2(x/p) - sum frac(.)", static_cast<double>(c.s_exact),
      c.value_sum - c.frac_sum, tol);
  add("log_rearrangement", "((x-1)/2) log 2 + log 2 * sum frac(.) >= sum (log x - log p)",
      half * log2 + log2 * c.frac_sum, log_ratios.value(), tol);
  add("pi_log_identity", "sum (log x - log p) >= pi(x) log x - theta(x)", log_ratios.value(), pi * lx - c.theta_x,
      tol);
  add("fractional_bound", "(((x-1)/2) log 2 + log 2 * sum frac(.) + theta(x)) / log x >= pi(x)",
      (half * log2 + log2 * c.frac_sum + c.theta_x) / lx, pi, tol);
  add("sharp_form", "(((x-1)/2) log 2 + theta(x)) / (log x - log 2) >= pi(x)", bound_theorem1_sharp(xd, c.theta_x),
      pi, tol);
  add("ceiling_form", "ceil((((x-1)/2) log 2 + theta(x)) / log x) >= pi(x)",
      bound_theorem1_ceiling(xd, c.theta_x).value, pi, 0.0);
  return links;
}

}  // namespace pibound
