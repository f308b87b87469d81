#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "pibound/prime_table.hpp"

namespace pibound {

/// Largest k >= 0 with p · 2^k <= x, by integer doubling.
/// Throws DomainError unless 1 <= p <= x.
std::uint64_t floor_log2_ratio(std::uint64_t x, std::uint64_t p);

/// Σ_{p<=x} ⌊log2(x/p)⌋ regrouped by exponent: Σ_{k>=1} π(⌊x / 2^k⌋).
/// Integer-only and O(log x) lookups, so whole ranges of x are cheap.
std::uint64_t floor_sum_by_levels(std::uint64_t x, const PrimeTable& table);

/// Counting argument at an odd integer x: the even numbers p · 2^α <= x
/// (α >= 1, p prime) against the (x - 1) / 2 evens below x.
struct CountingChain {
  std::uint64_t x = 0;
  std::uint64_t evens_available = 0;  ///< (x - 1) / 2
  std::uint64_t pi_x = 0;
  /// Σ_{p<=x} ⌊log2(x/p)⌋, p = 2 contributing ⌊log2(x/2)⌋.
  std::uint64_t s_exact = 0;
  /// Same count with the p = 2 term replaced by the pure powers of two
  /// 2, 4, ..., i.e. ⌊log2 x⌋; always s_exact + 1.
  std::uint64_t s_powers_of_two = 0;
  double frac_sum = 0.0;   ///< Σ {log(x/p) / log 2}
  double value_sum = 0.0;  ///< Σ log(x/p) / log 2
  double theta_x = 0.0;
};

/// Throws DomainError for even x or x < 3; OutOfRangeError beyond the table.
CountingChain counting_chain(std::uint64_t x, const PrimeTable& table);

struct ChainLink {
  std::string name;
  std::string relation;  ///< human-readable "lhs >= rhs" statement
  double lhs = 0.0;
  double rhs = 0.0;
  bool holds = false;
};

/// Relative tolerance (times π(x)) for links evaluated in floating point.
inline constexpr double kChainTolerance = 1e-9;

/// Each inequality in the counting proof, evaluated independently:
///   evens_vs_floor_sum     (x-1)/2 >= Σ⌊·⌋                      (integer, exact)
///   floor_decomposition    Σ⌊·⌋ >= Σ(·) - Σ{·}                   (equality up to rounding)
///   log_rearrangement      ((x-1)/2) log 2 + log 2 Σ{·} >= Σ(log x - log p)
///   pi_log_identity        Σ(log x - log p) >= π(x) log x - θ(x) (equality up to rounding)
///   fractional_bound       (((x-1)/2) log 2 + log 2 Σ{·} + θ(x)) / log x >= π(x)
///   sharp_form             (((x-1)/2) log 2 + θ(x)) / (log x - log 2) >= π(x)
///   ceiling_form           ⌈(((x-1)/2) log 2 + θ(x)) / log x⌉ >= π(x)
/// Every link is reported as lhs >= rhs; floating-point links allow
/// kChainTolerance · π(x) of slack.
std::vector<ChainLink> verify_proof_chain(std::uint64_t x, const PrimeTable& table);

}  // namespace pibound
