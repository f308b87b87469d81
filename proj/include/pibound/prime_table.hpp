#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "pibound/compensated.hpp"

namespace pibound {

/// Default upper limit accepted by PrimeTable::build (memory cap).
inline constexpr std::uint64_t kDefaultMaxLimit = 100'000'000;

/// Odd residues per sieve segment.
inline constexpr std::size_t kSegmentOdds = std::size_t{1} << 20;

struct SieveOptions {
  std::uint64_t max_limit = kDefaultMaxLimit;
  SummationMode summation = SummationMode::kahan;
};

/*!
  Ordered primes up to a sieve limit, with running θ prefix sums.

  Entry i of the θ prefix holds log p_0 + ... + log p_i as a compensated
  (value, correction) pair; π(p_i) = i + 1 is implicit in the index. A built
  table is immutable, so const access from any number of threads is safe.

  Real arguments act on primes p <= x, so π and θ are step functions that
  jump at each prime. Arguments in [0, 2) give the empty sums 0.

  θ accuracy: each log p carries at most half an ulp of error and the
  accumulation adds O(ε) relative, so |theta(x) - θ(x)| <= 2·π(x)·ε·θ(x)
  is a loose bound (in practice the error is a few ulps of θ(x)).
*/
class PrimeTable {
 public:
  /// Segmented odd-only sieve of Eratosthenes. Throws DomainError for
  /// limit < 2 and CapacityError for limit > options.max_limit.
  static PrimeTable build(std::uint64_t limit, const SieveOptions& options = {});

  /// Adopts an externally produced prime list (e.g. a cache file). The list
  /// must be exactly the primes <= limit; only ordering and bounds are checked.
  static PrimeTable from_primes(std::uint64_t limit, std::vector<std::uint32_t> primes,
                                SummationMode summation = SummationMode::kahan);

  [[nodiscard]] std::uint64_t limit() const { return limit_; }
  [[nodiscard]] std::span<const std::uint32_t> primes() const { return primes_; }
  [[nodiscard]] std::span<const DoubleDouble> theta_prefix() const { return theta_prefix_; }
  [[nodiscard]] SummationMode summation() const { return summation_; }
  [[nodiscard]] std::size_t size() const { return primes_.size(); }

  /// Number of primes <= x.
  [[nodiscard]] std::uint64_t pi(double x) const;
  /// Σ log p over primes p <= x.
  [[nodiscard]] double theta(double x) const;
  /// Primes p with lo < p <= hi, ascending.
  [[nodiscard]] std::span<const std::uint32_t> primes_in(double lo, double hi) const;

  /// Index one past the last prime <= x (== pi(x)); no range check.
  [[nodiscard]] std::size_t count_upto(double x) const;

  friend bool operator==(const PrimeTable&, const PrimeTable&) = default;

 private:
  PrimeTable() = default;
  void fill_theta();
  void check_query(double x) const;

  std::uint64_t limit_ = 0;
  SummationMode summation_ = SummationMode::kahan;
  std::vector<std::uint32_t> primes_;
  std::vector<DoubleDouble> theta_prefix_;
};

}  // namespace pibound
