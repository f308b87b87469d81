#include "pibound/prime_table.hpp"

#include <algorithm>
#include <functional>
#include <cmath>
#include <limits>
#include <string>

#include "pibound/error.hpp"

namespace pibound {
namespace {

// Plain sieve for the base primes up to sqrt(limit).
std::vector<std::uint32_t> small_primes(std::uint32_t n) {
  std::vector<bool> composite(n + 1, false);
  std::vector<std::uint32_t> out;
  for (std::uint32_t i = 2; i <= n; ++i) {
    if (composite[i]) continue;
    out.push_back(i);
    for (std::uint64_t j = std::uint64_t{i} * i; j <= n; j += i) composite[j] = true;
  }
  return out;
}

std::uint32_t isqrt(std::uint64_t n) {
  auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(n)));
  while (r * r > n) --r;
  while ((r + 1) * (r + 1) <= n) ++r;
  return static_cast<std::uint32_t>(r);
}

}  // namespace

PrimeTable PrimeTable::build(std::uint64_t limit, const SieveOptions& options) {
  if (limit < 2) throw DomainError("sieve limit must be at least 2");
  const std::uint64_t cap = std::min<std::uint64_t>(options.max_limit, std::numeric_limits<std::uint32_t>::max());
  if (limit > cap) {
    throw CapacityError("sieve limit " + std::to_string(limit) + " exceeds cap " + std::to_string(cap));
  }

  PrimeTable table;
  table.limit_ = limit;
  table.summation_ = options.summation;
  // Rough upper estimate of π(limit) to avoid regrowth.
  const double ln = std::log(static_cast<double>(limit));
  table.primes_.reserve(static_cast<std::size_t>(1.26 * static_cast<double>(limit) / ln) + 8);
  table.primes_.push_back(2);

  const std::vector<std::uint32_t> base = small_primes(isqrt(limit));

  // Index i stands for the odd number 2i + 1; index 0 (the number 1) is skipped.
  const std::uint64_t last_index = (limit - 1) / 2;
  std::vector<std::uint8_t> segment(kSegmentOdds);
  for (std::uint64_t seg_lo = 1; seg_lo <= last_index; seg_lo += kSegmentOdds) {
    const std::uint64_t seg_hi = std::min<std::uint64_t>(seg_lo + kSegmentOdds, last_index + 1);
    const std::size_t len = static_cast<std::size_t>(seg_hi - seg_lo);
    std::fill_n(segment.begin(), len, std::uint8_t{1});

    const std::uint64_t first_odd = 2 * seg_lo + 1;
    const std::uint64_t last_odd = 2 * (seg_hi - 1) + 1;
    for (std::size_t k = 1; k < base.size(); ++k) {
      const std::uint64_t q = base[k];
      const std::uint64_t sq = q * q;
      if (sq > last_odd) break;
      std::uint64_t m = std::max(sq, (first_odd + q - 1) / q * q);
      if (m % 2 == 0) m += q;
      for (std::uint64_t i = (m - 1) / 2 - seg_lo; i < len; i += q) segment[i] = 0;
    }
    for (std::size_t i = 0; i < len; ++i) {
      if (segment[i]) table.primes_.push_back(static_cast<std::uint32_t>(2 * (seg_lo + i) + 1));
    }
  }
  table.primes_.shrink_to_fit();
  table.fill_theta();
  return table;
}

PrimeTable PrimeTable::from_primes(std::uint64_t limit, std::vector<std::uint32_t> primes, SummationMode summation) {
  if (limit < 2) throw DomainError("sieve limit must be at least 2");
  if (limit > std::numeric_limits<std::uint32_t>::max()) throw CapacityError("limit exceeds 32-bit prime storage");
  if (primes.empty() || primes.front() != 2) throw FormatError("prime list must start at 2");
  if (primes.back() > limit) throw FormatError("prime list exceeds its limit");
  if (std::adjacent_find(primes.begin(), primes.end(), std::greater_equal<>{}) != primes.end()) {
    throw FormatError("prime list is not strictly increasing");
  }
  PrimeTable table;
  table.limit_ = limit;
  table.summation_ = summation;
  table.primes_ = std::move(primes);
  table.fill_theta();
  return table;
}

void PrimeTable::fill_theta() {
  theta_prefix_.clear();
  theta_prefix_.reserve(primes_.size());
  CompensatedSum acc(summation_);
  for (const std::uint32_t p : primes_) {
    acc += std::log(static_cast<double>(p));
    theta_prefix_.push_back(acc.pair());
  }
}

void PrimeTable::check_query(double x) const {
  if (std::isnan(x) || x < 0.0) throw DomainError("argument must be a nonnegative real");
  if (x > static_cast<double>(limit_)) {
    throw OutOfRangeError("argument " + std::to_string(x) + " exceeds sieve limit " + std::to_string(limit_));
  }
}

std::size_t PrimeTable::count_upto(double x) const {
  if (!(x >= 2.0)) return 0;
  const auto n = static_cast<std::uint64_t>(std::floor(x));
  if (n >= primes_.back()) return primes_.size();
  const auto it = std::upper_bound(primes_.begin(), primes_.end(), static_cast<std::uint32_t>(n));
  return static_cast<std::size_t>(it - primes_.begin());
}

std::uint64_t PrimeTable::pi(double x) const {
  check_query(x);
  return count_upto(x);
}

double PrimeTable::theta(double x) const {
  check_query(x);
  const std::size_t n = count_upto(x);
  return n == 0 ? 0.0 : theta_prefix_[n - 1].value();
}

std::span<const std::uint32_t> PrimeTable::primes_in(double lo, double hi) const {
  check_query(hi);
  if (std::isnan(lo)) throw DomainError("lower bound is NaN");
  const std::size_t end = count_upto(hi);
  const std::size_t begin = std::min(count_upto(lo), end);
  return std::span<const std::uint32_t>(primes_).subspan(begin, end - begin);
}

}  // namespace pibound
