#pragma once

// Independent reference implementations used only by the tests. None of
// these share code with the library paths they check.

#include <cmath>
#include <cstdint>
#include <vector>

namespace oracle {

inline bool is_prime_trial(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

inline std::vector<std::uint32_t> primes_trial(std::uint32_t limit) {
  std::vector<std::uint32_t> out;
  for (std::uint32_t n = 2; n <= limit; ++n) {
    if (is_prime_trial(n)) out.push_back(n);
  }
  return out;
}

/// Whole-range (unsegmented, all integers) Eratosthenes.
inline std::vector<std::uint32_t> primes_plain_sieve(std::uint32_t limit) {
  std::vector<char> comp(static_cast<std::size_t>(limit) + 1, 0);
  std::vector<std::uint32_t> out;
  for (std::uint64_t i = 2; i <= limit; ++i) {
    if (comp[i]) continue;
    out.push_back(static_cast<std::uint32_t>(i));
    for (std::uint64_t j = i * i; j <= limit; j += i) comp[j] = 1;
  }
  return out;
}

/// Plain left-to-right Σ log p.
inline double theta_naive(const std::vector<std::uint32_t>& primes, double x) {
  double s = 0.0;
  for (const auto p : primes) {
    if (p > x) break;
    s += std::log(static_cast<double>(p));
  }
  return s;
}

/// Non-adaptive composite Simpson for ∫_a^b dt / log t.
inline double li_composite_simpson(double a, double b, int panels) {
  const double h = (b - a) / panels;
  double odd = 0.0;
  double even = 0.0;
  for (int i = 1; i < panels; ++i) {
    const double f = 1.0 / std::log(a + i * h);
    (i % 2 ? odd : even) += f;
  }
  return h / 3.0 * (1.0 / std::log(a) + 1.0 / std::log(b) + 4.0 * odd + 2.0 * even);
}

}  // namespace oracle
