#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>

#include "pibound/prime_table.hpp"

namespace pibound {

// On-disk layout (little-endian):
//   "PIBT" | version u32 | limit u64 | count u64 | gaps...
// Each gap p_i - p_{i-1} (p_{-1} = 0) is one byte, or 0xFF followed by a u32.
inline constexpr char kCacheMagic[4] = {'P', 'I', 'B', 'T'};
inline constexpr std::uint32_t kCacheVersion = 1;
inline constexpr std::uint8_t kGapEscape = 0xFF;

void write_table(std::ostream& out, const PrimeTable& table);
/// Throws FormatError on bad magic, version mismatch, truncation or an
/// inconsistent prime list.
PrimeTable read_table(std::istream& in, SummationMode summation = SummationMode::kahan);

void save_table(const std::filesystem::path& path, const PrimeTable& table);
PrimeTable load_table(const std::filesystem::path& path, SummationMode summation = SummationMode::kahan);

/// Cache file name for a given limit inside a cache directory.
std::filesystem::path cache_path(const std::filesystem::path& dir, std::uint64_t limit);

/// Loads `dir/primes_<limit>.pibt` if present and valid, otherwise sieves and
/// writes it. An unreadable or stale file is rebuilt, never trusted.
PrimeTable load_or_build(const std::filesystem::path& dir, std::uint64_t limit, const SieveOptions& options = {});

}  // namespace pibound
