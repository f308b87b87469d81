#include "pibound/table_cache.hpp"

#include <algorithm>
#include <array>
#include <fstream>
#include <istream>
#include <ostream>
#include <string>
#include <vector>

#include "pibound/error.hpp"

namespace pibound {
namespace {

template <typename T>
void put_le(std::ostream& out, T v) {
  std::array<char, sizeof(T)> buf{};
  for (std::size_t i = 0; i < sizeof(T); ++i) buf[i] = static_cast<char>((v >> (8 * i)) & 0xFF);
  out.write(buf.data(), buf.size());
}

template <typename T>
T get_le(std::istream& in) {
  std::array<unsigned char, sizeof(T)> buf{};
  if (!in.read(reinterpret_cast<char*>(buf.data()), buf.size())) throw FormatError("truncated prime cache");
  T v = 0;
  for (std::size_t i = 0; i < sizeof(T); ++i) v |= static_cast<T>(buf[i]) << (8 * i);
  return v;
}

}  // namespace

void write_table(std::ostream& out, const PrimeTable& table) {
  out.write(kCacheMagic, sizeof kCacheMagic);
  put_le<std::uint32_t>(out, kCacheVersion);
  put_le<std::uint64_t>(out, table.limit());
  put_le<std::uint64_t>(out, table.size());
  std::uint32_t prev = 0;
  for (const std::uint32_t p : table.primes()) {
    const std::uint32_t gap = p - prev;
    if (gap < kGapEscape) {
      out.put(static_cast<char>(gap));
    } else {
      out.put(static_cast<char>(kGapEscape));
      put_le<std::uint32_t>(out, gap);
    }
    prev = p;
  }
  if (!out) throw FormatError("failed writing prime cache");
}

PrimeTable read_table(std::istream& in, SummationMode summation) {
  char magic[4] = {};
  if (!in.read(magic, sizeof magic)) throw FormatError("truncated prime cache");
  if (!std::equal(magic, magic + 4, kCacheMagic)) throw FormatError("bad prime cache magic");
  const auto version = get_le<std::uint32_t>(in);
  if (version != kCacheVersion) throw FormatError("unsupported prime cache version " + std::to_string(version));
  const auto limit = get_le<std::uint64_t>(in);
  const auto count = get_le<std::uint64_t>(in);
  if (count > limit) throw FormatError("prime count exceeds limit");

  std::vector<std::uint32_t> primes;
  primes.reserve(static_cast<std::size_t>(count));
  std::uint64_t value = 0;
  for (std::uint64_t i = 0; i < count; ++i) {
    const int c = in.get();
    if (c == std::char_traits<char>::eof()) throw FormatError("truncated prime cache");
    std::uint64_t gap = static_cast<unsigned char>(c);
    if (gap == kGapEscape) gap = get_le<std::uint32_t>(in);
    if (gap == 0) throw FormatError("zero gap in prime cache");
    value += gap;
    if (value > limit) throw FormatError("prime beyond limit in cache");
    primes.push_back(static_cast<std::uint32_t>(value));
  }
  if (in.peek() != std::char_traits<char>::eof()) throw FormatError("trailing bytes in prime cache");
  return PrimeTable::from_primes(limit, std::move(primes), summation);
}

void save_table(const std::filesystem::path& path, const PrimeTable& table) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw FormatError("cannot open " + path.string() + " for writing");
  write_table(out, table);
}

PrimeTable load_table(const std::filesystem::path& path, SummationMode summation) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FormatError("cannot open " + path.string());
  return read_table(in, summation);
}

std::filesystem::path cache_path(const std::filesystem::path& dir, std::uint64_t limit) {
  return dir / ("primes_" + std::to_string(limit) + ".pibt");
}

PrimeTable load_or_build(const std::filesystem::path& dir, std::uint64_t limit, const SieveOptions& options) {
  const auto path = cache_path(dir, limit);
  std::error_code ec;
  if (std::filesystem::exists(path, ec)) {
    try {
      PrimeTable cached = load_table(path, options.summation);
      if (cached.limit() == limit) return cached;
    } catch (const FormatError&) {
      // rebuilt below
    }
  }
  PrimeTable table = PrimeTable::build(limit, options);
  std::filesystem::create_directories(dir, ec);
  try {
    save_table(path, table);
  } catch (const FormatError&) {
    // read-only cache dir: the table is still usable
  }
  return table;
}

}  // namespace pibound
