#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "pibound/prime_table.hpp"

namespace pibound {

enum class BoundTag {
  theorem1_ceiling,  ///< ⌈(((x-1)/2) log 2 + θ(x)) / log x⌉
  theorem1_sharp,    ///< (((x-1)/2) log 2 + θ(x)) / (log x - log 2)
  geometric,         ///< pre-ceiling value times Σ_{j<=J} (log 2 / log x)^j
  asymptotic_13,     ///< (1 + log 2 / 2) x / log x
  linear_rest,       ///< (log 2 / 2) x + 2
  chebyshev_lower,   ///< c1 x / log x  (lower bound)
  chebyshev_upper,   ///< (6 c1 / 5) x / log x
  intro_upper,       ///< (x / log x)(1 + 3 / (2 log x))
  dusart_lower,      ///< x / (log x - 1)  (lower bound)
  dusart_upper,      ///< x / (log x - 1.1)
  li_gap,            ///< ((x-1)/2) log 2 + log x - x / log x  vs |π(x) - Li(x)|
};

inline constexpr std::array kAllBoundTags = {
    BoundTag::theorem1_ceiling, BoundTag::theorem1_sharp,   BoundTag::geometric,   BoundTag::asymptotic_13,
    BoundTag::linear_rest,      BoundTag::chebyshev_lower,  BoundTag::chebyshev_upper, BoundTag::intro_upper,
    BoundTag::dusart_lower,     BoundTag::dusart_upper,     BoundTag::li_gap,
};

std::string_view to_string(BoundTag tag);
std::optional<BoundTag> parse_bound_tag(std::string_view name);

/// What a margin measures: upper bounds compare bound - π, lower bounds
/// π - bound, and li_gap compares the gap bound against |π - Li|.
enum class BoundSense { upper, lower, gap };
BoundSense sense(BoundTag tag);

inline constexpr double kChebyshevC1 = 0.92129;
inline constexpr int kDefaultGeometricTerms = 64;

/// A bound tag plus its parameters. Parameters exist exactly for the tags
/// that use them: j_max for geometric, c1 for the two Chebyshev bounds.
class BoundKind {
 public:
  /// Uses default parameters where the tag needs them.
  explicit BoundKind(BoundTag tag);
  /// Throws DomainError if the parameters do not match the tag.
  BoundKind(BoundTag tag, std::optional<int> j_max, std::optional<double> c1);

  static BoundKind geometric(int j_max) { return {BoundTag::geometric, j_max, std::nullopt}; }

  [[nodiscard]] BoundTag tag() const { return tag_; }
  [[nodiscard]] std::optional<int> j_max() const { return j_max_; }
  [[nodiscard]] std::optional<double> c1() const { return c1_; }
  [[nodiscard]] std::string_view name() const { return to_string(tag_); }

  friend bool operator==(const BoundKind&, const BoundKind&) = default;

 private:
  BoundTag tag_;
  std::optional<int> j_max_;
  std::optional<double> c1_;
};

enum class ThresholdSource { stated, empirical, none };

/// Range of x on which a bound is claimed to hold. `from == nullopt` means
/// the claim is only "for sufficiently large x" with no explicit threshold.
struct AssertedRange {
  std::optional<double> from;
  ThresholdSource source = ThresholdSource::none;

  [[nodiscard]] bool contains(double x) const { return from && x >= *from; }
};

/// Thresholds as stated with each bound (2, 3, 5393, 60184, or none).
AssertedRange stated_range(BoundTag tag);
AssertedRange empirical_range(double from);

/// Smallest x at which the expression is defined; `open` excludes the point.
struct Domain {
  double from;
  bool open;
  [[nodiscard]] bool contains(double x) const { return open ? x > from : x >= from; }
};
Domain domain(BoundTag tag);

struct BoundReport {
  double x = 0.0;
  std::uint64_t pi_x = 0;
  double bound = 0.0;
  /// >= 0 exactly when the bound holds at x (see BoundSense).
  double margin = 0.0;
  bool holds = false;
  BoundKind kind{BoundTag::theorem1_ceiling};
  /// x lies in the range where the bound is claimed.
  bool asserted = false;
  /// Pre-ceiling value within 2^-40 of an integer (theorem1_ceiling only).
  bool near_tie = false;
};

inline constexpr double kNearTieWidth = 0x1p-40;

struct CeilingBound {
  double value;
  double pre_ceiling;
  bool near_tie;
};

struct GeometricBound {
  double value;
  /// first term · r^(j_max+1) / (1 - r), r = log 2 / log x.
  double remainder_bound;
};

struct ComparisonBound {
  BoundKind kind;
  double value;
  bool applicable;
};

/// (((x-1)/2) log 2 + θ(x)) / log x, the quantity inside the ceiling.
double theorem1_pre_ceiling(double x, double theta_x);

CeilingBound bound_theorem1_ceiling(double x, double theta_x);
double bound_theorem1_sharp(double x, double theta_x);
GeometricBound bound_geometric(double x, double theta_x, int j_max);
double bound_asymptotic_13(double x);
double bound_linear_rest(double x);
/// Right-hand side of the Li gap inequality.
double li_gap_rhs(double x);

std::vector<ComparisonBound> comparison_bounds(double x);

/// Value of the bound expression at x. li_gap returns its right-hand side.
double bound_value(const BoundKind& kind, double x, double theta_x);

BoundReport bound_li_gap(double x, std::uint64_t pi_x, double li_x);

/// Core evaluation from precomputed π(x), θ(x) and (for li_gap only) Li(x).
BoundReport evaluate(const BoundKind& kind, double x, std::uint64_t pi_x, double theta_x,
                     std::optional<double> li_x = std::nullopt, const std::optional<AssertedRange>& range = std::nullopt);

/// Evaluates against a table (Li by quadrature for li_gap).
BoundReport evaluate(const BoundKind& kind, double x, const PrimeTable& table);

}  // namespace pibound
