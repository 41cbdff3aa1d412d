#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "tourney/tournament.hpp"

namespace tourney {

__extension__ typedef unsigned __int128 uint128;
__extension__ typedef __int128 int128;

/// Exact C(n, k); throws InvalidArgument if the result exceeds 64 bits.
std::uint64_t binomial(std::uint64_t n, std::uint64_t k);

/// Exact density kept as an integer pair; value() is the float view.
struct Density {
  std::uint64_t numerator = 0;
  std::uint64_t denominator = 1;

  double value() const noexcept { return static_cast<double>(numerator) / static_cast<double>(denominator); }
  friend bool operator==(const Density&, const Density&) = default;
};

/// Witness counts for the reference arc u -> v. For each third vertex w:
///   o:  u -> w and v -> w        i: w -> u and w -> v
///   tr: u -> w and w -> v        c: v -> w and w -> u
struct ArcFlagCounts {
  std::uint64_t o = 0;
  std::uint64_t i = 0;
  std::uint64_t tr = 0;
  std::uint64_t c = 0;

  friend bool operator==(const ArcFlagCounts&, const ArcFlagCounts&) = default;
};

struct TripleCounts {
  std::uint64_t tr3 = 0;
  std::uint64_t c3 = 0;

  friend bool operator==(const TripleCounts&, const TripleCounts&) = default;
};

struct QuadCounts {
  std::uint64_t tr4 = 0;
  std::uint64_t w4 = 0;
  std::uint64_t l4 = 0;
  std::uint64_t r4 = 0;

  friend bool operator==(const QuadCounts&, const QuadCounts&) = default;
};

/// Exact order-3 (and, for n >= 4, order-4) counts with their binomials.
struct CountProfile {
  std::size_t n = 0;
  TripleCounts triples;
  std::uint64_t binom3 = 0;
  std::optional<QuadCounts> quads;
  std::uint64_t binom4 = 0;

  Density p_tr3() const { return {triples.tr3, binom3}; }
  Density p_c3() const { return {triples.c3, binom3}; }
  Density p_tr4() const { return {quads.value().tr4, binom4}; }
  Density p_w4() const { return {quads.value().w4, binom4}; }
  Density p_l4() const { return {quads.value().l4, binom4}; }
  Density p_r4() const { return {quads.value().r4, binom4}; }
};

struct SampledQuadDensities {
  std::uint64_t samples = 0;
  QuadCounts hits;
  double p_tr4 = 0, p_w4 = 0, p_l4 = 0, p_r4 = 0;
  double se_tr4 = 0, se_w4 = 0, se_l4 = 0, se_r4 = 0;
};

enum class FlagCombo { O, I, TR, C, OI, CTR };

inline constexpr std::array<FlagCombo, 6> kAllFlagCombos{FlagCombo::O,  FlagCombo::I,  FlagCombo::TR,
                                                         FlagCombo::C,  FlagCombo::OI, FlagCombo::CTR};

/// Lower-case short names: o, i, tr, c, oi, ctr.
std::string_view flag_name(FlagCombo f) noexcept;
/// Inverse of flag_name; throws InvalidArgument.
FlagCombo parse_flag(std::string_view name);
std::uint64_t flag_value(const ArcFlagCounts& a, FlagCombo f) noexcept;

/**
 * Law of a normalized per-arc flag statistic.
 *
 * Stored as a histogram over the integer witness count k (0..scale), so
 * value k / scale occurs multiplicity()[k] times. `scale` is n - 2. Exact
 * integer power sums are kept alongside the float moments.
 */
class EmpiricalDistribution {
 public:
  EmpiricalDistribution() = default;
  EmpiricalDistribution(std::uint64_t scale, std::vector<std::uint64_t> multiplicity);

  std::uint64_t scale() const noexcept { return scale_; }
  std::uint64_t size() const noexcept { return size_; }
  bool empty() const noexcept { return size_ == 0; }
  const std::vector<std::uint64_t>& multiplicity() const noexcept { return mult_; }
  double value_of(std::uint64_t k) const noexcept {
    return static_cast<double>(k) / static_cast<double>(scale_);
  }

  uint128 sum() const noexcept { return sum_; }
  uint128 sum_squares() const noexcept { return sum_sq_; }
  /// Sum over arcs of k (k - 1).
  uint128 sum_falling() const noexcept { return sum_falling_; }

  double mean() const;
  double second_moment() const;
  /// E[k (k-1)] / (scale (scale - 1)); NaN when scale < 2.
  double factorial_second_moment() const;

 private:
  std::uint64_t scale_ = 1;
  std::vector<std::uint64_t> mult_;
  std::uint64_t size_ = 0;
  uint128 sum_ = 0;
  uint128 sum_sq_ = 0;
  uint128 sum_falling_ = 0;
};

/// U(0, q) for q in (0, 1], or a point mass at p in [0, 1].
class ReferenceDistribution {
 public:
  enum class Kind { UniformOnInterval, PointMass };

  static ReferenceDistribution uniform(double q);
  static ReferenceDistribution point_mass(double p);

  Kind kind() const noexcept { return kind_; }
  double parameter() const noexcept { return param_; }
  double cdf(double x) const noexcept;
  double cdf_left(double x) const noexcept;

 private:
  ReferenceDistribution(Kind k, double p) : kind_(k), param_(p) {}
  Kind kind_;
  double param_;
};

/// All six per-arc laws of one tournament, indexed like kAllFlagCombos.
struct ArcFlagDistributions {
  std::array<EmpiricalDistribution, 6> by_combo;

  const EmpiricalDistribution& operator[](FlagCombo f) const { return by_combo[static_cast<std::size_t>(f)]; }
};

ArcFlagCounts arc_flag_counts(const Tournament& t, Vertex u, Vertex v);

TripleCounts triple_counts(const Tournament& t);
QuadCounts quad_counts(const Tournament& t);
CountProfile count_profile(const Tournament& t, bool with_quads = true);

/// Uniform 4-subsets drawn with replacement. Samples are split into fixed
/// blocks with per-block derived seeds, so results are seed-deterministic
/// regardless of the worker count.
SampledQuadDensities sampled_quad_densities(const Tournament& t, std::uint64_t samples, std::uint64_t seed);

EmpiricalDistribution arc_flag_distribution(const Tournament& t, FlagCombo combo);
ArcFlagDistributions all_arc_flag_distributions(const Tournament& t);

/// Same statistics over `samples` uniformly chosen arcs (with replacement).
ArcFlagDistributions sampled_arc_flag_distributions(const Tournament& t, std::uint64_t samples, std::uint64_t seed);

/// Sup-distance between the empirical and reference CDFs, evaluated on both
/// sides of every jump point of either.
double ks_distance(const EmpiricalDistribution& d, const ReferenceDistribution& r);

}  // namespace tourney
