#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "tourney/tournament.hpp"

namespace tourney {

/// Parameters of the nested-layer construction: N vertices, shrink ratio t
/// in (0, 1), and the seed for the in-layer coin flips.
struct LayeredSpec {
  std::size_t n = 1;
  double t = 0.5;
  std::uint64_t seed = 0;
};

/// Carousel R_m on m = 2k+1 vertices: x beats x+1, ..., x+k (mod m).
Tournament carousel(std::size_t m);

/// Transitive tournament: u beats v iff u < v.
Tournament transitive(std::size_t n);

/// Coin-flip tournament. Pairs u < v are visited lexicographically and the
/// next coin decides u -> v (heads) or v -> u.
Tournament random_uniform(std::size_t n, std::uint64_t seed);

/**
 * Sizes |A_0| = N, |A_1|, ... of the nested prefixes used by layered().
 *
 * Each size is round-half-up(t * previous). The chain stops before a size
 * that would be 0 or equal to its predecessor.
 */
std::vector<std::size_t> layer_sizes(std::size_t n, double t);

/// Nested-layer tournament. A_i is the prefix [0, |A_i|) and every vertex of
/// A_i beats every vertex of A_{i-1} \ A_i. Pairs inside one difference set
/// (or inside the final core) get coins in lexicographic pair order.
Tournament layered(const LayeredSpec& spec);

/// Circular-kernel sample: u -> v iff (x_u - x_v) mod 1 < 1/2, with x drawn
/// uniformly from [0, 1) in vertex order.
Tournament digraphon_sample(std::size_t n, std::uint64_t seed);

/// Same rule on caller-supplied coordinates in [0, 1). A difference of
/// exactly 0 or 1/2 is a tie, broken toward the lower index.
Tournament digraphon_from_points(std::span<const double> x);

}  // namespace tourney
