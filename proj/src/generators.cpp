#include "tourney/generators.hpp"

#include <cmath>
#include <string>

#include "tourney/error.hpp"
#include "tourney/rng.hpp"

namespace tourney {

Tournament carousel(std::size_t m) {
  if (m % 2 == 0) throw Error(Errc::EvenOrder, "carousel needs odd order, got " + std::to_string(m));
  const std::size_t half = (m - 1) / 2;
  TournamentBuilder b(m);
  for (std::size_t x = 0; x < m; ++x)
    for (std::size_t i = 1; i <= half; ++i) b.orient(static_cast<Vertex>(x), static_cast<Vertex>((x + i) % m));
  return std::move(b).finish();
}

Tournament transitive(std::size_t n) {
  TournamentBuilder b(n);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) b.orient(u, v);
  return std::move(b).finish();
}

Tournament random_uniform(std::size_t n, std::uint64_t seed) {
  Rng rng(seed);
  TournamentBuilder b(n);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) {
      if (rng.coin()) b.orient(u, v);
      else b.orient(v, u);
    }
  return std::move(b).finish();
}

std::vector<std::size_t> layer_sizes(std::size_t n, double t) {
  if (!(t > 0.0 && t < 1.0)) throw Error(Errc::InvalidRatio, "shrink ratio must lie in (0,1), got " + std::to_string(t));
  if (n == 0) throw Error(Errc::InvalidArgument, "layered construction needs at least one vertex");
  std::vector<std::size_t> sizes{n};
  for (;;) {
    const std::size_t cur = sizes.back();
    const auto next = static_cast<std::size_t>(std::floor(t * static_cast<double>(cur) + 0.5));
    if (next == 0 || next == cur) break;
    sizes.push_back(next);
  }
  return sizes;
}

Tournament layered(const LayeredSpec& spec) {
  const std::vector<std::size_t> sizes = layer_sizes(spec.n, spec.t);
  // depth[v] = largest i with v < |A_i|
  std::vector<std::uint32_t> depth(spec.n, 0);
  for (std::size_t i = 1; i < sizes.size(); ++i)
    for (std::size_t v = 0; v < sizes[i]; ++v) depth[v] = static_cast<std::uint32_t>(i);

  Rng rng(spec.seed);
  TournamentBuilder b(spec.n);
  for (Vertex u = 0; u < spec.n; ++u)
    for (Vertex v = u + 1; v < spec.n; ++v) {
      if (depth[u] != depth[v]) {
        // prefixes: the lower index is never shallower
        b.orient(u, v);
      } else if (rng.coin()) {
        b.orient(u, v);
      } else {
        b.orient(v, u);
      }
    }
  return std::move(b).finish();
}

Tournament digraphon_from_points(std::span<const double> x) {
  for (std::size_t i = 0; i < x.size(); ++i)
    if (!(x[i] >= 0.0 && x[i] < 1.0))
      throw Error(Errc::InvalidArgument, "coordinate " + std::to_string(i) + " outside [0,1)");
  TournamentBuilder b(x.size());
  for (Vertex u = 0; u < x.size(); ++u)
    for (Vertex v = u + 1; v < x.size(); ++v) {
      double d = x[u] - x[v];
      if (d < 0.0) d += 1.0;
      // d == 1/2 is the tie; u < v, so u wins it
      if (d <= 0.5) b.orient(u, v);
      else b.orient(v, u);
    }
  return std::move(b).finish();
}

Tournament digraphon_sample(std::size_t n, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<double> x(n);
  for (double& xi : x) xi = rng.unit();
  return digraphon_from_points(x);
}

}  // namespace tourney
