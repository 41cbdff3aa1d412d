#pragma once

// Brute-force references used by the unit and acceptance suites. Nothing here
// calls into the bit-parallel counting kernels; every count is taken from the
// definitions vertex by vertex.

#include <algorithm>
#include <array>
#include <cstdint>
#include <set>
#include <vector>

#include "tourney/counting.hpp"
#include "tourney/rng.hpp"
#include "tourney/tournament.hpp"

namespace oracle {

using tourney::Tournament;
using tourney::Vertex;

inline std::uint64_t choose(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  std::uint64_t r = 1;
  for (std::uint64_t i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
  return r;
}

inline tourney::TripleCounts triples(const Tournament& t) {
  tourney::TripleCounts c;
  const Vertex n = static_cast<Vertex>(t.order());
  for (Vertex a = 0; a < n; ++a)
    for (Vertex b = a + 1; b < n; ++b)
      for (Vertex d = b + 1; d < n; ++d) {
        const bool cyc = (t.beats(a, b) && t.beats(b, d) && t.beats(d, a)) ||
                         (t.beats(b, a) && t.beats(d, b) && t.beats(a, d));
        ++(cyc ? c.c3 : c.tr3);
      }
  return c;
}

/// Exhaustive classify4 over every 4-subset, through induced().
inline tourney::QuadCounts quads(const Tournament& t) {
  tourney::QuadCounts q;
  const Vertex n = static_cast<Vertex>(t.order());
  for (Vertex a = 0; a < n; ++a)
    for (Vertex b = a + 1; b < n; ++b)
      for (Vertex c = b + 1; c < n; ++c)
        for (Vertex d = c + 1; d < n; ++d) {
          const std::array<Vertex, 4> s{a, b, c, d};
          switch (tourney::classify4(tourney::induced(t, s))) {
            case tourney::SmallClass4::TR4: ++q.tr4; break;
            case tourney::SmallClass4::W4: ++q.w4; break;
            case tourney::SmallClass4::L4: ++q.l4; break;
            case tourney::SmallClass4::R4: ++q.r4; break;
          }
        }
  return q;
}

inline tourney::ArcFlagCounts arc_flags(const Tournament& t, Vertex u, Vertex v) {
  tourney::ArcFlagCounts a;
  for (Vertex w = 0; w < t.order(); ++w) {
    if (w == u || w == v) continue;
    const bool uw = t.beats(u, w), vw = t.beats(v, w);
    if (uw && vw) ++a.o;
    else if (!uw && !vw) ++a.i;
    else if (uw && !vw) ++a.tr;
    else ++a.c;
  }
  return a;
}

/// Per-arc falling-factorial sums Σ k(k-1) for o, i, tr, c, o+i, c+tr.
inline std::array<std::uint64_t, 6> falling_sums(const Tournament& t) {
  std::array<std::uint64_t, 6> s{};
  for (Vertex u = 0; u < t.order(); ++u)
    for (Vertex v = 0; v < t.order(); ++v) {
      if (u == v || !t.beats(u, v)) continue;
      const auto a = arc_flags(t, u, v);
      const std::array<std::uint64_t, 6> k{a.o, a.i, a.tr, a.c, a.o + a.i, a.c + a.tr};
      for (int j = 0; j < 6; ++j) s[j] += k[j] * (k[j] == 0 ? 0 : k[j] - 1);
    }
  return s;
}

inline Tournament random_tournament(std::size_t n, tourney::Rng& rng) {
  tourney::TournamentBuilder b(n);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) {
      if (rng.coin()) b.orient(u, v);
      else b.orient(v, u);
    }
  return std::move(b).finish();
}

inline Tournament relabel(const Tournament& t, const std::vector<Vertex>& perm) {
  tourney::TournamentBuilder b(t.order());
  for (Vertex u = 0; u < t.order(); ++u)
    for (Vertex v = u + 1; v < t.order(); ++v) {
      if (t.beats(u, v)) b.orient(perm[u], perm[v]);
      else b.orient(perm[v], perm[u]);
    }
  return std::move(b).finish();
}

inline Tournament flip_arc(const Tournament& t, Vertex u, Vertex v) {
  tourney::TournamentBuilder b(t.order());
  for (Vertex a = 0; a < t.order(); ++a)
    for (Vertex c = a + 1; c < t.order(); ++c) {
      if (t.beats(a, c)) b.orient(a, c);
      else b.orient(c, a);
    }
  if (t.beats(u, v)) b.orient(v, u);
  else b.orient(u, v);
  return std::move(b).finish();
}

// ---------------------------------------------------------------------------
// Isomorphism classes of small tournaments, by canonical augmentation.

struct Small {
  int n = 0;
  std::array<std::uint8_t, 8> out{};  // bit j of out[i]: i -> j

  bool beats(int i, int j) const { return (out[i] >> j) & 1U; }
  int score(int i) const { return __builtin_popcount(out[i]); }
};

// Minimum upper-triangle code over relabellings that sort vertices by score.
inline std::uint32_t canonical_code(const Small& s) {
  std::array<int, 8> p{};
  for (int i = 0; i < s.n; ++i) p[i] = i;
  std::sort(p.begin(), p.begin() + s.n, [&](int a, int b) { return std::pair(s.score(a), a) < std::pair(s.score(b), b); });
  std::uint32_t best = ~0U;
  // every permutation is visited; only score-sorted ones are coded
  auto key = [&](int v) { return s.score(v); };
  std::vector<int> perm(p.begin(), p.begin() + s.n);
  do {
    bool sorted = true;
    for (int i = 0; i + 1 < s.n && sorted; ++i) sorted = key(perm[i]) <= key(perm[i + 1]);
    if (!sorted) continue;
    std::uint32_t code = 0;
    int bit = 0;
    for (int i = 0; i < s.n; ++i)
      for (int j = i + 1; j < s.n; ++j, ++bit)
        if (s.beats(perm[i], perm[j])) code |= 1U << bit;
    best = std::min(best, code);
  } while (std::next_permutation(perm.begin(), perm.end(), [&](int a, int b) {
    return std::pair(key(a), a) < std::pair(key(b), b);
  }));
  return best;
}

/// One representative per isomorphism class of each order 1..max_order.
inline std::vector<std::vector<Small>> isomorphism_classes(int max_order) {
  std::vector<std::vector<Small>> by_order(max_order + 1);
  Small one;
  one.n = 1;
  by_order[1].push_back(one);
  for (int k = 1; k < max_order; ++k) {
    std::set<std::uint32_t> seen;
    for (const Small& base : by_order[k])
      for (std::uint32_t mask = 0; mask < (1U << k); ++mask) {
        Small s = base;
        s.n = k + 1;
        for (int i = 0; i < k; ++i) {
          if ((mask >> i) & 1U) s.out[k] |= static_cast<std::uint8_t>(1U << i);
          else s.out[i] |= static_cast<std::uint8_t>(1U << k);
        }
        if (seen.insert(canonical_code(s)).second) by_order[k + 1].push_back(s);
      }
  }
  return by_order;
}

inline Tournament to_tournament(const Small& s) {
  tourney::TournamentBuilder b(static_cast<std::size_t>(s.n));
  for (int i = 0; i < s.n; ++i)
    for (int j = i + 1; j < s.n; ++j) {
      if (s.beats(i, j)) b.orient(static_cast<Vertex>(i), static_cast<Vertex>(j));
      else b.orient(static_cast<Vertex>(j), static_cast<Vertex>(i));
    }
  return std::move(b).finish();
}

/// Every labelled orientation of K_4 (2^6 of them).
inline std::vector<Tournament> all_labelled_4() {
  std::vector<Tournament> out;
  const std::array<std::pair<Vertex, Vertex>, 6> pairs{{{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}};
  for (unsigned mask = 0; mask < 64; ++mask) {
    tourney::TournamentBuilder b(4);
    for (unsigned k = 0; k < 6; ++k) {
      if ((mask >> k) & 1U) b.orient(pairs[k].first, pairs[k].second);
      else b.orient(pairs[k].second, pairs[k].first);
    }
    out.push_back(std::move(b).finish());
  }
  return out;
}

/// Explicit isomorphism test between two 4-tournaments.
inline bool isomorphic4(const Tournament& a, const Tournament& b) {
  std::array<Vertex, 4> p{0, 1, 2, 3};
  do {
    bool ok = true;
    for (Vertex i = 0; i < 4 && ok; ++i)
      for (Vertex j = 0; j < 4 && ok; ++j)
        if (i != j && a.beats(i, j) != b.beats(p[i], p[j])) ok = false;
    if (ok) return true;
  } while (std::next_permutation(p.begin(), p.end()));
  return false;
}

}  // namespace oracle
