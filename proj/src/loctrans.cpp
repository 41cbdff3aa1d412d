#include "tourney/loctrans.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace tourney {

namespace {

using Row = std::vector<Word>;

Row in_row(const Tournament& t, Vertex v) {
  Row r(t.words_per_row());
  for (std::size_t w = 0; w < r.size(); ++w) r[w] = t.in_word(v, w);
  return r;
}

template <class F>
void for_each_bit(std::span<const Word> s, F&& f) {
  for (std::size_t w = 0; w < s.size(); ++w)
    for (Word x = s[w]; x; x &= x - 1) f(static_cast<Vertex>(w * kWordBits + std::countr_zero(x)));
}

// T[S] is transitive iff its restricted outdegrees are pairwise distinct.
bool acyclic_within(const Tournament& t, std::span<const Word> s) {
  std::size_t k = 0;
  for (Word x : s) k += static_cast<std::size_t>(std::popcount(x));
  std::vector<char> seen(k, 0);
  bool ok = true;
  for_each_bit(s, [&](Vertex y) {
    if (!ok) return;
    const std::size_t d = popcount_and(t.out_row(y), s);
    if (seen[d]) ok = false;
    else seen[d] = 1;
  });
  return ok;
}

// First c > after in S with out_of -> c -> in_of.
std::optional<Vertex> first_between(const Tournament& t, Vertex out_of, Vertex in_of, std::span<const Word> s,
                                    Vertex after) {
  const auto out = t.out_row(out_of);
  const std::size_t start = (after + 1) / kWordBits;
  for (std::size_t w = start; w < s.size(); ++w) {
    Word x = out[w] & t.in_word(in_of, w) & s[w];
    if (w == start) x &= ~Word{0} << ((after + 1) % kWordBits);
    if (x) return static_cast<Vertex>(w * kWordBits + std::countr_zero(x));
  }
  return std::nullopt;
}

// Lexicographically least 3-cycle (a < b < c) inside T[S].
std::optional<std::array<Vertex, 3>> least_cycle_within(const Tournament& t, std::span<const Word> s) {
  std::vector<Vertex> members;
  for_each_bit(s, [&](Vertex y) { members.push_back(y); });
  for (std::size_t ia = 0; ia < members.size(); ++ia) {
    const Vertex a = members[ia];
    for (std::size_t ib = ia + 1; ib < members.size(); ++ib) {
      const Vertex b = members[ib];
      // a -> b -> c -> a, or a -> c -> b -> a
      const auto c = t.beats(a, b) ? first_between(t, b, a, s, b) : first_between(t, a, b, s, b);
      if (c) return std::array<Vertex, 3>{a, b, *c};
    }
  }
  return std::nullopt;
}

Obstruction make_obstruction(ObstructionKind kind, Vertex apex, const std::array<Vertex, 3>& cycle) {
  Obstruction o;
  o.kind = kind;
  o.apex = apex;
  o.vertices = {apex, cycle[0], cycle[1], cycle[2]};
  std::sort(o.vertices.begin(), o.vertices.end());
  return o;
}

// Orders a set inducing a transitive subtournament so that earlier vertices
// beat later ones (descending restricted outdegree). A set that is not
// transitively ordered is reported instead of silently mis-sorted.
std::vector<Vertex> sort_by_beats(const Tournament& t, std::vector<Vertex> vs) {
  Row s(t.words_per_row(), 0);
  for (Vertex v : vs) s[v / kWordBits] |= Word{1} << (v % kWordBits);
  std::vector<std::pair<std::size_t, Vertex>> keyed;
  keyed.reserve(vs.size());
  for (Vertex v : vs) keyed.emplace_back(popcount_and(t.out_row(v), s), v);
  std::sort(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) { return a.first > b.first; });
  for (std::size_t j = 0; j < vs.size(); ++j) vs[j] = keyed[j].second;
  for (std::size_t j = 0; j + 1 < vs.size(); ++j)
    if (!t.beats(vs[j], vs[j + 1]))
      throw Error(Errc::NotLocallyTransitive, "neighbourhood of the start vertex is not transitively ordered");
  return vs;
}

void require_permutation(const CyclicOrder& order, std::size_t n) {
  if (order.order.size() != n)
    throw Error(Errc::InvalidOrder, "order lists " + std::to_string(order.order.size()) + " vertices, expected " +
                                        std::to_string(n));
  std::vector<char> seen(n, 0);
  for (Vertex v : order.order) {
    if (v >= n || seen[v]) throw Error(Errc::InvalidOrder, "order is not a permutation of the vertices");
    seen[v] = 1;
  }
}

}  // namespace

const char* to_string(ObstructionKind k) noexcept { return k == ObstructionKind::W4 ? "W4" : "L4"; }

NotLocallyTransitiveError::NotLocallyTransitiveError(const Obstruction& o)
    : Error(Errc::NotLocallyTransitive,
            std::string(to_string(o.kind)) + " at apex " + std::to_string(o.apex) + " on {" +
                std::to_string(o.vertices[0]) + "," + std::to_string(o.vertices[1]) + "," +
                std::to_string(o.vertices[2]) + "," + std::to_string(o.vertices[3]) + "}"),
      obstruction_(o) {}

std::optional<Obstruction> find_obstruction(const Tournament& t) {
  for (Vertex v = 0; v < t.order(); ++v) {
    const auto out = t.out_row(v);
    const Row in = in_row(t, v);
    std::optional<std::array<Vertex, 3>> w4;
    std::optional<std::array<Vertex, 3>> l4;
    if (!acyclic_within(t, out)) w4 = least_cycle_within(t, out);
    if (!acyclic_within(t, in)) l4 = least_cycle_within(t, in);
    if (w4 && (!l4 || *w4 < *l4)) return make_obstruction(ObstructionKind::W4, v, *w4);
    if (l4) return make_obstruction(ObstructionKind::L4, v, *l4);
  }
  return std::nullopt;
}

bool is_locally_transitive(const Tournament& t) { return !find_obstruction(t).has_value(); }

bool out_neighbourhoods_are_forward_intervals(const Tournament& t, const CyclicOrder& order) {
  const std::size_t n = t.order();
  if (order.order.size() != n) return false;
  for (std::size_t p = 0; p < n; ++p) {
    const Vertex v = order.order[p];
    for (std::size_t d = 1; d <= t.outdegree(v); ++d)
      if (!t.beats(v, order.order[(p + d) % n])) return false;
  }
  return true;
}

CyclicOrder brouwer_order(const Tournament& t) {
  if (auto obstruction = find_obstruction(t)) throw NotLocallyTransitiveError(*obstruction);
  CyclicOrder result;
  result.order.reserve(t.order());
  result.order.push_back(0);
  for (Vertex v : sort_by_beats(t, t.out_neighbours(0))) result.order.push_back(v);
  for (Vertex v : sort_by_beats(t, t.in_neighbours(0))) result.order.push_back(v);
  if (!out_neighbourhoods_are_forward_intervals(t, result))
    throw std::logic_error("brouwer_order: interval property violated on a locally transitive tournament");
  return result;
}

std::vector<Vertex> carousel_isomorphism(const Tournament& t) {
  const std::size_t n = t.order();
  if (n % 2 == 0) throw Error(Errc::EvenOrder, "carousel isomorphism needs odd order, got " + std::to_string(n));
  const std::size_t half = (n - 1) / 2;
  for (Vertex v = 0; v < n; ++v)
    if (t.outdegree(v) != half)
      throw Error(Errc::NotBalanced, "vertex " + std::to_string(v) + " has outdegree " +
                                         std::to_string(t.outdegree(v)) + ", expected " + std::to_string(half));
  const CyclicOrder order = brouwer_order(t);
  std::vector<Vertex> phi(n);
  for (std::size_t j = 0; j < n; ++j) phi[order.order[j]] = static_cast<Vertex>(j);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = 0; v < n; ++v) {
      if (u == v) continue;
      const std::size_t gap = (phi[v] + n - phi[u]) % n;
      if (t.beats(u, v) != (gap >= 1 && gap <= half))
        throw std::logic_error("carousel_isomorphism: recovered map is not an isomorphism");
    }
  return phi;
}

double balance_deficiency(const Tournament& t, double eps) {
  if (!(eps > 0.0)) throw Error(Errc::InvalidArgument, "eps must be positive");
  const double n = static_cast<double>(t.order());
  std::size_t off = 0;
  for (Vertex v = 0; v < t.order(); ++v) {
    const double dev = std::abs(2.0 * static_cast<double>(t.outdegree(v)) - (n - 1.0)) / 2.0;
    if (dev > eps * n) ++off;
  }
  return static_cast<double>(off) / n;
}

double flip_distance_given_order(const Tournament& t, const CyclicOrder& order) {
  const std::size_t n = t.order();
  if (n % 2 == 0) throw Error(Errc::EvenOrder, "flip distance needs odd order, got " + std::to_string(n));
  require_permutation(order, n);
  if (n == 1) return 0.0;
  const std::size_t half = (n - 1) / 2;
  std::uint64_t backward = 0;
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t d = 1; d <= half; ++d)
      if (t.beats(order.order[(p + d) % n], order.order[p])) ++backward;
  const std::uint64_t pairs = n * (n - 1) / 2;
  return static_cast<double>(std::min(backward, pairs - backward)) / static_cast<double>(pairs);
}

}  // namespace tourney
