#include "tourney/tournament.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "tourney/error.hpp"

namespace tourney {

namespace {

std::string pair_str(std::size_t u, std::size_t v) {
  return "{" + std::to_string(u) + "," + std::to_string(v) + "}";
}

#ifndef NDEBUG
// Explicit isomorphism search against one representative of each class.
bool isomorphic4(const Tournament& t, const Tournament& rep) {
  std::array<Vertex, 4> p{0, 1, 2, 3};
  do {
    bool ok = true;
    for (Vertex a = 0; a < 4 && ok; ++a)
      for (Vertex b = 0; b < 4 && ok; ++b)
        if (a != b && t.beats(a, b) != rep.beats(p[a], p[b])) ok = false;
    if (ok) return true;
  } while (std::next_permutation(p.begin(), p.end()));
  return false;
}

const Tournament& representative(SmallClass4 c) {
  using A = std::pair<Vertex, Vertex>;
  static const Tournament tr4 = from_arc_list(4, std::vector<A>{{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
  static const Tournament w4 = from_arc_list(4, std::vector<A>{{0, 1}, {0, 2}, {0, 3}, {1, 2}, {2, 3}, {3, 1}});
  static const Tournament l4 = from_arc_list(4, std::vector<A>{{1, 0}, {2, 0}, {3, 0}, {1, 2}, {2, 3}, {3, 1}});
  static const Tournament r4 = from_arc_list(4, std::vector<A>{{0, 1}, {0, 2}, {1, 2}, {1, 3}, {2, 3}, {3, 0}});
  switch (c) {
    case SmallClass4::TR4: return tr4;
    case SmallClass4::W4: return w4;
    case SmallClass4::L4: return l4;
    case SmallClass4::R4: return r4;
  }
  return tr4;
}
#endif

}  // namespace

Tournament::Tournament(std::size_t n, std::vector<Word> rows)
    : n_(n), words_(words_for(n)), rows_(std::move(rows)), outdeg_(n) {
  for (std::size_t u = 0; u < n_; ++u) {
    std::size_t d = 0;
    for (std::size_t w = 0; w < words_; ++w) d += static_cast<std::size_t>(std::popcount(rows_[u * words_ + w]));
    outdeg_[u] = static_cast<std::uint32_t>(d);
  }
}

std::vector<Vertex> Tournament::out_neighbours(Vertex u) const {
  std::vector<Vertex> out;
  out.reserve(outdeg_[u]);
  for (std::size_t w = 0; w < words_; ++w)
    for (Word x = rows_[u * words_ + w]; x; x &= x - 1)
      out.push_back(static_cast<Vertex>(w * kWordBits + std::countr_zero(x)));
  return out;
}

std::vector<Vertex> Tournament::in_neighbours(Vertex u) const {
  std::vector<Vertex> in;
  in.reserve(indegree(u));
  for (std::size_t w = 0; w < words_; ++w)
    for (Word x = in_word(u, w); x; x &= x - 1)
      in.push_back(static_cast<Vertex>(w * kWordBits + std::countr_zero(x)));
  return in;
}

TournamentBuilder::TournamentBuilder(std::size_t n) : n_(n), words_(words_for(n)), rows_(n * words_for(n), 0) {
  if (n == 0) throw Error(Errc::InvalidArgument, "tournament order must be at least 1");
}

Tournament TournamentBuilder::finish() && {
  for (std::size_t u = 0; u < n_; ++u) {
    if (bit(static_cast<Vertex>(u), static_cast<Vertex>(u)))
      throw Error(Errc::SelfLoop, "vertex " + std::to_string(u) + " beats itself");
    for (std::size_t v = u + 1; v < n_; ++v) {
      const bool uv = bit(static_cast<Vertex>(u), static_cast<Vertex>(v));
      const bool vu = bit(static_cast<Vertex>(v), static_cast<Vertex>(u));
      if (uv && vu) throw Error(Errc::ConflictingArc, "both orientations given for pair " + pair_str(u, v));
      if (!uv && !vu) throw Error(Errc::MissingArc, "no orientation for pair " + pair_str(u, v));
    }
  }
  return Tournament(n_, std::move(rows_));
}

const char* to_string(SmallClass3 c) noexcept { return c == SmallClass3::TR3 ? "TR3" : "C3"; }

const char* to_string(SmallClass4 c) noexcept {
  switch (c) {
    case SmallClass4::TR4: return "TR4";
    case SmallClass4::W4: return "W4";
    case SmallClass4::L4: return "L4";
    case SmallClass4::R4: return "R4";
  }
  return "?";
}

Tournament from_arc_list(std::size_t n, std::span<const std::pair<Vertex, Vertex>> arcs) {
  TournamentBuilder b(n);
  for (const auto& [u, v] : arcs) {
    if (u >= n || v >= n)
      throw Error(Errc::VertexOutOfRange, "arc " + pair_str(u, v) + " outside order " + std::to_string(n));
    if (u == v) throw Error(Errc::SelfLoop, "arc from vertex " + std::to_string(u) + " to itself");
    b.set_bit(u, v);
  }
  return std::move(b).finish();
}

Tournament induced(const Tournament& t, std::span<const Vertex> subset) {
  if (subset.empty()) throw Error(Errc::InvalidArgument, "induced subtournament needs at least one vertex");
  std::vector<Vertex> s(subset.begin(), subset.end());
  std::sort(s.begin(), s.end());
  if (s.back() >= t.order())
    throw Error(Errc::VertexOutOfRange, "vertex " + std::to_string(s.back()) + " outside order " + std::to_string(t.order()));
  if (std::adjacent_find(s.begin(), s.end()) != s.end())
    throw Error(Errc::InvalidArgument, "subset lists a vertex twice");
  TournamentBuilder b(s.size());
  for (Vertex i = 0; i < s.size(); ++i)
    for (Vertex j = i + 1; j < s.size(); ++j) {
      if (t.beats(s[i], s[j])) b.orient(i, j);
      else b.orient(j, i);
    }
  return std::move(b).finish();
}

SmallClass3 classify3(const Tournament& t) {
  if (t.order() != 3) throw Error(Errc::WrongOrder, "classify3 needs order 3, got " + std::to_string(t.order()));
  for (Vertex v = 0; v < 3; ++v)
    if (t.outdegree(v) == 2) return SmallClass3::TR3;
  return SmallClass3::C3;
}

SmallClass4 classify4_by_scores(std::array<unsigned, 4> s) {
  std::sort(s.begin(), s.end());
  using S = std::array<unsigned, 4>;
  if (s == S{0, 1, 2, 3}) return SmallClass4::TR4;
  if (s == S{1, 1, 1, 3}) return SmallClass4::W4;
  if (s == S{0, 2, 2, 2}) return SmallClass4::L4;
  if (s == S{1, 1, 2, 2}) return SmallClass4::R4;
  throw Error(Errc::UnrecognizedScoreSequence, "(" + std::to_string(s[0]) + "," + std::to_string(s[1]) + "," +
                                                   std::to_string(s[2]) + "," + std::to_string(s[3]) + ")");
}

SmallClass4 classify4(const Tournament& t) {
  if (t.order() != 4) throw Error(Errc::WrongOrder, "classify4 needs order 4, got " + std::to_string(t.order()));
  std::array<unsigned, 4> s{};
  for (Vertex v = 0; v < 4; ++v) s[v] = static_cast<unsigned>(t.outdegree(v));
  const SmallClass4 c = classify4_by_scores(s);
#ifndef NDEBUG
  if (!isomorphic4(t, representative(c)))
    throw Error(Errc::UnrecognizedScoreSequence, "score class disagrees with isomorphism search");
#endif
  return c;
}

SmallClass4 classify4_subset(const Tournament& t, Vertex a, Vertex b, Vertex c, Vertex d) {
  const std::array<Vertex, 4> q{a, b, c, d};
  std::array<unsigned, 4> s{};
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j) ++s[t.beats(q[i], q[j]) ? i : j];
  return classify4_by_scores(s);
}

std::vector<std::uint32_t> score_sequence(const Tournament& t) {
  std::vector<std::uint32_t> s(t.outdegrees().begin(), t.outdegrees().end());
  std::sort(s.begin(), s.end());
  return s;
}

}  // namespace tourney
