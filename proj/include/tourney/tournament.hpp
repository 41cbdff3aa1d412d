#pragma once

#include <array>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace tourney {

using Vertex = std::uint32_t;
using Word = std::uint64_t;

inline constexpr std::size_t kWordBits = 64;

inline constexpr std::size_t words_for(std::size_t bits) noexcept {
  return (bits + kWordBits - 1) / kWordBits;
}

/**
 * Complete orientation of K_n stored as n packed bit rows.
 *
 * Row u holds the out-neighbourhood N+(u): bit v of row u is set iff u -> v.
 * The in-neighbourhood N-(u) is the complement of row u with u itself and the
 * padding bits past n removed, so both neighbourhoods are single-row reads and
 * every flag count reduces to word-wise AND + popcount.
 *
 * Instances are immutable; build them through TournamentBuilder, the
 * generators, or the .trn / arc-list readers.
 */
class Tournament {
 public:
  std::size_t order() const noexcept { return n_; }
  std::size_t words_per_row() const noexcept { return words_; }

  bool beats(Vertex u, Vertex v) const noexcept {
    return (rows_[u * words_ + v / kWordBits] >> (v % kWordBits)) & 1U;
  }

  std::span<const Word> out_row(Vertex u) const noexcept {
    return {rows_.data() + u * words_, words_};
  }

  /// Word w of N-(u), computed on the fly from the out-row.
  Word in_word(Vertex u, std::size_t w) const noexcept {
    Word x = ~rows_[u * words_ + w] & valid_mask(w);
    if (u / kWordBits == w) x &= ~(Word{1} << (u % kWordBits));
    return x;
  }

  /// Mask of the bits of word w that correspond to real vertices.
  Word valid_mask(std::size_t w) const noexcept {
    if (w + 1 < words_ || n_ % kWordBits == 0) return ~Word{0};
    return (Word{1} << (n_ % kWordBits)) - 1;
  }

  std::size_t outdegree(Vertex u) const noexcept { return outdeg_[u]; }
  std::size_t indegree(Vertex u) const noexcept { return n_ - 1 - outdeg_[u]; }
  std::span<const std::uint32_t> outdegrees() const noexcept { return outdeg_; }

  std::vector<Vertex> out_neighbours(Vertex u) const;
  std::vector<Vertex> in_neighbours(Vertex u) const;

  friend bool operator==(const Tournament& a, const Tournament& b) {
    return a.n_ == b.n_ && a.rows_ == b.rows_;
  }

 private:
  friend class TournamentBuilder;
  Tournament(std::size_t n, std::vector<Word> rows);

  std::size_t n_ = 0;
  std::size_t words_ = 0;
  std::vector<Word> rows_;
  std::vector<std::uint32_t> outdeg_;
};

/// Mutable staging area for a tournament. finish() validates the
/// completeness/antisymmetry invariant and throws Error on violation.
class TournamentBuilder {
 public:
  explicit TournamentBuilder(std::size_t n);

  std::size_t order() const noexcept { return n_; }

  /// Sets u -> v and clears v -> u.
  void orient(Vertex u, Vertex v) noexcept {
    rows_[u * words_ + v / kWordBits] |= Word{1} << (v % kWordBits);
    rows_[v * words_ + u / kWordBits] &= ~(Word{1} << (u % kWordBits));
  }

  /// Sets the single bit u -> v without touching v -> u (used by readers
  /// that must detect conflicting or missing orientations).
  void set_bit(Vertex u, Vertex v) noexcept {
    rows_[u * words_ + v / kWordBits] |= Word{1} << (v % kWordBits);
  }

  bool bit(Vertex u, Vertex v) const noexcept {
    return (rows_[u * words_ + v / kWordBits] >> (v % kWordBits)) & 1U;
  }

  Tournament finish() &&;

 private:
  std::size_t n_;
  std::size_t words_;
  std::vector<Word> rows_;
};

enum class SmallClass3 { TR3, C3 };
enum class SmallClass4 { TR4, W4, L4, R4 };

const char* to_string(SmallClass3 c) noexcept;
const char* to_string(SmallClass4 c) noexcept;

/// Validating constructor from explicit arcs (u, v) meaning u -> v.
Tournament from_arc_list(std::size_t n, std::span<const std::pair<Vertex, Vertex>> arcs);

/// Subtournament on `subset`, relabelled by ascending original index.
Tournament induced(const Tournament& t, std::span<const Vertex> subset);

SmallClass3 classify3(const Tournament& t);
SmallClass4 classify4(const Tournament& t);

/// Classifies the 4-tournament whose within-subset outdegrees are given
/// (any order). Throws UnrecognizedScoreSequence for impossible sequences.
SmallClass4 classify4_by_scores(std::array<unsigned, 4> scores);

/// Classifies T[{a,b,c,d}] without materialising the induced tournament.
SmallClass4 classify4_subset(const Tournament& t, Vertex a, Vertex b, Vertex c, Vertex d);

std::vector<std::uint32_t> score_sequence(const Tournament& t);

inline std::size_t popcount_and(std::span<const Word> a, std::span<const Word> b) noexcept {
  std::size_t s = 0;
  for (std::size_t w = 0; w < a.size(); ++w) s += static_cast<std::size_t>(std::popcount(a[w] & b[w]));
  return s;
}

}  // namespace tourney
