#pragma once

#include <array>
#include <optional>
#include <vector>

#include "tourney/error.hpp"
#include "tourney/tournament.hpp"

namespace tourney {

enum class ObstructionKind { W4, L4 };

const char* to_string(ObstructionKind k) noexcept;

/// Induced W4 (apex beats a 3-cycle) or L4 (a 3-cycle beats the apex).
struct Obstruction {
  ObstructionKind kind = ObstructionKind::W4;
  std::array<Vertex, 4> vertices{};  // ascending
  Vertex apex = 0;

  friend bool operator==(const Obstruction&, const Obstruction&) = default;
};

/// Permutation of the vertex set read as a cyclic sequence.
struct CyclicOrder {
  std::vector<Vertex> order;
};

class NotLocallyTransitiveError : public Error {
 public:
  explicit NotLocallyTransitiveError(const Obstruction& o);
  const Obstruction& obstruction() const noexcept { return obstruction_; }

 private:
  Obstruction obstruction_;
};

/**
 * Finds an induced W4 or L4, or reports none.
 *
 * A tournament is locally transitive iff every T[N+(v)] and T[N-(v)] is
 * acyclic, which is checked per vertex by asking whether the restricted
 * outdegrees are pairwise distinct. The witness is deterministic: lowest
 * apex first, then the lexicographically smallest 3-cycle (as a sorted
 * triple) inside N+(apex) or N-(apex), whichever is smaller.
 */
std::optional<Obstruction> find_obstruction(const Tournament& t);

bool is_locally_transitive(const Tournament& t);

/// Cyclic order starting at vertex 0, then N+(0) and N-(0) each sorted by the
/// beat relation. Throws NotLocallyTransitiveError; a violated interval
/// postcondition throws std::logic_error.
CyclicOrder brouwer_order(const Tournament& t);

/// True iff for every v the |N+(v)| positions following v in `order` are
/// exactly N+(v).
bool out_neighbourhoods_are_forward_intervals(const Tournament& t, const CyclicOrder& order);

/// Bijection phi with phi[v] = label of v in carousel(n). Verified arc by arc.
/// Throws EvenOrder, NotBalanced, NotLocallyTransitiveError.
std::vector<Vertex> carousel_isomorphism(const Tournament& t);

/// Fraction of vertices with |outdeg(v) - (n-1)/2| > eps * n.
double balance_deficiency(const Tournament& t, double eps);

/// Backward arcs among pairs at forward cyclic distance 1..(n-1)/2 in
/// `order`, over C(n, 2); the smaller of the value for the order and for its
/// reversal. Odd n only.
double flip_distance_given_order(const Tournament& t, const CyclicOrder& order);

}  // namespace tourney
