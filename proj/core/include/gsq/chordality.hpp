#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "gsq/graph.hpp"

namespace gsq {

// A chordless cycle of length >= 4, stored in canonical rotation: smallest
// vertex first, then its smaller cycle-neighbor.
struct Hole {
  std::vector<int> vertices;

  int length() const { return int(vertices.size()); }
  friend bool operator==(const Hole&, const Hole&) = default;
  friend auto operator<=>(const Hole&, const Hole&) = default;
};

struct PeoViolation {
  int v;  // vertex whose later neighborhood is not a clique
  int x;
  int y;  // two later neighbors of v that are non-adjacent
};

// Either a perfect elimination ordering or a hole.
struct ChordalityCertificate {
  bool chordal = false;
  std::vector<int> peo;  // set iff chordal
  Hole hole;             // set iff !chordal
};

// Maximum cardinality search elimination ordering. Deterministic; for
// chordal inputs the result passes check_peo.
std::vector<int> mcs_order(const Graph& g);

// nullopt iff `order` is a perfect elimination ordering (later neighbors of
// every vertex form a clique). Throws kNotAPermutation.
std::optional<PeoViolation> check_peo(const Graph& g, const std::vector<int>& order);

ChordalityCertificate is_chordal(const Graph& g);

// Induced-cycle predicate used to re-verify certificates independently.
bool is_hole(const Graph& g, const std::vector<int>& cycle);

// Rotate/reflect a cycle into canonical form (smallest vertex first,
// smaller neighbor second).
std::vector<int> canonical_cycle(const std::vector<int>& cycle);

// All induced cycles with min_len <= length <= max_len (no upper bound when
// max_len is empty), each once up to rotation/reflection, sorted by
// (length, sequence). min_len >= 4; throws kTooLarge above order_bound.
std::vector<Hole> enumerate_induced_cycles(const Graph& g, int min_len,
                                           std::optional<int> max_len,
                                           int order_bound = kDefaultOrderBound);

// First induced cycle of length >= f found, if any.
std::optional<Hole> has_induced_cycle_geq(const Graph& g, int f,
                                          int order_bound = kDefaultOrderBound);

namespace detail {
// Shared DFS core; min_len >= 3 allowed here. Visitor returns false to stop.
void for_each_induced_cycle(const Graph& g, int min_len, int max_len,
                            const std::function<bool(const std::vector<int>&)>& visit);
}  // namespace detail

}  // namespace gsq
