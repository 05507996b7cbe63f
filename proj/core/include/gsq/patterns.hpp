#pragma once

#include <array>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "gsq/chordality.hpp"
#include "gsq/graph.hpp"

namespace gsq {

struct ClawWitness {
  int center;
  std::array<int, 3> leaves;  // ascending, pairwise non-adjacent
};

struct P5aWitness {
  std::array<int, 5> path;  // induced P5 v1..v5; the extra edge is (v2, v4)
};

// Induced F4: inner 4-cycle w1..w4, stable outer set u1..u4, u_i adjacent to
// exactly w_{i-1} and w_i (cyclically).
struct F4Witness {
  std::array<int, 4> u;
  std::array<int, 4> w;
  std::optional<int> suspended_by;
};

// U stable, exact bipartite pattern u_i ~ {w_i, w_(i+1)}, G[W] chordal.
struct SunflowerWitness {
  std::vector<int> u;
  std::vector<int> w;
  std::optional<int> suspended_by;
};

struct FlowerWitness {
  std::vector<int> u;        // u_1..u_n in cyclic order
  std::vector<int> w;        // w_1..w_q in cycle order
  std::vector<int> cycle;    // the cycle C, starting at w_1, in w order
  std::vector<int> pending;  // pending members of u, ascending
  std::optional<int> withered_by;
};

struct SproutWitness {
  std::vector<Edge> u_edges;  // u_1..u_n in cyclic order
  std::vector<Edge> w_edges;  // w_1..w_q in cycle order
  std::vector<Edge> cycle;    // the cycle C as an edge walk, starting at w_1
  std::vector<Edge> pending;  // pending u-edges, ascending
  std::optional<Edge> infertile_by;

  bool fertile() const { return !infertile_by.has_value(); }
  // the two labels coincide for sprouts
  bool unwithered() const { return fertile(); }
};

struct SufficientSquareReport {
  bool claw_free = false;
  bool no_long_hole = false;  // no induced cycle of length >= 5
  bool all_f4_suspended = false;
  bool applicable = false;  // all three hold; then G^2 is chordal
};

// Lexicographically first induced claw, if any.
std::optional<ClawWitness> find_claw(const Graph& g);

// First induced P5 plus the (v2,v4) chord, if any.
std::optional<P5aWitness> find_p5a(const Graph& g);

// All induced F4 embeddings, once per automorphism class, annotated with
// suspension. Throws kTooLarge above max_order.
std::vector<F4Witness> find_f4(const Graph& g, int max_order = kDefaultOrderBound);

// All sunflowers of size n (n >= 3), deduplicated by underlying subgraph.
std::vector<SunflowerWitness> find_sunflower(const Graph& g, int n,
                                             int max_order = kDefaultOrderBound);

// All induced flowers of size n (n >= 4), once per dihedral relabeling.
std::vector<FlowerWitness> find_flower(const Graph& g, int n,
                                       int max_order = kDefaultOrderBound);

// Witnessing vertex outside U adjacent to two non-consecutive u's, if any.
// Throws kInvalidWitness when f does not verify.
std::optional<int> is_withered(const Graph& g, const FlowerWitness& f);

// All sprouts of size n (n >= 4); graphs with more than max_edges edges are
// rejected (kTooLarge).
std::vector<SproutWitness> find_sprout(const Graph& g, int n, int max_edges = 18);

SufficientSquareReport check_sufficient_chordalsq(const Graph& g);

// Simple cycles (not induced) as vertex sequences, each once up to
// rotation/reflection; used by the sprout search and the harness.
std::vector<std::vector<int>> all_cycles(const Graph& g, int min_len = 3);

namespace detail {

// Labels a flower structure deterministically: minimal (w, u, cycle) tuple
// over all rotation/direction choices, u-order derived by the appearance
// rule (numbering starts in the arc that ends at w_1). pending_pair maps a
// pending vertex to its two w's. Shared by the search and the extractor.
FlowerWitness canonical_flower(const std::vector<int>& cycle, const std::vector<char>& w_at,
                               const std::map<int, std::pair<int, int>>& pending_pair);

struct SproutParts {
  std::vector<Edge> cycle;           // closed edge walk
  std::vector<int> wpos;             // positions of w-edges along the walk
  std::vector<Edge> pendings;        // one per shared-vertex boundary
  std::vector<int> boundary_vertex;  // the shared vertex of that boundary
};

SproutWitness canonical_sprout(const SproutParts& parts);

bool edges_meet(Edge a, Edge b);

}  // namespace detail

}  // namespace gsq
