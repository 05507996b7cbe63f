#pragma once

#include <string>
#include <utility>
#include <vector>

#include "gsq/bitset.hpp"
#include "gsq/error.hpp"

namespace gsq {

// An edge as an unordered vertex pair, stored with first < second.
using Edge = std::pair<int, int>;

inline Edge make_edge(int u, int v) { return u < v ? Edge{u, v} : Edge{v, u}; }

constexpr int kUnreachable = -1;

// Default order cap for the exhaustive tooling (canonical forms, subgraph
// searches). Single-graph queries may pass a larger bound explicitly.
constexpr int kDefaultOrderBound = 12;

// Immutable simple undirected graph; vertices are 0..n-1, adjacency is a
// per-vertex bitset. All operations on graphs are pure functions.
class Graph {
 public:
  Graph() = default;  // the empty graph on 0 vertices

  static Graph empty(int n);
  // Builds a graph with exactly the given edges (duplicates collapse).
  // Throws kOutOfRange / kSelfLoop.
  static Graph from_edge_list(int n, const std::vector<Edge>& edges);

  int order() const { return n_; }
  int size() const { return m_; }  // edge count

  bool adjacent(int u, int v) const { return adj_[u].test(v); }
  const Bitset& neighbors(int v) const { return adj_[v]; }
  int degree(int v) const { return adj_[v].count(); }

  // All edges, lexicographically sorted.
  std::vector<Edge> edges() const;

  friend bool operator==(const Graph& a, const Graph& b) = default;

 private:
  int n_ = 0;
  int m_ = 0;
  std::vector<Bitset> adj_;
};

struct DistanceMatrix {
  int n = 0;
  std::vector<int> d;  // row-major, kUnreachable across components

  int at(int i, int j) const { return d[size_t(i) * n + j]; }
};

struct LineGraphMap {
  Graph lg;
  // line-graph vertex id -> originating edge of the base graph, in
  // lexicographic edge order.
  std::vector<Edge> edge_of_vertex;
};

struct InducedSubgraph {
  Graph graph;
  std::vector<int> vertex_map;  // new id -> old id, ascending
};

// BFS hop distances from every vertex.
DistanceMatrix distances(const Graph& g);

// Max pairwise distance within a component, maximised over components.
// 0 for edgeless graphs; throws kEmptyGraph for n = 0.
int diameter(const Graph& g);

// G^k: edge (x,y) iff 1 <= dist(x,y) <= k. Throws kBadArgument for k < 1.
Graph power(const Graph& g, int k);

// L(G) plus the vertex->edge correspondence.
LineGraphMap line_graph(const Graph& g);

// G[s]; s is treated as a set (deduplicated). Throws kOutOfRange.
InducedSubgraph induced_subgraph(const Graph& g, const std::vector<int>& s);

// Connected components as vertex lists, ordered by smallest member.
std::vector<std::vector<int>> components(const Graph& g);

inline bool is_connected(const Graph& g) { return components(g).size() <= 1; }

// Relabeling-invariant canonical form; equal strings iff isomorphic.
// Backtracking over degree-refined orderings; throws kTooLarge above max_order.
std::string canonical_form(const Graph& g, int max_order = kDefaultOrderBound);

}  // namespace gsq
