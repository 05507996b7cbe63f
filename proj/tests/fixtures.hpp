#pragma once

#include <vector>

#include "gsq/graph.hpp"

namespace gsq::fixtures {

inline Graph path_graph(int n) {
  std::vector<Edge> es;
  for (int i = 0; i + 1 < n; ++i) es.emplace_back(i, i + 1);
  return Graph::from_edge_list(n, es);
}

inline Graph cycle_graph(int n) {
  std::vector<Edge> es;
  for (int i = 0; i < n; ++i) es.push_back(make_edge(i, (i + 1) % n));
  return Graph::from_edge_list(n, es);
}

inline Graph complete_graph(int n) {
  std::vector<Edge> es;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) es.emplace_back(i, j);
  return Graph::from_edge_list(n, es);
}

// K_{1,k} with center 0
inline Graph star_graph(int k) {
  std::vector<Edge> es;
  for (int i = 1; i <= k; ++i) es.emplace_back(0, i);
  return Graph::from_edge_list(k + 1, es);
}

// P5 on 0..4 plus the chord (1,3)
inline Graph p5a_graph() {
  return Graph::from_edge_list(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {1, 3}});
}

// Inner 4-cycle w1..w4 = 4..7, outer stable u1..u4 = 0..3 with
// u_i ~ {w_(i-1), w_i}.
inline Graph f4_graph() {
  std::vector<Edge> es;
  for (int i = 0; i < 4; ++i) {
    es.push_back(make_edge(i, 4 + i));
    es.push_back(make_edge(i, 4 + (i + 3) % 4));
    es.push_back(make_edge(4 + i, 4 + (i + 1) % 4));
  }
  return Graph::from_edge_list(8, es);
}

// The classical chordal graph with a non-chordal square: a size-5 sunflower
// whose core w1..w5 = 5..9 is a fan (chords w2w4, w4w1), petals
// u1..u5 = 0..4 with u_i ~ {w_(i-1), w_i}.
inline Graph sunflower5_graph() {
  std::vector<Edge> es;
  for (int i = 0; i < 5; ++i) {
    es.push_back(make_edge(i, 5 + i));
    es.push_back(make_edge(i, 5 + (i + 4) % 5));
    es.push_back(make_edge(5 + i, 5 + (i + 1) % 5));
  }
  es.push_back(make_edge(6, 8));  // w2 w4
  es.push_back(make_edge(8, 5));  // w4 w1
  return Graph::from_edge_list(10, es);
}

// Size-7 sunflower over a triangulated 7-core, suspended by vertex 14.
// w1..w7 = 0..6, u1..u7 = 7..13.
inline Graph suspended_sunflower7_graph() {
  std::vector<Edge> es;
  for (int i = 0; i < 7; ++i) {
    es.push_back(make_edge(i, (i + 1) % 7));
    es.push_back(make_edge(7 + i, i));
    es.push_back(make_edge(7 + i, (i + 6) % 7));
  }
  es.push_back(make_edge(0, 2));
  es.push_back(make_edge(0, 3));
  es.push_back(make_edge(3, 6));
  es.push_back(make_edge(3, 5));
  es.push_back(make_edge(14, 10));
  es.push_back(make_edge(14, 12));
  return Graph::from_edge_list(15, es);
}

// Size-8 flower with q = 4: core 4-cycle 0..3, u-pairs 4..11 hanging off it
// (u_i has one w-neighbor and one u-neighbor).
inline Graph flower8_graph() {
  std::vector<Edge> es;
  for (int i = 0; i < 4; ++i) es.push_back(make_edge(i, (i + 1) % 4));
  // pairs (4,5), (6,7), (8,9), (10,11); pair k bridges w_k and w_(k+1)
  for (int k = 0; k < 4; ++k) {
    int a = 4 + 2 * k, b = 5 + 2 * k;
    es.push_back(make_edge(a, b));
    es.push_back(make_edge(k, a));
    es.push_back(make_edge((k + 1) % 4, b));
  }
  return Graph::from_edge_list(12, es);
}

}  // namespace gsq::fixtures
