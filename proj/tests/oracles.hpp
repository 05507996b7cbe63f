#pragma once

#include <algorithm>
#include <array>
#include <optional>
#include <vector>

#include "gsq/graph.hpp"

// Brute-force oracles, independent of the library's search strategies: all
// of them enumerate plain vertex subsets and check definitions directly.
namespace gsq::oracles {

// Does any subset of V induce a cycle of length >= 4? Checked via degrees
// and connectivity of the induced subgraph, not via path extension.
inline bool subset_induces_cycle(const Graph& g, const std::vector<int>& s) {
  if (s.size() < 4) return false;
  int edges = 0;
  for (size_t a = 0; a < s.size(); ++a) {
    int deg = 0;
    for (size_t b = 0; b < s.size(); ++b)
      if (a != b && g.adjacent(s[a], s[b])) ++deg;
    if (deg != 2) return false;
    edges += deg;
  }
  if (edges != int(2 * s.size())) return false;
  // 2-regular and connected <=> a single cycle
  std::vector<int> stack{s[0]};
  std::vector<char> seen(s.size(), 0);
  seen[0] = 1;
  int reached = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (size_t b = 0; b < s.size(); ++b)
      if (!seen[b] && g.adjacent(v, s[b])) {
        seen[b] = 1;
        ++reached;
        stack.push_back(s[b]);
      }
  }
  return reached == int(s.size());
}

inline bool has_hole(const Graph& g) {
  const int n = g.order();
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    std::vector<int> s;
    for (int v = 0; v < n; ++v)
      if ((mask >> v) & 1) s.push_back(v);
    if (subset_induces_cycle(g, s)) return true;
  }
  return false;
}

// Lexicographically first claw as (center, a, b, c); scans all center and
// neighbor triples directly.
inline std::optional<std::array<int, 4>> first_claw(const Graph& g) {
  for (int c = 0; c < g.order(); ++c) {
    std::vector<int> nb;
    for (int v = 0; v < g.order(); ++v)
      if (g.adjacent(c, v)) nb.push_back(v);
    for (size_t a = 0; a < nb.size(); ++a)
      for (size_t b = a + 1; b < nb.size(); ++b)
        for (size_t d = b + 1; d < nb.size(); ++d)
          if (!g.adjacent(nb[a], nb[b]) && !g.adjacent(nb[a], nb[d]) &&
              !g.adjacent(nb[b], nb[d]))
            return std::array<int, 4>{c, nb[a], nb[b], nb[d]};
  }
  return std::nullopt;
}

// All labeled graphs on n vertices (n small), for canonical-form counting.
template <class F>
void for_all_labeled(int n, F f) {
  const int bits = n * (n - 1) / 2;
  for (unsigned mask = 0; mask < (1u << bits); ++mask) {
    std::vector<Edge> es;
    int bit = 0;
    for (int j = 1; j < n; ++j)
      for (int i = 0; i < j; ++i, ++bit)
        if ((mask >> bit) & 1) es.emplace_back(i, j);
    f(Graph::from_edge_list(n, es));
  }
}

}  // namespace gsq::oracles
