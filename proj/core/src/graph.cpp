#include "gsq/graph.hpp"

#include <algorithm>
#include <queue>

namespace gsq {

const char* errc_name(Errc c) {
  switch (c) {
    case Errc::kOutOfRange: return "OUT_OF_RANGE";
    case Errc::kSelfLoop: return "SELF_LOOP";
    case Errc::kEmptyGraph: return "EMPTY_GRAPH";
    case Errc::kBadArgument: return "BAD_ARGUMENT";
    case Errc::kTooLarge: return "TOO_LARGE";
    case Errc::kNotAPermutation: return "NOT_A_PERMUTATION";
    case Errc::kInvalidWitness: return "INVALID_WITNESS";
    case Errc::kNotAHole: return "NOT_A_HOLE";
    case Errc::kInternalContradiction: return "INTERNAL_CONTRADICTION";
    case Errc::kBadChar: return "BAD_CHAR";
    case Errc::kTruncated: return "TRUNCATED";
    case Errc::kTrailingBits: return "TRAILING_BITS_NONZERO";
    case Errc::kCountMismatch: return "COUNT_MISMATCH";
    case Errc::kBadFormat: return "BAD_FORMAT";
    case Errc::kIoError: return "IO_ERROR";
  }
  return "UNKNOWN";
}

Graph Graph::empty(int n) {
  if (n < 0) fail(Errc::kBadArgument, "negative vertex count");
  Graph g;
  g.n_ = n;
  g.adj_.assign(n, Bitset(n));
  return g;
}

Graph Graph::from_edge_list(int n, const std::vector<Edge>& edges) {
  Graph g = empty(n);
  for (auto [u, v] : edges) {
    if (u < 0 || u >= n || v < 0 || v >= n)
      fail(Errc::kOutOfRange, "edge endpoint outside 0.." + std::to_string(n - 1));
    if (u == v) fail(Errc::kSelfLoop, "self-loop at vertex " + std::to_string(u));
    if (!g.adj_[u].test(v)) {
      g.adj_[u].set(v);
      g.adj_[v].set(u);
      ++g.m_;
    }
  }
  return g;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(m_);
  for (int u = 0; u < n_; ++u)
    adj_[u].for_each([&](int v) {
      if (u < v) out.emplace_back(u, v);
    });
  std::sort(out.begin(), out.end());
  return out;
}

DistanceMatrix distances(const Graph& g) {
  const int n = g.order();
  DistanceMatrix dm;
  dm.n = n;
  dm.d.assign(size_t(n) * n, kUnreachable);
  std::vector<int> queue;
  queue.reserve(n);
  for (int s = 0; s < n; ++s) {
    queue.clear();
    queue.push_back(s);
    dm.d[size_t(s) * n + s] = 0;
    for (size_t head = 0; head < queue.size(); ++head) {
      int u = queue[head];
      int du = dm.d[size_t(s) * n + u];
      g.neighbors(u).for_each([&](int v) {
        if (dm.d[size_t(s) * n + v] == kUnreachable) {
          dm.d[size_t(s) * n + v] = du + 1;
          queue.push_back(v);
        }
      });
    }
  }
  return dm;
}

int diameter(const Graph& g) {
  if (g.order() == 0) fail(Errc::kEmptyGraph, "diameter of the 0-vertex graph");
  DistanceMatrix dm = distances(g);
  int best = 0;
  for (int i = 0; i < dm.n; ++i)
    for (int j = i + 1; j < dm.n; ++j)
      if (dm.at(i, j) != kUnreachable) best = std::max(best, dm.at(i, j));
  return best;
}

Graph power(const Graph& g, int k) {
  if (k < 1) fail(Errc::kBadArgument, "graph power requires k >= 1");
  if (k == 1) return g;
  DistanceMatrix dm = distances(g);
  std::vector<Edge> es;
  for (int i = 0; i < g.order(); ++i)
    for (int j = i + 1; j < g.order(); ++j) {
      int d = dm.at(i, j);
      if (d != kUnreachable && d <= k) es.emplace_back(i, j);
    }
  return Graph::from_edge_list(g.order(), es);
}

LineGraphMap line_graph(const Graph& g) {
  LineGraphMap out;
  out.edge_of_vertex = g.edges();  // lexicographic vertex order of L(G)
  const int m = int(out.edge_of_vertex.size());
  // edges at each base vertex are pairwise adjacent in L(G)
  std::vector<std::vector<int>> at(g.order());
  for (int e = 0; e < m; ++e) {
    at[out.edge_of_vertex[e].first].push_back(e);
    at[out.edge_of_vertex[e].second].push_back(e);
  }
  std::vector<Edge> les;
  for (const auto& bucket : at)
    for (size_t a = 0; a < bucket.size(); ++a)
      for (size_t b = a + 1; b < bucket.size(); ++b) les.push_back(make_edge(bucket[a], bucket[b]));
  out.lg = Graph::from_edge_list(m, les);
  return out;
}

InducedSubgraph induced_subgraph(const Graph& g, const std::vector<int>& s) {
  InducedSubgraph out;
  out.vertex_map = s;
  std::sort(out.vertex_map.begin(), out.vertex_map.end());
  out.vertex_map.erase(std::unique(out.vertex_map.begin(), out.vertex_map.end()),
                       out.vertex_map.end());
  for (int v : out.vertex_map)
    if (v < 0 || v >= g.order()) fail(Errc::kOutOfRange, "vertex " + std::to_string(v));
  const int k = int(out.vertex_map.size());
  std::vector<Edge> es;
  for (int a = 0; a < k; ++a)
    for (int b = a + 1; b < k; ++b)
      if (g.adjacent(out.vertex_map[a], out.vertex_map[b])) es.emplace_back(a, b);
  out.graph = Graph::from_edge_list(k, es);
  return out;
}

std::vector<std::vector<int>> components(const Graph& g) {
  std::vector<std::vector<int>> comps;
  std::vector<char> seen(g.order(), 0);
  for (int s = 0; s < g.order(); ++s) {
    if (seen[s]) continue;
    std::vector<int> comp{s};
    seen[s] = 1;
    for (size_t head = 0; head < comp.size(); ++head)
      g.neighbors(comp[head]).for_each([&](int v) {
        if (!seen[v]) {
          seen[v] = 1;
          comp.push_back(v);
        }
      });
    std::sort(comp.begin(), comp.end());
    comps.push_back(std::move(comp));
  }
  return comps;
}

}  // namespace gsq
