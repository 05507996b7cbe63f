#include "gsq/chordality.hpp"

#include <algorithm>
#include <stdexcept>

namespace gsq {

std::vector<int> mcs_order(const Graph& g) {
  const int n = g.order();
  std::vector<int> weight(n, 0);
  std::vector<char> vis(n, 0);
  std::vector<int> visit;
  visit.reserve(n);
  for (int step = 0; step < n; ++step) {
    int pick = -1;
    for (int v = 0; v < n; ++v)
      if (!vis[v] && (pick == -1 || weight[v] > weight[pick] ||
                      (weight[v] == weight[pick] && v > pick)))
        pick = v;
    vis[pick] = 1;
    visit.push_back(pick);
    g.neighbors(pick).for_each([&](int u) {
      if (!vis[u]) ++weight[u];
    });
  }
  // reverse visit order is the elimination ordering
  return {visit.rbegin(), visit.rend()};
}

std::optional<PeoViolation> check_peo(const Graph& g, const std::vector<int>& order) {
  const int n = g.order();
  if (int(order.size()) != n) fail(Errc::kNotAPermutation, "ordering has wrong length");
  std::vector<int> pos(n, -1);
  for (int i = 0; i < n; ++i) {
    int v = order[i];
    if (v < 0 || v >= n || pos[v] != -1) fail(Errc::kNotAPermutation, "not a permutation of V");
    pos[v] = i;
  }
  for (int i = 0; i < n; ++i) {
    int v = order[i];
    std::vector<int> later;
    g.neighbors(v).for_each([&](int u) {
      if (pos[u] > i) later.push_back(u);
    });
    for (size_t a = 0; a < later.size(); ++a)
      for (size_t b = a + 1; b < later.size(); ++b)
        if (!g.adjacent(later[a], later[b])) return PeoViolation{v, later[a], later[b]};
  }
  return std::nullopt;
}

std::vector<int> canonical_cycle(const std::vector<int>& cycle) {
  const int l = int(cycle.size());
  int mi = 0;
  for (int i = 1; i < l; ++i)
    if (cycle[i] < cycle[mi]) mi = i;
  int prev = cycle[(mi + l - 1) % l], next = cycle[(mi + 1) % l];
  std::vector<int> out;
  out.reserve(l);
  if (next <= prev)
    for (int i = 0; i < l; ++i) out.push_back(cycle[(mi + i) % l]);
  else
    for (int i = 0; i < l; ++i) out.push_back(cycle[(mi - i + l) % l]);
  return out;
}

bool is_hole(const Graph& g, const std::vector<int>& cycle) {
  const int l = int(cycle.size());
  if (l < 4) return false;
  std::vector<char> seen(g.order(), 0);
  for (int v : cycle) {
    if (v < 0 || v >= g.order() || seen[v]) return false;
    seen[v] = 1;
  }
  for (int i = 0; i < l; ++i)
    for (int j = i + 1; j < l; ++j) {
      bool consec = (j == i + 1) || (i == 0 && j == l - 1);
      if (g.adjacent(cycle[i], cycle[j]) != consec) return false;
    }
  return true;
}

namespace detail {

void for_each_induced_cycle(const Graph& g, int min_len, int max_len,
                            const std::function<bool(const std::vector<int>&)>& visit) {
  const int n = g.order();
  if (max_len <= 0 || max_len > n) max_len = n;
  if (min_len > max_len) return;
  Bitset on(n);
  std::vector<int> path;
  bool stop = false;

  // path is an induced path from s; interior vertices avoid N(s)
  auto dfs = [&](auto&& self, int s) -> void {
    if (stop) return;
    int last = path.back();
    std::vector<int> nbrs;
    g.neighbors(last).for_each([&](int w) {
      if (w > s && !on.test(w)) nbrs.push_back(w);
    });
    for (int w : nbrs) {
      if (stop) return;
      int on_path = g.neighbors(w).count_and(on);
      bool adj_s = g.adjacent(w, s);
      if (adj_s && on_path == 2 && int(path.size()) + 1 >= min_len &&
          int(path.size()) + 1 <= max_len && path[1] < w) {
        std::vector<int> cyc = path;
        cyc.push_back(w);
        if (!visit(cyc)) {
          stop = true;
          return;
        }
      }
      if (!adj_s && on_path == 1 && int(path.size()) + 2 <= max_len) {
        on.set(w);
        path.push_back(w);
        self(self, s);
        path.pop_back();
        on.reset(w);
      }
    }
  };

  for (int s = 0; s < n && !stop; ++s) {
    std::vector<int> seconds;
    g.neighbors(s).for_each([&](int a) {
      if (a > s) seconds.push_back(a);
    });
    for (int a : seconds) {
      if (stop) break;
      path = {s, a};
      on = Bitset(n);
      on.set(s);
      on.set(a);
      dfs(dfs, s);
    }
  }
}

}  // namespace detail

std::vector<Hole> enumerate_induced_cycles(const Graph& g, int min_len,
                                           std::optional<int> max_len, int order_bound) {
  if (min_len < 4) fail(Errc::kBadArgument, "induced-cycle enumeration requires min_len >= 4");
  if (g.order() > order_bound)
    fail(Errc::kTooLarge, "graph order exceeds enumeration bound " + std::to_string(order_bound));
  std::vector<Hole> out;
  detail::for_each_induced_cycle(g, min_len, max_len.value_or(0), [&](const std::vector<int>& c) {
    out.push_back(Hole{c});
    return true;
  });
  std::sort(out.begin(), out.end(), [](const Hole& a, const Hole& b) {
    if (a.vertices.size() != b.vertices.size()) return a.vertices.size() < b.vertices.size();
    return a.vertices < b.vertices;
  });
  return out;
}

std::optional<Hole> has_induced_cycle_geq(const Graph& g, int f, int order_bound) {
  if (f < 4) fail(Errc::kBadArgument, "requires f >= 4");
  if (g.order() > order_bound)
    fail(Errc::kTooLarge, "graph order exceeds enumeration bound " + std::to_string(order_bound));
  std::optional<Hole> found;
  detail::for_each_induced_cycle(g, f, 0, [&](const std::vector<int>& c) {
    found = Hole{c};
    return false;
  });
  return found;
}

namespace {

// Shortest x..y path avoiding N[v] \ {x,y}; together with v this is an
// induced cycle of length >= 4.
std::optional<std::vector<int>> hole_through(const Graph& g, int v, int x, int y) {
  const int n = g.order();
  std::vector<char> blocked(n, 0);
  blocked[v] = 1;
  g.neighbors(v).for_each([&](int u) { blocked[u] = 1; });
  blocked[x] = 0;
  blocked[y] = 0;
  std::vector<int> parent(n, -2);
  std::vector<int> queue{x};
  parent[x] = -1;
  for (size_t head = 0; head < queue.size(); ++head) {
    int u = queue[head];
    if (u == y) break;
    g.neighbors(u).for_each([&](int w) {
      if (!blocked[w] && parent[w] == -2) {
        parent[w] = u;
        queue.push_back(w);
      }
    });
  }
  if (parent[y] == -2) return std::nullopt;
  std::vector<int> path;
  for (int u = y; u != -1; u = parent[u]) path.push_back(u);
  std::reverse(path.begin(), path.end());  // x .. y
  std::vector<int> cyc{v};
  cyc.insert(cyc.end(), path.begin(), path.end());
  return cyc;
}

}  // namespace

ChordalityCertificate is_chordal(const Graph& g) {
  ChordalityCertificate cert;
  std::vector<int> order = mcs_order(g);
  auto violation = check_peo(g, order);
  if (!violation) {
    cert.chordal = true;
    cert.peo = std::move(order);
    return cert;
  }
  cert.chordal = false;
  if (auto cyc = hole_through(g, violation->v, violation->x, violation->y)) {
    cert.hole.vertices = canonical_cycle(*cyc);
    return cert;
  }
  // Every non-chordal graph admits some (v, x, y) with a connecting path.
  for (int v = 0; v < g.order(); ++v) {
    std::vector<int> nb = g.neighbors(v).to_vector();
    for (size_t a = 0; a < nb.size(); ++a)
      for (size_t b = a + 1; b < nb.size(); ++b) {
        if (g.adjacent(nb[a], nb[b])) continue;
        if (auto cyc = hole_through(g, v, nb[a], nb[b])) {
          cert.hole.vertices = canonical_cycle(*cyc);
          return cert;
        }
      }
  }
  throw std::logic_error("MCS violation without an extractable hole");
}

}  // namespace gsq
