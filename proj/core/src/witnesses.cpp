#include "gsq/witnesses.hpp"

#include <algorithm>
#include <set>

namespace gsq {

const char* condition_name(FlowerCondition c) {
  switch (c) {
    case FlowerCondition::kStructure: return "structure";
    case FlowerCondition::kCondI: return "i";
    case FlowerCondition::kCondII: return "ii";
    case FlowerCondition::kCondIII: return "iii";
    case FlowerCondition::kCondIV: return "iv";
    case FlowerCondition::kCondV: return "v";
    case FlowerCondition::kCondVI: return "vi";
  }
  return "?";
}

const char* condition_name(SproutCondition c) {
  switch (c) {
    case SproutCondition::kStructure: return "structure";
    case SproutCondition::kCondI: return "i";
    case SproutCondition::kCondII: return "ii";
    case SproutCondition::kCondIII: return "iii";
    case SproutCondition::kCondIV: return "iv";
    case SproutCondition::kCondV: return "v";
  }
  return "?";
}

namespace {

// Positions of each w along the witness cycle for the direction in which
// w_1..w_q appear in order; empty when no direction fits.
std::vector<int> aligned_w_positions(const std::vector<int>& cycle, const std::vector<int>& w,
                                     int dir) {
  const int L = int(cycle.size());
  const int q = int(w.size());
  auto index_of = [&](int v) {
    for (int i = 0; i < L; ++i)
      if (cycle[i] == v) return i;
    return -1;
  };
  int p0 = index_of(w[0]);
  if (p0 < 0) return {};
  std::vector<int> pos{0};
  for (int i = 1; i < q; ++i) {
    int pi = index_of(w[i]);
    if (pi < 0) return {};
    pos.push_back(((pi - p0) * dir % L + L) % L);
  }
  for (int i = 1; i < q; ++i)
    if (pos[i] <= pos[i - 1]) return {};
  return pos;  // offsets along the walk direction, pos[0] == 0
}

// interior of the arc from w_i to w_(i+1) in walk order
std::vector<int> arc_interior(const std::vector<int>& cycle, int p0, int dir, int from, int to) {
  const int L = int(cycle.size());
  std::vector<int> out;
  for (int k = from + 1; k < to; ++k) out.push_back(cycle[((p0 + dir * k) % L + L) % L]);
  return out;
}

}  // namespace

std::vector<FlowerCondition> verify_flower(const Graph& g, const FlowerWitness& f) {
  const int n = int(f.u.size());
  const int q = int(f.w.size());
  const int L = int(f.cycle.size());

  // structural sanity first; numbered conditions assume it
  {
    bool ok = n >= 3 && q >= (n + 1) / 2 && q <= n && L >= 3;
    std::set<int> us(f.u.begin(), f.u.end()), ws(f.w.begin(), f.w.end());
    ok = ok && int(us.size()) == n && int(ws.size()) == q;
    for (int v : f.u) ok = ok && v >= 0 && v < g.order() && !ws.count(v);
    for (int v : f.w) ok = ok && v >= 0 && v < g.order();
    std::set<int> cs(f.cycle.begin(), f.cycle.end());
    ok = ok && int(cs.size()) == L;
    for (int v : f.cycle) ok = ok && (us.count(v) || ws.count(v));
    for (int i = 0; i < L && ok; ++i) ok = g.adjacent(f.cycle[i], f.cycle[(i + 1) % L]);
    std::set<int> ps(f.pending.begin(), f.pending.end());
    for (int v : f.pending) ok = ok && us.count(v);
    ok = ok && ps.size() == f.pending.size();
    if (!ok) return {FlowerCondition::kStructure};
  }

  std::vector<FlowerCondition> bad;
  std::set<int> us(f.u.begin(), f.u.end()), ws(f.w.begin(), f.w.end());
  std::set<int> ps(f.pending.begin(), f.pending.end());
  std::set<int> cs(f.cycle.begin(), f.cycle.end());
  std::vector<int> all = f.u;
  all.insert(all.end(), f.w.begin(), f.w.end());

  // i) the cycle carries all w's in order w_1..w_q (either direction)
  int dir = 0, p0 = -1;
  std::vector<int> wpos;
  for (int d : {1, -1}) {
    auto pos = aligned_w_positions(f.cycle, f.w, d);
    if (!pos.empty()) {
      dir = d;
      wpos = pos;
      for (int i = 0; i < L; ++i)
        if (f.cycle[i] == f.w[0]) p0 = i;
      break;
    }
  }
  bool w_in_cycle = true;
  for (int v : f.w) w_in_cycle = w_in_cycle && cs.count(v);
  if (dir == 0 || !w_in_cycle) {
    bad.push_back(FlowerCondition::kCondI);
    return bad;  // arc decomposition is meaningless without i
  }

  // arc decomposition in walk order; arc i runs w_i -> w_(i+1)
  std::vector<std::vector<int>> arcs(q);
  for (int i = 0; i < q; ++i) {
    int from = wpos[i], to = (i + 1 < q) ? wpos[i + 1] : L;
    arcs[i] = arc_interior(f.cycle, p0, dir, from, to);
  }

  // iii) direct arcs carry exactly one pending with exactly that contact pair
  bool ok3 = true;
  std::set<int> matched_pending;
  for (int i = 0; i < q; ++i) {
    if (!arcs[i].empty()) continue;
    int wa = f.w[i], wb = f.w[(i + 1) % q];
    std::vector<int> fits;
    for (int p : f.u) {
      std::vector<int> contacts;
      for (int x : all)
        if (x != p && g.adjacent(p, x)) contacts.push_back(x);
      std::sort(contacts.begin(), contacts.end());
      std::vector<int> pair{std::min(wa, wb), std::max(wa, wb)};
      if (contacts == pair) fits.push_back(p);
    }
    if (fits.size() != 1 || !ps.count(fits[0])) {
      ok3 = false;
    } else {
      matched_pending.insert(fits[0]);
    }
  }
  if (ok3 && matched_pending.size() != ps.size()) ok3 = false;  // stray pendings
  if (!ok3) bad.push_back(FlowerCondition::kCondIII);

  // iv) non-direct arcs hold one or two u's
  bool ok4 = true;
  for (int i = 0; i < q; ++i) {
    if (arcs[i].empty()) continue;
    if (arcs[i].size() > 2) ok4 = false;
    for (int x : arcs[i])
      if (!us.count(x)) ok4 = false;
  }
  if (!ok4) bad.push_back(FlowerCondition::kCondIV);

  // ii) appearance order with the u_1 ~ w_q, u_2 ~ w_1 anchors, and no
  // chords between non-consecutive u's
  {
    bool ok2 = g.adjacent(f.u[0], f.w[q - 1]) && g.adjacent(f.u[1 % n], f.w[0]);
    if (ok3 && ok4) {
      std::vector<int> expected;
      for (int i = 0; i < q; ++i) {
        const auto& arc = arcs[(q - 1 + i) % q];
        if (arc.empty()) {
          int wa = f.w[(q - 1 + i) % q], wb = f.w[(q + i) % q];
          for (int p : f.pending) {
            std::vector<int> contacts;
            for (int x : all)
              if (x != p && g.adjacent(p, x)) contacts.push_back(x);
            std::sort(contacts.begin(), contacts.end());
            std::vector<int> pair{std::min(wa, wb), std::max(wa, wb)};
            if (contacts == pair) expected.push_back(p);
          }
        } else {
          expected.insert(expected.end(), arc.begin(), arc.end());
        }
      }
      ok2 = ok2 && expected == f.u;
    }
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) {
        bool consec = (j == i + 1) || (i == 0 && j == n - 1);
        if (!consec && g.adjacent(f.u[i], f.u[j])) ok2 = false;
      }
    // no u may be adjacent to both of its cyclic neighbors, or the u's stop
    // forming an induced cycle in the square
    for (int i = 0; i < n; ++i)
      if (g.adjacent(f.u[(i + n - 1) % n], f.u[i]) && g.adjacent(f.u[i], f.u[(i + 1) % n]))
        ok2 = false;
    if (!ok2) bad.push_back(FlowerCondition::kCondII);
  }

  // v) pendings pairwise non-adjacent, non-pending u's on the cycle
  {
    bool ok5 = true;
    for (int a : f.pending)
      for (int b : f.pending)
        if (a < b && g.adjacent(a, b)) ok5 = false;
    for (int x : f.u)
      if (!ps.count(x) && !cs.count(x)) ok5 = false;
    for (int x : f.pending)
      if (cs.count(x)) ok5 = false;
    if (!ok5) bad.push_back(FlowerCondition::kCondV);
  }

  // vi) no U-W edges beyond the required ones (cycle edges and pending
  // contact pairs)
  {
    std::set<std::pair<int, int>> required;
    for (int i = 0; i < L; ++i) {
      int a = f.cycle[i], b = f.cycle[(i + 1) % L];
      if ((us.count(a) && ws.count(b)) || (ws.count(a) && us.count(b)))
        required.insert(std::minmax(a, b));
    }
    for (int i = 0; i < q; ++i) {
      if (!arcs[i].empty()) continue;
      int wa = f.w[i], wb = f.w[(i + 1) % q];
      for (int p : f.pending) {
        if (g.adjacent(p, wa) && g.adjacent(p, wb)) {
          required.insert(std::minmax(p, wa));
          required.insert(std::minmax(p, wb));
        }
      }
    }
    bool ok6 = true;
    for (int x : f.u)
      for (int y : f.w)
        if (g.adjacent(x, y) && !required.count(std::minmax(x, y))) ok6 = false;
    if (!ok6) bad.push_back(FlowerCondition::kCondVI);
  }

  return bad;
}

// ---------------------------------------------------------------------------
// sprout verifier
// ---------------------------------------------------------------------------

namespace {

bool edge_in(const Graph& g, Edge e) {
  return e.first >= 0 && e.first < g.order() && e.second >= 0 && e.second < g.order() &&
         e.first != e.second && g.adjacent(e.first, e.second);
}

int shared_vertex(Edge a, Edge b) {
  if (a.first == b.first || a.first == b.second) return a.first;
  if (a.second == b.first || a.second == b.second) return a.second;
  return -1;
}

// w positions along the edge walk, aligned so w_1..w_q appear in order
std::vector<int> aligned_w_positions_e(const std::vector<Edge>& cycle, const std::vector<Edge>& w,
                                       int dir) {
  const int L = int(cycle.size());
  const int q = int(w.size());
  auto index_of = [&](Edge e) {
    for (int i = 0; i < L; ++i)
      if (cycle[i] == e) return i;
    return -1;
  };
  int p0 = index_of(w[0]);
  if (p0 < 0) return {};
  std::vector<int> pos{0};
  for (int i = 1; i < q; ++i) {
    int pi = index_of(w[i]);
    if (pi < 0) return {};
    pos.push_back(((pi - p0) * dir % L + L) % L);
  }
  for (int i = 1; i < q; ++i)
    if (pos[i] <= pos[i - 1]) return {};
  return pos;
}

}  // namespace

std::vector<SproutCondition> verify_sprout(const Graph& g, const SproutWitness& s) {
  const int n = int(s.u_edges.size());
  const int q = int(s.w_edges.size());
  const int L = int(s.cycle.size());

  {
    bool ok = n >= 3 && q >= (n + 1) / 2 && q <= n && L >= 3;
    std::set<Edge> us(s.u_edges.begin(), s.u_edges.end()), wsset(s.w_edges.begin(), s.w_edges.end());
    ok = ok && int(us.size()) == n && int(wsset.size()) == q;
    for (Edge e : s.u_edges) ok = ok && edge_in(g, e) && e.first < e.second && !wsset.count(e);
    for (Edge e : s.w_edges) ok = ok && edge_in(g, e) && e.first < e.second;
    // the cycle must be a closed walk of distinct edges forming a simple
    // vertex cycle, with every edge a u- or w-edge and every w-edge on it
    std::set<Edge> ces(s.cycle.begin(), s.cycle.end());
    ok = ok && int(ces.size()) == L;
    for (Edge e : s.cycle) ok = ok && edge_in(g, e) && (us.count(e) || wsset.count(e));
    if (ok) {
      std::set<int> verts;
      for (int i = 0; i < L; ++i) {
        int x = shared_vertex(s.cycle[i], s.cycle[(i + 1) % L]);
        if (x < 0) ok = false;
        else verts.insert(x);
      }
      ok = ok && int(verts.size()) == L;
    }
    for (Edge e : s.w_edges) ok = ok && ces.count(e);
    std::set<Edge> pe(s.pending.begin(), s.pending.end());
    ok = ok && pe.size() == s.pending.size();
    for (Edge e : s.pending) ok = ok && us.count(e);
    if (!ok) return {SproutCondition::kStructure};
  }

  std::vector<SproutCondition> bad;
  std::set<Edge> us(s.u_edges.begin(), s.u_edges.end());
  std::set<Edge> pe(s.pending.begin(), s.pending.end());
  std::set<Edge> ces(s.cycle.begin(), s.cycle.end());

  int dir = 0, p0 = -1;
  std::vector<int> wpos;
  for (int d : {1, -1}) {
    auto pos = aligned_w_positions_e(s.cycle, s.w_edges, d);
    if (!pos.empty()) {
      dir = d;
      wpos = pos;
      for (int i = 0; i < L; ++i)
        if (s.cycle[i] == s.w_edges[0]) p0 = i;
      break;
    }
  }
  if (dir == 0) {
    bad.push_back(SproutCondition::kCondI);
    return bad;
  }

  std::vector<std::vector<Edge>> arcs(q);
  for (int i = 0; i < q; ++i) {
    int from = wpos[i], to = (i + 1 < q) ? wpos[i + 1] : L;
    for (int k = from + 1; k < to; ++k) arcs[i].push_back(s.cycle[((p0 + dir * k) % L + L) % L]);
  }

  // iii) w-pairs sharing a vertex: exactly one u-edge through it, pending,
  // and forming a star with its two pair w-edges (it meets nothing else of
  // the sprout)
  bool ok3 = true;
  std::set<Edge> matched;
  for (int i = 0; i < q; ++i) {
    Edge wa = s.w_edges[i], wb = s.w_edges[(i + 1) % q];
    int x = shared_vertex(wa, wb);
    if (x < 0) continue;
    std::vector<Edge> through;
    for (Edge e : s.u_edges)
      if (e.first == x || e.second == x) through.push_back(e);
    if (through.size() != 1 || !pe.count(through[0])) {
      ok3 = false;
    } else {
      Edge p = through[0];
      matched.insert(p);
      for (Edge e : s.u_edges)
        if (e != p && shared_vertex(p, e) >= 0) ok3 = false;
      for (Edge e : s.w_edges)
        if (e != wa && e != wb && shared_vertex(p, e) >= 0) ok3 = false;
    }
  }
  if (ok3 && matched.size() != pe.size()) ok3 = false;
  if (!ok3) bad.push_back(SproutCondition::kCondIII);

  // iv) disjoint consecutive w-pairs joined by one or two u-edges in C
  bool ok4 = true;
  for (int i = 0; i < q; ++i) {
    Edge wa = s.w_edges[i], wb = s.w_edges[(i + 1) % q];
    if (shared_vertex(wa, wb) >= 0) {
      if (!arcs[i].empty()) ok4 = false;  // sharing edges must be consecutive on C
      continue;
    }
    if (arcs[i].empty() || arcs[i].size() > 2) ok4 = false;
  }
  if (!ok4) bad.push_back(SproutCondition::kCondIV);

  // ii) anchors, appearance order, and non-consecutive u's disjoint
  {
    bool ok2 = shared_vertex(s.u_edges[0], s.w_edges[q - 1]) >= 0 &&
               shared_vertex(s.u_edges[1 % n], s.w_edges[0]) >= 0;
    if (ok3 && ok4) {
      std::vector<Edge> expected;
      for (int i = 0; i < q; ++i) {
        int ai = (q - 1 + i) % q;
        if (arcs[ai].empty()) {
          Edge wa = s.w_edges[ai], wb = s.w_edges[(ai + 1) % q];
          int x = shared_vertex(wa, wb);
          for (Edge e : s.pending)
            if (x >= 0 && (e.first == x || e.second == x)) expected.push_back(e);
        } else {
          expected.insert(expected.end(), arcs[ai].begin(), arcs[ai].end());
        }
      }
      ok2 = ok2 && expected == s.u_edges;
    }
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) {
        bool consec = (j == i + 1) || (i == 0 && j == n - 1);
        if (!consec && shared_vertex(s.u_edges[i], s.u_edges[j]) >= 0) ok2 = false;
      }
    // the edge-level analogue of the flower rule: no u-edge may meet both of
    // its cyclic neighbors
    for (int i = 0; i < n; ++i)
      if (shared_vertex(s.u_edges[(i + n - 1) % n], s.u_edges[i]) >= 0 &&
          shared_vertex(s.u_edges[i], s.u_edges[(i + 1) % n]) >= 0)
        ok2 = false;
    if (!ok2) bad.push_back(SproutCondition::kCondII);
  }

  // v) pendings pairwise disjoint and off C; other u's on C
  {
    bool ok5 = true;
    for (Edge a : s.pending)
      for (Edge b : s.pending)
        if (a < b && shared_vertex(a, b) >= 0) ok5 = false;
    for (Edge e : s.u_edges)
      if (!pe.count(e) && !ces.count(e)) ok5 = false;
    for (Edge e : s.pending)
      if (ces.count(e)) ok5 = false;
    if (!ok5) bad.push_back(SproutCondition::kCondV);
  }

  return bad;
}

// ---------------------------------------------------------------------------
// extractors
// ---------------------------------------------------------------------------

FlowerWitness extract_flower(const Graph& g, const Hole& hole) {
  const int n = hole.length();
  Graph sq = power(g, 2);
  if (!is_hole(sq, hole.vertices)) fail(Errc::kNotAHole, "input is not a hole of the square");

  const std::vector<int>& u = hole.vertices;
  Bitset uset(g.order());
  for (int x : u) uset.set(x);

  // one connector per hole pair that is non-adjacent in g
  std::vector<int> connector(n, -1);
  for (int i = 0; i < n; ++i) {
    int a = u[i], b = u[(i + 1) % n];
    if (g.adjacent(a, b)) continue;
    for (int w = 0; w < g.order(); ++w) {
      if (uset.test(w) || !g.adjacent(w, a) || !g.adjacent(w, b)) continue;
      if (g.neighbors(w).count_and(uset) != 2) continue;
      connector[i] = w;
      break;
    }
    if (connector[i] < 0)
      fail(Errc::kInternalContradiction, "no exact connector for a non-adjacent hole pair");
  }

  // u_i is demoted to pending when both flanking connectors exist and are
  // adjacent; the cycle then shortcuts across their edge
  std::vector<char> pending(n, 0);
  for (int i = 0; i < n; ++i) {
    int before = connector[(i + n - 1) % n], after = connector[i];
    if (before >= 0 && after >= 0 && g.adjacent(before, after)) pending[i] = 1;
  }

  std::vector<int> cycle;
  std::vector<char> is_w;
  for (int i = 0; i < n; ++i) {
    if (!pending[i]) {
      cycle.push_back(u[i]);
      is_w.push_back(0);
    }
    if (connector[i] >= 0) {
      cycle.push_back(connector[i]);
      is_w.push_back(1);
    }
  }
  std::map<int, std::pair<int, int>> pending_pair;
  for (int i = 0; i < n; ++i)
    if (pending[i])
      pending_pair[u[i]] = std::minmax(connector[(i + n - 1) % n], connector[i]);

  FlowerWitness wit = detail::canonical_flower(cycle, is_w, pending_pair);
  wit.withered_by = std::nullopt;
  if (!verify_flower(g, wit).empty())
    fail(Errc::kInternalContradiction, "extracted flower fails verification");
  if (is_withered(g, wit))
    fail(Errc::kInternalContradiction, "extracted flower is withered");
  return wit;
}

namespace {

// Maps an induced cycle of L(G) back to a closed edge walk of g; empty when
// the line-graph cycle does not correspond to a vertex cycle (star case).
std::vector<Edge> line_cycle_to_edges(const std::vector<Edge>& edge_of_vertex,
                                      const std::vector<int>& lcycle) {
  const int L = int(lcycle.size());
  std::vector<Edge> walk(L);
  for (int i = 0; i < L; ++i) walk[i] = edge_of_vertex[lcycle[i]];
  std::set<int> verts;
  for (int i = 0; i < L; ++i) {
    int x = shared_vertex(walk[i], walk[(i + 1) % L]);
    if (x < 0) return {};
    verts.insert(x);
  }
  if (int(verts.size()) != L) return {};
  return walk;
}

}  // namespace

SproutWitness extract_sprout(const Graph& g, const Hole& hole) {
  const int n = hole.length();
  LineGraphMap lg = line_graph(g);
  Graph lsq = power(lg.lg, 2);
  if (!is_hole(lsq, hole.vertices))
    fail(Errc::kNotAHole, "input is not a hole of the line-graph square");

  FlowerWitness flower = extract_flower(lg.lg, hole);

  std::vector<int> wset = flower.w;  // current w-vertices of the flower in L(G)
  std::sort(wset.begin(), wset.end());

  while (true) {
    std::vector<int> scope = flower.u;
    scope.insert(scope.end(), wset.begin(), wset.end());
    InducedSubgraph sub = induced_subgraph(lg.lg, scope);
    std::vector<int> back = sub.vertex_map;

    // all induced cycles of L(G)[scope], mapped to original line-vertex ids
    std::vector<std::vector<int>> cycles;
    detail::for_each_induced_cycle(sub.graph, 3, 0, [&](const std::vector<int>& c) {
      std::vector<int> orig;
      orig.reserve(c.size());
      for (int x : c) orig.push_back(back[x]);
      cycles.push_back(std::move(orig));
      return true;
    });

    auto count_w = [&](const std::vector<int>& c) {
      int k = 0;
      for (int x : c)
        if (std::binary_search(wset.begin(), wset.end(), x)) ++k;
      return k;
    };

    std::vector<std::vector<int>> full;
    int best_partial = -1;
    std::vector<int> partial;
    for (const auto& c : cycles) {
      int k = count_w(c);
      if (k == int(wset.size()))
        full.push_back(c);
      else if (k > best_partial) {
        best_partial = k;
        partial = c;
      }
    }

    if (!full.empty()) {
      // longer cycles keep more u's on C; try them first
      std::sort(full.begin(), full.end(), [](const auto& a, const auto& b) {
        if (a.size() != b.size()) return a.size() > b.size();
        return a < b;
      });
      for (const auto& lcycle : full) {
        std::vector<Edge> walk = line_cycle_to_edges(lg.edge_of_vertex, lcycle);
        if (walk.empty()) continue;
        detail::SproutParts parts;
        parts.cycle = walk;
        std::set<int> on_cycle(lcycle.begin(), lcycle.end());
        for (size_t i = 0; i < lcycle.size(); ++i)
          if (std::binary_search(wset.begin(), wset.end(), lcycle[i]))
            parts.wpos.push_back(int(i));
        // pendings: u-vertices of the hole off this cycle, attached at the
        // shared vertex of their boundary pair
        const int L = int(walk.size());
        const int q = int(parts.wpos.size());
        std::vector<Edge> pend_edges;
        for (int x : hole.vertices)
          if (!on_cycle.count(x)) pend_edges.push_back(lg.edge_of_vertex[x]);
        bool ok = true;
        std::vector<Edge> used;
        for (int i = 0; i < q && ok; ++i) {
          int cur = parts.wpos[i], nxt = (i + 1 < q) ? parts.wpos[i + 1] : parts.wpos[0] + L;
          if (nxt - cur != 1) continue;
          int x = shared_vertex(walk[cur], walk[nxt % L]);
          if (x < 0) {
            ok = false;
            break;
          }
          Edge chosen{-1, -1};
          for (Edge e : pend_edges)
            if (e.first == x || e.second == x) {
              if (chosen.first >= 0) ok = false;
              chosen = e;
            }
          if (chosen.first < 0) ok = false;
          if (ok) {
            parts.pendings.push_back(chosen);
            parts.boundary_vertex.push_back(x);
            used.push_back(chosen);
          }
        }
        if (!ok || used.size() != pend_edges.size()) continue;
        if (int(parts.wpos.size()) < 2) continue;

        SproutWitness wit = detail::canonical_sprout(parts);
        wit.infertile_by = std::nullopt;
        if (int(wit.u_edges.size()) != n) continue;
        if (!verify_sprout(g, wit).empty()) continue;
        // fertility: an edge joining non-consecutive u-edges would have
        // withered the flower
        std::vector<Edge> members = wit.u_edges;
        members.insert(members.end(), wit.w_edges.begin(), wit.w_edges.end());
        std::sort(members.begin(), members.end());
        bool infertile = false;
        for (Edge e : g.edges()) {
          if (std::binary_search(members.begin(), members.end(), e)) continue;
          std::vector<int> hit;
          for (int i = 0; i < n; ++i)
            if (detail::edges_meet(e, wit.u_edges[i])) hit.push_back(i);
          for (size_t a = 0; a < hit.size() && !infertile; ++a)
            for (size_t b = a + 1; b < hit.size() && !infertile; ++b) {
              int d = hit[b] - hit[a];
              if (d != 1 && d != n - 1) infertile = true;
            }
          if (infertile) break;
        }
        if (infertile)
          fail(Errc::kInternalContradiction, "extracted sprout is infertile");
        return wit;
      }
      fail(Errc::kInternalContradiction, "no all-w induced cycle maps to a sprout");
    }

    // the one legal chord pattern lets a w-vertex be dropped
    if (best_partial < 0) fail(Errc::kInternalContradiction, "no induced cycle through the w's");
    int drop = -1;
    for (int x : wset)
      if (std::find(partial.begin(), partial.end(), x) == partial.end()) {
        drop = x;
        break;
      }
    if (drop < 0) fail(Errc::kInternalContradiction, "w accounting failed");
    std::vector<int> next;
    for (int x : wset)
      if (x != drop) next.push_back(x);
    wset = next;
    if (int(wset.size()) < std::max(2, (n + 1) / 2))
      fail(Errc::kInternalContradiction, "w-set shrank below the sprout bound");
  }
}

}  // namespace gsq
