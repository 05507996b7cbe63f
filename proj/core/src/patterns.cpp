#include "gsq/patterns.hpp"

#include <algorithm>
#include <map>

#include "gsq/witnesses.hpp"

namespace gsq {

std::optional<ClawWitness> find_claw(const Graph& g) {
  for (int c = 0; c < g.order(); ++c) {
    std::vector<int> nb = g.neighbors(c).to_vector();
    for (size_t a = 0; a < nb.size(); ++a)
      for (size_t b = a + 1; b < nb.size(); ++b) {
        if (g.adjacent(nb[a], nb[b])) continue;
        for (size_t d = b + 1; d < nb.size(); ++d)
          if (!g.adjacent(nb[a], nb[d]) && !g.adjacent(nb[b], nb[d]))
            return ClawWitness{c, {nb[a], nb[b], nb[d]}};
      }
  }
  return std::nullopt;
}

std::optional<P5aWitness> find_p5a(const Graph& g) {
  const int n = g.order();
  for (int v2 = 0; v2 < n; ++v2)
    for (int v4 = 0; v4 < n; ++v4) {
      if (v4 == v2 || !g.adjacent(v2, v4)) continue;
      for (int v3 = 0; v3 < n; ++v3) {
        if (v3 == v2 || v3 == v4 || !g.adjacent(v2, v3) || !g.adjacent(v3, v4)) continue;
        for (int v1 = 0; v1 < n; ++v1) {
          if (v1 == v2 || v1 == v3 || v1 == v4) continue;
          if (!g.adjacent(v1, v2) || g.adjacent(v1, v3) || g.adjacent(v1, v4)) continue;
          for (int v5 = 0; v5 < n; ++v5) {
            if (v5 == v1 || v5 == v2 || v5 == v3 || v5 == v4) continue;
            if (!g.adjacent(v4, v5) || g.adjacent(v5, v1) || g.adjacent(v5, v2) ||
                g.adjacent(v5, v3))
              continue;
            return P5aWitness{{v1, v2, v3, v4, v5}};
          }
        }
      }
    }
  return std::nullopt;
}

std::vector<F4Witness> find_f4(const Graph& g, int max_order) {
  if (g.order() > max_order)
    fail(Errc::kTooLarge, "find_f4 bound is " + std::to_string(max_order));
  std::vector<F4Witness> out;
  Bitset all(g.order());
  for (int v = 0; v < g.order(); ++v) all.set(v);

  for (const Hole& c4 : enumerate_induced_cycles(g, 4, 4, g.order())) {
    const auto& w = c4.vertices;  // canonical (w1, w2, w3, w4)
    Bitset wset(g.order());
    for (int x : w) wset.set(x);
    // u_i must see exactly {w_(i-1), w_i}
    auto cand = [&](int a, int b) {
      std::vector<int> cs;
      for (int x = 0; x < g.order(); ++x) {
        if (wset.test(x)) continue;
        if (g.neighbors(x).count_and(wset) != 2) continue;
        if (g.adjacent(x, a) && g.adjacent(x, b)) cs.push_back(x);
      }
      return cs;
    };
    std::array<std::vector<int>, 4> cands = {cand(w[3], w[0]), cand(w[0], w[1]),
                                             cand(w[1], w[2]), cand(w[2], w[3])};
    for (int a : cands[0])
      for (int b : cands[1])
        for (int c : cands[2])
          for (int d : cands[3]) {
            std::array<int, 4> u = {a, b, c, d};
            bool ok = true;
            for (int i = 0; i < 4 && ok; ++i)
              for (int j = i + 1; j < 4 && ok; ++j)
                if (u[i] == u[j] || g.adjacent(u[i], u[j])) ok = false;
            if (!ok) continue;
            F4Witness wit;
            wit.u = u;
            wit.w = {w[0], w[1], w[2], w[3]};
            for (int v = 0; v < g.order() && !wit.suspended_by; ++v) {
              if (wset.test(v) || v == a || v == b || v == c || v == d) continue;
              if ((g.adjacent(v, u[0]) && g.adjacent(v, u[2])) ||
                  (g.adjacent(v, u[1]) && g.adjacent(v, u[3])))
                wit.suspended_by = v;
            }
            out.push_back(wit);
          }
  }
  std::sort(out.begin(), out.end(), [](const F4Witness& x, const F4Witness& y) {
    return std::tie(x.w, x.u) < std::tie(y.w, y.u);
  });
  return out;
}

// ---------------------------------------------------------------------------
// sunflowers
// ---------------------------------------------------------------------------

namespace {

struct SunflowerSearch {
  const Graph& g;
  int n;
  // placement order: u0, w1, u1, w2, ..., w_{n-1}, u_{n-1}, w0
  std::vector<int> u, w;  // w[k] ~ u[k-1], u[k] (0-based, cyclic)
  Bitset used;

  // key: sunflower subgraph (vertices, edges); value: minimal labeling
  std::map<std::pair<std::vector<int>, std::vector<Edge>>, std::pair<std::vector<int>, std::vector<int>>>
      found;

  explicit SunflowerSearch(const Graph& gr, int size)
      : g(gr), n(size), used(gr.order()) {
    w.assign(size_t(n), -1);
  }

  bool u_ok(int x) const {
    if (used.test(x)) return false;
    for (int y : u)
      if (g.adjacent(x, y)) return false;  // U stable
    for (size_t j = 0; j < w.size(); ++j)   // exact pattern vs placed w's
      if (w[j] >= 0 && g.adjacent(x, w[j]) && int(j) != int(u.size()))
        return false;
    return true;
  }

  bool w_ok(int x, int k) const {  // placing w[k], requires ~u[k-1], later ~u[k]
    if (used.test(x)) return false;
    for (size_t i = 0; i < u.size(); ++i) {
      bool required = (int(i) == (k - 1 + n) % n) || (int(i) == k % n);
      if (g.adjacent(x, u[i]) != required) return false;
    }
    return true;
  }

  void close() {
    // G[W] must be chordal
    if (!is_chordal(induced_subgraph(g, w).graph).chordal) return;
    std::vector<int> verts;
    verts.insert(verts.end(), u.begin(), u.end());
    verts.insert(verts.end(), w.begin(), w.end());
    std::sort(verts.begin(), verts.end());
    std::vector<Edge> es;
    for (size_t i = 0; i < verts.size(); ++i)
      for (size_t j = i + 1; j < verts.size(); ++j)
        if (g.adjacent(verts[i], verts[j])) es.emplace_back(verts[i], verts[j]);
    auto key = std::make_pair(verts, es);
    auto lab = std::make_pair(u, w);
    auto it = found.find(key);
    if (it == found.end() || lab < it->second) found[key] = lab;
  }

  void step() {
    int placed_u = int(u.size());
    if (placed_u == n) {
      // final w0 ~ u_{n-1} and u_0, forbidden elsewhere
      std::vector<int> cs;
      g.neighbors(u[n - 1]).for_each([&](int x) {
        if (g.adjacent(x, u[0])) cs.push_back(x);
      });
      for (int x : cs) {
        if (!w_ok(x, 0)) continue;
        w[0] = x;
        close();
        w[0] = -1;
      }
      return;
    }
    if (placed_u == 0) {
      for (int x = 0; x < g.order(); ++x) {
        u.push_back(x);
        used.set(x);
        step();
        used.reset(x);
        u.pop_back();
      }
      return;
    }
    // place w[placed_u] from N(u[placed_u-1]), then u[placed_u]
    std::vector<int> ws = g.neighbors(u[placed_u - 1]).to_vector();
    for (int x : ws) {
      if (!w_ok(x, placed_u)) continue;
      w[placed_u] = x;
      used.set(x);
      std::vector<int> us = g.neighbors(x).to_vector();
      for (int y : us) {
        if (!u_ok(y)) continue;
        u.push_back(y);
        used.set(y);
        step();
        used.reset(y);
        u.pop_back();
      }
      used.reset(x);
      w[placed_u] = -1;
    }
  }
};

}  // namespace

std::vector<SunflowerWitness> find_sunflower(const Graph& g, int n, int max_order) {
  if (n < 3) fail(Errc::kBadArgument, "sunflower size must be >= 3");
  if (g.order() > max_order)
    fail(Errc::kTooLarge, "find_sunflower bound is " + std::to_string(max_order));
  std::vector<SunflowerWitness> out;
  if (2 * n > g.order()) return out;
  SunflowerSearch search(g, n);
  search.step();
  for (const auto& [key, lab] : search.found) {
    SunflowerWitness wit;
    wit.u = lab.first;
    wit.w = lab.second;
    Bitset inside(g.order());
    for (int v : key.first) inside.set(v);
    for (int v = 0; v < g.order() && !wit.suspended_by; ++v) {
      if (inside.test(v)) continue;
      std::vector<int> hit;
      for (int i = 0; i < n; ++i)
        if (g.adjacent(v, wit.u[i])) hit.push_back(i);
      for (size_t a = 0; a < hit.size() && !wit.suspended_by; ++a)
        for (size_t b = a + 1; b < hit.size() && !wit.suspended_by; ++b) {
          int d = hit[b] - hit[a];
          if (d != 1 && d != n - 1) wit.suspended_by = v;
        }
    }
    out.push_back(std::move(wit));
  }
  return out;
}

// ---------------------------------------------------------------------------
// flowers
// ---------------------------------------------------------------------------

namespace detail {
namespace {

// Builds the labeled witness for one (start, direction) choice and derives
// the u-order by the appearance rule: numbering starts in the arc that ends
// at w_1, so that u1 ~ wq and u2 ~ w1.
FlowerWitness flower_variant(const std::vector<int>& cycle, const std::vector<char>& w_at,
                             const std::map<int, std::pair<int, int>>& pending_pair, int start,
                             int dir) {
  const int L = int(cycle.size());
  std::vector<int> order;  // cycle re-rooted at `start` following dir
  order.reserve(L);
  for (int i = 0; i < L; ++i) order.push_back(cycle[((start + dir * i) % L + L) % L]);

  std::vector<int> wpos;
  for (int i = 0; i < L; ++i)
    if (w_at[((start + dir * i) % L + L) % L]) wpos.push_back(i);
  const int q = int(wpos.size());

  // arc i runs from wpos[i] to wpos[(i+1)%q]; collect per-arc u content
  std::vector<std::vector<int>> content(q);
  std::map<std::pair<int, int>, int> pend_of_pair;
  for (const auto& [p, pr] : pending_pair) pend_of_pair[pr] = p;
  for (int i = 0; i < q; ++i) {
    int from = wpos[i], to = (i + 1 < q) ? wpos[i + 1] : L;
    for (int k = from + 1; k < to; ++k) content[i].push_back(order[k % L]);
    if (content[i].empty()) {
      int wa = order[from], wb = order[to % L];
      auto it = pend_of_pair.find(std::minmax(wa, wb));
      content[i].push_back(it->second);
    }
  }
  FlowerWitness wit;
  for (int i = 0; i < q; ++i) wit.w.push_back(order[wpos[i]]);
  for (int i = 0; i < q; ++i) {
    const auto& arc = content[(q - 1 + i) % q];  // start with the arc ending at w1
    wit.u.insert(wit.u.end(), arc.begin(), arc.end());
  }
  wit.cycle = order;
  for (const auto& [p, pr] : pending_pair) wit.pending.push_back(p);
  std::sort(wit.pending.begin(), wit.pending.end());
  return wit;
}

}  // namespace

FlowerWitness canonical_flower(const std::vector<int>& cycle, const std::vector<char>& w_at,
                               const std::map<int, std::pair<int, int>>& pending_pair) {
  std::optional<FlowerWitness> best;
  const int L = int(cycle.size());
  for (int s = 0; s < L; ++s) {
    if (!w_at[s]) continue;
    for (int dir : {1, -1}) {
      FlowerWitness v = flower_variant(cycle, w_at, pending_pair, s, dir);
      if (!best || std::tie(v.w, v.u, v.cycle) < std::tie(best->w, best->u, best->cycle))
        best = std::move(v);
    }
  }
  return *best;
}

}  // namespace detail

namespace {

struct FlowerSearch {
  const Graph& g;
  int n_target;

  std::vector<int> cycle;  // w's and on-cycle u's, in walk order
  std::vector<char> cyc_is_w;
  std::vector<int> wseq;
  std::vector<int> useq;  // all u's in placement order (pendings included)
  std::vector<char> upend;
  std::map<int, std::pair<int, int>> pending_pair;
  Bitset used;
  int placed_u = 0;

  std::map<std::vector<int>, FlowerWitness> found;

  FlowerSearch(const Graph& gr, int n) : g(gr), n_target(n), used(gr.order()) {}

  // may x (a new on-cycle u) be adjacent to placed u's? only the previous one
  // or, for the cyclic wrap, the first one; never a pending.
  bool cycle_u_ok(int x) const {
    if (used.test(x)) return false;
    for (size_t i = 0; i < useq.size(); ++i) {
      if (!g.adjacent(x, useq[i])) continue;
      bool last = (i + 1 == useq.size());
      bool first = (i == 0);
      if (!((last && !upend[i]) || (first && !upend[i]))) return false;
    }
    return true;
  }

  // pending vertices see exactly their two w's and nothing else placed
  bool pending_ok(int x, int wa, int wb) const {
    if (used.test(x)) return false;
    for (int y : useq)
      if (g.adjacent(x, y)) return false;
    for (int y : wseq)
      if (y != wa && y != wb && g.adjacent(x, y)) return false;
    return true;
  }

  // x about to become a u with allowed w-contacts `allow0`/`allow1`
  bool u_w_exact(int x, int allow0, int allow1) const {
    for (int y : wseq)
      if (y != allow0 && y != allow1 && g.adjacent(x, y)) return false;
    return true;
  }

  // a new w may touch only the u designated as its contact in this segment
  bool new_w_ok(int x, int contact) const {
    if (used.test(x)) return false;
    for (int y : useq)
      if (y != contact && g.adjacent(x, y)) return false;
    return true;
  }

  void emit() {
    if (int(cycle.size()) < 3) return;  // q=2 with two direct arcs is no cycle
    // full exactness sweep: non-consecutive u's non-adjacent, pendings clean
    const int n = n_target;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) {
        bool consec = (j == i + 1) || (i == 0 && j == n - 1);
        if (!g.adjacent(useq[i], useq[j])) continue;
        if (!consec || upend[i] || upend[j]) return;
      }
    for (int i = 0; i < n; ++i)
      if (g.adjacent(useq[(i + n - 1) % n], useq[i]) && g.adjacent(useq[i], useq[(i + 1) % n]))
        return;
    for (const auto& [p, pr] : pending_pair) {
      int cnt = 0;
      for (int y : wseq)
        if (g.adjacent(p, y)) ++cnt;
      if (cnt != 2) return;
    }
    std::vector<char> w_at(cycle.size(), 0);
    for (size_t i = 0; i < cycle.size(); ++i) w_at[i] = cyc_is_w[i];
    FlowerWitness wit = detail::canonical_flower(cycle, w_at, pending_pair);
    std::vector<int> key;
    auto push = [&key](const std::vector<int>& xs) {
      key.insert(key.end(), xs.begin(), xs.end());
      key.push_back(-1);
    };
    push(wit.w);
    push(wit.u);
    push(wit.cycle);
    push(wit.pending);
    found.emplace(std::move(key), std::move(wit));
  }

  void push_u(int x, bool pend) {
    useq.push_back(x);
    upend.push_back(pend ? 1 : 0);
    used.set(x);
    ++placed_u;
  }
  void pop_u() {
    used.reset(useq.back());
    useq.pop_back();
    upend.pop_back();
    --placed_u;
  }

  void place_segment() {
    const int wlast = wseq.back();
    const int deficit = n_target - placed_u;
    const bool may_extend = deficit >= 2;
    const bool may_close = int(wseq.size()) >= 2 && deficit >= 1 && deficit <= 2;

    auto targets = [&](const std::function<void(int, bool)>& f) {
      if (may_close) f(wseq[0], true);
      if (may_extend)
        for (int x = 0; x < g.order(); ++x)
          if (!used.test(x)) f(x, false);
    };

    // direct arc: edge wlast--wnext on the cycle plus one pending vertex
    targets([&](int wnext, bool closing) {
      if (!g.adjacent(wlast, wnext)) return;
      if (closing && deficit != 1) return;
      std::vector<int> cands;
      g.neighbors(wlast).for_each([&](int p) {
        if (g.adjacent(p, wnext) && pending_ok(p, wlast, wnext)) cands.push_back(p);
      });
      for (int p : cands) {
        if (!closing && !new_w_ok(wnext, p)) continue;
        if (closing) {
          // w1 was placed before p; re-check w1 against it is already in
          // pending_ok; nothing else to do
          push_u(p, true);
          pending_pair[p] = std::minmax(wlast, wnext);
          emit();
          pending_pair.erase(p);
          pop_u();
        } else {
          push_u(p, true);
          pending_pair[p] = std::minmax(wlast, wnext);
          wseq.push_back(wnext);
          cycle.push_back(wnext);
          cyc_is_w.push_back(1);
          used.set(wnext);
          place_segment();
          used.reset(wnext);
          cycle.pop_back();
          cyc_is_w.pop_back();
          wseq.pop_back();
          pending_pair.erase(p);
          pop_u();
        }
      }
    });

    // one-u arc: wlast -- u -- wnext
    targets([&](int wnext, bool closing) {
      if (closing && deficit != 1) return;
      std::vector<int> us;
      g.neighbors(wlast).for_each([&](int u) {
        if (!used.test(u) && u != wnext && g.adjacent(u, wnext)) us.push_back(u);
      });
      for (int u : us) {
        if (!cycle_u_ok(u)) continue;
        if (!u_w_exact(u, wlast, wnext)) continue;
        if (!closing && !new_w_ok(wnext, u)) continue;
        push_u(u, false);
        cycle.push_back(u);
        cyc_is_w.push_back(0);
        if (closing) {
          emit();
        } else {
          wseq.push_back(wnext);
          cycle.push_back(wnext);
          cyc_is_w.push_back(1);
          used.set(wnext);
          place_segment();
          used.reset(wnext);
          cycle.pop_back();
          cyc_is_w.pop_back();
          wseq.pop_back();
        }
        cycle.pop_back();
        cyc_is_w.pop_back();
        pop_u();
      }
    });

    // two-u arc: wlast -- u -- t -- wnext
    targets([&](int wnext, bool closing) {
      if (closing ? deficit != 2 : deficit < 3) return;
      std::vector<int> us;
      g.neighbors(wlast).for_each([&](int u) {
        if (!used.test(u) && u != wnext) us.push_back(u);
      });
      for (int u : us) {
        if (!cycle_u_ok(u)) continue;
        if (!u_w_exact(u, wlast, -1)) continue;
        if (g.adjacent(u, wnext)) continue;  // vi: u must not touch wnext
        push_u(u, false);
        cycle.push_back(u);
        cyc_is_w.push_back(0);
        std::vector<int> ts;
        g.neighbors(u).for_each([&](int t) {
          if (!used.test(t) && t != wnext && g.adjacent(t, wnext)) ts.push_back(t);
        });
        for (int t : ts) {
          if (!cycle_u_ok(t)) continue;
          if (!u_w_exact(t, wnext, -1)) continue;
          if (g.adjacent(t, wlast)) continue;
          if (!closing && !new_w_ok(wnext, t)) continue;
          push_u(t, false);
          cycle.push_back(t);
          cyc_is_w.push_back(0);
          if (closing) {
            emit();
          } else {
            wseq.push_back(wnext);
            cycle.push_back(wnext);
            cyc_is_w.push_back(1);
            used.set(wnext);
            place_segment();
            used.reset(wnext);
            cycle.pop_back();
            cyc_is_w.pop_back();
            wseq.pop_back();
          }
          cycle.pop_back();
          cyc_is_w.pop_back();
          pop_u();
        }
        cycle.pop_back();
        cyc_is_w.pop_back();
        pop_u();
      }
    });
  }

  void run() {
    for (int w1 = 0; w1 < g.order(); ++w1) {
      wseq = {w1};
      cycle = {w1};
      cyc_is_w = {1};
      used = Bitset(g.order());
      used.set(w1);
      place_segment();
    }
  }
};

}  // namespace

std::vector<FlowerWitness> find_flower(const Graph& g, int n, int max_order) {
  if (n < 4) fail(Errc::kBadArgument, "flower size must be >= 4");
  if (g.order() > max_order)
    fail(Errc::kTooLarge, "find_flower bound is " + std::to_string(max_order));
  std::vector<FlowerWitness> out;
  if (n + (n + 1) / 2 > g.order()) return out;
  FlowerSearch search(g, n);
  search.run();
  for (auto& [key, wit] : search.found) {
    wit.withered_by = std::nullopt;
    Bitset uset(g.order());
    for (int x : wit.u) uset.set(x);
    for (int v = 0; v < g.order() && !wit.withered_by; ++v) {
      if (uset.test(v)) continue;
      std::vector<int> hit;
      for (int i = 0; i < n; ++i)
        if (g.adjacent(v, wit.u[i])) hit.push_back(i);
      for (size_t a = 0; a < hit.size() && !wit.withered_by; ++a)
        for (size_t b = a + 1; b < hit.size() && !wit.withered_by; ++b) {
          int d = hit[b] - hit[a];
          if (d != 1 && d != n - 1) wit.withered_by = v;
        }
    }
    out.push_back(wit);
  }
  std::sort(out.begin(), out.end(), [](const FlowerWitness& a, const FlowerWitness& b) {
    auto sa = a.u, sb = b.u, wa = a.w, wb = b.w;
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    std::sort(wa.begin(), wa.end());
    std::sort(wb.begin(), wb.end());
    return std::tie(sa, wa, a.cycle, a.u) < std::tie(sb, wb, b.cycle, b.u);
  });
  return out;
}

std::optional<int> is_withered(const Graph& g, const FlowerWitness& f) {
  if (!verify_flower(g, f).empty())
    fail(Errc::kInvalidWitness, "is_withered requires a verified flower");
  const int n = int(f.u.size());
  Bitset uset(g.order());
  for (int x : f.u) uset.set(x);
  for (int v = 0; v < g.order(); ++v) {
    if (uset.test(v)) continue;
    std::vector<int> hit;
    for (int i = 0; i < n; ++i)
      if (g.adjacent(v, f.u[i])) hit.push_back(i);
    for (size_t a = 0; a < hit.size(); ++a)
      for (size_t b = a + 1; b < hit.size(); ++b) {
        int d = hit[b] - hit[a];
        if (d != 1 && d != n - 1) return v;
      }
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// sprouts
// ---------------------------------------------------------------------------

std::vector<std::vector<int>> all_cycles(const Graph& g, int min_len) {
  std::vector<std::vector<int>> out;
  const int n = g.order();
  Bitset on(n);
  std::vector<int> path;
  auto dfs = [&](auto&& self, int s) -> void {
    int last = path.back();
    std::vector<int> nbrs;
    g.neighbors(last).for_each([&](int w) {
      if (w > s && !on.test(w)) nbrs.push_back(w);
    });
    for (int w : nbrs) {
      if (g.adjacent(w, s) && int(path.size()) + 1 >= min_len && path[1] < w) {
        std::vector<int> cyc = path;
        cyc.push_back(w);
        out.push_back(std::move(cyc));
      }
      on.set(w);
      path.push_back(w);
      self(self, s);
      path.pop_back();
      on.reset(w);
    }
  };
  for (int s = 0; s < n; ++s) {
    std::vector<int> seconds;
    g.neighbors(s).for_each([&](int a) {
      if (a > s) seconds.push_back(a);
    });
    for (int a : seconds) {
      path = {s, a};
      on = Bitset(n);
      on.set(s);
      on.set(a);
      dfs(dfs, s);
    }
  }
  return out;
}

namespace detail {
namespace {

// analogous to flower_variant, at the edge level
SproutWitness sprout_variant(const SproutParts& a, int start, int dir) {
  const int L = int(a.cycle.size());
  const int q = int(a.wpos.size());
  std::vector<char> is_w(L, 0);
  for (int p : a.wpos) is_w[p] = 1;
  std::map<int, Edge> pending_at;  // shared vertex -> pending edge
  for (size_t i = 0; i < a.pendings.size(); ++i) pending_at[a.boundary_vertex[i]] = a.pendings[i];

  std::vector<Edge> order(L);
  std::vector<char> w_at(L);
  int s0 = a.wpos[start];
  for (int i = 0; i < L; ++i) {
    int idx = ((s0 + dir * i) % L + L) % L;
    order[i] = a.cycle[idx];
    w_at[i] = is_w[idx];
  }
  std::vector<int> wp;
  for (int i = 0; i < L; ++i)
    if (w_at[i]) wp.push_back(i);

  auto shared_vertex = [](Edge x, Edge y) -> int {
    if (x.first == y.first || x.first == y.second) return x.first;
    if (x.second == y.first || x.second == y.second) return x.second;
    return -1;
  };

  std::vector<std::vector<Edge>> content(q);
  for (int i = 0; i < q; ++i) {
    int from = wp[i], to = (i + 1 < q) ? wp[i + 1] : L;
    for (int k = from + 1; k < to; ++k) content[i].push_back(order[k % L]);
    if (content[i].empty()) {
      int x = shared_vertex(order[from], order[to % L]);
      content[i].push_back(pending_at.at(x));
    }
  }
  SproutWitness wit;
  for (int i = 0; i < q; ++i) wit.w_edges.push_back(order[wp[i]]);
  for (int i = 0; i < q; ++i) {
    const auto& arc = content[(q - 1 + i) % q];
    wit.u_edges.insert(wit.u_edges.end(), arc.begin(), arc.end());
  }
  wit.cycle = order;
  wit.pending = a.pendings;
  std::sort(wit.pending.begin(), wit.pending.end());
  return wit;
}

}  // namespace

SproutWitness canonical_sprout(const SproutParts& a) {
  std::optional<SproutWitness> best;
  for (size_t s = 0; s < a.wpos.size(); ++s)
    for (int dir : {1, -1}) {
      SproutWitness v = sprout_variant(a, int(s), dir);
      if (!best ||
          std::tie(v.w_edges, v.u_edges, v.cycle) < std::tie(best->w_edges, best->u_edges, best->cycle))
        best = std::move(v);
    }
  return *best;
}

bool edges_meet(Edge a, Edge b) {
  return a.first == b.first || a.first == b.second || a.second == b.first || a.second == b.second;
}

}  // namespace detail

using detail::edges_meet;

std::vector<SproutWitness> find_sprout(const Graph& g, int n, int max_edges) {
  if (n < 4) fail(Errc::kBadArgument, "sprout size must be >= 4");
  if (g.size() > max_edges)
    fail(Errc::kTooLarge, "find_sprout bound is " + std::to_string(max_edges) + " edges");

  std::vector<std::vector<int>> edges_at(g.order());
  std::vector<Edge> all_edges = g.edges();
  for (size_t e = 0; e < all_edges.size(); ++e) {
    edges_at[all_edges[e].first].push_back(int(e));
    edges_at[all_edges[e].second].push_back(int(e));
  }

  std::map<std::vector<int>, SproutWitness> found;

  for (const std::vector<int>& vcyc : all_cycles(g, 3)) {
    const int L = int(vcyc.size());
    std::vector<Edge> ecyc(L);
    Bitset on_cycle(int(all_edges.size()));
    for (int i = 0; i < L; ++i) {
      ecyc[i] = make_edge(vcyc[i], vcyc[(i + 1) % L]);
      on_cycle.set(int(std::lower_bound(all_edges.begin(), all_edges.end(), ecyc[i]) -
                       all_edges.begin()));
    }

    // choose w positions with cyclic gaps <= 2; u contribution per gap is
    // max(gap, 1) (gap 0 takes one pending edge)
    std::vector<int> pos;
    auto finish = [&](int wrap_gap) {
      if (wrap_gap < 0 || wrap_gap > 2) return;
      int total = wrap_gap == 0 ? 1 : wrap_gap;
      for (size_t i = 0; i + 1 < pos.size(); ++i) {
        int gap = pos[i + 1] - pos[i] - 1;
        total += gap == 0 ? 1 : gap;
      }
      if (total != n || int(pos.size()) < 2) return;

      // collect gap-0 boundaries; choose one pending per shared vertex
      detail::SproutParts a;
      a.cycle = ecyc;
      a.wpos = pos;
      const int q = int(pos.size());
      std::vector<int> shared;
      for (int i = 0; i < q; ++i) {
        int cur = pos[i], nxt = (i + 1 < q) ? pos[i + 1] : pos[0] + L;
        if (nxt - cur == 1) shared.push_back(vcyc[(cur + 1) % L]);
      }
      // DFS over pending choices
      std::vector<int> chosen;  // edge ids
      auto pick = [&](auto&& self, size_t bi) -> void {
        if (bi == shared.size()) {
          a.pendings.clear();
          a.boundary_vertex = shared;
          for (int id : chosen) a.pendings.push_back(all_edges[id]);
          // exactness: each shared vertex lies on exactly one u-edge
          std::vector<Edge> cyc_u;
          for (int i = 0; i < q; ++i) {
            int cur = pos[i], nxt = (i + 1 < q) ? pos[i + 1] : pos[0] + L;
            for (int k = cur + 1; k < nxt; ++k) cyc_u.push_back(ecyc[k % L]);
          }
          std::vector<Edge> all_u = cyc_u;
          all_u.insert(all_u.end(), a.pendings.begin(), a.pendings.end());
          for (int x : shared) {
            int cnt = 0;
            for (Edge e : all_u)
              if (e.first == x || e.second == x) ++cnt;
            if (cnt != 1) return;
          }
          // pendings pairwise disjoint
          for (size_t i = 0; i < a.pendings.size(); ++i)
            for (size_t j = i + 1; j < a.pendings.size(); ++j)
              if (edges_meet(a.pendings[i], a.pendings[j])) return;
          // a pending is a star with its two pair w-edges only: its far
          // endpoint must avoid every other sprout edge
          for (size_t i = 0; i < a.pendings.size(); ++i) {
            Edge p = a.pendings[i];
            int x = shared[i];
            int far = p.first == x ? p.second : p.first;
            for (int k = 0; k < L; ++k) {
              Edge e = ecyc[k];
              bool pair_w = e.first == x || e.second == x;  // the two w's at x
              if (pair_w) continue;
              if (e.first == far || e.second == far) return;
            }
          }

          SproutWitness wit = detail::canonical_sprout(a);
          // non-consecutive u-edges must be disjoint; no u-edge may meet
          // both of its cyclic neighbors
          for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) {
              bool consec = (j == i + 1) || (i == 0 && j == n - 1);
              if (!consec && edges_meet(wit.u_edges[i], wit.u_edges[j])) return;
            }
          for (int i = 0; i < n; ++i)
            if (edges_meet(wit.u_edges[(i + n - 1) % n], wit.u_edges[i]) &&
                edges_meet(wit.u_edges[i], wit.u_edges[(i + 1) % n]))
              return;
          std::vector<int> key;
          auto push = [&key](const std::vector<Edge>& xs) {
            for (Edge e : xs) {
              key.push_back(e.first);
              key.push_back(e.second);
            }
            key.push_back(-1);
          };
          push(wit.w_edges);
          push(wit.u_edges);
          push(wit.cycle);
          push(wit.pending);
          found.emplace(std::move(key), std::move(wit));
          return;
        }
        int x = shared[bi];
        for (int id : edges_at[x]) {
          if (on_cycle.test(id)) continue;
          if (std::find(chosen.begin(), chosen.end(), id) != chosen.end()) continue;
          chosen.push_back(id);
          self(self, bi + 1);
          chosen.pop_back();
        }
      };
      pick(pick, 0);
    };

    auto select = [&](auto&& self, int next_min) -> void {
      if (!pos.empty()) {
        int wrap_gap = L - pos.back() - 1 + pos[0];
        finish(wrap_gap);
      }
      if (int(pos.size()) >= L) return;
      int lo = pos.empty() ? 0 : next_min;
      int hi = pos.empty() ? L - 1 : std::min(pos.back() + 3, L - 1);
      for (int p = lo; p <= hi; ++p) {
        if (!pos.empty() && p - pos.back() - 1 > 2) break;
        pos.push_back(p);
        self(self, p + 1);
        pos.pop_back();
      }
    };
    select(select, 0);
  }

  std::vector<SproutWitness> out;
  for (auto& [key, wit] : found) {
    wit.infertile_by = std::nullopt;
    std::vector<Edge> members = wit.u_edges;
    members.insert(members.end(), wit.w_edges.begin(), wit.w_edges.end());
    std::sort(members.begin(), members.end());
    for (Edge e : all_edges) {
      if (std::binary_search(members.begin(), members.end(), e)) continue;
      std::vector<int> hit;
      for (int i = 0; i < n; ++i)
        if (edges_meet(e, wit.u_edges[i])) hit.push_back(i);
      bool bad = false;
      for (size_t a = 0; a < hit.size() && !bad; ++a)
        for (size_t b = a + 1; b < hit.size() && !bad; ++b) {
          int d = hit[b] - hit[a];
          if (d != 1 && d != n - 1) bad = true;
        }
      if (bad) {
        wit.infertile_by = e;
        break;
      }
    }
    out.push_back(wit);
  }
  std::sort(out.begin(), out.end(), [](const SproutWitness& a, const SproutWitness& b) {
    auto sa = a.u_edges, sb = b.u_edges, wa = a.w_edges, wb = b.w_edges;
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    std::sort(wa.begin(), wa.end());
    std::sort(wb.begin(), wb.end());
    return std::tie(sa, wa, a.cycle, a.u_edges) < std::tie(sb, wb, b.cycle, b.u_edges);
  });
  return out;
}

SufficientSquareReport check_sufficient_chordalsq(const Graph& g) {
  SufficientSquareReport rep;
  rep.claw_free = !find_claw(g).has_value();
  rep.no_long_hole = !has_induced_cycle_geq(g, 5, g.order()).has_value();
  rep.all_f4_suspended = true;
  for (const F4Witness& f : find_f4(g, g.order()))
    if (!f.suspended_by) {
      rep.all_f4_suspended = false;
      break;
    }
  rep.applicable = rep.claw_free && rep.no_long_hole && rep.all_f4_suspended;
  return rep;
}

}  // namespace gsq
