#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>

#include "gsq/graph.hpp"

namespace gsq {
namespace {

// Iterated degree refinement. The returned color ids depend only on the
// isomorphism type (keys are re-ranked by sorted signature each round), so
// restricting orderings to "colors non-decreasing" is relabeling-invariant.
std::vector<int> stable_colors(const std::vector<uint64_t>& adj, int n) {
  std::vector<int> color(n);
  {
    std::vector<int> degs;
    for (int v = 0; v < n; ++v) degs.push_back(std::popcount(adj[v]));
    std::vector<int> sorted = degs;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    for (int v = 0; v < n; ++v)
      color[v] = int(std::lower_bound(sorted.begin(), sorted.end(), degs[v]) - sorted.begin());
  }
  int classes = 0;
  for (int v = 0; v < n; ++v) classes = std::max(classes, color[v] + 1);
  for (int round = 0; round < n; ++round) {
    std::vector<std::vector<int>> key(n);
    for (int v = 0; v < n; ++v) {
      std::vector<int> nb;
      uint64_t x = adj[v];
      while (x) {
        nb.push_back(color[std::countr_zero(x)]);
        x &= x - 1;
      }
      std::sort(nb.begin(), nb.end());
      key[v].push_back(color[v]);
      key[v].insert(key[v].end(), nb.begin(), nb.end());
    }
    std::map<std::vector<int>, int> rank;
    for (int v = 0; v < n; ++v) rank[key[v]] = 0;
    int next = 0;
    for (auto& [k, r] : rank) r = next++;
    if (next == classes) break;  // refinement only ever splits classes
    classes = next;
    for (int v = 0; v < n; ++v) color[v] = rank[key[v]];
  }
  return color;
}

struct CanonSearch {
  int n;
  const std::vector<uint64_t>& adj;
  const std::vector<int>& color;

  std::vector<int> placed;
  uint64_t used = 0;
  std::vector<char> bits;  // adjacency bits of the partial ordering, level by level
  std::vector<char> best;
  bool have_best = false;

  // lexicographic compare of current prefix against best[0..len)
  int cmp_prefix() const {
    for (size_t i = 0; i < bits.size(); ++i) {
      if (bits[i] != best[i]) return bits[i] < best[i] ? -1 : 1;
    }
    return 0;
  }

  void dfs() {
    if (int(placed.size()) == n) {
      if (!have_best || cmp_prefix() > 0) {
        best = bits;
        have_best = true;
      }
      return;
    }
    int min_color = -1;
    for (int v = 0; v < n; ++v)
      if (!((used >> v) & 1) && (min_color == -1 || color[v] < min_color)) min_color = color[v];

    struct Cand {
      uint64_t key;  // adjacency bits packed MSB-first, for max-first ordering
      int v;
    };
    std::vector<Cand> cands;
    for (int v = 0; v < n; ++v) {
      if (((used >> v) & 1) || color[v] != min_color) continue;
      uint64_t key = 0;
      for (size_t i = 0; i < placed.size(); ++i)
        if ((adj[v] >> placed[i]) & 1) key |= uint64_t{1} << (63 - i);
      cands.push_back({key, v});
    }
    std::sort(cands.begin(), cands.end(), [](const Cand& a, const Cand& b) {
      return a.key != b.key ? a.key > b.key : a.v < b.v;
    });

    std::vector<int> tried;
    for (const Cand& c : cands) {
      // interchangeable twins explore identical subtrees; keep one
      bool twin = false;
      for (int u : tried) {
        uint64_t diff = adj[u] ^ adj[c.v];
        diff &= ~((uint64_t{1} << u) | (uint64_t{1} << c.v));
        if (diff == 0) {
          twin = true;
          break;
        }
      }
      if (twin) continue;
      tried.push_back(c.v);

      size_t mark = bits.size();
      for (size_t i = 0; i < placed.size(); ++i)
        bits.push_back(char((adj[c.v] >> placed[i]) & 1));
      if (have_best && cmp_prefix() < 0) {
        bits.resize(mark);
        continue;
      }
      placed.push_back(c.v);
      used |= uint64_t{1} << c.v;
      dfs();
      used &= ~(uint64_t{1} << c.v);
      placed.pop_back();
      bits.resize(mark);
    }
  }
};

}  // namespace

std::string canonical_form(const Graph& g, int max_order) {
  const int n = g.order();
  if (n > max_order || n > 62)
    fail(Errc::kTooLarge, "canonical_form supports order <= " + std::to_string(std::min(max_order, 62)));
  std::vector<uint64_t> adj(n, 0);
  for (int u = 0; u < n; ++u)
    g.neighbors(u).for_each([&](int v) { adj[u] |= uint64_t{1} << v; });

  std::string out;
  out.push_back(char(n));
  if (n <= 1) return out;

  std::vector<int> color = stable_colors(adj, n);
  CanonSearch search{n, adj, color, {}, 0, {}, {}, false};
  search.dfs();

  uint8_t acc = 0;
  int nb = 0;
  for (char b : search.best) {
    acc = uint8_t((acc << 1) | (b & 1));
    if (++nb == 8) {
      out.push_back(char(acc));
      acc = 0;
      nb = 0;
    }
  }
  if (nb) out.push_back(char(acc << (8 - nb)));
  return out;
}

}  // namespace gsq
