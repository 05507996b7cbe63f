#include "gsq/theorems.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <chrono>
#include <map>
#include <set>
#include <stdexcept>
#include <thread>

#include "gsq/chordality.hpp"
#include "gsq/json_out.hpp"
#include "gsq/patterns.hpp"
#include "gsq/witnesses.hpp"
#include "json.hpp"

namespace gsq {

namespace {

using json = nlohmann::ordered_json;

const std::vector<TheoremInfo> kRegistry = {
    {TheoremId::kDiameterComplete, "DIAMETER_COMPLETE",
     "every component of G^k is complete iff k >= diameter(G)", 8, 0},
    {TheoremId::kDuchet, "DUCHET", "if G^k is chordal then G^(k+2) is chordal", 8, 0},
    {TheoremId::kLsEquiv, "LS_EQUIV",
     "for chordal G: G^2 is chordal iff G has no unsuspended sunflower of size >= 4", 8, 0},
    {TheoremId::kLsClosed, "LS_CLOSED",
     "for chordal G without unsuspended sunflowers: every power is chordal and stays "
     "sunflower-free",
     8, 0},
    {TheoremId::kNoTwoConsec, "NO_TWO_CONSEC",
     "for a hole C of G^k and r <= floor(k/2): G^r has no two consecutive edges of C and at "
     "most floor(|C|/2) of its edges",
     8, 0},
    {TheoremId::kBpSufficient, "BP_SUFFICIENT",
     "no induced claw, no induced P5+a, no induced cycle of length >= 6 implies G^2 chordal", 12,
     0},
    {TheoremId::kFlotow, "FLOTOW", "chordal and claw-free implies G^2 chordal", 12, 0},
    {TheoremId::kNewSufficient, "NEW_SUFFICIENT",
     "claw-free, no induced cycle of length >= 5, every induced F4 suspended implies G^2 "
     "chordal",
     12, 0},
    {TheoremId::kFlowerEquiv, "FLOWER_EQUIV",
     "G^2 is chordal iff every induced flower of size >= 4 is withered", 7, 0},
    {TheoremId::kLineCycle, "LINE_CYCLE",
     "G has a cycle of length l >= 4 iff L(G) has an induced cycle of length l", 8, 0},
    {TheoremId::kLgCycleBound, "LG_CYCLE_BOUND",
     "if G has no induced cycle of length >= f then neither does L(G)^2 (f in 4..6)", 8, 0},
    {TheoremId::kCameron, "CAMERON", "G chordal implies L(G)^2 chordal", 8, 0},
    {TheoremId::kSproutEquiv, "SPROUT_EQUIV",
     "L(G)^2 has an induced cycle of length l iff G has a fertile sprout of size l", 7, 12},
    {TheoremId::kLgSquareEquiv, "LG_SQUARE_EQUIV",
     "L(G)^2 is chordal iff G has no induced cycle of length >= 6 and no fertile sprout of "
     "size 4 or 5",
     7, 12},
};

CheckResult holds() { return {CheckVerdict::kHolds, ""}; }
CheckResult vacuous() { return {CheckVerdict::kVacuous, ""}; }
CheckResult cex(const json& j) { return {CheckVerdict::kCounterexample, j.dump()}; }

bool components_complete(const Graph& g) {
  for (const auto& comp : components(g))
    for (size_t a = 0; a < comp.size(); ++a)
      for (size_t b = a + 1; b < comp.size(); ++b)
        if (!g.adjacent(comp[a], comp[b])) return false;
  return true;
}

// re-verification of counterexample payloads: a hole we report must really
// be a hole, a flower/sprout must verify
void require_hole(const Graph& g, const Hole& h) {
  if (!is_hole(g, h.vertices)) throw std::logic_error("counterexample hole fails re-verification");
}

CheckResult check_diameter_complete(const Graph& g) {
  const int dm = diameter(g);
  for (int k = 1; k <= g.order(); ++k) {
    bool complete = components_complete(power(g, k));
    if (complete != (k >= dm)) {
      json j;
      j["k"] = k;
      j["diameter"] = dm;
      j["components_complete"] = complete;
      return cex(j);
    }
  }
  return holds();
}

CheckResult check_duchet(const Graph& g) {
  const int dm = g.size() == 0 ? 0 : diameter(g);
  for (int k = 1; k <= dm + 2; ++k) {
    if (!is_chordal(power(g, k)).chordal) continue;
    ChordalityCertificate c2 = is_chordal(power(g, k + 2));
    if (!c2.chordal) {
      require_hole(power(g, k + 2), c2.hole);
      json j;
      j["k"] = k;
      j["hole_in_power_k_plus_2"] = json::parse(to_json(c2.hole));
      return cex(j);
    }
  }
  return holds();
}

bool has_unsuspended_sunflower(const Graph& g, std::optional<SunflowerWitness>* out = nullptr) {
  for (int s = 4; 2 * s <= g.order(); ++s)
    for (const SunflowerWitness& w : find_sunflower(g, s))
      if (!w.suspended_by) {
        if (out) *out = w;
        return true;
      }
  return false;
}

CheckResult check_ls_equiv(const Graph& g) {
  if (!is_chordal(g).chordal) return vacuous();
  bool square_chordal = is_chordal(power(g, 2)).chordal;
  std::optional<SunflowerWitness> w;
  bool unsuspended = has_unsuspended_sunflower(g, &w);
  if (square_chordal == !unsuspended) return holds();
  json j;
  j["square_chordal"] = square_chordal;
  j["unsuspended_sunflower"] = w ? json::parse(to_json(*w)) : json(nullptr);
  return cex(j);
}

CheckResult check_ls_closed(const Graph& g) {
  if (!is_chordal(g).chordal || has_unsuspended_sunflower(g)) return vacuous();
  const int dm = g.size() == 0 ? 0 : diameter(g);
  for (int k = 1; k <= dm + 1; ++k) {
    Graph gk = power(g, k);
    ChordalityCertificate c = is_chordal(gk);
    std::optional<SunflowerWitness> w;
    if (!c.chordal || has_unsuspended_sunflower(gk, &w)) {
      json j;
      j["k"] = k;
      j["power_chordal"] = c.chordal;
      if (!c.chordal) {
        require_hole(gk, c.hole);
        j["hole"] = json::parse(to_json(c.hole));
      }
      j["unsuspended_sunflower"] = w ? json::parse(to_json(*w)) : json(nullptr);
      return cex(j);
    }
  }
  return holds();
}

CheckResult check_no_two_consec(const Graph& g) {
  bool any = false;
  for (int k : {2, 3, 4}) {
    Graph gk = power(g, k);
    for (const Hole& h : enumerate_induced_cycles(gk, 4, std::nullopt, g.order())) {
      any = true;
      const int l = h.length();
      for (int r = 1; r <= k / 2; ++r) {
        Graph gr = power(g, r);
        int on = 0;
        bool consec = false;
        for (int i = 0; i < l; ++i) {
          bool e1 = gr.adjacent(h.vertices[i], h.vertices[(i + 1) % l]);
          bool e2 = gr.adjacent(h.vertices[(i + 1) % l], h.vertices[(i + 2) % l]);
          if (e1) ++on;
          if (e1 && e2) consec = true;
        }
        if (consec || on > l / 2) {
          require_hole(gk, h);
          json j;
          j["k"] = k;
          j["r"] = r;
          j["hole"] = json::parse(to_json(h));
          j["edges_in_power_r"] = on;
          j["two_consecutive"] = consec;
          return cex(j);
        }
      }
    }
  }
  return any ? holds() : vacuous();
}

CheckResult square_implication(const Graph& g, bool hypothesis, json hyp_detail) {
  if (!hypothesis) return vacuous();
  ChordalityCertificate c = is_chordal(power(g, 2));
  if (c.chordal) return holds();
  require_hole(power(g, 2), c.hole);
  hyp_detail["hole_in_square"] = json::parse(to_json(c.hole));
  return cex(hyp_detail);
}

CheckResult check_bp_sufficient(const Graph& g) {
  bool hyp = !find_claw(g) && !find_p5a(g) && !has_induced_cycle_geq(g, 6, g.order());
  return square_implication(g, hyp, json::object());
}

CheckResult check_flotow(const Graph& g) {
  bool hyp = is_chordal(g).chordal && !find_claw(g);
  return square_implication(g, hyp, json::object());
}

CheckResult check_new_sufficient(const Graph& g) {
  SufficientSquareReport rep = check_sufficient_chordalsq(g);
  json j;
  j["claw_free"] = rep.claw_free;
  j["no_long_hole"] = rep.no_long_hole;
  j["all_f4_suspended"] = rep.all_f4_suspended;
  return square_implication(g, rep.applicable, j);
}

bool has_unwithered_flower(const Graph& g, std::optional<FlowerWitness>* out = nullptr) {
  for (int s = 4; s + (s + 1) / 2 <= g.order(); ++s)
    for (const FlowerWitness& w : find_flower(g, s))
      if (!w.withered_by) {
        if (out) *out = w;
        return true;
      }
  return false;
}

CheckResult check_flower_equiv(const Graph& g) {
  ChordalityCertificate c = is_chordal(power(g, 2));
  std::optional<FlowerWitness> w;
  bool unwithered = has_unwithered_flower(g, &w);
  if (c.chordal == !unwithered) return holds();
  json j;
  j["square_chordal"] = c.chordal;
  if (!c.chordal) {
    require_hole(power(g, 2), c.hole);
    j["hole_in_square"] = json::parse(to_json(c.hole));
  }
  if (w && !verify_flower(g, *w).empty())
    throw std::logic_error("flower counterexample fails re-verification");
  j["unwithered_flower"] = w ? json::parse(to_json(*w)) : json(nullptr);
  return cex(j);
}

CheckResult check_line_cycle(const Graph& g) {
  std::set<int> cycle_lengths;
  for (const auto& c : all_cycles(g, 4)) cycle_lengths.insert(int(c.size()));
  LineGraphMap lg = line_graph(g);
  std::set<int> induced_lengths;
  for (const Hole& h : enumerate_induced_cycles(lg.lg, 4, std::nullopt, lg.lg.order()))
    induced_lengths.insert(h.length());
  if (cycle_lengths == induced_lengths) return holds();
  json j;
  j["cycle_lengths_in_g"] = std::vector<int>(cycle_lengths.begin(), cycle_lengths.end());
  j["induced_cycle_lengths_in_lg"] =
      std::vector<int>(induced_lengths.begin(), induced_lengths.end());
  return cex(j);
}

CheckResult check_lg_cycle_bound(const Graph& g) {
  LineGraphMap lg = line_graph(g);
  Graph lsq = power(lg.lg, 2);
  bool any = false;
  for (int f : {4, 5, 6}) {
    if (has_induced_cycle_geq(g, f, g.order())) continue;
    any = true;
    if (auto h = has_induced_cycle_geq(lsq, f, lsq.order())) {
      require_hole(lsq, *h);
      json j;
      j["f"] = f;
      j["hole_in_lg_square"] = json::parse(to_json(*h));
      return cex(j);
    }
  }
  return any ? holds() : vacuous();
}

CheckResult check_cameron(const Graph& g) {
  if (!is_chordal(g).chordal) return vacuous();
  LineGraphMap lg = line_graph(g);
  ChordalityCertificate c = is_chordal(power(lg.lg, 2));
  if (c.chordal) return holds();
  require_hole(power(lg.lg, 2), c.hole);
  json j;
  j["hole_in_lg_square"] = json::parse(to_json(c.hole));
  return cex(j);
}

CheckResult check_sprout_equiv(const Graph& g) {
  LineGraphMap lg = line_graph(g);
  Graph lsq = power(lg.lg, 2);
  std::set<int> hole_lengths;
  for (const Hole& h : enumerate_induced_cycles(lsq, 4, std::nullopt, lsq.order()))
    hole_lengths.insert(h.length());
  const int m = g.size();
  for (int l = 4; l <= m; ++l) {
    bool sprout = false;
    if (l + (l + 1) / 2 <= m) {
      for (const SproutWitness& s : find_sprout(g, l))
        if (s.fertile()) {
          sprout = true;
          break;
        }
    }
    bool hole = hole_lengths.count(l) > 0;
    if (hole != sprout) {
      json j;
      j["length"] = l;
      j["hole_in_lg_square"] = hole;
      j["fertile_sprout"] = sprout;
      return cex(j);
    }
  }
  return holds();
}

CheckResult check_lg_square_equiv(const Graph& g) {
  LineGraphMap lg = line_graph(g);
  bool lhs = is_chordal(power(lg.lg, 2)).chordal;
  bool long_cycle = has_induced_cycle_geq(g, 6, g.order()).has_value();
  bool fertile = false;
  for (int s : {4, 5}) {
    if (s + (s + 1) / 2 > g.size()) continue;
    for (const SproutWitness& w : find_sprout(g, s))
      if (w.fertile()) {
        fertile = true;
        break;
      }
    if (fertile) break;
  }
  bool rhs = !long_cycle && !fertile;
  if (lhs == rhs) return holds();
  json j;
  j["lg_square_chordal"] = lhs;
  j["induced_cycle_geq6"] = long_cycle;
  j["fertile_sprout_4_or_5"] = fertile;
  return cex(j);
}

}  // namespace

const std::vector<TheoremInfo>& all_theorems() { return kRegistry; }

const TheoremInfo& theorem_info(TheoremId id) {
  for (const auto& t : kRegistry)
    if (t.id == id) return t;
  throw std::logic_error("unknown theorem id");
}

std::optional<TheoremId> theorem_by_name(const std::string& name) {
  for (const auto& t : kRegistry)
    if (name == t.name) return t.id;
  return std::nullopt;
}

bool theorem_registry_ok() {
  std::set<std::string> names, claims;
  for (const auto& t : kRegistry) {
    names.insert(t.name);
    claims.insert(t.claim);
  }
  return names.size() == kRegistry.size() && claims.size() == kRegistry.size() &&
         kRegistry.size() == 14;
}

CheckResult check_theorem(TheoremId id, const Graph& g) {
  const TheoremInfo& info = theorem_info(id);
  if (g.order() > info.max_order || (info.max_edges > 0 && g.size() > info.max_edges))
    fail(Errc::kTooLarge, std::string(info.name) + " bound exceeded");
  switch (id) {
    case TheoremId::kDiameterComplete: return check_diameter_complete(g);
    case TheoremId::kDuchet: return check_duchet(g);
    case TheoremId::kLsEquiv: return check_ls_equiv(g);
    case TheoremId::kLsClosed: return check_ls_closed(g);
    case TheoremId::kNoTwoConsec: return check_no_two_consec(g);
    case TheoremId::kBpSufficient: return check_bp_sufficient(g);
    case TheoremId::kFlotow: return check_flotow(g);
    case TheoremId::kNewSufficient: return check_new_sufficient(g);
    case TheoremId::kFlowerEquiv: return check_flower_equiv(g);
    case TheoremId::kLineCycle: return check_line_cycle(g);
    case TheoremId::kLgCycleBound: return check_lg_cycle_bound(g);
    case TheoremId::kCameron: return check_cameron(g);
    case TheoremId::kSproutEquiv: return check_sprout_equiv(g);
    case TheoremId::kLgSquareEquiv: return check_lg_square_equiv(g);
  }
  throw std::logic_error("unknown theorem id");
}

TheoremReport verify_corpus(const CorpusSpec& spec, const std::vector<TheoremId>& ids, int jobs) {
  TheoremReport report;
  report.spec = spec;
  std::vector<Graph> graphs = load_corpus(spec);
  report.corpus_size = int(graphs.size());

  struct Cell {
    int code = 0;  // 0 holds, 1 vacuous, 2 counterexample, 3 skipped
    std::string detail;
  };
  std::vector<std::vector<Cell>> cells(graphs.size(), std::vector<Cell>(ids.size()));
  std::vector<double> secs(ids.size(), 0.0);

  std::atomic<size_t> cursor{0};
  auto worker = [&]() {
    for (;;) {
      size_t gi = cursor.fetch_add(1);
      if (gi >= graphs.size()) return;
      const Graph& g = graphs[gi];
      for (size_t ti = 0; ti < ids.size(); ++ti) {
        const TheoremInfo& info = theorem_info(ids[ti]);
        if (g.order() > info.max_order || (info.max_edges > 0 && g.size() > info.max_edges)) {
          cells[gi][ti] = {3, ""};
          continue;
        }
        CheckResult r = check_theorem(ids[ti], g);
        Cell c;
        c.code = r.verdict == CheckVerdict::kHolds     ? 0
                 : r.verdict == CheckVerdict::kVacuous ? 1
                                                       : 2;
        c.detail = r.detail;
        cells[gi][ti] = std::move(c);
      }
    }
  };

  auto t0 = std::chrono::steady_clock::now();
  int nthreads = std::max(1, jobs);
  if (nthreads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int i = 0; i < nthreads; ++i) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  auto t1 = std::chrono::steady_clock::now();
  double total = std::chrono::duration<double>(t1 - t0).count();

  for (size_t ti = 0; ti < ids.size(); ++ti) {
    TheoremRun run;
    run.id = ids[ti];
    run.seconds = total / double(ids.size());  // coarse split, informational only
    for (size_t gi = 0; gi < graphs.size(); ++gi) {
      switch (cells[gi][ti].code) {
        case 0: ++run.holds; break;
        case 1: ++run.vacuous; break;
        case 3: ++run.skipped; break;
        case 2:
          run.counterexamples.push_back(
              {int(gi), write_graph6(graphs[gi]), cells[gi][ti].detail});
          break;
      }
    }
    report.runs.push_back(std::move(run));
  }
  return report;
}

std::string report_to_json(const TheoremReport& report) {
  json j;
  j["schema_version"] = 1;
  j["generator"] = "gsq";
  json corpus;
  switch (report.spec.mode) {
    case CorpusMode::kExhaustive:
      corpus["mode"] = "exhaustive";
      corpus["n_max"] = report.spec.n_max;
      break;
    case CorpusMode::kRandom:
      corpus["mode"] = "random";
      corpus["n"] = report.spec.n;
      corpus["edge_probability"] = report.spec.edge_probability;
      corpus["count"] = report.spec.count;
      corpus["seed"] = report.spec.seed;
      break;
    case CorpusMode::kFile:
      corpus["mode"] = "file";
      corpus["path"] = report.spec.path;
      corpus["format"] = report.spec.format == FileFormat::kGraph6 ? "g6" : "edges";
      break;
  }
  corpus["connected_only"] = report.spec.connected_only;
  j["corpus"] = corpus;
  j["corpus_size"] = report.corpus_size;
  json runs = json::array();
  for (const auto& r : report.runs) {
    const TheoremInfo& info = theorem_info(r.id);
    json jr;
    jr["id"] = info.name;
    jr["claim"] = info.claim;
    jr["holds"] = r.holds;
    jr["vacuous"] = r.vacuous;
    jr["skipped"] = r.skipped;
    json cexs = json::array();
    for (const auto& c : r.counterexamples) {
      json jc;
      jc["graph_index"] = c.graph_index;
      jc["graph6"] = c.graph6;
      jc["detail"] = c.detail.empty() ? json(nullptr) : json::parse(c.detail);
      cexs.push_back(jc);
    }
    jr["counterexamples"] = cexs;
    runs.push_back(jr);
  }
  j["theorems"] = runs;
  j["total_counterexamples"] = report.total_counterexamples();
  return j.dump(2) + "\n";
}

std::vector<Graph> mine_obstructions(MineTarget target, int n_max) {
  if (n_max < 1 || n_max > 8) fail(Errc::kTooLarge, "mine_obstructions requires 1 <= n_max <= 8");

  std::map<std::string, bool> cache;
  auto bad = [&](const Graph& h) {
    if (h.order() == 0) return false;
    std::string c = canonical_form(h);
    auto it = cache.find(c);
    if (it != cache.end()) return it->second;
    Graph sq = target == MineTarget::kSquare ? power(h, 2) : power(line_graph(h).lg, 2);
    bool b = !is_chordal(sq).chordal;
    cache.emplace(std::move(c), b);
    return b;
  };

  std::vector<Graph> out;
  for (int n = 1; n <= n_max; ++n) {
    generate_all(n, false, [&](const Graph& g) {
      if (!bad(g)) return;
      // chordality of the target square is not hereditary, so every proper
      // induced subgraph has to be checked
      for (int v = 0; v < n; ++v) {  // single deletions first, cheap reject
        std::vector<int> keep;
        for (int x = 0; x < n; ++x)
          if (x != v) keep.push_back(x);
        if (bad(induced_subgraph(g, keep).graph)) return;
      }
      for (unsigned mask = 1; mask + 1 < (1u << n); ++mask) {
        if (std::popcount(mask) >= n - 1) continue;  // deletions already done
        std::vector<int> keep;
        for (int x = 0; x < n; ++x)
          if ((mask >> x) & 1) keep.push_back(x);
        if (bad(induced_subgraph(g, keep).graph)) return;
      }
      out.push_back(g);
    });
  }
  return out;
}

}  // namespace gsq
