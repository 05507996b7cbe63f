#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gsq/corpus.hpp"
#include "gsq/graph.hpp"

namespace gsq {

enum class TheoremId {
  kDiameterComplete,
  kDuchet,
  kLsEquiv,
  kLsClosed,
  kNoTwoConsec,
  kBpSufficient,
  kFlotow,
  kNewSufficient,
  kFlowerEquiv,
  kLineCycle,
  kLgCycleBound,
  kCameron,
  kSproutEquiv,
  kLgSquareEquiv,
};

struct TheoremInfo {
  TheoremId id;
  const char* name;   // stable CLI / report identifier
  const char* claim;  // one-line statement of the checked property
  int max_order;      // graphs above are skipped by verify_corpus
  int max_edges;      // 0 = unlimited
};

const std::vector<TheoremInfo>& all_theorems();
const TheoremInfo& theorem_info(TheoremId id);
std::optional<TheoremId> theorem_by_name(const std::string& name);

// Every id has a distinct name and claim; asserted at startup.
bool theorem_registry_ok();

enum class CheckVerdict { kHolds, kVacuous, kCounterexample };

struct CheckResult {
  CheckVerdict verdict = CheckVerdict::kHolds;
  std::string detail;  // JSON payload for counterexamples, else empty
};

// One theorem instance on one graph. Throws kTooLarge outside the bound
// table. Counterexample payloads are re-verified through the independent
// verifiers before being returned.
CheckResult check_theorem(TheoremId id, const Graph& g);

struct CounterexampleRecord {
  int graph_index = 0;
  std::string graph6;
  std::string detail;
};

struct TheoremRun {
  TheoremId id{};
  int holds = 0;
  int vacuous = 0;
  int skipped = 0;
  std::vector<CounterexampleRecord> counterexamples;
  double seconds = 0.0;  // informational; not part of the canonical report
};

struct TheoremReport {
  CorpusSpec spec;
  int corpus_size = 0;
  std::vector<TheoremRun> runs;

  int total_counterexamples() const {
    int t = 0;
    for (const auto& r : runs) t += int(r.counterexamples.size());
    return t;
  }
};

// Runs the ids over the corpus with a worker pool; the report content is
// independent of the worker count.
TheoremReport verify_corpus(const CorpusSpec& spec, const std::vector<TheoremId>& ids, int jobs);

// Canonical JSON report (schema_version 1); excludes timing so that equal
// inputs produce byte-identical output.
std::string report_to_json(const TheoremReport& report);

enum class MineTarget { kSquare, kLgSquare };

// Minimal obstructions: graphs whose target square is non-chordal while
// every proper induced subgraph has a chordal target square. n_max <= 8.
std::vector<Graph> mine_obstructions(MineTarget target, int n_max);

}  // namespace gsq
