#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gsq/graph.hpp"

namespace gsq {

// --- graph6 (short form, order <= 62) ---------------------------------------
// Header byte 63+n, then the upper triangle column-major ((0,1), (0,2),
// (1,2), (0,3), ...) packed 6 bits per character, MSB first, zero padded.
// Decode errors: BAD_CHAR, TRUNCATED, TRAILING_BITS_NONZERO (the last also
// covers surplus characters).
Graph parse_graph6(std::string_view line);
std::string write_graph6(const Graph& g);

// Edge-list text: first non-comment line "n m", then m lines "u v".
// '#' starts a comment anywhere on a line.
Graph parse_edge_list(std::string_view text);
std::string write_edge_list(const Graph& g);

// --- DOT export --------------------------------------------------------------
struct DotHighlights {
  std::vector<int> u_vertices, w_vertices, pending_vertices;
  std::optional<int> special_vertex;  // withering / suspending vertex
  std::vector<Edge> u_edges, w_edges, pending_edges, cycle_edges;
  std::optional<Edge> special_edge;  // infertility edge
};

std::string write_dot(const Graph& g, const DotHighlights* highlights = nullptr);

// --- exhaustive generation ----------------------------------------------------
// One representative per isomorphism class on exactly n vertices, emitted in
// (edge count, canonical form) order. Edge-augmentation with canonical-form
// dedup; n <= 8.
void generate_all(int n, bool connected_only, const std::function<void(const Graph&)>& sink);
std::vector<Graph> generate_all(int n, bool connected_only);

// --- seeded random generation -------------------------------------------------
// Reproducible xorshift64* stream (state seeded via one splitmix64 step):
//   state: s ^= s>>12; s ^= s<<25; s ^= s>>27; out = s * 2685821657736338717
//   uniform double = (out >> 11) / 2^53
// Each graph draws one uniform per vertex pair (i,j), i<j lexicographic;
// the edge is present iff u < p. Graphs of a stream share one generator.
class Xorshift64Star {
 public:
  explicit Xorshift64Star(uint64_t seed);
  uint64_t next();
  double unit();  // [0, 1)

 private:
  uint64_t s_;
};

std::vector<Graph> generate_random(int n, double p, int count, uint64_t seed);

// --- corpus specification ------------------------------------------------------
enum class CorpusMode { kExhaustive, kRandom, kFile };
enum class FileFormat { kGraph6, kEdgeList };

struct CorpusSpec {
  CorpusMode mode = CorpusMode::kExhaustive;
  int n_max = 6;          // exhaustive: all graphs with 1 <= order <= n_max
  int n = 0;              // random
  double edge_probability = 0.0;
  int count = 0;
  uint64_t seed = 0;
  std::string path;  // file
  FileFormat format = FileFormat::kGraph6;
  bool connected_only = false;
};

// Materializes the corpus; deterministic order. Exhaustive mode requires
// n_max <= 8.
std::vector<Graph> load_corpus(const CorpusSpec& spec);

}  // namespace gsq
