#include "gsq/corpus.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>

namespace gsq {

namespace {
constexpr int kG6Lo = 63;
constexpr int kG6Hi = 126;
}  // namespace

Graph parse_graph6(std::string_view line) {
  if (line.empty()) fail(Errc::kTruncated, "empty graph6 line");
  int c0 = static_cast<unsigned char>(line[0]);
  if (c0 < kG6Lo || c0 > kG6Hi) fail(Errc::kBadChar, "bad graph6 header byte");
  if (c0 == kG6Hi) fail(Errc::kTooLarge, "long-form graph6 (order > 62) not supported");
  const int n = c0 - kG6Lo;
  const int nbits = n * (n - 1) / 2;
  const int nchars = (nbits + 5) / 6;
  if (int(line.size()) < 1 + nchars) fail(Errc::kTruncated, "graph6 line shorter than header implies");
  if (int(line.size()) > 1 + nchars)
    fail(Errc::kTrailingBits, "surplus characters after graph6 payload");

  std::vector<Edge> edges;
  int bit = 0;
  for (int k = 0; k < nchars; ++k) {
    int c = static_cast<unsigned char>(line[1 + k]);
    if (c < kG6Lo || c > kG6Hi) fail(Errc::kBadChar, "graph6 payload byte out of range");
    int val = c - kG6Lo;
    for (int b = 5; b >= 0; --b, ++bit) {
      bool set = (val >> b) & 1;
      if (bit >= nbits) {
        if (set) fail(Errc::kTrailingBits, "nonzero padding bits");
        continue;
      }
      if (set) {
        // invert column-major rank -> (i, j)
        int j = 1;
        int r = bit;
        while (r >= j) {
          r -= j;
          ++j;
        }
        edges.emplace_back(r, j);
      }
    }
  }
  return Graph::from_edge_list(n, edges);
}

std::string write_graph6(const Graph& g) {
  const int n = g.order();
  if (n > 62) fail(Errc::kTooLarge, "graph6 short form supports order <= 62");
  std::string out;
  out.push_back(char(kG6Lo + n));
  int acc = 0, nb = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++nb == 6) {
        out.push_back(char(kG6Lo + acc));
        acc = 0;
        nb = 0;
      }
    }
  if (nb) out.push_back(char(kG6Lo + (acc << (6 - nb))));
  return out;
}

namespace {

std::string strip_comment(const std::string& line) {
  auto pos = line.find('#');
  return pos == std::string::npos ? line : line.substr(0, pos);
}

}  // namespace

Graph parse_edge_list(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  long n = -1, m = -1;
  std::vector<Edge> edges;
  while (std::getline(in, line)) {
    std::istringstream ls(strip_comment(line));
    long a, b;
    if (n < 0) {
      if (ls >> a >> b) {
        std::string rest;
        if (ls >> rest) fail(Errc::kBadFormat, "trailing tokens on header line");
        if (a < 0 || b < 0) fail(Errc::kBadFormat, "negative counts in header");
        n = a;
        m = b;
      } else if (!std::string(strip_comment(line)).empty() &&
                 ls.str().find_first_not_of(" \t\r") != std::string::npos) {
        fail(Errc::kBadFormat, "expected header line \"n m\"");
      }
      continue;
    }
    if (ls >> a >> b) {
      std::string rest;
      if (ls >> rest) fail(Errc::kBadFormat, "trailing tokens on edge line");
      edges.emplace_back(int(a), int(b));
    } else if (ls.str().find_first_not_of(" \t\r") != std::string::npos) {
      fail(Errc::kBadFormat, "expected edge line \"u v\"");
    }
  }
  if (n < 0) fail(Errc::kBadFormat, "missing header line \"n m\"");
  if (long(edges.size()) != m)
    fail(Errc::kCountMismatch, "header announces " + std::to_string(m) + " edges, file has " +
                                   std::to_string(edges.size()));
  return Graph::from_edge_list(int(n), edges);
}

std::string write_edge_list(const Graph& g) {
  std::ostringstream out;
  out << g.order() << ' ' << g.size() << '\n';
  for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
  return out.str();
}

namespace {

std::string vertex_attrs(const DotHighlights& h, int v) {
  std::vector<std::string> attrs;
  auto contains = [v](const std::vector<int>& xs) {
    return std::find(xs.begin(), xs.end(), v) != xs.end();
  };
  if (contains(h.u_vertices)) attrs.push_back("color=blue, penwidth=2");
  if (contains(h.w_vertices)) attrs.push_back("color=orange, style=filled, fillcolor=moccasin");
  if (contains(h.pending_vertices)) attrs.push_back("shape=doublecircle");
  if (h.special_vertex && *h.special_vertex == v)
    attrs.push_back("color=red, style=filled, fillcolor=mistyrose");
  if (attrs.empty()) return "";
  std::string out = " [";
  for (size_t i = 0; i < attrs.size(); ++i) out += (i ? ", " : "") + attrs[i];
  return out + "]";
}

std::string edge_attrs(const DotHighlights& h, Edge e) {
  std::vector<std::string> attrs;
  auto contains = [e](const std::vector<Edge>& xs) {
    return std::find(xs.begin(), xs.end(), e) != xs.end();
  };
  if (contains(h.u_edges)) attrs.push_back("color=blue, penwidth=2");
  if (contains(h.w_edges)) attrs.push_back("color=orange, penwidth=2");
  if (contains(h.pending_edges)) attrs.push_back("style=dashed");
  if (contains(h.cycle_edges)) attrs.push_back("penwidth=2");
  if (h.special_edge && *h.special_edge == e) attrs.push_back("color=red, penwidth=2");
  if (attrs.empty()) return "";
  std::string out = " [";
  for (size_t i = 0; i < attrs.size(); ++i) out += (i ? ", " : "") + attrs[i];
  return out + "]";
}

}  // namespace

std::string write_dot(const Graph& g, const DotHighlights* highlights) {
  std::ostringstream out;
  out << "graph G {\n  node [shape=circle];\n";
  for (int v = 0; v < g.order(); ++v) {
    out << "  " << v;
    if (highlights) out << vertex_attrs(*highlights, v);
    out << ";\n";
  }
  for (Edge e : g.edges()) {
    out << "  " << e.first << " -- " << e.second;
    if (highlights) out << edge_attrs(*highlights, e);
    out << ";\n";
  }
  out << "}\n";
  return out.str();
}

void generate_all(int n, bool connected_only, const std::function<void(const Graph&)>& sink) {
  if (n < 1 || n > 8) fail(Errc::kTooLarge, "exhaustive generation supports 1 <= n <= 8");
  // Level = all classes with a fixed edge count; every class with m+1 edges
  // has a one-edge-deleted parent, so extending every representative by every
  // missing edge reaches every class.
  std::map<std::string, Graph> level;
  Graph g0 = Graph::empty(n);
  level.emplace(canonical_form(g0), g0);
  const int max_m = n * (n - 1) / 2;
  for (int m = 0; m <= max_m; ++m) {
    for (const auto& [form, g] : level)
      if (!connected_only || is_connected(g)) sink(g);
    if (m == max_m) break;
    std::map<std::string, Graph> next;
    for (const auto& [form, g] : level) {
      std::vector<Edge> base = g.edges();
      for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
          if (g.adjacent(u, v)) continue;
          std::vector<Edge> es = base;
          es.emplace_back(u, v);
          Graph h = Graph::from_edge_list(n, es);
          std::string c = canonical_form(h);
          next.emplace(std::move(c), std::move(h));
        }
    }
    level = std::move(next);
  }
}

std::vector<Graph> generate_all(int n, bool connected_only) {
  std::vector<Graph> out;
  generate_all(n, connected_only, [&](const Graph& g) { out.push_back(g); });
  return out;
}

Xorshift64Star::Xorshift64Star(uint64_t seed) {
  // one splitmix64 step; nonzero for every seed
  uint64_t z = seed + 0x9E3779B97F4A7C15ull;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  s_ = z ^ (z >> 31);
  if (s_ == 0) s_ = 0x9E3779B97F4A7C15ull;
}

uint64_t Xorshift64Star::next() {
  s_ ^= s_ >> 12;
  s_ ^= s_ << 25;
  s_ ^= s_ >> 27;
  return s_ * 2685821657736338717ull;
}

double Xorshift64Star::unit() { return double(next() >> 11) * (1.0 / 9007199254740992.0); }

std::vector<Graph> generate_random(int n, double p, int count, uint64_t seed) {
  if (p < 0.0 || p > 1.0) fail(Errc::kBadArgument, "edge probability outside [0,1]");
  if (n < 0 || count < 0) fail(Errc::kBadArgument, "negative size or count");
  Xorshift64Star rng(seed);
  std::vector<Graph> out;
  out.reserve(count);
  for (int t = 0; t < count; ++t) {
    std::vector<Edge> es;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (rng.unit() < p) es.emplace_back(i, j);
    out.push_back(Graph::from_edge_list(n, es));
  }
  return out;
}

std::vector<Graph> load_corpus(const CorpusSpec& spec) {
  std::vector<Graph> out;
  switch (spec.mode) {
    case CorpusMode::kExhaustive:
      for (int n = 1; n <= spec.n_max; ++n)
        generate_all(n, spec.connected_only, [&](const Graph& g) { out.push_back(g); });
      break;
    case CorpusMode::kRandom: {
      out = generate_random(spec.n, spec.edge_probability, spec.count, spec.seed);
      if (spec.connected_only)
        std::erase_if(out, [](const Graph& g) { return !is_connected(g); });
      break;
    }
    case CorpusMode::kFile: {
      std::ifstream in(spec.path);
      if (!in) fail(Errc::kIoError, "cannot open " + spec.path);
      if (spec.format == FileFormat::kGraph6) {
        std::string line;
        while (std::getline(in, line)) {
          while (!line.empty() && (line.back() == '\r' || line.back() == '\n')) line.pop_back();
          if (line.empty()) continue;
          out.push_back(parse_graph6(line));
        }
      } else {
        std::stringstream ss;
        ss << in.rdbuf();
        out.push_back(parse_edge_list(ss.str()));
      }
      if (spec.connected_only)
        std::erase_if(out, [](const Graph& g) { return !is_connected(g); });
      break;
    }
  }
  return out;
}

}  // namespace gsq
