#ifndef THICKNESS_COMPLETE_GRAPHS_HPP
#define THICKNESS_COMPLETE_GRAPHS_HPP

#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "thickness/graph.hpp"
#include "thickness/partition_search.hpp"
#include "thickness/planarity.hpp"

#ifndef THICKNESS_PATTERN_DIR
#define THICKNESS_PATTERN_DIR "data/patterns"
#endif

namespace thickness {

struct CompleteGraphBounds {
  int thickness;
  int outerthickness;
};

/// Thickness and outerthickness of K_n.
inline CompleteGraphBounds complete_graph_bounds(int n) {
  if (n < 1) throw invalid_input("K_n needs n >= 1");
  int t = (n == 9 || n == 10) ? 3 : (n + 7) / 6;
  int o = n == 7 ? 3 : (n + 1 + 3) / 4;
  return {t, o};
}

inline int complete_graph_bound(int n, LayerClass cls) {
  auto b = complete_graph_bounds(n);
  return cls == LayerClass::Planar ? b.thickness : b.outerthickness;
}

using PairLayer = std::vector<std::pair<VertexId, VertexId>>;

/// Edge-disjoint layers of K_n, each a planar or outerplanar graph.
struct LayerPattern {
  int n = 0;
  LayerClass cls = LayerClass::Planar;
  std::vector<PairLayer> layers;
};

inline std::uint64_t fnv1a64(const std::string& data) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : data) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

namespace detail {

inline std::string pattern_body(const LayerPattern& p) {
  std::string body;
  for (const auto& layer : p.layers) {
    std::string line;
    for (auto [u, v] : layer) {
      if (!line.empty()) line += ' ';
      line += std::to_string(u) + "-" + std::to_string(v);
    }
    body += line + "\n";
  }
  return body;
}

inline std::string hex64(std::uint64_t x) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(x));
  return buf;
}

}  // namespace detail

/// Text form: a checksum header line, then one layer per line as `u-v` pairs.
inline std::string pattern_text(const LayerPattern& p) {
  std::string body = detail::pattern_body(p);
  return "checksum fnv1a64 " + detail::hex64(fnv1a64(body)) + " n " + std::to_string(p.n) +
         " class " + to_string(p.cls) + " layers " + std::to_string(p.layers.size()) + "\n" +
         body;
}

inline LayerPattern parse_pattern(const std::string& text) {
  std::istringstream in(text);
  std::string header;
  if (!std::getline(in, header)) throw invalid_input("empty pattern");
  std::istringstream hs(header);
  std::string kw, algo, sum, kn, kc, cls, kl;
  LayerPattern p;
  std::size_t count = 0;
  if (!(hs >> kw >> algo >> sum >> kn >> p.n >> kc >> cls >> kl >> count) || kw != "checksum" ||
      algo != "fnv1a64" || kn != "n" || kc != "class" || kl != "layers")
    throw invalid_input("malformed pattern header");
  p.cls = layer_class_from_string(cls);
  std::string rest((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  if (detail::hex64(fnv1a64(rest)) != sum) throw invalid_input("pattern checksum mismatch");
  std::istringstream body(rest);
  for (std::string line; std::getline(body, line);) {
    PairLayer layer;
    std::istringstream ls(line);
    for (std::string tok; ls >> tok;) {
      auto dash = tok.find('-');
      if (dash == std::string::npos) throw invalid_input("bad pair '" + tok + "'");
      layer.emplace_back(std::stoi(tok.substr(0, dash)), std::stoi(tok.substr(dash + 1)));
    }
    p.layers.push_back(std::move(layer));
  }
  if (p.layers.size() != count) throw invalid_input("pattern layer count mismatch");
  return p;
}

/// Layers partition E(K_n) and each layer is certified for its class.
inline bool verify_pattern(const LayerPattern& p, std::string* why = nullptr) {
  auto fail = [&](const std::string& m) {
    if (why) *why = m;
    return false;
  };
  if (p.n < 1) return fail("n < 1");
  std::set<std::pair<int, int>> seen;
  for (const auto& layer : p.layers) {
    for (auto [u, v] : layer) {
      if (u < 0 || v < 0 || u >= p.n || v >= p.n || u == v) return fail("bad pair");
      if (!seen.insert(std::minmax(u, v)).second) return fail("pair used twice");
    }
    if (!certified(Graph::from_pairs(p.n, layer), p.cls))
      return fail("layer fails " + to_string(p.cls) + " certification");
  }
  if (static_cast<long>(seen.size()) != static_cast<long>(p.n) * (p.n - 1) / 2)
    return fail("layers miss edges of K_n");
  return true;
}

inline std::string pattern_directory() {
  if (const char* env = std::getenv("THICKNESS_PATTERN_DIR")) return env;
  return THICKNESS_PATTERN_DIR;
}

inline std::string pattern_file_name(int n, LayerClass cls) {
  return "K" + std::to_string(n) + "_" + to_string(cls) + ".txt";
}

/// Stored pattern, re-verified at load; nullopt if absent.
inline std::optional<LayerPattern> load_pattern(int n, LayerClass cls,
                                                const std::string& dir = pattern_directory()) {
  std::ifstream f(dir + "/" + pattern_file_name(n, cls));
  if (!f) return std::nullopt;
  std::string text((std::istreambuf_iterator<char>(f)), std::istreambuf_iterator<char>());
  LayerPattern p = parse_pattern(text);
  std::string why;
  if (p.n != n || p.cls != cls) throw failure("pattern file describes another graph");
  if (!verify_pattern(p, &why)) throw failure("stored pattern rejected: " + why);
  return p;
}

/// Search for a pattern with the given number of layers.
inline std::optional<LayerPattern> search_pattern(int n, LayerClass cls, int k,
                                                  const RestartOptions& opt = {}) {
  std::vector<std::pair<int, int>> pairs;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
  auto r = search_partition_restarts(n, pairs, k, cls, opt);
  if (r.exhausted) throw failure("no " + std::to_string(k) + "-layer pattern exists");
  if (!r.assignment) return std::nullopt;
  LayerPattern p{n, cls, std::vector<PairLayer>(k)};
  for (std::size_t i = 0; i < pairs.size(); ++i) p.layers[(*r.assignment)[i]].push_back(pairs[i]);
  return p;
}

/// Decomposition of K_n into exactly the optimal number of layers: stored
/// pattern when available, otherwise randomized search under the deadline.
inline LayerPattern complete_graph_decomposition(int n, LayerClass cls,
                                                 Deadline deadline = Deadline::never()) {
  const int k = complete_graph_bound(n, cls);
  if (auto p = load_pattern(n, cls)) return *p;
  RestartOptions opt;
  opt.deadline = deadline;
  auto p = search_pattern(n, cls, k, opt);
  if (!p) throw timeout("no " + std::to_string(k) + "-layer " + to_string(cls) +
                        " decomposition of K" + std::to_string(n) + " within the time limit");
  std::string why;
  if (!verify_pattern(*p, &why)) throw failure("search produced a bad pattern: " + why);
  return *p;
}

}  // namespace thickness

#endif  // THICKNESS_COMPLETE_GRAPHS_HPP
