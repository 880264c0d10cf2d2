#ifndef THICKNESS_GENERATORS_HPP
#define THICKNESS_GENERATORS_HPP

#include <algorithm>
#include <cstdint>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "thickness/embedding.hpp"

namespace thickness {

/// K7 on the torus: vertex i sees i+1, i+3, i+2, i+6, i+4, i+5 (mod 7).
inline Embedding k7_torus() {
  std::vector<std::vector<VertexId>> order(7);
  for (int i = 0; i < 7; ++i)
    for (int off : {1, 3, 2, 6, 4, 5}) order[i].push_back((i + off) % 7);
  return embedding_from_neighbor_orders(order);
}

/// Geometric dual of an orientable embedding: one vertex per face, one edge
/// per edge. Dual vertex ids are face ids; dual edge ids equal primal ids.
inline Embedding dual_embedding(const Embedding& input) {
  const Embedding emb = normalized_orientation(input);
  // Positively oriented darts of each face, in walk order.
  std::vector<std::vector<Dart>> ring(emb.face_count());
  std::map<Dart, int> face_of;
  for (const auto& f : emb.faces()) {
    auto& r = ring[f.id];
    for (const auto& s : f.walk) r.push_back(s.orientation > 0 ? s.dart : s.dart.opposite());
    if (!f.walk.empty() && f.walk.front().orientation < 0) std::reverse(r.begin(), r.end());
    for (const Dart& d : r) face_of[d] = f.id;
  }
  std::vector<Edge> edges;
  for (const auto& e : emb.graph().edges())
    edges.push_back({e.id, face_of.at(Dart{e.id, 0}), face_of.at(Dart{e.id, 1})});
  RotationSystem rs;
  rs.graph = Graph(emb.face_count(), edges, true);
  rs.rotation = ring;
  rs.graph = Graph(emb.face_count(), edges, !rs.graph.is_simple());
  return Embedding(std::move(rs));
}

/// Heawood graph on the torus, as the dual of the K7 triangulation.
inline Embedding heawood_torus() { return dual_embedding(k7_torus()); }

/// Two loops at one vertex crossing at the vertex: the torus.
inline Embedding bouquet2_torus() {
  RotationSystem rs;
  rs.graph = Graph(1, {{0, 0, 0}, {1, 0, 0}}, true);
  rs.rotation = {{Dart{0, 0}, Dart{1, 0}, Dart{0, 1}, Dart{1, 1}}};
  return Embedding(std::move(rs));
}

/// K_n with a fixed rotation: planar for n <= 4, the torus triangulation for
/// n = 7, otherwise neighbors in cyclic order i+1, i+2, ...
inline Embedding complete_embedding(int n) {
  if (n < 1) throw invalid_input("kn needs n >= 1");
  if (n == 7) return k7_torus();
  std::vector<std::vector<VertexId>> order(n);
  if (n == 4) {
    order = {{1, 2, 3}, {0, 3, 2}, {0, 1, 3}, {0, 2, 1}};
  } else {
    for (int i = 0; i < n; ++i)
      for (int off = 1; off < n; ++off) order[i].push_back((i + off) % n);
  }
  return embedding_from_neighbor_orders(order);
}

struct RandomEmbeddingSpec {
  int n = 8;
  int genus = 1;  // g when orientable, k otherwise
  bool orientable = true;
  std::uint64_t seed = 1;
  int max_attempts = 200000;
};

namespace detail {

inline std::uint64_t draw(std::mt19937_64& rng, std::uint64_t bound) {
  return rng() % bound;
}

}  // namespace detail

/// Rejection sampling: random connected simple graph with an edge count that
/// can reach the target surface, uniformly random rotation (and random signs
/// for the nonorientable case), accepted when the traced surface matches.
inline Embedding random_embedding(const RandomEmbeddingSpec& spec) {
  const int n = spec.n;
  if (n < 1) throw invalid_input("random embedding needs n >= 1");
  if (spec.genus < 0 || (!spec.orientable && spec.genus < 1))
    throw invalid_input("bad target genus");
  const long max_m = static_cast<long>(n) * (n - 1) / 2;
  std::mt19937_64 rng(spec.seed);
  for (int attempt = 0; attempt < spec.max_attempts; ++attempt) {
    // V - E + F = chi with F >= 1 faces.
    int faces = 1 + static_cast<int>(detail::draw(rng, 3));
    int chi = spec.orientable ? 2 - 2 * spec.genus : 2 - spec.genus;
    long m = n - chi + faces;
    if (m < n - 1 || m > max_m || m < 1) continue;

    std::vector<int> perm(n);
    for (int i = 0; i < n; ++i) perm[i] = i;
    for (int i = n - 1; i > 0; --i)
      std::swap(perm[i], perm[detail::draw(rng, i + 1)]);
    std::set<std::pair<int, int>> es;
    for (int i = 1; i < n; ++i) {
      int a = perm[i], b = perm[detail::draw(rng, i)];
      es.insert(std::minmax(a, b));
    }
    while (static_cast<long>(es.size()) < m) {
      int a = static_cast<int>(detail::draw(rng, n));
      int b = static_cast<int>(detail::draw(rng, n));
      if (a != b) es.insert(std::minmax(a, b));
    }
    std::vector<Edge> edges;
    for (auto [a, b] : es) edges.push_back({static_cast<EdgeId>(edges.size()), a, b});
    RotationSystem rs;
    rs.graph = Graph(n, edges);
    rs.rotation.resize(n);
    for (const auto& e : edges) {
      rs.rotation[e.u].push_back(Dart{e.id, 0});
      rs.rotation[e.v].push_back(Dart{e.id, 1});
    }
    for (auto& r : rs.rotation)
      for (int i = static_cast<int>(r.size()) - 1; i > 0; --i)
        std::swap(r[i], r[detail::draw(rng, i + 1)]);
    if (!spec.orientable)
      for (const auto& e : edges)
        if (detail::draw(rng, 2)) rs.twisted.insert(e.id);
    Embedding emb(std::move(rs));
    const auto& s = emb.surface();
    if (s.orientable == spec.orientable && s.genus == spec.genus) return emb;
  }
  throw failure("no embedding with the requested surface within " +
                std::to_string(spec.max_attempts) + " attempts");
}

/// rows x cols grid wrapped into a torus, optionally with one diagonal per
/// square. Needs rows, cols >= 3 so the graph stays simple.
inline Embedding torus_grid(int rows, int cols, bool triangulated) {
  if (rows < 3 || cols < 3) throw invalid_input("torus grid needs at least 3 rows and 3 columns");
  auto id = [&](int r, int c) { return ((r + rows) % rows) * cols + (c + cols) % cols; };
  std::vector<std::vector<VertexId>> order(rows * cols);
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) {
      auto& o = order[id(r, c)];
      o.push_back(id(r, c + 1));
      if (triangulated) o.push_back(id(r + 1, c + 1));
      o.push_back(id(r + 1, c));
      o.push_back(id(r, c - 1));
      if (triangulated) o.push_back(id(r - 1, c - 1));
      o.push_back(id(r - 1, c));
    }
  return embedding_from_neighbor_orders(order);
}

/// Instance by name: k7-torus, heawood-torus, bouquet2-torus, "kn <n>",
/// "torus-grid <r> <c>", "torus-triangulation <r> <c>",
/// "random <n> <g> [seed]", "random-nonorientable <n> <k> [seed]".
inline Embedding generate(const std::string& spec, std::uint64_t seed = 1) {
  std::istringstream in(spec);
  std::string kind;
  in >> kind;
  std::vector<long> args;
  for (std::string t; in >> t;) {
    try {
      args.push_back(std::stol(t));
    } catch (const std::exception&) {
      throw invalid_input("bad generator argument '" + t + "'");
    }
  }
  auto need = [&](std::size_t lo, std::size_t hi) {
    if (args.size() < lo || args.size() > hi)
      throw invalid_input("wrong number of arguments for '" + kind + "'");
  };
  if (kind == "k7-torus" || kind == "heawood-torus" || kind == "bouquet2-torus") {
    need(0, 0);
    if (kind == "k7-torus") return k7_torus();
    return kind == "heawood-torus" ? heawood_torus() : bouquet2_torus();
  }
  if (kind == "kn") {
    need(1, 1);
    return complete_embedding(static_cast<int>(args[0]));
  }
  if (kind == "torus-grid" || kind == "torus-triangulation") {
    need(2, 2);
    return torus_grid(static_cast<int>(args[0]), static_cast<int>(args[1]),
                      kind == "torus-triangulation");
  }
  if (kind == "random" || kind == "random-nonorientable") {
    need(2, 3);
    RandomEmbeddingSpec rs;
    rs.n = static_cast<int>(args[0]);
    rs.genus = static_cast<int>(args[1]);
    rs.orientable = kind == "random";
    rs.seed = args.size() == 3 ? static_cast<std::uint64_t>(args[2]) : seed;
    return random_embedding(rs);
  }
  throw invalid_input("unknown generator '" + kind + "'");
}

}  // namespace thickness

#endif  // THICKNESS_GENERATORS_HPP
