#ifndef THICKNESS_ORACLE_HPP
#define THICKNESS_ORACLE_HPP

#include <chrono>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <unordered_set>
#include <vector>

#include "thickness/decomposition.hpp"
#include "thickness/partition_search.hpp"

namespace thickness {

struct OracleResult {
  std::optional<int> value;  // empty: limit exceeded
  std::vector<std::vector<EdgeId>> witness;
  std::int64_t nodes = 0;
  double elapsed = 0;  // seconds
  std::string limit;   // what ran out, when value is empty

  bool exceeded() const { return !value.has_value(); }
};

namespace detail {

inline double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

inline OracleResult exact_layers(const Graph& g, LayerClass cls, int max_k, Deadline deadline) {
  const auto t0 = std::chrono::steady_clock::now();
  OracleResult out;
  auto sk = skeleton_of(g);
  const int n = g.vertex_count();
  const int m = static_cast<int>(sk.pairs.size());
  // One (empty) layer still covers the vertices; only the null graph needs none.
  if (g.edge_count() == 0) {
    out.value = n > 0 ? 1 : 0;
    out.witness.assign(*out.value, {});
    return out;
  }
  // Only loops: a single layer holds them.
  int lo = 1;
  if (m > 0) {
    const int cap = cls == LayerClass::Planar ? std::max(3 * n - 6, 3) : std::max(2 * n - 3, 1);
    lo = std::max(1, (m + cap - 1) / cap);
  }
  for (int k = lo; k <= max_k; ++k) {
    PartitionSearchOptions opt;
    opt.deadline = deadline;
    auto r = search_partition(n, sk.pairs, k, cls, opt);
    out.nodes += r.nodes;
    if (r.assignment) {
      out.value = k;
      out.witness.assign(k, {});
      for (int i = 0; i < m; ++i)
        for (EdgeId id : sk.bundle.at(sk.pairs[i])) out.witness[(*r.assignment)[i]].push_back(id);
      for (EdgeId id : sk.loops) out.witness[0].push_back(id);
      for (auto& l : out.witness) std::sort(l.begin(), l.end());
      out.elapsed = seconds_since(t0);
      return out;
    }
    if (!r.exhausted) {
      out.limit = "time limit reached while testing " + std::to_string(k) + " layers";
      out.elapsed = seconds_since(t0);
      return out;
    }
  }
  out.limit = "more than " + std::to_string(max_k) + " layers needed";
  out.elapsed = seconds_since(t0);
  return out;
}

}  // namespace detail

/// Minimum number of planar layers, by iterative deepening from the edge
/// counting bound. Multigraphs are measured on their simple skeleton.
inline OracleResult exact_thickness(const Graph& g, int max_k = 8,
                                    Deadline deadline = Deadline::never()) {
  return detail::exact_layers(g, LayerClass::Planar, max_k, deadline);
}

inline OracleResult exact_outerthickness(const Graph& g, int max_k = 8,
                                         Deadline deadline = Deadline::never()) {
  return detail::exact_layers(g, LayerClass::Outerplanar, max_k, deadline);
}

struct DiskSearchResult {
  std::optional<bool> found;  // empty: limit exceeded
  std::vector<int> faces;     // witness face ids
  std::int64_t subsets = 0;
  double elapsed = 0;
};

/// Is the closed union of these faces a disk containing every vertex and
/// bounded by a cycle of the graph? Interior vertices are allowed.
inline bool is_spanning_disk(const Embedding& emb, const std::vector<int>& faces) {
  if (faces.empty() || static_cast<int>(faces.size()) >= emb.face_count()) return false;
  std::set<std::int64_t> keys;
  std::set<EdgeId> edges;
  for (int f : faces) {
    keys.insert(emb.faces()[f].key);
    for (const auto& s : emb.faces()[f].walk) edges.insert(s.dart.edge);
  }
  std::set<VertexId> verts;
  for (EdgeId e : edges) {
    verts.insert(emb.graph().edge(e).u);
    verts.insert(emb.graph().edge(e).v);
  }
  if (static_cast<int>(verts.size()) != emb.vertex_count()) return false;
  const int chi = static_cast<int>(verts.size()) - static_cast<int>(edges.size()) +
                  static_cast<int>(faces.size());
  if (chi != 1) return false;
  Embedding sub = induced_embedding(emb, edges);
  const Face* outer = nullptr;
  for (const auto& f : sub.faces()) {
    if (keys.count(f.key)) continue;
    if (outer) return false;
    outer = &f;
  }
  if (!outer) return false;
  std::set<VertexId> seen;
  for (const auto& s : outer->walk)
    if (!seen.insert(sub.tail(s.dart)).second) return false;
  return true;
}

/// Exhaustive search over edge-connected face subsets of the embedding as
/// given (no added or re-embedded edges).
inline DiskSearchResult has_spanning_disk(const Embedding& emb,
                                          Deadline deadline = Deadline::never()) {
  const auto t0 = std::chrono::steady_clock::now();
  DiskSearchResult out;
  const int nf = emb.face_count();
  if (nf > 64) throw invalid_input("spanning-disk search supports at most 64 faces");
  // Face adjacency through shared edges.
  std::map<EdgeId, std::vector<int>> by_edge;
  for (int f = 0; f < nf; ++f)
    for (const auto& s : emb.faces()[f].walk) by_edge[s.dart.edge].push_back(f);
  std::vector<std::uint64_t> adj(nf, 0);
  for (const auto& [e, fs] : by_edge)
    for (int a : fs)
      for (int b : fs)
        if (a != b) adj[a] |= std::uint64_t{1} << b;

  std::unordered_set<std::uint64_t> visited;
  std::vector<std::uint64_t> stack;
  for (int f = 0; f < nf; ++f) stack.push_back(std::uint64_t{1} << f);
  while (!stack.empty()) {
    std::uint64_t s = stack.back();
    stack.pop_back();
    if (!visited.insert(s).second) continue;
    ++out.subsets;
    if ((out.subsets & 0xff) == 0 && deadline.expired()) {
      out.elapsed = detail::seconds_since(t0);
      return out;
    }
    std::vector<int> faces;
    std::uint64_t frontier = 0;
    for (int f = 0; f < nf; ++f)
      if (s >> f & 1) {
        faces.push_back(f);
        frontier |= adj[f];
      }
    if (is_spanning_disk(emb, faces)) {
      out.found = true;
      out.faces = faces;
      out.elapsed = detail::seconds_since(t0);
      return out;
    }
    frontier &= ~s;
    for (int f = 0; f < nf; ++f)
      if (frontier >> f & 1) {
        std::uint64_t t = s | std::uint64_t{1} << f;
        if (__builtin_popcountll(t) < nf && !visited.count(t)) stack.push_back(t);
      }
  }
  out.found = false;
  out.elapsed = detail::seconds_since(t0);
  return out;
}

struct VerificationCheck {
  std::string name;
  bool ok = true;
  std::string detail;
};

struct VerificationReport {
  std::vector<VerificationCheck> checks;

  bool ok() const {
    for (const auto& c : checks)
      if (!c.ok) return false;
    return true;
  }
  const VerificationCheck* find(const std::string& name) const {
    for (const auto& c : checks)
      if (c.name == name) return &c;
    return nullptr;
  }
};

/// Checks a decomposition against the graph only: disjointness,
/// exhaustiveness, helper exclusion, per-layer certification, bound.
inline VerificationReport verify_decomposition(const Graph& g, const Decomposition& dec) {
  VerificationReport rep;
  VerificationCheck disjoint{"disjointness", true, ""};
  VerificationCheck exhaustive{"exhaustiveness", true, ""};
  VerificationCheck helpers{"helper-exclusion", true, ""};
  VerificationCheck cert{"certification", true, ""};
  VerificationCheck bound{"bound", true, ""};

  std::set<EdgeId> helper_ids;
  for (const auto& h : dec.helpers) helper_ids.insert(h.id);
  std::map<EdgeId, int> owner;
  for (std::size_t li = 0; li < dec.layers.size(); ++li) {
    const auto& layer = dec.layers[li];
    std::vector<EdgeId> known;
    for (EdgeId e : layer.edges) {
      if (helper_ids.count(e) || !g.has_edge(e)) {
        helpers.ok = false;
        helpers.detail += (helpers.detail.empty() ? "" : ", ") + std::string("edge ") +
                          std::to_string(e) + " in layer " + std::to_string(li + 1);
        continue;
      }
      known.push_back(e);
      auto [it, fresh] = owner.emplace(e, static_cast<int>(li));
      if (!fresh) {
        disjoint.ok = false;
        disjoint.detail += (disjoint.detail.empty() ? "" : ", ") + std::string("edge ") +
                           std::to_string(e) + " in layers " + std::to_string(it->second + 1) +
                           " and " + std::to_string(li + 1);
      }
    }
    std::sort(known.begin(), known.end());
    known.erase(std::unique(known.begin(), known.end()), known.end());
    if (!certified(g.edge_subgraph(known), layer.cls)) {
      cert.ok = false;
      cert.detail += (cert.detail.empty() ? "" : ", ") + std::string("layer ") +
                     std::to_string(li + 1) + " is not " + to_string(layer.cls);
    }
  }
  for (const auto& e : g.edges())
    if (!owner.count(e.id)) {
      exhaustive.ok = false;
      exhaustive.detail += (exhaustive.detail.empty() ? "" : ", ") + std::string("edge ") +
                           std::to_string(e.id) + " missing";
    }
  if (dec.claimed_bound > 0 && dec.layer_count() > dec.claimed_bound) {
    bound.ok = false;
    bound.detail = std::to_string(dec.layer_count()) + " layers exceed the claimed bound " +
                   std::to_string(dec.claimed_bound);
  }
  rep.checks = {disjoint, exhaustive, helpers, cert, bound};
  return rep;
}

}  // namespace thickness

#endif  // THICKNESS_ORACLE_HPP
