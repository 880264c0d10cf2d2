#ifndef THICKNESS_GRAPH_HPP
#define THICKNESS_GRAPH_HPP

#include <algorithm>
#include <numeric>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "thickness/core.hpp"

namespace thickness {

struct Edge {
  EdgeId id = 0;
  VertexId u = 0;
  VertexId v = 0;

  bool is_loop() const { return u == v; }
  VertexId end_vertex(int end) const { return end == 0 ? u : v; }
  VertexId other(VertexId x) const { return x == u ? v : u; }
};

/// Undirected multigraph with explicit, stable edge ids.
///
/// Edge ids need not be contiguous (deletions leave gaps), but each id is
/// unique. Endpoints must lie in 0..n-1. Construction throws on violations
/// that would make the value unusable; softer checks (loops, parallels in
/// user input) are reported by `problems()`.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int vertex_count, std::vector<Edge> edges = {},
                 bool allow_multi = false)
      : n_(vertex_count), edges_(std::move(edges)), allow_multi_(allow_multi) {
    if (n_ < 0) throw invalid_input("negative vertex count");
    reindex();
  }

  /// Convenience: edges numbered 0..m-1 in the given order.
  static Graph from_pairs(int vertex_count,
                          const std::vector<std::pair<VertexId, VertexId>>& pairs,
                          bool allow_multi = false) {
    std::vector<Edge> edges;
    edges.reserve(pairs.size());
    EdgeId id = 0;
    for (auto [u, v] : pairs) edges.push_back({id++, u, v});
    return Graph(vertex_count, std::move(edges), allow_multi);
  }

  static Graph complete(int n) {
    std::vector<std::pair<VertexId, VertexId>> pairs;
    for (VertexId u = 0; u < n; ++u)
      for (VertexId v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
    return from_pairs(n, pairs);
  }

  int vertex_count() const { return n_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  bool allows_multi() const { return allow_multi_; }
  std::span<const Edge> edges() const { return edges_; }

  bool has_edge(EdgeId id) const {
    return id >= 0 && id < static_cast<EdgeId>(slot_.size()) && slot_[id] >= 0;
  }
  /// Position of the edge in `edges()`.
  int slot(EdgeId id) const {
    if (!has_edge(id)) throw invalid_input("unknown edge id " + std::to_string(id));
    return slot_[id];
  }
  const Edge& edge(EdgeId id) const { return edges_[slot(id)]; }
  VertexId tail(Dart d) const { return edge(d.edge).end_vertex(d.end); }
  VertexId head(Dart d) const { return edge(d.edge).end_vertex(1 - d.end); }

  EdgeId next_edge_id() const {
    EdgeId next = 0;
    for (const auto& e : edges_) next = std::max(next, e.id + 1);
    return next;
  }

  /// Lowest-id edge joining u and v, or -1.
  EdgeId find_edge(VertexId u, VertexId v) const {
    EdgeId best = -1;
    for (const auto& e : edges_)
      if ((e.u == u && e.v == v) || (e.u == v && e.v == u))
        if (best < 0 || e.id < best) best = e.id;
    return best;
  }

  std::vector<int> degrees() const {
    std::vector<int> deg(n_, 0);
    for (const auto& e : edges_) {
      ++deg[e.u];
      ++deg[e.v];
    }
    return deg;
  }

  /// Incident edge ids per vertex, ascending by id (loops listed once).
  std::vector<std::vector<EdgeId>> incidence() const {
    std::vector<std::vector<EdgeId>> inc(n_);
    for (const auto& e : edges_) {
      inc[e.u].push_back(e.id);
      if (e.v != e.u) inc[e.v].push_back(e.id);
    }
    for (auto& l : inc) std::sort(l.begin(), l.end());
    return inc;
  }

  /// Subgraph on the same vertex set keeping only the listed edges.
  Graph edge_subgraph(std::span<const EdgeId> keep) const {
    std::vector<Edge> out;
    out.reserve(keep.size());
    for (EdgeId id : keep) out.push_back(edge(id));
    std::sort(out.begin(), out.end(),
              [](const Edge& a, const Edge& b) { return a.id < b.id; });
    return Graph(n_, std::move(out), allow_multi_);
  }

  Graph without_edges(const std::set<EdgeId>& drop) const {
    std::vector<Edge> out;
    for (const auto& e : edges_)
      if (!drop.count(e.id)) out.push_back(e);
    return Graph(n_, std::move(out), allow_multi_);
  }

  Graph with_edge(Edge e) const {
    auto out = edges_;
    out.push_back(e);
    return Graph(n_, std::move(out), allow_multi_);
  }

  std::vector<EdgeId> edge_ids() const {
    std::vector<EdgeId> ids;
    ids.reserve(edges_.size());
    for (const auto& e : edges_) ids.push_back(e.id);
    return ids;
  }

  /// Component label per vertex (isolated vertices get their own label).
  std::vector<int> components(int* count = nullptr) const {
    std::vector<int> parent(n_);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    for (const auto& e : edges_) parent[find(e.u)] = find(e.v);
    std::vector<int> label(n_, -1), root_label(n_, -1);
    int next = 0;
    for (int v = 0; v < n_; ++v) {
      int r = find(v);
      if (root_label[r] < 0) root_label[r] = next++;
      label[v] = root_label[r];
    }
    if (count) *count = next;
    return label;
  }

  bool connected() const {
    int c = 0;
    components(&c);
    return c <= 1;
  }

  /// Loops and parallel pairs, as human-readable notes.
  std::vector<std::string> simplicity_problems() const {
    std::vector<std::string> out;
    std::set<std::pair<VertexId, VertexId>> seen;
    for (const auto& e : edges_) {
      if (e.is_loop()) {
        out.push_back("loop at vertex " + std::to_string(e.u) + " (edge " +
                      std::to_string(e.id) + ")");
        continue;
      }
      auto key = std::minmax(e.u, e.v);
      if (!seen.insert(key).second)
        out.push_back("parallel edge " + std::to_string(e.id) + " between " +
                      std::to_string(key.first) + " and " +
                      std::to_string(key.second));
    }
    return out;
  }

  bool is_simple() const { return simplicity_problems().empty(); }

 private:
  void reindex() {
    EdgeId max_id = -1;
    for (const auto& e : edges_) {
      if (e.id < 0) throw invalid_input("negative edge id");
      if (e.u < 0 || e.u >= n_ || e.v < 0 || e.v >= n_)
        throw invalid_input("edge " + std::to_string(e.id) +
                            " has endpoint out of range");
      max_id = std::max(max_id, e.id);
    }
    slot_.assign(static_cast<std::size_t>(max_id + 1), -1);
    for (std::size_t i = 0; i < edges_.size(); ++i) {
      if (slot_[edges_[i].id] >= 0)
        throw invalid_input("duplicate edge id " + std::to_string(edges_[i].id));
      slot_[edges_[i].id] = static_cast<int>(i);
    }
  }

  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<int> slot_;
  bool allow_multi_ = false;
};

}  // namespace thickness

#endif  // THICKNESS_GRAPH_HPP
