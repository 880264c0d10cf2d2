#ifndef THICKNESS_PEEL_HPP
#define THICKNESS_PEEL_HPP

#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include "thickness/graph.hpp"

namespace thickness {

struct PeelStep {
  VertexId vertex;
  std::vector<EdgeId> edges;  // edges to the remainder at removal time
};

struct PeelRecord {
  int d = 0;
  std::vector<PeelStep> steps;         // in removal order
  std::vector<VertexId> core_vertices;  // ascending
  std::vector<EdgeId> core_edges;       // ascending
};

/// Remove a minimum-degree vertex (lowest id on ties) while that degree is
/// at most d. The survivors form the core, of minimum degree > d.
inline PeelRecord degeneracy_peel(const Graph& g, int d) {
  if (d < 1) throw invalid_input("peel threshold must be at least 1");
  for (const auto& e : g.edges())
    if (e.is_loop()) throw invalid_input("peel needs a loopless graph");
  PeelRecord rec;
  rec.d = d;
  const int n = g.vertex_count();
  auto inc = g.incidence();
  std::vector<char> gone(n, 0);
  std::vector<int> deg(n, 0);
  for (const auto& e : g.edges()) {
    ++deg[e.u];
    ++deg[e.v];
  }
  std::set<std::pair<int, VertexId>> queue;
  for (int v = 0; v < n; ++v) queue.insert({deg[v], v});
  while (!queue.empty()) {
    auto [dv, v] = *queue.begin();
    if (dv > d) break;
    queue.erase(queue.begin());
    gone[v] = 1;
    PeelStep step{v, {}};
    std::vector<std::pair<VertexId, EdgeId>> nbrs;
    for (EdgeId id : inc[v]) {
      VertexId w = g.edge(id).other(v);
      if (!gone[w]) nbrs.push_back({w, id});
    }
    std::sort(nbrs.begin(), nbrs.end());
    for (auto [w, id] : nbrs) {
      step.edges.push_back(id);
      queue.erase({deg[w], w});
      --deg[w];
      queue.insert({deg[w], w});
    }
    rec.steps.push_back(std::move(step));
  }
  for (int v = 0; v < n; ++v)
    if (!gone[v]) rec.core_vertices.push_back(v);
  for (const auto& e : g.edges())
    if (!gone[e.u] && !gone[e.v]) rec.core_edges.push_back(e.id);
  std::sort(rec.core_edges.begin(), rec.core_edges.end());
  return rec;
}

/// Replay the removals backwards; the i-th edge of a re-added vertex goes
/// to forest i. Each forest component then meets the core in at most one
/// vertex.
inline std::vector<std::vector<EdgeId>> forest_partition(const Graph& g, const PeelRecord& rec) {
  std::vector<std::vector<EdgeId>> forests(rec.d);
  std::set<EdgeId> used(rec.core_edges.begin(), rec.core_edges.end());
  std::set<VertexId> removed;
  for (const auto& step : rec.steps) {
    if (step.vertex < 0 || step.vertex >= g.vertex_count())
      throw invalid_input("peel record names an unknown vertex");
    if (!removed.insert(step.vertex).second)
      throw invalid_input("peel record removes a vertex twice");
    if (static_cast<int>(step.edges.size()) > rec.d)
      throw invalid_input("peel record exceeds the threshold at vertex " +
                          std::to_string(step.vertex));
    for (EdgeId id : step.edges) {
      if (!g.has_edge(id)) throw invalid_input("peel record names an unknown edge");
      const Edge& e = g.edge(id);
      if (e.u != step.vertex && e.v != step.vertex)
        throw invalid_input("peel record edge not at its vertex");
      if (!used.insert(id).second) throw invalid_input("peel record repeats an edge");
    }
  }
  if (static_cast<int>(used.size()) != g.edge_count())
    throw invalid_input("peel record does not cover the graph");
  for (auto it = rec.steps.rbegin(); it != rec.steps.rend(); ++it)
    for (std::size_t i = 0; i < it->edges.size(); ++i) forests[i].push_back(it->edges[i]);
  return forests;
}

}  // namespace thickness

#endif  // THICKNESS_PEEL_HPP
