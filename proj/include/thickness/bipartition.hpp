#ifndef THICKNESS_BIPARTITION_HPP
#define THICKNESS_BIPARTITION_HPP

#include <set>
#include <utility>
#include <vector>

#include "thickness/graph.hpp"
#include "thickness/partition_search.hpp"
#include "thickness/planarity.hpp"

namespace thickness {

struct Bipartition {
  std::vector<EdgeId> first;
  std::vector<EdgeId> second;
  bool by_search = false;
};

namespace detail {

// Copies of a representative pair and loops follow the representative's
// part; loops go to the first part.
inline Bipartition expand_skeleton(const Skeleton& sk, const std::vector<int>& part_of_pair,
                                   bool by_search) {
  Bipartition out;
  out.by_search = by_search;
  for (std::size_t i = 0; i < sk.pairs.size(); ++i) {
    auto& dst = part_of_pair[i] == 0 ? out.first : out.second;
    for (EdgeId id : sk.bundle.at(sk.pairs[i])) dst.push_back(id);
  }
  for (EdgeId id : sk.loops) out.first.push_back(id);
  return out;
}

}  // namespace detail

/// Split a planar graph into two outerplanar parts. A breadth-first layering
/// is tried first (tree edges and edges inside a level against edges between
/// levels); otherwise a randomized exhaustive search with incremental
/// outerplanarity pruning runs until the deadline.
inline Bipartition outerplanar_bipartition(const Graph& g, Deadline deadline = Deadline::never()) {
  if (!is_planar(g).verdict) throw invalid_input("bipartition needs a planar graph");
  auto sk = detail::skeleton_of(g);
  const int n = g.vertex_count();
  const int m = static_cast<int>(sk.pairs.size());
  auto parts_ok = [&](const std::vector<int>& part) {
    for (int side = 0; side < 2; ++side) {
      std::vector<std::pair<int, int>> ps;
      for (int i = 0; i < m; ++i)
        if (part[i] == side) ps.push_back(sk.pairs[i]);
      if (!is_outerplanar(Graph::from_pairs(n, ps)).verdict) return false;
    }
    return true;
  };

  // Breadth-first layering, components in vertex order.
  std::vector<std::vector<std::pair<int, int>>> adj(n);
  for (int i = 0; i < m; ++i) {
    adj[sk.pairs[i].first].push_back({sk.pairs[i].second, i});
    adj[sk.pairs[i].second].push_back({sk.pairs[i].first, i});
  }
  std::vector<int> level(n, -1);
  std::vector<char> tree(m, 0);
  for (int s = 0; s < n; ++s) {
    if (level[s] >= 0) continue;
    level[s] = 0;
    std::vector<int> queue{s};
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
      int x = queue[qi];
      for (auto [y, i] : adj[x])
        if (level[y] < 0) {
          level[y] = level[x] + 1;
          tree[i] = 1;
          queue.push_back(y);
        }
    }
  }
  std::vector<int> part(m);
  for (int i = 0; i < m; ++i) {
    auto [a, b] = sk.pairs[i];
    part[i] = (tree[i] || level[a] == level[b]) ? 0 : 1;
  }
  if (parts_ok(part)) return detail::expand_skeleton(sk, part, false);

  RestartOptions opt;
  opt.deadline = deadline;
  auto r = search_partition_restarts(n, sk.pairs, 2, LayerClass::Outerplanar, opt);
  if (r.exhausted) throw failure("planar graph without an outerplanar bipartition");
  if (!r.assignment) throw timeout("outerplanar bipartition: time limit reached");
  return detail::expand_skeleton(sk, *r.assignment, true);
}

}  // namespace thickness

#endif  // THICKNESS_BIPARTITION_HPP
