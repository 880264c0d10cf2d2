#ifndef THICKNESS_HOMOLOGY_HPP
#define THICKNESS_HOMOLOGY_HPP

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <span>
#include <vector>

#include "thickness/embedding.hpp"

namespace thickness {

using Signature = std::vector<int>;

/// A traversal of one edge inside a closed walk.
struct WalkStep {
  EdgeId edge;
  bool forward;  // u -> v
};

inline bool is_zero(const Signature& s) {
  return std::all_of(s.begin(), s.end(), [](int x) { return x == 0; });
}

/// Signature up to sign: the representative whose first nonzero entry is
/// positive (integer case) or the vector itself (mod-2 case).
inline Signature canonical_up_to_sign(Signature s) {
  for (int x : s) {
    if (x == 0) continue;
    if (x < 0)
      for (int& y : s) y = -y;
    break;
  }
  return s;
}

/// Per-edge homology coordinates from a tree-cotree decomposition.
///
/// Coordinates are indexed by the leftover edges (neither in the spanning
/// tree nor in the dual spanning tree). Orientable embeddings give integer
/// vectors of length 2g; nonorientable ones give mod-2 vectors of length k.
/// Every facial walk evaluates to zero.
class HomologyTable {
 public:
  HomologyTable() = default;

  bool integral() const { return integral_; }
  int rank() const { return static_cast<int>(generators_.size()); }
  /// Leftover edges, one per coordinate.
  const std::vector<EdgeId>& generators() const { return generators_; }
  const std::set<EdgeId>& tree_edges() const { return tree_; }

  const Signature& of_edge(EdgeId e) const { return value_.at(e); }

  Signature evaluate(std::span<const WalkStep> walk) const {
    Signature out(rank(), 0);
    for (const auto& step : walk) {
      const Signature& h = value_.at(step.edge);
      for (int i = 0; i < rank(); ++i) out[i] += step.forward ? h[i] : -h[i];
    }
    return reduce(out);
  }

  Signature evaluate_face(const Embedding& emb, const Face& f) const {
    return evaluate(face_walk(emb, f));
  }

  static std::vector<WalkStep> face_walk(const Embedding&, const Face& f) {
    std::vector<WalkStep> walk;
    for (const auto& s : f.walk) walk.push_back({s.dart.edge, s.dart.end == 0});
    return walk;
  }

  Signature reduce(Signature s) const {
    if (!integral_)
      for (int& x : s) x = ((x % 2) + 2) % 2;
    return s;
  }

 private:
  friend HomologyTable homology_signatures(const Embedding& emb);

  bool integral_ = true;
  std::vector<EdgeId> generators_;
  std::set<EdgeId> tree_;
  std::map<EdgeId, Signature> value_;
};

/// Tree-cotree homology table. Requires a connected graph.
inline HomologyTable homology_signatures(const Embedding& input) {
  if (!input.graph().connected())
    throw invalid_input("homology signatures need a connected graph");
  const bool orientable = input.surface().orientable;
  const Embedding emb = orientable ? normalized_orientation(input) : input;
  const Graph& g = emb.graph();

  HomologyTable table;
  table.integral_ = orientable;

  // Spanning tree: BFS from vertex 0, incident edges by ascending id.
  auto inc = g.incidence();
  std::vector<char> seen(g.vertex_count(), 0);
  std::vector<int> queue{0};
  seen[0] = 1;
  for (std::size_t qi = 0; qi < queue.size(); ++qi) {
    int x = queue[qi];
    for (EdgeId id : inc[x]) {
      int y = g.edge(id).other(x);
      if (!seen[y]) {
        seen[y] = 1;
        table.tree_.insert(id);
        queue.push_back(y);
      }
    }
  }

  // Dual spanning tree over the non-tree edges, BFS from face 0.
  const auto& faces = emb.faces();
  const int nf = static_cast<int>(faces.size());
  std::map<EdgeId, std::vector<int>> sides;  // faces on each side of an edge
  for (const auto& f : faces)
    for (const auto& s : f.walk) sides[s.dart.edge].push_back(f.id);
  std::vector<std::vector<std::pair<EdgeId, int>>> dual(nf);
  for (const auto& [id, fs] : sides) {
    if (table.tree_.count(id) || fs.size() != 2 || fs[0] == fs[1]) continue;
    dual[fs[0]].push_back({id, fs[1]});
    dual[fs[1]].push_back({id, fs[0]});
  }
  for (auto& l : dual) std::sort(l.begin(), l.end());

  std::vector<int> parent_face(nf, -1);
  std::vector<EdgeId> parent_edge(nf, -1);
  std::vector<int> order;
  std::set<EdgeId> cotree;
  if (nf > 0) {
    std::vector<char> fseen(nf, 0);
    fseen[0] = 1;
    order.push_back(0);
    for (std::size_t qi = 0; qi < order.size(); ++qi) {
      int f = order[qi];
      for (auto [id, h] : dual[f]) {
        if (fseen[h]) continue;
        fseen[h] = 1;
        parent_face[h] = f;
        parent_edge[h] = id;
        cotree.insert(id);
        order.push_back(h);
      }
    }
  }

  std::vector<EdgeId> ids = g.edge_ids();
  std::sort(ids.begin(), ids.end());
  for (EdgeId id : ids)
    if (!table.tree_.count(id) && !cotree.count(id)) table.generators_.push_back(id);

  const int r = table.rank();
  for (EdgeId id : ids) {
    Signature h(r, 0);
    for (int i = 0; i < r; ++i)
      if (table.generators_[i] == id) h[i] = 1;
    table.value_[id] = h;
  }

  // Peel the dual tree from its leaves: each face relation fixes the value
  // of the cotree edge joining it to its parent.
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    int f = *it;
    EdgeId pe = parent_edge[f];
    if (pe < 0) continue;
    Signature acc(r, 0);
    int coeff = 0;
    for (const auto& s : faces[f].walk) {
      int dir = s.dart.end == 0 ? 1 : -1;
      if (s.dart.edge == pe) {
        coeff += dir;
        continue;
      }
      const Signature& h = table.value_[s.dart.edge];
      for (int i = 0; i < r; ++i) acc[i] += dir * h[i];
    }
    if (!orientable) coeff = 1;
    Signature val(r, 0);
    for (int i = 0; i < r; ++i) val[i] = -acc[i] / coeff;
    table.value_[pe] = table.reduce(val);
  }
  return table;
}

/// Walk along a path given as a vertex-to-vertex edge sequence.
inline std::vector<WalkStep> walk_along(const Graph& g, VertexId start,
                                        std::span<const EdgeId> path) {
  std::vector<WalkStep> out;
  VertexId at = start;
  for (EdgeId id : path) {
    const Edge& e = g.edge(id);
    bool fwd = e.u == at;
    out.push_back({id, fwd});
    at = fwd ? e.v : e.u;
  }
  return out;
}

/// Shortest path (edge ids) inside an edge subset, BFS with ascending ids.
inline std::vector<EdgeId> path_within(const Graph& g, const std::set<EdgeId>& allowed,
                                       VertexId from, VertexId to) {
  if (from == to) return {};
  auto inc = g.incidence();
  std::vector<EdgeId> via(g.vertex_count(), -1);
  std::vector<char> seen(g.vertex_count(), 0);
  std::vector<int> queue{from};
  seen[from] = 1;
  for (std::size_t qi = 0; qi < queue.size() && !seen[to]; ++qi) {
    int x = queue[qi];
    for (EdgeId id : inc[x]) {
      if (!allowed.count(id)) continue;
      int y = g.edge(id).other(x);
      if (seen[y]) continue;
      seen[y] = 1;
      via[y] = id;
      queue.push_back(y);
    }
  }
  if (!seen[to]) throw failure("no path inside region");
  std::vector<EdgeId> path;
  for (int at = to; at != from;) {
    EdgeId id = via[at];
    path.push_back(id);
    at = g.edge(id).other(at);
  }
  std::reverse(path.begin(), path.end());
  return path;
}

/// Signature of the closed walk: edge `e` from u to v, then back to u
/// through `region` edges.
inline Signature loop_signature(const HomologyTable& table, const Graph& g,
                                const std::set<EdgeId>& region, EdgeId e) {
  const Edge& edge = g.edge(e);
  std::vector<WalkStep> walk{{e, true}};
  auto back = path_within(g, region, edge.v, edge.u);
  auto tail = walk_along(g, edge.v, back);
  walk.insert(walk.end(), tail.begin(), tail.end());
  return table.evaluate(walk);
}

}  // namespace thickness

#endif  // THICKNESS_HOMOLOGY_HPP
