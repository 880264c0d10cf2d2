#ifndef THICKNESS_EMBEDDING_HPP
#define THICKNESS_EMBEDDING_HPP

#include <algorithm>
#include <cstdint>
#include <limits>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "thickness/core.hpp"
#include "thickness/graph.hpp"

namespace thickness {

/// Raw signed rotation system: the data an embedding file describes.
struct RotationSystem {
  Graph graph;
  std::vector<std::vector<Dart>> rotation;  // cyclic dart order per vertex
  std::set<EdgeId> twisted;                 // edges with sign -1
  std::set<EdgeId> helpers;                 // edges added by the library
};

/// One step of a face walk: leave along `dart` with local orientation
/// `orientation` (+1 follows the rotation forward, -1 backward).
struct FaceStep {
  Dart dart;
  int orientation = 1;
  auto operator<=>(const FaceStep&) const = default;
};

struct Face {
  int id = 0;
  std::vector<FaceStep> walk;
  /// Smallest traversal state on the face in either direction; stable under
  /// edits elsewhere in the embedding.
  std::int64_t key = 0;

  int size() const { return static_cast<int>(walk.size()); }
};

/// A position on a face walk: the vertex where step `position` departs.
struct Corner {
  int face = 0;
  int position = 0;
};

struct SurfaceDescriptor {
  bool orientable = true;
  /// Orientable genus g, or nonorientable genus k (crosscaps). Summed over
  /// components when the graph is disconnected.
  int genus = 0;
  int euler_characteristic = 2;
  int components = 1;

  int euler_genus() const { return orientable ? 2 * genus : genus; }
  std::string name() const {
    if (orientable) return genus == 0 ? "sphere" : "S_" + std::to_string(genus);
    return "N_" + std::to_string(genus);
  }
  bool operator==(const SurfaceDescriptor&) const = default;
};

namespace detail {

inline std::int64_t state_id(Dart d, int orientation) {
  return (static_cast<std::int64_t>(d.edge) * 2 + d.end) * 2 +
         (orientation < 0 ? 1 : 0);
}

}  // namespace detail

/// Structural problems of a rotation system (darts missing, duplicated, or
/// listed at the wrong vertex). Empty iff the rotation can be traced.
inline std::vector<std::string> rotation_problems(const RotationSystem& rs) {
  std::vector<std::string> out;
  const Graph& g = rs.graph;
  if (static_cast<int>(rs.rotation.size()) != g.vertex_count()) {
    out.push_back("rotation lists " + std::to_string(rs.rotation.size()) +
                  " vertices, graph has " + std::to_string(g.vertex_count()));
    return out;
  }
  std::map<std::pair<EdgeId, int>, int> seen;
  for (int v = 0; v < g.vertex_count(); ++v) {
    for (const Dart& d : rs.rotation[v]) {
      if (!g.has_edge(d.edge) || (d.end != 0 && d.end != 1)) {
        out.push_back("rotation at vertex " + std::to_string(v) +
                      " names unknown dart " + std::to_string(d.edge) + "." +
                      std::to_string(d.end));
        continue;
      }
      if (g.tail(d) != v)
        out.push_back("dart " + std::to_string(d.edge) + "." +
                      std::to_string(d.end) + " listed at vertex " +
                      std::to_string(v) + " but belongs to vertex " +
                      std::to_string(g.tail(d)));
      if (++seen[{d.edge, d.end}] == 2)
        out.push_back("dart " + std::to_string(d.edge) + "." +
                      std::to_string(d.end) + " duplicated");
    }
  }
  for (const auto& e : g.edges())
    for (int end = 0; end < 2; ++end)
      if (!seen.count({e.id, end}))
        out.push_back("dart absent: " + std::to_string(e.id) + "." +
                      std::to_string(end));
  for (EdgeId id : rs.twisted)
    if (!g.has_edge(id))
      out.push_back("sign given for unknown edge " + std::to_string(id));
  for (EdgeId id : rs.helpers)
    if (!g.has_edge(id))
      out.push_back("helper flag on unknown edge " + std::to_string(id));
  return out;
}

/// Cellular embedding of a graph given by a signed rotation system, with its
/// faces and surface derived at construction. Immutable.
class Embedding {
 public:
  explicit Embedding(RotationSystem rs) : rs_(std::move(rs)) {
    auto problems = rotation_problems(rs_);
    if (!problems.empty()) {
      std::string msg = "malformed rotation system:";
      for (const auto& p : problems) msg += "\n  " + p;
      throw invalid_input(msg);
    }
    index();
    trace();
    classify();
  }

  const RotationSystem& system() const { return rs_; }
  const Graph& graph() const { return rs_.graph; }
  int vertex_count() const { return rs_.graph.vertex_count(); }
  int edge_count() const { return rs_.graph.edge_count(); }

  const std::vector<Dart>& rotation(VertexId v) const { return rs_.rotation[v]; }
  int degree(VertexId v) const { return static_cast<int>(rs_.rotation[v].size()); }
  int sign(EdgeId e) const { return sign_[rs_.graph.slot(e)]; }
  bool is_helper(EdgeId e) const { return rs_.helpers.count(e) > 0; }
  VertexId tail(Dart d) const { return rs_.graph.tail(d); }
  VertexId head(Dart d) const { return rs_.graph.head(d); }

  /// Index of the dart within the rotation list of its vertex.
  int position(Dart d) const { return pos_[rs_.graph.slot(d.edge) * 2 + d.end]; }

  /// Dart `steps` places after `d` around its vertex (negative: before).
  Dart rotate(Dart d, int steps) const {
    const auto& rot = rs_.rotation[tail(d)];
    int n = static_cast<int>(rot.size());
    int p = ((position(d) + steps) % n + n) % n;
    return rot[p];
  }

  const std::vector<Face>& faces() const { return faces_; }
  int face_count() const { return static_cast<int>(faces_.size()); }

  /// Face containing the traversal state (dart, orientation), and its index
  /// within that face's walk.
  std::pair<int, int> locate(Dart d, int orientation) const {
    auto it = state_face_.find(detail::state_id(d, orientation));
    if (it == state_face_.end()) throw failure("untraced state");
    return it->second;
  }

  /// Like `locate`, but also accepts a state whose reverse is the recorded
  /// one; `reversed` tells which. Walks run in one direction only, so a
  /// state seen from the other side of its face is found through its reverse.
  struct StateLocation {
    int face;
    int index;
    bool reversed;
  };
  StateLocation find_state(Dart d, int orientation) const {
    auto it = state_face_.find(detail::state_id(d, orientation));
    if (it != state_face_.end()) return {it->second.first, it->second.second, false};
    it = state_face_.find(detail::state_id(d.opposite(), -orientation * sign(d.edge)));
    if (it == state_face_.end()) throw failure("untraced state");
    return {it->second.first, it->second.second, true};
  }

  /// V - E + F, with each isolated vertex counted as a sphere component.
  int euler_characteristic() const { return surface_.euler_characteristic; }
  const SurfaceDescriptor& surface() const { return surface_; }

  /// Vertex at which a face corner sits.
  VertexId corner_vertex(Corner c) const {
    return tail(faces_.at(c.face).walk.at(c.position).dart);
  }

  /// Component label per vertex.
  const std::vector<int>& component_of() const { return component_; }

  /// Local orientation flip per vertex making every edge positive, if the
  /// embedding is orientable. Flips follow a BFS tree from the lowest vertex
  /// of each component.
  std::optional<std::vector<int>> orientation_flips() const {
    const Graph& g = rs_.graph;
    std::vector<int> flip(g.vertex_count(), 0);
    auto inc = g.incidence();
    for (int s = 0; s < g.vertex_count(); ++s) {
      if (flip[s]) continue;
      flip[s] = 1;
      std::vector<int> queue{s};
      for (std::size_t qi = 0; qi < queue.size(); ++qi) {
        int x = queue[qi];
        for (EdgeId id : inc[x]) {
          const Edge& e = g.edge(id);
          int y = e.other(x);
          if (!flip[y]) {
            flip[y] = flip[x] * sign(id);
            queue.push_back(y);
          }
        }
      }
    }
    for (const auto& e : g.edges())
      if (sign(e.id) * flip[e.u] * flip[e.v] != 1) return std::nullopt;
    return flip;
  }

 private:
  void index() {
    const Graph& g = rs_.graph;
    sign_.assign(g.edge_count(), 1);
    for (EdgeId id : rs_.twisted) sign_[g.slot(id)] = -1;
    pos_.assign(static_cast<std::size_t>(g.edge_count()) * 2, -1);
    for (int v = 0; v < g.vertex_count(); ++v)
      for (std::size_t i = 0; i < rs_.rotation[v].size(); ++i) {
        const Dart& d = rs_.rotation[v][i];
        pos_[g.slot(d.edge) * 2 + d.end] = static_cast<int>(i);
      }
  }

  // Faces are the orbits of the signed face-tracing map; each orbit is
  // paired with its reverse so every face is listed once. Starting states
  // are taken in ascending (edge id, end, +/-) order.
  void trace() {
    const Graph& g = rs_.graph;
    std::vector<Edge> sorted(g.edges().begin(), g.edges().end());
    std::sort(sorted.begin(), sorted.end(),
              [](const Edge& a, const Edge& b) { return a.id < b.id; });
    std::set<std::int64_t> used;
    for (const Edge& e : sorted)
      for (int end = 0; end < 2; ++end)
        for (int orient : {1, -1}) {
          Dart start{e.id, end};
          if (used.count(detail::state_id(start, orient))) continue;
          Face f;
          f.id = static_cast<int>(faces_.size());
          f.key = std::numeric_limits<std::int64_t>::max();
          Dart d = start;
          int s = orient;
          do {
            std::int64_t fwd = detail::state_id(d, s);
            std::int64_t rev = detail::state_id(d.opposite(), -s * sign(d.edge));
            used.insert(fwd);
            used.insert(rev);
            f.key = std::min({f.key, fwd, rev});
            state_face_[fwd] = {f.id, static_cast<int>(f.walk.size())};
            f.walk.push_back({d, s});
            Dart arrival = d.opposite();
            s = s * sign(d.edge);
            d = rotate(arrival, s);
          } while (!(d == start && s == orient));
          faces_.push_back(std::move(f));
        }
  }

  void classify() {
    const Graph& g = rs_.graph;
    int comps = 0;
    component_ = g.components(&comps);
    std::vector<int> v_count(comps, 0), e_count(comps, 0), f_count(comps, 0);
    for (int v = 0; v < g.vertex_count(); ++v) ++v_count[component_[v]];
    for (const auto& e : g.edges()) ++e_count[component_[e.u]];
    for (const auto& f : faces_) ++f_count[component_[tail(f.walk.front().dart)]];
    for (int c = 0; c < comps; ++c)
      if (e_count[c] == 0) f_count[c] = 1;  // isolated vertex: a sphere

    auto flips = orientation_flips();
    surface_.orientable = flips.has_value();
    surface_.components = comps;
    surface_.euler_characteristic = 0;
    surface_.genus = 0;
    for (int c = 0; c < comps; ++c) {
      int chi = v_count[c] - e_count[c] + f_count[c];
      surface_.euler_characteristic += chi;
      surface_.genus += surface_.orientable ? (2 - chi) / 2 : 2 - chi;
    }
  }

  RotationSystem rs_;
  std::vector<int> sign_;
  std::vector<int> pos_;
  std::vector<Face> faces_;
  std::map<std::int64_t, std::pair<int, int>> state_face_;
  std::vector<int> component_;
  SurfaceDescriptor surface_;
};

inline const std::vector<Face>& trace_faces(const Embedding& emb) {
  return emb.faces();
}

inline SurfaceDescriptor surface_of(const Embedding& emb) {
  return emb.surface();
}

/// Same embedding with every vertex of negative flip mirrored so that all
/// signs are +1. Throws if the embedding is nonorientable.
inline Embedding normalized_orientation(const Embedding& emb) {
  auto flips = emb.orientation_flips();
  if (!flips) throw failure("embedding is nonorientable");
  RotationSystem rs = emb.system();
  for (int v = 0; v < emb.vertex_count(); ++v)
    if ((*flips)[v] < 0) std::reverse(rs.rotation[v].begin(), rs.rotation[v].end());
  rs.twisted.clear();
  return Embedding(std::move(rs));
}

/// Remove edges; rotations lose the corresponding darts, faces are retraced.
inline Embedding delete_edges(const Embedding& emb, const std::set<EdgeId>& edges) {
  for (EdgeId id : edges)
    if (!emb.graph().has_edge(id))
      throw invalid_input("cannot delete unknown edge " + std::to_string(id));
  if (edges.empty()) return emb;
  RotationSystem rs;
  rs.graph = emb.graph().without_edges(edges);
  rs.rotation.resize(emb.vertex_count());
  for (int v = 0; v < emb.vertex_count(); ++v)
    for (const Dart& d : emb.rotation(v))
      if (!edges.count(d.edge)) rs.rotation[v].push_back(d);
  for (EdgeId id : emb.system().twisted)
    if (!edges.count(id)) rs.twisted.insert(id);
  for (EdgeId id : emb.system().helpers)
    if (!edges.count(id)) rs.helpers.insert(id);
  return Embedding(std::move(rs));
}

/// Restriction of the rotation system to a subset of edges (vertex set kept).
inline Embedding induced_embedding(const Embedding& emb, const std::set<EdgeId>& keep) {
  std::set<EdgeId> drop;
  for (const auto& e : emb.graph().edges())
    if (!keep.count(e.id)) drop.insert(e.id);
  return delete_edges(emb, drop);
}

namespace detail {

/// Insert an edge with a chosen id between two corners of one face.
inline Embedding insert_edge(const Embedding& emb, Corner cx, Corner cy,
                             EdgeId id, bool helper, bool check_simple) {
  if (cx.face != cy.face)
    throw invalid_input("corners lie on different faces");
  if (cx.face < 0 || cx.face >= emb.face_count())
    throw invalid_input("no such face " + std::to_string(cx.face));
  const Face& f = emb.faces()[cx.face];
  auto in_range = [&](int p) { return p >= 0 && p < f.size(); };
  if (!in_range(cx.position) || !in_range(cy.position))
    throw invalid_input("corner position outside face walk");
  if (cx.position == cy.position) throw invalid_input("corners coincide");
  VertexId x = emb.corner_vertex(cx), y = emb.corner_vertex(cy);
  if (x == y) throw invalid_input("both corners at vertex " + std::to_string(x));
  if (check_simple && !emb.graph().allows_multi() && emb.graph().find_edge(x, y) >= 0)
    throw invalid_input("edge " + std::to_string(x) + "-" + std::to_string(y) +
                        " already exists");

  RotationSystem rs = emb.system();
  auto place = [&](Corner c, Dart fresh) {
    const FaceStep& step = f.walk[c.position];
    auto& rot = rs.rotation[emb.tail(step.dart)];
    auto it = std::find(rot.begin(), rot.end(), step.dart);
    // In walk direction the order is arrival, fresh, departure.
    if (step.orientation > 0) {
      rot.insert(it, fresh);
    } else {
      rot.insert(std::next(it), fresh);
    }
  };
  place(cx, Dart{id, 0});
  place(cy, Dart{id, 1});
  rs.graph = emb.graph().with_edge(Edge{id, x, y});
  int s = f.walk[cx.position].orientation * f.walk[cy.position].orientation;
  if (s < 0) rs.twisted.insert(id);
  if (helper) rs.helpers.insert(id);
  return Embedding(std::move(rs));
}

}  // namespace detail

struct EdgeInsertion {
  Embedding embedding;
  EdgeId edge;
};

/// Add a new edge (flagged as helper) splitting the face at the two corners.
inline EdgeInsertion add_edge_in_face(const Embedding& emb, Corner cx, Corner cy,
                                      bool helper = true) {
  EdgeId id = emb.graph().next_edge_id();
  return {detail::insert_edge(emb, cx, cy, id, helper, true), id};
}

/// Move an edge to new corners. Corners refer to faces of
/// `delete_edges(emb, {edge})`; corner `cu` must sit at the edge's u end.
inline Embedding reembed_edge(const Embedding& emb, EdgeId edge, Corner cu, Corner cv) {
  const Edge e = emb.graph().edge(edge);
  Embedding removed = delete_edges(emb, {edge});
  if (removed.corner_vertex(cu) != e.u || removed.corner_vertex(cv) != e.v)
    throw invalid_input("corners do not match the endpoints of edge " +
                        std::to_string(edge));
  if (cu.face != cv.face) throw invalid_input("corners are not co-facial");
  Embedding out =
      detail::insert_edge(removed, cu, cv, edge, emb.is_helper(edge), false);
  // Keep the original edge-list order so the graph value compares equal.
  RotationSystem rs = out.system();
  std::vector<Edge> ordered(emb.graph().edges().begin(), emb.graph().edges().end());
  rs.graph = Graph(emb.vertex_count(), std::move(ordered), emb.graph().allows_multi());
  return Embedding(std::move(rs));
}

/// Canonical comparison of two embeddings: same graph, rotations equal up to
/// cyclic shift, same signs and helper flags.
inline bool same_embedding(const Embedding& a, const Embedding& b) {
  if (a.vertex_count() != b.vertex_count()) return false;
  auto ea = a.graph().edges(), eb = b.graph().edges();
  if (ea.size() != eb.size()) return false;
  for (const auto& e : ea) {
    if (!b.graph().has_edge(e.id)) return false;
    const Edge& f = b.graph().edge(e.id);
    if (f.u != e.u || f.v != e.v) return false;
  }
  if (a.system().twisted != b.system().twisted) return false;
  if (a.system().helpers != b.system().helpers) return false;
  for (int v = 0; v < a.vertex_count(); ++v) {
    const auto& ra = a.rotation(v);
    const auto& rb = b.rotation(v);
    if (ra.size() != rb.size()) return false;
    if (ra.empty()) continue;
    auto it = std::find(rb.begin(), rb.end(), ra.front());
    if (it == rb.end()) return false;
    std::size_t off = static_cast<std::size_t>(it - rb.begin());
    for (std::size_t i = 0; i < ra.size(); ++i)
      if (ra[i] != rb[(off + i) % rb.size()]) return false;
  }
  return true;
}

/// Sorted multiset of face sizes; handy for comparing face structure.
inline std::vector<int> face_size_profile(const Embedding& emb) {
  std::vector<int> sizes;
  for (const auto& f : emb.faces()) sizes.push_back(f.size());
  std::sort(sizes.begin(), sizes.end());
  return sizes;
}

/// Embedding built from per-vertex neighbor orders of a simple graph.
/// Edge ids are assigned in order of first appearance (u < v).
inline Embedding embedding_from_neighbor_orders(
    const std::vector<std::vector<VertexId>>& order) {
  int n = static_cast<int>(order.size());
  std::map<std::pair<int, int>, EdgeId> ids;
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u)
    for (int v : order[u]) {
      auto key = std::minmax(u, v);
      if (!ids.count(key)) {
        EdgeId id = static_cast<EdgeId>(edges.size());
        ids[key] = id;
        edges.push_back({id, key.first, key.second});
      }
    }
  RotationSystem rs;
  rs.graph = Graph(n, edges);
  rs.rotation.resize(n);
  for (int u = 0; u < n; ++u)
    for (int v : order[u]) {
      EdgeId id = ids.at(std::minmax(u, v));
      rs.rotation[u].push_back(Dart{id, edges[id].u == u ? 0 : 1});
    }
  return Embedding(std::move(rs));
}

}  // namespace thickness

#endif  // THICKNESS_EMBEDDING_HPP
