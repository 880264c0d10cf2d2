#ifndef THICKNESS_SPANNING_DISK_HPP
#define THICKNESS_SPANNING_DISK_HPP

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <tuple>
#include <vector>

#include "thickness/embedding.hpp"
#include "thickness/homology.hpp"

namespace thickness {

/// A contractible union of closed faces (plus tree edges) that contains every
/// vertex. Its regular neighborhood is a disk bounded by `boundary`; when the
/// boundary visits no vertex twice the region itself is a disk.
struct DiskRegion {
  std::set<std::int64_t> face_keys;  // Face::key of member faces
  std::vector<int> faces;            // member face ids in the embedding
  std::set<EdgeId> edges;            // edges lying in the region
  std::vector<FaceStep> boundary;    // closed walk; empty for a bare vertex
  std::vector<VertexId> vertices;    // contained vertices, ascending
  VertexId anchor = 0;               // the vertex when the boundary is empty

  std::vector<VertexId> boundary_vertices(const Embedding& emb) const {
    if (boundary.empty()) return {anchor};
    std::vector<VertexId> out;
    for (const auto& s : boundary) out.push_back(emb.tail(s.dart));
    return out;
  }

  /// Vertices visited more than once by the boundary walk, ascending.
  std::vector<VertexId> repeated_vertices(const Embedding& emb) const {
    std::map<VertexId, int> count;
    for (VertexId v : boundary_vertices(emb)) ++count[v];
    std::vector<VertexId> out;
    for (auto [v, c] : count)
      if (c > 1) out.push_back(v);
    return out;
  }

  int repeated_incidences(const Embedding& emb) const {
    std::map<VertexId, int> count;
    for (VertexId v : boundary_vertices(emb)) ++count[v];
    int extra = 0;
    for (auto [v, c] : count) extra += c - 1;
    return extra;
  }
};

struct HelperRecord {
  EdgeId id;
  VertexId u;
  VertexId v;
  std::string reason;
};

struct SpanningDiskResult {
  Embedding augmented;
  DiskRegion disk;
  std::vector<HelperRecord> helpers;
  std::vector<EdgeId> reembedded;
  std::set<EdgeId> essential;
  VertexId root = 0;  // root of the seeding tree
};

namespace detail {

inline DiskRegion seed_region(const Embedding& emb, VertexId root = 0) {
  DiskRegion r;
  const Graph& g = emb.graph();
  auto inc = g.incidence();
  std::vector<char> seen(g.vertex_count(), 0);
  std::vector<int> queue{root};
  seen[root] = 1;
  for (std::size_t qi = 0; qi < queue.size(); ++qi) {
    int x = queue[qi];
    for (EdgeId id : inc[x]) {
      int y = g.edge(id).other(x);
      if (seen[y]) continue;
      seen[y] = 1;
      r.edges.insert(id);
      queue.push_back(y);
    }
  }
  return r;
}

inline std::set<EdgeId> face_edges(const Face& f) {
  std::set<EdgeId> out;
  for (const auto& s : f.walk) out.insert(s.dart.edge);
  return out;
}

// Absorb faces that bring exactly one new edge, lowest face id first, as
// long as at least one face stays outside. Keeps the region contractible.
inline void grow(const Embedding& emb, DiskRegion& r) {
  bool changed = true;
  while (changed) {
    changed = false;
    if (static_cast<int>(r.face_keys.size()) + 1 >= emb.face_count()) break;
    for (const auto& f : emb.faces()) {
      if (r.face_keys.count(f.key)) continue;
      auto es = face_edges(f);
      int fresh = 0;
      for (EdgeId e : es) fresh += r.edges.count(e) ? 0 : 1;
      if (fresh != 1) continue;
      r.face_keys.insert(f.key);
      r.edges.insert(es.begin(), es.end());
      changed = true;
      break;
    }
  }
}

// Recompute face ids, boundary walk and vertex set from keys and edges.
inline void refresh(const Embedding& emb, DiskRegion& r) {
  r.faces.clear();
  for (const auto& f : emb.faces())
    if (r.face_keys.count(f.key)) r.faces.push_back(f.id);
  r.boundary.clear();
  std::set<VertexId> verts;
  for (EdgeId e : r.edges) {
    verts.insert(emb.graph().edge(e).u);
    verts.insert(emb.graph().edge(e).v);
  }
  if (verts.empty()) verts.insert(0);
  r.vertices.assign(verts.begin(), verts.end());
  r.anchor = r.vertices.front();
  if (r.edges.empty()) return;
  Embedding sub = induced_embedding(emb, r.edges);
  std::vector<const Face*> outer;
  for (const auto& f : sub.faces())
    if (!r.face_keys.count(f.key)) outer.push_back(&f);
  if (outer.size() != 1)
    throw failure("region is not contractible: " + std::to_string(outer.size()) +
                  " boundary walks");
  r.boundary = outer.front()->walk;
}

// Corners at x and at y of the face through the consecutive boundary steps
// prev (x to v) and cur (v to y), provided that face turns at v exactly as
// the boundary does.
struct CornerPair {
  Corner at_x;
  Corner at_y;
};

inline std::optional<CornerPair> corner_across(const Embedding& emb, FaceStep prev,
                                               FaceStep cur) {
  auto loc = emb.find_state(cur.dart, cur.orientation);
  const Face& f = emb.faces()[loc.face];
  const int len = f.size();
  if (len < 3) return std::nullopt;
  if (!loc.reversed) {
    if (f.walk[(loc.index + len - 1) % len] != prev) return std::nullopt;
    return CornerPair{{loc.face, (loc.index + len - 1) % len}, {loc.face, (loc.index + 1) % len}};
  }
  // Reverse direction: the face runs y -> v -> x.
  const FaceStep back{prev.dart.opposite(), -prev.orientation * emb.sign(prev.dart.edge)};
  if (f.walk[(loc.index + 1) % len] != back) return std::nullopt;
  return CornerPair{{loc.face, (loc.index + 2) % len}, {loc.face, loc.index}};
}

}  // namespace detail

/// Maximal contractible region grown from a BFS spanning tree (rooted at
/// vertex 0) by absorbing faces one at a time.
inline DiskRegion grow_contractible_region(const Embedding& emb) {
  if (!emb.graph().connected())
    throw invalid_input("spanning region needs a connected graph");
  DiskRegion r = detail::seed_region(emb);
  detail::grow(emb, r);
  detail::refresh(emb, r);
  return r;
}

struct DiskOptions {
  /// Extra safety cap on elimination rounds (0 = derived from graph size).
  int max_rounds = 0;
  /// Root of the BFS tree seeding the region; -1 tries roots 0, 1, ... in
  /// turn until the construction succeeds.
  VertexId root = -1;
};

namespace detail {

inline SpanningDiskResult build_from_root(const Embedding& input, const DiskOptions& opt,
                                          VertexId root) {
  Embedding h = input;
  DiskRegion r = detail::seed_region(h, root);
  detail::grow(h, r);
  detail::refresh(h, r);
  std::vector<HelperRecord> helpers;
  std::vector<EdgeId> reembedded;

  auto essential_count = [&] { return h.edge_count() - static_cast<int>(r.edges.size()); };
  std::pair<int, int> last{essential_count(), r.repeated_incidences(h)};
  const int cap = opt.max_rounds > 0 ? opt.max_rounds
                                     : 4 * (h.edge_count() + h.vertex_count()) + 16;
  for (int round = 0;; ++round) {
    auto repeated = r.repeated_vertices(h);
    if (repeated.empty()) break;
    if (round >= cap)
      throw failure("spanning disk: round limit reached at vertex " +
                    std::to_string(repeated.front()));
    bool acted = false;
    const auto& w = r.boundary;
    const int len = static_cast<int>(w.size());
    for (VertexId v : repeated) {
      for (int i = 0; i < len && !acted; ++i) {
        const FaceStep cur = w[i];
        const FaceStep prev = w[(i + len - 1) % len];
        if (h.tail(cur.dart) != v) continue;
        VertexId x = h.tail(prev.dart), y = h.head(cur.dart);
        if (x == v || y == v || x == y) continue;
        // Skip corners holding further darts of the full rotation.
        Dart arrival = prev.dart.opposite();
        if (h.rotate(arrival, cur.orientation) != cur.dart) continue;
        auto corner = detail::corner_across(h, prev, cur);
        if (!corner) continue;
        EdgeId existing = -1;
        bool blocked = false;
        for (const auto& e : h.graph().edges()) {
          if (!((e.u == x && e.v == y) || (e.u == y && e.v == x))) continue;
          if (r.edges.count(e.id)) blocked = true;
          else if (existing < 0 || e.id < existing) existing = e.id;
        }
        if (blocked) continue;
        if (existing < 0) {
          auto ins = add_edge_in_face(h, corner->at_x, corner->at_y);
          h = std::move(ins.embedding);
          r.edges.insert(ins.edge);
          helpers.push_back({ins.edge, x, y, "cut vertex " + std::to_string(v)});
        } else {
          Embedding removed = delete_edges(h, {existing});
          auto moved = detail::corner_across(removed, prev, cur);
          if (!moved) continue;
          const Edge& e = h.graph().edge(existing);
          h = e.u == x ? reembed_edge(h, existing, moved->at_x, moved->at_y)
                       : reembed_edge(h, existing, moved->at_y, moved->at_x);
          r.edges.insert(existing);
          reembedded.push_back(existing);
        }
        r.face_keys.insert(h.faces()[h.find_state(cur.dart, cur.orientation).face].key);
        acted = true;
      }
      if (acted) break;
    }
    if (!acted)
      throw failure("spanning disk: no admissible corner at repeated vertex " +
                    std::to_string(repeated.front()));
    detail::grow(h, r);
    detail::refresh(h, r);
    std::pair<int, int> now{essential_count(), r.repeated_incidences(h)};
    if (!(now < last))
      throw failure("spanning disk: no progress at vertex " +
                    std::to_string(repeated.front()));
    last = now;
  }

  SpanningDiskResult res{h, r, helpers, reembedded, {}, root};
  for (const auto& e : h.graph().edges())
    if (!r.edges.count(e.id)) res.essential.insert(e.id);
  return res;
}

}  // namespace detail

/// Eliminate repeated boundary vertices of the maximal contractible region
/// by adding an edge xy across a corner x-v-y, or re-embedding an existing
/// essential xy along x-v-y, until the region is a spanning disk.
///
/// A corner whose outside holds further edges at v cannot be bridged; when
/// no usable corner is left the construction restarts from the next tree
/// root, and fails with the stuck vertex once every root is exhausted.
inline SpanningDiskResult build_spanning_disk(const Embedding& input,
                                              const DiskOptions& opt = {}) {
  if (input.vertex_count() == 0 || !input.graph().connected())
    throw invalid_input("spanning disk needs a connected graph");
  if (opt.root >= input.vertex_count())
    throw invalid_input("tree root out of range");
  if (opt.root >= 0) return detail::build_from_root(input, opt, opt.root);
  std::string first_error;
  for (VertexId root = 0; root < input.vertex_count(); ++root) {
    try {
      return detail::build_from_root(input, opt, root);
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::Failure) throw;
      if (first_error.empty()) first_error = e.what();
    }
  }
  throw failure(first_error + " (every tree root tried)");
}

/// Essential edges at v, in rotation order starting right after the
/// boundary edge of the disk at v.
inline std::vector<EdgeId> essential_star(const SpanningDiskResult& res, VertexId v) {
  const Embedding& h = res.augmented;
  std::vector<EdgeId> out;
  std::set<EdgeId> seen;
  auto take = [&](Dart d) {
    if (res.essential.count(d.edge) && seen.insert(d.edge).second) out.push_back(d.edge);
  };
  const auto& w = res.disk.boundary;
  const int len = static_cast<int>(w.size());
  for (int i = 0; i < len; ++i) {
    if (h.tail(w[i].dart) != v) continue;
    Dart arrival = w[(i + len - 1) % len].dart.opposite();
    for (Dart d = h.rotate(arrival, w[i].orientation); d != w[i].dart;
         d = h.rotate(d, w[i].orientation))
      take(d);
  }
  // Bare-vertex disk, or essentials not met along the boundary.
  for (const Dart& d : h.rotation(v)) take(d);
  if (out.empty())
    throw invalid_input("vertex " + std::to_string(v) + " has no essential edges");
  return out;
}

/// Exact contractibility of the closed curve formed by an edge outside a
/// spanning disk and a path through the disk. Collapsing the disk leaves a
/// one-vertex embedding; the loop is contractible iff it separates the
/// outside faces and one side, together with the loop, forms a disk.
inline bool loop_contractible(const Embedding& h, const DiskRegion& disk,
                              const std::set<EdgeId>& outside, EdgeId loop) {
  std::vector<int> out_faces;
  std::map<int, int> idx;
  for (const auto& f : h.faces())
    if (!disk.face_keys.count(f.key)) {
      idx[f.id] = static_cast<int>(out_faces.size());
      out_faces.push_back(f.id);
    }
  const int nf = static_cast<int>(out_faces.size());
  std::vector<int> parent(nf);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::map<EdgeId, std::vector<int>> sides;
  for (int fid : out_faces)
    for (const auto& s : h.faces()[fid].walk)
      if (outside.count(s.dart.edge)) sides[s.dart.edge].push_back(idx[fid]);
  for (const auto& [e, fs] : sides) {
    if (e == loop) continue;
    for (std::size_t i = 1; i < fs.size(); ++i) parent[find(fs[i])] = find(fs[0]);
  }
  const auto& ls = sides.at(loop);
  if (ls.size() != 2) return false;
  int a = find(ls[0]), b = find(ls[1]);
  if (a == b) return false;
  for (int side : {a, b}) {
    int faces = 0, edges = 0;
    for (int i = 0; i < nf; ++i) faces += find(i) == side ? 1 : 0;
    for (const auto& [e, fs] : sides)
      if (e != loop && find(fs[0]) == side) ++edges;
    if (faces - edges == 1) return true;
  }
  return false;
}

/// Independent re-check of a spanning disk result.
inline bool verify_disk(const SpanningDiskResult& res, std::string* why = nullptr) {
  auto fail = [&](const std::string& m) {
    if (why) *why = m;
    return false;
  };
  const Embedding& h = res.augmented;
  const Graph& g = h.graph();
  if (!g.connected()) return fail("graph disconnected");

  std::set<EdgeId> edges;
  std::set<std::int64_t> keys;
  for (int fid : res.disk.faces) {
    if (fid < 0 || fid >= h.face_count()) return fail("unknown face id");
    const Face& f = h.faces()[fid];
    keys.insert(f.key);
    for (const auto& s : f.walk) edges.insert(s.dart.edge);
  }
  if (keys != res.disk.face_keys) return fail("face ids and keys disagree");
  for (const auto& s : res.disk.boundary) {
    if (!g.has_edge(s.dart.edge)) return fail("boundary uses unknown edge");
    edges.insert(s.dart.edge);
  }
  if (static_cast<int>(keys.size()) >= h.face_count()) return fail("region covers the surface");

  std::set<VertexId> verts;
  for (EdgeId e : edges) {
    verts.insert(g.edge(e).u);
    verts.insert(g.edge(e).v);
  }
  if (edges.empty()) verts.insert(res.disk.anchor);
  if (static_cast<int>(verts.size()) != g.vertex_count()) return fail("region not spanning");
  const int chi = static_cast<int>(verts.size()) - static_cast<int>(edges.size()) +
                  static_cast<int>(keys.size());
  if (chi != 1) return fail("region Euler characteristic " + std::to_string(chi));

  if (!edges.empty()) {
    Embedding sub = induced_embedding(h, edges);
    std::vector<const Face*> outer;
    for (const auto& f : sub.faces())
      if (!keys.count(f.key)) outer.push_back(&f);
    if (outer.size() != 1) return fail("boundary splits into several walks");
    std::set<FaceStep> a(outer[0]->walk.begin(), outer[0]->walk.end());
    std::set<FaceStep> b(res.disk.boundary.begin(), res.disk.boundary.end());
    if (a != b) return fail("recorded boundary differs from traced boundary");
  }
  std::set<VertexId> on;
  for (const auto& s : res.disk.boundary)
    if (!on.insert(h.tail(s.dart)).second) return fail("boundary is not a simple cycle");

  std::set<EdgeId> outside;
  for (const auto& e : g.edges())
    if (!edges.count(e.id)) outside.insert(e.id);
  if (outside != res.essential) return fail("essential set mismatch");
  for (const auto& hr : res.helpers)
    if (outside.count(hr.id)) return fail("helper edge outside the disk");
  if (outside.empty()) return true;
  const HomologyTable table = homology_signatures(h);
  for (EdgeId e : outside) {
    if (!is_zero(loop_signature(table, g, edges, e))) continue;
    if (loop_contractible(h, res.disk, outside, e))
      return fail("edge " + std::to_string(e) + " closes a contractible loop");
  }
  return true;
}

}  // namespace thickness

#endif  // THICKNESS_SPANNING_DISK_HPP
