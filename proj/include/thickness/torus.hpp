#ifndef THICKNESS_TORUS_HPP
#define THICKNESS_TORUS_HPP

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "thickness/decomposition.hpp"
#include "thickness/homology.hpp"

namespace thickness {

/// One homotopy class of essential edges relative to a spanning disk.
struct EssentialClass {
  Signature signature;        // canonical up to sign
  std::vector<EdgeId> edges;  // ascending
  // Attachment sequences along the boundary cycle, in boundary order.
  std::vector<VertexId> u_side;
  std::vector<VertexId> v_side;
  bool contiguous = true;  // each side occupies one cyclic run
  bool cylinder = false;   // distinct extremes on both sides

  std::set<VertexId> extremes() const {
    std::set<VertexId> out;
    for (const auto* s : {&u_side, &v_side})
      if (!s->empty()) {
        out.insert(s->front());
        out.insert(s->back());
      }
    return out;
  }
};

namespace detail {

struct EssentialEnd {
  int cls;
  int side;  // 0 = u, 1 = v
  EdgeId edge;
  VertexId vertex;
};

/// Essential darts met while walking once around the disk boundary.
inline std::vector<Dart> essential_darts_in_boundary_order(const SpanningDiskResult& res) {
  const Embedding& h = res.augmented;
  std::vector<Dart> out;
  const auto& w = res.disk.boundary;
  const int len = static_cast<int>(w.size());
  if (len == 0) {
    for (const Dart& d : h.rotation(res.disk.anchor))
      if (res.essential.count(d.edge)) out.push_back(d);
    return out;
  }
  for (int i = 0; i < len; ++i) {
    Dart arrival = w[(i + len - 1) % len].dart.opposite();
    for (Dart d = h.rotate(arrival, w[i].orientation); d != w[i].dart;
         d = h.rotate(d, w[i].orientation))
      if (res.essential.count(d.edge)) out.push_back(d);
  }
  return out;
}

}  // namespace detail

/// Group the essential edges of a spanning-disk result by homology class
/// (signature up to sign) and read off their attachment runs along the
/// boundary cycle. The u side of an edge is the end from which the closed
/// loop evaluates to the canonical signature.
inline std::vector<EssentialClass> classify_essential_edges(const SpanningDiskResult& res) {
  const Embedding& h = res.augmented;
  const Graph& g = h.graph();
  std::vector<EssentialClass> classes;
  if (res.essential.empty()) return classes;
  const HomologyTable table = homology_signatures(h);
  std::map<Signature, int> index;
  std::map<EdgeId, std::pair<int, int>> class_and_u_end;  // class, dart end on the u side
  for (EdgeId e : res.essential) {
    Signature s = loop_signature(table, g, res.disk.edges, e);
    if (is_zero(s)) throw failure("essential edge " + std::to_string(e) + " has zero signature");
    Signature c = canonical_up_to_sign(s);
    auto [it, fresh] = index.try_emplace(c, static_cast<int>(classes.size()));
    if (fresh) classes.push_back(EssentialClass{c, {}, {}, {}, true, false});
    classes[it->second].edges.push_back(e);
    class_and_u_end[e] = {it->second, s == c ? 0 : 1};
  }
  const auto& surf = h.surface();
  if (surf.orientable && surf.genus == 1 && classes.size() > 3)
    throw failure("torus embedding with " + std::to_string(classes.size()) +
                  " essential classes");

  std::vector<detail::EssentialEnd> seq;
  for (const Dart& d : detail::essential_darts_in_boundary_order(res)) {
    auto [cls, u_end] = class_and_u_end.at(d.edge);
    seq.push_back({cls, d.end == u_end ? 0 : 1, d.edge, h.tail(d)});
  }
  const int len = static_cast<int>(seq.size());
  for (int c = 0; c < static_cast<int>(classes.size()); ++c) {
    for (int side = 0; side < 2; ++side) {
      auto match = [&](int i) { return seq[i].cls == c && seq[i].side == side; };
      int runs = 0, start = -1;
      for (int i = 0; i < len; ++i)
        if (match(i) && !match((i + len - 1) % len)) {
          ++runs;
          if (start < 0) start = i;
        }
      auto& out = side == 0 ? classes[c].u_side : classes[c].v_side;
      if (runs != 1) {
        // Whole-sequence run (impossible for a proper class) or scattered.
        classes[c].contiguous = false;
        for (int i = 0; i < len; ++i)
          if (match(i)) out.push_back(seq[i].vertex);
        continue;
      }
      for (int i = start; match(i); i = (i + 1) % len) out.push_back(seq[i].vertex);
    }
    auto& k = classes[c];
    k.cylinder = k.contiguous && k.u_side.front() != k.u_side.back() &&
                 k.v_side.front() != k.v_side.back();
  }
  for (auto& k : classes) std::sort(k.edges.begin(), k.edges.end());
  std::sort(classes.begin(), classes.end(),
            [](const auto& a, const auto& b) { return a.edges.front() < b.edges.front(); });
  return classes;
}

namespace detail {

struct ReducedClass {
  std::set<EdgeId> kept;
  std::vector<EdgeId> pendants;  // deletion order
  bool path_like = false;
  bool disjoint_pair = false;  // two disjoint edges, joined by a virtual edge
};

/// Delete edges hanging at internal (non-extreme) vertices of degree one,
/// repeatedly, then check the shape of what is left.
inline ReducedClass reduce_class(const Graph& g, const EssentialClass& k) {
  ReducedClass r;
  r.kept.insert(k.edges.begin(), k.edges.end());
  const auto ends = k.extremes();
  std::map<VertexId, int> deg;
  for (EdgeId e : r.kept) {
    ++deg[g.edge(e).u];
    ++deg[g.edge(e).v];
  }
  for (bool changed = true; changed;) {
    changed = false;
    for (EdgeId e : r.kept) {
      const Edge& ed = g.edge(e);
      bool hang = false;
      for (VertexId y : {ed.u, ed.v})
        if (deg[y] == 1 && !ends.count(y)) hang = true;
      if (!hang) continue;
      --deg[ed.u];
      --deg[ed.v];
      r.kept.erase(e);
      r.pendants.push_back(e);
      changed = true;
      break;
    }
  }
  std::set<VertexId> verts;
  int max_deg = 0;
  bool loop = false;
  for (EdgeId e : r.kept) {
    verts.insert(g.edge(e).u);
    verts.insert(g.edge(e).v);
    loop = loop || g.edge(e).is_loop();
  }
  for (VertexId v : verts) max_deg = std::max(max_deg, deg[v]);
  const int ne = static_cast<int>(r.kept.size());
  const int nv = static_cast<int>(verts.size());
  if (loop) {
    r.path_like = ne == 1;
  } else if (ne == 2 && nv == 4) {
    r.path_like = r.disjoint_pair = true;
  } else if (ne == nv - 1 && max_deg <= 2) {
    std::vector<EdgeId> es(r.kept.begin(), r.kept.end());
    int comps = 0;
    Graph sub = g.edge_subgraph(es);
    auto label = sub.components(&comps);
    std::set<int> used;
    for (VertexId v : verts) used.insert(label[v]);
    r.path_like = used.size() == 1;
  }
  return r;
}

/// Reinsert one edge into the first layer (order 3, 1, 2) that stays
/// outerplanar.
inline bool reinsert(const Graph& g, std::vector<Layer>& layers, EdgeId e) {
  for (int li : {2, 0, 1}) {
    Layer& l = layers[li];
    l.edges.push_back(e);
    if (certified(g.edge_subgraph(l.edges), LayerClass::Outerplanar)) return true;
    l.edges.pop_back();
  }
  return false;
}

/// Attempt with class `partner` inside the planar part. Empty result means
/// this choice did not work out; the reason goes to `why`.
inline std::vector<Layer> torus_attempt(const Embedding& e, const SpanningDiskResult& res,
                                        const std::vector<EssentialClass>& classes,
                                        const std::vector<ReducedClass>& reduced, int partner,
                                        const BlockContext& ctx, std::string& why) {
  const Graph& g = e.graph();
  std::set<EdgeId> planar_part = disk_edges(e, res);
  planar_part.insert(reduced[partner].kept.begin(), reduced[partner].kept.end());
  Bipartition bp;
  try {
    bp = outerplanar_bipartition(g.edge_subgraph(sorted(planar_part)), ctx.deadline);
  } catch (const Error& ex) {
    if (ex.kind() == ErrorKind::Timeout) throw;
    why = ex.what();
    return {};
  }
  std::vector<Layer> layers{Layer{bp.first, LayerClass::Outerplanar, "disk+class-1"},
                            Layer{bp.second, LayerClass::Outerplanar, "disk+class-2"},
                            Layer{{}, LayerClass::Outerplanar, "torus-class"}};
  for (std::size_t c = 0; c < classes.size(); ++c)
    if (static_cast<int>(c) != partner)
      layers[2].edges.insert(layers[2].edges.end(), reduced[c].kept.begin(),
                             reduced[c].kept.end());
  if (!certified(g.edge_subgraph(layers[2].edges), LayerClass::Outerplanar)) {
    why = "remaining classes are not outerplanar with class " + std::to_string(partner + 1) +
          " as partner";
    return {};
  }
  // Later deletions go back first.
  for (std::size_t c = 0; c < reduced.size(); ++c)
    for (auto it = reduced[c].pendants.rbegin(); it != reduced[c].pendants.rend(); ++it)
      if (!reinsert(g, layers, *it)) {
        why = "pendant edge " + std::to_string(*it) + " fits no layer";
        return {};
      }
  return layers;
}

inline std::vector<Layer> torus_search_fallback(const Embedding& e, const BlockContext& ctx) {
  auto sk = skeleton_of(e.graph());
  RestartOptions opt;
  opt.deadline = ctx.deadline;
  auto r = search_partition_restarts(e.vertex_count(), sk.pairs, 3, LayerClass::Outerplanar, opt);
  if (r.exhausted) throw failure("toroidal block without three outerplanar layers");
  if (!r.assignment) throw timeout("torus fallback search: time limit reached");
  auto bp3 = std::vector<Layer>(3, Layer{{}, LayerClass::Outerplanar, "search"});
  for (std::size_t i = 0; i < sk.pairs.size(); ++i)
    for (EdgeId id : sk.bundle.at(sk.pairs[i])) bp3[(*r.assignment)[i]].edges.push_back(id);
  for (EdgeId id : sk.loops) bp3[0].edges.push_back(id);
  return bp3;
}

inline std::vector<Layer> torus_block(const Embedding& e, const BlockContext& ctx) {
  auto res = build_spanning_disk(e);
  record_helpers(res, ctx);
  auto classes = classify_essential_edges(res);
  const Graph& g = e.graph();
  std::vector<ReducedClass> reduced;
  std::string shape;
  for (std::size_t c = 0; c < classes.size(); ++c) {
    reduced.push_back(reduce_class(g, classes[c]));
    const auto& r = reduced.back();
    shape += " class " + std::to_string(c + 1) + ": " + std::to_string(classes[c].edges.size()) +
             " edges, " + std::to_string(r.pendants.size()) + " pendant, " +
             (classes[c].cylinder ? "cylinder" : "degenerate") +
             (r.disjoint_pair ? ", disjoint pair" : "") + (r.path_like ? "" : ", NOT path-like") +
             (classes[c].contiguous ? "" : ", scattered runs") + ";";
  }
  ctx.notes->push_back("essential classes:" + (shape.empty() ? std::string(" none") : shape));
  if (classes.empty()) {
    auto bp = outerplanar_bipartition(g.edge_subgraph(sorted(disk_edges(e, res))), ctx.deadline);
    return {Layer{bp.first, LayerClass::Outerplanar, "disk+class-1"},
            Layer{bp.second, LayerClass::Outerplanar, "disk+class-2"}};
  }
  std::vector<int> order;
  for (int pass = 0; pass < 2; ++pass)
    for (int c = 0; c < static_cast<int>(classes.size()); ++c)
      if (classes[c].cylinder == (pass == 0)) order.push_back(c);
  std::string why;
  for (int partner : order) {
    auto layers = torus_attempt(e, res, classes, reduced, partner, ctx, why);
    if (!layers.empty()) {
      ctx.notes->push_back("planar part uses class " + std::to_string(partner + 1));
      return layers;
    }
    ctx.notes->push_back("class " + std::to_string(partner + 1) + " as partner: " + why);
  }
  ctx.notes->push_back("fallback: three-layer outerplanar search");
  return torus_search_fallback(e, ctx);
}

}  // namespace detail

/// Three outerplanar layers for a graph embedded in the torus: the disk and
/// one class of essential edges form a planar part split in two, the other
/// classes form the third layer.
inline Decomposition torus_outerthickness(const Embedding& emb, const PipelineOptions& opt = {}) {
  const auto& s = emb.surface();
  if (!s.orientable || s.genus != 1) throw invalid_input("torus method needs a genus-1 orientable embedding");
  Decomposition dec;
  dec.goal = Goal::Outerthickness;
  dec.method = "torus";
  dec.bound_name = "torus-outer";
  dec.claimed_bound = 3;
  dec.layers = detail::per_block(emb, Goal::Outerthickness, detail::torus_block, dec.helpers,
                                 dec.notes, opt.deadline);
  for (const auto& n : dec.notes)
    if (n.rfind("fallback", 0) == 0) dec.method = "torus+search";
  return detail::finish(emb, std::move(dec));
}

}  // namespace thickness

#endif  // THICKNESS_TORUS_HPP
