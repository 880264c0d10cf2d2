#ifndef THICKNESS_DECOMPOSITION_HPP
#define THICKNESS_DECOMPOSITION_HPP

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "thickness/bipartition.hpp"
#include "thickness/bounds.hpp"
#include "thickness/complete_graphs.hpp"
#include "thickness/embedding.hpp"
#include "thickness/peel.hpp"
#include "thickness/planarity.hpp"
#include "thickness/spanning_disk.hpp"

namespace thickness {

struct Layer {
  std::vector<EdgeId> edges;  // original edge ids, ascending
  LayerClass cls = LayerClass::Planar;
  std::string tag;
};

struct Decomposition {
  Goal goal = Goal::Thickness;
  std::string method;
  std::vector<Layer> layers;
  std::vector<HelperRecord> helpers;
  int claimed_bound = 0;
  std::string bound_name;
  std::vector<std::string> notes;
  bool verified = false;

  int layer_count() const { return static_cast<int>(layers.size()); }
};

struct PipelineOptions {
  Deadline deadline;
};

/// A sub-embedding with compact vertex ids; edge ids are kept.
struct ExtractedEmbedding {
  Embedding embedding;
  std::vector<VertexId> to_parent;
};

/// Restriction of an embedding to an edge set, keeping only the vertices
/// those edges touch (renumbered in ascending order).
inline ExtractedEmbedding extract_embedding(const Embedding& emb, const std::set<EdgeId>& edges) {
  std::set<VertexId> touched;
  for (EdgeId id : edges) {
    const Edge& e = emb.graph().edge(id);
    touched.insert(e.u);
    touched.insert(e.v);
  }
  std::vector<VertexId> to_parent(touched.begin(), touched.end());
  std::map<VertexId, VertexId> local;
  for (std::size_t i = 0; i < to_parent.size(); ++i)
    local[to_parent[i]] = static_cast<VertexId>(i);
  std::vector<Edge> es;
  for (const auto& e : emb.graph().edges())
    if (edges.count(e.id)) es.push_back({e.id, local.at(e.u), local.at(e.v)});
  RotationSystem rs;
  rs.graph = Graph(static_cast<int>(to_parent.size()), es, emb.graph().allows_multi());
  rs.rotation.resize(to_parent.size());
  for (std::size_t i = 0; i < to_parent.size(); ++i)
    for (const Dart& d : emb.rotation(to_parent[i]))
      if (edges.count(d.edge)) rs.rotation[i].push_back(d);
  for (EdgeId id : emb.system().twisted)
    if (edges.count(id)) rs.twisted.insert(id);
  for (EdgeId id : emb.system().helpers)
    if (edges.count(id)) rs.helpers.insert(id);
  return {Embedding(std::move(rs)), std::move(to_parent)};
}

/// Edge sets of the blocks (maximal 2-connected pieces, bridges, loops),
/// ordered by smallest edge id.
inline std::vector<std::set<EdgeId>> biconnected_blocks(const Graph& g) {
  const int n = g.vertex_count();
  auto inc = g.incidence();
  std::vector<int> disc(n, -1), low(n, 0);
  std::vector<EdgeId> stack;
  std::vector<std::set<EdgeId>> blocks;
  int timer = 0;
  std::function<void(VertexId, EdgeId)> dfs = [&](VertexId u, EdgeId via) {
    disc[u] = low[u] = timer++;
    for (EdgeId id : inc[u]) {
      if (id == via) continue;
      const Edge& e = g.edge(id);
      if (e.is_loop()) {
        blocks.push_back({id});
        continue;
      }
      VertexId w = e.other(u);
      if (disc[w] < 0) {
        stack.push_back(id);
        dfs(w, id);
        low[u] = std::min(low[u], low[w]);
        if (low[w] >= disc[u]) {
          std::set<EdgeId> b;
          while (true) {
            EdgeId top = stack.back();
            stack.pop_back();
            b.insert(top);
            if (top == id) break;
          }
          blocks.push_back(std::move(b));
        }
      } else if (disc[w] < disc[u]) {
        stack.push_back(id);
        low[u] = std::min(low[u], disc[w]);
      }
    }
  };
  for (VertexId v = 0; v < n; ++v)
    if (disc[v] < 0) dfs(v, -1);
  std::sort(blocks.begin(), blocks.end(),
            [](const auto& a, const auto& b) { return *a.begin() < *b.begin(); });
  return blocks;
}

namespace detail {

struct BlockContext {
  const std::vector<VertexId>* to_root = nullptr;
  std::vector<HelperRecord>* helpers = nullptr;
  std::vector<std::string>* notes = nullptr;
  Deadline deadline;
};

inline void record_helpers(const SpanningDiskResult& res, const BlockContext& ctx) {
  for (auto h : res.helpers) {
    h.u = (*ctx.to_root)[h.u];
    h.v = (*ctx.to_root)[h.v];
    ctx.helpers->push_back(h);
  }
}

inline std::vector<EdgeId> sorted(std::set<EdgeId> s) { return {s.begin(), s.end()}; }

inline void check_layer(const Graph& g, const Layer& layer) {
  if (!certified(g.edge_subgraph(layer.edges), layer.cls))
    throw failure("layer '" + layer.tag + "' fails " + to_string(layer.cls) + " certification");
}

/// Merge per-block layer lists position by position.
inline std::vector<Layer> merge_by_index(const std::vector<std::vector<Layer>>& parts) {
  std::vector<Layer> out;
  for (const auto& part : parts)
    for (std::size_t i = 0; i < part.size(); ++i) {
      if (out.size() <= i) out.push_back(Layer{{}, part[i].cls, part[i].tag});
      out[i].edges.insert(out[i].edges.end(), part[i].edges.begin(), part[i].edges.end());
      if (out[i].tag.find(part[i].tag) == std::string::npos) out[i].tag += "|" + part[i].tag;
    }
  for (auto& l : out) std::sort(l.edges.begin(), l.edges.end());
  return out;
}

/// Original (non-helper) edges of the disk.
inline std::set<EdgeId> disk_edges(const Embedding& original, const SpanningDiskResult& res) {
  std::set<EdgeId> out;
  for (EdgeId id : res.disk.edges)
    if (original.graph().has_edge(id)) out.insert(id);
  return out;
}

/// Split a (multi)graph edge set into a simple skeleton plus followers:
/// parallel copies follow their representative, loops are returned apart.
struct SkeletonSplit {
  std::vector<EdgeId> reps;
  std::map<EdgeId, std::vector<EdgeId>> copies;
  std::vector<EdgeId> loops;
};

inline SkeletonSplit split_skeleton(const Graph& g, const std::set<EdgeId>& edges) {
  SkeletonSplit s;
  std::map<std::pair<VertexId, VertexId>, EdgeId> rep;
  for (EdgeId id : edges) {
    const Edge& e = g.edge(id);
    if (e.is_loop()) {
      s.loops.push_back(id);
      continue;
    }
    auto key = std::minmax(e.u, e.v);
    auto it = rep.find(key);
    if (it == rep.end()) {
      rep[key] = id;
      s.reps.push_back(id);
    } else {
      s.copies[it->second].push_back(id);
    }
  }
  return s;
}

/// Core edges into at most k layers: restriction of the stored K_n'
/// pattern when it is small enough, otherwise randomized search.
inline std::vector<std::vector<EdgeId>> decompose_core(const Graph& g, const PeelRecord& rec,
                                                       int k, LayerClass cls,
                                                       const BlockContext& ctx) {
  std::vector<std::vector<EdgeId>> out(k);
  const int nc = static_cast<int>(rec.core_vertices.size());
  if (rec.core_edges.empty()) return out;
  std::map<VertexId, int> idx;
  for (int i = 0; i < nc; ++i) idx[rec.core_vertices[i]] = i;
  std::vector<std::pair<int, int>> pairs;
  for (EdgeId id : rec.core_edges) {
    const Edge& e = g.edge(id);
    pairs.push_back(std::minmax(idx.at(e.u), idx.at(e.v)));
  }
  if (complete_graph_bound(nc, cls) <= k) {
    if (auto p = load_pattern(nc, cls)) {
      std::map<std::pair<int, int>, int> layer_of;
      for (std::size_t l = 0; l < p->layers.size(); ++l)
        for (auto pr : p->layers[l]) layer_of[std::minmax(pr.first, pr.second)] = static_cast<int>(l);
      for (std::size_t i = 0; i < pairs.size(); ++i)
        out[layer_of.at(pairs[i])].push_back(rec.core_edges[i]);
      ctx.notes->push_back("core on " + std::to_string(nc) + " vertices: stored K" +
                           std::to_string(nc) + " pattern");
      return out;
    }
  }
  RestartOptions opt;
  opt.deadline = ctx.deadline;
  auto r = search_partition_restarts(nc, pairs, k, cls, opt);
  if (r.exhausted)
    throw failure("core on " + std::to_string(nc) + " vertices needs more than " +
                  std::to_string(k) + " " + to_string(cls) + " layers");
  if (!r.assignment) throw timeout("core decomposition: time limit reached");
  for (std::size_t i = 0; i < pairs.size(); ++i) out[(*r.assignment)[i]].push_back(rec.core_edges[i]);
  ctx.notes->push_back("core on " + std::to_string(nc) + " vertices: search, " +
                       std::to_string(r.nodes) + " nodes");
  return out;
}

using BlockPipeline =
    std::function<std::vector<Layer>(const Embedding&, const BlockContext&)>;

/// Run a pipeline on every block with positive genus; sphere blocks get one
/// planar layer (thickness) or an outerplanar bipartition (outerthickness).
inline std::vector<Layer> per_block(const Embedding& emb, Goal goal, const BlockPipeline& run,
                                    std::vector<HelperRecord>& helpers,
                                    std::vector<std::string>& notes, Deadline deadline) {
  std::vector<std::vector<Layer>> parts;
  for (const auto& block : biconnected_blocks(emb.graph())) {
    auto ex = extract_embedding(emb, block);
    BlockContext ctx{&ex.to_parent, &helpers, &notes, deadline};
    const auto& s = ex.embedding.surface();
    if (s.orientable && s.genus == 0) {
      if (goal == Goal::Thickness) {
        parts.push_back({Layer{sorted(block), LayerClass::Planar, "planar-block"}});
      } else {
        auto bp = outerplanar_bipartition(ex.embedding.graph(), deadline);
        parts.push_back({Layer{bp.first, LayerClass::Outerplanar, "planar-block-1"},
                         Layer{bp.second, LayerClass::Outerplanar, "planar-block-2"}});
      }
      continue;
    }
    parts.push_back(run(ex.embedding, ctx));
  }
  // Block-local helper ids can coincide with edges of other blocks.
  EdgeId next = emb.graph().next_edge_id();
  for (auto& h : helpers) h.id = next++;
  return merge_by_index(parts);
}

inline Decomposition finish(const Embedding& emb, Decomposition dec) {
  std::vector<Layer> kept;
  int dropped = 0;
  for (auto& l : dec.layers) {
    if (l.edges.empty()) {
      ++dropped;
      continue;
    }
    std::sort(l.edges.begin(), l.edges.end());
    check_layer(emb.graph(), l);
    kept.push_back(std::move(l));
  }
  if (dropped) dec.notes.push_back(std::to_string(dropped) + " empty layer(s) dropped");
  dec.layers = std::move(kept);
  std::set<EdgeId> covered;
  std::size_t total = 0;
  for (const auto& l : dec.layers) {
    covered.insert(l.edges.begin(), l.edges.end());
    total += l.edges.size();
  }
  if (total != covered.size() || static_cast<int>(covered.size()) != emb.edge_count())
    throw failure("layers do not partition the edge set");
  for (EdgeId id : covered)
    if (!emb.graph().has_edge(id)) throw failure("layer holds unknown edge " + std::to_string(id));
  return dec;
}

}  // namespace detail

// Genus peel: a disk plus the essential star at one vertex is planar, and
// removing it lowers the genus of what is left.
namespace detail {

inline std::vector<Layer> genus_peel_block(const Embedding& e, const BlockContext& ctx) {
  if (e.edge_count() == 0) return {};
  if (e.surface().orientable && e.surface().genus == 0)
    return {Layer{e.graph().edge_ids(), LayerClass::Planar, "residual"}};
  if (ctx.deadline.expired()) throw timeout("genus peel: time limit reached");
  auto res = build_spanning_disk(e);
  record_helpers(res, ctx);
  const Embedding& h = res.augmented;
  VertexId v = -1;
  for (VertexId x = 0; x < h.vertex_count() && v < 0; ++x)
    for (const Dart& d : h.rotation(x))
      if (res.essential.count(d.edge)) {
        v = x;
        break;
      }
  if (v < 0) return {Layer{e.graph().edge_ids(), LayerClass::Planar, "disk"}};
  EdgeId first = essential_star(res, v).front();
  VertexId u = h.graph().edge(first).other(v);
  std::set<EdgeId> layer = disk_edges(e, res);
  for (const Dart& d : h.rotation(u))
    if (res.essential.count(d.edge)) layer.insert(d.edge);
  std::vector<Layer> out{Layer{sorted(layer), LayerClass::Planar, "disk+star"}};
  check_layer(e.graph(), out.front());

  std::set<EdgeId> rest;
  for (const auto& ed : e.graph().edges())
    if (!layer.count(ed.id)) rest.insert(ed.id);
  if (rest.empty()) return out;
  Embedding remaining = induced_embedding(h, rest);
  const int before = h.surface().euler_genus();
  const int after = remaining.surface().euler_genus();
  if (after >= before)
    throw failure("genus peel: genus did not drop (" + std::to_string(before / 2) + " -> " +
                  std::to_string(after / 2) + ")");
  ctx.notes->push_back("genus peel at vertex " + std::to_string((*ctx.to_root)[u]) + ": genus " +
                       std::to_string(before / 2) + " -> " + std::to_string(after / 2));
  int comps = 0;
  auto label = remaining.graph().components(&comps);
  std::vector<std::set<EdgeId>> by_comp(comps);
  for (const auto& ed : remaining.graph().edges()) by_comp[label[ed.u]].insert(ed.id);
  std::vector<std::vector<Layer>> parts;
  for (const auto& c : by_comp) {
    if (c.empty()) continue;
    auto ex = extract_embedding(remaining, c);
    std::vector<VertexId> to_root(ex.to_parent.size());
    for (std::size_t i = 0; i < to_root.size(); ++i) to_root[i] = (*ctx.to_root)[ex.to_parent[i]];
    BlockContext sub{&to_root, ctx.helpers, ctx.notes, ctx.deadline};
    parts.push_back(genus_peel_block(ex.embedding, sub));
  }
  for (auto& l : merge_by_index(parts)) out.push_back(std::move(l));
  return out;
}

}  // namespace detail

/// Thickness of an orientable embedding in at most genus + 1 planar layers.
inline Decomposition thickness_genus_peel(const Embedding& emb, const PipelineOptions& opt = {}) {
  if (!emb.surface().orientable)
    throw invalid_input("genus peel needs an orientable embedding");
  Decomposition dec;
  dec.goal = Goal::Thickness;
  dec.method = "genus-peel";
  dec.bound_name = "genus-plus-one";
  dec.claimed_bound = emb.surface().genus + 1;
  dec.layers = detail::per_block(emb, Goal::Thickness, detail::genus_peel_block, dec.helpers,
                                 dec.notes, opt.deadline);
  return detail::finish(emb, std::move(dec));
}

namespace detail {

/// Disk edges E0 plus essential edges peeled at threshold d: the core goes
/// into at most d layers, forest i joins core layer i.
inline std::vector<Layer> degeneracy_block(const Embedding& e, Goal goal, const BlockContext& ctx) {
  const int d = degeneracy_threshold(e.surface(), goal);
  const LayerClass cls = goal == Goal::Thickness ? LayerClass::Planar : LayerClass::Outerplanar;
  auto res = build_spanning_disk(e);
  record_helpers(res, ctx);
  std::set<EdgeId> e0 = disk_edges(e, res);
  const Graph& g = e.graph();
  auto split = split_skeleton(g, res.essential);
  Graph skeleton = g.edge_subgraph(split.reps);
  PeelRecord rec = degeneracy_peel(skeleton, d);
  auto forests = forest_partition(skeleton, rec);
  auto core = decompose_core(skeleton, rec, d, cls, ctx);

  std::vector<Layer> out;
  if (goal == Goal::Thickness) {
    std::vector<EdgeId> first = sorted(e0);
    first.insert(first.end(), split.loops.begin(), split.loops.end());
    out.push_back(Layer{first, LayerClass::Planar, "disk"});
  } else {
    auto bp = outerplanar_bipartition(g.edge_subgraph(sorted(e0)), ctx.deadline);
    bp.first.insert(bp.first.end(), split.loops.begin(), split.loops.end());
    out.push_back(Layer{bp.first, cls, "disk-outer-1"});
    out.push_back(Layer{bp.second, cls, "disk-outer-2"});
  }
  for (int i = 0; i < d; ++i) {
    Layer l{core[i], cls, "core+forest-" + std::to_string(i + 1)};
    l.edges.insert(l.edges.end(), forests[i].begin(), forests[i].end());
    std::vector<EdgeId> extra;
    for (EdgeId id : l.edges)
      if (auto it = split.copies.find(id); it != split.copies.end())
        extra.insert(extra.end(), it->second.begin(), it->second.end());
    l.edges.insert(l.edges.end(), extra.begin(), extra.end());
    std::sort(l.edges.begin(), l.edges.end());
    out.push_back(std::move(l));
  }
  return out;
}

inline Decomposition degeneracy_pipeline(const Embedding& emb, Goal goal,
                                         const PipelineOptions& opt) {
  const auto& s = emb.surface();
  if (s.orientable && s.genus == 0)
    throw invalid_input("degeneracy method needs genus at least 1");
  Decomposition dec;
  dec.goal = goal;
  dec.method = "degeneracy";
  auto rep = bounds_report(s);
  std::string name = std::string(s.orientable ? "orientable" : "nonorientable") +
                     (goal == Goal::Thickness ? "-degeneracy" : "-outer-degeneracy");
  dec.bound_name = name;
  dec.claimed_bound = rep.find(name)->effective;
  dec.layers = per_block(
      emb, goal,
      [goal](const Embedding& e, const BlockContext& ctx) { return degeneracy_block(e, goal, ctx); },
      dec.helpers, dec.notes, opt.deadline);
  return finish(emb, std::move(dec));
}

}  // namespace detail

inline Decomposition thickness_degeneracy(const Embedding& emb, const PipelineOptions& opt = {}) {
  return detail::degeneracy_pipeline(emb, Goal::Thickness, opt);
}

inline Decomposition outerthickness_degeneracy(const Embedding& emb,
                                               const PipelineOptions& opt = {}) {
  return detail::degeneracy_pipeline(emb, Goal::Outerthickness, opt);
}

/// Sphere embeddings: one planar layer, or an outerplanar bipartition.
inline Decomposition planar_decomposition(const Embedding& emb, Goal goal,
                                          const PipelineOptions& opt = {}) {
  const auto& s = emb.surface();
  if (!(s.orientable && s.genus == 0)) throw invalid_input("planar method needs a sphere embedding");
  Decomposition dec;
  dec.goal = goal;
  dec.method = "planar";
  dec.bound_name = goal == Goal::Thickness ? "planar" : "planar-outer";
  dec.claimed_bound = goal == Goal::Thickness ? 1 : 2;
  if (goal == Goal::Thickness) {
    dec.layers.push_back(Layer{emb.graph().edge_ids(), LayerClass::Planar, "planar"});
  } else {
    auto bp = outerplanar_bipartition(emb.graph(), opt.deadline);
    dec.layers.push_back(Layer{bp.first, LayerClass::Outerplanar, "planar-1"});
    dec.layers.push_back(Layer{bp.second, LayerClass::Outerplanar, "planar-2"});
  }
  return detail::finish(emb, std::move(dec));
}

}  // namespace thickness

#endif  // THICKNESS_DECOMPOSITION_HPP
