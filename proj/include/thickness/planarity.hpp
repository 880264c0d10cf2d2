#ifndef THICKNESS_PLANARITY_HPP
#define THICKNESS_PLANARITY_HPP

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>
#include <boost/graph/graph_traits.hpp>

#include "thickness/embedding.hpp"

namespace thickness {

enum class LayerClass { Planar, Outerplanar };

inline std::string to_string(LayerClass c) {
  return c == LayerClass::Planar ? "planar" : "outerplanar";
}

inline LayerClass layer_class_from_string(const std::string& s) {
  if (s == "planar") return LayerClass::Planar;
  if (s == "outerplanar") return LayerClass::Outerplanar;
  throw invalid_input("unknown layer class '" + s + "'");
}

/// Verdict of a planarity or outerplanarity test. A positive verdict carries
/// a rotation system that replays to a sphere embedding (with every vertex of
/// each component on one face, for the outerplanar class).
struct LayerCertificate {
  LayerClass cls = LayerClass::Planar;
  bool verdict = false;
  std::optional<RotationSystem> witness;
  std::string note;
};

namespace detail {

using BoostGraph =
    boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS,
                          boost::property<boost::vertex_index_t, int>,
                          boost::property<boost::edge_index_t, int>>;

/// Planarity of a simple graph given as vertex pairs; on success fills the
/// clockwise neighbor order of every vertex.
inline bool boost_planar(int n, const std::vector<std::pair<int, int>>& pairs,
                         std::vector<std::vector<int>>* order) {
  BoostGraph bg(n);
  for (auto [a, b] : pairs) boost::add_edge(a, b, bg);
  auto eidx = boost::get(boost::edge_index, bg);
  int i = 0;
  boost::graph_traits<BoostGraph>::edge_iterator ei, ee;
  for (boost::tie(ei, ee) = boost::edges(bg); ei != ee; ++ei) boost::put(eidx, *ei, i++);
  using EdgeDesc = boost::graph_traits<BoostGraph>::edge_descriptor;
  std::vector<std::vector<EdgeDesc>> emb(n);
  bool planar = boost::boyer_myrvold_planarity_test(
      boost::boyer_myrvold_params::graph = bg,
      boost::boyer_myrvold_params::embedding =
          boost::make_iterator_property_map(emb.begin(),
                                            boost::get(boost::vertex_index, bg)));
  if (planar && order) {
    order->assign(n, {});
    for (int v = 0; v < n; ++v)
      for (const auto& e : emb[v]) {
        int s = static_cast<int>(boost::source(e, bg));
        int t = static_cast<int>(boost::target(e, bg));
        (*order)[v].push_back(s == v ? t : s);
      }
  }
  return planar;
}

/// Simple skeleton of a multigraph: one representative per vertex pair.
struct Skeleton {
  std::vector<std::pair<int, int>> pairs;
  std::map<std::pair<int, int>, std::vector<EdgeId>> bundle;  // rep first
  std::vector<EdgeId> loops;
  int active_vertices = 0;
};

inline Skeleton skeleton_of(const Graph& g) {
  Skeleton sk;
  std::vector<char> active(g.vertex_count(), 0);
  std::vector<Edge> sorted(g.edges().begin(), g.edges().end());
  std::sort(sorted.begin(), sorted.end(),
            [](const Edge& a, const Edge& b) { return a.id < b.id; });
  for (const auto& e : sorted) {
    active[e.u] = active[e.v] = 1;
    if (e.is_loop()) {
      sk.loops.push_back(e.id);
      continue;
    }
    auto key = std::minmax(e.u, e.v);
    auto& b = sk.bundle[key];
    if (b.empty()) sk.pairs.push_back(key);
    b.push_back(e.id);
  }
  for (char a : active) sk.active_vertices += a;
  return sk;
}

/// Turn a neighbor order of the skeleton into a rotation system for the
/// full multigraph: parallel copies nest beside their representative, loops
/// sit as empty digons at the front of the rotation.
inline RotationSystem rotation_from_order(const Graph& g, const Skeleton& sk,
                                          const std::vector<std::vector<int>>& order) {
  RotationSystem rs;
  rs.graph = g;
  rs.rotation.assign(g.vertex_count(), {});
  for (int v = 0; v < g.vertex_count(); ++v) {
    for (int w : order[v]) {
      const auto& ids = sk.bundle.at(std::minmax(v, w));
      bool low_end = v < w;
      // At the lower endpoint copies follow the representative, at the other
      // endpoint they precede it in reverse, so consecutive copies bound digons.
      std::vector<Dart> ds;
      for (EdgeId id : ids) {
        const Edge& e = g.edge(id);
        ds.push_back(Dart{id, e.u == v ? 0 : 1});
      }
      if (!low_end) std::reverse(ds.begin(), ds.end());
      rs.rotation[v].insert(rs.rotation[v].end(), ds.begin(), ds.end());
    }
  }
  for (EdgeId id : sk.loops) {
    const Edge& e = g.edge(id);
    auto& rot = rs.rotation[e.u];
    rot.insert(rot.begin(), {Dart{id, 0}, Dart{id, 1}});
  }
  return rs;
}

}  // namespace detail

/// Does the witness replay to an embedding of the claimed class?
inline bool replay_witness(const Graph& g, const LayerCertificate& cert) {
  if (!cert.verdict || !cert.witness) return false;
  const RotationSystem& rs = *cert.witness;
  if (rs.graph.vertex_count() != g.vertex_count() ||
      rs.graph.edge_count() != g.edge_count())
    return false;
  for (const auto& e : g.edges()) {
    if (!rs.graph.has_edge(e.id)) return false;
    const Edge& f = rs.graph.edge(e.id);
    if (f.u != e.u || f.v != e.v) return false;
  }
  if (!rotation_problems(rs).empty()) return false;
  Embedding emb(rs);
  const auto& s = emb.surface();
  if (!s.orientable || s.genus != 0) return false;
  if (cert.cls == LayerClass::Planar) return true;
  int comps = 0;
  auto label = g.components(&comps);
  std::vector<int> size(comps, 0);
  for (int v = 0; v < g.vertex_count(); ++v) ++size[label[v]];
  std::vector<char> covered(comps, 0);
  for (int c = 0; c < comps; ++c)
    if (size[c] == 1) covered[c] = 1;
  for (const auto& f : emb.faces()) {
    std::set<VertexId> on;
    for (const auto& st : f.walk) on.insert(emb.tail(st.dart));
    int c = label[*on.begin()];
    if (static_cast<int>(on.size()) == size[c]) covered[c] = 1;
  }
  return std::all_of(covered.begin(), covered.end(), [](char c) { return c != 0; });
}

/// Sound and complete planarity test with an embedding witness.
inline LayerCertificate is_planar(const Graph& g) {
  LayerCertificate cert;
  cert.cls = LayerClass::Planar;
  auto sk = detail::skeleton_of(g);
  int m = static_cast<int>(sk.pairs.size());
  if (sk.active_vertices >= 3 && m > 3 * sk.active_vertices - 6) {
    cert.note = "edge count " + std::to_string(m) + " exceeds 3n-6 = " +
                std::to_string(3 * sk.active_vertices - 6);
    return cert;
  }
  std::vector<std::vector<int>> order;
  if (!detail::boost_planar(g.vertex_count(), sk.pairs, &order)) {
    cert.note = "contains a Kuratowski subdivision";
    return cert;
  }
  cert.verdict = true;
  cert.witness = detail::rotation_from_order(g, sk, order);
  return cert;
}

/// Outerplanarity by apex augmentation: G is outerplanar iff G plus a vertex
/// adjacent to every vertex is planar.
inline LayerCertificate is_outerplanar(const Graph& g) {
  LayerCertificate cert;
  cert.cls = LayerClass::Outerplanar;
  auto sk = detail::skeleton_of(g);
  int m = static_cast<int>(sk.pairs.size());
  if (sk.active_vertices >= 2 && m > 2 * sk.active_vertices - 3) {
    cert.note = "edge count " + std::to_string(m) + " exceeds 2n-3 = " +
                std::to_string(2 * sk.active_vertices - 3);
    return cert;
  }
  const int n = g.vertex_count();
  auto pairs = sk.pairs;
  for (int v = 0; v < n; ++v) pairs.emplace_back(v, n);
  std::vector<std::vector<int>> order;
  if (!detail::boost_planar(n + 1, pairs, &order)) {
    cert.note = "contains a K4 or K2,3 subdivision";
    return cert;
  }
  order.pop_back();
  for (auto& l : order) l.erase(std::remove(l.begin(), l.end(), n), l.end());
  cert.verdict = true;
  cert.witness = detail::rotation_from_order(g, sk, order);
  return cert;
}

inline LayerCertificate certify(const Graph& g, LayerClass cls) {
  return cls == LayerClass::Planar ? is_planar(g) : is_outerplanar(g);
}

/// Certificate check used before any layer is emitted: verdict plus replay.
inline bool certified(const Graph& g, LayerClass cls) {
  auto cert = certify(g, cls);
  return cert.verdict && replay_witness(g, cert);
}

}  // namespace thickness

#endif  // THICKNESS_PLANARITY_HPP
