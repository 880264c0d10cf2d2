#ifndef THICKNESS_FORMAT_HPP
#define THICKNESS_FORMAT_HPP

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "thickness/embedding.hpp"
#include "thickness/homology.hpp"
#include "thickness/validate.hpp"

namespace thickness {

struct ParsedEmbedding {
  std::string name;
  Embedding embedding;
  std::vector<std::string> warnings;
};

namespace detail {

inline std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

inline Error line_error(int line, const std::string& msg) {
  return invalid_input("line " + std::to_string(line) + ": " + msg);
}

inline long parse_int(const std::string& tok, int line, const char* what) {
  try {
    std::size_t used = 0;
    long v = std::stol(tok, &used);
    if (used != tok.size()) throw std::invalid_argument(tok);
    return v;
  } catch (const std::exception&) {
    throw line_error(line, std::string("bad ") + what + " '" + tok + "'");
  }
}

// Parallel copies whose cycle with the lowest-id copy is contractible.
inline std::set<EdgeId> contractible_parallels(const Embedding& emb) {
  std::set<EdgeId> drop;
  const Graph& g = emb.graph();
  if (!g.connected()) return drop;
  const HomologyTable table = homology_signatures(emb);
  std::map<std::pair<VertexId, VertexId>, std::vector<EdgeId>> bundles;
  for (const auto& e : g.edges())
    if (!e.is_loop()) bundles[std::minmax(e.u, e.v)].push_back(e.id);
  for (auto& [ends, ids] : bundles) {
    std::sort(ids.begin(), ids.end());
    std::vector<EdgeId> kept{ids.front()};
    for (std::size_t i = 1; i < ids.size(); ++i) {
      const Edge& b = g.edge(ids[i]);
      bool clash = false;
      for (EdgeId k : kept) {
        const Edge& a = g.edge(k);
        std::vector<WalkStep> cycle{{a.id, true}, {b.id, b.u != a.u}};
        if (is_zero(table.evaluate(cycle))) clash = true;
      }
      if (clash) drop.insert(ids[i]);
      else kept.push_back(ids[i]);
    }
  }
  return drop;
}

}  // namespace detail

/// Parse the line-oriented embedding format:
///   graph <name> / vertices <n> / edge <id> <u> <v> [+|-] / rot <v>: <e>.<end> ...
/// Loops and parallel edges switch the graph to multigraph mode; parallel
/// copies that bound a contractible digon are merged (with a warning), and
/// contractible loops are rejected.
inline ParsedEmbedding parse_embedding(const std::string& text) {
  std::istringstream in(text);
  std::string raw;
  int line = 0;
  std::string name = "unnamed";
  long n = -1;
  std::vector<Edge> edges;
  std::set<EdgeId> twisted;
  std::map<EdgeId, int> edge_line;
  std::map<VertexId, std::vector<Dart>> rot;
  std::map<VertexId, int> rot_line;
  std::map<std::pair<EdgeId, int>, int> dart_line;

  while (std::getline(in, raw)) {
    ++line;
    std::string s = detail::trim(raw);
    if (s.empty() || s[0] == '#') continue;
    std::istringstream ls(s);
    std::string kw;
    ls >> kw;
    if (kw == "graph") {
      std::string rest;
      std::getline(ls, rest);
      name = detail::trim(rest);
      if (name.empty()) throw detail::line_error(line, "graph needs a name");
    } else if (kw == "vertices") {
      std::string tok, extra;
      if (!(ls >> tok) || (ls >> extra)) throw detail::line_error(line, "expected 'vertices <n>'");
      if (n >= 0) throw detail::line_error(line, "vertices given twice");
      n = detail::parse_int(tok, line, "vertex count");
      if (n < 0) throw detail::line_error(line, "negative vertex count");
    } else if (kw == "edge") {
      std::vector<std::string> tok;
      for (std::string t; ls >> t;) tok.push_back(t);
      if (tok.size() < 3 || tok.size() > 4)
        throw detail::line_error(line, "expected 'edge <id> <u> <v> [+|-]'");
      EdgeId id = static_cast<EdgeId>(detail::parse_int(tok[0], line, "edge id"));
      VertexId u = static_cast<VertexId>(detail::parse_int(tok[1], line, "endpoint"));
      VertexId v = static_cast<VertexId>(detail::parse_int(tok[2], line, "endpoint"));
      if (id < 0) throw detail::line_error(line, "negative edge id");
      if (edge_line.count(id))
        throw detail::line_error(line, "edge id " + std::to_string(id) + " repeated");
      if (n < 0) throw detail::line_error(line, "edge before 'vertices'");
      if (u < 0 || v < 0 || u >= n || v >= n)
        throw detail::line_error(line, "endpoint out of range");
      if (tok.size() == 4) {
        if (tok[3] == "-") twisted.insert(id);
        else if (tok[3] != "+") throw detail::line_error(line, "sign must be + or -");
      }
      edge_line[id] = line;
      edges.push_back({id, u, v});
    } else if (kw == "rot") {
      std::string head;
      std::getline(ls, head);
      auto colon = head.find(':');
      if (colon == std::string::npos) throw detail::line_error(line, "expected 'rot <v>: ...'");
      VertexId v = static_cast<VertexId>(
          detail::parse_int(detail::trim(head.substr(0, colon)), line, "vertex"));
      if (n < 0) throw detail::line_error(line, "rot before 'vertices'");
      if (v < 0 || v >= n) throw detail::line_error(line, "vertex out of range");
      if (rot_line.count(v))
        throw detail::line_error(line, "rotation of vertex " + std::to_string(v) + " given twice");
      rot_line[v] = line;
      std::istringstream ds(head.substr(colon + 1));
      auto& list = rot[v];
      for (std::string t; ds >> t;) {
        auto dot = t.find('.');
        if (dot == std::string::npos) throw detail::line_error(line, "dart '" + t + "' needs <edge>.<end>");
        EdgeId e = static_cast<EdgeId>(detail::parse_int(t.substr(0, dot), line, "dart edge"));
        long end = detail::parse_int(t.substr(dot + 1), line, "dart end");
        if (end != 0 && end != 1) throw detail::line_error(line, "dart end must be 0 or 1");
        if (!edge_line.count(e)) throw detail::line_error(line, "dart of unknown edge " + std::to_string(e));
        if (dart_line.count({e, static_cast<int>(end)}))
          throw detail::line_error(line, "duplicate dart " + t + " (first on line " +
                                             std::to_string(dart_line[{e, static_cast<int>(end)}]) + ")");
        dart_line[{e, static_cast<int>(end)}] = line;
        const Edge& ed = *std::find_if(edges.begin(), edges.end(),
                                       [&](const Edge& x) { return x.id == e; });
        if (ed.end_vertex(static_cast<int>(end)) != v)
          throw detail::line_error(line, "dart " + t + " does not belong to vertex " + std::to_string(v));
        list.push_back(Dart{e, static_cast<int>(end)});
      }
    } else {
      throw detail::line_error(line, "unknown keyword '" + kw + "'");
    }
  }
  if (n < 0) throw invalid_input("missing 'vertices' line");
  if (n == 0) throw invalid_input("empty graph");

  bool multi = false;
  {
    std::set<std::pair<VertexId, VertexId>> seen;
    for (const auto& e : edges)
      if (e.is_loop() || !seen.insert(std::minmax(e.u, e.v)).second) multi = true;
  }
  RotationSystem rs;
  rs.graph = Graph(static_cast<int>(n), edges, multi);
  rs.rotation.resize(n);
  for (auto& [v, list] : rot) rs.rotation[v] = list;
  rs.twisted = twisted;

  auto report = validate_embedding(rs);
  std::vector<std::string> warnings;
  if (!report.ok() && multi && report.surface) {
    // Merge contractible parallel copies, then re-check.
    Embedding emb(rs);
    auto drop = detail::contractible_parallels(emb);
    if (!drop.empty()) {
      for (EdgeId id : drop)
        warnings.push_back("merged parallel edge " + std::to_string(id) +
                           " (contractible digon)");
      Embedding merged = delete_edges(emb, drop);
      rs = merged.system();
      bool still_multi = !rs.graph.simplicity_problems().empty();
      rs.graph = Graph(rs.graph.vertex_count(),
                       std::vector<Edge>(rs.graph.edges().begin(), rs.graph.edges().end()),
                       still_multi);
      report = validate_embedding(rs);
    }
  }
  if (!report.ok()) {
    std::string msg = "invalid embedding";
    for (const auto& p : report.problems) msg += "\n  " + p;
    throw invalid_input(msg);
  }
  return ParsedEmbedding{name, Embedding(rs), warnings};
}

/// Canonical text: vertices ascending, edges by id, each rotation starting
/// at its lowest dart. Helper flags are not part of the format.
inline std::string serialize_embedding(const Embedding& emb, const std::string& name) {
  std::ostringstream out;
  out << "graph " << name << "\n";
  out << "vertices " << emb.vertex_count() << "\n";
  std::vector<Edge> edges(emb.graph().edges().begin(), emb.graph().edges().end());
  std::sort(edges.begin(), edges.end(), [](const Edge& a, const Edge& b) { return a.id < b.id; });
  for (const auto& e : edges)
    out << "edge " << e.id << " " << e.u << " " << e.v << " "
        << (emb.sign(e.id) < 0 ? "-" : "+") << "\n";
  for (int v = 0; v < emb.vertex_count(); ++v) {
    std::vector<Dart> r = emb.rotation(v);
    if (!r.empty()) std::rotate(r.begin(), std::min_element(r.begin(), r.end()), r.end());
    out << "rot " << v << ":";
    for (const auto& d : r) out << " " << d.edge << "." << d.end;
    out << "\n";
  }
  return out.str();
}

}  // namespace thickness

#endif  // THICKNESS_FORMAT_HPP
