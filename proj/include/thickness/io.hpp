#ifndef THICKNESS_IO_HPP
#define THICKNESS_IO_HPP

#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "thickness/decomposition.hpp"
#include "thickness/oracle.hpp"

namespace thickness {

using json = nlohmann::json;

inline std::string pair_text(const Graph& g, EdgeId id) {
  const Edge& e = g.edge(id);
  return std::to_string(e.u) + "-" + std::to_string(e.v);
}

/// Decomposition document. Layers list edge ids and matching `u-v` pairs so
/// the file can be read without the embedding (DOT export) and checked
/// against it (verify).
inline json decomposition_to_json(const Graph& g, const Decomposition& dec,
                                  const std::string& graph_name,
                                  const VerificationReport* report = nullptr) {
  json doc;
  doc["format"] = "thickness-decomposition/1";
  doc["graph"] = {{"name", graph_name}, {"vertices", g.vertex_count()}, {"edges", g.edge_count()}};
  doc["goal"] = to_string(dec.goal);
  doc["method"] = dec.method;
  doc["bound"] = {{"name", dec.bound_name}, {"value", dec.claimed_bound}};
  doc["layers"] = json::array();
  for (const auto& l : dec.layers) {
    json pairs = json::array();
    for (EdgeId id : l.edges) pairs.push_back(g.has_edge(id) ? pair_text(g, id) : "?");
    doc["layers"].push_back(
        {{"class", to_string(l.cls)}, {"tag", l.tag}, {"edges", l.edges}, {"pairs", pairs}});
  }
  doc["helpers"] = json::array();
  for (const auto& h : dec.helpers)
    doc["helpers"].push_back({{"id", h.id}, {"u", h.u}, {"v", h.v}, {"reason", h.reason}});
  doc["notes"] = dec.notes;
  if (report) {
    json checks = json::array();
    for (const auto& c : report->checks)
      checks.push_back({{"name", c.name}, {"ok", c.ok}, {"detail", c.detail}});
    doc["verification"] = {{"ok", report->ok()}, {"checks", checks}};
  }
  return doc;
}

/// Read a decomposition document. With a graph, every edge id must exist
/// and agree with its recorded pair.
inline Decomposition decomposition_from_json(const json& doc, const Graph* g = nullptr) {
  Decomposition dec;
  try {
    if (doc.value("format", "") != "thickness-decomposition/1")
      throw invalid_input("not a decomposition document");
    dec.goal = goal_from_string(doc.at("goal").get<std::string>());
    dec.method = doc.at("method").get<std::string>();
    dec.bound_name = doc.at("bound").at("name").get<std::string>();
    dec.claimed_bound = doc.at("bound").at("value").get<int>();
    for (const auto& l : doc.at("layers")) {
      Layer layer;
      layer.cls = layer_class_from_string(l.at("class").get<std::string>());
      layer.tag = l.value("tag", "");
      layer.edges = l.at("edges").get<std::vector<EdgeId>>();
      auto pairs = l.at("pairs").get<std::vector<std::string>>();
      if (pairs.size() != layer.edges.size())
        throw invalid_input("layer edge and pair lists differ in length");
      if (g)
        for (std::size_t i = 0; i < pairs.size(); ++i)
          if (g->has_edge(layer.edges[i]) && pair_text(*g, layer.edges[i]) != pairs[i])
            throw invalid_input("edge " + std::to_string(layer.edges[i]) + " is " +
                                pair_text(*g, layer.edges[i]) + ", file says " + pairs[i]);
      dec.layers.push_back(std::move(layer));
    }
    for (const auto& h : doc.at("helpers"))
      dec.helpers.push_back({h.at("id").get<EdgeId>(), h.at("u").get<VertexId>(),
                             h.at("v").get<VertexId>(), h.value("reason", "")});
    if (doc.contains("notes")) dec.notes = doc.at("notes").get<std::vector<std::string>>();
  } catch (const json::exception& ex) {
    throw invalid_input(std::string("malformed decomposition: ") + ex.what());
  }
  return dec;
}

inline Decomposition parse_decomposition(const std::string& text, const Graph* g = nullptr) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& ex) {
    throw invalid_input(std::string("decomposition is not JSON: ") + ex.what());
  }
  return decomposition_from_json(doc, g);
}

/// One undirected DOT graph per layer, built from the recorded pairs.
inline std::string decomposition_to_dot(const json& doc) {
  std::ostringstream out;
  const auto& layers = doc.at("layers");
  for (std::size_t i = 0; i < layers.size(); ++i) {
    const auto& l = layers[i];
    out << "graph layer" << i + 1 << " {\n";
    out << "  label=\"layer " << i + 1 << " (" << l.at("class").get<std::string>() << ", "
        << l.value("tag", "") << ")\";\n";
    const auto edges = l.at("edges").get<std::vector<EdgeId>>();
    const auto pairs = l.at("pairs").get<std::vector<std::string>>();
    for (std::size_t j = 0; j < pairs.size(); ++j) {
      auto dash = pairs[j].find('-');
      if (dash == std::string::npos) throw invalid_input("bad pair '" + pairs[j] + "'");
      out << "  " << pairs[j].substr(0, dash) << " -- " << pairs[j].substr(dash + 1)
          << " [label=\"e" << edges[j] << "\"];\n";
    }
    out << "}\n";
  }
  return out.str();
}

}  // namespace thickness

#endif  // THICKNESS_IO_HPP
