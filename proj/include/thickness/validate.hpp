#ifndef THICKNESS_VALIDATE_HPP
#define THICKNESS_VALIDATE_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "thickness/embedding.hpp"
#include "thickness/homology.hpp"

namespace thickness {

struct ValidationReport {
  std::vector<std::string> problems;
  std::optional<SurfaceDescriptor> surface;

  bool ok() const { return problems.empty(); }
};

/// Every violated invariant of a rotation system, including the rule that
/// loops and parallel edges are admitted only in multigraph mode and only
/// when they close noncontractible cycles.
inline ValidationReport validate_embedding(const RotationSystem& rs) {
  ValidationReport report;
  const Graph& g = rs.graph;
  if (g.vertex_count() == 0) {
    report.problems.push_back("empty graph");
    return report;
  }
  report.problems = rotation_problems(rs);
  if (!report.ok()) return report;

  std::optional<Embedding> emb;
  try {
    emb.emplace(rs);
  } catch (const Error& e) {
    report.problems.push_back(e.what());
    return report;
  }
  report.surface = emb->surface();
  const auto& s = emb->surface();
  int f = emb->face_count();
  int isolated = 0;
  for (int v = 0; v < g.vertex_count(); ++v)
    if (emb->degree(v) == 0) ++isolated;
  if (g.vertex_count() - g.edge_count() + f + isolated != s.euler_characteristic)
    report.problems.push_back("Euler characteristic mismatch");
  if (s.orientable && s.euler_characteristic % 2 != 0)
    report.problems.push_back("orientable surface with odd Euler characteristic");

  auto special = g.simplicity_problems();
  if (special.empty()) return report;
  if (!g.allows_multi()) {
    report.problems.insert(report.problems.end(), special.begin(), special.end());
    return report;
  }
  if (!g.connected()) {
    report.problems.push_back("multigraph embedding must be connected");
    return report;
  }
  const HomologyTable table = homology_signatures(*emb);
  std::map<std::pair<VertexId, VertexId>, std::vector<EdgeId>> bundles;
  for (const auto& e : g.edges()) {
    if (e.is_loop()) {
      if (is_zero(table.of_edge(e.id)))
        report.problems.push_back("loop " + std::to_string(e.id) +
                                  " is contractible");
      continue;
    }
    bundles[std::minmax(e.u, e.v)].push_back(e.id);
  }
  for (const auto& [ends, ids] : bundles)
    for (std::size_t i = 0; i < ids.size(); ++i)
      for (std::size_t j = i + 1; j < ids.size(); ++j) {
        const Edge& a = g.edge(ids[i]);
        const Edge& b = g.edge(ids[j]);
        std::vector<WalkStep> cycle{{a.id, true}, {b.id, b.u != a.u}};
        if (is_zero(table.evaluate(cycle)))
          report.problems.push_back("parallel edges " + std::to_string(a.id) +
                                    " and " + std::to_string(b.id) +
                                    " bound a contractible cycle");
      }
  return report;
}

inline ValidationReport validate_embedding(const Embedding& emb) {
  return validate_embedding(emb.system());
}

}  // namespace thickness

#endif  // THICKNESS_VALIDATE_HPP
