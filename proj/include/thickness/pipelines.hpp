#ifndef THICKNESS_PIPELINES_HPP
#define THICKNESS_PIPELINES_HPP

#include <string>

#include "thickness/decomposition.hpp"
#include "thickness/torus.hpp"

namespace thickness {

/// Method names accepted by `decompose`.
inline const std::vector<std::string>& method_names() {
  static const std::vector<std::string> names{"auto", "genus-peel", "degeneracy", "torus",
                                              "planar"};
  return names;
}

/// Method `auto` resolves to for an embedding and goal.
inline std::string auto_method(const Embedding& emb, Goal goal) {
  const auto& s = emb.surface();
  if (s.orientable && s.genus == 0) return goal == Goal::Thickness ? "genus-peel" : "planar";
  if (goal == Goal::Outerthickness && s.orientable && s.genus == 1) return "torus";
  if (goal == Goal::Thickness && s.orientable) return "genus-peel";
  return "degeneracy";
}

inline Decomposition decompose(const Embedding& emb, Goal goal, const std::string& method = "auto",
                               const PipelineOptions& opt = {}) {
  const std::string m = method == "auto" ? auto_method(emb, goal) : method;
  if (m == "genus-peel") {
    if (goal != Goal::Thickness) throw invalid_input("genus peel only computes thickness");
    return thickness_genus_peel(emb, opt);
  }
  if (m == "degeneracy")
    return goal == Goal::Thickness ? thickness_degeneracy(emb, opt)
                                   : outerthickness_degeneracy(emb, opt);
  if (m == "torus") {
    if (goal != Goal::Outerthickness) throw invalid_input("torus method only computes outerthickness");
    return torus_outerthickness(emb, opt);
  }
  if (m == "planar") return planar_decomposition(emb, goal, opt);
  throw invalid_input("unknown method '" + method + "'");
}

}  // namespace thickness

#endif  // THICKNESS_PIPELINES_HPP
