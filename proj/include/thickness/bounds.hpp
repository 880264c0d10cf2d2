#ifndef THICKNESS_BOUNDS_HPP
#define THICKNESS_BOUNDS_HPP

#include <cmath>
#include <optional>
#include <string>
#include <vector>

#include "thickness/embedding.hpp"

namespace thickness {

enum class Goal { Thickness, Outerthickness };

inline std::string to_string(Goal g) {
  return g == Goal::Thickness ? "thickness" : "outerthickness";
}

inline Goal goal_from_string(const std::string& s) {
  if (s == "thickness") return Goal::Thickness;
  if (s == "outerthickness") return Goal::Outerthickness;
  throw invalid_input("unknown goal '" + s + "'");
}

struct BoundEntry {
  std::string name;
  Goal goal;
  std::string formula;
  double raw = 0;
  int effective = 0;
  bool applicable = false;
  std::string note;
};

struct BoundsReport {
  SurfaceDescriptor surface;
  std::vector<BoundEntry> entries;

  const BoundEntry* find(const std::string& name) const {
    for (const auto& e : entries)
      if (e.name == name) return &e;
    return nullptr;
  }

  /// Smallest applicable effective bound for the goal.
  std::optional<int> best(Goal goal) const {
    std::optional<int> out;
    for (const auto& e : entries)
      if (e.applicable && e.goal == goal && (!out || e.effective < *out)) out = e.effective;
    return out;
  }
};

namespace detail {

/// Integer h with h*h == x, if x is a perfect square (x >= 0, within 1e-9).
inline std::optional<long> exact_root(double x) {
  if (x < 0) return std::nullopt;
  long h = std::lround(std::sqrt(x));
  if (std::fabs(static_cast<double>(h) * h - x) < 1e-9) return h;
  return std::nullopt;
}

// floor that tolerates values like 2.9999999999 from sqrt.
inline int safe_floor(double x) { return static_cast<int>(std::floor(x + 1e-9)); }

/// Degeneracy threshold and layer budget for the square-root bounds:
/// raw = base + sqrt(q), or base - 1 + sqrt(q) when q is a perfect square.
struct RootBound {
  double raw;
  int d;       // peel threshold
  bool square;
};

inline RootBound root_bound(double q, int base) {
  auto h = exact_root(q);
  if (h) return {static_cast<double>(base - 1 + *h), static_cast<int>(1 + *h), true};
  double r = std::sqrt(q);
  return {base + r, 2 + safe_floor(r), false};
}

}  // namespace detail

/// Peel threshold d of the degeneracy pipelines for a surface.
inline int degeneracy_threshold(const SurfaceDescriptor& s, Goal goal) {
  if (s.orientable && s.genus == 0)
    throw invalid_input("degeneracy pipelines need a surface other than the sphere");
  double q;
  if (goal == Goal::Thickness) q = s.orientable ? 2.0 * s.genus - 1 : s.genus - 1.0;
  else q = s.orientable ? 3.0 * s.genus - 1.5 : 1.5 * (s.genus - 1.0);
  return detail::root_bound(q, goal == Goal::Thickness ? 3 : 4).d;
}

/// Every bound that applies to graphs embedded like `emb`.
inline BoundsReport bounds_report(const SurfaceDescriptor& s) {
  BoundsReport rep;
  rep.surface = s;
  auto add = [&](std::string name, Goal goal, std::string formula, double raw, bool applicable,
                 std::string note) {
    BoundEntry e{std::move(name), goal, std::move(formula), raw, detail::safe_floor(raw),
                 applicable, std::move(note)};
    rep.entries.push_back(std::move(e));
  };
  const int g = s.genus;
  if (s.orientable) {
    add("genus-plus-one", Goal::Thickness, "g + 1", g + 1.0, true, "");
    add("genus-plus-one-outer", Goal::Outerthickness, "2g + 2", 2.0 * g + 2, true,
        "each planar layer splits into two outerplanar layers");
    if (g == 0) {
      add("planar", Goal::Thickness, "1", 1, true, "");
      add("planar-outer", Goal::Outerthickness, "2", 2, true, "");
    }
    if (g >= 1) {
      auto t = detail::root_bound(2.0 * g - 1, 3);
      add("orientable-degeneracy", Goal::Thickness,
          t.square ? "2 + sqrt(2g-1)" : "3 + sqrt(2g-1)", t.raw, true,
          t.square ? "2g-1 is a perfect square" : "");
      auto o = detail::root_bound(3.0 * g - 1.5, 4);
      add("orientable-outer-degeneracy", Goal::Outerthickness,
          o.square ? "3 + sqrt(3g-3/2)" : "4 + sqrt(3g-3/2)", o.raw, true,
          o.square ? "3g-3/2 is a perfect square" : "square refinement not applicable");
    }
    if (g == 1) add("torus-outer", Goal::Outerthickness, "3", 3, true, "");
  } else {
    auto t = detail::root_bound(g - 1.0, 3);
    add("nonorientable-degeneracy", Goal::Thickness,
        t.square ? "2 + sqrt(k-1)" : "3 + sqrt(k-1)", t.raw, true,
        t.square ? "k-1 is a perfect square" : "");
    auto o = detail::root_bound(1.5 * (g - 1.0), 4);
    add("nonorientable-outer-degeneracy", Goal::Outerthickness,
        o.square ? "3 + sqrt(3(k-1)/2)" : "4 + sqrt(3(k-1)/2)", o.raw, true,
        o.square ? "3(k-1)/2 is a perfect square" : "");
  }
  return rep;
}

inline BoundsReport bounds_report(const Embedding& emb) { return bounds_report(emb.surface()); }

}  // namespace thickness

#endif  // THICKNESS_BOUNDS_HPP
