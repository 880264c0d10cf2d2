// Independent reference routines for the tests. Nothing here calls into the
// library's tracing, homology or search code.
#ifndef THICKNESS_TESTS_SUPPORT_HPP
#define THICKNESS_TESTS_SUPPORT_HPP

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <random>
#include <set>
#include <tuple>
#include <utility>
#include <vector>

namespace ref {

struct RDart {
  int edge;
  int end;
  bool operator==(const RDart&) const = default;
};

struct REdge {
  int u, v;
  int sign = 1;
};

/// Plain rotation system: rot[v] lists darts in cyclic order.
struct Rotation {
  int n = 0;
  std::vector<REdge> edges;
  std::vector<std::vector<RDart>> rot;
};

/// Number of faces under the signed tracing rule: orbits of
/// (dart, orientation) states, two per face.
inline int count_faces(const Rotation& r) {
  std::map<std::pair<int, int>, std::pair<int, int>> where;  // dart -> (vertex, index)
  for (int v = 0; v < r.n; ++v)
    for (int i = 0; i < static_cast<int>(r.rot[v].size()); ++i)
      where[{r.rot[v][i].edge, r.rot[v][i].end}] = {v, i};
  std::set<std::tuple<int, int, int>> seen;
  int orbits = 0;
  for (const auto& [dart, at] : where)
    for (int s : {1, -1}) {
      std::tuple<int, int, int> start{dart.first, dart.second, s};
      if (seen.count(start)) continue;
      ++orbits;
      auto cur = start;
      while (!seen.count(cur)) {
        seen.insert(cur);
        auto [e, end, o] = cur;
        int o2 = o * r.edges[e].sign;
        auto [v, i] = where.at({e, 1 - end});
        const auto& list = r.rot[v];
        int len = static_cast<int>(list.size());
        const RDart& nxt = list[((i + o2) % len + len) % len];
        cur = {nxt.edge, nxt.end, o2};
      }
    }
  return orbits / 2;
}

inline int euler_characteristic(const Rotation& r) {
  return r.n - static_cast<int>(r.edges.size()) + count_faces(r);
}

/// Rotation from neighbor orders of a simple graph; edges numbered by first
/// appearance of the pair (u < v), all signs positive.
inline Rotation from_orders(const std::vector<std::vector<int>>& order) {
  Rotation r;
  r.n = static_cast<int>(order.size());
  r.rot.resize(r.n);
  std::map<std::pair<int, int>, int> id;
  for (int u = 0; u < r.n; ++u)
    for (int v : order[u]) {
      auto k = std::minmax(u, v);
      if (!id.count(k)) {
        id[k] = static_cast<int>(r.edges.size());
        r.edges.push_back({k.first, k.second, 1});
      }
    }
  for (int u = 0; u < r.n; ++u)
    for (int v : order[u]) {
      int e = id.at(std::minmax(u, v));
      r.rot[u].push_back({e, r.edges[e].u == u ? 0 : 1});
    }
  return r;
}

inline std::vector<std::vector<int>> k7_orders() {
  std::vector<std::vector<int>> order(7);
  for (int i = 0; i < 7; ++i)
    for (int off : {1, 3, 2, 6, 4, 5}) order[i].push_back((i + off) % 7);
  return order;
}

inline bool connected(int n, const std::vector<std::pair<int, int>>& pairs) {
  if (n == 0) return true;
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::function<int(int)> find = [&](int x) { return p[x] == x ? x : p[x] = find(p[x]); };
  for (auto [a, b] : pairs) p[find(a)] = find(b);
  int roots = 0;
  for (int v = 0; v < n; ++v) roots += find(v) == v;
  return roots == 1;
}

/// Exhaustive search over all orientable rotation systems of a connected
/// simple graph. Returns {planar, outerplanar}. Vertices of degree 0 are
/// not allowed. `limit` caps the number of rotation systems tried; the
/// result is empty when the cap is hit.
inline std::optional<std::pair<bool, bool>> brute_force_planarity(
    int n, const std::vector<std::pair<int, int>>& pairs, long limit = 400000) {
  std::vector<std::vector<int>> nb(n);
  for (auto [a, b] : pairs) {
    nb[a].push_back(b);
    nb[b].push_back(a);
  }
  long total = 1;
  for (int v = 0; v < n; ++v) {
    for (int k = 2; k < static_cast<int>(nb[v].size()); ++k) {
      total *= k;
      if (total > limit) return std::nullopt;
    }
  }
  // Fix the first neighbor of each vertex and permute the rest.
  std::vector<std::vector<int>> order(n);
  for (int v = 0; v < n; ++v) {
    order[v] = nb[v];
    std::sort(order[v].begin() + (order[v].empty() ? 0 : 1), order[v].end());
  }
  bool planar = false, outer = false;
  std::function<void(int)> rec = [&](int v) {
    if (outer) return;
    if (v == n) {
      Rotation r = from_orders(order);
      if (euler_characteristic(r) != 2) return;
      planar = true;
      // Outerplanar: some face meets every vertex. Trace faces explicitly.
      std::map<std::pair<int, int>, std::pair<int, int>> where;
      for (int x = 0; x < r.n; ++x)
        for (int i = 0; i < static_cast<int>(r.rot[x].size()); ++i)
          where[{r.rot[x][i].edge, r.rot[x][i].end}] = {x, i};
      std::set<std::pair<int, int>> used;
      for (const auto& [d, at] : where) {
        if (used.count(d)) continue;
        std::set<int> verts;
        auto cur = d;
        while (!used.count(cur)) {
          used.insert(cur);
          verts.insert(where.at(cur).first);
          auto [x, i] = where.at({cur.first, 1 - cur.second});
          const auto& list = r.rot[x];
          const RDart& nxt = list[(i + 1) % list.size()];
          cur = {nxt.edge, nxt.end};
        }
        if (static_cast<int>(verts.size()) == n) outer = true;
      }
      return;
    }
    if (order[v].size() <= 2) {
      rec(v + 1);
      return;
    }
    do {
      rec(v + 1);
    } while (std::next_permutation(order[v].begin() + 1, order[v].end()));
    std::sort(order[v].begin() + 1, order[v].end());
  };
  if (n == 1 && pairs.empty()) return std::make_pair(true, true);
  rec(0);
  return std::make_pair(planar, outer);
}

/// Acyclicity by union-find over an edge list.
inline bool is_forest(int n, const std::vector<std::pair<int, int>>& pairs) {
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::function<int(int)> find = [&](int x) { return p[x] == x ? x : p[x] = find(p[x]); };
  for (auto [a, b] : pairs) {
    int ra = find(a), rb = find(b);
    if (ra == rb) return false;
    p[ra] = rb;
  }
  return true;
}

/// Components of a forest given as edges; returns vertex sets of the
/// components that contain at least one edge.
inline std::vector<std::set<int>> forest_components(int n, const std::vector<std::pair<int, int>>& pairs) {
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::function<int(int)> find = [&](int x) { return p[x] == x ? x : p[x] = find(p[x]); };
  for (auto [a, b] : pairs) p[find(a)] = find(b);
  std::map<int, std::set<int>> comp;
  for (auto [a, b] : pairs) {
    comp[find(a)].insert(a);
    comp[find(a)].insert(b);
  }
  std::vector<std::set<int>> out;
  for (auto& [r, s] : comp) out.push_back(s);
  return out;
}

/// Smallest k such that the edges split into k parts accepted by `ok`,
/// trying every assignment (tiny graphs only).
inline int brute_force_layers(int m, int max_k, const std::function<bool(const std::vector<int>&)>& ok_part) {
  for (int k = 1; k <= max_k; ++k) {
    std::vector<int> a(m, 0);
    while (true) {
      bool good = true;
      for (int l = 0; l < k && good; ++l) {
        std::vector<int> part;
        for (int i = 0; i < m; ++i)
          if (a[i] == l) part.push_back(i);
        good = ok_part(part);
      }
      if (good) return k;
      int i = 0;
      while (i < m && ++a[i] == k) a[i++] = 0;
      if (i == m) break;
    }
  }
  return -1;
}

}  // namespace ref

#endif  // THICKNESS_TESTS_SUPPORT_HPP
