#ifndef THICKNESS_PARTITION_SEARCH_HPP
#define THICKNESS_PARTITION_SEARCH_HPP

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <random>
#include <utility>
#include <vector>

#include "thickness/planarity.hpp"

namespace thickness {

/// A simple graph layer kept together with a planar rotation of itself, so
/// that most edge insertions are accepted by a face lookup instead of a full
/// planarity test. Outerplanar layers carry an apex vertex joined to all
/// others; outerplanarity of the layer is planarity of the augmented graph.
class IncrementalLayer {
 public:
  IncrementalLayer() = default;
  IncrementalLayer(int n, LayerClass cls) : n_(n), cls_(cls) {
    int total = cls == LayerClass::Outerplanar ? n + 1 : n;
    rot_.assign(total, {});
    deg_.assign(n, 0);
    if (cls == LayerClass::Outerplanar)
      for (int v = 0; v < n; ++v) {
        rot_[v].push_back(n);
        rot_[n].push_back(v);
      }
  }

  int edge_count() const { return m_; }
  int active_vertices() const { return active_; }
  LayerClass layer_class() const { return cls_; }

  /// Would the layer keep its class after adding edge a-b?
  bool fits(int a, int b) const { return count_ok(a, b); }

  /// Add a-b if the layer stays planar/outerplanar. Returns false (and leaves
  /// the layer unchanged) otherwise.
  bool try_add(int a, int b) {
    if (!count_ok(a, b)) return false;
    if (!insert_by_face(a, b)) {
      ++full_tests_;
      auto pairs = pairs_with(a, b);
      std::vector<std::vector<int>> order;
      if (!detail::boost_planar(static_cast<int>(rot_.size()), pairs, &order))
        return false;
      rot_ = std::move(order);
    }
    bump(a, b, +1);
    return true;
  }

  void remove(int a, int b) {
    erase_one(rot_[a], b);
    erase_one(rot_[b], a);
    bump(a, b, -1);
  }

  /// Number of insertions that needed a full planarity test.
  long full_tests() const { return full_tests_; }

 private:
  bool count_ok(int a, int b) const {
    int act = active_ + (deg_[a] == 0) + (deg_[b] == 0);
    int m = m_ + 1;
    if (cls_ == LayerClass::Planar) return act < 3 || m <= 3 * act - 6;
    return act < 2 || m <= 2 * act - 3;
  }

  void bump(int a, int b, int delta) {
    if (delta > 0) {
      if (deg_[a]++ == 0) ++active_;
      if (deg_[b]++ == 0) ++active_;
    } else {
      if (--deg_[a] == 0) --active_;
      if (--deg_[b] == 0) --active_;
    }
    m_ += delta;
  }

  static void erase_one(std::vector<int>& l, int x) {
    auto it = std::find(l.begin(), l.end(), x);
    if (it != l.end()) l.erase(it);
  }

  std::vector<std::pair<int, int>> pairs_with(int a, int b) const {
    std::vector<std::pair<int, int>> pairs;
    for (int v = 0; v < static_cast<int>(rot_.size()); ++v)
      for (int w : rot_[v])
        if (v < w) pairs.emplace_back(v, w);
    pairs.emplace_back(std::min(a, b), std::max(a, b));
    return pairs;
  }

  // Look for a face of the current rotation with a corner at a and at b;
  // if found, insert the edge there (planarity preserved). A vertex with no
  // neighbors can join anywhere.
  bool insert_by_face(int a, int b) {
    const int total = static_cast<int>(rot_.size());
    if (rot_[a].empty() || rot_[b].empty()) {
      rot_[a].insert(rot_[a].begin(), b);
      rot_[b].insert(rot_[b].begin(), a);
      return true;
    }
    // Corner (v, i): the walk departs v along rot_[v][i].
    visited_.assign(total, {});
    for (int v = 0; v < total; ++v) visited_[v].assign(rot_[v].size(), 0);
    for (int v0 = 0; v0 < total; ++v0)
      for (int i0 = 0; i0 < static_cast<int>(rot_[v0].size()); ++i0) {
        if (visited_[v0][i0]) continue;
        int ca = -1, cb = -1;
        int v = v0, i = i0;
        do {
          visited_[v][i] = 1;
          if (v == a && ca < 0) ca = i;
          if (v == b && cb < 0) cb = i;
          int w = rot_[v][i];
          auto& rw = rot_[w];
          int j = static_cast<int>(std::find(rw.begin(), rw.end(), v) - rw.begin());
          j = (j + 1) % static_cast<int>(rw.size());
          v = w;
          i = j;
        } while (!(v == v0 && i == i0));
        if (ca >= 0 && cb >= 0) {
          rot_[a].insert(rot_[a].begin() + ca, b);
          rot_[b].insert(rot_[b].begin() + cb, a);
          return true;
        }
      }
    return false;
  }

  int n_ = 0;
  LayerClass cls_ = LayerClass::Planar;
  std::vector<std::vector<int>> rot_;
  std::vector<int> deg_;
  int m_ = 0;
  int active_ = 0;
  long full_tests_ = 0;
  std::vector<std::vector<char>> visited_;
};

struct PartitionSearchOptions {
  Deadline deadline;
  /// Fix the first edge to layer 0 and open layers in order of first use.
  bool break_symmetry = true;
  /// Optional explicit edge order (indices into the pair list).
  std::vector<int> order;
  /// Node cap (0 = none).
  std::int64_t max_nodes = 0;
};

struct PartitionSearchResult {
  std::optional<std::vector<int>> assignment;  // layer per pair
  std::int64_t nodes = 0;
  bool exhausted = false;  // search space fully explored without success
  bool timed_out = false;
};

/// Default edge order: breadth-first over the graph, so that layers grow
/// around already placed edges and conflicts surface early.
inline std::vector<int> bfs_edge_order(int n, const std::vector<std::pair<int, int>>& pairs) {
  std::vector<std::vector<std::pair<int, int>>> adj(n);
  for (int i = 0; i < static_cast<int>(pairs.size()); ++i) {
    adj[pairs[i].first].push_back({pairs[i].second, i});
    adj[pairs[i].second].push_back({pairs[i].first, i});
  }
  std::vector<char> vseen(n, 0), eseen(pairs.size(), 0);
  std::vector<int> order;
  for (int s = 0; s < n; ++s) {
    if (vseen[s]) continue;
    vseen[s] = 1;
    std::vector<int> queue{s};
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
      int x = queue[qi];
      for (auto [y, i] : adj[x]) {
        if (!eseen[i]) {
          eseen[i] = 1;
          order.push_back(i);
        }
        if (!vseen[y]) {
          vseen[y] = 1;
          queue.push_back(y);
        }
      }
    }
  }
  return order;
}

/// Depth-first search for an assignment of the edges of a simple graph to
/// at most `k` layers of the given class. Pruning: per-layer edge capacity,
/// a global capacity bound, and incremental (outer)planarity.
inline PartitionSearchResult search_partition(int n,
                                              const std::vector<std::pair<int, int>>& pairs,
                                              int k, LayerClass cls,
                                              const PartitionSearchOptions& opt = {}) {
  PartitionSearchResult res;
  const int m = static_cast<int>(pairs.size());
  if (m == 0) {
    res.assignment = std::vector<int>{};
    return res;
  }
  if (k <= 0) {
    res.exhausted = true;
    return res;
  }
  std::vector<int> order = opt.order.empty() ? bfs_edge_order(n, pairs) : opt.order;
  std::vector<IncrementalLayer> layers(k, IncrementalLayer(n, cls));
  std::vector<int> assign(m, -1);
  const int cap = cls == LayerClass::Planar ? std::max(3 * n - 6, 3)
                                            : std::max(2 * n - 3, 1);

  // Iterative DFS with explicit choice stack.
  std::vector<int> choice(m, -1);
  std::vector<int> opened(m + 1, 0);  // layers in use before position
  int pos = 0;
  opened[0] = 0;
  auto slack = [&](int at) {
    long free_cap = 0;
    for (const auto& L : layers) free_cap += cap - L.edge_count();
    return free_cap >= m - at;
  };
  while (pos >= 0) {
    if (pos == m) {
      std::vector<int> out(m);
      for (int i = 0; i < m; ++i) out[order[i]] = assign[order[i]];
      res.assignment = std::move(out);
      return res;
    }
    if ((++res.nodes & 0xff) == 0 && opt.deadline.expired()) {
      res.timed_out = true;
      return res;
    }
    if (opt.max_nodes && res.nodes > opt.max_nodes) {
      res.timed_out = true;
      return res;
    }
    int e = order[pos];
    auto [a, b] = pairs[e];
    if (choice[pos] >= 0) {
      layers[choice[pos]].remove(a, b);
      assign[e] = -1;
    }
    int limit = k;
    if (opt.break_symmetry) limit = std::min(k, opened[pos] + 1);
    int next = choice[pos] + 1;
    bool placed = false;
    for (; next < limit; ++next) {
      if (layers[next].try_add(a, b)) {
        placed = true;
        break;
      }
    }
    if (placed) {
      choice[pos] = next;
      assign[e] = next;
      opened[pos + 1] = std::max(opened[pos], next + 1);
      if (!slack(pos + 1)) continue;  // retry this position with next layer
      ++pos;
      if (pos < m) choice[pos] = -1;
    } else {
      choice[pos] = -1;
      --pos;
    }
  }
  res.exhausted = true;
  return res;
}


struct RestartOptions {
  Deadline deadline;
  /// Node cap of each randomized try.
  std::int64_t nodes_per_try = 3000;
  std::uint64_t seed = 1;
  /// 0 = keep trying until the deadline.
  int max_tries = 0;
};

/// Randomized restarts of `search_partition`: each try relabels the vertices
/// and shuffles the edge order, with a small node cap. The first try uses
/// the plain breadth-first order. A try that exhausts its space proves that
/// no partition exists.
inline PartitionSearchResult search_partition_restarts(
    int n, const std::vector<std::pair<int, int>>& pairs, int k, LayerClass cls,
    const RestartOptions& opt = {}) {
  PartitionSearchResult total;
  std::mt19937_64 rng(opt.seed);
  std::vector<int> perm(n);
  for (int t = 0; opt.max_tries == 0 || t < opt.max_tries; ++t) {
    if (opt.deadline.expired()) {
      total.timed_out = true;
      return total;
    }
    PartitionSearchOptions o;
    o.deadline = opt.deadline;
    o.max_nodes = opt.nodes_per_try;
    std::vector<std::pair<int, int>> relabeled = pairs;
    if (t > 0) {
      std::iota(perm.begin(), perm.end(), 0);
      std::shuffle(perm.begin(), perm.end(), rng);
      for (auto& [a, b] : relabeled) {
        a = perm[a];
        b = perm[b];
      }
      o.order.resize(pairs.size());
      std::iota(o.order.begin(), o.order.end(), 0);
      std::shuffle(o.order.begin(), o.order.end(), rng);
    }
    auto r = search_partition(n, relabeled, k, cls, o);
    total.nodes += r.nodes;
    if (r.assignment || r.exhausted) {
      total.assignment = std::move(r.assignment);
      total.exhausted = r.exhausted;
      return total;
    }
  }
  total.timed_out = true;
  return total;
}

}  // namespace thickness

#endif  // THICKNESS_PARTITION_SEARCH_HPP
