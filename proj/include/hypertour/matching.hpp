#pragma once

#include <cstddef>
#include <limits>
#include <queue>
#include <vector>

namespace hypertour {

/// Bipartite graph with sides indexed 0..left-1 and 0..right-1.
struct BipartiteGraph {
  int left = 0;
  int right = 0;
  std::vector<std::vector<int>> adj;  // per left vertex, right neighbours

  BipartiteGraph() = default;
  BipartiteGraph(int l, int r) : left(l), right(r), adj(static_cast<std::size_t>(l)) {}

  void add_edge(int u, int v) { adj[static_cast<std::size_t>(u)].push_back(v); }
};

struct Matching {
  std::vector<int> mate_left;   // right partner or -1
  std::vector<int> mate_right;  // left partner or -1
  int size = 0;

  bool covers_left() const { return size == static_cast<int>(mate_left.size()); }
};

// Hopcroft-Karp. Left vertices and adjacency lists are scanned in the order
// given, so the result is a pure function of the input.
class HopcroftKarp {
 public:
  explicit HopcroftKarp(const BipartiteGraph& g) : g_(g) {}

  Matching run() {
    Matching m;
    m.mate_left.assign(static_cast<std::size_t>(g_.left), -1);
    m.mate_right.assign(static_cast<std::size_t>(g_.right), -1);
    dist_.assign(static_cast<std::size_t>(g_.left), 0);
    while (layer(m)) {
      it_.assign(static_cast<std::size_t>(g_.left), 0);
      for (int u = 0; u < g_.left; ++u) {
        if (m.mate_left[u] < 0 && augment(m, u)) ++m.size;
      }
    }
    return m;
  }

 private:
  static constexpr int kInf = std::numeric_limits<int>::max();

  bool layer(const Matching& m) {
    std::queue<int> q;
    for (int u = 0; u < g_.left; ++u) {
      if (m.mate_left[u] < 0) {
        dist_[u] = 0;
        q.push(u);
      } else {
        dist_[u] = kInf;
      }
    }
    bool found = false;
    while (!q.empty()) {
      const int u = q.front();
      q.pop();
      for (int v : g_.adj[u]) {
        const int w = m.mate_right[v];
        if (w < 0) {
          found = true;
        } else if (dist_[w] == kInf) {
          dist_[w] = dist_[u] + 1;
          q.push(w);
        }
      }
    }
    return found;
  }

  bool augment(Matching& m, int u) {
    auto& adj = g_.adj[u];
    for (std::size_t& i = it_[u]; i < adj.size(); ++i) {
      const int v = adj[i];
      const int w = m.mate_right[v];
      if (w < 0 || (dist_[w] == dist_[u] + 1 && augment(m, w))) {
        m.mate_left[u] = v;
        m.mate_right[v] = u;
        ++i;
        return true;
      }
    }
    dist_[u] = kInf;
    return false;
  }

  const BipartiteGraph& g_;
  std::vector<int> dist_;
  std::vector<std::size_t> it_;
};

inline Matching maximum_matching(const BipartiteGraph& g) { return HopcroftKarp(g).run(); }

}  // namespace hypertour
