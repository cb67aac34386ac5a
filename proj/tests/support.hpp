#pragma once

// Fixtures and brute-force reference implementations. The oracles only use
// the arc list of a HyperDigraph and `precedes`; they never call the search
// core, so agreement with the library is a real cross-check.

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <utility>
#include <vector>

#include "hypertour/hypertour.hpp"

namespace hypertour::testing {

inline HyperTournament h4() { return build_hypertournament(3, 4, {{1, 2, 3}, {2, 4, 1}, {3, 4, 1}, {2, 3, 4}}); }

/// Every 3-subset of {1..4} oriented ascending.
inline HyperTournament h_asc() { return build_hypertournament(3, 4, {{1, 2, 3}, {1, 2, 4}, {1, 3, 4}, {2, 3, 4}}); }

inline HyperTournament three_cycle() { return build_hypertournament(2, 3, {{1, 2}, {2, 3}, {3, 1}}); }

inline HyperTournament transitive(int n) {
  std::vector<std::vector<VertexId>> arcs;
  for (VertexId u = 1; u <= n; ++u) {
    for (VertexId v = u + 1; v <= n; ++v) arcs.push_back({u, v});
  }
  return build_hypertournament(2, n, arcs);
}

inline HyperDigraph empty_hyperdigraph(int k, int n) { return HyperDigraph::build(k, n, {}); }

// ---------------------------------------------------------------- oracles

using PairSet = std::set<std::pair<VertexId, VertexId>>;

/// All ordered pairs (u, v) with u before v in some arc.
inline PairSet oracle_closure_pairs(const HyperDigraph& h) {
  PairSet out;
  for (const HyperArc& a : h.arcs()) {
    const auto& s = a.seq();
    for (std::size_t i = 0; i < s.size(); ++i) {
      for (std::size_t j = i + 1; j < s.size(); ++j) out.emplace(s[i], s[j]);
    }
  }
  return out;
}

/// Every hyperpath of H, found by branching on both the next vertex and the
/// arc used for the hop. Visitor gets (vertices, arc indices).
inline void oracle_for_each_path(const HyperDigraph& h,
                                 const std::function<void(const std::vector<VertexId>&, const std::vector<std::size_t>&)>& visit) {
  const int n = h.n();
  std::vector<VertexId> vs;
  std::vector<std::size_t> used;
  std::function<void()> grow = [&] {
    visit(vs, used);
    const VertexId last = vs.back();
    for (VertexId w = 1; w <= n; ++w) {
      if (std::find(vs.begin(), vs.end(), w) != vs.end()) continue;
      for (std::size_t a = 0; a < h.size(); ++a) {
        if (std::find(used.begin(), used.end(), a) != used.end()) continue;
        if (!precedes(h.arc(a), last, w)) continue;
        vs.push_back(w);
        used.push_back(a);
        grow();
        vs.pop_back();
        used.pop_back();
      }
    }
  };
  for (VertexId s = 1; s <= n; ++s) {
    vs = {s};
    used.clear();
    grow();
  }
}

/// dist[u][v] = fewest hops of a hyperpath u -> v, or -1.
inline std::vector<std::vector<int>> oracle_distances(const HyperDigraph& h) {
  const int n = h.n();
  std::vector<std::vector<int>> dist(static_cast<std::size_t>(n) + 1, std::vector<int>(static_cast<std::size_t>(n) + 1, -1));
  oracle_for_each_path(h, [&](const std::vector<VertexId>& vs, const std::vector<std::size_t>&) {
    int& d = dist[vs.front()][vs.back()];
    const int len = static_cast<int>(vs.size()) - 1;
    if (len > 0 && (d < 0 || len < d)) d = len;
  });
  return dist;
}

inline bool oracle_strong(const HyperDigraph& h) {
  const auto dist = oracle_distances(h);
  for (VertexId u = 1; u <= h.n(); ++u) {
    for (VertexId v = 1; v <= h.n(); ++v) {
      if (u != v && dist[u][v] < 0) return false;
    }
  }
  return true;
}

inline std::vector<VertexId> oracle_kings(const HyperDigraph& h) {
  const auto dist = oracle_distances(h);
  std::vector<VertexId> out;
  for (VertexId u = 1; u <= h.n(); ++u) {
    bool king = true;
    for (VertexId v = 1; v <= h.n(); ++v) {
      if (u != v && (dist[u][v] < 0 || dist[u][v] > 2)) king = false;
    }
    if (king) out.push_back(u);
  }
  return out;
}

/// Set of vertex sets that some hyperpath spans exactly.
inline std::set<VertexSet> oracle_path_sets(const HyperDigraph& h) {
  std::set<VertexSet> out;
  oracle_for_each_path(h, [&](const std::vector<VertexId>& vs, const std::vector<std::size_t>&) {
    VertexSet s = 0;
    for (VertexId v : vs) s |= bit_of(v);
    out.insert(s);
  });
  return out;
}

/// Lengths l for which a hypercycle of length l passes through `v`.
inline std::set<int> oracle_cycle_lengths_through(const HyperDigraph& h, VertexId v) {
  std::set<int> out;
  oracle_for_each_path(h, [&](const std::vector<VertexId>& vs, const std::vector<std::size_t>& used) {
    if (vs.size() < 2 || vs.front() != v) return;
    for (std::size_t a = 0; a < h.size(); ++a) {
      if (std::find(used.begin(), used.end(), a) != used.end()) continue;
      if (precedes(h.arc(a), vs.back(), v)) {
        out.insert(static_cast<int>(vs.size()));
        break;
      }
    }
  });
  return out;
}

inline bool oracle_has_hamiltonian_cycle(const HyperDigraph& h) {
  return oracle_cycle_lengths_through(h, 1).count(h.n()) > 0;
}

/// Independence number by trying every subset.
template <typename IsEdgeInside>
int oracle_alpha(int n, IsEdgeInside&& spans_edge) {
  int best = 0;
  for (VertexSet s = 0; s < (VertexSet{1} << n); ++s) {
    if (!spans_edge(s)) best = std::max(best, popcount(s));
  }
  return best;
}

inline int oracle_alpha(const HyperDigraph& h) {
  return oracle_alpha(h.n(), [&](VertexSet s) {
    for (const HyperArc& a : h.arcs()) {
      if ((a.mask() & s) == a.mask()) return true;
    }
    return false;
  });
}

inline int oracle_alpha(const PairSet& arcs, int n) {
  return oracle_alpha(n, [&](VertexSet s) {
    for (const auto& [u, v] : arcs) {
      if (contains(s, u) && contains(s, v)) return true;
    }
    return false;
  });
}

/// Fewest parts when `remaining` is split into sets accepted by `pathable`.
inline int oracle_min_parts(VertexSet remaining, const std::function<bool(VertexSet)>& pathable) {
  if (remaining == 0) return 0;
  const VertexSet low = remaining & (~remaining + 1);
  int best = 1 << 20;
  const VertexSet rest = remaining & ~low;
  for (VertexSet t = rest;; t = (t - 1) & rest) {
    if (pathable(t | low)) best = std::min(best, 1 + oracle_min_parts(remaining & ~(t | low), pathable));
    if (t == 0) break;
  }
  return best;
}

inline int oracle_path_cover(const HyperDigraph& h) {
  const auto sets = oracle_path_sets(h);
  return oracle_min_parts(full_set(h.n()), [&](VertexSet s) { return sets.count(s) > 0; });
}

/// Path cover number of a digraph by trying every vertex ordering of every part.
inline int oracle_path_cover(const PairSet& arcs, int n) {
  auto pathable = [&](VertexSet s) {
    std::vector<VertexId> vs = members(s);
    do {
      bool ok = true;
      for (std::size_t i = 0; i + 1 < vs.size() && ok; ++i) ok = arcs.count({vs[i], vs[i + 1]}) > 0;
      if (ok) return true;
    } while (std::next_permutation(vs.begin(), vs.end()));
    return false;
  };
  return oracle_min_parts(full_set(n), pathable);
}

/// Can each oriented pair get its own generating hyperarc? Plain backtracking.
inline bool oracle_distinct_generators(const HyperDigraph& h, const std::vector<std::pair<VertexId, VertexId>>& arcs) {
  std::vector<bool> taken(h.size(), false);
  std::function<bool(std::size_t)> assign = [&](std::size_t i) {
    if (i == arcs.size()) return true;
    for (std::size_t a = 0; a < h.size(); ++a) {
      if (taken[a] || !precedes(h.arc(a), arcs[i].first, arcs[i].second)) continue;
      taken[a] = true;
      if (assign(i + 1)) return true;
      taken[a] = false;
    }
    return false;
  };
  return assign(0);
}

/// Every tournament in T_H (as sorted arc lists), by trying all orientations.
inline std::set<std::vector<std::pair<VertexId, VertexId>>> oracle_members(const HyperDigraph& h) {
  const int n = h.n();
  std::vector<std::pair<VertexId, VertexId>> pairs;
  for (VertexId u = 1; u <= n; ++u) {
    for (VertexId v = u + 1; v <= n; ++v) pairs.emplace_back(u, v);
  }
  std::set<std::vector<std::pair<VertexId, VertexId>>> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs.size()); ++mask) {
    std::vector<std::pair<VertexId, VertexId>> arcs;
    for (std::size_t i = 0; i < pairs.size(); ++i) {
      arcs.push_back((mask >> i) & 1 ? std::pair(pairs[i].second, pairs[i].first) : pairs[i]);
    }
    if (oracle_distinct_generators(h, arcs)) {
      std::sort(arcs.begin(), arcs.end());
      out.insert(arcs);
    }
  }
  return out;
}

/// Distinct tournaments obtained from perfect matchings of the pair/arc
/// incidence graph (sides must have equal size).
inline std::set<std::vector<std::pair<VertexId, VertexId>>> oracle_perfect_matching_orientations(
    const HyperDigraph& h, std::uint64_t* matchings = nullptr) {
  const int n = h.n();
  std::vector<VertexSet> pairs;
  for (VertexId u = 1; u <= n; ++u) {
    for (VertexId v = u + 1; v <= n; ++v) pairs.push_back(bit_of(u) | bit_of(v));
  }
  std::set<std::vector<std::pair<VertexId, VertexId>>> out;
  std::uint64_t count = 0;
  std::vector<std::size_t> chosen(pairs.size());
  std::vector<bool> taken(h.size(), false);
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == pairs.size()) {
      ++count;
      std::vector<std::pair<VertexId, VertexId>> arcs;
      for (std::size_t j = 0; j < pairs.size(); ++j) {
        const auto uv = members(pairs[j]);
        const HyperArc& a = h.arc(chosen[j]);
        arcs.push_back(precedes(a, uv[0], uv[1]) ? std::pair(uv[0], uv[1]) : std::pair(uv[1], uv[0]));
      }
      std::sort(arcs.begin(), arcs.end());
      out.insert(arcs);
      return;
    }
    for (std::size_t a = 0; a < h.size(); ++a) {
      if (taken[a] || (h.arc(a).mask() & pairs[i]) != pairs[i]) continue;
      taken[a] = true;
      chosen[i] = a;
      rec(i + 1);
      taken[a] = false;
    }
  };
  rec(0);
  if (matchings) *matchings = count;
  return out;
}

inline bool oracle_tournament_strong(int n, const std::vector<std::pair<VertexId, VertexId>>& arcs) {
  std::vector<std::vector<bool>> r(static_cast<std::size_t>(n) + 1, std::vector<bool>(static_cast<std::size_t>(n) + 1, false));
  for (VertexId v = 1; v <= n; ++v) r[v][v] = true;
  for (const auto& [u, v] : arcs) r[u][v] = true;
  for (VertexId m = 1; m <= n; ++m) {
    for (VertexId u = 1; u <= n; ++u) {
      for (VertexId v = 1; v <= n; ++v) {
        if (r[u][m] && r[m][v]) r[u][v] = true;
      }
    }
  }
  for (VertexId u = 1; u <= n; ++u) {
    for (VertexId v = 1; v <= n; ++v) {
      if (!r[u][v]) return false;
    }
  }
  return true;
}

}  // namespace hypertour::testing
