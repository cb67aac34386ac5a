#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "hypertour/hypercore.hpp"
#include "hypertour/search.hpp"

namespace hypertour {

/// x_1 a_1 x_2 ... a_m x_{m+1}: distinct vertices, distinct arcs, and
/// x_i preceding x_{i+1} in a_i.
struct HyperPath {
  std::vector<VertexId> vertices;
  std::vector<HyperArc> arcs;

  int length() const noexcept { return static_cast<int>(arcs.size()); }
  VertexId front() const { return vertices.front(); }
  VertexId back() const { return vertices.back(); }
  friend bool operator==(const HyperPath&, const HyperPath&) = default;
};

/// Like HyperPath, with a_m leading from x_m back to x_1. `vertices` does not
/// repeat the first vertex, so vertices.size() == arcs.size().
struct HyperCycle {
  std::vector<VertexId> vertices;
  std::vector<HyperArc> arcs;

  int length() const noexcept { return static_cast<int>(arcs.size()); }
  friend bool operator==(const HyperCycle&, const HyperCycle&) = default;
};

namespace detail {

inline bool distinct_vertices(const std::vector<VertexId>& vs) {
  VertexSet seen = 0;
  for (VertexId v : vs) {
    if (v < 1 || v > kMaxVertices || contains(seen, v)) return false;
    seen |= bit_of(v);
  }
  return true;
}

inline bool distinct_arcs(const std::vector<HyperArc>& arcs) {
  for (std::size_t i = 0; i < arcs.size(); ++i) {
    for (std::size_t j = i + 1; j < arcs.size(); ++j) {
      if (arcs[i].mask() == arcs[j].mask()) return false;
    }
  }
  return true;
}

inline bool arc_belongs(const HyperDigraph& h, const HyperArc& a) {
  if (a.arity() != h.k()) return false;
  const auto idx = h.index_of(a.mask());
  return idx && h.arc(*idx) == a;
}

}  // namespace detail

/// Checks the path definition using nothing but precedes(); when `owner` is
/// given every arc must also be an arc of it.
inline bool is_valid_path(const HyperPath& p, const HyperDigraph* owner = nullptr) {
  if (p.vertices.size() != p.arcs.size() + 1) return false;
  if (!detail::distinct_vertices(p.vertices) || !detail::distinct_arcs(p.arcs)) return false;
  for (std::size_t i = 0; i < p.arcs.size(); ++i) {
    if (!precedes(p.arcs[i], p.vertices[i], p.vertices[i + 1])) return false;
    if (owner != nullptr && !detail::arc_belongs(*owner, p.arcs[i])) return false;
  }
  if (owner != nullptr) {
    for (VertexId v : p.vertices) {
      if (v > owner->n()) return false;
    }
  }
  return true;
}

inline bool is_valid_cycle(const HyperCycle& c, const HyperDigraph* owner = nullptr) {
  const std::size_t m = c.vertices.size();
  if (m < 2 || c.arcs.size() != m) return false;
  if (!detail::distinct_vertices(c.vertices) || !detail::distinct_arcs(c.arcs)) return false;
  for (std::size_t i = 0; i < m; ++i) {
    if (!precedes(c.arcs[i], c.vertices[i], c.vertices[(i + 1) % m])) return false;
    if (owner != nullptr && !detail::arc_belongs(*owner, c.arcs[i])) return false;
  }
  if (owner != nullptr) {
    for (VertexId v : c.vertices) {
      if (v > owner->n()) return false;
    }
  }
  return true;
}

inline HyperPath to_path(const HyperDigraph& h, const Walk& w) {
  HyperPath p;
  p.vertices = w.vertices;
  for (std::uint32_t id : w.arcs) p.arcs.push_back(h.arc(id));
  return p;
}

inline HyperCycle to_cycle(const HyperDigraph& h, const Walk& w) {
  HyperCycle c;
  c.vertices = w.vertices;
  for (std::uint32_t id : w.arcs) c.arcs.push_back(h.arc(id));
  return c;
}

namespace detail {

inline void check_pair(const HyperDigraph& h, VertexId u, VertexId v) {
  if (u < 1 || u > h.n() || v < 1 || v > h.n()) fail(ErrorKind::kBadTuple, "vertex out of range");
  if (u == v) fail(ErrorKind::kBadTuple, "path endpoints must differ");
}

/// Shortest realisable walk u -> v of at most max_len hops (iterative
/// deepening over exact lengths).
inline std::optional<Walk> shortest_walk(const HopIndex& index, VertexId u, VertexId v, int max_len) {
  const int n = index.n();
  const VertexSet all = full_set(n);
  if (!contains(reachable_within(index.reach(), u, all), v)) return std::nullopt;
  WalkSearch search(index);
  for (int len = 1; len <= std::min(max_len, n - 1); ++len) {
    if (auto w = search.path(u, v, len, all)) return w;
  }
  return std::nullopt;
}

}  // namespace detail

/// A shortest hyperpath from u to v of length at most max_len (unbounded when
/// absent).
inline std::optional<HyperPath> find_path(const HyperDigraph& h, VertexId u, VertexId v,
                                          std::optional<int> max_len = std::nullopt) {
  detail::check_pair(h, u, v);
  const HopIndex index(h);
  auto w = detail::shortest_walk(index, u, v, max_len.value_or(h.n()));
  if (!w) return std::nullopt;
  return to_path(h, *w);
}

inline bool is_strong(const HopIndex& index) {
  const int n = index.n();
  if (n < 2) return true;
  if (!is_strongly_connected(index.reach())) return false;
  for (VertexId u = 1; u <= n; ++u) {
    for (VertexId v = 1; v <= n; ++v) {
      if (u == v || index.reach().has_arc(u, v)) continue;
      if (!detail::shortest_walk(index, u, v, n)) return false;
    }
  }
  return true;
}

inline bool is_strong(const HyperDigraph& h) { return is_strong(HopIndex(h)); }

inline std::vector<VertexId> two_kings(const HopIndex& index) {
  const int n = index.n();
  const VertexSet all = full_set(n);
  std::vector<VertexId> kings;
  WalkSearch search(index);
  for (VertexId u = 1; u <= n; ++u) {
    bool king = true;
    for (VertexId v = 1; v <= n && king; ++v) {
      if (u == v || index.reach().has_arc(u, v)) continue;
      king = search.path(u, v, 2, all).has_value();
    }
    if (king) kings.push_back(u);
  }
  return kings;
}

/// Vertices reaching every other vertex by a hyperpath of length <= 2.
inline std::vector<VertexId> two_kings(const HyperDigraph& h) { return two_kings(HopIndex(h)); }

/// First strong instance among random_tournament(k, n, derive_seed(seed, j))
/// for j = 0, 1, ...
inline HyperTournament random_strong_tournament(int k, int n, std::uint64_t seed,
                                                int max_attempts = 100000) {
  for (int j = 0; j < max_attempts; ++j) {
    HyperTournament h = random_tournament(k, n, derive_seed(seed, static_cast<std::uint64_t>(j)));
    if (is_strong(h)) return h;
  }
  fail(ErrorKind::kBudgetExceeded, "no strong " + std::to_string(k) + "-tournament on " +
                                       std::to_string(n) + " vertices within the attempt budget");
}

}  // namespace hypertour
