#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "hypertour/connectivity.hpp"

namespace hypertour {

/// A cycle must pass through this vertex, or use this hyperarc for a hop.
using CycleAnchor = std::variant<VertexId, HyperArc>;

namespace detail {

inline void check_length(const HyperDigraph& h, int l) {
  if (l < 3 || l > h.n()) {
    fail(ErrorKind::kBadTuple, "cycle length " + std::to_string(l) + " outside [3, " + std::to_string(h.n()) + "]");
  }
}

inline std::optional<Walk> anchored_walk(const HyperDigraph& h, const HopIndex& index, const CycleAnchor& anchor,
                                         int l) {
  WalkSearch search(index);
  const VertexSet all = full_set(h.n());
  if (const auto* v = std::get_if<VertexId>(&anchor)) {
    if (*v < 1 || *v > h.n()) fail(ErrorKind::kBadTuple, "anchor vertex out of range");
    return search.cycle(*v, l, all);
  }
  const HyperArc& a = std::get<HyperArc>(anchor);
  if (!arc_belongs(h, a)) fail(ErrorKind::kBadTuple, "anchor hyperarc is not an arc of H");
  const auto id = static_cast<std::uint32_t>(*h.index_of(a.mask()));
  const auto& s = a.seq();
  for (std::size_t i = 0; i < s.size(); ++i) {
    for (std::size_t j = i + 1; j < s.size(); ++j) {
      if (auto w = search.cycle_with_hop(s[i], s[j], id, l, all)) return w;
    }
  }
  return std::nullopt;
}

}  // namespace detail

/// An l-cycle containing the anchor, or nullopt after a complete search.
inline std::optional<HyperCycle> cycle_through(const HyperDigraph& h, const CycleAnchor& anchor, int l) {
  detail::check_length(h, l);
  auto w = detail::anchored_walk(h, HopIndex(h), anchor, l);
  if (!w) return std::nullopt;
  return to_cycle(h, *w);
}

/// One witnessing cycle per length 3..n, or nullopt if some length is missing.
inline std::optional<std::vector<HyperCycle>> pancyclic_witnesses(const HyperDigraph& h, const CycleAnchor& anchor) {
  const HopIndex index(h);
  std::vector<HyperCycle> out;
  for (int l = 3; l <= h.n(); ++l) {
    auto w = detail::anchored_walk(h, index, anchor, l);
    if (!w) return std::nullopt;
    out.push_back(to_cycle(h, *w));
  }
  return out;
}

/// Every vertex on an l-cycle for every l in 3..n. Each cycle found also
/// settles (v, l) for all of its vertices.
inline bool is_vertex_pancyclic(const HyperDigraph& h) {
  const int n = h.n();
  const HopIndex index(h);
  WalkSearch search(index);
  const VertexSet all = full_set(n);
  for (int l = 3; l <= n; ++l) {
    VertexSet covered = 0;
    for (VertexId v = 1; v <= n; ++v) {
      if (contains(covered, v)) continue;
      const auto w = search.cycle(v, l, all);
      if (!w) return false;
      covered |= to_set(w->vertices);
    }
  }
  return true;
}

/// The hyperarcs of a Hamiltonian cycle C that lie on an l-cycle for every
/// l in 3..n, in the order they occur on C.
inline std::vector<HyperArc> pancyclic_hyperarcs_on_cycle(const HyperDigraph& h, const HyperCycle& c) {
  if (!is_valid_cycle(c, &h) || c.length() != h.n()) {
    fail(ErrorKind::kBadCycle, "expected a Hamiltonian cycle of H");
  }
  const int n = h.n();
  const HopIndex index(h);
  // settled[i][l] : arc i of C already seen on some l-cycle
  std::vector<std::vector<bool>> settled(c.arcs.size(), std::vector<bool>(static_cast<std::size_t>(n) + 1, false));
  auto mark = [&](const Walk& w, int l) {
    for (std::uint32_t id : w.arcs) {
      for (std::size_t i = 0; i < c.arcs.size(); ++i) {
        if (h.arc(id) == c.arcs[i]) settled[i][static_cast<std::size_t>(l)] = true;
      }
    }
  };
  std::vector<HyperArc> out;
  for (std::size_t i = 0; i < c.arcs.size(); ++i) {
    bool pancyclic = true;
    for (int l = 3; l <= n && pancyclic; ++l) {
      if (settled[i][static_cast<std::size_t>(l)]) continue;
      const auto w = detail::anchored_walk(h, index, c.arcs[i], l);
      if (!w) {
        pancyclic = false;
      } else {
        mark(*w, l);
      }
    }
    if (pancyclic) out.push_back(c.arcs[i]);
  }
  return out;
}

}  // namespace hypertour
