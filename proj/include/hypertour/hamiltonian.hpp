#pragma once

#include <optional>
#include <string>

#include "hypertour/connectivity.hpp"

namespace hypertour {

// Every k-tournament (k >= 3) on n >= k + 1 vertices has a Hamiltonian path,
// and every strong one on n >= k + 2 vertices a Hamiltonian cycle. For k = 2
// these are Redei's and Camion's theorems. The searches below are complete,
// so a miss inside those ranges means a bug, not a hard instance.

inline bool hamiltonian_path_guaranteed(int k, int n) { return k == 2 || n >= k + 1; }

inline bool hamiltonian_cycle_guaranteed(int k, int n) {
  return (k == 2 && n >= 3) || (k >= 3 && n >= k + 2);
}

namespace detail {

inline std::optional<Walk> hamiltonian_walk(const HopIndex& index) {
  const int n = index.n();
  const VertexSet all = full_set(n);
  WalkSearch search(index);
  for (VertexId s = 1; s <= n; ++s) {
    if (auto w = search.open_path(s, n - 1, all)) return w;
  }
  return std::nullopt;
}

}  // namespace detail

/// Complete search on any hyperdigraph.
inline std::optional<HyperPath> find_hamiltonian_path(const HyperDigraph& h) {
  if (h.n() == 0) return std::nullopt;
  auto w = detail::hamiltonian_walk(HopIndex(h));
  if (!w) return std::nullopt;
  return to_path(h, *w);
}

inline HyperPath hamiltonian_path(const HyperTournament& h) {
  if (auto p = find_hamiltonian_path(h)) return *p;
  if (hamiltonian_path_guaranteed(h.k(), h.n())) {
    fail(ErrorKind::kInternalGuaranteeViolated,
         "no Hamiltonian path in a " + std::to_string(h.k()) + "-tournament on " +
             std::to_string(h.n()) + " vertices");
  }
  fail(ErrorKind::kRangeUnsupported, "n < k + 1 and no Hamiltonian path exists");
}

inline std::optional<HyperCycle> hamiltonian_cycle(const HopIndex& index, const HyperDigraph& h) {
  const int n = h.n();
  if (n < 2 || !is_strong(index)) return std::nullopt;
  WalkSearch search(index);
  if (auto w = search.cycle(1, n, full_set(n))) return to_cycle(h, *w);
  if (h.is_tournament() && hamiltonian_cycle_guaranteed(h.k(), n)) {
    fail(ErrorKind::kInternalGuaranteeViolated,
         "strong " + std::to_string(h.k()) + "-tournament on " + std::to_string(n) +
             " vertices without a Hamiltonian cycle");
  }
  return std::nullopt;
}

/// The first Hamiltonian cycle in canonical search order, starting at vertex 1.
inline std::optional<HyperCycle> hamiltonian_cycle(const HyperDigraph& h) {
  return hamiltonian_cycle(HopIndex(h), h);
}

}  // namespace hypertour
