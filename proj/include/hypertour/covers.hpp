#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "hypertour/connectivity.hpp"

namespace hypertour {

/// Limits for the exhaustive procedures below.
struct ExhaustiveBounds {
  int max_vertices = 16;
  std::uint64_t node_budget = 50'000'000;
};

struct IndependentSet {
  int size = 0;
  VertexSet members = 0;
};

/// Vertex-disjoint hyperpaths covering V(H); single vertices count as paths.
/// Arcs must be distinct within a path but may recur across paths.
struct PathCover {
  std::vector<HyperPath> paths;

  int size() const noexcept { return static_cast<int>(paths.size()); }
};

namespace detail {

inline void check_bounds(int n, const ExhaustiveBounds& bounds) {
  if (n > bounds.max_vertices) {
    fail(ErrorKind::kBudgetExceeded, std::to_string(n) + " vertices exceed the exhaustive bound of " +
                                         std::to_string(bounds.max_vertices));
  }
}

/// Branch and bound for the largest vertex set containing none of `edges`
/// (each given as a vertex mask).
inline IndependentSet max_independent(int n, const std::vector<VertexSet>& edges) {
  // by_top[v]: edges whose highest vertex is v
  std::vector<std::vector<VertexSet>> by_top(static_cast<std::size_t>(n) + 1);
  for (VertexSet e : edges) by_top[static_cast<std::size_t>(64 - std::countl_zero(e))].push_back(e);

  IndependentSet best;
  auto go = [&](auto&& self, VertexId v, VertexSet chosen) -> void {
    const int size = popcount(chosen);
    if (size + (n - v + 1) <= best.size) return;
    if (v > n) {
      best = {size, chosen};
      return;
    }
    const VertexSet with = chosen | bit_of(v);
    bool ok = true;
    for (VertexSet e : by_top[static_cast<std::size_t>(v)]) {
      if ((e & with) == e) {
        ok = false;
        break;
      }
    }
    if (ok) self(self, v + 1, with);
    self(self, v + 1, chosen);
  };
  go(go, 1, 0);
  return best;
}

/// cover[S] = fewest pathable sets partitioning S, where pathable(T) says
/// whether T is the vertex set of a single path. Returns the parts for V.
template <typename Pathable>
std::vector<VertexSet> min_partition(int n, Pathable&& pathable) {
  const std::size_t total = std::size_t{1} << n;
  constexpr int kInf = std::numeric_limits<int>::max() / 2;
  std::vector<int> cost(total, kInf);
  std::vector<VertexSet> pick(total, 0);
  cost[0] = 0;
  for (std::size_t s = 1; s < total; ++s) {
    const VertexSet low = VertexSet{1} << std::countr_zero(s);
    const VertexSet rest = s & ~low;
    // enumerate subsets t of rest; part = t | low
    for (VertexSet t = rest;; t = (t - 1) & rest) {
      const VertexSet part = t | low;
      if (pathable(part) && cost[s & ~part] + 1 < cost[s]) {
        cost[s] = cost[s & ~part] + 1;
        pick[s] = part;
      }
      if (t == 0) break;
    }
  }
  std::vector<VertexSet> parts;
  for (VertexSet s = total - 1; s != 0; s &= ~pick[s]) parts.push_back(pick[s]);
  return parts;
}

}  // namespace detail

/// Largest vertex set inducing no hyperarc.
inline IndependentSet independence_number(const HyperDigraph& h, const ExhaustiveBounds& bounds = {}) {
  detail::check_bounds(h.n(), bounds);
  std::vector<VertexSet> edges;
  edges.reserve(h.size());
  for (const HyperArc& a : h.arcs()) edges.push_back(a.mask());
  return detail::max_independent(h.n(), edges);
}

/// Largest vertex set spanning no arc (in either direction).
inline IndependentSet independence_number(const Digraph& d, const ExhaustiveBounds& bounds = {}) {
  detail::check_bounds(d.n(), bounds);
  std::vector<VertexSet> edges;
  for (const auto& [u, v] : d.arcs()) edges.push_back(bit_of(u) | bit_of(v));
  return detail::max_independent(d.n(), edges);
}

inline bool is_independent(const HyperDigraph& h, VertexSet s) {
  for (const HyperArc& a : h.arcs()) {
    if ((a.mask() & s) == a.mask()) return false;
  }
  return true;
}

inline bool is_independent(const Digraph& d, VertexSet s) {
  for (VertexId u : members(s)) {
    if ((d.out(u) & s) != 0) return false;
  }
  return true;
}

/// Minimum path cover by enumerating every hyperpath (distinct arcs enforced
/// by the search core), then partitioning V by dynamic programming.
inline PathCover min_path_cover(const HyperDigraph& h, const ExhaustiveBounds& bounds = {}) {
  detail::check_bounds(h.n(), bounds);
  const int n = h.n();
  PathCover cover;
  if (n == 0) return cover;
  const VertexSet all = full_set(n);
  std::vector<std::optional<Walk>> witness(std::size_t{1} << n);
  const HopIndex index(h);
  WalkSearch search(index, bounds.node_budget);
  search.for_each_path(all, [&](const Walk& w) {
    const VertexSet s = to_set(w.vertices);
    if (!witness[s]) witness[s] = w;
    return s != all;
  });
  for (VertexSet part : detail::min_partition(n, [&](VertexSet s) { return witness[s].has_value(); })) {
    cover.paths.push_back(to_path(h, *witness[part]));
  }
  return cover;
}

/// Minimum path cover of a digraph via the subset/endpoint dynamic program:
/// ends[S] holds every v such that some path spans exactly S and ends at v.
inline std::vector<std::vector<VertexId>> min_path_cover(const Digraph& d, const ExhaustiveBounds& bounds = {}) {
  detail::check_bounds(d.n(), bounds);
  const int n = d.n();
  if (n == 0) return {};
  const std::size_t total = std::size_t{1} << n;
  std::vector<VertexSet> ends(total, 0);
  for (VertexId v = 1; v <= n; ++v) ends[bit_of(v)] = bit_of(v);
  for (std::size_t s = 1; s < total; ++s) {
    for (VertexId v : members(ends[s])) {
      VertexSet next = d.out(v) & ~static_cast<VertexSet>(s);
      for (VertexId w : members(next)) ends[s | bit_of(w)] |= bit_of(w);
    }
  }
  std::vector<std::vector<VertexId>> paths;
  for (VertexSet part : detail::min_partition(n, [&](VertexSet s) { return ends[s] != 0; })) {
    std::vector<VertexId> rev;
    VertexSet s = part;
    VertexId cur = lowest(ends[s]);
    while (true) {
      rev.push_back(cur);
      const VertexSet before = s & ~bit_of(cur);
      if (before == 0) break;
      VertexId prev = 0;
      for (VertexId u : members(ends[before] & d.in(cur))) {
        prev = u;
        break;
      }
      s = before;
      cur = prev;
    }
    paths.emplace_back(rev.rbegin(), rev.rend());
  }
  return paths;
}

struct CoverReport {
  GeneratedArcRule rule = GeneratedArcRule::kLeadingPair;
  Digraph generated;
  int pc_h = 0;
  int pc_d = 0;
  int alpha_d = 0;
  int alpha_h = 0;
  PathCover cover_h;
  std::vector<std::vector<VertexId>> cover_d;
  VertexSet independent_d = 0;
  VertexSet independent_h = 0;
  /// The D-cover lifted path by path into H (complete only if lift_failures == 0).
  PathCover lifted_cover;
  int lift_fallbacks = 0;
  int lift_failures = 0;

  bool chain_holds() const { return pc_h <= pc_d && pc_d <= alpha_d && alpha_d <= alpha_h; }
};

/// Lifts a vertex sequence of D into H: first by matching hops to distinct
/// generating hyperarcs, then by exhaustive search for any hyperpath with the
/// same endpoints and vertex set.
inline std::optional<HyperPath> lift_path(const HyperDigraph& h, const HopIndex& index,
                                          const std::vector<VertexId>& d_path, bool* used_fallback = nullptr) {
  if (used_fallback) *used_fallback = false;
  if (d_path.size() == 1) return HyperPath{d_path, {}};
  HopMatcher matcher(index);
  bool direct = true;
  for (std::size_t i = 0; i + 1 < d_path.size() && direct; ++i) direct = matcher.push(d_path[i], d_path[i + 1]);
  if (direct) return to_path(h, Walk{d_path, matcher.assignment()});
  if (used_fallback) *used_fallback = true;
  WalkSearch search(index);
  const auto w = search.path(d_path.front(), d_path.back(), static_cast<int>(d_path.size()) - 1, to_set(d_path));
  if (!w) return std::nullopt;
  return to_path(h, *w);
}

/// pc(H), pc(D), alpha(D), alpha(H) for the digraph D generated by H under
/// `rule`, each computed exactly with a witness.
inline CoverReport gallai_milgram_chain(const HyperDigraph& h,
                                        GeneratedArcRule rule = GeneratedArcRule::kLeadingPair,
                                        const ExhaustiveBounds& bounds = {}) {
  detail::check_bounds(h.n(), bounds);
  CoverReport r;
  r.rule = rule;
  r.generated = generated_digraph(h, rule);
  r.cover_h = min_path_cover(h, bounds);
  r.pc_h = r.cover_h.size();
  r.cover_d = min_path_cover(r.generated, bounds);
  r.pc_d = static_cast<int>(r.cover_d.size());
  const IndependentSet ind_d = independence_number(r.generated, bounds);
  const IndependentSet ind_h = independence_number(h, bounds);
  r.alpha_d = ind_d.size;
  r.independent_d = ind_d.members;
  r.alpha_h = ind_h.size;
  r.independent_h = ind_h.members;

  const HopIndex index(h);
  for (const auto& p : r.cover_d) {
    bool fallback = false;
    auto lifted = lift_path(h, index, p, &fallback);
    r.lift_fallbacks += fallback ? 1 : 0;
    if (lifted) {
      r.lifted_cover.paths.push_back(std::move(*lifted));
    } else {
      ++r.lift_failures;
    }
  }
  if (rule == GeneratedArcRule::kLeadingPair && r.lift_failures > 0) {
    fail(ErrorKind::kInternalGuaranteeViolated, "a path of the generated digraph does not lift into H");
  }
  return r;
}

}  // namespace hypertour
