#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

#include "hypertour/connectivity.hpp"
#include "hypertour/degenerate.hpp"

namespace hypertour {

struct PairOccurrence {
  PairKey pair;
  int count = 0;          // arcs of C containing both vertices
  bool consecutive = false;
};

namespace detail {

inline std::vector<int> cycle_positions(const HyperCycle& c) {
  std::vector<int> pos(kMaxVertices + 1, -1);
  for (std::size_t i = 0; i < c.vertices.size(); ++i) pos[c.vertices[i]] = static_cast<int>(i);
  return pos;
}

inline int cyclic_distance(int i, int j, int n) {
  const int d = i > j ? i - j : j - i;
  return d < n - d ? d : n - d;
}

}  // namespace detail

/// Occurrence count of every unordered pair of cycle vertices among the
/// hyperarcs of C, in lexicographic pair order.
inline std::vector<PairOccurrence> pair_occurrence_profile(const HyperCycle& c) {
  if (!is_valid_cycle(c)) fail(ErrorKind::kBadCycle, "cycle fails validation");
  const int n = c.length();
  const auto pos = detail::cycle_positions(c);
  auto sorted = c.vertices;
  std::sort(sorted.begin(), sorted.end());
  std::vector<PairOccurrence> out;
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    for (std::size_t j = i + 1; j < sorted.size(); ++j) {
      PairOccurrence occ;
      occ.pair = PairKey(sorted[i], sorted[j]);
      for (const HyperArc& a : c.arcs) {
        if ((a.mask() & occ.pair.mask()) == occ.pair.mask()) ++occ.count;
      }
      occ.consecutive = detail::cyclic_distance(pos[sorted[i]], pos[sorted[j]], n) == 1;
      out.push_back(occ);
    }
  }
  return out;
}

struct CycleBoundsVerdict {
  int k = 0;
  int n = 0;
  int max_count = 0;           // over nonconsecutive pairs
  int pairs_at_four = 0;
  int pairs_at_three = 0;
  int pairs_at_least_three = 0;
  std::vector<std::string> violations;

  bool ok() const noexcept { return violations.empty(); }
};

inline bool cycle_bounds_supported(int k, int n) { return k == 3 || (k == 4 && n == 7); }

/// Instance check of the pair-occurrence bounds on a Hamiltonian cycle of a
/// 3-tournament (any n) or a 4-tournament on 7 vertices.
inline CycleBoundsVerdict check_cycle_bounds(const HyperCycle& c) {
  if (!is_valid_cycle(c)) fail(ErrorKind::kBadCycle, "cycle fails validation");
  CycleBoundsVerdict v;
  v.n = c.length();
  v.k = c.arcs.front().arity();
  if (!cycle_bounds_supported(v.k, v.n)) {
    fail(ErrorKind::kRangeUnsupported, "cycle bounds cover k = 3, or k = 4 with n = 7");
  }
  const auto profile = pair_occurrence_profile(c);
  const auto pos = detail::cycle_positions(c);
  std::vector<const PairOccurrence*> far;
  for (const auto& occ : profile) {
    if (!occ.consecutive) far.push_back(&occ);
  }
  auto flag = [&](const PairOccurrence& occ, const std::string& what) {
    v.violations.push_back(what + " at {" + std::to_string(occ.pair.u) + "," + std::to_string(occ.pair.v) +
                           "} count=" + std::to_string(occ.count));
  };

  if (v.k == 4) {
    for (std::size_t i = 0; i < far.size(); ++i) {
      for (std::size_t j = i + 1; j < far.size(); ++j) {
        const VertexSet both = far[i]->pair.mask() | far[j]->pair.mask();
        int shared = 0;
        for (const HyperArc& a : c.arcs) shared += (a.mask() & both) == both ? 1 : 0;
        v.max_count = std::max(v.max_count, shared);
        if (shared > 4) flag(*far[i], "two nonadjacent pairs share more than four arcs");
      }
    }
    return v;
  }

  for (const auto* occ : far) {
    v.max_count = std::max(v.max_count, occ->count);
    v.pairs_at_four += occ->count == 4 ? 1 : 0;
    v.pairs_at_three += occ->count == 3 ? 1 : 0;
    v.pairs_at_least_three += occ->count >= 3 ? 1 : 0;
    if (occ->count > 4) flag(*occ, "nonconsecutive pair in more than four arcs");
    if (occ->count == 4 && detail::cyclic_distance(pos[occ->pair.u], pos[occ->pair.v], v.n) < 3) {
      flag(*occ, "pair in four arcs at cyclic distance two");
    }
  }
  if (v.n == 8 && v.pairs_at_four > 2) flag(*far.front(), "more than two pairs in four arcs");
  if (v.n == 7) {
    if (v.pairs_at_four > 1) flag(*far.front(), "two pairs in four arcs");
    if (v.pairs_at_least_three > 2) flag(*far.front(), "more than two pairs in at least three arcs");
    if (v.pairs_at_four >= 1 && v.pairs_at_three >= 1) {
      for (const auto* occ : far) {
        if (occ->count == 2) flag(*occ, "other pair above one next to a four and a three");
      }
    }
  }
  return v;
}

struct InequalityCheck {
  bool holds = false;
  std::int64_t lhs = 0;
  std::int64_t rhs = 0;
};

/// C(k,2) <= C(n-2,k-2) - 4 for k = 3, and C(k,2) <= C(n-2,k-2) - n for k >= 4.
inline InequalityCheck check_matching_inequality(int k, int n) {
  if (k < 3 || n < k) fail(ErrorKind::kRangeUnsupported, "need k >= 3 and n >= k");
  InequalityCheck r;
  r.lhs = binomial_signed(k, 2);
  r.rhs = pair_degree_floor(k, n);
  r.holds = r.lhs <= r.rhs;
  return r;
}

/// The (k, n) ranges for which the inequality is claimed.
inline bool matching_inequality_range(int k, int n) {
  return (k == 3 && n >= 9) || (k == 4 && n >= 8) || (k >= 5 && n >= k + 3);
}

}  // namespace hypertour
