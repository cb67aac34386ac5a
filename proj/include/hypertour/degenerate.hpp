#pragma once

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hypertour/connectivity.hpp"
#include "hypertour/hamiltonian.hpp"
#include "hypertour/matching.hpp"

namespace hypertour {

/// Unordered vertex pair, stored with u < v.
struct PairKey {
  VertexId u = 0;
  VertexId v = 0;

  PairKey() = default;
  PairKey(VertexId a, VertexId b) : u(std::min(a, b)), v(std::max(a, b)) {
    if (a == b) fail(ErrorKind::kBadTuple, "pair needs two distinct vertices");
  }

  VertexSet mask() const { return bit_of(u) | bit_of(v); }
  friend auto operator<=>(const PairKey&, const PairKey&) = default;
};

/// Pairs of K_n off the cycle (side A) against hyperarcs of H off the cycle
/// (side B); a pair is adjacent to every hyperarc containing it.
struct BipartiteInstance {
  int n = 0;
  int k = 0;
  HyperCycle cycle;
  std::vector<PairKey> pairs;
  std::vector<std::size_t> hyperarcs;  // canonical arc indices into H
  BipartiteGraph graph;                // left = pairs, right = hyperarcs

  int pair_degree(std::size_t i) const { return static_cast<int>(graph.adj[i].size()); }

  std::vector<int> arc_degrees() const {
    std::vector<int> deg(hyperarcs.size(), 0);
    for (const auto& nbrs : graph.adj) {
      for (int b : nbrs) ++deg[static_cast<std::size_t>(b)];
    }
    return deg;
  }
};

namespace detail {

inline void require_hamiltonian_cycle(const HyperDigraph& h, const HyperCycle& c) {
  if (!is_valid_cycle(c, &h)) fail(ErrorKind::kBadCycle, "cycle fails validation against H");
  if (c.length() != h.n()) fail(ErrorKind::kBadCycle, "cycle is not Hamiltonian");
}

}  // namespace detail

inline BipartiteInstance build_bipartite(const HyperTournament& h, const HyperCycle& c) {
  if (h.k() < 3) fail(ErrorKind::kRangeUnsupported, "degeneration is defined for k >= 3");
  detail::require_hamiltonian_cycle(h, c);
  const int n = h.n();

  BipartiteInstance inst;
  inst.n = n;
  inst.k = h.k();
  inst.cycle = c;

  std::vector<bool> on_cycle_pair(static_cast<std::size_t>(n * n), false);
  for (int i = 0; i < n; ++i) {
    const VertexId a = c.vertices[i];
    const VertexId b = c.vertices[(i + 1) % n];
    on_cycle_pair[(a - 1) * n + (b - 1)] = on_cycle_pair[(b - 1) * n + (a - 1)] = true;
  }
  for (VertexId u = 1; u <= n; ++u) {
    for (VertexId v = u + 1; v <= n; ++v) {
      if (!on_cycle_pair[(u - 1) * n + (v - 1)]) inst.pairs.emplace_back(u, v);
    }
  }

  std::vector<bool> on_cycle_arc(h.size(), false);
  for (const HyperArc& a : c.arcs) on_cycle_arc[*h.index_of(a.mask())] = true;
  for (std::size_t id = 0; id < h.size(); ++id) {
    if (!on_cycle_arc[id]) inst.hyperarcs.push_back(id);
  }

  inst.graph = BipartiteGraph(static_cast<int>(inst.pairs.size()), static_cast<int>(inst.hyperarcs.size()));
  for (std::size_t i = 0; i < inst.pairs.size(); ++i) {
    const VertexSet p = inst.pairs[i].mask();
    for (std::size_t j = 0; j < inst.hyperarcs.size(); ++j) {
      if ((h.arc(inst.hyperarcs[j]).mask() & p) == p) inst.graph.add_edge(static_cast<int>(i), static_cast<int>(j));
    }
  }
  return inst;
}

/// A matching covering every pair of the instance, if one exists.
inline std::optional<Matching> max_matching(const BipartiteInstance& inst) {
  Matching m = maximum_matching(inst.graph);
  if (!m.covers_left()) return std::nullopt;
  return m;
}

/// Lower bound on pair degrees used by the counting argument:
/// C(n-2, k-2) - 4 for k = 3 and C(n-2, k-2) - n for k >= 4.
inline std::int64_t pair_degree_floor(int k, int n) {
  return binomial_signed(n - 2, k - 2) - (k == 3 ? 4 : n);
}

struct CertificateEntry {
  VertexId u = 0;
  VertexId v = 0;
  HyperArc arc;

  friend bool operator==(const CertificateEntry&, const CertificateEntry&) = default;
};

/// Generating hyperarc for every arc (u, v) of a tournament, sorted by (u, v).
struct GenerationCertificate {
  int n = 0;
  std::vector<CertificateEntry> entries;

  friend bool operator==(const GenerationCertificate&, const GenerationCertificate&) = default;
};

struct MembershipVerdict {
  bool ok = false;
  std::string reason;

  explicit operator bool() const noexcept { return ok; }
};

/// True iff the certificate assigns pairwise distinct hyperarcs of H to the
/// arcs of T, each one generating its arc.
inline MembershipVerdict verify_membership(const Tournament& t, const HyperDigraph& h,
                                           const GenerationCertificate& cert) {
  auto reject = [](std::string why) { return MembershipVerdict{false, std::move(why)}; };
  if (t.n() != h.n() || cert.n != h.n()) return reject("vertex_count_mismatch");
  if (cert.entries.size() != binomial(t.n(), 2)) return reject("entry_count");
  std::vector<std::pair<VertexId, VertexId>> seen_arcs;
  std::vector<VertexSet> seen_masks;
  for (const CertificateEntry& e : cert.entries) {
    if (e.u < 1 || e.v < 1 || e.u > t.n() || e.v > t.n() || e.u == e.v) return reject("bad_vertex");
    if (!t.beats(e.u, e.v)) return reject("arc_not_in_tournament");
    if (!detail::arc_belongs(h, e.arc)) return reject("arc_not_in_hypergraph");
    if (!precedes(e.arc, e.u, e.v)) return reject("wrong_direction");
    seen_arcs.emplace_back(e.u, e.v);
    seen_masks.push_back(e.arc.mask());
  }
  std::sort(seen_arcs.begin(), seen_arcs.end());
  if (std::adjacent_find(seen_arcs.begin(), seen_arcs.end()) != seen_arcs.end()) return reject("duplicate_arc");
  std::sort(seen_masks.begin(), seen_masks.end());
  if (std::adjacent_find(seen_masks.begin(), seen_masks.end()) != seen_masks.end()) {
    return reject("hyperarc_reused");
  }
  return {true, {}};
}

struct Degeneration {
  Tournament tournament;
  GenerationCertificate certificate;
  HyperCycle cycle;
};

inline bool degeneration_in_range(int k, int n) { return k >= 3 && k <= n - 3 && n >= 7; }

namespace detail {

inline Degeneration orient(const HyperTournament& h, const BipartiteInstance& inst, const Matching& m) {
  const int n = h.n();
  std::vector<CertificateEntry> entries;
  entries.reserve(binomial(n, 2));
  const HyperCycle& c = inst.cycle;
  for (int i = 0; i < n; ++i) {
    entries.push_back({c.vertices[i], c.vertices[(i + 1) % n], c.arcs[i]});
  }
  for (std::size_t i = 0; i < inst.pairs.size(); ++i) {
    const PairKey p = inst.pairs[i];
    const HyperArc& a = h.arc(inst.hyperarcs[static_cast<std::size_t>(m.mate_left[i])]);
    if (precedes(a, p.u, p.v)) {
      entries.push_back({p.u, p.v, a});
    } else {
      entries.push_back({p.v, p.u, a});
    }
  }
  std::sort(entries.begin(), entries.end(),
            [](const auto& x, const auto& y) { return std::pair(x.u, x.v) < std::pair(y.u, y.v); });
  std::vector<std::pair<VertexId, VertexId>> arcs;
  arcs.reserve(entries.size());
  for (const auto& e : entries) arcs.emplace_back(e.u, e.v);
  return {Tournament::from_arcs(n, arcs), {n, std::move(entries)}, c};
}

}  // namespace detail

/// Completes a given Hamiltonian cycle of H to a member of T_H, or nullopt
/// when the leftover pairs cannot all be matched.
inline std::optional<Degeneration> degenerate_along(const HyperTournament& h, const HyperCycle& c) {
  const BipartiteInstance inst = build_bipartite(h, c);
  const auto m = max_matching(inst);
  if (!m) return std::nullopt;
  return detail::orient(h, inst, *m);
}

/// A strong tournament in T_H for a strong k-tournament with 3 <= k <= n - 3
/// and n >= 7, built on the first Hamiltonian cycle in canonical order.
inline Degeneration degenerate_tournament(const HyperTournament& h) {
  if (!degeneration_in_range(h.k(), h.n())) {
    fail(ErrorKind::kRangeUnsupported, "need 3 <= k <= n - 3 and n >= 7, got k = " +
                                           std::to_string(h.k()) + ", n = " + std::to_string(h.n()));
  }
  const HopIndex index(h);
  if (!is_strong(index)) fail(ErrorKind::kNotStrong, "input hypertournament is not strong");
  const auto c = hamiltonian_cycle(index, h);
  if (!c) fail(ErrorKind::kInternalGuaranteeViolated, "strong input without Hamiltonian cycle");
  auto d = degenerate_along(h, *c);
  if (!d) fail(ErrorKind::kInternalGuaranteeViolated, "no matching covers the off-cycle pairs");
  return std::move(*d);
}

/// Visitor for T_H members; return false to stop.
using MemberVisitor = std::function<bool(const Tournament&, const GenerationCertificate&)>;

namespace detail {

// Forward and backward reach from vertex 1 over out[] masks.
inline bool masks_strong(const std::vector<std::uint64_t>& out, int n) {
  const std::uint64_t all = n == 64 ? ~0ULL : ((1ULL << n) - 1);
  for (int dir = 0; dir < 2; ++dir) {
    std::uint64_t seen = 1, frontier = 1;
    while (frontier) {
      std::uint64_t next = 0;
      for (int v = 0; v < n; ++v) {
        if (dir == 0) {
          if (frontier >> v & 1) next |= out[v];
        } else if (out[v] & frontier) {
          next |= 1ULL << v;
        }
      }
      frontier = next & ~seen;
      seen |= next;
    }
    if (seen != all) return false;
  }
  return true;
}

// strong_only prunes branches that can no longer complete to a strong tournament
inline std::uint64_t enumerate_members(const HyperDigraph& h, const MemberVisitor& visit,
                                       std::optional<std::uint64_t> limit, bool strong_only) {
  if (limit && *limit == 0) fail(ErrorKind::kBudgetExceeded, "member limit is zero");
  const int n = h.n();
  std::vector<PairKey> pairs;
  for (VertexId u = 1; u <= n; ++u) {
    for (VertexId v = u + 1; v <= n; ++v) pairs.emplace_back(u, v);
  }
  const HopIndex index(h);
  HopMatcher matcher(index);
  std::vector<std::pair<VertexId, VertexId>> chosen;
  std::uint64_t delivered = 0;
  std::vector<std::uint64_t> out(static_cast<std::size_t>(n));
  if (strong_only) {
    if (n > 64) fail(ErrorKind::kRangeUnsupported, "strong member search needs n <= 64");
    for (int v = 0; v < n; ++v) out[v] = (n == 64 ? ~0ULL : ((1ULL << n) - 1)) & ~(1ULL << v);
  }

  std::function<bool(std::size_t)> descend = [&](std::size_t i) -> bool {
    if (i == pairs.size()) {
      if (limit && delivered >= *limit) {
        fail(ErrorKind::kBudgetExceeded, "T_H has more than " + std::to_string(*limit) + " members");
      }
      std::vector<CertificateEntry> entries;
      entries.reserve(chosen.size());
      const auto& assigned = matcher.assignment();
      for (std::size_t j = 0; j < chosen.size(); ++j) {
        entries.push_back({chosen[j].first, chosen[j].second, h.arc(assigned[j])});
      }
      std::vector<std::pair<VertexId, VertexId>> arcs = chosen;
      std::vector<std::size_t> order(entries.size());
      for (std::size_t j = 0; j < order.size(); ++j) order[j] = j;
      std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return arcs[a] < arcs[b]; });
      GenerationCertificate cert{n, {}};
      for (std::size_t j : order) cert.entries.push_back(entries[j]);
      ++delivered;
      return visit(Tournament::from_arcs(n, arcs), cert);
    }
    const PairKey p = pairs[i];
    for (const auto& [a, b] : {std::pair{p.u, p.v}, std::pair{p.v, p.u}}) {
      if (strong_only) {
        // undecided pairs count both ways; drop b -> a for this branch
        out[b - 1] &= ~(1ULL << (a - 1));
        const bool viable = masks_strong(out, n);
        if (!viable) {
          out[b - 1] |= 1ULL << (a - 1);
          continue;
        }
      }
      bool go_on = true;
      if (matcher.push(a, b)) {
        chosen.emplace_back(a, b);
        go_on = descend(i + 1);
        chosen.pop_back();
        matcher.pop();
      }
      if (strong_only) out[b - 1] |= 1ULL << (a - 1);
      if (!go_on) return false;
    }
    return true;
  };
  descend(0);
  return delivered;
}

}  // namespace detail

/// Streams every member of T_H exactly once. Pairs are oriented in
/// lexicographic order, u -> v before v -> u, and a branch survives only while
/// the oriented pairs still have distinct generating hyperarcs. Throws
/// BudgetExceeded if a member beyond `limit` exists, and at once for limit 0.
/// Returns the number of members delivered.
inline std::uint64_t enumerate_th(const HyperDigraph& h, const MemberVisitor& visit,
                                  std::optional<std::uint64_t> limit = std::nullopt) {
  return detail::enumerate_members(h, visit, limit, false);
}

/// Number of strong members of T_H, stopping once `cap` have been seen.
inline std::uint64_t count_strong_members(const HyperDigraph& h, std::uint64_t cap) {
  std::uint64_t strong = 0;
  if (cap == 0) return 0;
  detail::enumerate_members(
      h,
      [&](const Tournament& t, const GenerationCertificate&) {
        if (t.is_strong()) ++strong;
        return strong < cap;
      },
      std::nullopt, true);
  return strong;
}

/// Strong H whose T_H holds no strong tournament (exhaustively checked).
inline bool is_no_strong_witness(const HyperTournament& h) {
  return is_strong(h) && count_strong_members(h, 1) == 0;
}

struct WitnessBudget {
  std::uint64_t max_candidates = 0;  // strong candidates scored; 0 means none
  std::optional<std::chrono::milliseconds> time_limit;
  int steps_per_restart = 200;
  std::uint64_t score_cap = 64;
};

struct WitnessSearchResult {
  std::optional<HyperTournament> witness;
  std::uint64_t candidates = 0;
  std::uint64_t restarts = 0;
  bool budget_exhausted = false;
};

/// Local search for a strong k-tournament with no strong member in T_H.
/// Restart r starts from random_strong_tournament(k, n, derive_seed(seed, r))
/// and repeatedly re-orients one random k-subset, keeping moves that stay
/// strong and do not raise the capped count of strong members. A score of
/// zero is only reached after a full enumeration of T_H, so every returned
/// witness is verified.
inline WitnessSearchResult search_no_strong_witness(int k, int n, const WitnessBudget& budget,
                                                    std::uint64_t seed) {
  if (k < 2 || k > n) fail(ErrorKind::kBadTuple, "need 2 <= k <= n");
  WitnessSearchResult result;
  const auto start = std::chrono::steady_clock::now();
  auto out_of_budget = [&] {
    if (result.candidates >= budget.max_candidates) return true;
    return budget.time_limit && std::chrono::steady_clock::now() - start >= *budget.time_limit;
  };
  auto score = [&](const HyperTournament& h) {
    ++result.candidates;
    return count_strong_members(h, budget.score_cap);
  };

  std::vector<std::vector<VertexId>> subsets;
  for_each_subset(n, k, [&](const std::vector<VertexId>& s) { subsets.push_back(s); });

  while (!out_of_budget()) {
    const std::uint64_t restart = result.restarts++;
    HyperTournament current = random_strong_tournament(k, n, derive_seed(seed, restart));
    std::uint64_t current_score = score(current);
    if (current_score == 0) {
      result.witness = std::move(current);
      return result;
    }
    Rng rng(derive_seed(~seed, restart));
    for (int step = 0; step < budget.steps_per_restart && !out_of_budget(); ++step) {
      const std::size_t target = static_cast<std::size_t>(rng.below(subsets.size()));
      std::vector<VertexId> perm = subsets[target];
      rng.shuffle(std::span<VertexId>(perm));
      std::vector<std::vector<VertexId>> tuples;
      tuples.reserve(current.size());
      for (const HyperArc& a : current.arcs()) tuples.push_back(a.seq());
      if (tuples[target] == perm) continue;
      tuples[target] = perm;
      HyperTournament next = build_hypertournament(k, n, tuples);
      if (!is_strong(next)) continue;
      const std::uint64_t s = score(next);
      if (s > current_score) continue;
      current = std::move(next);
      current_score = s;
      if (current_score == 0) {
        result.witness = std::move(current);
        return result;
      }
    }
  }
  result.budget_exhausted = true;
  return result;
}

}  // namespace hypertour
