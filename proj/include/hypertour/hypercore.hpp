#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "hypertour/combinatorics.hpp"
#include "hypertour/error.hpp"
#include "hypertour/random.hpp"

namespace hypertour {

/// An ordered tuple of distinct vertices. The order is the precedence
/// relation: seq()[i] precedes seq()[j] whenever i < j.
class HyperArc {
 public:
  HyperArc() = default;

  /// Validates distinctness and that every id lies in [1, n].
  HyperArc(std::vector<VertexId> seq, int n) : seq_(std::move(seq)) {
    for (VertexId v : seq_) {
      if (v < 1 || v > n || v > kMaxVertices) {
        fail(ErrorKind::kBadTuple, "vertex id " + std::to_string(v) + " out of range [1, " +
                                       std::to_string(n) + "]");
      }
      if (contains(mask_, v)) fail(ErrorKind::kBadTuple, "repeated vertex " + std::to_string(v));
      mask_ |= bit_of(v);
    }
  }

  const std::vector<VertexId>& seq() const noexcept { return seq_; }
  VertexSet mask() const noexcept { return mask_; }
  int arity() const noexcept { return static_cast<int>(seq_.size()); }
  bool has(VertexId v) const noexcept { return v >= 1 && v <= kMaxVertices && contains(mask_, v); }

  /// The sorted vertex set of the arc.
  std::vector<VertexId> key() const { return members(mask_); }

  /// 0-based position of v in the tuple, or -1.
  int position(VertexId v) const noexcept {
    if (!has(v)) return -1;
    const auto it = std::find(seq_.begin(), seq_.end(), v);
    return static_cast<int>(it - seq_.begin());
  }

  friend bool operator==(const HyperArc&, const HyperArc&) = default;

 private:
  std::vector<VertexId> seq_;
  VertexSet mask_ = 0;
};

/// True iff u and v both occur in a and u comes first.
inline bool precedes(const HyperArc& a, VertexId u, VertexId v) {
  const int pu = a.position(u);
  const int pv = a.position(v);
  return pu >= 0 && pv >= 0 && pu < pv;
}

/// A k-hyperdigraph: at most one hyperarc per k-subset of {1..n}. Arcs are
/// stored in canonical order, i.e. by lexicographic rank of their vertex set.
class HyperDigraph {
 public:
  HyperDigraph() = default;

  HyperDigraph(int k, int n) : k_(k), n_(n) { check_shape(k, n); }

  /// Validates every tuple and sorts arcs into canonical order.
  static HyperDigraph build(int k, int n, const std::vector<std::vector<VertexId>>& tuples) {
    HyperDigraph h(k, n);
    std::vector<std::pair<std::uint64_t, HyperArc>> keyed;
    keyed.reserve(tuples.size());
    for (const auto& t : tuples) {
      if (static_cast<int>(t.size()) != k) {
        fail(ErrorKind::kBadTuple, "tuple of arity " + std::to_string(t.size()) +
                                       ", expected " + std::to_string(k));
      }
      HyperArc arc(t, n);
      keyed.emplace_back(subset_rank(arc.mask(), n), std::move(arc));
    }
    std::sort(keyed.begin(), keyed.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    for (std::size_t i = 1; i < keyed.size(); ++i) {
      if (keyed[i].first == keyed[i - 1].first) {
        fail(ErrorKind::kDuplicateSubset,
             "two tuples over the subset " + describe(keyed[i].second.key()));
      }
    }
    h.ranks_.reserve(keyed.size());
    h.arcs_.reserve(keyed.size());
    for (auto& [rank, arc] : keyed) {
      h.ranks_.push_back(rank);
      h.arcs_.push_back(std::move(arc));
    }
    return h;
  }

  int k() const noexcept { return k_; }
  int n() const noexcept { return n_; }
  std::span<const HyperArc> arcs() const noexcept { return arcs_; }
  std::size_t size() const noexcept { return arcs_.size(); }
  const HyperArc& arc(std::size_t index) const { return arcs_.at(index); }

  /// Canonical subset index of the arc stored at `index`.
  std::uint64_t rank(std::size_t index) const { return ranks_.at(index); }

  /// Storage index of the arc on `subset`, if present.
  std::optional<std::size_t> index_of(VertexSet subset) const {
    if (popcount(subset) != k_ || (subset & ~full_set(n_)) != 0) return std::nullopt;
    const std::uint64_t r = subset_rank(subset, n_);
    const auto it = std::lower_bound(ranks_.begin(), ranks_.end(), r);
    if (it == ranks_.end() || *it != r) return std::nullopt;
    return static_cast<std::size_t>(it - ranks_.begin());
  }

  /// Storage index of the arc whose subset has canonical rank `r`.
  std::optional<std::size_t> index_of_rank(std::uint64_t r) const {
    const auto it = std::lower_bound(ranks_.begin(), ranks_.end(), r);
    if (it == ranks_.end() || *it != r) return std::nullopt;
    return static_cast<std::size_t>(it - ranks_.begin());
  }

  /// The unique hyperarc on a k-subset, or nullopt when none is present.
  std::optional<HyperArc> hyperarc_of(std::span<const VertexId> subset) const {
    if (static_cast<int>(subset.size()) != k_) {
      fail(ErrorKind::kBadTuple, "subset must have exactly k = " + std::to_string(k_) + " vertices");
    }
    const HyperArc probe(std::vector<VertexId>(subset.begin(), subset.end()), n_);
    const auto idx = index_of(probe.mask());
    if (!idx) return std::nullopt;
    return arcs_[*idx];
  }

  bool is_tournament() const noexcept { return arcs_.size() == binomial(n_, k_); }

  friend bool operator==(const HyperDigraph& a, const HyperDigraph& b) {
    return a.k_ == b.k_ && a.n_ == b.n_ && a.arcs_ == b.arcs_;
  }

 protected:
  static std::string describe(const std::vector<VertexId>& vs) {
    std::string s = "{";
    for (std::size_t i = 0; i < vs.size(); ++i) s += (i ? "," : "") + std::to_string(vs[i]);
    return s + "}";
  }

 private:
  static void check_shape(int k, int n) {
    if (k < 2) fail(ErrorKind::kBadTuple, "arity k must be at least 2");
    if (n < 0 || n > kMaxVertices) {
      fail(ErrorKind::kRangeUnsupported, "vertex count must lie in [0, 64]");
    }
  }

  int k_ = 2;
  int n_ = 0;
  std::vector<HyperArc> arcs_;
  std::vector<std::uint64_t> ranks_;
};

/// A k-hyperdigraph carrying exactly one hyperarc per k-subset.
class HyperTournament : public HyperDigraph {
 public:
  HyperTournament() = default;

  static HyperTournament from(HyperDigraph h) {
    if (h.k() > h.n()) fail(ErrorKind::kBadTuple, "arity k exceeds vertex count n");
    const std::uint64_t expected = binomial(h.n(), h.k());
    if (h.size() != expected) {
      fail(ErrorKind::kMissingSubset, std::to_string(h.size()) + " hyperarcs given, " +
                                          std::to_string(expected) + " k-subsets to cover");
    }
    return HyperTournament(std::move(h));
  }

 private:
  explicit HyperTournament(HyperDigraph h) : HyperDigraph(std::move(h)) {}
};

inline HyperTournament build_hypertournament(int k, int n,
                                             const std::vector<std::vector<VertexId>>& tuples) {
  if (k < 2 || k > n) fail(ErrorKind::kBadTuple, "need 2 <= k <= n");
  return HyperTournament::from(HyperDigraph::build(k, n, tuples));
}

/// Simple digraph: no loops, no parallel arcs, antiparallel pairs allowed.
class Digraph {
 public:
  Digraph() = default;

  explicit Digraph(int n) : n_(n), out_(static_cast<std::size_t>(n), 0), in_(static_cast<std::size_t>(n), 0) {
    if (n < 0 || n > kMaxVertices) fail(ErrorKind::kRangeUnsupported, "vertex count must lie in [0, 64]");
  }

  /// Returns false when the arc was already present.
  bool add_arc(VertexId u, VertexId v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) fail(ErrorKind::kBadTuple, "self-loop at " + std::to_string(u));
    if (contains(out_[u - 1], v)) return false;
    out_[u - 1] |= bit_of(v);
    in_[v - 1] |= bit_of(u);
    ++arc_count_;
    return true;
  }

  int n() const noexcept { return n_; }
  std::size_t arc_count() const noexcept { return arc_count_; }
  bool has_arc(VertexId u, VertexId v) const { return contains(out_.at(u - 1), v); }
  VertexSet out(VertexId u) const { return out_.at(u - 1); }
  VertexSet in(VertexId v) const { return in_.at(v - 1); }

  /// All arcs, sorted lexicographically.
  std::vector<std::pair<VertexId, VertexId>> arcs() const {
    std::vector<std::pair<VertexId, VertexId>> out;
    out.reserve(arc_count_);
    for (VertexId u = 1; u <= n_; ++u) {
      for (VertexId v : members(out_[u - 1])) out.emplace_back(u, v);
    }
    return out;
  }

  friend bool operator==(const Digraph&, const Digraph&) = default;

 private:
  void check_vertex(VertexId v) const {
    if (v < 1 || v > n_) fail(ErrorKind::kBadTuple, "vertex id " + std::to_string(v) + " out of range");
  }

  int n_ = 0;
  std::vector<VertexSet> out_;
  std::vector<VertexSet> in_;
  std::size_t arc_count_ = 0;
};

/// Vertices reachable from `from` (inclusive) using only vertices of `allowed`.
inline VertexSet reachable_within(const Digraph& d, VertexId from, VertexSet allowed) {
  VertexSet seen = bit_of(from);
  VertexSet frontier = seen;
  while (frontier != 0) {
    VertexSet next = 0;
    for (VertexId u : members(frontier)) next |= d.out(u);
    next &= allowed & ~seen;
    seen |= next;
    frontier = next;
  }
  return seen;
}

inline bool is_strongly_connected(const Digraph& d) {
  if (d.n() <= 1) return true;
  const VertexSet all = full_set(d.n());
  if (reachable_within(d, 1, all) != all) return false;
  VertexSet seen = bit_of(1);
  VertexSet frontier = seen;
  while (frontier != 0) {
    VertexSet next = 0;
    for (VertexId u : members(frontier)) next |= d.in(u);
    next &= ~seen;
    seen |= next;
    frontier = next;
  }
  return seen == all;
}

/// An orientation of K_n.
class Tournament {
 public:
  Tournament() = default;

  static Tournament from_arcs(int n, const std::vector<std::pair<VertexId, VertexId>>& arcs) {
    Digraph d(n);
    for (const auto& [u, v] : arcs) {
      if (u >= 1 && v >= 1 && u <= n && v <= n && u != v && d.has_arc(v, u)) {
        fail(ErrorKind::kBadTuple, "both orientations of {" + std::to_string(u) + "," +
                                       std::to_string(v) + "} given");
      }
      if (!d.add_arc(u, v)) {
        fail(ErrorKind::kBadTuple, "duplicate arc " + std::to_string(u) + "->" + std::to_string(v));
      }
    }
    if (d.arc_count() != binomial(n, 2)) {
      fail(ErrorKind::kMissingSubset, "tournament on " + std::to_string(n) + " vertices needs " +
                                          std::to_string(binomial(n, 2)) + " arcs");
    }
    return Tournament(std::move(d));
  }

  int n() const noexcept { return graph_.n(); }
  const Digraph& graph() const noexcept { return graph_; }
  bool beats(VertexId u, VertexId v) const { return graph_.has_arc(u, v); }
  std::vector<std::pair<VertexId, VertexId>> arcs() const { return graph_.arcs(); }
  bool is_strong() const { return is_strongly_connected(graph_); }

  friend bool operator==(const Tournament&, const Tournament&) = default;

 private:
  explicit Tournament(Digraph d) : graph_(std::move(d)) {}

  Digraph graph_;
};

/// A sub-hyperdigraph relabelled onto 1..|S|; labels[i] is the original id
/// of new vertex i + 1.
struct InducedHyperDigraph {
  HyperDigraph graph;
  std::vector<VertexId> labels;
};

inline InducedHyperDigraph induced(const HyperDigraph& h, VertexSet s) {
  if ((s & ~full_set(h.n())) != 0) fail(ErrorKind::kBadTuple, "vertex set exceeds [1, n]");
  InducedHyperDigraph out;
  out.labels = members(s);
  std::vector<VertexId> relabel(static_cast<std::size_t>(h.n()) + 1, 0);
  for (std::size_t i = 0; i < out.labels.size(); ++i) relabel[out.labels[i]] = static_cast<VertexId>(i + 1);
  std::vector<std::vector<VertexId>> tuples;
  for (const HyperArc& a : h.arcs()) {
    if ((a.mask() & ~s) != 0) continue;
    std::vector<VertexId> t;
    t.reserve(a.seq().size());
    for (VertexId v : a.seq()) t.push_back(relabel[v]);
    tuples.push_back(std::move(t));
  }
  out.graph = HyperDigraph::build(h.k(), static_cast<int>(out.labels.size()), tuples);
  return out;
}

inline InducedHyperDigraph induced(const HyperDigraph& h, std::span<const VertexId> s) {
  for (VertexId v : s) {
    if (v < 1 || v > h.n()) fail(ErrorKind::kBadTuple, "vertex id " + std::to_string(v) + " out of range");
  }
  return induced(h, to_set(s));
}

/// How hyperarcs turn into arcs of the generated digraph.
enum class GeneratedArcRule {
  /// Every ordered pair (u, v) with u preceding v in some hyperarc.
  kAllPrecedencePairs,
  /// One arc per hyperarc, from its first vertex to its second; parallel
  /// copies collapse.
  kLeadingPair,
};

inline Digraph generated_digraph(const HyperDigraph& h,
                                 GeneratedArcRule rule = GeneratedArcRule::kAllPrecedencePairs) {
  Digraph d(h.n());
  for (const HyperArc& a : h.arcs()) {
    const auto& s = a.seq();
    if (rule == GeneratedArcRule::kLeadingPair) {
      d.add_arc(s[0], s[1]);
      continue;
    }
    for (std::size_t i = 0; i < s.size(); ++i) {
      for (std::size_t j = i + 1; j < s.size(); ++j) d.add_arc(s[i], s[j]);
    }
  }
  return d;
}

/// Each k-subset, visited in canonical order, gets a Fisher-Yates shuffle of
/// its sorted vertices (k - 1 draws).
inline HyperTournament random_tournament(int k, int n, std::uint64_t seed) {
  if (k < 2 || k > n) fail(ErrorKind::kBadTuple, "need 2 <= k <= n");
  if (n > kMaxVertices) fail(ErrorKind::kRangeUnsupported, "n above 64");
  Rng rng(seed);
  std::vector<std::vector<VertexId>> tuples;
  tuples.reserve(binomial(n, k));
  for_each_subset(n, k, [&](const std::vector<VertexId>& subset) {
    std::vector<VertexId> t = subset;
    rng.shuffle(std::span<VertexId>(t));
    tuples.push_back(std::move(t));
  });
  return build_hypertournament(k, n, tuples);
}

/// Keeps each k-subset with probability `density` (one draw), then orients it
/// as random_tournament does. Draw consumption is fixed per subset.
inline HyperDigraph random_hyperdigraph(int k, int n, double density, std::uint64_t seed) {
  if (k < 2 || k > n) fail(ErrorKind::kBadTuple, "need 2 <= k <= n");
  Rng rng(seed);
  std::vector<std::vector<VertexId>> tuples;
  for_each_subset(n, k, [&](const std::vector<VertexId>& subset) {
    const bool keep = rng.unit() < density;
    std::vector<VertexId> t = subset;
    rng.shuffle(std::span<VertexId>(t));
    if (keep) tuples.push_back(std::move(t));
  });
  return HyperDigraph::build(k, n, tuples);
}

}  // namespace hypertour
