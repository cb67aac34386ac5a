#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "hypertour/combinatorics.hpp"
#include "hypertour/error.hpp"
#include "hypertour/hypercore.hpp"

// Search core shared by paths, cycles, Hamiltonicity, pancyclicity and path
// covers.
//
// A walk x_1 a_1 x_2 ... in a hyperdigraph needs distinct vertices and
// distinct hyperarcs, with x_i preceding x_{i+1} in a_i. Branching on the arc
// of every hop is wasteful: a vertex sequence is realisable exactly when its
// hops admit a system of distinct representatives among their witnessing
// arcs. The DFS therefore branches on vertices only and keeps a maximum
// hop-to-arc matching up to date with one augmenting path per pushed hop.

namespace hypertour {

/// Witnessing arcs for every ordered vertex pair. Arc ids index the source
/// structure's canonical arc list.
class HopIndex {
 public:
  explicit HopIndex(const HyperDigraph& h)
      : n_(h.n()), arc_count_(h.size()), hops_(static_cast<std::size_t>(h.n() * h.n())), reach_(h.n()) {
    for (std::size_t id = 0; id < h.size(); ++id) {
      const auto& s = h.arc(id).seq();
      for (std::size_t i = 0; i < s.size(); ++i) {
        for (std::size_t j = i + 1; j < s.size(); ++j) {
          hops_[slot(s[i], s[j])].push_back(static_cast<std::uint32_t>(id));
          reach_.add_arc(s[i], s[j]);
        }
      }
    }
  }

  explicit HopIndex(const Digraph& d)
      : n_(d.n()), hops_(static_cast<std::size_t>(d.n() * d.n())), reach_(d) {
    std::uint32_t id = 0;
    for (const auto& [u, v] : d.arcs()) hops_[slot(u, v)].push_back(id++);
    arc_count_ = id;
  }

  int n() const noexcept { return n_; }
  std::size_t arc_count() const noexcept { return arc_count_; }
  const std::vector<std::uint32_t>& candidates(VertexId u, VertexId v) const { return hops_[slot(u, v)]; }

  /// u -> v iff some arc witnesses the hop; arc reuse is ignored here.
  const Digraph& reach() const noexcept { return reach_; }

 private:
  std::size_t slot(VertexId u, VertexId v) const {
    return static_cast<std::size_t>((u - 1) * n_ + (v - 1));
  }

  int n_ = 0;
  std::size_t arc_count_ = 0;
  std::vector<std::vector<std::uint32_t>> hops_;
  Digraph reach_;
};

/// Maintains a matching of pushed hops onto distinct arcs. push() succeeds
/// iff the hops pushed so far, plus the new one, still have a system of
/// distinct representatives.
class HopMatcher {
 public:
  explicit HopMatcher(const HopIndex& index)
      : index_(&index), owner_(index.arc_count(), -1), seen_(index.arc_count(), 0) {}

  bool push(VertexId u, VertexId v) { return push_hop({&index_->candidates(u, v), kNoArc}); }

  /// A hop that may only use `arc`. Nothing pushed later can displace it.
  bool push_fixed(VertexId u, VertexId v, std::uint32_t arc) {
    (void)u;
    (void)v;
    return push_hop({nullptr, arc});
  }

  void pop() {
    owner_[assigned_.back()] = -1;
    assigned_.pop_back();
    hops_.pop_back();
  }

  std::size_t size() const noexcept { return hops_.size(); }
  const std::vector<std::uint32_t>& assignment() const noexcept { return assigned_; }

 private:
  static constexpr std::uint32_t kNoArc = ~std::uint32_t{0};

  struct Hop {
    const std::vector<std::uint32_t>* candidates;
    std::uint32_t fixed;
  };

  bool push_hop(Hop hop) {
    hops_.push_back(hop);
    assigned_.push_back(kNoArc);
    if (++epoch_ == 0) {
      std::fill(seen_.begin(), seen_.end(), 0);
      epoch_ = 1;
    }
    if (augment(hops_.size() - 1)) return true;
    hops_.pop_back();
    assigned_.pop_back();
    return false;
  }

  bool try_arc(std::size_t h, std::uint32_t a) {
    if (seen_[a] == epoch_) return false;
    seen_[a] = epoch_;
    if (owner_[a] < 0 || augment(static_cast<std::size_t>(owner_[a]))) {
      owner_[a] = static_cast<int>(h);
      assigned_[h] = a;
      return true;
    }
    return false;
  }

  bool augment(std::size_t h) {
    const Hop& hop = hops_[h];
    if (hop.candidates == nullptr) return try_arc(h, hop.fixed);
    for (std::uint32_t a : *hop.candidates) {
      if (try_arc(h, a)) return true;
    }
    return false;
  }

  const HopIndex* index_;
  std::vector<Hop> hops_;
  std::vector<std::uint32_t> assigned_;
  std::vector<int> owner_;
  std::vector<std::uint32_t> seen_;
  std::uint32_t epoch_ = 0;
};

/// Vertex sequence plus the arc id used for each hop. For a cycle the first
/// vertex is not repeated and arcs.size() == vertices.size().
struct Walk {
  std::vector<VertexId> vertices;
  std::vector<std::uint32_t> arcs;
};

/// Complete depth-first search for walks of an exact length. Neighbours are
/// tried in increasing id order and arcs in canonical order, so results are
/// deterministic.
class WalkSearch {
 public:
  explicit WalkSearch(const HopIndex& index, std::uint64_t node_budget = 0)
      : index_(index), matcher_(index), budget_(node_budget) {}

  /// Path from -> to with exactly `length` hops inside `allowed`.
  std::optional<Walk> path(VertexId from, VertexId to, int length, VertexSet allowed) {
    if (from == to || length < 1) return std::nullopt;
    if (!contains(allowed, from) || !contains(allowed, to)) return std::nullopt;
    reset(allowed, to, false);
    return run(from, length);
  }

  /// Path starting at `from` with exactly `length` hops, any endpoint.
  std::optional<Walk> open_path(VertexId from, int length, VertexSet allowed) {
    if (!contains(allowed, from)) return std::nullopt;
    reset(allowed, 0, false);
    return run(from, length);
  }

  /// Cycle of exactly `length` hops through `at`.
  std::optional<Walk> cycle(VertexId at, int length, VertexSet allowed) {
    if (length < 2 || !contains(allowed, at)) return std::nullopt;
    reset(allowed, at, true);
    return run(at, length);
  }

  /// Cycle of exactly `length` hops whose first hop is x -> y using `arc`.
  std::optional<Walk> cycle_with_hop(VertexId x, VertexId y, std::uint32_t arc, int length,
                                     VertexSet allowed) {
    if (length < 2 || x == y || !contains(allowed, x) || !contains(allowed, y)) return std::nullopt;
    reset(allowed, x, true);
    walk_.vertices.push_back(x);
    visited_ |= bit_of(x);
    if (!matcher_.push_fixed(x, y, arc)) return std::nullopt;
    walk_.vertices.push_back(y);
    visited_ |= bit_of(y);
    const bool found = extend(y, length - 1);
    if (!found) {
      matcher_.pop();
      return std::nullopt;
    }
    return finish(true);
  }

  /// Visits every path (including single vertices) within `allowed`; the
  /// visitor returns false to stop the enumeration.
  void for_each_path(VertexSet allowed, const std::function<bool(const Walk&)>& visit) {
    for (VertexId s : members(allowed)) {
      reset(allowed, 0, false);
      walk_.vertices.push_back(s);
      visited_ = bit_of(s);
      if (!enumerate(s, visit)) return;
    }
  }

  std::uint64_t nodes() const noexcept { return nodes_; }

 private:
  void reset(VertexSet allowed, VertexId target, bool closing) {
    while (matcher_.size() > 0) matcher_.pop();
    allowed_ = allowed;
    target_ = target;
    closing_ = closing;
    visited_ = 0;
    walk_ = {};
  }

  std::optional<Walk> run(VertexId from, int length) {
    walk_.vertices.push_back(from);
    visited_ = bit_of(from);
    if (!extend(from, length)) return std::nullopt;
    return finish(closing_);
  }

  Walk finish(bool closed) {
    Walk out = walk_;
    out.arcs = matcher_.assignment();
    if (closed) out.vertices.pop_back();
    return out;
  }

  void tick() {
    ++nodes_;
    if (budget_ != 0 && nodes_ > budget_) {
      fail(ErrorKind::kBudgetExceeded, "search exceeded " + std::to_string(budget_) + " nodes");
    }
  }

  // Shortest hop count from `from` to target_ using interior vertices in
  // `free`; -1 if unreachable.
  int distance_to_target(VertexId from, VertexSet free) const {
    const Digraph& g = index_.reach();
    if (g.has_arc(from, target_)) return 1;
    VertexSet seen = bit_of(from);
    VertexSet frontier = seen;
    for (int d = 1; frontier != 0; ++d) {
      VertexSet next = 0;
      for (VertexId u : members(frontier)) next |= g.out(u);
      if (contains(next, target_)) return d;
      next &= free & ~seen;
      seen |= next;
      frontier = next;
    }
    return -1;
  }

  bool extend(VertexId cur, int remaining) {
    tick();
    if (remaining == 0) return target_ == 0 || cur == target_;
    const Digraph& g = index_.reach();
    VertexSet options = g.out(cur);
    if (target_ != 0 && remaining == 1) {
      options &= bit_of(target_);
    } else {
      options &= allowed_ & ~visited_;
      if (target_ != 0) options &= ~bit_of(target_);
    }
    for (VertexId w : members(options)) {
      if (w != target_ || !closing_ || remaining != 1) {
        if (!viable(w, remaining - 1)) continue;
      }
      if (!matcher_.push(cur, w)) continue;
      walk_.vertices.push_back(w);
      visited_ |= bit_of(w);
      if (extend(w, remaining - 1)) return true;
      visited_ &= ~bit_of(w);
      walk_.vertices.pop_back();
      matcher_.pop();
    }
    return false;
  }

  // Necessary conditions for finishing `remaining` more hops after moving to w.
  bool viable(VertexId w, int remaining) const {
    if (remaining == 0) return true;
    VertexSet free = allowed_ & ~visited_ & ~bit_of(w);
    if (target_ != 0) {
      free &= ~bit_of(target_);
      if (popcount(free) < remaining - 1) return false;
      const int d = distance_to_target(w, free);
      return d >= 1 && d <= remaining;
    }
    const int available = popcount(free);
    if (available < remaining) return false;
    if (available == remaining) {
      return (reachable_within(index_.reach(), w, free | bit_of(w)) & free) == free;
    }
    return true;
  }

  bool enumerate(VertexId cur, const std::function<bool(const Walk&)>& visit) {
    tick();
    walk_.arcs = matcher_.assignment();
    if (!visit(walk_)) return false;
    const VertexSet options = index_.reach().out(cur) & allowed_ & ~visited_;
    for (VertexId w : members(options)) {
      if (!matcher_.push(cur, w)) continue;
      walk_.vertices.push_back(w);
      visited_ |= bit_of(w);
      const bool go_on = enumerate(w, visit);
      visited_ &= ~bit_of(w);
      walk_.vertices.pop_back();
      matcher_.pop();
      if (!go_on) return false;
    }
    return true;
  }

  const HopIndex& index_;
  HopMatcher matcher_;
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
  VertexSet allowed_ = 0;
  VertexSet visited_ = 0;
  VertexId target_ = 0;
  bool closing_ = false;
  Walk walk_;
};

}  // namespace hypertour
