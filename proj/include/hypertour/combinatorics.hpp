#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <span>
#include <vector>

#include "hypertour/error.hpp"

namespace hypertour {

/// 1-based vertex label, as used by every public interface.
using VertexId = int;

/// Bitmask over vertices; bit (v - 1) stands for vertex v.
using VertexSet = std::uint64_t;

inline constexpr int kMaxVertices = 64;

constexpr VertexSet bit_of(VertexId v) { return VertexSet{1} << (v - 1); }

constexpr VertexSet full_set(int n) {
  return n >= 64 ? ~VertexSet{0} : (VertexSet{1} << n) - 1;
}

constexpr bool contains(VertexSet s, VertexId v) { return (s & bit_of(v)) != 0; }

constexpr int popcount(VertexSet s) { return std::popcount(s); }

/// Lowest vertex of a non-empty set.
constexpr VertexId lowest(VertexSet s) { return std::countr_zero(s) + 1; }

inline std::vector<VertexId> members(VertexSet s) {
  std::vector<VertexId> out;
  out.reserve(static_cast<std::size_t>(popcount(s)));
  while (s != 0) {
    out.push_back(lowest(s));
    s &= s - 1;
  }
  return out;
}

namespace detail {

struct BinomialTable {
  std::array<std::array<std::uint64_t, kMaxVertices + 1>, kMaxVertices + 1> c{};

  constexpr BinomialTable() {
    for (int n = 0; n <= kMaxVertices; ++n) {
      c[n][0] = 1;
      for (int r = 1; r <= n; ++r) c[n][r] = c[n - 1][r - 1] + (r < n ? c[n - 1][r] : 0);
    }
  }
};

inline constexpr BinomialTable kBinomials{};

}  // namespace detail

/// C(n, r) for 0 <= n <= 64; zero when r is out of [0, n].
constexpr std::uint64_t binomial(int n, int r) {
  if (n < 0 || r < 0 || r > n) return 0;
  if (n > kMaxVertices) fail(ErrorKind::kRangeUnsupported, "binomial argument above 64");
  return detail::kBinomials.c[n][r];
}

/// Signed variant for inequality bookkeeping, where negative right-hand sides
/// are meaningful.
constexpr std::int64_t binomial_signed(int n, int r) {
  return static_cast<std::int64_t>(binomial(n, r));
}

/// Position of a sorted k-subset of {1..n} in lexicographic order (0-based).
inline std::uint64_t subset_rank(std::span<const VertexId> sorted, int n) {
  const int k = static_cast<int>(sorted.size());
  std::uint64_t rank = 0;
  VertexId prev = 0;
  for (int i = 0; i < k; ++i) {
    for (VertexId v = prev + 1; v < sorted[i]; ++v) rank += binomial(n - v, k - i - 1);
    prev = sorted[i];
  }
  return rank;
}

inline std::uint64_t subset_rank(VertexSet s, int n) {
  const auto sorted = members(s);
  return subset_rank(sorted, n);
}

/// Advances a sorted k-subset of {1..n} to its lexicographic successor.
/// Returns false once the last subset has been passed.
inline bool next_subset(std::span<VertexId> subset, int n) {
  const int k = static_cast<int>(subset.size());
  int i = k - 1;
  while (i >= 0 && subset[i] == n - k + i + 1) --i;
  if (i < 0) return false;
  ++subset[i];
  for (int j = i + 1; j < k; ++j) subset[j] = subset[j - 1] + 1;
  return true;
}

/// Calls fn(const std::vector<VertexId>&) on every k-subset of {1..n} in
/// canonical (lexicographic) order.
template <typename Fn>
void for_each_subset(int n, int k, Fn&& fn) {
  if (k < 0 || k > n) return;
  std::vector<VertexId> subset(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) subset[i] = i + 1;
  do {
    fn(static_cast<const std::vector<VertexId>&>(subset));
  } while (next_subset(subset, n));
}

inline VertexSet to_set(std::span<const VertexId> vs) {
  VertexSet s = 0;
  for (VertexId v : vs) s |= bit_of(v);
  return s;
}

}  // namespace hypertour
