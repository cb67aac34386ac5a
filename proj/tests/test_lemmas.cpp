#include <gtest/gtest.h>

#include <numeric>

#include "support.hpp"

namespace ht = hypertour;
using namespace hypertour::testing;

namespace {

/// Cycle 1 -> 2 -> ... -> n -> 1 whose i-th arc is (i, i+1, extra[i]...).
ht::HyperCycle ring(int n, const std::vector<std::vector<ht::VertexId>>& extra) {
  ht::HyperCycle c;
  for (int i = 0; i < n; ++i) {
    const ht::VertexId a = i + 1;
    const ht::VertexId b = i + 1 == n ? 1 : i + 2;
    c.vertices.push_back(a);
    std::vector<ht::VertexId> seq{a, b};
    seq.insert(seq.end(), extra[static_cast<std::size_t>(i)].begin(), extra[static_cast<std::size_t>(i)].end());
    c.arcs.emplace_back(seq, n);
  }
  return c;
}

/// Visits every assignment of one third vertex to each arc of the n-ring
/// with pairwise distinct arc vertex sets.
template <typename Fn>
std::uint64_t for_each_ring_configuration(int n, Fn&& fn) {
  std::vector<std::vector<ht::VertexId>> options(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    const ht::VertexId a = i + 1;
    const ht::VertexId b = i + 1 == n ? 1 : i + 2;
    for (ht::VertexId w = 1; w <= n; ++w) {
      if (w != a && w != b) options[static_cast<std::size_t>(i)].push_back(w);
    }
  }
  std::vector<std::size_t> pick(static_cast<std::size_t>(n), 0);
  std::uint64_t visited = 0;
  while (true) {
    std::vector<std::vector<ht::VertexId>> extra;
    std::vector<ht::VertexSet> masks;
    for (int i = 0; i < n; ++i) {
      const ht::VertexId w = options[static_cast<std::size_t>(i)][pick[static_cast<std::size_t>(i)]];
      extra.push_back({w});
      masks.push_back(ht::bit_of(i + 1) | ht::bit_of(i + 1 == n ? 1 : i + 2) | ht::bit_of(w));
    }
    std::sort(masks.begin(), masks.end());
    if (std::adjacent_find(masks.begin(), masks.end()) == masks.end()) {
      fn(ring(n, extra));
      ++visited;
    }
    int i = 0;
    while (i < n && ++pick[static_cast<std::size_t>(i)] == options[static_cast<std::size_t>(i)].size()) {
      pick[static_cast<std::size_t>(i)] = 0;
      ++i;
    }
    if (i == n) break;
  }
  return visited;
}

int count_of(const std::vector<ht::PairOccurrence>& profile, ht::VertexId u, ht::VertexId v) {
  for (const auto& occ : profile) {
    if (occ.pair == ht::PairKey(u, v)) return occ.count;
  }
  return -1;
}

}  // namespace

TEST(PairProfile, ConsecutiveTriples) {
  // a_i = (v_i, v_{i+1}, v_{i+2})
  std::vector<std::vector<ht::VertexId>> extra;
  for (int i = 0; i < 7; ++i) extra.push_back({static_cast<ht::VertexId>((i + 2) % 7 + 1)});
  const auto c = ring(7, extra);
  ASSERT_TRUE(ht::is_valid_cycle(c));
  const auto profile = ht::pair_occurrence_profile(c);
  EXPECT_EQ(profile.size(), 21u);
  EXPECT_EQ(count_of(profile, 1, 3), 1);
  EXPECT_EQ(count_of(profile, 1, 4), 0);
  EXPECT_EQ(count_of(profile, 1, 2), 2);
  for (const auto& occ : profile) {
    if (occ.pair == ht::PairKey(1, 2)) {
      EXPECT_TRUE(occ.consecutive);
    }
    if (occ.pair == ht::PairKey(1, 3)) {
      EXPECT_FALSE(occ.consecutive);
    }
  }
  const int total = std::accumulate(profile.begin(), profile.end(), 0, [](int s, const auto& o) { return s + o.count; });
  EXPECT_EQ(total, 7 * 3);
  EXPECT_TRUE(ht::check_cycle_bounds(c).ok());
}

TEST(PairProfile, KTwoCycleHasOnlyConsecutivePairs) {
  const auto t = ht::random_strong_tournament(2, 6, 1);
  const auto c = ht::hamiltonian_cycle(t);
  ASSERT_TRUE(c);
  for (const auto& occ : ht::pair_occurrence_profile(*c)) {
    if (!occ.consecutive) {
      EXPECT_EQ(occ.count, 0);
    }
  }
}

TEST(PairProfile, SumsToNTimesPairsPerArc) {
  for (std::uint64_t s = 0; s < 20; ++s) {
    const int k = 3 + static_cast<int>(s % 3);
    const auto h = ht::random_strong_tournament(k, k + 4, s);
    const auto c = ht::hamiltonian_cycle(h);
    ASSERT_TRUE(c);
    const auto profile = ht::pair_occurrence_profile(*c);
    const auto total = std::accumulate(profile.begin(), profile.end(), std::uint64_t{0},
                                       [](std::uint64_t acc, const auto& o) { return acc + static_cast<std::uint64_t>(o.count); });
    EXPECT_EQ(total, static_cast<std::uint64_t>(h.n()) * ht::binomial(k, 2));
  }
}

TEST(CycleBounds, RandomThreeTournamentCycles) {
  for (int n : {7, 8, 9}) {
    for (std::uint64_t s = 0; s < 60; ++s) {
      const auto h = ht::random_strong_tournament(3, n, s);
      const auto v = ht::check_cycle_bounds(*ht::hamiltonian_cycle(h));
      EXPECT_TRUE(v.ok()) << n << " " << s << " " << (v.ok() ? "" : v.violations.front());
    }
  }
}

TEST(CycleBounds, RandomFourTournamentCyclesOnSeven) {
  for (std::uint64_t s = 0; s < 60; ++s) {
    const auto h = ht::random_strong_tournament(4, 7, s);
    EXPECT_TRUE(ht::check_cycle_bounds(*ht::hamiltonian_cycle(h)).ok());
  }
}

TEST(CycleBounds, EveryThreeUniformRingConfigurationOnSeven) {
  std::uint64_t failures = 0;
  const auto visited = for_each_ring_configuration(7, [&](const ht::HyperCycle& c) {
    failures += ht::check_cycle_bounds(c).ok() ? 0 : 1;
  });
  EXPECT_EQ(visited, 57965u);
  EXPECT_EQ(failures, 0u);
}

TEST(CycleBounds, EveryThreeUniformRingConfigurationOnEight) {
  std::uint64_t failures = 0;
  int most_at_four = 0;
  const auto visited = for_each_ring_configuration(8, [&](const ht::HyperCycle& c) {
    const auto v = ht::check_cycle_bounds(c);
    failures += v.ok() ? 0 : 1;
    most_at_four = std::max(most_at_four, v.pairs_at_four);
  });
  EXPECT_GT(visited, 0u);
  EXPECT_EQ(failures, 0u);
  EXPECT_LE(most_at_four, 2);
}

TEST(CycleBounds, ConstructedCountFourPairOnEight) {
  // pair {1,4} sits in arcs (8,1,4), (1,2,4), (3,4,1), (4,5,1)
  const auto c = ring(8, {{4}, {5}, {1}, {1}, {2}, {3}, {5}, {4}});
  ASSERT_TRUE(ht::is_valid_cycle(c));
  const auto profile = ht::pair_occurrence_profile(c);
  EXPECT_EQ(count_of(profile, 1, 4), 4);
  const auto v = ht::check_cycle_bounds(c);
  EXPECT_TRUE(v.ok());
  EXPECT_GE(v.pairs_at_four, 1);
  EXPECT_LE(v.pairs_at_four, 2);
}

TEST(CycleBounds, RejectsInvalidCycles) {
  // arcs 1 and 2 share the vertex set {1,2,3}
  const auto c = ring(8, {{3}, {1}, {1}, {6}, {7}, {2}, {4}, {3}});
  EXPECT_FALSE(ht::is_valid_cycle(c));
  EXPECT_THROW(ht::check_cycle_bounds(c), ht::Error);
}

TEST(CycleBounds, UnsupportedShapes) {
  const auto h = ht::random_strong_tournament(4, 8, 1);
  EXPECT_THROW(ht::check_cycle_bounds(*ht::hamiltonian_cycle(h)), ht::Error);
}

TEST(Inequality, Examples) {
  const auto a = ht::check_matching_inequality(3, 9);
  EXPECT_TRUE(a.holds);
  EXPECT_EQ(a.lhs, 3);
  EXPECT_EQ(a.rhs, 3);
  const auto b = ht::check_matching_inequality(4, 8);
  EXPECT_TRUE(b.holds);
  EXPECT_EQ(b.lhs, 6);
  EXPECT_EQ(b.rhs, 7);
  const auto c = ht::check_matching_inequality(3, 5);
  EXPECT_FALSE(c.holds);
  EXPECT_EQ(c.rhs, -1);
  EXPECT_FALSE(ht::check_matching_inequality(3, 6).holds);
}

TEST(Inequality, ClaimedRangeIsExactlyWhereItHolds) {
  for (int k = 3; k <= 15; ++k) {
    for (int n = k; n <= 40; ++n) {
      EXPECT_EQ(ht::check_matching_inequality(k, n).holds, ht::matching_inequality_range(k, n)) << k << " " << n;
    }
  }
}

TEST(Inequality, RejectsSmallArity) { EXPECT_THROW(ht::check_matching_inequality(2, 5), ht::Error); }
