#include <gtest/gtest.h>

#include "support.hpp"

namespace ht = hypertour;
using namespace hypertour::testing;

namespace {

PairSet arcs_of(const ht::Digraph& d) {
  const auto v = d.arcs();
  return {v.begin(), v.end()};
}

void expect_report_witnesses(const ht::HyperDigraph& h, const ht::CoverReport& r) {
  ht::VertexSet seen = 0;
  for (const auto& p : r.cover_h.paths) {
    EXPECT_TRUE(ht::is_valid_path(p, &h));
    for (ht::VertexId v : p.vertices) {
      EXPECT_FALSE(ht::contains(seen, v));
      seen |= ht::bit_of(v);
    }
  }
  EXPECT_EQ(seen, ht::full_set(h.n()));
  seen = 0;
  for (const auto& p : r.cover_d) {
    for (std::size_t i = 0; i + 1 < p.size(); ++i) EXPECT_TRUE(r.generated.has_arc(p[i], p[i + 1]));
    for (ht::VertexId v : p) seen |= ht::bit_of(v);
  }
  EXPECT_EQ(seen, ht::full_set(h.n()));
  EXPECT_EQ(ht::popcount(r.independent_d), r.alpha_d);
  EXPECT_EQ(ht::popcount(r.independent_h), r.alpha_h);
  EXPECT_TRUE(ht::is_independent(r.generated, r.independent_d));
  EXPECT_TRUE(ht::is_independent(h, r.independent_h));
  EXPECT_EQ(r.lifted_cover.size(), r.pc_d);
  for (const auto& p : r.lifted_cover.paths) EXPECT_TRUE(ht::is_valid_path(p, &h));
}

}  // namespace

TEST(Independence, Examples) {
  EXPECT_EQ(ht::independence_number(h4()).size, 2);
  EXPECT_EQ(ht::independence_number(empty_hyperdigraph(3, 5)).size, 5);
  EXPECT_EQ(ht::independence_number(three_cycle()).size, 1);
}

TEST(Independence, MatchesOracle) {
  for (std::uint64_t s = 0; s < 40; ++s) {
    const int k = 2 + static_cast<int>(s % 3);
    const auto h = ht::random_hyperdigraph(k, 8, 0.1 + 0.02 * static_cast<double>(s), s);
    const auto ind = ht::independence_number(h);
    EXPECT_EQ(ind.size, oracle_alpha(h));
    EXPECT_TRUE(ht::is_independent(h, ind.members));
    const auto d = ht::generated_digraph(h);
    EXPECT_EQ(ht::independence_number(d).size, oracle_alpha(arcs_of(d), 8));
  }
}

TEST(Independence, IndependentInDigraphIsIndependentInH) {
  for (std::uint64_t s = 0; s < 50; ++s) {
    const auto h = ht::random_hyperdigraph(3, 8, 0.4, s);
    for (auto rule : {ht::GeneratedArcRule::kAllPrecedencePairs, ht::GeneratedArcRule::kLeadingPair}) {
      const auto d = ht::generated_digraph(h, rule);
      for (ht::VertexSet set = 0; set < 256; ++set) {
        if (ht::is_independent(d, set)) {
          EXPECT_TRUE(ht::is_independent(h, set));
        }
      }
    }
  }
}

TEST(PathCover, Examples) {
  const auto c4 = ht::min_path_cover(h4());
  EXPECT_EQ(c4.size(), 1);
  const auto empty = ht::min_path_cover(empty_hyperdigraph(3, 5));
  EXPECT_EQ(empty.size(), 5);
  for (const auto& p : empty.paths) EXPECT_EQ(p.vertices.size(), 1u);
  EXPECT_EQ(ht::min_path_cover(h_asc()).size(), 1);
}

TEST(PathCover, MatchesOracle) {
  for (std::uint64_t s = 0; s < 30; ++s) {
    const auto h = ht::random_hyperdigraph(3, 6, 0.05 * static_cast<double>(s % 20), s);
    EXPECT_EQ(ht::min_path_cover(h).size(), oracle_path_cover(h)) << s;
    for (auto rule : {ht::GeneratedArcRule::kAllPrecedencePairs, ht::GeneratedArcRule::kLeadingPair}) {
      const auto d = ht::generated_digraph(h, rule);
      EXPECT_EQ(static_cast<int>(ht::min_path_cover(d).size()), oracle_path_cover(arcs_of(d), 6)) << s;
    }
  }
}

TEST(PathCover, RefusesLargeInstances) {
  EXPECT_THROW(ht::min_path_cover(ht::random_hyperdigraph(3, 20, 0.5, 1)), ht::Error);
}

TEST(Chain, H4UnderBothRules) {
  const auto h = h4();
  const auto closure = ht::gallai_milgram_chain(h, ht::GeneratedArcRule::kAllPrecedencePairs);
  EXPECT_EQ(closure.generated.arc_count(), 8u);
  EXPECT_EQ(std::tuple(closure.pc_h, closure.pc_d, closure.alpha_d, closure.alpha_h), std::tuple(1, 1, 1, 2));
  expect_report_witnesses(h, closure);

  const auto leading = ht::gallai_milgram_chain(h);
  EXPECT_EQ(std::tuple(leading.pc_h, leading.pc_d, leading.alpha_d, leading.alpha_h), std::tuple(1, 1, 2, 2));
  expect_report_witnesses(h, leading);
}

TEST(Chain, TrivialCases) {
  const auto e = ht::gallai_milgram_chain(empty_hyperdigraph(3, 3));
  EXPECT_EQ(std::tuple(e.pc_h, e.pc_d, e.alpha_d, e.alpha_h), std::tuple(3, 3, 3, 3));
  const auto t = ht::gallai_milgram_chain(transitive(4));
  EXPECT_EQ(std::tuple(t.pc_h, t.pc_d, t.alpha_d, t.alpha_h), std::tuple(1, 1, 1, 1));
}

TEST(Chain, ClosureRuleCanBreakTheFirstLink) {
  // one hyperarc: H has a path of at most one hop, its closure digraph a
  // Hamiltonian path 1 -> 2 -> 3
  const auto h = ht::HyperDigraph::build(3, 3, {{1, 2, 3}});
  const auto closure = ht::gallai_milgram_chain(h, ht::GeneratedArcRule::kAllPrecedencePairs);
  EXPECT_EQ(closure.pc_h, 2);
  EXPECT_EQ(closure.pc_d, 1);
  EXPECT_FALSE(closure.chain_holds());
  EXPECT_EQ(closure.lift_failures, 1);
  EXPECT_EQ(oracle_path_cover(h), 2);

  const auto leading = ht::gallai_milgram_chain(h);
  EXPECT_TRUE(leading.chain_holds());
  EXPECT_EQ(leading.pc_d, 2);
}

TEST(Chain, HoldsAndValidatesOnRandomInstances) {
  for (std::uint64_t s = 0; s < 40; ++s) {
    const int k = 3 + static_cast<int>(s % 2);
    const double density = static_cast<double>(s % 11) / 10.0;
    const auto h = ht::random_hyperdigraph(k, 6, density, s);
    const auto r = ht::gallai_milgram_chain(h);
    EXPECT_TRUE(r.chain_holds()) << s;
    EXPECT_EQ(r.lift_failures, 0);
    EXPECT_EQ(r.pc_h, oracle_path_cover(h));
    EXPECT_EQ(r.alpha_h, oracle_alpha(h));
    EXPECT_EQ(r.alpha_d, oracle_alpha(arcs_of(r.generated), 6));
    expect_report_witnesses(h, r);
  }
}
