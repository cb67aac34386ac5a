#include <gtest/gtest.h>

#include "support.hpp"

namespace ht = hypertour;
using namespace hypertour::testing;

namespace {

/// Lengths l such that some l-cycle uses arc index `a` for one of its hops.
std::set<int> oracle_cycle_lengths_using(const ht::HyperDigraph& h, std::size_t a) {
  std::set<int> out;
  oracle_for_each_path(h, [&](const std::vector<ht::VertexId>& vs, const std::vector<std::size_t>& used) {
    if (vs.size() < 2) return;
    const bool uses = std::find(used.begin(), used.end(), a) != used.end();
    for (std::size_t b = 0; b < h.size(); ++b) {
      if (std::find(used.begin(), used.end(), b) != used.end()) continue;
      if (!ht::precedes(h.arc(b), vs.back(), vs.front())) continue;
      if (uses || b == a) {
        out.insert(static_cast<int>(vs.size()));
        break;
      }
    }
  });
  return out;
}

bool oracle_vertex_pancyclic(const ht::HyperDigraph& h) {
  for (ht::VertexId v = 1; v <= h.n(); ++v) {
    const auto lengths = oracle_cycle_lengths_through(h, v);
    for (int l = 3; l <= h.n(); ++l) {
      if (!lengths.count(l)) return false;
    }
  }
  return true;
}

}  // namespace

TEST(CycleThrough, H4Examples) {
  const auto h = h4();
  const auto c3 = ht::cycle_through(h, ht::VertexId{4}, 3);
  ASSERT_TRUE(c3);
  EXPECT_TRUE(ht::is_valid_cycle(*c3, &h));
  EXPECT_EQ(c3->length(), 3);
  EXPECT_NE(std::find(c3->vertices.begin(), c3->vertices.end(), 4), c3->vertices.end());
  // the exhibited 3-cycle is valid too
  EXPECT_TRUE(ht::is_valid_cycle(
      {{2, 4, 1}, {ht::HyperArc({2, 4, 1}, 4), ht::HyperArc({3, 4, 1}, 4), ht::HyperArc({1, 2, 3}, 4)}}, &h));

  const auto c4 = ht::cycle_through(h, ht::VertexId{1}, 4);
  ASSERT_TRUE(c4);
  EXPECT_EQ(c4->vertices, ht::hamiltonian_cycle(h)->vertices);
}

TEST(CycleThrough, AscendingHasNoCycles) { EXPECT_FALSE(ht::cycle_through(h_asc(), ht::VertexId{1}, 3)); }

TEST(CycleThrough, ArcAnchor) {
  const auto h = h4();
  const ht::HyperArc a({2, 3, 4}, 4);
  const auto c = ht::cycle_through(h, a, 3);
  ASSERT_TRUE(c);
  EXPECT_TRUE(ht::is_valid_cycle(*c, &h));
  EXPECT_NE(std::find(c->arcs.begin(), c->arcs.end(), a), c->arcs.end());
}

TEST(CycleThrough, RejectsBadArguments) {
  EXPECT_THROW(ht::cycle_through(h4(), ht::VertexId{1}, 2), ht::Error);
  EXPECT_THROW(ht::cycle_through(h4(), ht::VertexId{1}, 5), ht::Error);
  EXPECT_THROW(ht::cycle_through(h4(), ht::VertexId{9}, 3), ht::Error);
  EXPECT_THROW(ht::cycle_through(h4(), ht::HyperArc({1, 3, 2}, 4), 3), ht::Error);
}

TEST(VertexPancyclic, Examples) {
  EXPECT_TRUE(ht::is_vertex_pancyclic(ht::random_strong_tournament(3, 7, 7)));
  EXPECT_FALSE(ht::is_vertex_pancyclic(h_asc()));
  EXPECT_TRUE(ht::is_vertex_pancyclic(h4()));
}

TEST(VertexPancyclic, MatchesOracle) {
  for (std::uint64_t s = 0; s < 30; ++s) {
    const ht::HyperDigraph h = s % 3 == 0 ? ht::HyperDigraph(ht::random_tournament(3, 5, s))
                                          : ht::random_hyperdigraph(3, 5, 0.7, s);
    EXPECT_EQ(ht::is_vertex_pancyclic(h), oracle_vertex_pancyclic(h)) << s;
  }
}

TEST(PancyclicWitnesses, OneCyclePerLength) {
  const auto h = ht::random_strong_tournament(3, 7, 3);
  const auto ws = ht::pancyclic_witnesses(h, ht::VertexId{5});
  ASSERT_TRUE(ws);
  ASSERT_EQ(ws->size(), 5u);
  for (std::size_t i = 0; i < ws->size(); ++i) {
    EXPECT_EQ((*ws)[i].length(), static_cast<int>(i) + 3);
    EXPECT_TRUE(ht::is_valid_cycle((*ws)[i], &h));
  }
}

TEST(PancyclicArcs, StrongSevenVertexInstance) {
  const auto h = ht::random_strong_tournament(3, 7, 21);
  const auto c = ht::hamiltonian_cycle(h);
  ASSERT_TRUE(c);
  EXPECT_GE(ht::pancyclic_hyperarcs_on_cycle(h, *c).size(), 3u);
}

TEST(PancyclicArcs, ThreeCycleTournament) {
  const auto t = three_cycle();
  const auto c = ht::hamiltonian_cycle(t);
  ASSERT_TRUE(c);
  EXPECT_EQ(ht::pancyclic_hyperarcs_on_cycle(t, *c).size(), 3u);
}

TEST(PancyclicArcs, H4CertificatesValidate) {
  const auto h = h4();
  const auto c = ht::hamiltonian_cycle(h);
  for (const auto& a : ht::pancyclic_hyperarcs_on_cycle(h, *c)) {
    for (int l = 3; l <= 4; ++l) {
      const auto w = ht::cycle_through(h, a, l);
      ASSERT_TRUE(w);
      EXPECT_TRUE(ht::is_valid_cycle(*w, &h));
      EXPECT_NE(std::find(w->arcs.begin(), w->arcs.end(), a), w->arcs.end());
    }
  }
}

TEST(PancyclicArcs, MatchesOracle) {
  for (std::uint64_t s = 0; s < 20; ++s) {
    const auto h = ht::random_strong_tournament(3, 5, s);
    const auto c = ht::hamiltonian_cycle(h);
    ASSERT_TRUE(c);
    std::vector<ht::HyperArc> expected;
    for (const auto& a : c->arcs) {
      const auto lengths = oracle_cycle_lengths_using(h, *h.index_of(a.mask()));
      bool all = true;
      for (int l = 3; l <= 5; ++l) all = all && lengths.count(l) > 0;
      if (all) expected.push_back(a);
    }
    EXPECT_EQ(ht::pancyclic_hyperarcs_on_cycle(h, *c), expected) << s;
  }
}

TEST(PancyclicArcs, RejectsNonHamiltonianCycle) {
  const auto h = h4();
  const auto c3 = ht::cycle_through(h, ht::VertexId{4}, 3);
  EXPECT_THROW(ht::pancyclic_hyperarcs_on_cycle(h, *c3), ht::Error);
}
