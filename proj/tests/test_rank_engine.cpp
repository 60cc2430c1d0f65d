#include <gtest/gtest.h>

#include <algorithm>
#include <set>
#include <vector>

#include "oracles.hpp"
#include "qgain/families.hpp"
#include "qgain/matching.hpp"
#include "qgain/rank_engine.hpp"
#include "qgain/sampling.hpp"

using namespace qgg;

namespace {

const ExactQuaternion kOne = ExactQuaternion::identity();
const ExactQuaternion kI = ExactQuaternion::i();
const ExactQuaternion kJ = ExactQuaternion::j();

CycleType type_for(std::size_t n, int variant) {
  if (n % 2 == 0) return variant % 2 == 0 ? CycleType::Type1 : CycleType::Type2;
  return variant % 2 == 0 ? CycleType::Type3 : CycleType::Type4;
}

GainGraph random_connected(Rng& rng, std::size_t max_n = 9) {
  const std::size_t n = rng.uniform(3, static_cast<std::int64_t>(max_n));
  const std::size_t max_c = std::min<std::size_t>(3, n * (n - 1) / 2 - (n - 1));
  const std::size_t c = rng.uniform(0, static_cast<std::int64_t>(max_c));
  const std::size_t p = rng.uniform(0, 3);
  return random_graph(n, c, p, rng, GainMode::Cayley).graph;
}

}  // namespace

TEST(RankEngine, EliminationMatchesRealRepresentation) {
  Rng rng(1);
  for (int t = 0; t < 60; ++t) {
    const GainGraph g = random_connected(rng, 7);
    EXPECT_EQ(elimination_rank(g), oracle::adjacency_rank(g));
  }
}

TEST(RankEngine, ClassificationFollowsDefinition) {
  Rng rng(2);
  for (std::size_t n = 3; n <= 10; ++n) {
    for (int t = 0; t < 10; ++t) {
      ExactQuaternion gain = random_unit(rng, GainMode::Cayley);
      if (t % 3 == 0 && n % 2 == 0) gain = type1_target(n);
      if (t % 3 == 1) gain = random_pure_unit(rng, GainMode::Cayley);
      EXPECT_EQ(static_cast<int>(classify_cycle(n, gain)), oracle::cycle_class(n, gain));
    }
  }
  EXPECT_EQ(classify_cycle(3, kI), CycleType::Type4);
  EXPECT_EQ(classify_cycle(3, kOne), CycleType::Type3);
  EXPECT_EQ(classify_cycle(4, kOne), CycleType::Type1);
  EXPECT_EQ(classify_cycle(6, kOne), CycleType::Type2);
  EXPECT_EQ(classify_cycle(6, -kOne), CycleType::Type1);
}

TEST(RankEngine, ClassificationIgnoresStartAndDirection) {
  Rng rng(3);
  for (std::size_t n = 3; n <= 9; ++n) {
    for (int variant = 0; variant < 4; ++variant) {
      const GainGraph g = make_cycle(n, type_for(n, variant), rng, GainMode::Cayley);
      std::vector<VertexId> seq(n);
      for (std::size_t v = 0; v < n; ++v) seq[v] = static_cast<VertexId>(v);
      const CycleType base = classify_cycle(n, cycle_gain(g, seq));
      EXPECT_EQ(base, type_for(n, variant));
      for (std::size_t shift = 0; shift < n; ++shift) {
        std::rotate(seq.begin(), seq.begin() + 1, seq.end());
        EXPECT_EQ(classify_cycle(n, cycle_gain(g, seq)), base);
        std::vector<VertexId> rev(seq.rbegin(), seq.rend());
        EXPECT_EQ(classify_cycle(n, cycle_gain(g, rev)), base);
      }
    }
  }
}

TEST(RankEngine, CycleGainRejectsNonCycles) {
  Rng rng(4);
  const GainGraph g = make_cycle(5, CycleType::Type3, rng, GainMode::Cayley);
  const VertexId skip[] = {0, 2, 3, 4, 1};
  EXPECT_THROW(cycle_gain(g, skip), GraphError);
  const VertexId short_seq[] = {0, 1};
  EXPECT_THROW(cycle_gain(g, short_seq), GraphError);
}

TEST(RankEngine, PathAndCycleClosedForms) {
  Rng rng(5);
  for (std::size_t n = 1; n <= 12; ++n) {
    const GainGraph p = make_path(n, rng, GainMode::Cayley);
    EXPECT_EQ(rank_path(n), oracle::adjacency_rank(p));
  }
  for (std::size_t n = 3; n <= 10; ++n) {
    for (int variant = 0; variant < 2; ++variant) {
      const CycleType t = type_for(n, variant);
      const GainGraph c = make_cycle(n, t, rng, GainMode::Cayley);
      EXPECT_EQ(rank_cycle(n, t), oracle::adjacency_rank(c)) << n << " " << to_string(t);
    }
  }
  EXPECT_THROW(rank_cycle(2, CycleType::Type1), std::invalid_argument);
}

TEST(RankEngine, PendantReduction) {
  Rng rng(6);
  int checked = 0;
  for (int t = 0; t < 80; ++t) {
    const GainGraph g = random_connected(rng);
    if (stats(g).p == 0) continue;
    const PendantReduction r = reduce_pendant(g);
    EXPECT_EQ(g.degree(r.leaf), 1u);
    EXPECT_TRUE(g.has_edge(r.leaf, r.neighbor));
    EXPECT_EQ(r.graph.order(), g.order() - 2);
    EXPECT_EQ(oracle::adjacency_rank(g), oracle::adjacency_rank(r.graph) + r.increment);
    ++checked;
  }
  EXPECT_GT(checked, 20);
  Rng rng2(7);
  EXPECT_THROW(reduce_pendant(make_cycle(4, CycleType::Type1, rng2, GainMode::Cayley)), GraphError);
}

TEST(RankEngine, PendantCycleReduction) {
  Rng rng(8);
  for (int t = 0; t < 120; ++t) {
    const GainGraph base = random_connected(rng, 6);
    const std::size_t len = rng.uniform(3, 7);
    const CycleType type = type_for(len, static_cast<int>(rng.below(2)));
    const VertexId at = base.vertices()[rng.below(base.order())];
    const GainGraph g = attach_cycle(base, at, len, type_target(len, type, rng, GainMode::Cayley));
    const auto cycles = pendant_cycles(g);
    ASSERT_FALSE(cycles.empty());
    for (const auto& cyc : cycles) {
      const PendantCycleReduction red = reduce_pendant_cycle(g, cyc);
      const std::size_t truth = oracle::adjacency_rank(g);
      const std::size_t lo = red.lower_offset + oracle::adjacency_rank(red.lower_operand);
      const std::size_t hi = red.upper_offset + oracle::adjacency_rank(red.upper_operand);
      EXPECT_LE(lo, truth);
      EXPECT_LE(truth, hi);
      if (red.exact()) {
        EXPECT_EQ(lo, hi);
      }
    }
  }
}

TEST(RankEngine, P6Contraction) {
  Rng rng(9);
  int checked = 0;
  for (int t = 0; t < 300 && checked < 40; ++t) {
    const std::size_t n = rng.uniform(7, 11);
    const GainGraph g = random_graph(n, rng.uniform(0, 2), rng.uniform(0, 3), rng, GainMode::Cayley).graph;
    const auto path = find_p6(g);
    if (!path) continue;
    ASSERT_EQ(path->size(), 6u);
    for (std::size_t k = 1; k <= 4; ++k) EXPECT_EQ(g.degree((*path)[k]), 2u);
    const P6Contraction con = contract_p6(g, *path);
    EXPECT_EQ(con.graph.order(), g.order() - 4);
    EXPECT_EQ(oracle::adjacency_rank(g), oracle::adjacency_rank(con.graph) + con.increment);
    ++checked;
  }
  EXPECT_GE(checked, 40);
}

TEST(RankEngine, ComponentsAdd) {
  Rng rng(10);
  for (int t = 0; t < 20; ++t) {
    const GainGraph a = random_connected(rng, 6);
    const GainGraph b = relabel_shift(random_connected(rng, 6), 50);
    EXPECT_EQ(elimination_rank(disjoint_union(a, b)), oracle::adjacency_rank(a) + oracle::adjacency_rank(b));
  }
}

TEST(RankEngine, TreesAreTwiceMatching) {
  Rng rng(11);
  for (int t = 0; t < 50; ++t) {
    const GainGraph tree = random_tree(rng.uniform(1, 10), rng, GainMode::Cayley);
    const RankResult r = structural_rank(tree);
    ASSERT_TRUE(r.is_exact());
    EXPECT_EQ(r.value(), 2 * matching_number(tree));
    EXPECT_EQ(r.value(), oracle::adjacency_rank(tree));
  }
}

TEST(RankEngine, StructuralRankIsSound) {
  Rng rng(12);
  int exact = 0;
  for (int t = 0; t < 150; ++t) {
    const GainGraph g = random_connected(rng, 10);
    const RankResult r = structural_rank(g);
    const std::size_t truth = elimination_rank(g);
    EXPECT_TRUE(r.contains(truth)) << to_string(r) << " vs " << truth;
    exact += r.is_exact() ? 1 : 0;
  }
  EXPECT_GT(exact, 50);
}

TEST(RankEngine, RankResultBasics) {
  EXPECT_EQ(to_string(RankResult::exact(3)), "3");
  EXPECT_EQ(to_string(RankResult::interval(2, 5)), "[2, 5]");
  EXPECT_TRUE(RankResult::interval(4, 4).is_exact());
  EXPECT_THROW(RankResult::interval(5, 2), std::invalid_argument);
  EXPECT_THROW(RankResult::interval(1, 2).value(), std::logic_error);
  EXPECT_EQ(RankResult::exact(2) + RankResult::interval(1, 3), RankResult::interval(3, 5));
}

TEST(RankEngine, SimpleCyclesOfSmallShapes) {
  GainGraph k4;
  for (VertexId u = 0; u < 4; ++u)
    for (VertexId v = u + 1; v < 4; ++v) k4.add_edge(u, v, kOne);
  EXPECT_EQ(simple_cycles(k4).size(), 7u);
  EXPECT_EQ(simple_cycles(make_theta(theta_type1(1, 1, 1))).size(), 3u);
  EXPECT_EQ(simple_cycles(make_infinity(infinity_type1(4, 3, 4))).size(), 2u);
}

// Shared cycles <=> two distinct simple cycles meet in a vertex.
TEST(RankEngine, SharedCyclesMatchesCycleIntersections) {
  Rng rng(13);
  for (int t = 0; t < 100; ++t) {
    const GainGraph g = random_connected(rng, 9);
    const auto cycles = simple_cycles(g);
    bool meet = false;
    for (std::size_t a = 0; a < cycles.size() && !meet; ++a) {
      const std::set<VertexId> sa(cycles[a].begin(), cycles[a].end());
      for (std::size_t b = a + 1; b < cycles.size() && !meet; ++b)
        for (VertexId v : cycles[b]) meet = meet || sa.count(v) != 0;
    }
    EXPECT_EQ(has_shared_cycles(g), meet);
  }
}

TEST(RankEngine, BlocksOfPendantSquare) {
  GainGraph g;
  g.add_edge(0, 1, kI);
  g.add_edge(1, 2, kJ);
  g.add_edge(2, 3, -kI);
  g.add_edge(0, 3, -kJ);
  g.add_edge(3, 4, kOne);
  const auto bs = blocks(g);
  ASSERT_EQ(bs.size(), 2u);
  std::size_t edges = 0;
  for (const Block& b : bs) edges += b.edges;
  EXPECT_EQ(edges, 5u);
}

TEST(RankEngine, LowerBoundCases) {
  Rng rng(14);
  std::set<BoundCase> seen;
  for (int t = 0; t < 150; ++t) {
    const GainGraph g = random_connected(rng, 10);
    const GraphStats s = stats(g);
    const Bound b = lower_bound(g);
    seen.insert(b.kind);
    const auto n = static_cast<std::int64_t>(s.n);
    const auto c = static_cast<std::int64_t>(s.c);
    const auto p = static_cast<std::int64_t>(s.p);
    if (s.p > 0) {
      EXPECT_EQ(b.kind, BoundCase::HasPendant);
      EXPECT_EQ(b.value, n - 2 * c - p + 1);
    } else if (has_shared_cycles(g)) {
      EXPECT_EQ(b.kind, BoundCase::LeafFreeSharedCycles);
      EXPECT_EQ(b.value, n - 2 * c + 1);
    } else {
      EXPECT_EQ(b.kind, BoundCase::LeafFreeCycleDisjoint);
      EXPECT_EQ(b.value, n - 2 * c);
    }
    EXPECT_GE(static_cast<std::int64_t>(elimination_rank(g)), b.value);
  }
  EXPECT_EQ(seen.size(), 3u);
  GainGraph isolated;
  isolated.add_vertex(0);
  EXPECT_THROW(lower_bound(isolated), GraphError);
}

TEST(RankEngine, CompositeChecksOnRandomPieces) {
  Rng rng(15);
  for (int t = 0; t < 60; ++t) {
    const GainGraph h = random_connected(rng, 6);
    const GainGraph k = relabel_shift(random_connected(rng, 6), 100);
    const VertexId v = h.vertices()[rng.below(h.order())];
    const VertexId u = k.vertices()[rng.below(k.order())];
    const CompositeCheck co = coalescence_bound_check(h, k, v, u);
    EXPECT_EQ(co.composite.order(), h.order() + k.order() - 1);
    EXPECT_EQ(co.rank_composite, oracle::adjacency_rank(co.composite));
    EXPECT_EQ(co.required, static_cast<std::int64_t>(oracle::adjacency_rank(k) +
                                                     oracle::adjacency_rank(delete_vertex(h, v))) - 1);
    EXPECT_TRUE(co.holds);
    std::vector<ExactQuaternion> gains(rng.uniform(1, 4));
    for (auto& q : gains) q = random_unit(rng, GainMode::Cayley);
    const CompositeCheck br = bridge_bound_check(h, k, v, u, gains);
    EXPECT_EQ(br.composite.order(), h.order() + k.order() + gains.size() - 1);
    EXPECT_EQ(br.rank_composite, oracle::adjacency_rank(br.composite));
    EXPECT_EQ(br.required, static_cast<std::int64_t>(oracle::adjacency_rank(h) + oracle::adjacency_rank(k) +
                                                     gains.size() + 1) - 3);
    EXPECT_TRUE(br.holds);
  }
}

TEST(RankEngine, BridgeCheckExhaustiveOverSmallPieces) {
  std::vector<GainGraph> pieces;
  Rng rng(16);
  for (std::size_t n = 1; n <= 3; ++n) pieces.push_back(make_path(n, rng, GainMode::Lipschitz));
  for (std::size_t n = 3; n <= 4; ++n)
    for (int variant = 0; variant < 2; ++variant)
      pieces.push_back(make_cycle(n, type_for(n, variant), rng, GainMode::Lipschitz));
  const ExactQuaternion alphabet[] = {kOne, kI, kJ};
  for (const GainGraph& h : pieces) {
    for (const GainGraph& k0 : pieces) {
      const GainGraph k = relabel_shift(k0, 100);
      for (VertexId v : h.vertices()) {
        for (VertexId u : k.vertices()) {
          for (std::size_t t = 2; t <= 4; ++t) {
            std::vector<ExactQuaternion> gains(t - 1, kOne);
            gains.back() = alphabet[(v + u + t) % 3];
            const CompositeCheck br = bridge_bound_check(h, k, v, u, gains);
            EXPECT_TRUE(br.holds) << t;
          }
          const CompositeCheck co = coalescence_bound_check(h, k, v, u);
          EXPECT_TRUE(co.holds);
        }
      }
    }
  }
}
