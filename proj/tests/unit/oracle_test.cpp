#include <gtest/gtest.h>

#include "checks.hpp"
#include "dfvs/generators.hpp"
#include "dfvs/oracle.hpp"

namespace dfvs {
namespace {

TEST(BruteForce, SmallExamples) {
  EXPECT_EQ(brute_force_dfvs(Digraph(3, {{0, 1}, {1, 2}, {2, 0}}), 1)->size(), 1u);
  EXPECT_FALSE(brute_force_dfvs(Digraph(6, {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}}), 1));
  Digraph k4(4, {{0, 1}, {0, 2}, {0, 3}, {1, 0}, {1, 2}, {1, 3},
                 {2, 0}, {2, 1}, {2, 3}, {3, 0}, {3, 1}, {3, 2}});
  EXPECT_EQ(brute_force_dfvs(k4, 3)->size(), 3u);
  EXPECT_FALSE(brute_force_dfvs(k4, 2));
}

TEST(BruteForce, ArcExamples) {
  EXPECT_EQ(brute_force_dfas(Digraph(2, {{0, 1}, {1, 0}}), 1)->size(), 1u);
  EXPECT_TRUE(brute_force_dfas(Digraph(3, {{0, 1}, {1, 2}}), 0)->empty());
  // Triangle 0->1->2->0 plus chord 0->2 and 2->1: cycles 0-1-2 and 1-2 share only arc 1->2.
  Digraph d(3, {{0, 1}, {1, 2}, {2, 0}, {2, 1}});
  auto r = brute_force_dfas(d, 3);
  ASSERT_TRUE(r);
  EXPECT_EQ(r->size(), 1u);
  EXPECT_EQ(r->front(), (Arc{1, 2}));
}

TEST(Separators, IsSeparator) {
  Digraph d(4, {{0, 1}, {1, 2}, {2, 3}});
  EXPECT_TRUE(is_separator(d, 0, 3, {1}));
  EXPECT_FALSE(is_separator(d, 0, 3, {}));
  EXPECT_TRUE(is_separator(Digraph(2, {}), 0, 1, {}));
}

TEST(Generators, PlantedGuarantee) {
  auto inst = gen_planted(100, 300, 3, 7);
  EXPECT_EQ(inst.graph.num_vertices(), 100u);
  EXPECT_EQ(inst.planted.size(), 3u);
  EXPECT_TRUE(is_acyclic_without(inst.graph, inst.planted));
}

TEST(Generators, PlantedSmallExactOpt) {
  auto inst = gen_planted(8, 16, 2, 1);
  EXPECT_TRUE(is_acyclic_without(inst.graph, inst.planted));
  auto opt = brute_force_dfvs(inst.graph, 2);
  ASSERT_TRUE(opt);
  EXPECT_LE(opt->size(), 2u);
}

TEST(Generators, PlantedZeroIsADag) {
  EXPECT_TRUE(is_acyclic(gen_planted(10, 10, 0, 0).graph));
}

TEST(Generators, PlantedIsDeterministic) {
  EXPECT_EQ(gen_planted(50, 200, 2, 3).graph, gen_planted(50, 200, 2, 3).graph);
  EXPECT_THROW(gen_planted(3, 10, 5, 1), std::invalid_argument);
}

TEST(Generators, ExhaustiveCounts) {
  EXPECT_EQ(gen_exhaustive_small(2).size(), 4u);
  EXPECT_EQ(gen_exhaustive_small(3).size(), 64u);
}

TEST(Generators, SplitMixReferenceValues) {
  // Reference outputs of SplitMix64 seeded with 0.
  SplitMix64 rng(0);
  EXPECT_EQ(rng.next(), 0xE220A8397B1DCDAFull);
  EXPECT_EQ(rng.next(), 0x6E789E6AA1B965F4ull);
  EXPECT_EQ(rng.next(), 0x06C45D188009454Full);
}

TEST(Generators, CorpusRespectsBounds) {
  for (const auto& g : gen_corpus(300, 8, 20, 4, testing::kCorpusSeed)) {
    EXPECT_GE(g.graph.num_vertices(), 1u);
    EXPECT_LE(g.graph.num_vertices(), 8u);
    EXPECT_LE(g.graph.num_arcs(), 20u);
    EXPECT_EQ(g.graph.num_self_loops(), 0u);
    EXPECT_LE(g.k, 4);
  }
}

TEST(DeletionOracle, CapIsRespected) {
  auto oracle = dfvs_oracle();
  StructureInstance q(Digraph(6, {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}}));
  EXPECT_EQ(oracle(q, 3), std::optional<int>(2));
  EXPECT_EQ(oracle(q, 1), std::nullopt);
}

}  // namespace
}  // namespace dfvs
