#include <gtest/gtest.h>

#include "checks.hpp"
#include "dfvs/oracle.hpp"
#include "dfvs/solver.hpp"

namespace dfvs {
namespace {

Digraph triangle() { return Digraph(3, {{0, 1}, {1, 2}, {2, 0}}); }

TEST(Solve, DagNeedsNothing) {
  auto r = solve_dfvs(Digraph(4, {{0, 1}, {1, 2}, {0, 3}}), 0);
  ASSERT_TRUE(r);
  EXPECT_TRUE(r->vertices.empty());
}

TEST(Solve, Triangle) {
  EXPECT_FALSE(solve_dfvs(triangle(), 0));
  auto r = solve_dfvs(triangle(), 1);
  ASSERT_TRUE(r);
  EXPECT_EQ(r->opt_size, 1);
}

TEST(Solve, TwoTriangles) {
  Digraph d(6, {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}});
  EXPECT_FALSE(solve_dfvs(d, 1));
  auto r = solve_dfvs(d, 2);
  ASSERT_TRUE(r);
  ASSERT_EQ(r->vertices.size(), 2u);
  EXPECT_LT(r->vertices[0], 3);
  EXPECT_GE(r->vertices[1], 3);
}

TEST(Solve, SelfLoopsAreForced) {
  Digraph d(3, {{0, 0}, {1, 2}, {2, 1}});
  EXPECT_FALSE(solve_dfvs(d, 1));
  auto r = solve_dfvs(d, 2);
  ASSERT_TRUE(r);
  EXPECT_EQ(r->vertices.front(), 0);
}

TEST(Solve, NegativeBudgetIsAnError) {
  EXPECT_THROW(solve_dfvs(triangle(), -1), std::invalid_argument);
}

TEST(Solve, TraceRecordsCases) {
  auto inst = gen_planted(40, 120, 3, 9);
  auto r = solve_dfvs(inst.graph, 3);
  ASSERT_TRUE(r);
  EXPECT_FALSE(r->trace.empty());
  auto quiet = solve_dfvs(inst.graph, 3, SolveOptions{false});
  ASSERT_TRUE(quiet);
  EXPECT_TRUE(quiet->trace.empty());
  EXPECT_EQ(quiet->vertices, r->vertices);
}

TEST(Solve, MinimumSearch) {
  Digraph k4(4, {{0, 1}, {0, 2}, {0, 3}, {1, 0}, {1, 2}, {1, 3},
                 {2, 0}, {2, 1}, {2, 3}, {3, 0}, {3, 1}, {3, 2}});
  auto r = solve_dfvs_min(k4, 5);
  ASSERT_TRUE(r);
  EXPECT_EQ(r->opt_size, 3);
  EXPECT_FALSE(solve_dfvs_min(k4, 2));
}

TEST(Solve, PlantedLargeInstance) {
  auto inst = gen_planted(20000, 80000, 3, 12);
  auto r = solve_dfvs(inst.graph, 3, SolveOptions{false});
  ASSERT_TRUE(r);
  EXPECT_LE(r->opt_size, 3);
  EXPECT_TRUE(is_acyclic_without(inst.graph, r->vertices));
}

TEST(Solve, SampledAgreesWithOracle) {
  for (const auto& g : gen_corpus(400, 9, 22, 4, testing::kCorpusSeed + 5)) {
    auto got = solve_dfvs(g.graph, g.k);
    auto want = brute_force_dfvs(g.graph, g.k);
    ASSERT_EQ(got.has_value(), want.has_value());
    if (got) EXPECT_EQ(got->vertices.size(), want->size());
  }
}

TEST(Dfas, ReductionOfOneArc) {
  auto r = reduce_dfas_to_dfvs(Digraph(2, {{0, 1}}), 1);
  EXPECT_EQ(r.graph.num_vertices(), 5u);
  EXPECT_EQ(r.graph.num_arcs(), 4u);
  EXPECT_TRUE(is_acyclic(r.graph));
  EXPECT_EQ(r.copies, 2);
  EXPECT_EQ(r.first_arc_vertex, 4u);
}

TEST(Dfas, ReductionOfTwoCycleNeedsOneArcVertex) {
  auto r = reduce_dfas_to_dfvs(Digraph(2, {{0, 1}, {1, 0}}), 1);
  auto s = brute_force_dfvs(r.graph, 3);
  ASSERT_TRUE(s);
  ASSERT_EQ(s->size(), 1u);
  EXPECT_GE(static_cast<std::size_t>(s->front()), r.first_arc_vertex);
}

TEST(Dfas, EmptyGraph) {
  EXPECT_EQ(reduce_dfas_to_dfvs(Digraph(), 2).graph.num_vertices(), 0u);
}

TEST(Dfas, Examples) {
  auto dag = solve_dfas(Digraph(3, {{0, 1}, {1, 2}}), 0);
  ASSERT_TRUE(dag);
  EXPECT_TRUE(dag->arcs.empty());
  auto two = solve_dfas(Digraph(2, {{0, 1}, {1, 0}}), 1);
  ASSERT_TRUE(two);
  EXPECT_EQ(two->arcs.size(), 1u);
  Digraph k3(3, {{0, 1}, {1, 0}, {1, 2}, {2, 1}, {0, 2}, {2, 0}});
  EXPECT_FALSE(solve_dfas(k3, 2));
  auto three = solve_dfas(k3, 3);
  ASSERT_TRUE(three);
  EXPECT_EQ(three->opt_size, 3);
  EXPECT_EQ(brute_force_dfas(k3, 3)->size(), 3u);
}

TEST(Dfas, SelfLoopArcIsTaken) {
  auto r = solve_dfas(Digraph(2, {{0, 0}, {0, 1}}), 1);
  ASSERT_TRUE(r);
  EXPECT_EQ(r->arcs, (std::vector<Arc>{{0, 0}}));
}

}  // namespace
}  // namespace dfvs
