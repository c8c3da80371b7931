#include <gtest/gtest.h>

#include "json.hpp"
#include "dfvs/report.hpp"
#include "dfvs/separators.hpp"
#include "dfvs/solver.hpp"
#include "dfvs/scaling.hpp"

namespace dfvs {
namespace {

using nlohmann::json;

TEST(SolutionJson, YesAndNo) {
  auto sol = solve_dfvs(Digraph(3, {{0, 1}, {1, 2}, {2, 0}}), 1);
  json yes = json::parse(solution_json(sol, 1, 0.5));
  EXPECT_EQ(yes["schema"], 1);
  EXPECT_EQ(yes["answer"], "YES");
  EXPECT_EQ(yes["size"], 1);
  EXPECT_EQ(yes["vertices"].size(), 1u);
  EXPECT_DOUBLE_EQ(yes["timings"]["solve_seconds"].get<double>(), 0.5);
  json no = json::parse(solution_json(std::nullopt, 0, 0.0));
  EXPECT_EQ(no["answer"], "NO");
  EXPECT_FALSE(no.contains("vertices"));
}

TEST(SolutionJson, Arcs) {
  auto sol = solve_dfas(Digraph(2, {{0, 1}, {1, 0}}), 1);
  json j = json::parse(solution_json(sol, 1, 0.0));
  EXPECT_EQ(j["arcs"].size(), 1u);
  EXPECT_TRUE(j.contains("reduced_size"));
}

TEST(ChainJson, Layers) {
  auto chain = std::get<SeparatorChain>(separator_layers(Digraph(4, {{0, 1}, {1, 2}, {2, 3}}), 0, 3, 1));
  json j = json::parse(chain_json(chain));
  EXPECT_EQ(j["lambda"], 1);
  EXPECT_EQ(j["length"], 2);
  EXPECT_EQ(j["layers"][1]["boundary"], json::array({2}));
}

TEST(Scaling, EmptySizesGiveEmptyReport) {
  ScalingReport r = bench_scaling(3, {}, 1, 1);
  EXPECT_TRUE(r.points.empty());
  EXPECT_TRUE(r.ratios.empty());
  json j = json::parse(scaling_json(r));
  EXPECT_TRUE(j["points"].empty());
}

TEST(Scaling, SmallRunHasOneRatioPerDoubling) {
  ScalingReport r = bench_scaling(3, {10000, 20000, 40000}, 1, 4);
  ASSERT_EQ(r.points.size(), 3u);
  EXPECT_EQ(r.ratios.size(), 2u);
  for (const auto& p : r.points) {
    ASSERT_EQ(p.opts.size(), 1u);
    EXPECT_GE(p.opts[0], 0);
    EXPECT_LE(p.opts[0], 3);
  }
  EXPECT_THROW(bench_scaling(3, {200, 100}, 1, 1), std::invalid_argument);
}

}  // namespace
}  // namespace dfvs
