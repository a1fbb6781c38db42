#include <gtest/gtest.h>

#include "mwvc/oracle.hpp"
#include "test_support.hpp"

namespace mwvc {
namespace {

TEST(BruteForce, Fig1) {
  const auto r = brute_force_mwvc(testing::fig1());
  EXPECT_EQ(r.weight, 5);
  EXPECT_EQ(r.one_cover, (std::vector<VertexId>{0, 2, 3}));
}

TEST(BruteForce, TriangleWitnessIsLexicographicallySmallest) {
  const auto r = brute_force_mwvc(testing::complete({1, 2, 3}));
  EXPECT_EQ(r.weight, 3);
  EXPECT_EQ(r.one_cover, (std::vector<VertexId>{0, 1}));
  // Three covers tie under unit weights.
  EXPECT_EQ(brute_force_mwvc(testing::complete({1, 1, 1})).one_cover,
            (std::vector<VertexId>{0, 1}));
}

TEST(BruteForce, EdgelessAndEmpty) {
  EXPECT_EQ(brute_force_mwvc(testing::edgeless(4)).weight, 0);
  EXPECT_TRUE(brute_force_mwvc(testing::edgeless(4)).one_cover.empty());
  EXPECT_EQ(brute_force_mwvc(WeightedGraph{}).weight, 0);
}

TEST(BruteForce, RefusesLargeGraphs) {
  const auto g = random_graph(21, EdgeProbability{0.1}, WeightScheme::constant(1), 0);
  EXPECT_THROW(brute_force_mwvc(g), OracleRefused);
  EXPECT_THROW(brute_force_mwvc_parallel(g), OracleRefused);
}

TEST(BruteForce, CountsOnlyLiveVertices) {
  auto g = random_graph(24, EdgeProbability{0.2}, WeightScheme::index_mod_200(), 5);
  for (VertexId v = 0; v < 4; ++v) g.remove_vertex(v);
  const auto r = brute_force_mwvc(g);
  EXPECT_TRUE(is_vertex_cover(g, r.one_cover));
  for (VertexId v : r.one_cover) EXPECT_TRUE(g.alive(v));
}

TEST(BruteForce, MatchesEdgeBranchingOnCorpus) {
  for (const auto& inst : testing::small_corpus()) {
    const auto r = brute_force_mwvc(inst.graph);
    EXPECT_EQ(r.weight, testing::edge_branching_min_cover(inst.graph)) << inst.name;
    EXPECT_TRUE(is_vertex_cover(inst.graph, r.one_cover));
    EXPECT_EQ(weight_of(inst.graph, r.one_cover), r.weight);
    EXPECT_TRUE(std::is_sorted(r.one_cover.begin(), r.one_cover.end()));
  }
}

TEST(BruteForce, ComplementOfWitnessIsIndependent) {
  for (const auto& inst : testing::small_corpus(128)) {
    const auto r = brute_force_mwvc(inst.graph);
    std::vector<std::uint8_t> in(inst.graph.size(), 0);
    for (VertexId v : r.one_cover) in[v] = 1;
    for (const auto& [a, b] : inst.graph.edges()) EXPECT_TRUE(in[a] || in[b]);
  }
}

TEST(BruteForce, ParallelMatchesSerial) {
  for (std::uint64_t seed = 0; seed < 12; ++seed) {
    const auto g = random_graph(18, EdgeProbability{0.25}, WeightScheme::index_mod_200(), seed);
    const auto a = brute_force_mwvc(g);
    const auto b = brute_force_mwvc_parallel(g);
    EXPECT_EQ(a.weight, b.weight);
    EXPECT_EQ(a.one_cover, b.one_cover);
  }
}

TEST(RandomGraph, SameArgumentsSameGraph) {
  for (const EdgeModel model : {EdgeModel{EdgeProbability{0.3}}, EdgeModel{TargetEdges{40}}}) {
    const auto scheme = WeightScheme::uniform_random(0, 50, 3);
    const auto a = random_graph(30, model, scheme, 123);
    const auto b = random_graph(30, model, scheme, 123);
    EXPECT_TRUE(structurally_equal(a, b));
    for (VertexId v = 0; v < 30; ++v) EXPECT_EQ(a.weight(v), b.weight(v));
    const auto c = random_graph(30, model, scheme, 124);
    EXPECT_FALSE(structurally_equal(a, c));
  }
}

TEST(RandomGraph, Extremes) {
  EXPECT_EQ(random_graph(0, EdgeProbability{0.5}, WeightScheme::constant(1), 0).size(), 0u);
  const auto k5 = random_graph(5, EdgeProbability{1.0}, WeightScheme::constant(1), 0);
  EXPECT_EQ(k5.num_edges(), 10u);
  EXPECT_EQ(random_graph(5, EdgeProbability{0.0}, WeightScheme::constant(1), 0).num_edges(), 0u);
  EXPECT_EQ(random_graph(5, TargetEdges{99}, WeightScheme::constant(1), 0).num_edges(), 10u);
}

TEST(RandomGraph, TargetEdgeCountIsExact) {
  for (std::size_t m : {0u, 1u, 450u, 750u}) {
    const auto g = random_graph(500, TargetEdges{m}, WeightScheme::index_mod_200(), m);
    EXPECT_EQ(g.num_edges(), m);
  }
}

TEST(RandomGraph, IndexMod200Weights) {
  const auto g = random_graph(400, TargetEdges{10}, WeightScheme::index_mod_200(), 0);
  EXPECT_EQ(g.weight(0), 2);    // vertex 1
  EXPECT_EQ(g.weight(198), 0);  // vertex 199
  EXPECT_EQ(g.weight(199), 1);  // vertex 200
  const auto z = random_graph(400, TargetEdges{10}, WeightScheme::index_mod_200_zero_based(), 0);
  EXPECT_EQ(z.weight(0), 1);
  EXPECT_EQ(z.weight(199), 0);
}

TEST(RandomGraph, UniformWeightsStayInRange) {
  const auto g = random_graph(300, TargetEdges{10}, WeightScheme::uniform_random(3, 9, 1), 8);
  for (VertexId v = 0; v < 300; ++v) {
    EXPECT_GE(g.weight(v), 3);
    EXPECT_LE(g.weight(v), 9);
  }
}

}  // namespace
}  // namespace mwvc
