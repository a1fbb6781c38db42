#include <gtest/gtest.h>

#include "mwvc/bound.hpp"
#include "mwvc/oracle.hpp"
#include "test_support.hpp"

namespace mwvc {
namespace {

void expect_valid_partition(const WeightedGraph& g, const CliquePartition& p) {
  std::vector<int> seen(g.size(), 0);
  std::size_t total = 0;
  for (const auto& clique : p.cliques) {
    for (std::size_t i = 0; i < clique.size(); ++i) {
      ASSERT_TRUE(g.alive(clique[i]));
      ASSERT_EQ(seen[clique[i]]++, 0);
      for (std::size_t j = i + 1; j < clique.size(); ++j) {
        const auto nb = g.neighbors(clique[i]);
        ASSERT_NE(std::find(nb.begin(), nb.end(), clique[j]), nb.end());
      }
    }
    total += clique.size();
  }
  EXPECT_EQ(total, g.num_alive());
}

TEST(CliquePartition, TriangleIsOneClique) {
  const auto g = testing::complete({1, 1, 1});
  const auto p = clique_partition(g);
  ASSERT_EQ(p.cliques.size(), 1u);
  EXPECT_EQ(p.cliques[0].size(), 3u);
}

TEST(CliquePartition, EdgelessGivesSingletons) {
  EXPECT_EQ(clique_partition(testing::edgeless(4)).cliques.size(), 4u);
}

TEST(CliquePartition, PathTakesSmallerIdPairOnTie) {
  const auto g = testing::make_graph(3, {{0, 1}, {1, 2}}, {1, 1, 1});
  const auto p = clique_partition(g);
  ASSERT_EQ(p.cliques.size(), 2u);
  EXPECT_EQ(p.cliques[0], (std::vector<VertexId>{1, 0}));
  EXPECT_EQ(p.cliques[1], (std::vector<VertexId>{2}));
}

TEST(CliquePartition, PrefersHeavierEdge) {
  const auto g = testing::make_graph(3, {{0, 1}, {1, 2}}, {1, 1, 5});
  EXPECT_EQ(clique_partition(g).cliques[0], (std::vector<VertexId>{2, 1}));
}

TEST(CliquePartition, SplitsMiddlePairWhenBothEndsGain) {
  // Greedy pairs the heavy middle edge first; two outer edges are worth more.
  const auto g = testing::make_graph(4, {{0, 1}, {1, 2}, {2, 3}}, {9, 10, 10, 9});
  const auto p = clique_partition(g);
  ASSERT_EQ(p.cliques.size(), 2u);
  EXPECT_EQ(p.cliques[0], (std::vector<VertexId>{2, 3}));
  EXPECT_EQ(p.cliques[1], (std::vector<VertexId>{1, 0}));
  EXPECT_EQ(lower_bound(g), 18);
  EXPECT_EQ(brute_force_mwvc(g).weight, 19);
}

TEST(LowerBound, Examples) {
  EXPECT_EQ(lower_bound(testing::complete({1, 2, 3})), 3);
  EXPECT_EQ(lower_bound(testing::edgeless(6, 9)), 0);
  EXPECT_EQ(lower_bound(WeightedGraph{}), 0);
  const auto c5 = testing::cycle(5, {1, 1, 1, 1, 1});
  EXPECT_EQ(lower_bound(c5), 2);
  EXPECT_EQ(brute_force_mwvc(c5).weight, 3);
}

TEST(LowerBound, AdmissibleAndValidOnCorpus) {
  for (const auto& inst : testing::small_corpus()) {
    expect_valid_partition(inst.graph, clique_partition(inst.graph));
    EXPECT_LE(lower_bound(inst.graph), brute_force_mwvc(inst.graph).weight) << inst.name;
    if (inst.graph.num_edges() == 0) EXPECT_EQ(lower_bound(inst.graph), 0);
  }
}

TEST(LowerBound, ScratchReuseAcrossRemovals) {
  auto g = random_graph(60, EdgeProbability{0.1}, WeightScheme::index_mod_200(), 3);
  CliqueBounder bounder(g);
  for (VertexId v = 0; v < 60; v += 3) {
    EXPECT_EQ(bounder.lower_bound(g), lower_bound(g));
    g.remove_vertex(v);
    expect_valid_partition(g, bounder.partition(g));
    EXPECT_EQ(bounder.partition(g).cliques, clique_partition(g).cliques);
  }
}

}  // namespace
}  // namespace mwvc
