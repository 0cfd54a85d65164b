#include <gtest/gtest.h>

#include <random>
#include <vector>

#include "antcd/error.hpp"
#include "antcd/partition.hpp"
#include "oracles.hpp"

using namespace antcd;

namespace {

Graph triangle() {
  const std::vector<WeightedEdge> e{{0, 1, 1}, {1, 2, 1}, {2, 0, 1}};
  return Graph::from_edges(3, e);
}

void expect_matches_oracle(const oracle::Instance& inst, const Partition& p) {
  const std::vector<CommunityId> labels(p.labels().begin(), p.labels().end());
  const auto expected = oracle::aggregates(inst, labels);
  EXPECT_EQ(p.num_communities(), expected.size());
  for (CommunityId c = 0; c < p.label_bound(); ++c) {
    const auto it = expected.find(c);
    if (it == expected.end()) {
      EXPECT_FALSE(p.is_nonempty(c));
      EXPECT_EQ(p.internal_weight(c), 0.0);
      EXPECT_EQ(p.strength(c), 0.0);
      continue;
    }
    EXPECT_EQ(p.size(c), it->second.size);
    EXPECT_EQ(p.internal_weight(c), it->second.internal);
    EXPECT_EQ(p.strength(c), it->second.strength);
  }
}

std::vector<CommunityId> labels_of(const Partition& p) {
  return {p.labels().begin(), p.labels().end()};
}

}  // namespace

TEST(Partition, SingletonTriangle) {
  const Graph g = triangle();
  const Partition p = Partition::singleton(g);
  EXPECT_EQ(p.num_communities(), 3u);
  for (CommunityId c = 0; c < 3; ++c) {
    EXPECT_EQ(p.label(c), c);
    EXPECT_EQ(p.internal_weight(c), 0.0);
    EXPECT_EQ(p.strength(c), 2.0);
  }
}

TEST(Partition, SingletonSelfLoop) {
  const std::vector<WeightedEdge> e{{0, 0, 3}};
  const Partition p = Partition::singleton(Graph::from_edges(1, e));
  EXPECT_EQ(p.num_communities(), 1u);
  EXPECT_EQ(p.internal_weight(0), 3.0);
  EXPECT_EQ(p.strength(0), 6.0);
}

TEST(Partition, SingletonOfEdgelessGraph) {
  const Partition p = Partition::singleton(Graph::from_edges(4, {}));
  EXPECT_EQ(p.num_communities(), 4u);
}

TEST(Partition, CompactionUsesFirstAppearance) {
  const Graph g3 = triangle();
  EXPECT_EQ(labels_of(Partition::from_labels(g3, {5, 5, 9}).compacted()),
            (std::vector<CommunityId>{0, 0, 1}));
  EXPECT_EQ(labels_of(Partition::from_labels(g3, {0, 1, 2}).compacted()),
            (std::vector<CommunityId>{0, 1, 2}));

  const Graph g4 = Graph::from_edges(4, std::vector<WeightedEdge>{{0, 1, 1}, {2, 3, 1}});
  const Partition p = Partition::from_labels(g4, {2, 0, 2, 0}).compacted();
  EXPECT_EQ(labels_of(p), (std::vector<CommunityId>{0, 1, 0, 1}));
  EXPECT_TRUE(p.is_compact());
}

TEST(Partition, CompactionPreservesAggregates) {
  std::mt19937_64 rng(21);
  for (int round = 0; round < 50; ++round) {
    const auto inst = oracle::random_instance(rng, 30, true);
    const Graph g = oracle::build(inst);
    const Partition p = Partition::from_labels(g, inst.labels);
    const Partition c = p.compacted();
    EXPECT_TRUE(same_grouping(p.labels(), c.labels()));
    expect_matches_oracle(inst, c);
  }
}

TEST(Partition, FromLabelsRejectsSizeMismatch) {
  EXPECT_THROW(Partition::from_labels(triangle(), {0, 1}), InvalidArgument);
}

TEST(Partition, AggregatesMatchBruteForce) {
  std::mt19937_64 rng(22);
  for (int round = 0; round < 100; ++round) {
    const auto inst = oracle::random_instance(rng, 50, true);
    expect_matches_oracle(inst, Partition::from_labels(oracle::build(inst), inst.labels));
  }
}

TEST(Partition, IncrementalMovesMatchBruteForce) {
  std::mt19937_64 rng(23);
  for (int round = 0; round < 100; ++round) {
    const auto inst = oracle::random_instance(rng, 40, true);
    const Graph g = oracle::build(inst);
    Partition p = Partition::from_labels(g, inst.labels);
    for (int step = 0; step < 60; ++step) {
      const auto v = static_cast<VertexId>(rng() % g.num_vertices());
      const auto to = static_cast<CommunityId>(rng() % p.label_bound());
      p.move(g, v, to);
    }
    expect_matches_oracle(inst, p);
  }
}

TEST(Partition, MoveRejectsBadIds) {
  const Graph g = triangle();
  Partition p = Partition::singleton(g);
  EXPECT_THROW(p.move(g, 3, 0), InvalidArgument);
  EXPECT_THROW(p.move(g, 0, 3), InvalidArgument);
}

TEST(Partition, SameGrouping) {
  const std::vector<CommunityId> a{0, 0, 1, 2}, b{7, 7, 3, 1}, c{0, 1, 1, 2};
  EXPECT_TRUE(same_grouping(a, b));
  EXPECT_FALSE(same_grouping(a, c));
}
