#include <gtest/gtest.h>

#include <cmath>
#include <random>
#include <set>
#include <vector>

#include "antcd/error.hpp"
#include "antcd/generators.hpp"
#include "antcd/metrics.hpp"
#include "antcd/saba.hpp"
#include "oracles.hpp"

using namespace antcd;

namespace {

Graph two_k5_bridge() {
  std::vector<WeightedEdge> e;
  for (VertexId base : {0u, 5u}) {
    for (const auto& k : oracle::complete_graph(5)) e.push_back({k.u + base, k.v + base, 1.0});
  }
  e.push_back({4, 5, 1.0});
  return Graph::from_edges(10, e);
}

SabaState manual_state(const Graph& g, Partition p, std::vector<VertexId> ants,
                       double temperature) {
  SabaState s;
  s.partition = std::move(p);
  s.ant_position = std::move(ants);
  s.temperature = temperature;
  s.q = modularity(g, s.partition);
  s.q_trace.push_back(s.q);
  return s;
}

}  // namespace

TEST(Acceptance, Probability) {
  EXPECT_EQ(acceptance_probability(1.0, 2.0, 500.0), 1.0);
  EXPECT_NEAR(acceptance_probability(3.0, 1.0, 2.0), std::exp(-1.0), 1e-15);
  EXPECT_NEAR(acceptance_probability(3.0, 1.0, 2.0), 0.367879, 1e-6);
  EXPECT_EQ(acceptance_probability(-0.5, -0.5, 1e-300), 1.0);
  EXPECT_THROW(acceptance_probability(0.0, 1.0, 0.0), ConfigError);
  EXPECT_THROW(acceptance_probability(0.0, 1.0, -1.0), ConfigError);
}

TEST(Config, Validation) {
  SabaConfig ok;
  EXPECT_NO_THROW(ok.validate());
  auto expect_bad = [](auto mutate) {
    SabaConfig c;
    mutate(c);
    EXPECT_THROW(c.validate(), ConfigError);
  };
  expect_bad([](SabaConfig& c) { c.initial_temperature = 0; });
  expect_bad([](SabaConfig& c) { c.cooling = 1.0; });
  expect_bad([](SabaConfig& c) { c.cooling = 0.0; });
  expect_bad([](SabaConfig& c) { c.ant_fraction = 0.0; });
  expect_bad([](SabaConfig& c) { c.ant_fraction = 1.5; });
  expect_bad([](SabaConfig& c) { c.eps = 0.0; });
  expect_bad([](SabaConfig& c) { c.max_iters = 0; });
}

TEST(Ants, CountAndPlacement) {
  EXPECT_EQ(ant_count(0.6, 10), 6u);
  EXPECT_EQ(ant_count(0.6, 1), 1u);
  EXPECT_EQ(ant_count(0.01, 3), 1u);
  EXPECT_EQ(ant_count(0.6, 0), 0u);

  // Vertex 3 is isolated and vertex 4 only has a self-loop.
  const std::vector<WeightedEdge> e{{0, 1, 1}, {1, 2, 1}, {4, 4, 2}};
  const Graph g = Graph::from_edges(5, e);
  SabaConfig cfg;
  cfg.ant_fraction = 1.0;
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    Rng rng(seed);
    const SabaState s = init_saba_state(g, Partition::singleton(g), cfg, rng);
    ASSERT_EQ(s.ant_position.size(), 3u);
    const std::set<VertexId> where(s.ant_position.begin(), s.ant_position.end());
    EXPECT_EQ(where, (std::set<VertexId>{0, 1, 2}));
  }
}

TEST(AntStep, UniformNeighbourhoodOnlyWalks) {
  const std::vector<WeightedEdge> e{{0, 1, 1}, {1, 2, 1}, {2, 0, 1}};
  const Graph g = Graph::from_edges(3, e);
  Rng rng(1);
  SabaState s = manual_state(g, Partition::from_labels(g, {4, 4, 4}), {0}, 500.0);
  for (int i = 0; i < 20; ++i) {
    const VertexId before = s.ant_position[0];
    EXPECT_FALSE(ant_step(g, s, 0, rng).has_value());
    EXPECT_NE(s.ant_position[0], before);
  }
  EXPECT_EQ(s.partition.num_communities(), 1u);
}

TEST(AntStep, BridgeEndpointOnlySeesTheCrossNeighbour) {
  const Graph g = two_k5_bridge();
  const Partition natural = Partition::from_labels(g, {0, 0, 0, 0, 0, 1, 1, 1, 1, 1});
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    Rng rng(seed);
    SabaState s = manual_state(g, natural, {4}, 500.0);
    const auto change = ant_step(g, s, 0, rng);
    EXPECT_EQ(s.ant_position[0], 5u);
    if (change) {
      EXPECT_EQ(change->vertex, 5u);
      EXPECT_EQ(change->to, 0u);
    }
  }
}

TEST(AntStep, PathHandEvaluation) {
  const Graph g = Graph::from_edges(2, std::vector<WeightedEdge>{{0, 1, 1}});
  Rng rng(3);
  SabaState s = manual_state(g, Partition::from_labels(g, {0, 1}), {0}, 500.0);
  const auto change = ant_step(g, s, 0, rng);
  ASSERT_TRUE(change.has_value());
  EXPECT_EQ(s.ant_position[0], 1u);
  EXPECT_EQ(change->vertex, 1u);
  EXPECT_EQ(change->from, 1u);
  EXPECT_EQ(change->to, 0u);
  EXPECT_DOUBLE_EQ(change->f_cur, -0.5);
  EXPECT_DOUBLE_EQ(change->f_prime, 0.0);
  EXPECT_EQ(s.partition.label(1), 0u);
  EXPECT_NEAR(s.q, 0.0, 1e-15);
}

TEST(AntStep, LocalMovesAreSoundAndIncrementalQIsExact) {
  std::mt19937_64 gen(41);
  for (int round = 0; round < 100; ++round) {
    const auto inst = oracle::random_instance(gen, 25, round % 2 == 0);
    const Graph g = oracle::build(inst);
    SabaConfig cfg;
    cfg.initial_temperature = round % 3 == 0 ? 1e-9 : 5.0;
    cfg.energy_units = round % 4 == 0 ? EnergyUnits::kEdgeWeight : EnergyUnits::kTwoM;
    Rng rng(static_cast<std::uint64_t>(round));
    SabaState s = init_saba_state(g, Partition::singleton(g), cfg, rng);
    for (int it = 0; it < 8; ++it) {
      for (std::size_t a = 0; a < s.ant_position.size(); ++a) {
        const double q_before = modularity_naive(g, s.partition);
        const auto change = ant_step(g, s, a, rng, cfg.energy_units);
        if (!change) continue;
        const double q_after = modularity_naive(g, s.partition);
        ASSERT_NEAR(s.q, q_after, 1e-12);
        ASSERT_NEAR(q_after - q_before,
                    2.0 * (change->f_prime - change->f_cur) / g.total_weight_2m(), 1e-12);
        if (change->f_prime > change->f_cur + 1e-12) ASSERT_GT(q_after, q_before);
      }
      s.temperature *= cfg.cooling;
    }
  }
}

TEST(ImprovingMove, Detection) {
  const Graph g = two_k5_bridge();
  EXPECT_TRUE(has_improving_move(g, Partition::singleton(g)));
  EXPECT_FALSE(
      has_improving_move(g, Partition::from_labels(g, {0, 0, 0, 0, 0, 1, 1, 1, 1, 1})));
}

TEST(RunSaba, LabelsStayInsideTheStartUniverse) {
  std::mt19937_64 gen(42);
  for (int round = 0; round < 50; ++round) {
    const auto inst = oracle::random_instance(gen, 40, false);
    const Graph g = oracle::build(inst);
    const std::set<CommunityId> universe(inst.labels.begin(), inst.labels.end());
    SabaConfig cfg;
    Rng rng(static_cast<std::uint64_t>(round));
    SabaState s = init_saba_state(g, Partition::from_labels(g, inst.labels), cfg, rng);
    for (int it = 0; it < 30; ++it) saba_iterate(g, s, cfg, rng);
    for (CommunityId l : s.partition.labels()) EXPECT_TRUE(universe.count(l));
    EXPECT_EQ(s.q_trace.size(), s.iteration + 1);
  }
}

TEST(RunSaba, IntegrityAndDeterminism) {
  std::mt19937_64 gen(43);
  for (int round = 0; round < 50; ++round) {
    const auto inst = oracle::random_instance(gen, 50, round % 2 == 0);
    const Graph g = oracle::build(inst);
    SabaConfig cfg;
    cfg.seed = 1000 + static_cast<std::uint64_t>(round);
    cfg.stop_rule = round % 2 == 0 ? StopRule::kPlateau : StopRule::kLocalOptimum;
    const SabaResult a = run_saba(g, Partition::singleton(g), cfg);
    const SabaResult b = run_saba(g, Partition::singleton(g), cfg);
    EXPECT_TRUE(std::equal(a.partition.labels().begin(), a.partition.labels().end(),
                           b.partition.labels().begin()));
    EXPECT_EQ(a.q_trace, b.q_trace);
    EXPECT_EQ(a.q_trace.size(), a.iterations + 1);
    EXPECT_TRUE(a.partition.is_compact());
    EXPECT_NEAR(a.modularity, modularity_naive(g, a.partition), 1e-12);
    EXPECT_NEAR(a.modularity, a.q_trace.back(), 1e-9);

    const std::vector<CommunityId> labels(a.partition.labels().begin(),
                                          a.partition.labels().end());
    const auto fresh = Partition::from_labels(g, labels);
    for (CommunityId c = 0; c < a.partition.label_bound(); ++c) {
      EXPECT_NEAR(a.partition.internal_weight(c), fresh.internal_weight(c), 1e-9);
      EXPECT_NEAR(a.partition.strength(c), fresh.strength(c), 1e-9);
      EXPECT_EQ(a.partition.size(c), fresh.size(c));
    }
    if (a.converged && cfg.stop_rule == StopRule::kLocalOptimum) {
      EXPECT_FALSE(has_improving_move(g, a.partition));
    }
  }
}

TEST(RunSaba, Errors) {
  const Graph empty = Graph::from_edges(3, {});
  EXPECT_THROW(run_saba(empty, Partition::singleton(empty), SabaConfig{}), NoEdgesError);
  const Graph g = Graph::from_edges(2, std::vector<WeightedEdge>{{0, 1, 1}});
  SabaConfig bad;
  bad.cooling = 2.0;
  EXPECT_THROW(run_saba(g, Partition::singleton(g), bad), ConfigError);
}

TEST(RunSaba, SelfLoopOnlyGraphHasNoAnts) {
  const Graph g = Graph::from_edges(2, std::vector<WeightedEdge>{{0, 0, 1}, {1, 1, 1}});
  const SabaResult r = run_saba(g, Partition::singleton(g), SabaConfig{});
  EXPECT_TRUE(r.converged);
  EXPECT_EQ(r.iterations, 1u);
  EXPECT_EQ(r.partition.num_communities(), 2u);
}

TEST(RunSaba, MaxItersCapsTheRun) {
  const auto inst = gen_gn(4, 32, 10, 6, 5);
  SabaConfig cfg;
  cfg.max_iters = 3;
  const SabaResult r = run_saba(inst.graph, Partition::singleton(inst.graph), cfg);
  EXPECT_LE(r.iterations, 3u);
  EXPECT_EQ(r.q_trace.size(), r.iterations + 1);
}

TEST(RunSaba, TriangleEndsAsOneCommunity) {
  const std::vector<WeightedEdge> e{{0, 1, 1}, {1, 2, 1}, {2, 0, 1}};
  const Graph g = Graph::from_edges(3, e);
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    SabaConfig cfg;
    cfg.seed = seed;
    cfg.stop_rule = StopRule::kLocalOptimum;
    const SabaResult r = run_saba(g, Partition::singleton(g), cfg);
    EXPECT_EQ(r.partition.num_communities(), 1u);
    EXPECT_NEAR(r.modularity, 0.0, 1e-15);
  }
}

TEST(RunSaba, GnRecoveryAtLowMixing) {
  double total = 0.0;
  for (std::uint64_t s = 0; s < 20; ++s) {
    const auto inst = gen_gn(4, 32, 14, 2, s);
    SabaConfig cfg;
    cfg.seed = 500 + s;
    const SabaResult r = run_saba(inst.graph, Partition::singleton(inst.graph), cfg);
    EXPECT_LE(r.iterations, 100u);
    EXPECT_TRUE(r.converged);
    total += nmi(r.partition, inst.truth);
  }
  EXPECT_GE(total / 20.0, 0.95);
}

TEST(RunSaba, GnRunsConvergeWithinOneHundredIterations) {
  for (std::uint64_t s = 0; s < 5; ++s) {
    for (double z_out : {4.0, 6.0, 8.0}) {
      const auto inst = gen_gn(4, 32, 16 - z_out, z_out, s);
      SabaConfig cfg;
      cfg.seed = 900 + s;
      const SabaResult r = run_saba(inst.graph, Partition::singleton(inst.graph), cfg);
      EXPECT_TRUE(r.converged);
      EXPECT_LE(r.iterations, 100u);
      EXPECT_GT(r.q_trace.size(), 2u);
    }
  }
}

// The seeded recovery rate stated for a single layer on the 30-clique ring.
TEST(RunSaba, ThirtyCliqueRingRecoveryRate) {
  const auto ring = gen_clique_ring(30, 5);
  int exact = 0;
  for (std::uint64_t s = 0; s < 50; ++s) {
    SabaConfig cfg;
    cfg.seed = 2000 + s;
    const SabaResult r = run_saba(ring.graph, Partition::singleton(ring.graph), cfg);
    if (r.partition.num_communities() == 30 && nmi(r.partition, ring.truth) == 1.0) ++exact;
  }
  EXPECT_GE(exact, 45) << exact << "/50 runs recovered the 30 cliques";
}
