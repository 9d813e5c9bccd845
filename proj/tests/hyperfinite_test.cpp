// Copyright 2026 The DiskLab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "disklab/hyperfinite.hpp"

#include <cmath>

#include "disklab/catalog.hpp"
#include "disklab/error.hpp"
#include "disklab/generators.hpp"
#include "disklab/rng.hpp"
#include "gtest/gtest.h"
#include "oracles.hpp"

namespace disklab {
namespace {

BoundedGraph random_graph(std::size_t n, std::size_t d, double p, Rng& rng) {
  std::vector<Edge> edges;
  std::vector<std::size_t> deg(n, 0);
  std::bernoulli_distribution coin(p);
  for (Vertex a = 0; a < n; ++a) {
    for (Vertex b = a + 1; b < n; ++b) {
      if (deg[a] < d && deg[b] < d && coin(rng)) {
        edges.push_back({a, b});
        ++deg[a];
        ++deg[b];
      }
    }
  }
  return BoundedGraph::build(n, d, edges);
}

bool same_fraction(const Rational& r, oracle::Fraction f) {
  return r.numerator() * f.den == f.num * r.denominator();
}

TEST(HyperfiniteTest, Budget) {
  EXPECT_EQ(removal_budget(0.1, 3, 30), 9u);
  EXPECT_EQ(removal_budget(1.0 / 9, 2, 9), 2u);
  EXPECT_EQ(removal_budget(0.0, 3, 30), 0u);
}

TEST(HyperfiniteTest, SmallComponentsNeedNoRemovals) {
  auto g = disjoint_cliques(4, 3);
  auto r = check_hyperfinite(g, 0.0, 3, HyperMode::kExact);
  ASSERT_TRUE(r.hyperfinite());
  EXPECT_TRUE(r.decomposition->removed_edges.empty());
  EXPECT_TRUE(verify_decomposition(g, *r.decomposition));
}

TEST(HyperfiniteTest, NineCycle) {
  auto c9 = cycle_graph(9);
  auto r = check_hyperfinite(c9, 1.0 / 9, 5, HyperMode::kExact);
  ASSERT_TRUE(r.hyperfinite());
  EXPECT_EQ(r.decomposition->removed_edges.size(), 2u);
  EXPECT_LE(r.decomposition->component_sizes.front(), 5u);
  EXPECT_TRUE(verify_decomposition(c9, *r.decomposition));

  auto none = check_hyperfinite(c9, 0.0, 5, HyperMode::kExact);
  EXPECT_FALSE(none.hyperfinite());
  EXPECT_TRUE(none.proven);
  EXPECT_EQ(none.min_removals, 2u);
}

TEST(HyperfiniteTest, ExactMatchesEdgeSubsetSearch) {
  Rng rng(3);
  for (int trial = 0; trial < 120; ++trial) {
    std::size_t n = 3 + trial % 8;
    auto g = random_graph(n, 3, 0.45, rng);
    for (std::size_t s = 1; s <= 4; ++s) {
      auto r = check_hyperfinite(g, 1.0, s, HyperMode::kExact);
      ASSERT_TRUE(r.min_removals.has_value());
      EXPECT_EQ(*r.min_removals, oracle::naive_min_removal(g, s)) << "n=" << n << " s=" << s;
      if (r.hyperfinite()) {
        EXPECT_TRUE(verify_decomposition(g, *r.decomposition));
      }
    }
  }
}

TEST(HyperfiniteTest, DecisionFollowsBudget) {
  auto grid = grid_graph(3, 4);
  const std::size_t need = oracle::naive_min_removal(grid, 3);
  // Budget floor(eps * 4 * 12) equals need, then need - 1.
  double at = static_cast<double>(need) / 48.0;
  double below = static_cast<double>(need - 1) / 48.0;
  EXPECT_TRUE(check_hyperfinite(grid, at, 3, HyperMode::kExact).hyperfinite());
  EXPECT_FALSE(check_hyperfinite(grid, below, 3, HyperMode::kExact).hyperfinite());
}

TEST(HyperfiniteTest, HeuristicWitnessesVerify) {
  for (const auto& g : {cycle_graph(200), grid_graph(12, 12), random_regular(100, 3, 5)}) {
    auto r = check_hyperfinite(g, 0.5, 10, HyperMode::kHeuristic);
    ASSERT_TRUE(r.hyperfinite());
    EXPECT_TRUE(verify_decomposition(g, *r.decomposition));
  }
  // A cycle cut into arcs of 10 needs n/10 removals.
  auto c = cycle_graph(200);
  auto tight = check_hyperfinite(c, 20.0 / 400.0, 10, HyperMode::kHeuristic);
  ASSERT_TRUE(tight.hyperfinite());
  EXPECT_EQ(tight.decomposition->removed_edges.size(), 20u);
}

TEST(HyperfiniteTest, ExactRejectsLargeComponents) {
  EXPECT_THROW(check_hyperfinite(cycle_graph(17), 0.5, 4, HyperMode::kExact), Error);
  EXPECT_THROW(check_hyperfinite(cycle_graph(5), -1.0, 4, HyperMode::kExact), Error);
}

TEST(HyperfiniteTest, VerifyCatchesTampering) {
  auto c9 = cycle_graph(9);
  auto dec = *check_hyperfinite(c9, 1.0 / 9, 5, HyperMode::kExact).decomposition;
  auto fewer = dec;
  fewer.removed_edges.pop_back();
  EXPECT_FALSE(verify_decomposition(c9, fewer));
  auto tight = dec;
  tight.size_bound = 4;
  EXPECT_FALSE(verify_decomposition(c9, tight));
  auto bogus = dec;
  bogus.removed_edges[0] = {0, 5};
  EXPECT_FALSE(verify_decomposition(c9, bogus));
  auto over = dec;
  over.eps_used = 0.0;
  EXPECT_FALSE(verify_decomposition(c9, over));
}

TEST(DfpTest, TrianglesGiveTriangle) {
  auto r = dfp_search(disjoint_cliques(30, 3), 1, 3);
  EXPECT_EQ(r.distance, Rational(0));
  EXPECT_EQ(r.graph.num_vertices(), 3u);
  EXPECT_EQ(r.graph.num_edges(), 3u);
}

TEST(DfpTest, LongCycle) {
  auto c100 = cycle_graph(100);
  // Every 1-disk of a long cycle is an induced path; the triangle's is not.
  auto one = dfp_search(c100, 1, 4);
  EXPECT_EQ(one.distance, Rational(0));
  EXPECT_EQ(graph_code(one.graph), graph_code(cycle_graph(4)));
  EXPECT_GT(dfp_search(c100, 1, 3).distance, Rational(0));
  auto two = dfp_search(c100, 2, 6);
  EXPECT_EQ(two.distance, Rational(0));
  EXPECT_EQ(graph_code(two.graph), graph_code(cycle_graph(6)));
  EXPECT_GT(dfp_search(c100, 2, 5).distance, Rational(0));
}

TEST(DfpTest, MatchesLabeledEnumeration) {
  Rng rng(17);
  for (int trial = 0; trial < 24; ++trial) {
    std::size_t n = 4 + trial % 7;
    std::size_t d = 2 + trial % 2;
    std::size_t k = d == 2 ? 1 + trial % 3 : 1;
    std::size_t cap = d == 2 ? 6 : 5;
    auto g = random_graph(n, d, 0.5, rng);
    auto r = dfp_search(g, k, cap);
    EXPECT_TRUE(same_fraction(r.distance, oracle::naive_dfp_distance(g, k, cap)))
        << "n=" << n << " d=" << d << " k=" << k;
  }
}

TEST(DfpTest, CapLimits) {
  EXPECT_THROW(dfp_search(cycle_graph(10), 1, 13), Error);
  EXPECT_THROW(dfp_search(cycle_graph(10), 1, 0), Error);
}

TEST(BlowUpTest, Remainder) {
  auto tri = disjoint_cliques(1, 3);
  auto g9 = disjoint_cliques(3, 3);
  auto b9 = blow_up(g9, tri, 9);
  EXPECT_EQ(b9, g9);
  EXPECT_EQ(l1_distance_exact(frequency_vector(g9, 1), frequency_vector(b9, 1)), Rational(0));
  auto b10 = blow_up(g9, tri, 10);
  EXPECT_EQ(b10.num_vertices(), 10u);
  EXPECT_EQ(b10.num_edges(), 9u);
  EXPECT_EQ(b10.degree(9), 0u);
  EXPECT_THROW(blow_up(g9, tri, 2), Error);
  EXPECT_THROW(blow_up(g9, BoundedGraph::build(0, 2, {}), 5), Error);
}

TEST(BlowUpTest, LocalityOnRandomGraphs) {
  Rng rng(23);
  auto catalog = enumerate_graphs(6, 3);
  int checked = 0;
  for (int trial = 0; trial < 30; ++trial) {
    const double delta = 0.5;
    auto g = random_regular(200, 2 + trial % 2, rng(), 3);
    auto dfp = dfp_search(g, 1, catalog);
    if (!(to_double(dfp.distance) < delta)) continue;
    const std::size_t h = dfp.graph.num_vertices();
    if (g.num_vertices() < 20 * h / delta) continue;
    auto b = blow_up(g, dfp.graph, g.num_vertices());
    EXPECT_LT(l1_distance(frequency_vector(g, 1), frequency_vector(b, 1)), 1.1 * delta);
    auto hyper = check_hyperfinite(b, 0.0, h, HyperMode::kHeuristic);
    EXPECT_TRUE(hyper.hyperfinite());
    ++checked;
  }
  EXPECT_GT(checked, 10);
}

PropertySet cycle_or_triangles() {
  PropertySet p;
  p.name = "c12-or-4k3";
  p.n = 12;
  p.d = 2;
  p.members = {cycle_graph(12), disjoint_cliques(4, 3, 2)};
  return p;
}

TEST(FindHyperTest, MemberQualifiesItself) {
  auto p = unions_of_triangles(12);
  auto g = disjoint_cliques(4, 3, 2);
  auto r = find_hyper_desk(g, p, 0.01, 0.3, 1, {3, 16});
  ASSERT_TRUE(r.has_value());
  EXPECT_TRUE(r->is_input);
  EXPECT_EQ(r->graph, g);
  EXPECT_EQ(r->distance, Rational(0));
  EXPECT_TRUE(r->decomposition.removed_edges.empty());
}

TEST(FindHyperTest, CycleOrTriangles) {
  auto p = cycle_or_triangles();
  auto c12 = cycle_graph(12);
  // At eps = 1/8 the budget is 3 removals; C12 needs 4 to reach arcs of 3.
  EXPECT_FALSE(find_hyper_desk(c12, p, 0.6, 1.0 / 8, 1, {3, 16}).has_value());
  auto r = find_hyper_desk(c12, p, 2.1, 1.0 / 8, 1, {3, 16});
  ASSERT_TRUE(r.has_value());
  EXPECT_FALSE(r->is_input);
  EXPECT_EQ(r->distance, Rational(2));
  EXPECT_EQ(graph_code(r->graph), graph_code(disjoint_cliques(4, 3, 2)));
  // At eps = 1/6 the cycle itself is (1/6, 3)-hyperfinite.
  auto self = find_hyper_desk(c12, p, 0.6, 1.0 / 6, 1, {3, 16});
  ASSERT_TRUE(self.has_value());
  EXPECT_TRUE(self->is_input);
}

TEST(FindHyperTest, SizeMismatch) {
  EXPECT_THROW(find_hyper_desk(cycle_graph(9), unions_of_triangles(12), 1.0, 0.1, 1), Error);
}

TEST(PipelineTest, IterationCount) {
  EXPECT_EQ(expected_iterations(0.1, 2, 12), 3u);   // x = 2.4
  EXPECT_EQ(expected_iterations(0.1, 2, 20), 4u);   // x = 4
  EXPECT_EQ(expected_iterations(0.1, 2, 3), 1u);    // x = 0.6
  EXPECT_EQ(expected_iterations(0.1, 3, 1000), 10u);  // x = 300
  EXPECT_NEAR(initial_delta(0.1, 2), 0.2 * std::log(4.0 / 3.0), 1e-15);
}

TEST(PipelineTest, TrianglesAreAFixedPoint) {
  for (std::size_t n : {3, 6, 9, 12}) {
    auto g = disjoint_cliques(n / 3, 3, 2);
    auto p = unions_of_triangles(n);
    auto r = construct_sequence(g, p);
    EXPECT_FALSE(r.stuck_at.has_value());
    EXPECT_EQ(r.h, g);
    EXPECT_EQ(r.states.size(), expected_iterations(0.1, 2, n));
    for (const auto& st : r.states) {
      EXPECT_EQ(st.drift, Rational(0));
      EXPECT_EQ(st.s, 3u);
    }
    EXPECT_TRUE(check_pipeline(g, r).ok());
  }
}

TEST(PipelineTest, ParametersHalveAndKIsCapped) {
  auto g = disjoint_cliques(4, 3, 2);
  auto r = construct_sequence(g, unions_of_triangles(12));
  ASSERT_EQ(r.states.size(), 3u);
  EXPECT_EQ(r.states[0].k, 1u);
  EXPECT_EQ(r.states[1].k, 3u);
  EXPECT_GT(r.states[1].k_theoretical, 1e4);
  EXPECT_DOUBLE_EQ(r.states[2].eps, 0.025);
  auto csv = pipeline_csv(r);
  EXPECT_EQ(csv.rfind("i,eps_i,delta_i,k_i_capped,k_i_theoretical,s_i,drift\n", 0), 0u);
}

TEST(PipelineTest, PiMembersAreFixedPoints) {
  auto p = pi_property(8, 3);
  for (const auto& g : p.members) {
    auto r = construct_sequence(g, p);
    ASSERT_FALSE(r.stuck_at.has_value());
    EXPECT_EQ(r.h, g);
    EXPECT_TRUE(check_pipeline(g, r).ok());
  }
}

TEST(PipelineTest, StuckOutsideTheProperty) {
  auto g = cycle_graph(12);
  auto r = construct_sequence(g, unions_of_triangles(12));
  ASSERT_TRUE(r.stuck_at.has_value());
  EXPECT_EQ(*r.stuck_at, 1u);
  EXPECT_TRUE(r.states.empty());
}

TEST(PipelineTest, CheckFlagsBrokenLogs) {
  auto g = disjoint_cliques(4, 3, 2);
  auto r = construct_sequence(g, unions_of_triangles(12));
  auto bad = r;
  bad.states[1].eps *= 1.5;
  EXPECT_FALSE(check_pipeline(g, bad).halving);
  bad = r;
  bad.states.pop_back();
  EXPECT_FALSE(check_pipeline(g, bad).stop_rule);
  bad = r;
  bad.states[2].drift = Rational(1);
  EXPECT_FALSE(check_pipeline(g, bad).drift_below_delta);
  EXPECT_FALSE(check_pipeline(g, bad).telescoping);
}

}  // namespace
}  // namespace disklab
