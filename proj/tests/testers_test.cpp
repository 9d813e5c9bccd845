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

#include <algorithm>
#include <cmath>
#include <set>

#include "disklab/edits.hpp"
#include "disklab/error.hpp"
#include "disklab/generators.hpp"
#include "disklab/property.hpp"
#include "disklab/rng.hpp"
#include "disklab/testers.hpp"
#include "gtest/gtest.h"

namespace disklab {
namespace {

BoundedGraph random_bounded(std::size_t n, std::size_t d, std::size_t tries, Rng& rng) {
  std::vector<Edge> edges;
  std::set<Edge> seen;
  std::vector<std::size_t> deg(n, 0);
  for (std::size_t i = 0; i < tries; ++i) {
    auto u = static_cast<Vertex>(uniform_below(rng, n));
    auto v = static_cast<Vertex>(uniform_below(rng, n));
    if (u == v || deg[u] >= d || deg[v] >= d || !seen.insert(make_edge(u, v)).second) continue;
    edges.push_back(make_edge(u, v));
    ++deg[u];
    ++deg[v];
  }
  return BoundedGraph::build(n, d, edges);
}

TEST(PiMemberTest, Examples) {
  auto c5 = with_degree_bound(disjoint_union(cycle_graph(5), edgeless_graph(5)), 3);
  EXPECT_TRUE(is_pi_member(c5));
  EXPECT_FALSE(is_pi_member(edgeless_graph(10)));
  EXPECT_FALSE(is_pi_member(disjoint_union(cycle_graph(5), cycle_graph(5))));
  EXPECT_TRUE(is_pi_member(edgeless_graph(2)));
  EXPECT_TRUE(is_pi_member(edgeless_graph(1)));
  EXPECT_TRUE(is_pi_member(BoundedGraph::build(0, 3, {})));
  EXPECT_TRUE(is_pi_member(BoundedGraph::build(3, 3, {{0, 2}})));
  EXPECT_FALSE(is_pi_member(path_graph(3)));
}

TEST(PiMemberTest, GeneratedMembers) {
  for (std::size_t n = 1; n < 60; n += 3) {
    for (auto core : {CoreKind::kCycle, CoreKind::kRandomRegular}) {
      EXPECT_TRUE(is_pi_member(pi_member(n, 3, core, n))) << n;
    }
  }
}

TEST(PiTesterTest, ExactModeOnSmallGraphs) {
  auto g = pi_member(1000, 4, CoreKind::kRandomRegular, 1);
  QueryOracle o(g);
  auto v = pi_tester(o, 0.1, 3);
  EXPECT_TRUE(v.accepted());
  EXPECT_EQ(v.stage, "exact");
  EXPECT_LE(v.queries, pi_query_budget(4, 0.1));
  auto e = edgeless_graph(1000, 4);
  QueryOracle oe(e);
  EXPECT_FALSE(pi_tester(oe, 0.05, 3).accepted());
}

TEST(PiTesterTest, SampledModeCompleteness) {
  for (auto core : {CoreKind::kCycle, CoreKind::kRandomRegular}) {
    auto g = pi_member(4000, 4, core, 2);
    auto est = estimate_acceptance(pi_tester_fn(0.1), g, 60, 7);
    EXPECT_GE(est.rate, 0.75);
    EXPECT_LE(est.max_queries, pi_query_budget(4, 0.1));
  }
}

TEST(PiTesterTest, SampledModeSoundness) {
  auto e = edgeless_graph(4000, 4);
  auto m = matching_graph(4000, 4);
  for (const auto* g : {&e, &m}) {
    auto est = estimate_acceptance(pi_tester_fn(0.05), *g, 40, 5);
    EXPECT_LE(est.rate, 0.25);
    EXPECT_LE(est.max_queries, pi_query_budget(4, 0.05));
  }
  // Many small cycles with the right isolated count: only stage 2 can see it.
  std::vector<Edge> edges;
  for (Vertex b = 0; b + 5 <= 2000; b += 5) {
    for (Vertex i = 0; i < 5; ++i) edges.push_back(make_edge(b + i, b + (i + 1) % 5));
  }
  auto small = BoundedGraph::build(4000, 4, edges);
  QueryOracle o(small);
  auto v = pi_tester(o, 0.1, 1);
  EXPECT_FALSE(v.accepted());
  EXPECT_EQ(v.stage, "stage2");
}

TEST(PiTesterTest, Deterministic) {
  auto g = pi_member(3000, 4, CoreKind::kCycle, 0);
  QueryOracle a(g), b(g);
  auto va = pi_tester(a, 0.1, 42);
  auto vb = pi_tester(b, 0.1, 42);
  EXPECT_EQ(va.decision, vb.decision);
  EXPECT_EQ(va.queries, vb.queries);
  EXPECT_EQ(va.queries, a.queries());
  EXPECT_THROW(pi_tester(a, 0.0, 1), Error);
  EXPECT_THROW(pi_tester(a, 1.5, 1), Error);
}

TEST(EstimateAcceptanceTest, ConstantAccept) {
  auto est = estimate_acceptance(accept_all_tester(), cycle_graph(10), 50, 0);
  EXPECT_EQ(est.rate, 1.0);
  EXPECT_EQ(est.mean_queries, 0.0);
  EXPECT_THROW(estimate_acceptance(accept_all_tester(), cycle_graph(10), 0, 0), Error);
}

TEST(RepairTest, MemberNeedsNothing) {
  EXPECT_TRUE(repair_to_pi(pi_member(20, 3, CoreKind::kCycle, 0), 0.1).empty());
}

TEST(RepairTest, EdgelessTen) {
  auto g = edgeless_graph(10, 3);
  auto s = repair_to_pi(g, 0.9);
  EXPECT_EQ(s.size(), 4u);
  EXPECT_TRUE(std::all_of(s.edits.begin(), s.edits.end(),
                          [](const Edit& e) { return e.op == EditOp::kInsert; }));
  EXPECT_TRUE(is_pi_member(apply_edits(g, s)));
}

TEST(RepairTest, CyclesUnderHypotheses) {
  // Three 100-cycles, two 5-cycles and 290 isolated vertices on n = 600.
  std::vector<Edge> edges;
  const std::size_t n = 600;
  for (Vertex c = 0; c < 3; ++c) {
    for (Vertex i = 0; i < 100; ++i) {
      edges.push_back(make_edge(100 * c + i, 100 * c + (i + 1) % 100));
    }
  }
  for (Vertex b = 300; b < 310; b += 5) {
    for (Vertex i = 0; i < 5; ++i) edges.push_back(make_edge(b + i, b + (i + 1) % 5));
  }
  auto g = BoundedGraph::build(n, 3, edges);
  auto st = pi_claim_stats(g, 0.2);
  ASSERT_TRUE(st.hypotheses_hold());
  auto s = repair_to_pi(g, 0.2);
  EXPECT_TRUE(is_pi_member(apply_edits(g, s)));
  EXPECT_LE(static_cast<double>(s.size()), 0.2 * 3 * n);
}

TEST(RepairTest, SaturatedComponentsNeedCycleEdges) {
  // Two disjoint K4 with d = 3 plus isolated vertices: no slack anywhere.
  auto g = with_degree_bound(disjoint_union(disjoint_cliques(2, 4, 3), edgeless_graph(8)), 3);
  auto s = repair_to_pi(g, 0.5);
  auto h = apply_edits(g, s);
  EXPECT_TRUE(is_pi_member(h));
  EXPECT_LE(s.size(), 3u);
}

TEST(RepairTest, TooManyAndTooFewIsolated) {
  auto many = with_degree_bound(disjoint_union(cycle_graph(4), edgeless_graph(16)), 3);
  auto s1 = repair_to_pi(many, 0.5);
  EXPECT_TRUE(is_pi_member(apply_edits(many, s1)));
  EXPECT_LE(s1.size(), 2u * 6u);
  auto few = random_regular(20, 3, 3);
  auto s2 = repair_to_pi(few, 0.5);
  EXPECT_TRUE(is_pi_member(apply_edits(few, s2)));
  EXPECT_LE(s2.size(), 3u * 10u);
}

TEST(RepairTest, ArbitraryGraphsLandInPi) {
  Rng rng(12);
  for (int trial = 0; trial < 200; ++trial) {
    std::size_t n = 1 + uniform_below(rng, 80);
    std::size_t d = 3 + uniform_below(rng, 3);
    auto g = random_bounded(n, d, uniform_below(rng, 3 * n + 1), rng);
    auto s = repair_to_pi(g, 0.3);
    EXPECT_TRUE(is_pi_member(apply_edits(g, s))) << "trial " << trial;
  }
}

TEST(RepairTest, ConditionalBoundOnRandomGraphs) {
  Rng rng(99);
  std::size_t checked = 0;
  for (int trial = 0; trial < 400; ++trial) {
    std::size_t n = 20 + uniform_below(rng, 200);
    double eps = 0.1 + 0.1 * static_cast<double>(uniform_below(rng, 5));
    auto half = pi_member(n, 3, CoreKind::kRandomRegular, trial);
    EditScript noise;
    auto edges = half.edges();
    std::size_t drops = uniform_below(rng, 4);
    for (std::size_t i = 0; i < drops && !edges.empty(); ++i) {
      auto e = edges[uniform_below(rng, edges.size())];
      if (std::find_if(noise.edits.begin(), noise.edits.end(), [&](const Edit& x) {
            return x.u == e.u && x.v == e.v;
          }) == noise.edits.end()) {
        noise.remove(e.u, e.v);
      }
    }
    auto g = apply_edits(half, noise);
    auto st = pi_claim_stats(g, eps);
    if (!st.hypotheses_hold()) continue;
    ++checked;
    auto s = repair_to_pi(g, eps);
    EXPECT_TRUE(is_pi_member(apply_edits(g, s)));
    EXPECT_LE(static_cast<double>(s.size()), eps * 3.0 * static_cast<double>(n));
  }
  EXPECT_GT(checked, 100u);
}

TEST(RepairTest, DegreeBoundTooSmall) {
  EXPECT_THROW(repair_to_pi(edgeless_graph(10, 2), 0.5), Error);
  EXPECT_TRUE(is_pi_member(apply_edits(edgeless_graph(4, 1), repair_to_pi(edgeless_graph(4, 1), 0.5))));
}

// Every graph certified far by exhaustive search violates one of the two
// structural hypotheses.
TEST(StructureClaimTest, FarGraphsBreakAHypothesis) {
  for (std::size_t n = 4; n <= 8; ++n) {
    auto prop = pi_property(n, 3);
    for (double eps : {0.05, 0.1, 0.2}) {
      for (const auto& g : far_set(prop, eps)) {
        EXPECT_FALSE(pi_claim_stats(g, eps).hypotheses_hold()) << "n=" << n << " eps=" << eps;
      }
    }
  }
}

}  // namespace
}  // namespace disklab
