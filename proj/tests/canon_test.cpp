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
#include <map>
#include <numeric>

#include "disklab/canon.hpp"
#include "disklab/edits.hpp"
#include "disklab/error.hpp"
#include "disklab/frequency.hpp"
#include "disklab/generators.hpp"
#include "disklab/kdisk.hpp"
#include "disklab/rng.hpp"
#include "gtest/gtest.h"
#include "oracles.hpp"

namespace disklab {
namespace {

RootedDisk as_disk(const oracle::AdjList& adj) {
  RootedDisk d;
  d.adj = adj;
  d.dist.assign(adj.size(), UINT32_MAX);
  d.dist[0] = 0;
  std::vector<std::uint32_t> q{0};
  for (std::size_t h = 0; h < q.size(); ++h) {
    for (auto w : adj[q[h]]) {
      if (d.dist[w] == UINT32_MAX) {
        d.dist[w] = d.dist[q[h]] + 1;
        q.push_back(w);
      }
    }
  }
  d.radius = *std::max_element(d.dist.begin(), d.dist.end());
  return d;
}

oracle::AdjList permuted(const oracle::AdjList& adj, const std::vector<std::uint32_t>& p) {
  oracle::AdjList out(adj.size());
  for (std::size_t u = 0; u < adj.size(); ++u) {
    for (auto w : adj[u]) out[p[u]].push_back(p[w]);
  }
  for (auto& l : out) std::sort(l.begin(), l.end());
  return out;
}

std::size_t edge_count(const oracle::AdjList& a) {
  std::size_t s = 0;
  for (const auto& l : a) s += l.size();
  return s / 2;
}

TEST(ExtractDiskTest, RadiusZero) {
  auto d = extract_disk(cycle_graph(8), 3, 0);
  EXPECT_EQ(d.num_vertices(), 1u);
  EXPECT_EQ(d.num_edges(), 0u);
  EXPECT_EQ(d.source, std::vector<Vertex>{3});
}

TEST(ExtractDiskTest, CycleBallIsPath) {
  auto d = extract_disk(cycle_graph(8), 0, 2);
  EXPECT_EQ(d.num_vertices(), 5u);
  EXPECT_EQ(d.num_edges(), 4u);
  EXPECT_EQ(canonical_code(d), canonical_code(extract_disk(path_graph(5), 2, 2)));
  std::vector<std::uint32_t> dist = d.dist;
  std::sort(dist.begin(), dist.end());
  EXPECT_EQ(dist, (std::vector<std::uint32_t>{0, 1, 1, 2, 2}));
}

TEST(ExtractDiskTest, InducedClosingEdge) {
  auto tri = cycle_graph(3);
  auto d = extract_disk(tri, 0, 1);
  EXPECT_EQ(d.num_vertices(), 3u);
  EXPECT_EQ(d.num_edges(), 3u);
}

TEST(ExtractDiskTest, InvalidVertex) {
  EXPECT_THROW(extract_disk(cycle_graph(4), 4, 1), Error);
}

TEST(ExtractDiskTest, OracleMatchesGraph) {
  auto g = random_regular(60, 3, 9, 4);
  for (Vertex v = 0; v < 60; v += 7) {
    QueryOracle o(g);
    auto a = extract_disk(g, v, 2);
    auto b = extract_disk(o, v, 2);
    EXPECT_EQ(a.source, b.source);
    EXPECT_EQ(a.adj, b.adj);
    EXPECT_LE(o.queries(), a.num_vertices() * g.degree_bound());
  }
}

TEST(CanonicalCodeTest, SmallExamples) {
  EXPECT_EQ(disk_type(cycle_graph(8), 0, 1), disk_type(cycle_graph(9), 3, 1));
  EXPECT_NE(disk_type(cycle_graph(8), 0, 1), disk_type(path_graph(8), 0, 1));
  // Same graph, different root orbit.
  EXPECT_NE(disk_type(path_graph(5), 0, 4), disk_type(path_graph(5), 2, 4));
}

TEST(CanonicalCodeTest, HexRoundTrip) {
  auto g = grid_graph(5, 5);
  for (Vertex v = 0; v < 25; ++v) {
    auto t = disk_type(g, v, 2);
    auto back = DiskType::from_hex(t.hex(), 4);
    EXPECT_EQ(back, t);
    EXPECT_EQ(back.num_vertices, t.num_vertices);
    EXPECT_EQ(back.radius, 2u);
    EXPECT_EQ(canonical_code(back.decode()), t);
    EXPECT_EQ(back.root_degree(), g.degree(v));
  }
  EXPECT_THROW(DiskType::from_hex("zz"), Error);
  EXPECT_THROW(DiskType::from_hex("000100"), Error);
}

// Exhaustive check: code equality coincides with rooted isomorphism over
// every connected rooted graph on up to 6 vertices.
TEST(CanonicalCodeTest, ExhaustiveAgainstBruteForce) {
  for (std::size_t m = 1; m <= 6; ++m) {
    auto graphs = oracle::all_connected_rooted(m);
    std::map<std::string, std::vector<std::size_t>> classes;
    for (std::size_t i = 0; i < graphs.size(); ++i) {
      classes[canonical_code(as_disk(graphs[i])).code].push_back(i);
    }
    std::vector<std::size_t> reps;
    for (const auto& [code, members] : classes) {
      for (auto i : members) {
        ASSERT_TRUE(oracle::rooted_isomorphic(graphs[members[0]], graphs[i]))
            << "m=" << m << " graph " << i;
      }
      reps.push_back(members[0]);
    }
    for (std::size_t a = 0; a < reps.size(); ++a) {
      for (std::size_t b = a + 1; b < reps.size(); ++b) {
        const auto& ga = graphs[reps[a]];
        const auto& gb = graphs[reps[b]];
        if (edge_count(ga) != edge_count(gb)) continue;
        ASSERT_FALSE(oracle::rooted_isomorphic(ga, gb)) << "m=" << m;
      }
    }
  }
}

// Random rooted graphs on 7 and 8 vertices: relabelings keep the code, and
// distinct codes never hide an isomorphism.
TEST(CanonicalCodeTest, RandomEightVertexDisks) {
  Rng rng(23);
  for (int trial = 0; trial < 400; ++trial) {
    std::size_t m = 7 + trial % 2;
    auto make = [&] {
      while (true) {
        oracle::AdjList adj(m);
        for (std::uint32_t i = 0; i < m; ++i) {
          for (std::uint32_t j = i + 1; j < m; ++j) {
            if (uniform_below(rng, 100) < 35) {
              adj[i].push_back(j);
              adj[j].push_back(i);
            }
          }
        }
        auto d = as_disk(adj);
        if (std::all_of(d.dist.begin(), d.dist.end(), [](auto x) { return x != UINT32_MAX; })) {
          return adj;
        }
      }
    };
    auto a = make();
    std::vector<std::uint32_t> p(m);
    std::iota(p.begin(), p.end(), 0u);
    std::shuffle(p.begin() + 1, p.end(), rng);
    auto pa = permuted(a, p);
    EXPECT_EQ(canonical_code(as_disk(a)), canonical_code(as_disk(pa)));
    auto b = make();
    bool same_code = canonical_code(as_disk(a)) == canonical_code(as_disk(b));
    EXPECT_EQ(same_code, oracle::rooted_isomorphic(a, b));
  }
}

TEST(CanonicalCodeTest, HighlySymmetricInputs) {
  // Vertex-transitive and regular graphs stress the pruning.
  auto k44 = [] {
    std::vector<Edge> e;
    for (Vertex i = 0; i < 4; ++i) {
      for (Vertex j = 4; j < 8; ++j) e.push_back({i, j});
    }
    return BoundedGraph::build(8, 4, e);
  }();
  auto cube = BoundedGraph::build(8, 3, {{0, 1}, {1, 3}, {3, 2}, {2, 0}, {4, 5}, {5, 7},
                                         {7, 6}, {6, 4}, {0, 4}, {1, 5}, {2, 6}, {3, 7}});
  for (const auto* g : {&k44, &cube}) {
    auto t = disk_type(*g, 0, 3);
    for (Vertex v = 1; v < 8; ++v) EXPECT_EQ(disk_type(*g, v, 3), t);
  }
  auto big = disjoint_cliques(4, 5, 4);
  auto t = disk_type(big, 0, 1);
  for (Vertex v = 1; v < 20; ++v) EXPECT_EQ(disk_type(big, v, 1), t);
}

TEST(CanonicalFormTest, WholeGraphColorsRespected) {
  canon::AdjList path{{1}, {0, 2}, {1}};
  std::vector<std::uint32_t> same{0, 0, 0};
  std::vector<std::uint32_t> end_marked{0, 1, 1};
  std::vector<std::uint32_t> mid_marked{1, 0, 1};
  auto a = canon::canonical_form(path, same);
  auto b = canon::canonical_form(path, end_marked);
  auto c = canon::canonical_form(path, mid_marked);
  EXPECT_EQ(b.order[0], 0u);
  EXPECT_EQ(c.order[0], 1u);
  EXPECT_NE(b.bits, c.bits);
  EXPECT_EQ(a.order.size(), 3u);
}

TEST(FrequencyTest, Edgeless) {
  auto f = frequency_vector(edgeless_graph(6), 1);
  EXPECT_EQ(f.support_size(), 1u);
  EXPECT_EQ(f.counts.begin()->second, 6u);
  EXPECT_EQ(f.denominator, 6u);
}

TEST(FrequencyTest, CycleAndPath) {
  auto fc = frequency_vector(cycle_graph(8), 1);
  auto fp = frequency_vector(path_graph(8), 1);
  EXPECT_EQ(fc.support_size(), 1u);
  EXPECT_EQ(fp.support_size(), 2u);
  auto interior = disk_type(path_graph(8), 3, 1);
  auto end = disk_type(path_graph(8), 0, 1);
  EXPECT_EQ(fp.exact(interior), Rational(6, 8));
  EXPECT_EQ(fp.exact(end), Rational(2, 8));
  EXPECT_EQ(l1_distance_exact(fc, fp), Rational(1, 2));
  EXPECT_EQ(l1_distance_exact(fc, fc), Rational(0));
  EXPECT_EQ(l1_distance(frequency_vector(edgeless_graph(8), 1), fc), 2.0);
  EXPECT_DOUBLE_EQ(tv_distance(fc, fp), 0.25);
}

TEST(FrequencyTest, PiMember) {
  auto g = pi_member(10, 3, CoreKind::kCycle, 0);
  auto f = frequency_vector(g, 1);
  EXPECT_EQ(f.support_size(), 2u);
  EXPECT_EQ(f.exact(disk_type(g, 9, 1)), Rational(1, 2));
  EXPECT_EQ(f.exact(disk_type(g, 0, 1)), Rational(1, 2));
}

TEST(FrequencyTest, SubsetAndErrors) {
  auto g = path_graph(8);
  std::vector<Vertex> ends{0, 7};
  auto f = frequency_vector(g, 1, std::span<const Vertex>(ends));
  EXPECT_EQ(f.support_size(), 1u);
  EXPECT_EQ(f.denominator, 2u);
  std::vector<Vertex> none;
  EXPECT_THROW(frequency_vector(g, 1, std::span<const Vertex>(none)), Error);
  EXPECT_THROW(l1_distance(frequency_vector(g, 1), frequency_vector(g, 2)), Error);
}

TEST(FrequencyTest, SupportAtMostN) {
  auto g = random_regular(50, 3, 4, 4);
  for (std::size_t k = 0; k <= 3; ++k) {
    auto f = frequency_vector(g, k);
    EXPECT_LE(f.support_size(), 50u);
    std::uint64_t total = 0;
    for (const auto& [t, c] : f.counts) total += c;
    EXPECT_EQ(total, f.denominator);
  }
}

TEST(FrequencyTest, LocalityUnderRelabeling) {
  Rng rng(3);
  auto g = random_regular(40, 3, 1, 4);
  for (int trial = 0; trial < 10; ++trial) {
    std::vector<Vertex> perm(40);
    std::iota(perm.begin(), perm.end(), 0u);
    std::shuffle(perm.begin(), perm.end(), rng);
    auto h = relabel(g, perm);
    for (Vertex v = 0; v < 40; ++v) EXPECT_EQ(disk_type(g, v, 2), disk_type(h, perm[v], 2));
  }
}

TEST(FrequencyTest, TriangleInequality) {
  Rng rng(8);
  std::vector<FrequencyVector> fs;
  for (std::uint64_t s = 0; s < 8; ++s) fs.push_back(frequency_vector(random_regular(30, 3, s, 3), 2));
  fs.push_back(frequency_vector(cycle_graph(30, 3), 2));
  fs.push_back(frequency_vector(grid_graph(5, 6), 2));
  for (std::size_t a = 0; a < fs.size(); ++a) {
    for (std::size_t b = 0; b < fs.size(); ++b) {
      for (std::size_t c = 0; c < fs.size(); ++c) {
        EXPECT_LE(l1_distance_exact(fs[a], fs[c]),
                  l1_distance_exact(fs[a], fs[b]) + l1_distance_exact(fs[b], fs[c]));
      }
    }
  }
}

TEST(EstimateFrequencyTest, SingleTypeGraphs) {
  auto e = edgeless_graph(100);
  QueryOracle oe(e);
  auto fe = estimate_frequency_vector(oe, 1, 10, 1);
  EXPECT_EQ(fe.support_size(), 1u);
  EXPECT_EQ(fe.counts.begin()->second, 10u);
  auto c = cycle_graph(100);
  QueryOracle oc(c);
  auto fc = estimate_frequency_vector(oc, 2, 50, 3);
  EXPECT_EQ(fc.support_size(), 1u);
  EXPECT_EQ(fc.counts.begin()->first, disk_type(c, 0, 2));
  EXPECT_LE(oc.queries(), 50u * 5u * 2u);
}

TEST(EstimateFrequencyTest, Deterministic) {
  auto g = random_regular(200, 3, 1);
  QueryOracle a(g), b(g);
  EXPECT_EQ(estimate_frequency_vector(a, 2, 30, 9), estimate_frequency_vector(b, 2, 30, 9));
}

// The isolated fraction estimated from 400 samples lands within 0.07 of 1/2
// in at least 99% of 1000 seeds.
TEST(EstimateFrequencyTest, BinomialConcentration) {
  auto g = pi_member(1000, 3, CoreKind::kCycle, 0);
  auto isolated = disk_type(g, 999, 1);
  int good = 0;
  for (std::uint64_t s = 0; s < 1000; ++s) {
    QueryOracle o(g);
    auto f = estimate_frequency_vector(o, 1, 400, stream_seed(5, s));
    if (std::abs(f.fraction(isolated) - 0.5) <= 0.07) ++good;
  }
  EXPECT_GE(good, 990);
}

TEST(EstimateFrequencyTest, ConvergesToExact) {
  auto g = pi_member(300, 4, CoreKind::kRandomRegular, 2);
  auto exact = frequency_vector(g, 1);
  int good = 0;
  for (std::uint64_t s = 0; s < 200; ++s) {
    QueryOracle o(g);
    auto f = estimate_frequency_vector(o, 1, 2000, stream_seed(1, s));
    if (l1_distance(f, exact) <= 0.1) ++good;
  }
  EXPECT_GE(good, 190);
}

}  // namespace
}  // namespace disklab
