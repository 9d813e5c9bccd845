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

#include "disklab/reference.hpp"

#include "disklab/generators.hpp"
#include "disklab/property.hpp"
#include "gtest/gtest.h"

namespace disklab {
namespace {

TEST(SerialReferenceTest, DiskTypes) {
  for (const auto& g : {grid_graph(9, 11), random_regular(300, 4, 2), pi_member(200, 3, CoreKind::kRandomRegular, 3)}) {
    for (std::size_t k = 0; k <= 2; ++k) EXPECT_EQ(disk_types(g, k), serial::disk_types(g, k));
  }
}

TEST(SerialReferenceTest, EstimateAcceptance) {
  auto g = pi_member(400, 4, CoreKind::kCycle, 5);
  auto tester = pi_tester_fn(0.2);
  auto a = estimate_acceptance(tester, g, 40, 77);
  auto b = serial::estimate_acceptance(tester, g, 40, 77);
  EXPECT_EQ(a.accepts, b.accepts);
  EXPECT_EQ(a.max_queries, b.max_queries);
  EXPECT_DOUBLE_EQ(a.mean_queries, b.mean_queries);
}

TEST(SerialReferenceTest, CanonicalizeTester) {
  auto corpus = unions_of_triangles(9).members;
  corpus.push_back(cycle_graph(9));
  auto a = canonicalize_tester(separated_pair_tester(1), corpus, 2, 2000, 4);
  auto b = serial::canonicalize_tester(separated_pair_tester(1), corpus, 2, 2000, 4);
  ASSERT_EQ(a.entries.size(), b.entries.size());
  for (const auto& [key, e] : a.entries) {
    ASSERT_TRUE(b.entries.count(key));
    EXPECT_EQ(e.accepts, b.entries.at(key).accepts);
    EXPECT_EQ(e.total, b.entries.at(key).total);
  }
}

TEST(SerialReferenceTest, EnumerateGraphs) {
  for (std::size_t d : {2, 3}) {
    auto a = enumerate_graphs(7, d);
    auto b = serial::enumerate_graphs(7, d);
    EXPECT_EQ(a.by_size, b.by_size);
  }
}

TEST(SerialReferenceTest, GraphExpansion) {
  for (const auto& g : {cycle_graph(14), grid_graph(4, 4), random_regular(16, 3, 9), disjoint_cliques(3, 4)}) {
    auto a = graph_expansion(g);
    auto b = serial::graph_expansion(g);
    EXPECT_EQ(a.value, b.value);
    EXPECT_EQ(a.witness, b.witness);
  }
}

TEST(SerialReferenceTest, DfpSearch) {
  auto catalog = enumerate_graphs(6, 3);
  for (const auto& g : {random_regular(60, 3, 1), cycle_graph(50, 3), disjoint_cliques(10, 3, 3)}) {
    auto a = dfp_search(g, 1, catalog);
    auto b = serial::dfp_search(g, 1, catalog);
    EXPECT_EQ(a.distance, b.distance);
    EXPECT_EQ(a.code, b.code);
  }
}

TEST(SerialReferenceTest, VerifyPartition) {
  for (const auto& g : {grid_graph(4, 4), grid_graph(12, 12), pi_member(120, 3, CoreKind::kCycle, 2)}) {
    auto p = partition_graph(g, 1, 0.3);
    auto a = verify_partition(g, p, {16, 3000}, 8);
    auto b = serial::verify_partition(g, p, {16, 3000}, 8);
    EXPECT_EQ(a.candidates, b.candidates);
    EXPECT_EQ(a.relevant, b.relevant);
    EXPECT_EQ(to_csv(a), to_csv(b));
    EXPECT_EQ(a.ok(), b.ok());
  }
}

}  // namespace
}  // namespace disklab
