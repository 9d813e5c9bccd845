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

// Serial reference vs OpenMP kernel, one pair per parallel loop.

#include <benchmark/benchmark.h>

#include "disklab/generators.hpp"
#include "disklab/property.hpp"
#include "disklab/reference.hpp"

namespace disklab {
namespace {

const BoundedGraph& typing_graph() {
  static const BoundedGraph g = random_regular(2000, 3, 1);
  return g;
}

void BM_DiskTypesParallel(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(disk_types(typing_graph(), 2));
}
void BM_DiskTypesSerial(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(serial::disk_types(typing_graph(), 2));
}
BENCHMARK(BM_DiskTypesParallel)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_DiskTypesSerial)->Unit(benchmark::kMillisecond);

void BM_ExpansionParallel(benchmark::State& state) {
  auto g = random_regular(20, 3, 2);
  for (auto _ : state) benchmark::DoNotOptimize(graph_expansion(g));
}
void BM_ExpansionSerial(benchmark::State& state) {
  auto g = random_regular(20, 3, 2);
  for (auto _ : state) benchmark::DoNotOptimize(serial::graph_expansion(g));
}
BENCHMARK(BM_ExpansionParallel)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ExpansionSerial)->Unit(benchmark::kMillisecond);

void BM_AcceptanceParallel(benchmark::State& state) {
  auto g = pi_member(1000, 4, CoreKind::kCycle, 3);
  auto tester = pi_tester_fn(0.1);
  for (auto _ : state) benchmark::DoNotOptimize(estimate_acceptance(tester, g, 50, 1));
}
void BM_AcceptanceSerial(benchmark::State& state) {
  auto g = pi_member(1000, 4, CoreKind::kCycle, 3);
  auto tester = pi_tester_fn(0.1);
  for (auto _ : state) benchmark::DoNotOptimize(serial::estimate_acceptance(tester, g, 50, 1));
}
BENCHMARK(BM_AcceptanceParallel)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_AcceptanceSerial)->Unit(benchmark::kMillisecond);

void BM_CanonicalizeParallel(benchmark::State& state) {
  auto corpus = unions_of_triangles(12).members;
  for (auto _ : state) {
    benchmark::DoNotOptimize(canonicalize_tester(separated_pair_tester(1), corpus, 2, 5000, 1));
  }
}
void BM_CanonicalizeSerial(benchmark::State& state) {
  auto corpus = unions_of_triangles(12).members;
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        serial::canonicalize_tester(separated_pair_tester(1), corpus, 2, 5000, 1));
  }
}
BENCHMARK(BM_CanonicalizeParallel)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CanonicalizeSerial)->Unit(benchmark::kMillisecond);

void BM_EnumerateParallel(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_graphs(8, 3));
}
void BM_EnumerateSerial(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(serial::enumerate_graphs(8, 3));
}
BENCHMARK(BM_EnumerateParallel)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_EnumerateSerial)->Unit(benchmark::kMillisecond);

void BM_DfpParallel(benchmark::State& state) {
  static const GraphCatalog catalog = enumerate_graphs(7, 3);
  auto g = random_regular(200, 3, 4);
  for (auto _ : state) benchmark::DoNotOptimize(dfp_search(g, 1, catalog));
}
void BM_DfpSerial(benchmark::State& state) {
  static const GraphCatalog catalog = enumerate_graphs(7, 3);
  auto g = random_regular(200, 3, 4);
  for (auto _ : state) benchmark::DoNotOptimize(serial::dfp_search(g, 1, catalog));
}
BENCHMARK(BM_DfpParallel)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_DfpSerial)->Unit(benchmark::kMillisecond);

void BM_VerifyParallel(benchmark::State& state) {
  auto g = grid_graph(20, 20);
  auto p = partition_graph(g, 1, 0.3);
  for (auto _ : state) benchmark::DoNotOptimize(verify_partition(g, p, {16, 10000}, 1));
}
void BM_VerifySerial(benchmark::State& state) {
  auto g = grid_graph(20, 20);
  auto p = partition_graph(g, 1, 0.3);
  for (auto _ : state) benchmark::DoNotOptimize(serial::verify_partition(g, p, {16, 10000}, 1));
}
BENCHMARK(BM_VerifyParallel)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_VerifySerial)->Unit(benchmark::kMillisecond);

}  // namespace
}  // namespace disklab

BENCHMARK_MAIN();
