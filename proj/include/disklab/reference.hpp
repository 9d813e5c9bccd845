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

#pragma once

// Single-threaded counterparts of the OpenMP kernels. Each one computes the
// same result as its parallel namesake with a plain loop; tests check the
// two agree and the benchmarks compare their speed.

#include <cstddef>
#include <cstdint>
#include <vector>

#include "disklab/canonical.hpp"
#include "disklab/catalog.hpp"
#include "disklab/frequency.hpp"
#include "disklab/hyperfinite.hpp"
#include "disklab/kdisk.hpp"
#include "disklab/partition.hpp"
#include "disklab/testers.hpp"

namespace disklab::serial {

std::vector<DiskType> disk_types(const BoundedGraph& g, std::size_t k);

AcceptanceEstimate estimate_acceptance(const Tester& tester, const BoundedGraph& g,
                                       std::size_t trials, std::uint64_t seed);

DecisionTable canonicalize_tester(const Tester& base, const std::vector<BoundedGraph>& corpus,
                                  std::size_t t, std::size_t trials, std::uint64_t seed,
                                  const CanonicalConfig& cfg = {});

GraphCatalog enumerate_graphs(std::size_t max_n, std::size_t d, std::size_t limit = 200000);

// Exhaustive expansion; n <= 30.
ExpansionResult graph_expansion(const BoundedGraph& g);

DfpResult dfp_search(const BoundedGraph& g, std::size_t k, const GraphCatalog& catalog);

PartitionReport verify_partition(const BoundedGraph& g, const Partition& p,
                                 const XBudget& budget = {}, std::uint64_t seed = 0);

}  // namespace disklab::serial
