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

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>

#include "disklab/graph.hpp"

namespace disklab {

enum class Family {
  kPath,
  kCycle,
  kGrid,
  kDisjointCliques,
  kEdgeless,
  kMatching,
  kRandomRegular,
  kPiMember,
};

enum class CoreKind { kCycle, kRandomRegular };

// Parameters not used by a family are ignored. A zero degree bound selects
// the family's natural bound (max degree of the construction, at least 1).
struct GenParams {
  std::size_t n = 0;
  std::size_t d = 0;
  std::size_t deg = 3;          // random_regular degree
  std::size_t rows = 0;         // grid
  std::size_t cols = 0;         // grid
  std::size_t clique_size = 3;  // disjoint_cliques
  CoreKind core = CoreKind::kCycle;
};

Family parse_family(std::string_view name);
std::string_view to_string(Family family);
CoreKind parse_core_kind(std::string_view name);

// Deterministic for a fixed (family, params, seed). Throws kInvalidParams.
BoundedGraph generate(Family family, const GenParams& params, std::uint64_t seed);

BoundedGraph path_graph(std::size_t n, std::size_t d = 2);
BoundedGraph cycle_graph(std::size_t n, std::size_t d = 2);
BoundedGraph grid_graph(std::size_t rows, std::size_t cols, std::size_t d = 4);
BoundedGraph disjoint_cliques(std::size_t count, std::size_t size, std::size_t d = 0);
BoundedGraph edgeless_graph(std::size_t n, std::size_t d = 1);
// Pairs (0,1), (2,3), ...; a trailing vertex of an odd n stays isolated.
BoundedGraph matching_graph(std::size_t n, std::size_t d = 1);
// Configuration model with rejection of loops and multi-edges.
BoundedGraph random_regular(std::size_t n, std::size_t deg, std::uint64_t seed,
                            std::size_t d = 0);
// One connected component on vertices [0, ceil(n/2)) plus floor(n/2)
// isolated vertices. Requires d >= 3.
BoundedGraph pi_member(std::size_t n, std::size_t d, CoreKind core,
                       std::uint64_t seed);

}  // namespace disklab
