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
#include <optional>

#include "disklab/graph.hpp"
#include "disklab/kdisk.hpp"

namespace disklab {

// A graph with adjacent vertices u1, u2 whose k-disks have the requested types.
struct CompatibilityWitness {
  BoundedGraph graph;
  Vertex u1 = 0;
  Vertex u2 = 0;
};

struct CompatibilityResult {
  bool incompatible = true;
  std::optional<CompatibilityWitness> witness;
  std::size_t candidates_checked = 0;
};

// Decides whether two disk types of the same radius can sit on adjacent
// vertices of some d-bounded graph.
//
// A realizing graph can always be cut down to the union of the two balls,
// glued along their overlap with no other edges, so the search backtracks
// over partial identifications of the two disks. Exhaustive; throws
// kSearchCapExceeded when |a| + |b| > cap and kRadiusMismatch when radii differ.
CompatibilityResult check_compatibility(const DiskType& a, const DiskType& b, std::size_t d,
                                        std::size_t cap = 16);

inline bool incompatible(const DiskType& a, const DiskType& b, std::size_t d,
                         std::size_t cap = 16) {
  return check_compatibility(a, b, d, cap).incompatible;
}

}  // namespace disklab
