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

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace disklab::canon {

using AdjList = std::vector<std::vector<std::uint32_t>>;

// Canonical labeling of a vertex-colored simple graph.
//
// `order[p]` is the vertex placed at position p. Positions are grouped by
// ascending initial color, so a uniquely colored vertex with the smallest
// color (a disk root) always lands at position 0. `bits` is the upper
// triangle of the adjacency matrix in canonical order, row-major, packed
// most-significant-bit first; two colored graphs are isomorphic (by a
// color-preserving map) iff their color multisets match and their `bits`
// are equal.
struct CanonicalForm {
  std::vector<std::uint32_t> order;
  std::vector<std::uint64_t> bits;
};

// Individualization-refinement search with automorphism pruning. Exact for
// every input; cost grows with the symmetry that color refinement cannot
// resolve, which is small for bounded-degree disks.
CanonicalForm canonical_form(const AdjList& adj, std::span<const std::uint32_t> colors);

// Byte encoding of `bits` for an n-vertex graph (ceil(n(n-1)/2 / 8) bytes).
std::string pack_bits(const std::vector<std::uint64_t>& bits, std::size_t n);
// Inverse of pack_bits: adjacency lists of the canonically ordered graph.
AdjList unpack_bits(std::string_view bytes, std::size_t n);

}  // namespace disklab::canon
