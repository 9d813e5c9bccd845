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

#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "disklab/graph.hpp"
#include "disklab/oracle.hpp"

namespace disklab {

// Radius-k neighborhood of a root, as an induced subgraph with local ids.
//
// Local id 0 is the root; ids are assigned in BFS order, so `dist` is
// non-decreasing. `source` holds the original vertex ids when extracted
// from a graph or oracle (empty for decoded disks).
struct RootedDisk {
  std::size_t radius = 0;
  std::vector<std::uint32_t> dist;
  std::vector<std::vector<std::uint32_t>> adj;
  std::vector<Vertex> source;

  std::size_t num_vertices() const { return dist.size(); }
  std::size_t num_edges() const;
};

// Throws kInvalidVertex.
RootedDisk extract_disk(const BoundedGraph& g, Vertex v, std::size_t k);

// Same disk discovered through neighbor queries only. Each vertex at
// distance < k has its full neighbor list read (at most deg + 1 queries);
// edges among distance-k vertices are found by reading their lists too.
RootedDisk extract_disk(QueryOracle& oracle, Vertex v, std::size_t k);

// Isomorphism type of a rooted disk.
//
// `code` is a canonical byte string: radius (2 bytes), vertex count (2 bytes)
// and the canonical adjacency bits. Two disks have equal codes iff they are
// isomorphic by a root-preserving map. Ordering and equality use the code
// only; `degree_bound` is carried along as metadata.
struct DiskType {
  std::string code;
  std::size_t num_vertices = 0;
  std::size_t radius = 0;
  std::size_t degree_bound = 0;

  std::string hex() const;
  // Throws kParseError on malformed input.
  static DiskType from_hex(std::string_view hex, std::size_t degree_bound = 0);
  // Canonical representative of the type.
  RootedDisk decode() const;
  std::size_t root_degree() const;

  bool operator==(const DiskType& o) const { return code == o.code; }
  std::strong_ordering operator<=>(const DiskType& o) const { return code <=> o.code; }
};

DiskType canonical_code(const RootedDisk& disk, std::size_t degree_bound = 0);

// Convenience: canonical_code(extract_disk(g, v, k), g.degree_bound()).
DiskType disk_type(const BoundedGraph& g, Vertex v, std::size_t k);

}  // namespace disklab
