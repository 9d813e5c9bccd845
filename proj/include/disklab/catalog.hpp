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
#include <map>
#include <string>
#include <vector>

#include "disklab/graph.hpp"

namespace disklab {

// Canonical byte string of an unrooted graph: equal iff isomorphic.
std::string graph_code(const BoundedGraph& g);

// The isomorphic copy of g in canonical vertex order.
BoundedGraph canonical_graph(const BoundedGraph& g);

// Every d-bounded graph on 0..max_n vertices up to isomorphism.
//
// Level m is generated from level m-1 by adding one vertex joined to every
// admissible neighbor set, then deduplicating by graph_code. Each level is
// sorted by code, so the catalog is deterministic.
struct GraphCatalog {
  std::size_t d = 0;
  std::vector<std::vector<BoundedGraph>> by_size;

  const std::vector<BoundedGraph>& of_size(std::size_t m) const { return by_size.at(m); }
  std::size_t total() const;
};

// Throws kCapExceeded if any level would hold more than `limit` graphs.
GraphCatalog enumerate_graphs(std::size_t max_n, std::size_t d, std::size_t limit = 200000);

// Graph with one extra vertex n joined to `nbrs`.
BoundedGraph extend_graph(const BoundedGraph& g, const std::vector<Vertex>& nbrs);

}  // namespace disklab
