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

namespace disklab {

// Adjacency-list query access to a graph, counting every neighbor query.
//
// Answers depend only on the wrapped graph. An oracle has a single owner;
// concurrent trials each build their own oracle over a shared graph.
class QueryOracle {
 public:
  explicit QueryOracle(const BoundedGraph& graph) : graph_(&graph) {}

  // Returns the i-th (1-based) entry of v's sorted neighbor list, or nullopt
  // when deg(v) < i. Throws kInvalidVertex / kInvalidIndex without counting.
  std::optional<Vertex> neighbor(Vertex v, std::size_t i);

  std::size_t num_vertices() const { return graph_->num_vertices(); }
  std::size_t degree_bound() const { return graph_->degree_bound(); }
  std::size_t queries() const { return queries_; }

 private:
  const BoundedGraph* graph_;
  std::size_t queries_ = 0;
};

}  // namespace disklab
