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
#include <vector>

#include "disklab/graph.hpp"

namespace disklab {

enum class EditOp { kInsert, kDelete };

struct Edit {
  EditOp op = EditOp::kInsert;
  Vertex u = 0;
  Vertex v = 0;

  bool operator==(const Edit&) const = default;
};

// Ordered edge modifications. Its size is the modification count used by the
// eps-far / eps-close metric (more than eps*d*n edits means far).
struct EditScript {
  std::vector<Edit> edits;

  std::size_t size() const { return edits.size(); }
  bool empty() const { return edits.empty(); }
  void insert(Vertex u, Vertex v) { edits.push_back({EditOp::kInsert, u, v}); }
  void remove(Vertex u, Vertex v) { edits.push_back({EditOp::kDelete, u, v}); }
};

// Every prefix of the script must leave a valid d-bounded simple graph.
// Throws kDeleteMissingEdge, kInsertExistingEdge, kDegreeExceeded,
// kInvalidVertex, kSelfLoop, naming the offending edit index.
BoundedGraph apply_edits(const BoundedGraph& g, const EditScript& script);

// |E(a) symmetric-difference E(b)| over the identity vertex map.
// Throws kSizeMismatch when vertex counts differ.
std::size_t edit_distance(const BoundedGraph& a, const BoundedGraph& b);

}  // namespace disklab
