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

#include "disklab/oracle.hpp"

#include <string>

#include "disklab/error.hpp"

namespace disklab {

std::optional<Vertex> QueryOracle::neighbor(Vertex v, std::size_t i) {
  if (v >= graph_->num_vertices()) {
    throw Error(ErrorCode::kInvalidVertex, "query on vertex " + std::to_string(v));
  }
  if (i < 1 || i > graph_->degree_bound()) {
    throw Error(ErrorCode::kInvalidIndex,
                "neighbor index " + std::to_string(i) + " outside [1," +
                    std::to_string(graph_->degree_bound()) + "]");
  }
  ++queries_;
  auto nb = graph_->neighbors(v);
  if (i > nb.size()) return std::nullopt;
  return nb[i - 1];
}

}  // namespace disklab
