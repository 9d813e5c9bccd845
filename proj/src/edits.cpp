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

#include "disklab/edits.hpp"

#include <algorithm>
#include <iterator>
#include <string>

#include "disklab/error.hpp"

namespace disklab {
namespace {

std::string describe(std::size_t index, const Edit& e) {
  return "edit " + std::to_string(index) + " (" +
         (e.op == EditOp::kInsert ? "insert " : "delete ") + std::to_string(e.u) +
         "," + std::to_string(e.v) + ")";
}

}  // namespace

BoundedGraph apply_edits(const BoundedGraph& g, const EditScript& script) {
  const std::size_t n = g.num_vertices();
  const std::size_t d = g.degree_bound();
  std::vector<std::vector<Vertex>> adj(n);
  for (Vertex v = 0; v < n; ++v) {
    auto nb = g.neighbors(v);
    adj[v].assign(nb.begin(), nb.end());
  }
  for (std::size_t i = 0; i < script.edits.size(); ++i) {
    const Edit& e = script.edits[i];
    if (e.u >= n || e.v >= n) {
      throw Error(ErrorCode::kInvalidVertex, describe(i, e) + ": vertex out of range");
    }
    if (e.u == e.v) throw Error(ErrorCode::kSelfLoop, describe(i, e));
    auto& au = adj[e.u];
    auto& av = adj[e.v];
    auto pos_u = std::lower_bound(au.begin(), au.end(), e.v);
    const bool present = pos_u != au.end() && *pos_u == e.v;
    if (e.op == EditOp::kInsert) {
      if (present) throw Error(ErrorCode::kInsertExistingEdge, describe(i, e));
      if (au.size() >= d || av.size() >= d) {
        throw Error(ErrorCode::kDegreeExceeded, describe(i, e));
      }
      au.insert(pos_u, e.v);
      av.insert(std::lower_bound(av.begin(), av.end(), e.u), e.u);
    } else {
      if (!present) throw Error(ErrorCode::kDeleteMissingEdge, describe(i, e));
      au.erase(pos_u);
      av.erase(std::lower_bound(av.begin(), av.end(), e.u));
    }
  }
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v : adj[u]) {
      if (u < v) edges.push_back({u, v});
    }
  }
  return BoundedGraph::build(n, d, edges);
}

std::size_t edit_distance(const BoundedGraph& a, const BoundedGraph& b) {
  if (a.num_vertices() != b.num_vertices()) {
    throw Error(ErrorCode::kSizeMismatch,
                "edit distance needs equal vertex counts (" +
                    std::to_string(a.num_vertices()) + " vs " +
                    std::to_string(b.num_vertices()) + ")");
  }
  const auto ea = a.edges();
  const auto eb = b.edges();
  std::vector<Edge> diff;
  std::set_symmetric_difference(ea.begin(), ea.end(), eb.begin(), eb.end(),
                                std::back_inserter(diff));
  return diff.size();
}

}  // namespace disklab
