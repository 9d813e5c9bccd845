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
#include <initializer_list>
#include <span>
#include <utility>
#include <vector>

namespace disklab {

using Vertex = std::uint32_t;

// Undirected edge, always stored with u < v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  auto operator<=>(const Edge&) const = default;
};

inline Edge make_edge(Vertex a, Vertex b) {
  return a < b ? Edge{a, b} : Edge{b, a};
}

// Simple undirected graph with maximum degree at most `degree_bound()`.
//
// Adjacency is stored in CSR form with every neighbor list sorted ascending,
// so the i-th neighbor of a vertex is well defined. Instances are immutable;
// edits go through apply_edits() and produce a new graph.
class BoundedGraph {
 public:
  BoundedGraph() = default;

  // Throws Error{kInvalidVertex, kSelfLoop, kDuplicateEdge, kDegreeExceeded}.
  static BoundedGraph build(std::size_t n, std::size_t d,
                            std::span<const Edge> edges);
  static BoundedGraph build(std::size_t n, std::size_t d,
                            std::initializer_list<Edge> edges) {
    return build(n, d, std::span<const Edge>(edges.begin(), edges.size()));
  }

  std::size_t num_vertices() const { return n_; }
  std::size_t degree_bound() const { return d_; }
  std::size_t num_edges() const { return targets_.size() / 2; }

  std::span<const Vertex> neighbors(Vertex v) const {
    return {targets_.data() + offsets_[v], offsets_[v + 1] - offsets_[v]};
  }
  std::size_t degree(Vertex v) const { return offsets_[v + 1] - offsets_[v]; }
  bool has_edge(Vertex u, Vertex v) const;

  // All edges with u < v, sorted lexicographically.
  std::vector<Edge> edges() const;

  bool operator==(const BoundedGraph&) const = default;

 private:
  std::size_t n_ = 0;
  std::size_t d_ = 1;
  std::vector<std::size_t> offsets_{0};
  std::vector<Vertex> targets_;
};

struct Components {
  std::vector<std::uint32_t> label;  // component id per vertex, by lowest vertex
  std::vector<std::size_t> sizes;
};

Components connected_components(const BoundedGraph& g);

// `perm[v]` is the new id of vertex v.
BoundedGraph relabel(const BoundedGraph& g, std::span<const Vertex> perm);

// Vertices of `b` are shifted by a.num_vertices(); the bound is the max of both.
BoundedGraph disjoint_union(const BoundedGraph& a, const BoundedGraph& b);

// Induced subgraph on `vertices` (sorted, unique); vertex i of the result is
// vertices[i].
BoundedGraph induced_subgraph(const BoundedGraph& g,
                              std::span<const Vertex> vertices);

// Same edges, different degree bound. Throws kDegreeExceeded if it no longer fits.
BoundedGraph with_degree_bound(const BoundedGraph& g, std::size_t d);

// Full scan of the structural invariants; used by tests and the edge-list reader.
bool is_valid(const BoundedGraph& g);

}  // namespace disklab
