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

#include "disklab/graph.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "disklab/error.hpp"

namespace disklab {

BoundedGraph BoundedGraph::build(std::size_t n, std::size_t d,
                                 std::span<const Edge> edges) {
  if (d < 1) throw Error(ErrorCode::kInvalidParams, "degree bound must be >= 1");
  std::vector<Edge> normalized;
  normalized.reserve(edges.size());
  for (const Edge& e : edges) {
    if (e.u >= n || e.v >= n) {
      throw Error(ErrorCode::kInvalidVertex,
                  "edge (" + std::to_string(e.u) + "," + std::to_string(e.v) +
                      ") has an endpoint outside [0," + std::to_string(n) + ")");
    }
    if (e.u == e.v) {
      throw Error(ErrorCode::kSelfLoop, "self-loop at vertex " + std::to_string(e.u));
    }
    normalized.push_back(make_edge(e.u, e.v));
  }
  std::vector<Edge> sorted = normalized;
  std::sort(sorted.begin(), sorted.end());
  if (auto it = std::adjacent_find(sorted.begin(), sorted.end());
      it != sorted.end()) {
    throw Error(ErrorCode::kDuplicateEdge, "duplicate edge (" +
                                               std::to_string(it->u) + "," +
                                               std::to_string(it->v) + ")");
  }
  // Degree violations are reported for the first vertex (in input order) that
  // would exceed the bound.
  std::vector<std::size_t> degree(n, 0);
  for (const Edge& e : normalized) {
    for (Vertex x : {e.u, e.v}) {
      if (++degree[x] > d) {
        throw Error(ErrorCode::kDegreeExceeded,
                    "vertex " + std::to_string(x) + " exceeds degree bound " +
                        std::to_string(d));
      }
    }
  }

  BoundedGraph g;
  g.n_ = n;
  g.d_ = d;
  g.offsets_.assign(n + 1, 0);
  for (std::size_t v = 0; v < n; ++v) g.offsets_[v + 1] = g.offsets_[v] + degree[v];
  g.targets_.resize(g.offsets_[n]);
  std::vector<std::size_t> fill(g.offsets_.begin(), g.offsets_.end() - 1);
  for (const Edge& e : sorted) {
    g.targets_[fill[e.u]++] = e.v;
    g.targets_[fill[e.v]++] = e.u;
  }
  for (std::size_t v = 0; v < n; ++v) {
    std::sort(g.targets_.begin() + static_cast<std::ptrdiff_t>(g.offsets_[v]),
              g.targets_.begin() + static_cast<std::ptrdiff_t>(g.offsets_[v + 1]));
  }
  return g;
}

bool BoundedGraph::has_edge(Vertex u, Vertex v) const {
  if (u >= n_ || v >= n_) return false;
  auto nb = neighbors(u);
  return std::binary_search(nb.begin(), nb.end(), v);
}

std::vector<Edge> BoundedGraph::edges() const {
  std::vector<Edge> out;
  out.reserve(num_edges());
  for (Vertex u = 0; u < n_; ++u) {
    for (Vertex v : neighbors(u)) {
      if (u < v) out.push_back({u, v});
    }
  }
  return out;
}

Components connected_components(const BoundedGraph& g) {
  const std::size_t n = g.num_vertices();
  constexpr auto kUnset = static_cast<std::uint32_t>(-1);
  Components c;
  c.label.assign(n, kUnset);
  std::vector<Vertex> stack;
  for (Vertex s = 0; s < n; ++s) {
    if (c.label[s] != kUnset) continue;
    const auto id = static_cast<std::uint32_t>(c.sizes.size());
    std::size_t size = 0;
    c.label[s] = id;
    stack.push_back(s);
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      ++size;
      for (Vertex w : g.neighbors(v)) {
        if (c.label[w] == kUnset) {
          c.label[w] = id;
          stack.push_back(w);
        }
      }
    }
    c.sizes.push_back(size);
  }
  return c;
}

BoundedGraph relabel(const BoundedGraph& g, std::span<const Vertex> perm) {
  if (perm.size() != g.num_vertices()) {
    throw Error(ErrorCode::kSizeMismatch, "permutation size does not match graph");
  }
  std::vector<Edge> edges;
  edges.reserve(g.num_edges());
  for (const Edge& e : g.edges()) edges.push_back(make_edge(perm[e.u], perm[e.v]));
  return BoundedGraph::build(g.num_vertices(), g.degree_bound(), edges);
}

BoundedGraph disjoint_union(const BoundedGraph& a, const BoundedGraph& b) {
  const auto shift = static_cast<Vertex>(a.num_vertices());
  std::vector<Edge> edges = a.edges();
  for (const Edge& e : b.edges()) edges.push_back({e.u + shift, e.v + shift});
  return BoundedGraph::build(a.num_vertices() + b.num_vertices(),
                             std::max(a.degree_bound(), b.degree_bound()), edges);
}

BoundedGraph induced_subgraph(const BoundedGraph& g,
                              std::span<const Vertex> vertices) {
  std::vector<Vertex> local(g.num_vertices(), static_cast<Vertex>(-1));
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    local[vertices[i]] = static_cast<Vertex>(i);
  }
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    for (Vertex w : g.neighbors(vertices[i])) {
      Vertex j = local[w];
      if (j != static_cast<Vertex>(-1) && i < j) {
        edges.push_back({static_cast<Vertex>(i), j});
      }
    }
  }
  return BoundedGraph::build(vertices.size(), g.degree_bound(), edges);
}

BoundedGraph with_degree_bound(const BoundedGraph& g, std::size_t d) {
  return BoundedGraph::build(g.num_vertices(), d, g.edges());
}

bool is_valid(const BoundedGraph& g) {
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    auto nb = g.neighbors(v);
    if (nb.size() > g.degree_bound()) return false;
    for (std::size_t i = 0; i < nb.size(); ++i) {
      if (nb[i] == v || nb[i] >= g.num_vertices()) return false;
      if (i > 0 && nb[i - 1] >= nb[i]) return false;
      if (!g.has_edge(nb[i], v)) return false;
    }
  }
  return true;
}

}  // namespace disklab
