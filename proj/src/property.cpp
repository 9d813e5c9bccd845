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

#include "disklab/property.hpp"

#include <cmath>
#include <set>
#include <string>

#include "disklab/catalog.hpp"
#include "disklab/error.hpp"

namespace disklab {
namespace {

constexpr std::size_t kMaxExactSize = 12;

// All graphs one edit away from g that respect the degree bound.
template <typename Fn>
void for_each_neighbor(const BoundedGraph& g, std::size_t d, Fn&& fn) {
  const std::size_t n = g.num_vertices();
  auto edges = g.edges();
  for (std::size_t i = 0; i < edges.size(); ++i) {
    std::vector<Edge> rest;
    rest.reserve(edges.size() - 1);
    for (std::size_t j = 0; j < edges.size(); ++j) {
      if (j != i) rest.push_back(edges[j]);
    }
    fn(BoundedGraph::build(n, d, rest));
  }
  for (Vertex u = 0; u < n; ++u) {
    if (g.degree(u) >= d) continue;
    for (Vertex v = u + 1; v < n; ++v) {
      if (g.degree(v) >= d || g.has_edge(u, v)) continue;
      auto more = edges;
      more.push_back({u, v});
      fn(BoundedGraph::build(n, d, more));
    }
  }
}

}  // namespace

PropertySet unions_of_triangles(std::size_t n, std::size_t d) {
  if (n == 0 || n % 3 != 0) {
    throw Error(ErrorCode::kInvalidSize, "unions of triangles need n divisible by 3");
  }
  if (d < 2) throw Error(ErrorCode::kInvalidParams, "triangles need d >= 2");
  std::vector<Edge> edges;
  for (Vertex b = 0; b < n; b += 3) {
    edges.push_back({b, b + 1});
    edges.push_back({b + 1, b + 2});
    edges.push_back({b, b + 2});
  }
  return PropertySet{"triangles", n, d, {BoundedGraph::build(n, d, edges)}};
}

PropertySet pi_property(std::size_t n, std::size_t d) {
  if (n > kMaxExactSize) throw Error(ErrorCode::kTooLarge, "pi_property needs n <= 12");
  const std::size_t big = (n + 1) / 2;
  PropertySet p{"pi", n, d, {}};
  auto cat = enumerate_graphs(big, d);
  for (const auto& core : cat.of_size(big)) {
    if (big >= 2 && connected_components(core).sizes.size() != 1) continue;
    auto g = disjoint_union(core, BoundedGraph::build(n - big, d, {}));
    p.members.push_back(with_degree_bound(g, d));
  }
  return p;
}

void validate(const PropertySet& p) {
  if (p.members.empty()) throw Error(ErrorCode::kEmptyProperty, "property has no members");
  for (const auto& g : p.members) {
    if (g.num_vertices() != p.n) {
      throw Error(ErrorCode::kSizeMismatch, "member with " + std::to_string(g.num_vertices()) +
                                                " vertices in a property on " +
                                                std::to_string(p.n));
    }
    for (Vertex v = 0; v < g.num_vertices(); ++v) {
      if (g.degree(v) > p.d) throw Error(ErrorCode::kDegreeExceeded, "member exceeds bound");
    }
  }
}

std::map<std::string, std::size_t> edit_ball(const std::vector<BoundedGraph>& centers,
                                             std::size_t d, std::size_t radius) {
  std::map<std::string, std::size_t> dist;
  std::vector<BoundedGraph> frontier;
  for (const auto& c : centers) {
    auto g = with_degree_bound(c, d);
    if (dist.emplace(graph_code(g), 0).second) frontier.push_back(std::move(g));
  }
  for (std::size_t r = 1; r <= radius && !frontier.empty(); ++r) {
    std::vector<BoundedGraph> next;
    for (const auto& g : frontier) {
      for_each_neighbor(g, d, [&](BoundedGraph h) {
        if (dist.emplace(graph_code(h), r).second) next.push_back(std::move(h));
      });
    }
    frontier = std::move(next);
  }
  return dist;
}

std::optional<std::size_t> distance_to_property(const BoundedGraph& g, const PropertySet& p,
                                                std::size_t max_radius) {
  validate(p);
  if (g.num_vertices() != p.n) throw Error(ErrorCode::kSizeMismatch, "graph and property sizes differ");
  if (p.n > kMaxExactSize) throw Error(ErrorCode::kTooLarge, "exact distance needs n <= 12");
  std::set<std::string> targets;
  for (const auto& m : p.members) targets.insert(graph_code(m));
  auto start = with_degree_bound(g, p.d);
  std::set<std::string> seen{graph_code(start)};
  if (targets.count(*seen.begin())) return 0;
  std::vector<BoundedGraph> frontier{start};
  for (std::size_t r = 1; r <= max_radius && !frontier.empty(); ++r) {
    std::vector<BoundedGraph> next;
    for (const auto& h : frontier) {
      bool hit = false;
      for_each_neighbor(h, p.d, [&](BoundedGraph x) {
        if (hit) return;
        auto code = graph_code(x);
        if (targets.count(code)) hit = true;
        if (seen.insert(std::move(code)).second) next.push_back(std::move(x));
      });
      if (hit) return r;
    }
    frontier = std::move(next);
  }
  return std::nullopt;
}

std::size_t far_radius(double eps, std::size_t d, std::size_t n) {
  return static_cast<std::size_t>(std::floor(eps * static_cast<double>(d * n) + 1e-9));
}

bool is_eps_far(const BoundedGraph& g, const PropertySet& p, double eps) {
  return !distance_to_property(g, p, far_radius(eps, p.d, p.n)).has_value();
}

std::vector<BoundedGraph> far_set(const PropertySet& p, double eps, std::size_t limit) {
  validate(p);
  if (p.n > kMaxExactSize) throw Error(ErrorCode::kTooLarge, "far set needs n <= 12");
  auto ball = edit_ball(p.members, p.d, far_radius(eps, p.d, p.n));
  auto cat = enumerate_graphs(p.n, p.d, limit);
  std::vector<BoundedGraph> out;
  for (const auto& g : cat.of_size(p.n)) {
    if (!ball.count(graph_code(g))) out.push_back(g);
  }
  return out;
}

}  // namespace disklab
