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

#include "disklab/generators.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>
#include <vector>

#include "disklab/error.hpp"
#include "disklab/rng.hpp"

namespace disklab {
namespace {

[[noreturn]] void invalid(const std::string& what) {
  throw Error(ErrorCode::kInvalidParams, what);
}

std::size_t bound_or(std::size_t d, std::size_t natural) {
  return d == 0 ? std::max<std::size_t>(natural, 1) : d;
}

void add_cycle(std::vector<Edge>& edges, Vertex first, std::size_t len) {
  for (std::size_t i = 0; i < len; ++i) {
    edges.push_back(make_edge(static_cast<Vertex>(first + i),
                              static_cast<Vertex>(first + (i + 1) % len)));
  }
}

// One attempt of the pairing model; empty result on a loop or multi-edge.
std::vector<Edge> pairing_attempt(std::size_t n, std::size_t deg, Rng& rng) {
  std::vector<Vertex> points(n * deg);
  for (std::size_t i = 0; i < points.size(); ++i) {
    points[i] = static_cast<Vertex>(i / deg);
  }
  std::shuffle(points.begin(), points.end(), rng);
  std::vector<Edge> edges;
  edges.reserve(points.size() / 2);
  for (std::size_t i = 0; i + 1 < points.size(); i += 2) {
    if (points[i] == points[i + 1]) return {};
    edges.push_back(make_edge(points[i], points[i + 1]));
  }
  std::sort(edges.begin(), edges.end());
  if (std::adjacent_find(edges.begin(), edges.end()) != edges.end()) return {};
  return edges;
}

std::vector<Edge> random_regular_edges(std::size_t n, std::size_t deg,
                                       std::uint64_t seed) {
  if ((n * deg) % 2 != 0) invalid("random_regular needs n*deg even");
  if (deg > 0 && deg >= n) invalid("random_regular needs deg < n");
  if (deg == 0) return {};
  constexpr std::size_t kMaxAttempts = 200000;
  Rng rng(seed);
  for (std::size_t attempt = 0; attempt < kMaxAttempts; ++attempt) {
    auto edges = pairing_attempt(n, deg, rng);
    if (!edges.empty()) return edges;
  }
  invalid("random_regular: no simple pairing found");
}

bool connected(std::size_t n, std::size_t d, const std::vector<Edge>& edges) {
  return connected_components(BoundedGraph::build(n, d, edges)).sizes.size() <= 1;
}

// Connected core on m vertices with max degree 3.
std::vector<Edge> random_cubic_core(std::size_t m, std::uint64_t seed) {
  const std::size_t even = m - (m % 2);
  for (std::uint64_t attempt = 0;; ++attempt) {
    auto edges = random_regular_edges(even, 3, stream_seed(seed, attempt));
    if (m != even) {
      // Subdivide one edge with the extra vertex; degrees stay <= 3.
      Rng pick(stream_seed(seed, attempt + 0x5eed));
      const auto idx = uniform_below(pick, edges.size());
      const Edge e = edges[idx];
      edges.erase(edges.begin() + static_cast<std::ptrdiff_t>(idx));
      const auto extra = static_cast<Vertex>(m - 1);
      edges.push_back(make_edge(e.u, extra));
      edges.push_back(make_edge(e.v, extra));
    }
    if (connected(m, 3, edges)) return edges;
  }
}

}  // namespace

Family parse_family(std::string_view name) {
  if (name == "path") return Family::kPath;
  if (name == "cycle") return Family::kCycle;
  if (name == "grid") return Family::kGrid;
  if (name == "disjoint_cliques") return Family::kDisjointCliques;
  if (name == "edgeless") return Family::kEdgeless;
  if (name == "matching") return Family::kMatching;
  if (name == "random_regular") return Family::kRandomRegular;
  if (name == "pi_member") return Family::kPiMember;
  invalid("unknown family '" + std::string(name) + "'");
}

std::string_view to_string(Family family) {
  switch (family) {
    case Family::kPath: return "path";
    case Family::kCycle: return "cycle";
    case Family::kGrid: return "grid";
    case Family::kDisjointCliques: return "disjoint_cliques";
    case Family::kEdgeless: return "edgeless";
    case Family::kMatching: return "matching";
    case Family::kRandomRegular: return "random_regular";
    case Family::kPiMember: return "pi_member";
  }
  return "unknown";
}

CoreKind parse_core_kind(std::string_view name) {
  if (name == "cycle_core" || name == "cycle") return CoreKind::kCycle;
  if (name == "random_regular_core" || name == "random_regular") {
    return CoreKind::kRandomRegular;
  }
  invalid("unknown core kind '" + std::string(name) + "'");
}

BoundedGraph path_graph(std::size_t n, std::size_t d) {
  std::vector<Edge> edges;
  for (std::size_t i = 0; i + 1 < n; ++i) {
    edges.push_back({static_cast<Vertex>(i), static_cast<Vertex>(i + 1)});
  }
  return BoundedGraph::build(n, d, edges);
}

BoundedGraph cycle_graph(std::size_t n, std::size_t d) {
  if (n < 3) invalid("cycle needs n >= 3");
  std::vector<Edge> edges;
  add_cycle(edges, 0, n);
  return BoundedGraph::build(n, d, edges);
}

BoundedGraph grid_graph(std::size_t rows, std::size_t cols, std::size_t d) {
  if (rows == 0 || cols == 0) invalid("grid needs rows, cols >= 1");
  std::vector<Edge> edges;
  auto id = [cols](std::size_t r, std::size_t c) {
    return static_cast<Vertex>(r * cols + c);
  };
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) {
      if (c + 1 < cols) edges.push_back({id(r, c), id(r, c + 1)});
      if (r + 1 < rows) edges.push_back({id(r, c), id(r + 1, c)});
    }
  }
  return BoundedGraph::build(rows * cols, d, edges);
}

BoundedGraph disjoint_cliques(std::size_t count, std::size_t size, std::size_t d) {
  if (size == 0) invalid("clique size must be >= 1");
  std::vector<Edge> edges;
  for (std::size_t c = 0; c < count; ++c) {
    const auto base = static_cast<Vertex>(c * size);
    for (Vertex i = 0; i < size; ++i) {
      for (Vertex j = i + 1; j < size; ++j) edges.push_back({base + i, base + j});
    }
  }
  return BoundedGraph::build(count * size, bound_or(d, size - 1), edges);
}

BoundedGraph edgeless_graph(std::size_t n, std::size_t d) {
  return BoundedGraph::build(n, d, std::vector<Edge>{});
}

BoundedGraph matching_graph(std::size_t n, std::size_t d) {
  std::vector<Edge> edges;
  for (std::size_t i = 0; i + 1 < n; i += 2) {
    edges.push_back({static_cast<Vertex>(i), static_cast<Vertex>(i + 1)});
  }
  return BoundedGraph::build(n, d, edges);
}

BoundedGraph random_regular(std::size_t n, std::size_t deg, std::uint64_t seed,
                            std::size_t d) {
  return BoundedGraph::build(n, bound_or(d, deg), random_regular_edges(n, deg, seed));
}

BoundedGraph pi_member(std::size_t n, std::size_t d, CoreKind core,
                       std::uint64_t seed) {
  if (d < 3) invalid("pi_member needs d >= 3");
  const std::size_t m = (n + 1) / 2;
  std::vector<Edge> edges;
  if (m == 2) {
    edges.push_back({0, 1});
  } else if (m >= 3) {
    if (core == CoreKind::kRandomRegular && m >= 4) {
      edges = random_cubic_core(m, seed);
    } else {
      add_cycle(edges, 0, m);
    }
  }
  return BoundedGraph::build(n, d, edges);
}

BoundedGraph generate(Family family, const GenParams& p, std::uint64_t seed) {
  switch (family) {
    case Family::kPath: return path_graph(p.n, bound_or(p.d, 2));
    case Family::kCycle: return cycle_graph(p.n, bound_or(p.d, 2));
    case Family::kGrid: {
      std::size_t rows = p.rows, cols = p.cols;
      if (rows == 0 && cols == 0) {
        // Square grid when only n is given.
        rows = static_cast<std::size_t>(std::sqrt(static_cast<double>(p.n)));
        if (rows == 0 || rows * rows != p.n) invalid("grid needs rows/cols or a square n");
        cols = rows;
      }
      return grid_graph(rows, cols, bound_or(p.d, 4));
    }
    case Family::kDisjointCliques:
      if (p.clique_size == 0 || p.n % p.clique_size != 0) {
        invalid("disjoint_cliques needs n divisible by clique_size");
      }
      return disjoint_cliques(p.n / p.clique_size, p.clique_size, p.d);
    case Family::kEdgeless: return edgeless_graph(p.n, bound_or(p.d, 1));
    case Family::kMatching: return matching_graph(p.n, bound_or(p.d, 1));
    case Family::kRandomRegular: return random_regular(p.n, p.deg, seed, p.d);
    case Family::kPiMember: return pi_member(p.n, bound_or(p.d, 3), p.core, seed);
  }
  invalid("unknown family");
}

}  // namespace disklab
