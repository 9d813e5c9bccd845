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

#include "disklab/incompat.hpp"

#include <algorithm>
#include <string>
#include <vector>

#include "disklab/error.hpp"

namespace disklab {
namespace {

constexpr std::uint32_t kUnmapped = UINT32_MAX;

class GlueSearch {
 public:
  GlueSearch(const RootedDisk& a, const RootedDisk& b, const DiskType& ta, const DiskType& tb,
             std::size_t d)
      : a_(a), b_(b), ta_(ta), tb_(tb), d_(d), k_(a.radius),
        map_(a.num_vertices(), kUnmapped), used_(b.num_vertices(), 0) {
    adj_a_ = matrix(a);
    adj_b_ = matrix(b);
    for (std::uint32_t y = 0; y < b.num_vertices(); ++y) {
      if (b.dist[y] + 1 <= k_) ++mandatory_b_;
    }
  }

  std::optional<CompatibilityWitness> run() {
    if (descend(0)) return witness_;
    return std::nullopt;
  }

  std::size_t checked() const { return checked_; }

 private:
  static std::vector<std::vector<char>> matrix(const RootedDisk& disk) {
    std::vector<std::vector<char>> m(disk.num_vertices(),
                                     std::vector<char>(disk.num_vertices(), 0));
    for (std::size_t u = 0; u < disk.num_vertices(); ++u) {
      for (auto w : disk.adj[u]) m[u][w] = 1;
    }
    return m;
  }

  bool consistent(std::uint32_t x, std::uint32_t y) const {
    if (used_[y]) return false;
    std::int64_t gap = static_cast<std::int64_t>(a_.dist[x]) - b_.dist[y];
    if (gap > 1 || gap < -1) return false;
    // u1 sits next to root2 and u2 next to root1.
    if (x == 0 && !adj_b_[y][0]) return false;
    if (y == 0 && !adj_a_[x][0]) return false;
    for (std::uint32_t x2 = 0; x2 < x; ++x2) {
      if (map_[x2] == kUnmapped) continue;
      if (adj_a_[x][x2] != adj_b_[y][map_[x2]]) return false;
    }
    return true;
  }

  bool descend(std::uint32_t x) {
    const std::size_t m1 = a_.num_vertices();
    if (mandatory_b_ - mandatory_hit_ > m1 - x) return false;
    if (x == m1) return leaf();
    const std::size_t m2 = b_.num_vertices();
    for (std::uint32_t y = 0; y < m2; ++y) {
      if (!consistent(x, y)) continue;
      map_[x] = y;
      used_[y] = 1;
      bool mand = b_.dist[y] + 1 <= k_;
      mandatory_hit_ += mand;
      bool found = descend(x + 1);
      mandatory_hit_ -= mand;
      used_[y] = 0;
      map_[x] = kUnmapped;
      if (found) return true;
    }
    if (a_.dist[x] == k_ && x != 0) return descend(x + 1);
    return false;
  }

  bool leaf() {
    if (!used_[0]) return false;
    ++checked_;
    const std::size_t m1 = a_.num_vertices();
    const std::size_t m2 = b_.num_vertices();
    std::vector<Vertex> id_b(m2, 0);
    std::vector<char> mapped_b(m2, 0);
    for (std::uint32_t x = 0; x < m1; ++x) {
      if (map_[x] != kUnmapped) {
        id_b[map_[x]] = x;
        mapped_b[map_[x]] = 1;
      }
    }
    Vertex next = static_cast<Vertex>(m1);
    for (std::uint32_t y = 0; y < m2; ++y) {
      if (!mapped_b[y]) id_b[y] = next++;
    }
    std::vector<Edge> edges;
    for (std::uint32_t u = 0; u < m1; ++u) {
      for (auto w : a_.adj[u]) {
        if (u < w) edges.push_back({u, w});
      }
    }
    for (std::uint32_t u = 0; u < m2; ++u) {
      for (auto w : b_.adj[u]) {
        if (u < w) edges.push_back(make_edge(id_b[u], id_b[w]));
      }
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    std::vector<std::size_t> deg(next, 0);
    for (auto e : edges) {
      if (++deg[e.u] > d_ || ++deg[e.v] > d_) return false;
    }
    auto h = BoundedGraph::build(next, d_, edges);
    Vertex u1 = 0;
    Vertex u2 = id_b[0];
    if (disk_type(h, u1, k_) != ta_ || disk_type(h, u2, k_) != tb_) return false;
    witness_ = CompatibilityWitness{std::move(h), u1, u2};
    return true;
  }

  const RootedDisk& a_;
  const RootedDisk& b_;
  const DiskType& ta_;
  const DiskType& tb_;
  std::size_t d_;
  std::size_t k_;
  std::vector<std::vector<char>> adj_a_, adj_b_;
  std::vector<std::uint32_t> map_;
  std::vector<char> used_;
  std::size_t mandatory_b_ = 0;
  std::size_t mandatory_hit_ = 0;
  std::size_t checked_ = 0;
  CompatibilityWitness witness_;
};

}  // namespace

CompatibilityResult check_compatibility(const DiskType& a, const DiskType& b, std::size_t d,
                                        std::size_t cap) {
  if (a.radius != b.radius) {
    throw Error(ErrorCode::kRadiusMismatch,
                "radius " + std::to_string(a.radius) + " vs " + std::to_string(b.radius));
  }
  if (a.num_vertices + b.num_vertices > cap) {
    throw Error(ErrorCode::kSearchCapExceeded,
                "combined disk size " + std::to_string(a.num_vertices + b.num_vertices) +
                    " exceeds cap " + std::to_string(cap));
  }
  if (d == 0) throw Error(ErrorCode::kInvalidParams, "degree bound must be positive");
  CompatibilityResult result;
  if (a.radius == 0) {
    result.incompatible = false;
    result.witness = CompatibilityWitness{BoundedGraph::build(2, d, {{0, 1}}), 0, 1};
    return result;
  }
  auto da = a.decode();
  auto db = b.decode();
  GlueSearch search(da, db, a, b, d);
  result.witness = search.run();
  result.incompatible = !result.witness.has_value();
  result.candidates_checked = search.checked();
  return result;
}

}  // namespace disklab
