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

#include "disklab/catalog.hpp"

#include <algorithm>
#include <string>
#include <utility>

#include "disklab/canon.hpp"
#include "disklab/error.hpp"

namespace disklab {
namespace {

canon::CanonicalForm form_of(const BoundedGraph& g) {
  canon::AdjList adj(g.num_vertices());
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    auto nb = g.neighbors(v);
    adj[v].assign(nb.begin(), nb.end());
  }
  std::vector<std::uint32_t> colors(g.num_vertices(), 0);
  return canon::canonical_form(adj, colors);
}

// Calls fn(subset) for every subset of `pool` with at most `limit` elements.
template <typename Fn>
void for_each_subset(const std::vector<Vertex>& pool, std::size_t limit, Fn&& fn) {
  std::vector<Vertex> cur;
  auto rec = [&](auto&& self, std::size_t from) -> void {
    fn(cur);
    if (cur.size() == limit) return;
    for (std::size_t i = from; i < pool.size(); ++i) {
      cur.push_back(pool[i]);
      self(self, i + 1);
      cur.pop_back();
    }
  };
  rec(rec, 0);
}

}  // namespace

std::string graph_code(const BoundedGraph& g) {
  const std::size_t n = g.num_vertices();
  std::string code;
  code.push_back(static_cast<char>((n >> 8) & 0xFF));
  code.push_back(static_cast<char>(n & 0xFF));
  if (n == 0) return code;
  code += canon::pack_bits(form_of(g).bits, n);
  return code;
}

BoundedGraph canonical_graph(const BoundedGraph& g) {
  if (g.num_vertices() == 0) return g;
  auto form = form_of(g);
  std::vector<Vertex> perm(g.num_vertices());
  for (std::size_t p = 0; p < form.order.size(); ++p) perm[form.order[p]] = static_cast<Vertex>(p);
  return relabel(g, perm);
}

std::size_t GraphCatalog::total() const {
  std::size_t t = 0;
  for (const auto& level : by_size) t += level.size();
  return t;
}

BoundedGraph extend_graph(const BoundedGraph& g, const std::vector<Vertex>& nbrs) {
  auto edges = g.edges();
  const auto v = static_cast<Vertex>(g.num_vertices());
  for (auto u : nbrs) edges.push_back({u, v});
  return BoundedGraph::build(g.num_vertices() + 1, g.degree_bound(), edges);
}

GraphCatalog enumerate_graphs(std::size_t max_n, std::size_t d, std::size_t limit) {
  if (d == 0) throw Error(ErrorCode::kInvalidParams, "degree bound must be positive");
  GraphCatalog cat;
  cat.d = d;
  cat.by_size.push_back({BoundedGraph::build(0, d, {})});
  for (std::size_t m = 1; m <= max_n; ++m) {
    const auto& prev = cat.by_size.back();
    std::vector<std::vector<std::pair<std::string, BoundedGraph>>> found(prev.size());
    const auto count = static_cast<std::int64_t>(prev.size());
#pragma omp parallel for schedule(dynamic, 4)
    for (std::int64_t i = 0; i < count; ++i) {
      const auto& g = prev[i];
      std::vector<Vertex> pool;
      for (Vertex v = 0; v < g.num_vertices(); ++v) {
        if (g.degree(v) < d) pool.push_back(v);
      }
      std::map<std::string, BoundedGraph> local;
      for_each_subset(pool, d, [&](const std::vector<Vertex>& nbrs) {
        auto h = extend_graph(g, nbrs);
        auto code = graph_code(h);
        if (!local.count(code)) local.emplace(std::move(code), canonical_graph(h));
      });
      for (auto& kv : local) found[i].emplace_back(kv.first, std::move(kv.second));
    }
    std::map<std::string, BoundedGraph> level;
    for (auto& bucket : found) {
      for (auto& [code, g] : bucket) level.emplace(std::move(code), std::move(g));
      if (level.size() > limit) {
        throw Error(ErrorCode::kCapExceeded, "more than " + std::to_string(limit) +
                                                 " graphs on " + std::to_string(m) + " vertices");
      }
    }
    std::vector<BoundedGraph> out;
    out.reserve(level.size());
    for (auto& kv : level) out.push_back(std::move(kv.second));
    cat.by_size.push_back(std::move(out));
  }
  return cat;
}

}  // namespace disklab
