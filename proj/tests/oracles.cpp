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

#include "oracles.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <numeric>

namespace disklab::oracle {
namespace {

bool same_under(const AdjList& a, const AdjList& b, const std::vector<std::uint32_t>& p) {
  for (std::size_t u = 0; u < a.size(); ++u) {
    if (a[u].size() != b[p[u]].size()) return false;
    for (auto w : a[u]) {
      if (!std::binary_search(b[p[u]].begin(), b[p[u]].end(), p[w])) return false;
    }
  }
  return true;
}

AdjList sorted_copy(AdjList a) {
  for (auto& l : a) std::sort(l.begin(), l.end());
  return a;
}

}  // namespace

bool rooted_isomorphic(const AdjList& a0, const AdjList& b0) {
  if (a0.size() != b0.size()) return false;
  if (a0.empty()) return true;
  auto a = sorted_copy(a0);
  auto b = sorted_copy(b0);
  std::vector<std::uint32_t> p(a.size());
  std::iota(p.begin(), p.end(), 0u);
  do {
    if (same_under(a, b, p)) return true;
  } while (std::next_permutation(p.begin() + 1, p.end()));
  return false;
}

bool isomorphic(const BoundedGraph& ga, const BoundedGraph& gb) {
  if (ga.num_vertices() != gb.num_vertices() || ga.num_edges() != gb.num_edges()) return false;
  const std::size_t n = ga.num_vertices();
  std::vector<std::size_t> da, db;
  for (Vertex v = 0; v < n; ++v) {
    da.push_back(ga.degree(v));
    db.push_back(gb.degree(v));
  }
  std::sort(da.begin(), da.end());
  std::sort(db.begin(), db.end());
  if (da != db) return false;
  AdjList a(n), b(n);
  for (std::size_t v = 0; v < n; ++v) {
    auto x = ga.neighbors(static_cast<Vertex>(v));
    auto y = gb.neighbors(static_cast<Vertex>(v));
    a[v].assign(x.begin(), x.end());
    b[v].assign(y.begin(), y.end());
  }
  std::vector<std::uint32_t> p(n);
  std::iota(p.begin(), p.end(), 0u);
  do {
    if (same_under(a, b, p)) return true;
  } while (std::next_permutation(p.begin(), p.end()));
  return false;
}

std::vector<AdjList> all_connected_rooted(std::size_t m) {
  std::vector<std::pair<std::uint32_t, std::uint32_t>> pairs;
  for (std::uint32_t i = 0; i < m; ++i) {
    for (std::uint32_t j = i + 1; j < m; ++j) pairs.emplace_back(i, j);
  }
  std::vector<AdjList> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs.size()); ++mask) {
    AdjList adj(m);
    for (std::size_t e = 0; e < pairs.size(); ++e) {
      if (mask >> e & 1) {
        adj[pairs[e].first].push_back(pairs[e].second);
        adj[pairs[e].second].push_back(pairs[e].first);
      }
    }
    std::vector<char> seen(m, 0);
    std::vector<std::uint32_t> stack{0};
    seen[0] = 1;
    std::size_t count = 1;
    while (!stack.empty()) {
      auto u = stack.back();
      stack.pop_back();
      for (auto w : adj[u]) {
        if (!seen[w]) {
          seen[w] = 1;
          ++count;
          stack.push_back(w);
        }
      }
    }
    if (count == m) out.push_back(sorted_copy(std::move(adj)));
  }
  return out;
}

std::size_t naive_distance(const BoundedGraph& g, const std::vector<BoundedGraph>& members) {
  const std::size_t n = g.num_vertices();
  std::size_t best = SIZE_MAX;
  std::vector<std::vector<char>> mine(n, std::vector<char>(n, 0));
  for (auto e : g.edges()) mine[e.u][e.v] = mine[e.v][e.u] = 1;
  for (const auto& m : members) {
    auto medges = m.edges();
    std::vector<std::uint32_t> p(n);
    std::iota(p.begin(), p.end(), 0u);
    do {
      // |A xor B| = |A| + |B| - 2 |A and B|
      std::size_t common = 0;
      for (auto e : medges) common += mine[p[e.u]][p[e.v]];
      best = std::min(best, g.num_edges() + medges.size() - 2 * common);
    } while (std::next_permutation(p.begin(), p.end()));
  }
  return best;
}

std::size_t naive_class_count(std::size_t n, std::size_t d) {
  std::vector<std::pair<Vertex, Vertex>> pairs;
  for (Vertex i = 0; i < n; ++i) {
    for (Vertex j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
  }
  std::vector<BoundedGraph> reps;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs.size()); ++mask) {
    std::vector<std::size_t> deg(n, 0);
    std::vector<Edge> edges;
    bool ok = true;
    for (std::size_t e = 0; e < pairs.size() && ok; ++e) {
      if (mask >> e & 1) {
        edges.push_back({pairs[e].first, pairs[e].second});
        ok = ++deg[pairs[e].first] <= d && ++deg[pairs[e].second] <= d;
      }
    }
    if (!ok) continue;
    auto g = BoundedGraph::build(n, d, edges);
    bool fresh = true;
    for (const auto& r : reps) {
      if (isomorphic(r, g)) {
        fresh = false;
        break;
      }
    }
    if (fresh) reps.push_back(std::move(g));
  }
  return reps.size();
}

std::int64_t naive_cut(const BoundedGraph& g, const std::vector<std::uint32_t>& set) {
  std::vector<bool> in(g.num_vertices(), false);
  for (auto v : set) in[v] = true;
  std::int64_t cut = 0;
  for (std::uint32_t a = 0; a < g.num_vertices(); ++a) {
    for (std::uint32_t b = a + 1; b < g.num_vertices(); ++b) {
      if (in[a] != in[b] && g.has_edge(a, b)) ++cut;
    }
  }
  return cut;
}

Fraction naive_expansion(const BoundedGraph& g) {
  const std::size_t n = g.num_vertices();
  const auto d = static_cast<std::int64_t>(g.degree_bound());
  Fraction best{1, 0};
  for (std::uint64_t m = 1; m < (std::uint64_t{1} << n); ++m) {
    std::vector<std::uint32_t> set;
    for (std::uint32_t v = 0; v < n; ++v) {
      if (m >> v & 1) set.push_back(v);
    }
    if (set.size() > n / 2) continue;
    Fraction f{naive_cut(g, set), d * static_cast<std::int64_t>(set.size())};
    if (f.num * best.den < best.num * f.den) best = f;
  }
  return best;
}

bool naive_is_minimal(const BoundedGraph& g, const std::vector<std::uint32_t>& a, Fraction bound) {
  const auto d = static_cast<std::int64_t>(g.degree_bound());
  for (std::uint64_t m = 1; m + 1 < (std::uint64_t{1} << a.size()); ++m) {
    std::vector<std::uint32_t> set;
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (m >> i & 1) set.push_back(a[i]);
    }
    if (set.size() > g.num_vertices() / 2) continue;
    auto size = static_cast<std::int64_t>(set.size());
    if (naive_cut(g, set) * bound.den <= bound.num * d * size) return false;
  }
  return true;
}

namespace {

std::uint32_t find_root(std::vector<std::uint32_t>& parent, std::uint32_t x) {
  while (parent[x] != x) x = parent[x] = parent[parent[x]];
  return x;
}

// Size of the ball followed by the smallest adjacency string over orderings
// that keep the root first.
std::string naive_disk_code(const std::vector<std::vector<std::uint32_t>>& adj, std::uint32_t root,
                            std::size_t k) {
  const std::size_t n = adj.size();
  std::vector<int> dist(n, -1);
  std::vector<std::uint32_t> ball{root};
  dist[root] = 0;
  for (std::size_t i = 0; i < ball.size(); ++i) {
    if (static_cast<std::size_t>(dist[ball[i]]) == k) continue;
    for (auto u : adj[ball[i]]) {
      if (dist[u] < 0) {
        dist[u] = dist[ball[i]] + 1;
        ball.push_back(u);
      }
    }
  }
  const std::size_t m = ball.size();
  std::vector<std::vector<bool>> a(m, std::vector<bool>(m, false));
  for (std::size_t x = 0; x < m; ++x) {
    for (std::size_t y = 0; y < m; ++y) {
      const auto& nb = adj[ball[x]];
      a[x][y] = std::find(nb.begin(), nb.end(), ball[y]) != nb.end();
    }
  }
  std::vector<std::size_t> perm(m);
  for (std::size_t i = 0; i < m; ++i) perm[i] = i;
  std::string best;
  do {
    std::string code;
    for (std::size_t x = 0; x < m; ++x) {
      for (std::size_t y = x + 1; y < m; ++y) code.push_back(a[perm[x]][perm[y]] ? '1' : '0');
    }
    if (best.empty() || code < best) best = code;
  } while (std::next_permutation(perm.begin() + 1, perm.end()));
  return std::to_string(m) + ":" + best;
}

std::map<std::string, std::int64_t> naive_histogram(const std::vector<std::vector<std::uint32_t>>& adj,
                                                    std::size_t k) {
  std::map<std::string, std::int64_t> h;
  for (std::uint32_t v = 0; v < adj.size(); ++v) ++h[naive_disk_code(adj, v, k)];
  return h;
}

}  // namespace

std::size_t naive_min_removal(const BoundedGraph& g, std::size_t s) {
  const auto edges = g.edges();
  const std::size_t m = edges.size();
  std::size_t best = m;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
    std::size_t removed = static_cast<std::size_t>(__builtin_popcountll(mask));
    if (removed >= best) continue;
    std::vector<std::uint32_t> parent(g.num_vertices());
    for (std::uint32_t v = 0; v < parent.size(); ++v) parent[v] = v;
    for (std::size_t e = 0; e < m; ++e) {
      if (mask >> e & 1) continue;
      parent[find_root(parent, edges[e].u)] = find_root(parent, edges[e].v);
    }
    std::map<std::uint32_t, std::size_t> sizes;
    bool ok = true;
    for (std::uint32_t v = 0; v < parent.size(); ++v) ok &= ++sizes[find_root(parent, v)] <= s;
    if (ok) best = removed;
  }
  return best;
}

Fraction naive_dfp_distance(const BoundedGraph& g, std::size_t k, std::size_t cap) {
  const std::size_t d = g.degree_bound();
  std::vector<std::vector<std::uint32_t>> gadj(g.num_vertices());
  for (std::uint32_t v = 0; v < g.num_vertices(); ++v) {
    for (auto u : g.neighbors(v)) gadj[v].push_back(u);
  }
  const auto hg = naive_histogram(gadj, k);
  const auto ng = static_cast<std::int64_t>(g.num_vertices());
  Fraction best{2, 1};
  for (std::size_t h = 1; h <= cap; ++h) {
    std::vector<std::pair<std::uint32_t, std::uint32_t>> pairs;
    for (std::uint32_t a = 0; a < h; ++a) {
      for (std::uint32_t b = a + 1; b < h; ++b) pairs.emplace_back(a, b);
    }
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs.size()); ++mask) {
      std::vector<std::vector<std::uint32_t>> adj(h);
      bool ok = true;
      for (std::size_t e = 0; e < pairs.size() && ok; ++e) {
        if (!(mask >> e & 1)) continue;
        adj[pairs[e].first].push_back(pairs[e].second);
        adj[pairs[e].second].push_back(pairs[e].first);
        ok = adj[pairs[e].first].size() <= d && adj[pairs[e].second].size() <= d;
      }
      if (!ok) continue;
      const auto hh = naive_histogram(adj, k);
      const auto nh = static_cast<std::int64_t>(h);
      std::int64_t num = 0;
      for (const auto& [code, c] : hg) {
        auto it = hh.find(code);
        num += std::abs(c * nh - (it == hh.end() ? 0 : it->second) * ng);
      }
      for (const auto& [code, c] : hh) {
        if (!hg.count(code)) num += c * ng;
      }
      Fraction f{num, ng * nh};
      if (f.num * best.den < best.num * f.den) best = f;
    }
  }
  return best;
}

}  // namespace disklab::oracle
