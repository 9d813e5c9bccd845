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

#include "disklab/hyperfinite.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <set>
#include <sstream>

#include "disklab/error.hpp"

namespace disklab {

namespace {

using Mask = std::uint32_t;

constexpr std::size_t kExactComponent = 16;

std::vector<std::vector<Vertex>> component_lists(const BoundedGraph& g) {
  auto comps = connected_components(g);
  std::vector<std::vector<Vertex>> out(comps.sizes.size());
  for (Vertex v = 0; v < g.num_vertices(); ++v) out[comps.label[v]].push_back(v);
  return out;
}

// Blocks of at most s vertices minimizing the edges between blocks, by
// f(M) = min over blocks B containing the lowest vertex of M of
// cut(B) + f(M \ B), where cut counts edges leaving B inside the component.
std::vector<std::vector<Vertex>> exact_blocks(const BoundedGraph& g, const std::vector<Vertex>& comp,
                                              std::size_t s) {
  const std::size_t c = comp.size();
  std::vector<Mask> nbr(c, 0);
  for (std::size_t i = 0; i < c; ++i) {
    for (Vertex u : g.neighbors(comp[i])) {
      auto it = std::lower_bound(comp.begin(), comp.end(), u);
      nbr[i] |= Mask{1} << (it - comp.begin());
    }
  }
  const Mask full = (Mask{1} << c) - 1;
  std::vector<std::int32_t> cut(std::size_t{full} + 1, 0);
  for (Mask m = 1; m <= full; ++m) {
    int i = std::countr_zero(m);
    Mask rest = m & (m - 1);
    cut[m] = cut[rest] + std::popcount(nbr[i]) - 2 * std::popcount(nbr[i] & rest);
  }
  std::vector<std::int32_t> f(std::size_t{full} + 1, std::numeric_limits<std::int32_t>::max());
  std::vector<Mask> choice(std::size_t{full} + 1, 0);
  f[0] = 0;
  for (Mask m = 1; m <= full; ++m) {
    Mask low = m & (~m + 1);
    Mask rest = m ^ low;
    for (Mask sub = rest;; sub = (sub - 1) & rest) {
      Mask b = sub | low;
      if (static_cast<std::size_t>(std::popcount(b)) <= s) {
        std::int32_t v = cut[b] + f[m ^ b];
        if (v < f[m]) {
          f[m] = v;
          choice[m] = b;
        }
      }
      if (sub == 0) break;
    }
  }
  std::vector<std::vector<Vertex>> blocks;
  for (Mask m = full; m; m ^= choice[m]) {
    std::vector<Vertex> block;
    for (Mask b = choice[m]; b; b &= b - 1) block.push_back(comp[std::countr_zero(b)]);
    blocks.push_back(std::move(block));
  }
  return blocks;
}

// Greedy carving from the lowest free vertex, then improving single moves.
std::vector<std::vector<Vertex>> greedy_blocks(const BoundedGraph& g, const std::vector<Vertex>& comp,
                                               std::size_t s, std::vector<std::int64_t>& block_of) {
  std::vector<std::vector<Vertex>> blocks;
  for (Vertex seed : comp) {
    if (block_of[seed] >= 0) continue;
    const auto id = static_cast<std::int64_t>(blocks.size());
    std::vector<Vertex> block{seed};
    block_of[seed] = id;
    while (block.size() < s) {
      Vertex pick = 0;
      std::int64_t pick_links = 0;
      for (Vertex v : block) {
        for (Vertex u : g.neighbors(v)) {
          if (block_of[u] >= 0) continue;
          std::int64_t links = 0;
          for (Vertex x : g.neighbors(u)) links += block_of[x] == id ? 1 : 0;
          if (links > pick_links || (links == pick_links && u < pick)) {
            pick = u;
            pick_links = links;
          }
        }
      }
      if (pick_links == 0) break;
      block_of[pick] = id;
      block.push_back(pick);
    }
    blocks.push_back(std::move(block));
  }
  std::vector<std::size_t> sizes(blocks.size());
  const std::int64_t first = block_of[comp.front()];
  for (std::size_t b = 0; b < blocks.size(); ++b) sizes[b] = blocks[b].size();
  for (int pass = 0; pass < 50; ++pass) {
    bool moved = false;
    for (Vertex v : comp) {
      const std::int64_t own = block_of[v];
      std::int64_t own_links = 0;
      for (Vertex u : g.neighbors(v)) own_links += block_of[u] == own ? 1 : 0;
      std::int64_t best = own, best_gain = 0;
      for (Vertex u : g.neighbors(v)) {
        std::int64_t b = block_of[u];
        if (b == own || sizes[static_cast<std::size_t>(b - first)] >= s) continue;
        std::int64_t links = 0;
        for (Vertex x : g.neighbors(v)) links += block_of[x] == b ? 1 : 0;
        if (links - own_links > best_gain || (links - own_links == best_gain && best_gain > 0 && b < best)) {
          best = b;
          best_gain = links - own_links;
        }
      }
      if (best != own) {
        block_of[v] = best;
        --sizes[static_cast<std::size_t>(own - first)];
        ++sizes[static_cast<std::size_t>(best - first)];
        moved = true;
      }
    }
    if (!moved) break;
  }
  std::vector<std::vector<Vertex>> out(blocks.size());
  for (Vertex v : comp) out[static_cast<std::size_t>(block_of[v] - first)].push_back(v);
  std::erase_if(out, [](const std::vector<Vertex>& b) { return b.empty(); });
  return out;
}

BoundedGraph remove_edges(const BoundedGraph& g, const std::vector<Edge>& removed) {
  std::set<Edge> drop(removed.begin(), removed.end());
  std::vector<Edge> keep;
  for (const Edge& e : g.edges()) {
    if (!drop.count(e)) keep.push_back(e);
  }
  return BoundedGraph::build(g.num_vertices(), g.degree_bound(), keep);
}

std::vector<std::size_t> sorted_sizes(const BoundedGraph& g) {
  auto sizes = connected_components(g).sizes;
  std::sort(sizes.rbegin(), sizes.rend());
  return sizes;
}

Decomposition make_decomposition(const BoundedGraph& g, const std::vector<std::int64_t>& block_of,
                                 double eps, std::size_t s) {
  Decomposition dec;
  for (const Edge& e : g.edges()) {
    if (block_of[e.u] != block_of[e.v]) dec.removed_edges.push_back(e);
  }
  dec.component_sizes = sorted_sizes(remove_edges(g, dec.removed_edges));
  dec.eps_used = eps;
  dec.size_bound = s;
  return dec;
}

}  // namespace

std::size_t removal_budget(double eps, std::size_t d, std::size_t n) {
  return far_radius(eps, d, n);
}

HyperfiniteResult check_hyperfinite(const BoundedGraph& g, double eps, std::size_t s,
                                    HyperMode mode) {
  if (!(eps >= 0.0) || s == 0) throw Error(ErrorCode::kInvalidParams, "need eps >= 0 and s >= 1");
  const std::size_t n = g.num_vertices();
  const std::size_t budget = removal_budget(eps, g.degree_bound(), n);
  std::vector<std::int64_t> block_of(n, -1);
  std::int64_t next = 0;
  for (const auto& comp : component_lists(g)) {
    std::vector<std::vector<Vertex>> blocks;
    if (comp.size() <= s) {
      blocks.push_back(comp);
    } else if (mode == HyperMode::kExact) {
      if (comp.size() > kExactComponent) {
        throw Error(ErrorCode::kTooLarge, "exact mode needs components of at most 16 vertices");
      }
      blocks = exact_blocks(g, comp, s);
    } else {
      std::vector<std::int64_t> local(n, -1);
      blocks = greedy_blocks(g, comp, s, local);
    }
    for (const auto& b : blocks) {
      for (Vertex v : b) block_of[v] = next;
      ++next;
    }
  }
  HyperfiniteResult r;
  Decomposition dec = make_decomposition(g, block_of, eps, s);
  if (mode == HyperMode::kExact) {
    r.proven = true;
    r.min_removals = dec.removed_edges.size();
  }
  if (dec.removed_edges.size() <= budget) {
    r.decomposition = std::move(dec);
    r.proven = true;
  }
  return r;
}

bool verify_decomposition(const BoundedGraph& g, const Decomposition& dec) {
  std::set<Edge> seen;
  for (const Edge& e : dec.removed_edges) {
    if (e.u >= e.v || e.v >= g.num_vertices() || !g.has_edge(e.u, e.v)) return false;
    if (!seen.insert(e).second) return false;
  }
  if (dec.removed_edges.size() > removal_budget(dec.eps_used, g.degree_bound(), g.num_vertices())) {
    return false;
  }
  auto sizes = sorted_sizes(remove_edges(g, dec.removed_edges));
  if (!sizes.empty() && sizes.front() > dec.size_bound) return false;
  return sizes == dec.component_sizes;
}

DfpResult dfp_search(const BoundedGraph& g, std::size_t k, std::size_t size_cap) {
  if (size_cap > 12) throw Error(ErrorCode::kTooLarge, "size_cap must be at most 12");
  if (size_cap == 0) throw Error(ErrorCode::kInvalidSize, "size_cap must be positive");
  return dfp_search(g, k, enumerate_graphs(size_cap, g.degree_bound()));
}

DfpResult dfp_search(const BoundedGraph& g, std::size_t k, const GraphCatalog& catalog) {
  std::vector<const BoundedGraph*> pool;
  for (std::size_t m = 1; m < catalog.by_size.size(); ++m) {
    for (const auto& h : catalog.by_size[m]) pool.push_back(&h);
  }
  if (pool.empty()) throw Error(ErrorCode::kInvalidSize, "empty catalog");
  const auto fg = frequency_vector(g, k);
  std::vector<Rational> dist(pool.size());
  std::vector<std::string> codes(pool.size());
  const auto count = static_cast<std::int64_t>(pool.size());
#pragma omp parallel for schedule(dynamic, 16)
  for (std::int64_t i = 0; i < count; ++i) {
    dist[i] = l1_distance_exact(fg, frequency_vector(*pool[i], k));
    codes[i] = graph_code(*pool[i]);
  }
  std::size_t best = 0;
  for (std::size_t i = 1; i < pool.size(); ++i) {
    if (dist[i] < dist[best] || (dist[i] == dist[best] && codes[i] < codes[best])) best = i;
  }
  return {*pool[best], dist[best], codes[best]};
}

BoundedGraph blow_up(const BoundedGraph& g, const BoundedGraph& h, std::size_t n) {
  const std::size_t m = h.num_vertices();
  if (m == 0 || m > n) throw Error(ErrorCode::kInvalidSize, "need 0 < |V(H)| <= n");
  std::vector<Edge> edges;
  const auto hedges = h.edges();
  for (std::size_t c = 0; c < n / m; ++c) {
    const auto off = static_cast<Vertex>(c * m);
    for (const Edge& e : hedges) edges.push_back({e.u + off, e.v + off});
  }
  return BoundedGraph::build(n, std::max(g.degree_bound(), h.degree_bound()), edges);
}

std::optional<HyperStep> find_hyper_desk(const BoundedGraph& g, const PropertySet& p,
                                         double delta, double eps, std::size_t k,
                                         const HyperStepConfig& cfg) {
  if (p.n != g.num_vertices()) throw Error(ErrorCode::kSizeMismatch, "property size differs from graph");
  const std::size_t n = g.num_vertices();
  const HyperMode mode = n <= cfg.exact_cap ? HyperMode::kExact : HyperMode::kHeuristic;
  auto decompose = [&](const BoundedGraph& m) {
    return check_hyperfinite(m, eps, cfg.size_bound, mode).decomposition;
  };
  const std::string own = graph_code(g);
  for (const auto& m : p.members) {
    if (graph_code(m) != own) continue;
    if (auto dec = decompose(g)) return HyperStep{g, Rational(0), std::move(*dec), true};
    break;
  }
  const auto fg = frequency_vector(g, k);
  struct Entry {
    Rational dist;
    std::string code;
    const BoundedGraph* graph;
  };
  std::vector<Entry> near;
  for (const auto& m : p.members) {
    Rational dist = l1_distance_exact(fg, frequency_vector(m, k));
    if (to_double(dist) < delta) near.push_back({dist, graph_code(m), &m});
  }
  std::sort(near.begin(), near.end(), [](const Entry& a, const Entry& b) {
    if (a.dist != b.dist) return a.dist < b.dist;
    return a.code < b.code;
  });
  for (const auto& e : near) {
    if (auto dec = decompose(*e.graph)) return HyperStep{*e.graph, e.dist, std::move(*dec), false};
  }
  return std::nullopt;
}

double initial_delta(double eps, std::size_t d) {
  return 4.0 * eps / static_cast<double>(d) * std::log(4.0 / 3.0);
}

std::size_t expected_iterations(double eps1, std::size_t d, std::size_t n) {
  const double x = eps1 * static_cast<double>(d) * static_cast<double>(n);
  if (x < 1.0) return 1;
  return static_cast<std::size_t>(std::floor(std::log2(x))) + 2;
}

PipelineResult construct_sequence(const BoundedGraph& g, const PropertySet& p,
                                  const PipelineConfig& cfg) {
  const std::size_t n = g.num_vertices();
  const std::size_t d = g.degree_bound();
  const double dd = static_cast<double>(d);
  PipelineResult r;
  BoundedGraph current = g;
  auto step = [&](PipelineState st) {
    auto found = find_hyper_desk(current, p, st.delta, st.eps, st.k, cfg.step);
    if (!found) {
      r.stuck_at = st.i;
      return false;
    }
    st.drift = l1_distance_exact(frequency_vector(found->graph, st.k),
                                 frequency_vector(current, st.k));
    const auto& sizes = found->decomposition.component_sizes;
    st.s = sizes.empty() ? 0 : sizes.front();
    st.eps_prime = std::min(st.eps, st.delta / (18.0 * std::pow(dd, static_cast<double>(st.k) + 1)));
    const double q = cfg.queries(st.eps_prime, d);
    st.delta_prime = std::min(st.delta, 1.0 / (5.0 * cfg.c * q));
    st.k_prime = std::max(static_cast<double>(st.k), cfg.c * q);
    st.graph = found->graph;
    st.decomposition = std::move(found->decomposition);
    current = st.graph;
    r.states.push_back(std::move(st));
    return true;
  };
  PipelineState first;
  first.i = 1;
  first.eps = 0.1;
  first.delta = initial_delta(first.eps, d);
  first.k = std::min<std::size_t>(1, cfg.k_max);
  first.k_theoretical = 1.0;
  bool ok = cfg.max_iters > 0 && step(first);
  while (ok && r.states.size() < cfg.max_iters) {
    const PipelineState& prev = r.states.back();
    if (prev.eps * dd * static_cast<double>(n) < 1.0) break;
    PipelineState st;
    st.i = prev.i + 1;
    st.eps = prev.eps / 2;
    st.delta = prev.delta / 2;
    const double s = static_cast<double>(prev.s);
    st.k_theoretical = std::max(prev.k_theoretical, 10.0 * s * std::pow(dd, 2 * s + 1) / prev.eps);
    const double uncapped = std::max(static_cast<double>(prev.k), std::ceil(st.k_theoretical));
    st.k = uncapped >= static_cast<double>(cfg.k_max) ? std::max(prev.k, cfg.k_max)
                                                      : static_cast<std::size_t>(uncapped);
    ok = step(std::move(st));
  }
  r.h = current;
  return r;
}

PipelineCheck check_pipeline(const BoundedGraph& g, const PipelineResult& r,
                             const PipelineConfig& cfg) {
  PipelineCheck c;
  const double x = static_cast<double>(g.degree_bound()) * static_cast<double>(g.num_vertices());
  const auto& st = r.states;
  if (st.empty()) {
    c.stop_rule = r.stuck_at.has_value();
    return c;
  }
  c.halving = st[0].eps == 0.1 && st[0].delta == initial_delta(0.1, g.degree_bound());
  for (std::size_t i = 0; i < st.size(); ++i) {
    if (i > 0) {
      c.halving &= st[i].eps == st[i - 1].eps / 2 && st[i].delta == st[i - 1].delta / 2;
      c.k_monotone &= st[i].k >= st[i - 1].k && st[i].k_theoretical >= st[i - 1].k_theoretical;
    }
    c.k_monotone &= st[i].k <= std::max<std::size_t>(cfg.k_max, 1);
    c.drift_below_delta &= to_double(st[i].drift) < st[i].delta;
  }
  for (std::size_t j = 0; j < st.size(); ++j) {
    double sum = 0.0;
    for (std::size_t l = j; l < st.size(); ++l) sum += to_double(st[l].drift);
    c.telescoping &= sum <= 2 * st[j].delta;
    auto gap = l1_distance_exact(frequency_vector(r.h, st[j].k), frequency_vector(st[j].graph, st[j].k));
    c.claim &= to_double(gap) <= 2 * st[j].delta;
  }
  for (std::size_t i = 0; i + 1 < st.size(); ++i) c.stop_rule &= st[i].eps * x >= 1.0;
  if (!r.stuck_at && st.size() < cfg.max_iters) {
    c.stop_rule &= st.back().eps * x < 1.0;
    c.stop_rule &= st.size() == expected_iterations(0.1, g.degree_bound(), g.num_vertices());
  }
  return c;
}

std::string pipeline_csv(const PipelineResult& r) {
  std::ostringstream os;
  os.precision(17);
  os << "i,eps_i,delta_i,k_i_capped,k_i_theoretical,s_i,drift\n";
  for (const auto& st : r.states) {
    os << st.i << ',' << st.eps << ',' << st.delta << ',' << st.k << ',' << st.k_theoretical << ','
       << st.s << ',' << to_double(st.drift) << '\n';
  }
  return os.str();
}

}  // namespace disklab
