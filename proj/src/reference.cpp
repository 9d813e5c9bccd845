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

#include "disklab/reference.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>

#include "disklab/error.hpp"
#include "disklab/oracle.hpp"
#include "disklab/rng.hpp"

namespace disklab::serial {

std::vector<DiskType> disk_types(const BoundedGraph& g, std::size_t k) {
  std::vector<DiskType> types;
  types.reserve(g.num_vertices());
  for (Vertex v = 0; v < g.num_vertices(); ++v) types.push_back(disk_type(g, v, k));
  return types;
}

AcceptanceEstimate estimate_acceptance(const Tester& tester, const BoundedGraph& g,
                                       std::size_t trials, std::uint64_t seed) {
  if (trials == 0) throw Error(ErrorCode::kInvalidParams, "trials must be positive");
  AcceptanceEstimate est;
  est.trials = trials;
  double total = 0.0;
  for (std::size_t i = 0; i < trials; ++i) {
    auto v = run_tester(tester, g, stream_seed(seed, i));
    est.accepts += v.accepted();
    total += static_cast<double>(v.queries);
    est.max_queries = std::max(est.max_queries, v.queries);
  }
  est.rate = static_cast<double>(est.accepts) / static_cast<double>(trials);
  est.mean_queries = total / static_cast<double>(trials);
  return est;
}

DecisionTable canonicalize_tester(const Tester& base, const std::vector<BoundedGraph>& corpus,
                                  std::size_t t, std::size_t trials, std::uint64_t seed,
                                  const CanonicalConfig& cfg) {
  if (corpus.empty() || trials == 0 || t == 0 || t > cfg.max_t) {
    throw Error(ErrorCode::kInvalidParams, "bad canonicalization parameters");
  }
  const std::size_t n = corpus.front().num_vertices();
  DecisionTable table;
  table.t = t;
  table.n = n;
  for (std::size_t i = 0; i < trials; ++i) {
    Rng rng(stream_seed(seed, i));
    const auto& g = corpus[uniform_below(rng, corpus.size())];
    std::vector<Vertex> perm(n);
    std::iota(perm.begin(), perm.end(), 0u);
    std::shuffle(perm.begin(), perm.end(), rng);
    auto h = relabel(g, perm);
    std::vector<Vertex> sample(t);
    for (auto& v : sample) v = static_cast<Vertex>(uniform_below(rng, n));
    auto key = table_key(h, sample, t);
    QueryOracle oracle(h);
    FixedSampler sampler(sample);
    Rng coins(rng());
    TesterInput in{oracle, sampler, coins};
    auto& e = table.entries[key];
    ++e.total;
    e.accepts += base(in).decision == Decision::kAccept;
  }
  return table;
}

GraphCatalog enumerate_graphs(std::size_t max_n, std::size_t d, std::size_t limit) {
  if (d == 0) throw Error(ErrorCode::kInvalidParams, "degree bound must be positive");
  GraphCatalog cat;
  cat.d = d;
  cat.by_size.push_back({BoundedGraph::build(0, d, {})});
  for (std::size_t m = 1; m <= max_n; ++m) {
    std::map<std::string, BoundedGraph> level;
    for (const auto& g : cat.by_size.back()) {
      std::vector<Vertex> pool;
      for (Vertex v = 0; v < g.num_vertices(); ++v) {
        if (g.degree(v) < d) pool.push_back(v);
      }
      // Every subset of the pool with at most d elements, by bitmask.
      const std::uint64_t subsets = std::uint64_t{1} << pool.size();
      for (std::uint64_t mask = 0; mask < subsets; ++mask) {
        if (static_cast<std::size_t>(std::popcount(mask)) > d) continue;
        std::vector<Vertex> nbrs;
        for (std::size_t i = 0; i < pool.size(); ++i) {
          if (mask >> i & 1) nbrs.push_back(pool[i]);
        }
        auto h = extend_graph(g, nbrs);
        auto code = graph_code(h);
        if (!level.count(code)) level.emplace(std::move(code), canonical_graph(h));
      }
      if (level.size() > limit) throw Error(ErrorCode::kCapExceeded, "catalog level too large");
    }
    std::vector<BoundedGraph> out;
    for (auto& kv : level) out.push_back(std::move(kv.second));
    cat.by_size.push_back(std::move(out));
  }
  return cat;
}

ExpansionResult graph_expansion(const BoundedGraph& g) {
  const std::size_t n = g.num_vertices();
  if (n < 2 || n > 30) throw Error(ErrorCode::kInvalidSize, "need 2 <= n <= 30");
  const auto edges = g.edges();
  std::uint64_t best_mask = 0;
  std::int64_t best_cut = 0;
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
    const std::int64_t size = std::popcount(mask);
    if (static_cast<std::size_t>(size) > n / 2) continue;
    std::int64_t cut = 0;
    for (const Edge& e : edges) cut += ((mask >> e.u) ^ (mask >> e.v)) & 1;
    if (best_mask == 0) {
      best_mask = mask;
      best_cut = cut;
      continue;
    }
    const std::int64_t best_size = std::popcount(best_mask);
    if (cut * best_size < best_cut * size ||
        (cut * best_size == best_cut * size && size < best_size)) {
      best_mask = mask;
      best_cut = cut;
    }
  }
  ExpansionResult r;
  r.exact = true;
  const std::int64_t d = static_cast<std::int64_t>(g.degree_bound());
  r.value = d == 0 ? Rational(0) : Rational(best_cut, d * std::popcount(best_mask));
  for (Vertex v = 0; v < n; ++v) {
    if (best_mask >> v & 1) r.witness.push_back(v);
  }
  return r;
}

DfpResult dfp_search(const BoundedGraph& g, std::size_t k, const GraphCatalog& catalog) {
  const auto fg = frequency_vector(g, k);
  std::optional<DfpResult> best;
  for (std::size_t m = 1; m < catalog.by_size.size(); ++m) {
    for (const auto& h : catalog.by_size[m]) {
      DfpResult r{h, l1_distance_exact(fg, frequency_vector(h, k)), graph_code(h)};
      if (!best || r.distance < best->distance ||
          (r.distance == best->distance && r.code < best->code)) {
        best = std::move(r);
      }
    }
  }
  if (!best) throw Error(ErrorCode::kInvalidSize, "empty catalog");
  return *best;
}

}  // namespace disklab::serial
