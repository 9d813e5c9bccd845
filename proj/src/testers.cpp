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

#include "disklab/testers.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <string>
#include <unordered_set>

#include "disklab/error.hpp"

namespace disklab {
namespace {

void check_eps(double eps) {
  if (!(eps > 0.0 && eps <= 1.0)) {
    throw Error(ErrorCode::kInvalidParams, "eps must lie in (0, 1]");
  }
}

std::size_t ceil_div(double c, double x) { return static_cast<std::size_t>(std::ceil(c / x - 1e-9)); }

// Whole graph read through the oracle, n*d queries at most.
BoundedGraph read_all(QueryOracle& oracle) {
  const std::size_t n = oracle.num_vertices();
  const std::size_t d = oracle.degree_bound();
  std::vector<Edge> edges;
  for (Vertex v = 0; v < n; ++v) {
    for (std::size_t i = 1; i <= d; ++i) {
      auto w = oracle.neighbor(v, i);
      if (!w) break;
      if (v < *w) edges.push_back({v, *w});
    }
  }
  return BoundedGraph::build(n, d, edges);
}

// BFS from v that gives up once more than `cap` vertices are discovered.
// Returns the component size when it was exhausted, 0 otherwise.
std::size_t capped_component(QueryOracle& oracle, Vertex v, std::size_t cap) {
  const std::size_t d = oracle.degree_bound();
  std::unordered_set<Vertex> seen{v};
  std::vector<Vertex> queue{v};
  for (std::size_t h = 0; h < queue.size(); ++h) {
    for (std::size_t i = 1; i <= d; ++i) {
      auto w = oracle.neighbor(queue[h], i);
      if (!w) break;
      if (seen.insert(*w).second) {
        if (seen.size() > cap) return 0;
        queue.push_back(*w);
      }
    }
  }
  return seen.size();
}

// Mutable working copy for repair_to_pi; every change is mirrored into the script.
class Workbench {
 public:
  explicit Workbench(const BoundedGraph& g) : d_(g.degree_bound()), adj_(g.num_vertices()) {
    for (Vertex v = 0; v < g.num_vertices(); ++v) {
      auto nb = g.neighbors(v);
      adj_[v].insert(nb.begin(), nb.end());
    }
  }

  std::size_t size() const { return adj_.size(); }
  std::size_t degree(Vertex v) const { return adj_[v].size(); }
  bool has_slack(Vertex v) const { return adj_[v].size() < d_; }

  void insert(Vertex a, Vertex b) {
    adj_[a].insert(b);
    adj_[b].insert(a);
    script_.insert(a, b);
  }
  void remove(Vertex a, Vertex b) {
    adj_[a].erase(b);
    adj_[b].erase(a);
    script_.remove(a, b);
  }

  // Connected components (each sorted) in order of lowest vertex.
  std::vector<std::vector<Vertex>> components() const {
    std::vector<char> seen(adj_.size(), 0);
    std::vector<std::vector<Vertex>> out;
    for (Vertex s = 0; s < adj_.size(); ++s) {
      if (seen[s]) continue;
      seen[s] = 1;
      std::vector<Vertex> comp{s};
      for (std::size_t h = 0; h < comp.size(); ++h) {
        for (auto w : adj_[comp[h]]) {
          if (!seen[w]) {
            seen[w] = 1;
            comp.push_back(w);
          }
        }
      }
      std::sort(comp.begin(), comp.end());
      out.push_back(std::move(comp));
    }
    return out;
  }

  // BFS order from the lowest vertex of a component.
  std::vector<Vertex> bfs_order(Vertex root) const {
    std::vector<char> seen(adj_.size(), 0);
    std::vector<Vertex> order{root};
    seen[root] = 1;
    for (std::size_t h = 0; h < order.size(); ++h) {
      for (auto w : adj_[order[h]]) {
        if (!seen[w]) {
          seen[w] = 1;
          order.push_back(w);
        }
      }
    }
    return order;
  }

  // Lowest vertex of `comp` with spare degree. If every vertex is full the
  // component has minimum degree d >= 2, hence a cycle, and one cycle edge
  // is removed first; connectivity is kept.
  Vertex open_slot(const std::vector<Vertex>& comp) {
    for (auto v : comp) {
      if (has_slack(v)) return v;
    }
    auto [u, w] = cycle_edge(comp.front());
    remove(u, w);
    return std::min(u, w);
  }

  void detach(Vertex v) {
    std::vector<Vertex> nb(adj_[v].begin(), adj_[v].end());
    for (auto w : nb) remove(v, w);
  }

  EditScript take() { return std::move(script_); }

 private:
  // A non-tree edge of the DFS tree rooted at `root`.
  std::pair<Vertex, Vertex> cycle_edge(Vertex root) const {
    std::vector<Vertex> parent(adj_.size(), UINT32_MAX);
    std::vector<char> seen(adj_.size(), 0);
    std::vector<Vertex> stack{root};
    seen[root] = 1;
    parent[root] = root;
    while (!stack.empty()) {
      Vertex u = stack.back();
      stack.pop_back();
      for (auto w : adj_[u]) {
        if (!seen[w]) {
          seen[w] = 1;
          parent[w] = u;
          stack.push_back(w);
        }
      }
    }
    // Any edge not in the parent forest closes a cycle.
    for (Vertex u = 0; u < adj_.size(); ++u) {
      if (!seen[u]) continue;
      for (auto w : adj_[u]) {
        if (u < w && parent[w] != u && parent[u] != w) return {u, w};
      }
    }
    throw Error(ErrorCode::kInfeasibleDegreeBound, "saturated component without a cycle");
  }

  std::size_t d_;
  std::vector<std::set<Vertex>> adj_;
  EditScript script_;
};

}  // namespace

std::string_view to_string(Decision d) { return d == Decision::kAccept ? "accept" : "reject"; }

Vertex FixedSampler::next() {
  if (vertices_.empty()) throw Error(ErrorCode::kInvalidParams, "fixed sampler is empty");
  Vertex v = vertices_[pos_];
  pos_ = (pos_ + 1) % vertices_.size();
  return v;
}

Verdict run_tester(const Tester& tester, const BoundedGraph& g, std::uint64_t seed) {
  QueryOracle oracle(g);
  UniformSampler sampler(g.num_vertices(), splitmix64(seed));
  Rng coins(splitmix64(seed ^ 0x5bd1e995ULL));
  TesterInput in{oracle, sampler, coins};
  Outcome out = tester(in);
  return Verdict{out.decision, oracle.queries(), seed, out.stage};
}

AcceptanceEstimate estimate_acceptance(const Tester& tester, const BoundedGraph& g,
                                       std::size_t trials, std::uint64_t seed) {
  if (trials == 0) throw Error(ErrorCode::kInvalidParams, "trials must be positive");
  std::vector<Verdict> runs(trials);
  const auto count = static_cast<std::int64_t>(trials);
#pragma omp parallel for schedule(dynamic, 1)
  for (std::int64_t i = 0; i < count; ++i) {
    runs[i] = run_tester(tester, g, stream_seed(seed, static_cast<std::uint64_t>(i)));
  }
  AcceptanceEstimate est;
  est.trials = trials;
  double total = 0.0;
  for (const auto& v : runs) {
    est.accepts += v.accepted();
    total += static_cast<double>(v.queries);
    est.max_queries = std::max(est.max_queries, v.queries);
  }
  est.rate = static_cast<double>(est.accepts) / static_cast<double>(trials);
  est.mean_queries = total / static_cast<double>(trials);
  return est;
}

Tester accept_all_tester() {
  return [](TesterInput&) { return Outcome{Decision::kAccept, "constant"}; };
}

bool is_pi_member(const BoundedGraph& g) {
  const std::size_t n = g.num_vertices();
  const std::size_t big = (n + 1) / 2;
  if (big <= 1) return g.num_edges() == 0;
  auto comps = connected_components(g);
  std::size_t nontrivial = 0;
  bool right_size = false;
  for (auto s : comps.sizes) {
    if (s > 1) {
      ++nontrivial;
      right_size = s == big;
    }
  }
  return nontrivial == 1 && right_size;
}

std::size_t pi_query_budget(std::size_t d, double eps, const PiTesterConfig& cfg) {
  return static_cast<std::size_t>(std::floor(cfg.query_constant * static_cast<double>(d) / (eps * eps)));
}

Tester pi_tester_fn(double eps, const PiTesterConfig& cfg) {
  check_eps(eps);
  return [eps, cfg](TesterInput& in) -> Outcome {
    QueryOracle& oracle = in.oracle;
    const std::size_t n = oracle.num_vertices();
    if (static_cast<double>(n) <= cfg.exact_constant / eps) {
      bool member = is_pi_member(read_all(oracle));
      return {member ? Decision::kAccept : Decision::kReject, "exact"};
    }
    const std::size_t s1 = ceil_div(cfg.stage1_constant, eps * eps);
    std::size_t isolated = 0;
    for (std::size_t i = 0; i < s1; ++i) {
      if (!oracle.neighbor(in.sampler.next(), 1)) ++isolated;
    }
    double estimate = static_cast<double>(isolated) / static_cast<double>(s1) * static_cast<double>(n);
    double target = static_cast<double>(n / 2);
    if (std::abs(estimate - target) > eps * static_cast<double>(n) / 8.0) {
      return {Decision::kReject, "stage1"};
    }
    const std::size_t s2 = ceil_div(cfg.stage2_constant, eps);
    const std::size_t cap = ceil_div(cfg.bfs_constant, eps);
    for (std::size_t i = 0; i < s2; ++i) {
      std::size_t size = capped_component(oracle, in.sampler.next(), cap);
      if (size >= 2) return {Decision::kReject, "stage2"};
    }
    return {Decision::kAccept, "stage2"};
  };
}

Verdict pi_tester(QueryOracle& oracle, double eps, std::uint64_t seed, const PiTesterConfig& cfg) {
  auto tester = pi_tester_fn(eps, cfg);
  std::size_t before = oracle.queries();
  UniformSampler sampler(oracle.num_vertices(), splitmix64(seed));
  Rng coins(splitmix64(seed ^ 0x5bd1e995ULL));
  TesterInput in{oracle, sampler, coins};
  Outcome out = tester(in);
  return Verdict{out.decision, oracle.queries() - before, seed, out.stage};
}

PiClaimStats pi_claim_stats(const BoundedGraph& g, double eps) {
  check_eps(eps);
  PiClaimStats st;
  const double n = static_cast<double>(g.num_vertices());
  const double small = 12.0 / eps;
  for (auto s : connected_components(g).sizes) {
    if (s == 1) {
      ++st.isolated;
    } else {
      ++st.nonisolated_components;
      if (static_cast<double>(s) <= small) ++st.small_components;
    }
  }
  double gap = std::abs(static_cast<double>(st.isolated) -
                        static_cast<double>(g.num_vertices() / 2));
  st.isolated_close = gap <= eps * n / 4.0;
  st.few_small = static_cast<double>(st.small_components) <= eps * n / 12.0;
  return st;
}

EditScript repair_to_pi(const BoundedGraph& g, double eps) {
  check_eps(eps);
  if (is_pi_member(g)) return {};
  const std::size_t n = g.num_vertices();
  const std::size_t big = (n + 1) / 2;
  Workbench w(g);
  if (big <= 1) {
    for (auto e : g.edges()) w.remove(e.u, e.v);
    return w.take();
  }
  if (g.degree_bound() < 3 && big > 2) {
    throw Error(ErrorCode::kInfeasibleDegreeBound,
                "repair needs degree bound >= 3, got " + std::to_string(g.degree_bound()));
  }

  std::vector<std::vector<Vertex>> nontrivial;
  for (auto& c : w.components()) {
    if (c.size() > 1) nontrivial.push_back(std::move(c));
  }
  if (nontrivial.empty()) {
    for (Vertex v = 0; v + 1 < big; ++v) w.insert(v, v + 1);
    return w.take();
  }

  std::vector<Vertex> core = nontrivial.front();
  for (std::size_t i = 1; i < nontrivial.size(); ++i) {
    Vertex a = w.open_slot(core);
    Vertex b = w.open_slot(nontrivial[i]);
    w.insert(a, b);
    core.insert(core.end(), nontrivial[i].begin(), nontrivial[i].end());
    std::sort(core.begin(), core.end());
  }

  if (core.size() < big) {
    std::vector<char> in_core(n, 0);
    for (auto v : core) in_core[v] = 1;
    for (Vertex v = 0; v < n && core.size() < big; ++v) {
      if (in_core[v]) continue;
      Vertex a = w.open_slot(core);
      w.insert(a, v);
      core.insert(std::upper_bound(core.begin(), core.end(), v), v);
    }
  } else if (core.size() > big) {
    auto order = w.bfs_order(core.front());
    std::size_t excess = core.size() - big;
    for (std::size_t i = 0; i < excess; ++i) w.detach(order[order.size() - 1 - i]);
  }
  return w.take();
}

}  // namespace disklab
