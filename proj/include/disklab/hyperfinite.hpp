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

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "disklab/catalog.hpp"
#include "disklab/frequency.hpp"
#include "disklab/graph.hpp"
#include "disklab/property.hpp"

namespace disklab {

// floor(eps d n), with a small tolerance for values like 0.1 * 30.
std::size_t removal_budget(double eps, std::size_t d, std::size_t n);

struct Decomposition {
  std::vector<Edge> removed_edges;
  std::vector<std::size_t> component_sizes;  // descending
  double eps_used = 0.0;
  std::size_t size_bound = 0;
};

enum class HyperMode { kExact, kHeuristic };

struct HyperfiniteResult {
  std::optional<Decomposition> decomposition;
  bool proven = false;                       // exact decision either way
  std::optional<std::size_t> min_removals;   // exact mode only
  bool hyperfinite() const { return decomposition.has_value(); }
};

// Can at most removal_budget(eps, d, n) edge removals leave components of at
// most s vertices? Exact mode minimizes the removals by a subset recursion
// over each component and needs components of at most 16 vertices (throws
// kTooLarge otherwise); heuristic mode carves blocks greedily and improves
// them by single-vertex moves, so a failure there proves nothing.
HyperfiniteResult check_hyperfinite(const BoundedGraph& g, double eps, std::size_t s,
                                    HyperMode mode);

// Re-checks a decomposition from scratch.
bool verify_decomposition(const BoundedGraph& g, const Decomposition& dec);

struct DfpResult {
  BoundedGraph graph;
  Rational distance;
  std::string code;
};

// Graph on at most size_cap vertices (d = g's bound) closest to g in radius-k
// frequency; ties go to the smaller graph code. size_cap <= 12 (kTooLarge).
DfpResult dfp_search(const BoundedGraph& g, std::size_t k, std::size_t size_cap);
DfpResult dfp_search(const BoundedGraph& g, std::size_t k, const GraphCatalog& catalog);

// floor(n/h) copies of h plus isolated vertices up to n. The bound is the
// larger of the two inputs' bounds. Throws kInvalidSize if h = 0 or h > n.
BoundedGraph blow_up(const BoundedGraph& g, const BoundedGraph& h, std::size_t n);

struct HyperStepConfig {
  std::size_t size_bound = 8;
  std::size_t exact_cap = 16;  // exact decomposition check up to this n
};

struct HyperStep {
  BoundedGraph graph;
  Rational distance;
  Decomposition decomposition;
  bool is_input = false;
};

// A member of p within radius-k frequency distance delta of g that has an
// (eps, size_bound) decomposition; the input itself when it qualifies,
// otherwise the closest qualifying member (ties by graph code).
std::optional<HyperStep> find_hyper_desk(const BoundedGraph& g, const PropertySet& p,
                                         double delta, double eps, std::size_t k,
                                         const HyperStepConfig& cfg = {});

// 4 eps / d * ln(4/3).
double initial_delta(double eps, std::size_t d);

// Number of graphs G_1.. produced before eps_i d n < 1 stops the loop.
std::size_t expected_iterations(double eps1, std::size_t d, std::size_t n);

struct PipelineConfig {
  std::size_t max_iters = 64;
  std::size_t k_max = 3;
  HyperStepConfig step;
  double c = 1.0;
  // Query complexity q(eps', d) of the property's tester.
  std::function<double(double, std::size_t)> queries = [](double, std::size_t) { return 100.0; };
};

struct PipelineState {
  std::size_t i = 0;
  BoundedGraph graph;
  double eps = 0.0;
  double delta = 0.0;
  std::size_t k = 0;
  double k_theoretical = 0.0;
  std::size_t s = 0;  // largest component of the witness decomposition
  double eps_prime = 0.0;
  double delta_prime = 0.0;
  double k_prime = 0.0;
  Rational drift;     // radius-k distance from the previous graph
  Decomposition decomposition;
};

struct PipelineResult {
  BoundedGraph h;
  std::vector<PipelineState> states;
  std::optional<std::size_t> stuck_at;
};

PipelineResult construct_sequence(const BoundedGraph& g, const PropertySet& p,
                                  const PipelineConfig& cfg = {});

struct PipelineCheck {
  bool halving = true;
  bool k_monotone = true;
  bool drift_below_delta = true;
  bool telescoping = true;  // sum of drifts from j on <= 2 delta_j
  bool claim = true;        // measured distance from G_j to the output <= 2 delta_j
  bool stop_rule = true;
  bool ok() const {
    return halving && k_monotone && drift_below_delta && telescoping && claim && stop_rule;
  }
};

PipelineCheck check_pipeline(const BoundedGraph& g, const PipelineResult& r,
                             const PipelineConfig& cfg = {});

// i,eps_i,delta_i,k_i_capped,k_i_theoretical,s_i,drift
std::string pipeline_csv(const PipelineResult& r);

}  // namespace disklab
