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
#include <string>
#include <vector>

#include "disklab/edits.hpp"
#include "disklab/graph.hpp"
#include "disklab/oracle.hpp"
#include "disklab/rng.hpp"

namespace disklab {

enum class Decision { kAccept, kReject };

std::string_view to_string(Decision d);

struct Verdict {
  Decision decision = Decision::kAccept;
  std::size_t queries = 0;
  std::uint64_t seed = 0;
  std::string stage;  // which rule decided, e.g. "stage1", "stage2", "exact"

  bool accepted() const { return decision == Decision::kAccept; }
};

// Source of the vertices a tester inspects.
class VertexSampler {
 public:
  virtual ~VertexSampler() = default;
  virtual Vertex next() = 0;
};

class UniformSampler : public VertexSampler {
 public:
  UniformSampler(std::size_t n, std::uint64_t seed) : n_(n), rng_(seed) {}
  Vertex next() override { return static_cast<Vertex>(uniform_below(rng_, n_)); }

 private:
  std::size_t n_;
  Rng rng_;
};

// Replays a fixed vertex sequence, wrapping around when exhausted.
class FixedSampler : public VertexSampler {
 public:
  explicit FixedSampler(std::vector<Vertex> vertices) : vertices_(std::move(vertices)) {}
  Vertex next() override;

 private:
  std::vector<Vertex> vertices_;
  std::size_t pos_ = 0;
};

struct TesterInput {
  QueryOracle& oracle;
  VertexSampler& sampler;
  Rng& coins;
};

struct Outcome {
  Decision decision = Decision::kAccept;
  std::string stage;
};

// A randomized tester: all randomness comes from the sampler and coins.
using Tester = std::function<Outcome(TesterInput&)>;

// One run on a fresh oracle; the sampler and coins derive from `seed`.
Verdict run_tester(const Tester& tester, const BoundedGraph& g, std::uint64_t seed);

struct AcceptanceEstimate {
  std::size_t trials = 0;
  std::size_t accepts = 0;
  double rate = 0.0;
  double mean_queries = 0.0;
  std::size_t max_queries = 0;
};

// Trial i runs with stream_seed(seed, i); trials run in parallel and the
// result does not depend on the schedule.
AcceptanceEstimate estimate_acceptance(const Tester& tester, const BoundedGraph& g,
                                       std::size_t trials, std::uint64_t seed);

Tester accept_all_tester();

// The property: one component on ceil(n/2) vertices, the rest isolated.
// For n <= 2 this means edgeless; n = 0 is a vacuous member.
bool is_pi_member(const BoundedGraph& g);

struct PiTesterConfig {
  double stage1_constant = 200.0;  // stage-1 samples = ceil(c1 / eps^2)
  double stage2_constant = 40.0;   // stage-2 samples = ceil(c2 / eps)
  double bfs_constant = 12.0;      // BFS cap = ceil(c / eps) vertices
  double exact_constant = 100.0;   // read the whole graph when n <= c / eps
  double query_constant = 800.0;   // advertised budget C * d / eps^2
};

std::size_t pi_query_budget(std::size_t d, double eps, const PiTesterConfig& cfg = {});

Tester pi_tester_fn(double eps, const PiTesterConfig& cfg = {});
// Throws kInvalidParams unless eps in (0, 1].
Verdict pi_tester(QueryOracle& oracle, double eps, std::uint64_t seed,
                  const PiTesterConfig& cfg = {});

struct PiClaimStats {
  std::size_t isolated = 0;
  std::size_t small_components = 0;  // non-isolated, size <= 12/eps
  std::size_t nonisolated_components = 0;
  bool isolated_close = false;       // |isolated - floor(n/2)| <= eps n / 4
  bool few_small = false;            // small_components <= eps n / 12
  bool hypotheses_hold() const { return isolated_close && few_small; }
};

PiClaimStats pi_claim_stats(const BoundedGraph& g, double eps);

// Edits turning g into a member: merge non-isolated components (<= 3 edits
// each), then fix the isolated count by attaching (<= 2 edits each) or
// detaching spanning-tree leaves (<= d edits each). Lowest index first.
// Throws kInfeasibleDegreeBound when d < 3 and g is not already a member.
EditScript repair_to_pi(const BoundedGraph& g, double eps);

}  // namespace disklab
