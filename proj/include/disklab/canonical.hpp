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
#include <map>
#include <string>
#include <vector>

#include "disklab/frequency.hpp"
#include "disklab/graph.hpp"
#include "disklab/property.hpp"
#include "disklab/testers.hpp"

namespace disklab {

// Sorted multiset of radius-t disk codes of the sampled vertices.
using TableKey = std::vector<std::string>;

struct TableEntry {
  std::uint64_t accepts = 0;
  std::uint64_t total = 0;
  double probability() const {
    return total == 0 ? 0.0 : static_cast<double>(accepts) / static_cast<double>(total);
  }
};

// Acceptance probability of a base tester conditioned on the unlabeled
// types of the t disks it was shown. The derived tester accepts iff the
// stored probability is at least `threshold`; keys never observed reject.
struct DecisionTable {
  std::size_t t = 0;
  std::size_t n = 0;
  double threshold = 0.5;
  std::map<TableKey, TableEntry> entries;

  bool accepts(const TableKey& key) const;
};

struct CanonicalConfig {
  std::size_t max_n = 64;
  std::size_t max_t = 4;
  std::size_t max_exact_tuples = 4096;  // n^t bound for exact mode
};

TableKey table_key(const BoundedGraph& g, const std::vector<Vertex>& sample, std::size_t t);

// Monte Carlo mode. Trial i picks a corpus graph uniformly, relabels it by a
// random permutation, draws t vertices uniformly with replacement and runs
// the base tester on them with fresh coins, all from stream_seed(seed, i).
// Throws kCapExceeded (n or t too large), kEmptySet, kSizeMismatch.
DecisionTable canonicalize_tester(const Tester& base, const std::vector<BoundedGraph>& corpus,
                                  std::size_t t, std::size_t trials, std::uint64_t seed,
                                  const CanonicalConfig& cfg = {});

// Exact mode for deterministic, label-invariant base testers: every corpus
// graph and every ordered t-tuple once, on the identity labeling.
DecisionTable canonicalize_tester_exact(const Tester& base,
                                        const std::vector<BoundedGraph>& corpus, std::size_t t,
                                        const CanonicalConfig& cfg = {});

// The canonical tester: sample t vertices, read their radius-t disks through
// the oracle and look the key up.
Tester canonical_tester_fn(const DecisionTable& table);

// Base testers used for validation.
// Rejects iff some of the t sampled vertices is isolated.
Tester reject_if_isolated_tester(std::size_t t);
// Samples two vertices and rejects iff they are within distance r.
Tester separated_pair_tester(std::size_t r = 1);

// Frequency-net tester: estimate the radius-t frequency vector from
// `samples` roots and accept iff the nearest member vector is at least as
// close as the nearest far vector.
class NetTester {
 public:
  // Throws kEmptyProperty.
  NetTester(const PropertySet& property, const std::vector<BoundedGraph>& far_graphs,
            std::size_t t, std::size_t samples);

  Verdict run(QueryOracle& oracle, std::uint64_t seed) const;
  Tester as_tester() const;

  const std::vector<FrequencyVector>& member_vectors() const { return members_; }
  const std::vector<FrequencyVector>& far_vectors() const { return far_; }

  // Decision rule on a given estimate; exposed for tests.
  Decision decide(const FrequencyVector& estimate) const;

 private:
  std::size_t n_;
  std::size_t t_;
  std::size_t samples_;
  std::vector<FrequencyVector> members_;
  std::vector<FrequencyVector> far_;
};

// Convenience wrapper; the far set comes from far_set(property, eps).
Verdict net_tester(QueryOracle& oracle, const PropertySet& property, double eps, std::size_t t,
                   std::uint64_t seed, std::size_t samples = 100);

}  // namespace disklab
