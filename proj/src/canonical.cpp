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

#include "disklab/canonical.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <string>

#include "disklab/error.hpp"
#include "disklab/kdisk.hpp"

namespace disklab {
namespace {

void check_corpus(const std::vector<BoundedGraph>& corpus, std::size_t t,
                  const CanonicalConfig& cfg) {
  if (corpus.empty()) throw Error(ErrorCode::kEmptySet, "empty corpus");
  const std::size_t n = corpus.front().num_vertices();
  for (const auto& g : corpus) {
    if (g.num_vertices() != n) throw Error(ErrorCode::kSizeMismatch, "corpus sizes differ");
  }
  if (n == 0) throw Error(ErrorCode::kInvalidSize, "corpus graphs must be nonempty");
  if (n > cfg.max_n) {
    throw Error(ErrorCode::kCapExceeded, "n = " + std::to_string(n) + " exceeds cap " +
                                             std::to_string(cfg.max_n));
  }
  if (t == 0 || t > cfg.max_t) {
    throw Error(ErrorCode::kCapExceeded, "t = " + std::to_string(t) + " outside [1," +
                                             std::to_string(cfg.max_t) + "]");
  }
}

TableKey key_from_types(const std::vector<std::string>& types, const std::vector<Vertex>& sample) {
  TableKey key;
  key.reserve(sample.size());
  for (auto v : sample) key.push_back(types[v]);
  std::sort(key.begin(), key.end());
  return key;
}

}  // namespace

bool DecisionTable::accepts(const TableKey& key) const {
  auto it = entries.find(key);
  return it != entries.end() && it->second.probability() >= threshold;
}

TableKey table_key(const BoundedGraph& g, const std::vector<Vertex>& sample, std::size_t t) {
  TableKey key;
  for (auto v : sample) key.push_back(disk_type(g, v, t).code);
  std::sort(key.begin(), key.end());
  return key;
}

DecisionTable canonicalize_tester(const Tester& base, const std::vector<BoundedGraph>& corpus,
                                  std::size_t t, std::size_t trials, std::uint64_t seed,
                                  const CanonicalConfig& cfg) {
  check_corpus(corpus, t, cfg);
  if (trials == 0) throw Error(ErrorCode::kInvalidParams, "trials must be positive");
  const std::size_t n = corpus.front().num_vertices();
  std::vector<TableKey> keys(trials);
  std::vector<char> accepted(trials, 0);
  const auto count = static_cast<std::int64_t>(trials);
#pragma omp parallel for schedule(dynamic, 16)
  for (std::int64_t i = 0; i < count; ++i) {
    Rng rng(stream_seed(seed, static_cast<std::uint64_t>(i)));
    const auto& g = corpus[uniform_below(rng, corpus.size())];
    std::vector<Vertex> perm(n);
    std::iota(perm.begin(), perm.end(), 0u);
    std::shuffle(perm.begin(), perm.end(), rng);
    auto h = relabel(g, perm);
    std::vector<Vertex> sample(t);
    for (auto& v : sample) v = static_cast<Vertex>(uniform_below(rng, n));
    keys[i] = table_key(h, sample, t);
    QueryOracle oracle(h);
    FixedSampler sampler(sample);
    Rng coins(rng());
    TesterInput in{oracle, sampler, coins};
    accepted[i] = base(in).decision == Decision::kAccept;
  }
  DecisionTable table;
  table.t = t;
  table.n = n;
  for (std::size_t i = 0; i < trials; ++i) {
    auto& e = table.entries[keys[i]];
    ++e.total;
    e.accepts += accepted[i];
  }
  return table;
}

DecisionTable canonicalize_tester_exact(const Tester& base,
                                        const std::vector<BoundedGraph>& corpus, std::size_t t,
                                        const CanonicalConfig& cfg) {
  check_corpus(corpus, t, cfg);
  const std::size_t n = corpus.front().num_vertices();
  std::size_t tuples = 1;
  for (std::size_t i = 0; i < t; ++i) {
    if (tuples > cfg.max_exact_tuples / n) {
      throw Error(ErrorCode::kCapExceeded, "exact mode needs n^t <= " +
                                               std::to_string(cfg.max_exact_tuples));
    }
    tuples *= n;
  }
  DecisionTable table;
  table.t = t;
  table.n = n;
  for (const auto& g : corpus) {
    std::vector<std::string> types(n);
    for (Vertex v = 0; v < n; ++v) types[v] = disk_type(g, v, t).code;
    std::vector<TableKey> keys(tuples);
    std::vector<char> accepted(tuples, 0);
    const auto count = static_cast<std::int64_t>(tuples);
#pragma omp parallel for schedule(dynamic, 16)
    for (std::int64_t idx = 0; idx < count; ++idx) {
      std::vector<Vertex> sample(t);
      auto rest = static_cast<std::size_t>(idx);
      for (std::size_t j = 0; j < t; ++j) {
        sample[j] = static_cast<Vertex>(rest % n);
        rest /= n;
      }
      keys[idx] = key_from_types(types, sample);
      QueryOracle oracle(g);
      FixedSampler sampler(sample);
      Rng coins(0);
      TesterInput in{oracle, sampler, coins};
      accepted[idx] = base(in).decision == Decision::kAccept;
    }
    for (std::size_t i = 0; i < tuples; ++i) {
      auto& e = table.entries[keys[i]];
      ++e.total;
      e.accepts += accepted[i];
    }
  }
  return table;
}

Tester canonical_tester_fn(const DecisionTable& table) {
  return [table](TesterInput& in) -> Outcome {
    TableKey key;
    for (std::size_t i = 0; i < table.t; ++i) {
      auto disk = extract_disk(in.oracle, in.sampler.next(), table.t);
      key.push_back(canonical_code(disk).code);
    }
    std::sort(key.begin(), key.end());
    return {table.accepts(key) ? Decision::kAccept : Decision::kReject, "table"};
  };
}

Tester reject_if_isolated_tester(std::size_t t) {
  return [t](TesterInput& in) -> Outcome {
    for (std::size_t i = 0; i < t; ++i) {
      if (!in.oracle.neighbor(in.sampler.next(), 1)) return {Decision::kReject, "isolated"};
    }
    return {Decision::kAccept, "isolated"};
  };
}

Tester separated_pair_tester(std::size_t r) {
  return [r](TesterInput& in) -> Outcome {
    Vertex a = in.sampler.next();
    Vertex b = in.sampler.next();
    auto disk = extract_disk(in.oracle, a, r);
    bool close = std::find(disk.source.begin(), disk.source.end(), b) != disk.source.end();
    return {close ? Decision::kReject : Decision::kAccept, "pair"};
  };
}

NetTester::NetTester(const PropertySet& property, const std::vector<BoundedGraph>& far_graphs,
                     std::size_t t, std::size_t samples)
    : n_(property.n), t_(t), samples_(samples) {
  validate(property);
  if (samples == 0) throw Error(ErrorCode::kInvalidParams, "samples must be positive");
  for (const auto& g : property.members) members_.push_back(frequency_vector(g, t));
  for (const auto& g : far_graphs) far_.push_back(frequency_vector(g, t));
}

Decision NetTester::decide(const FrequencyVector& estimate) const {
  auto nearest = [&](const std::vector<FrequencyVector>& set) {
    Rational best(std::numeric_limits<std::int64_t>::max());
    bool any = false;
    for (const auto& f : set) {
      auto dist = l1_distance_exact(estimate, f);
      if (!any || dist < best) best = dist;
      any = true;
    }
    return std::pair{any, best};
  };
  auto [has_far, to_far] = nearest(far_);
  if (!has_far) return Decision::kAccept;
  auto [has_member, to_member] = nearest(members_);
  (void)has_member;
  return to_member <= to_far ? Decision::kAccept : Decision::kReject;
}

Verdict NetTester::run(QueryOracle& oracle, std::uint64_t seed) const {
  if (oracle.num_vertices() != n_) {
    throw Error(ErrorCode::kSizeMismatch, "graph and property sizes differ");
  }
  std::size_t before = oracle.queries();
  auto estimate = estimate_frequency_vector(oracle, t_, samples_, seed);
  return Verdict{decide(estimate), oracle.queries() - before, seed, "net"};
}

Tester NetTester::as_tester() const {
  return [self = *this](TesterInput& in) -> Outcome {
    return {self.decide(estimate_frequency_vector(in.oracle, self.t_, self.samples_, in.coins())),
            "net"};
  };
}

Verdict net_tester(QueryOracle& oracle, const PropertySet& property, double eps, std::size_t t,
                   std::uint64_t seed, std::size_t samples) {
  NetTester tester(property, far_set(property, eps), t, samples);
  return tester.run(oracle, seed);
}

}  // namespace disklab
