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
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <boost/rational.hpp>

#include "disklab/graph.hpp"
#include "disklab/kdisk.hpp"
#include "disklab/oracle.hpp"

namespace disklab {

using Rational = boost::rational<std::int64_t>;

// Distribution of disk types, stored as exact counts over a common
// denominator (the number of roots that were classified).
struct FrequencyVector {
  std::size_t k = 0;
  std::uint64_t denominator = 0;
  std::map<DiskType, std::uint64_t> counts;

  std::size_t support_size() const { return counts.size(); }
  Rational exact(const DiskType& t) const;
  double fraction(const DiskType& t) const;
  bool operator==(const FrequencyVector&) const = default;
};

// One type per vertex, computed in parallel.
std::vector<DiskType> disk_types(const BoundedGraph& g, std::size_t k);

FrequencyVector histogram(std::span<const DiskType> types, std::size_t k);

// Exact frequency vector over `subset` (all vertices when absent). Disks are
// taken in g, not in the induced subgraph. Throws kEmptySubset,
// kInvalidVertex.
FrequencyVector frequency_vector(const BoundedGraph& g, std::size_t k,
                                 std::optional<std::span<const Vertex>> subset = std::nullopt);

// Empirical vector over `samples` independent uniform roots.
FrequencyVector estimate_frequency_vector(QueryOracle& oracle, std::size_t k,
                                          std::size_t samples, std::uint64_t seed);

// Throws kRadiusMismatch. Empty vectors are at distance 0 from each other.
Rational l1_distance_exact(const FrequencyVector& a, const FrequencyVector& b);
double l1_distance(const FrequencyVector& a, const FrequencyVector& b);
// Total variation, l1 / 2.
double tv_distance(const FrequencyVector& a, const FrequencyVector& b);

double to_double(const Rational& r);

// Rows "code,numerator,denominator" sorted by code, with a header line.
std::string to_csv(const FrequencyVector& f);

}  // namespace disklab
