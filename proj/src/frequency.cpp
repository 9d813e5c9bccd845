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

#include "disklab/frequency.hpp"

#include <sstream>
#include <string>

#include "disklab/error.hpp"
#include "disklab/rng.hpp"

namespace disklab {

Rational FrequencyVector::exact(const DiskType& t) const {
  auto it = counts.find(t);
  if (it == counts.end() || denominator == 0) return Rational(0);
  return Rational(static_cast<std::int64_t>(it->second), static_cast<std::int64_t>(denominator));
}

double FrequencyVector::fraction(const DiskType& t) const { return to_double(exact(t)); }

double to_double(const Rational& r) {
  return static_cast<double>(r.numerator()) / static_cast<double>(r.denominator());
}

std::vector<DiskType> disk_types(const BoundedGraph& g, std::size_t k) {
  const auto n = static_cast<std::int64_t>(g.num_vertices());
  std::vector<DiskType> types(g.num_vertices());
#pragma omp parallel for schedule(dynamic, 64)
  for (std::int64_t v = 0; v < n; ++v) {
    types[v] = disk_type(g, static_cast<Vertex>(v), k);
  }
  return types;
}

FrequencyVector histogram(std::span<const DiskType> types, std::size_t k) {
  FrequencyVector f;
  f.k = k;
  f.denominator = types.size();
  for (const auto& t : types) ++f.counts[t];
  return f;
}

FrequencyVector frequency_vector(const BoundedGraph& g, std::size_t k,
                                 std::optional<std::span<const Vertex>> subset) {
  if (!subset) return histogram(disk_types(g, k), k);
  if (subset->empty()) throw Error(ErrorCode::kEmptySubset, "frequency vector over empty subset");
  for (auto v : *subset) {
    if (v >= g.num_vertices()) {
      throw Error(ErrorCode::kInvalidVertex, "subset vertex " + std::to_string(v));
    }
  }
  const auto s = static_cast<std::int64_t>(subset->size());
  std::vector<DiskType> types(subset->size());
#pragma omp parallel for schedule(dynamic, 64)
  for (std::int64_t i = 0; i < s; ++i) {
    types[i] = disk_type(g, (*subset)[i], k);
  }
  return histogram(types, k);
}

FrequencyVector estimate_frequency_vector(QueryOracle& oracle, std::size_t k,
                                          std::size_t samples, std::uint64_t seed) {
  if (samples == 0) throw Error(ErrorCode::kInvalidParams, "samples must be positive");
  FrequencyVector f;
  f.k = k;
  const std::size_t n = oracle.num_vertices();
  if (n == 0) return f;
  Rng rng(seed);
  f.denominator = samples;
  for (std::size_t i = 0; i < samples; ++i) {
    auto v = static_cast<Vertex>(uniform_below(rng, n));
    ++f.counts[canonical_code(extract_disk(oracle, v, k), oracle.degree_bound())];
  }
  return f;
}

Rational l1_distance_exact(const FrequencyVector& a, const FrequencyVector& b) {
  if (a.k != b.k) {
    throw Error(ErrorCode::kRadiusMismatch, "radius " + std::to_string(a.k) + " vs " +
                                                std::to_string(b.k));
  }
  if (a.denominator == 0 || b.denominator == 0) {
    if (a.denominator == 0 && b.denominator == 0) return Rational(0);
    return Rational(1);
  }
  const __int128 da = a.denominator;
  const __int128 db = b.denominator;
  __int128 num = 0;
  auto ia = a.counts.begin();
  auto ib = b.counts.begin();
  while (ia != a.counts.end() || ib != b.counts.end()) {
    __int128 x = 0;
    __int128 y = 0;
    if (ib == b.counts.end() || (ia != a.counts.end() && ia->first < ib->first)) {
      x = ia->second;
      ++ia;
    } else if (ia == a.counts.end() || ib->first < ia->first) {
      y = ib->second;
      ++ib;
    } else {
      x = ia->second;
      y = ib->second;
      ++ia;
      ++ib;
    }
    __int128 diff = x * db - y * da;
    num += diff < 0 ? -diff : diff;
  }
  __int128 den = da * db;
  __int128 p = num;
  __int128 q = den;
  while (q != 0) {
    __int128 r = p % q;
    p = q;
    q = r;
  }
  __int128 common = p == 0 ? 1 : p;
  return Rational(static_cast<std::int64_t>(num / common), static_cast<std::int64_t>(den / common));
}

double l1_distance(const FrequencyVector& a, const FrequencyVector& b) {
  return to_double(l1_distance_exact(a, b));
}

double tv_distance(const FrequencyVector& a, const FrequencyVector& b) {
  return l1_distance(a, b) / 2.0;
}

std::string to_csv(const FrequencyVector& f) {
  std::ostringstream out;
  out << "code,numerator,denominator\n";
  for (const auto& [t, c] : f.counts) out << t.hex() << ',' << c << ',' << f.denominator << '\n';
  return out.str();
}

}  // namespace disklab
