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
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "disklab/frequency.hpp"
#include "disklab/graph.hpp"

namespace disklab {

// delta as an exact fraction with denominator 10^6.
Rational to_rational(double x);

// e(S, V \ S) / (d |S|). Throws kEmptySet, kTooLarge (|S| > n/2), kInvalidVertex.
Rational conductance(const BoundedGraph& g, std::span<const Vertex> s);

struct ExpansionResult {
  Rational value;
  std::vector<Vertex> witness;
  bool exact = false;  // false: heuristic upper bound
};

// Minimum conductance over nonempty S with |S| <= n/2. Exhaustive (in
// parallel) when n <= exact_cap, otherwise the best of seeded sweeps.
// Throws kInvalidSize for n < 2.
ExpansionResult graph_expansion(const BoundedGraph& g, std::size_t exact_cap = 20,
                                std::uint64_t seed = 0);

struct PartitionCaps {
  std::size_t exact_subset = 20;  // full enumeration of W up to this size
  std::size_t small_size = 3;     // always-exact candidate size
  std::size_t reduce_exact = 20;  // exact minimality reduction up to this size
};

struct LowConductanceSet {
  std::vector<Vertex> vertices;
  Rational conductance;
  bool minimal_exact = true;  // false: only single-removal minimality checked
};

// A set A of W with |A| <= n/2 and conductance in g at most delta, none of
// whose proper nonempty subsets qualifies; nullopt when none is found.
std::optional<LowConductanceSet> find_min_low_conductance_set(const BoundedGraph& g,
                                                              std::span<const Vertex> w,
                                                              const Rational& delta,
                                                              const PartitionCaps& caps = {});

struct Partition {
  std::vector<std::vector<Vertex>> classes;
  std::vector<Vertex> separator;
  std::vector<std::vector<Vertex>> atoms;  // extraction order
  std::vector<std::size_t> class_of_atom;
  std::vector<char> atom_exact;            // minimality proven exactly
  bool residual_atom = false;              // last atom is the leftover W
  std::size_t k = 0;
  Rational delta;
  std::size_t active_types = 0;
  std::size_t occupied_cells = 0;
};

// Extract minimal low-conductance atoms, moving their outside neighbors to
// the separator; the leftover becomes a final atom. Atoms are grouped by
// rounding their frequency vectors down to multiples of delta / m_active on
// every active type, so two atoms of one class are within l1 distance delta.
Partition partition_graph(const BoundedGraph& g, std::size_t k, double delta,
                          const PartitionCaps& caps = {});

struct XBudget {
  std::size_t exhaustive = 16;  // enumerate all X when |S_i| is at most this
  std::size_t samples = 10000;  // candidates per graph otherwise
};

struct Violation {
  std::size_t cls = 0;
  std::vector<Vertex> subset;
  Rational conductance;
  Rational distance;
};

// One relevant X (conductance at most delta^2).
struct XRow {
  std::size_t cls = 0;
  std::size_t size = 0;
  Rational conductance;
  Rational distance;
  bool violation = false;
};

struct PartitionReport {
  bool disjoint_cover = false;   // classes and separator partition V
  bool no_cross_edges = false;   // bullet 1
  bool separator_small = false;  // bullet 2
  bool atoms_tile_classes = false;
  std::size_t candidates = 0;    // X examined
  std::size_t relevant = 0;      // X with conductance <= delta^2
  double max_distance = 0.0;     // over relevant X
  std::vector<XRow> rows;
  std::vector<Violation> violations;
  bool ok() const {
    return disjoint_cover && no_cross_edges && separator_small && atoms_tile_classes &&
           violations.empty();
  }
};

PartitionReport verify_partition(const BoundedGraph& g, const Partition& p,
                                 const XBudget& budget = {}, std::uint64_t seed = 0);

// class,subset_size,conductance,l1_distance,violation_flag
std::string to_csv(const PartitionReport& r);

}  // namespace disklab
