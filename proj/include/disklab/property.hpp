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
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "disklab/graph.hpp"

namespace disklab {

// Finite slice of a graph property: representatives of the isomorphism
// classes of its n-vertex members.
struct PropertySet {
  std::string name;
  std::size_t n = 0;
  std::size_t d = 1;
  std::vector<BoundedGraph> members;
};

// Throws kInvalidSize unless n is a positive multiple of 3, kInvalidParams if d < 2.
PropertySet unions_of_triangles(std::size_t n, std::size_t d = 2);

// Every member of the property from the testers module on n vertices, up to
// isomorphism (drawn from the catalog; n <= 12).
PropertySet pi_property(std::size_t n, std::size_t d);

// Throws kEmptyProperty / kSizeMismatch / kDegreeExceeded on inconsistent input.
void validate(const PropertySet& p);

// Isomorphism classes within `radius` single-edge edits of any center, with
// their distance. Intermediate graphs stay d-bounded; since deletions can
// always be ordered first, this equals the minimum symmetric difference over
// all labelings. Keys are graph codes.
std::map<std::string, std::size_t> edit_ball(const std::vector<BoundedGraph>& centers,
                                             std::size_t d, std::size_t radius);

// Minimum number of edge edits turning g into a member, or nullopt when it
// exceeds max_radius. Throws kTooLarge for n > 12.
std::optional<std::size_t> distance_to_property(const BoundedGraph& g, const PropertySet& p,
                                                std::size_t max_radius);

// Far means more than floor(eps d n) edits are needed.
std::size_t far_radius(double eps, std::size_t d, std::size_t n);
bool is_eps_far(const BoundedGraph& g, const PropertySet& p, double eps);

// Every n-vertex d-bounded class that is eps-far from p, via the catalog.
std::vector<BoundedGraph> far_set(const PropertySet& p, double eps, std::size_t limit = 200000);

}  // namespace disklab
