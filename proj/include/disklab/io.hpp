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

#include <filesystem>
#include <iosfwd>
#include <string>

#include "disklab/graph.hpp"

namespace disklab {

// Edge-list text format: a header line "n d", then one "u v" pair per line,
// 0-indexed and whitespace separated. '#' starts a comment. Violations are
// reported as kParseError with the offending line number.
BoundedGraph read_edge_list(std::istream& in);
BoundedGraph read_edge_list_file(const std::filesystem::path& path);

void write_edge_list(std::ostream& out, const BoundedGraph& g);
std::string to_edge_list(const BoundedGraph& g);

// Writes to a sibling temporary file and renames it into place, so readers
// never observe a partial file.
void write_file_atomic(const std::filesystem::path& path, const std::string& contents);

}  // namespace disklab
