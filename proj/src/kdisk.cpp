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

#include "disklab/kdisk.hpp"

#include <algorithm>
#include <string>
#include <unordered_map>

#include "disklab/canon.hpp"
#include "disklab/error.hpp"

namespace disklab {
namespace {

// BFS to depth k, then induced edges among the discovered vertices.
// `neighbors_of(v, out)` fills the full neighbor list of v.
template <typename Fetch>
RootedDisk bfs_disk(Vertex root, std::size_t k, Fetch&& neighbors_of) {
  RootedDisk disk;
  disk.radius = k;
  std::unordered_map<Vertex, std::uint32_t> local;
  std::vector<std::vector<Vertex>> lists;
  disk.source.push_back(root);
  disk.dist.push_back(0);
  local.emplace(root, 0);
  std::vector<Vertex> nb;
  for (std::size_t head = 0; head < disk.source.size(); ++head) {
    neighbors_of(disk.source[head], nb);
    lists.push_back(nb);
    if (disk.dist[head] == k) continue;
    for (auto w : nb) {
      if (local.emplace(w, static_cast<std::uint32_t>(disk.source.size())).second) {
        disk.source.push_back(w);
        disk.dist.push_back(disk.dist[head] + 1);
      }
    }
  }
  disk.adj.resize(disk.source.size());
  for (std::size_t i = 0; i < disk.source.size(); ++i) {
    for (auto w : lists[i]) {
      auto it = local.find(w);
      if (it != local.end()) disk.adj[i].push_back(it->second);
    }
    std::sort(disk.adj[i].begin(), disk.adj[i].end());
  }
  return disk;
}

constexpr std::size_t kHeaderBytes = 4;

void put16(std::string& s, std::size_t x) {
  s.push_back(static_cast<char>((x >> 8) & 0xFF));
  s.push_back(static_cast<char>(x & 0xFF));
}

std::size_t get16(std::string_view s, std::size_t at) {
  return (static_cast<std::size_t>(static_cast<unsigned char>(s[at])) << 8) |
         static_cast<unsigned char>(s[at + 1]);
}

}  // namespace

std::size_t RootedDisk::num_edges() const {
  std::size_t total = 0;
  for (const auto& a : adj) total += a.size();
  return total / 2;
}

RootedDisk extract_disk(const BoundedGraph& g, Vertex v, std::size_t k) {
  if (v >= g.num_vertices()) {
    throw Error(ErrorCode::kInvalidVertex, "disk root " + std::to_string(v));
  }
  return bfs_disk(v, k, [&](Vertex u, std::vector<Vertex>& out) {
    auto nb = g.neighbors(u);
    out.assign(nb.begin(), nb.end());
  });
}

RootedDisk extract_disk(QueryOracle& oracle, Vertex v, std::size_t k) {
  if (v >= oracle.num_vertices()) {
    throw Error(ErrorCode::kInvalidVertex, "disk root " + std::to_string(v));
  }
  const std::size_t d = oracle.degree_bound();
  return bfs_disk(v, k, [&](Vertex u, std::vector<Vertex>& out) {
    out.clear();
    for (std::size_t i = 1; i <= d; ++i) {
      auto w = oracle.neighbor(u, i);
      if (!w) break;
      out.push_back(*w);
    }
  });
}

DiskType canonical_code(const RootedDisk& disk, std::size_t degree_bound) {
  const std::size_t m = disk.num_vertices();
  if (m > 0xFFFF || disk.radius > 0xFFFF) {
    throw Error(ErrorCode::kTooLarge, "disk too large to encode");
  }
  auto form = canon::canonical_form(disk.adj, disk.dist);
  DiskType t;
  t.num_vertices = m;
  t.radius = disk.radius;
  t.degree_bound = degree_bound;
  t.code.reserve(kHeaderBytes + m * m / 16 + 1);
  put16(t.code, disk.radius);
  put16(t.code, m);
  t.code += canon::pack_bits(form.bits, m);
  return t;
}

DiskType disk_type(const BoundedGraph& g, Vertex v, std::size_t k) {
  return canonical_code(extract_disk(g, v, k), g.degree_bound());
}

std::string DiskType::hex() const {
  static constexpr char kDigits[] = "0123456789abcdef";
  std::string out;
  out.reserve(code.size() * 2);
  for (unsigned char c : code) {
    out.push_back(kDigits[c >> 4]);
    out.push_back(kDigits[c & 0xF]);
  }
  return out;
}

DiskType DiskType::from_hex(std::string_view hex, std::size_t degree_bound) {
  auto nibble = [&](char c) -> int {
    if (c >= '0' && c <= '9') return c - '0';
    if (c >= 'a' && c <= 'f') return c - 'a' + 10;
    throw Error(ErrorCode::kParseError, "bad hex digit in disk code");
  };
  if (hex.size() % 2 != 0 || hex.size() < 2 * kHeaderBytes) {
    throw Error(ErrorCode::kParseError, "disk code has wrong length");
  }
  DiskType t;
  for (std::size_t i = 0; i < hex.size(); i += 2) {
    t.code.push_back(static_cast<char>(nibble(hex[i]) * 16 + nibble(hex[i + 1])));
  }
  t.radius = get16(t.code, 0);
  t.num_vertices = get16(t.code, 2);
  t.degree_bound = degree_bound;
  std::size_t m = t.num_vertices;
  std::size_t nbits = m * (m - (m > 0 ? 1 : 0)) / 2;
  if (m == 0 || t.code.size() != kHeaderBytes + (nbits + 7) / 8) {
    throw Error(ErrorCode::kParseError, "disk code has wrong length");
  }
  return t;
}

RootedDisk DiskType::decode() const {
  RootedDisk d;
  d.radius = radius;
  d.adj = canon::unpack_bits(std::string_view(code).substr(kHeaderBytes), num_vertices);
  d.dist.assign(num_vertices, UINT32_MAX);
  std::vector<std::uint32_t> queue{0};
  d.dist[0] = 0;
  for (std::size_t h = 0; h < queue.size(); ++h) {
    for (auto w : d.adj[queue[h]]) {
      if (d.dist[w] == UINT32_MAX) {
        d.dist[w] = d.dist[queue[h]] + 1;
        queue.push_back(w);
      }
    }
  }
  return d;
}

std::size_t DiskType::root_degree() const {
  std::size_t deg = 0;
  for (std::size_t j = 1; j < num_vertices; ++j) {
    // Row 0 of the upper triangle occupies bits 0..m-2.
    std::size_t k = j - 1;
    auto byte = static_cast<unsigned char>(code[kHeaderBytes + k / 8]);
    deg += (byte >> (7 - k % 8)) & 1;
  }
  return deg;
}

}  // namespace disklab
