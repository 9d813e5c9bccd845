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

#include "disklab/canon.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <utility>

namespace disklab::canon {
namespace {

constexpr std::size_t kNoJump = std::numeric_limits<std::size_t>::max();

std::size_t pair_index(std::size_t i, std::size_t j, std::size_t n) {
  return i * n - i * (i + 1) / 2 + (j - i - 1);
}

// cell[v] is the index of the first position of v's cell; cells are
// contiguous ranges of positions.
struct Partition {
  std::vector<std::uint32_t> cell;
  std::size_t num_cells = 0;
};

class Searcher {
 public:
  explicit Searcher(const AdjList& adj) : adj_(adj), n_(adj.size()) {}

  CanonicalForm run(std::span<const std::uint32_t> colors) {
    Partition p;
    p.cell.resize(n_);
    std::vector<std::uint32_t> sorted(colors.begin(), colors.end());
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t v = 0; v < n_; ++v) {
      p.cell[v] = static_cast<std::uint32_t>(
          std::lower_bound(sorted.begin(), sorted.end(), colors[v]) - sorted.begin());
    }
    p.num_cells = count_cells(p);
    std::vector<std::uint32_t> path;
    search(std::move(p), path);
    return CanonicalForm{best_order_, best_code_};
  }

 private:
  std::size_t count_cells(const Partition& p) const {
    std::vector<char> seen(n_, 0);
    std::size_t c = 0;
    for (auto x : p.cell) {
      if (!seen[x]) {
        seen[x] = 1;
        ++c;
      }
    }
    return c;
  }

  // Equitable refinement: split cells by the sorted multiset of neighbor
  // cells until stable. Only label-invariant data enters the ordering.
  void refine(Partition& p) const {
    std::vector<std::vector<std::uint32_t>> sig(n_);
    std::vector<std::uint32_t> idx(n_);
    while (p.num_cells < n_) {
      for (std::size_t v = 0; v < n_; ++v) {
        auto& s = sig[v];
        s.clear();
        s.push_back(p.cell[v]);
        for (auto w : adj_[v]) s.push_back(p.cell[w]);
        std::sort(s.begin() + 1, s.end());
      }
      std::iota(idx.begin(), idx.end(), 0u);
      std::sort(idx.begin(), idx.end(),
                [&](std::uint32_t a, std::uint32_t b) { return sig[a] < sig[b]; });
      std::size_t cells = 0;
      std::uint32_t start = 0;
      for (std::size_t i = 0; i < n_; ++i) {
        if (i == 0 || sig[idx[i]] != sig[idx[i - 1]]) {
          start = static_cast<std::uint32_t>(i);
          ++cells;
        }
        p.cell[idx[i]] = start;
      }
      if (cells == p.num_cells) break;
      p.num_cells = cells;
    }
  }

  Partition individualize(const Partition& p, std::uint32_t v) const {
    Partition q = p;
    std::uint32_t c = p.cell[v];
    for (std::size_t w = 0; w < n_; ++w) {
      if (w != v && p.cell[w] == c) q.cell[w] = c + 1;
    }
    q.num_cells = p.num_cells + 1;
    return q;
  }

  std::vector<std::uint64_t> leaf_code(const Partition& p) const {
    std::size_t bits = n_ * (n_ - (n_ > 0 ? 1 : 0)) / 2;
    std::vector<std::uint64_t> code((bits + 63) / 64, 0);
    for (std::size_t u = 0; u < n_; ++u) {
      for (auto w : adj_[u]) {
        std::size_t a = p.cell[u];
        std::size_t b = p.cell[w];
        if (a < b) {
          std::size_t k = pair_index(a, b, n_);
          code[k / 64] |= std::uint64_t{1} << (63 - k % 64);
        }
      }
    }
    return code;
  }

  static std::vector<std::uint32_t> order_of(const Partition& p) {
    std::vector<std::uint32_t> order(p.cell.size());
    for (std::size_t v = 0; v < p.cell.size(); ++v) order[p.cell[v]] = static_cast<std::uint32_t>(v);
    return order;
  }

  static std::size_t common_prefix(const std::vector<std::uint32_t>& a,
                                   const std::vector<std::uint32_t>& b) {
    std::size_t i = 0;
    while (i < a.size() && i < b.size() && a[i] == b[i]) ++i;
    return i;
  }

  void add_generator(const std::vector<std::uint32_t>& from, const std::vector<std::uint32_t>& to) {
    std::vector<std::uint32_t> g(n_);
    bool identity = true;
    for (std::size_t i = 0; i < n_; ++i) {
      g[from[i]] = to[i];
      if (from[i] != to[i]) identity = false;
    }
    if (!identity) generators_.push_back(std::move(g));
  }

  std::size_t process_leaf(const Partition& p, const std::vector<std::uint32_t>& path) {
    auto code = leaf_code(p);
    auto order = order_of(p);
    if (!have_first_) {
      have_first_ = true;
      first_code_ = best_code_ = code;
      first_order_ = best_order_ = order;
      first_path_ = best_path_ = path;
      return kNoJump;
    }
    if (code == first_code_) {
      add_generator(order, first_order_);
      return common_prefix(path, first_path_);
    }
    if (code == best_code_) {
      add_generator(order, best_order_);
      return common_prefix(path, best_path_);
    }
    if (code < best_code_) {
      best_code_ = std::move(code);
      best_order_ = std::move(order);
      best_path_ = path;
    }
    return kNoJump;
  }

  static std::uint32_t find(std::vector<std::uint32_t>& uf, std::uint32_t x) {
    while (uf[x] != x) {
      uf[x] = uf[uf[x]];
      x = uf[x];
    }
    return x;
  }

  // Orbits of the group generated by known automorphisms fixing `path`.
  std::vector<std::uint32_t> stabilizer_orbits(const std::vector<std::uint32_t>& path) const {
    std::vector<std::uint32_t> uf(n_);
    std::iota(uf.begin(), uf.end(), 0u);
    for (const auto& g : generators_) {
      bool fixes = std::all_of(path.begin(), path.end(), [&](std::uint32_t v) { return g[v] == v; });
      if (!fixes) continue;
      for (std::uint32_t v = 0; v < n_; ++v) {
        auto a = find(uf, v);
        auto b = find(uf, g[v]);
        if (a != b) uf[std::max(a, b)] = std::min(a, b);
      }
    }
    return uf;
  }

  std::size_t search(Partition p, std::vector<std::uint32_t>& path) {
    refine(p);
    if (p.num_cells == n_) return process_leaf(p, path);

    std::uint32_t target = 0;
    {
      std::vector<std::uint32_t> size(n_, 0);
      for (auto c : p.cell) ++size[c];
      while (size[target] <= 1) ++target;
    }
    std::vector<std::uint32_t> members;
    for (std::uint32_t v = 0; v < n_; ++v) {
      if (p.cell[v] == target) members.push_back(v);
    }

    const std::size_t depth = path.size();
    std::vector<std::uint32_t> explored;
    std::size_t seen_generators = 0;
    std::vector<std::uint32_t> uf;
    for (auto v : members) {
      if (!explored.empty()) {
        if (generators_.size() != seen_generators || uf.empty()) {
          uf = stabilizer_orbits(path);
          seen_generators = generators_.size();
        }
        auto r = find(uf, v);
        bool pruned = std::any_of(explored.begin(), explored.end(),
                                  [&](std::uint32_t e) { return find(uf, e) == r; });
        if (pruned) continue;
      }
      path.push_back(v);
      std::size_t jump = search(individualize(p, v), path);
      path.pop_back();
      explored.push_back(v);
      if (jump < depth) return jump;
    }
    return kNoJump;
  }

  const AdjList& adj_;
  std::size_t n_;
  bool have_first_ = false;
  std::vector<std::uint64_t> first_code_, best_code_;
  std::vector<std::uint32_t> first_order_, best_order_;
  std::vector<std::uint32_t> first_path_, best_path_;
  std::vector<std::vector<std::uint32_t>> generators_;
};

}  // namespace

CanonicalForm canonical_form(const AdjList& adj, std::span<const std::uint32_t> colors) {
  if (adj.empty()) return {};
  Searcher s(adj);
  return s.run(colors);
}

std::string pack_bits(const std::vector<std::uint64_t>& bits, std::size_t n) {
  std::size_t nbits = n * (n - (n > 0 ? 1 : 0)) / 2;
  std::string out((nbits + 7) / 8, '\0');
  for (std::size_t i = 0; i < out.size(); ++i) {
    std::uint64_t w = bits[i / 8];
    out[i] = static_cast<char>((w >> (56 - 8 * (i % 8))) & 0xFF);
  }
  return out;
}

AdjList unpack_bits(std::string_view bytes, std::size_t n) {
  AdjList adj(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      std::size_t k = pair_index(i, j, n);
      auto byte = static_cast<unsigned char>(bytes[k / 8]);
      if ((byte >> (7 - k % 8)) & 1) {
        adj[i].push_back(static_cast<std::uint32_t>(j));
        adj[j].push_back(static_cast<std::uint32_t>(i));
      }
    }
  }
  return adj;
}

}  // namespace disklab::canon
