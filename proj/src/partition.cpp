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

#include "disklab/partition.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

#include "disklab/error.hpp"
#include "disklab/kdisk.hpp"
#include "disklab/reference.hpp"
#include "disklab/rng.hpp"

namespace disklab {

namespace {

constexpr std::int64_t kScale = 1000000;

using Mask = std::uint64_t;

// cut / (d * size) <= num / den, in integers.
struct Threshold {
  std::int64_t num = 0;
  std::int64_t den = 1;
  std::int64_t d = 1;
  bool holds(std::int64_t cut, std::int64_t size) const {
    return cut * den <= num * d * size;
  }
};

Threshold threshold(const Rational& delta, std::size_t d) {
  return {delta.numerator(), delta.denominator(), static_cast<std::int64_t>(d)};
}

Rational ratio(std::int64_t cut, std::size_t d, std::size_t size) {
  if (d == 0) return Rational(0);
  return Rational(cut, static_cast<std::int64_t>(d * size));
}

std::vector<Vertex> sorted_set(const BoundedGraph& g, std::span<const Vertex> s) {
  std::vector<Vertex> out(s.begin(), s.end());
  for (Vertex v : out) {
    if (v >= g.num_vertices()) throw Error(ErrorCode::kInvalidVertex, "vertex out of range");
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

// Number of edges of g leaving `s`; `mark` is all zero on entry and exit.
std::int64_t cut_size(const BoundedGraph& g, std::span<const Vertex> s,
                      std::vector<char>& mark) {
  for (Vertex v : s) mark[v] = 1;
  std::int64_t cut = 0;
  for (Vertex v : s) {
    for (Vertex u : g.neighbors(v)) cut += mark[u] ? 0 : 1;
  }
  for (Vertex v : s) mark[v] = 0;
  return cut;
}

// Vertex list with neighbor masks restricted to the list; at most 64 entries.
struct LocalView {
  std::vector<Vertex> verts;
  std::vector<Mask> nbr;
  std::vector<std::int64_t> deg;

  LocalView(const BoundedGraph& g, std::span<const Vertex> sorted) : verts(sorted.begin(), sorted.end()) {
    nbr.assign(verts.size(), 0);
    deg.assign(verts.size(), 0);
    for (std::size_t i = 0; i < verts.size(); ++i) {
      deg[i] = static_cast<std::int64_t>(g.degree(verts[i]));
      for (Vertex u : g.neighbors(verts[i])) {
        auto it = std::lower_bound(verts.begin(), verts.end(), u);
        if (it != verts.end() && *it == u) nbr[i] |= Mask{1} << (it - verts.begin());
      }
    }
  }

  std::int64_t cut(Mask m) const {
    std::int64_t c = 0;
    for (Mask r = m; r; r &= r - 1) {
      int i = std::countr_zero(r);
      c += deg[i] - std::popcount(nbr[i] & m);
    }
    return c;
  }

  std::vector<Vertex> expand(Mask m) const {
    std::vector<Vertex> out;
    for (Mask r = m; r; r &= r - 1) out.push_back(verts[std::countr_zero(r)]);
    return out;
  }
};

Mask next_combination(Mask m) {
  Mask c = m & (~m + 1);
  Mask r = m + c;
  return (((r ^ m) >> 2) / c) | r;
}

// Sorted-list lexicographic order on masks over the same vertex list.
bool mask_lex_less(Mask a, Mask b) {
  Mask x = a ^ b;
  if (x == 0) return false;
  return (a & x & (~x + 1)) != 0;
}

// Smallest qualifying subset of the view (then lowest cut, then lex first).
std::optional<Mask> smallest_qualifying(const LocalView& lv, const Threshold& th,
                                        std::size_t half) {
  const std::size_t m = lv.verts.size();
  const Mask limit = m == 64 ? ~Mask{0} : (Mask{1} << m);
  for (std::size_t s = 1; s <= std::min(m, half); ++s) {
    std::optional<Mask> best;
    std::int64_t best_cut = 0;
    for (Mask mask = (Mask{1} << s) - 1; mask < limit && mask != 0; mask = next_combination(mask)) {
      std::int64_t c = lv.cut(mask);
      if (!th.holds(c, static_cast<std::int64_t>(s))) continue;
      if (!best || c < best_cut || (c == best_cut && mask_lex_less(mask, *best))) {
        best = mask;
        best_cut = c;
      }
      if (s == m) break;
    }
    if (best) return best;
  }
  return std::nullopt;
}

struct Candidate {
  std::vector<Vertex> verts;
  std::int64_t cut = 0;
};

bool better(const Candidate& a, const Candidate& b) {
  if (a.verts.size() != b.verts.size()) return a.verts.size() < b.verts.size();
  if (a.cut != b.cut) return a.cut < b.cut;
  return a.verts < b.verts;
}

class SetFinder {
 public:
  SetFinder(const BoundedGraph& g, std::span<const Vertex> w, const Threshold& th,
            const PartitionCaps& caps)
      : g_(g), w_(w.begin(), w.end()), th_(th), caps_(caps), half_(g.num_vertices() / 2),
        in_w_(g.num_vertices(), 0), mark_(g.num_vertices(), 0), cnt_(g.num_vertices(), 0) {
    for (Vertex v : w_) in_w_[v] = 1;
  }

  std::optional<LowConductanceSet> run() {
    if (half_ == 0) return std::nullopt;
    if (w_.size() <= caps_.exact_subset && w_.size() <= 64) {
      LocalView lv(g_, w_);
      auto mask = smallest_qualifying(lv, th_, half_);
      if (!mask) return std::nullopt;
      return finish(lv.expand(*mask), true);
    }
    if (auto small = small_connected()) return finish(small->verts, true);
    std::optional<Candidate> best;
    greedy(best);
    balls(best);
    components(best);
    if (!best) return std::nullopt;
    return reduce(std::move(best->verts));
  }

 private:
  LowConductanceSet finish(std::vector<Vertex> a, bool exact) {
    std::int64_t c = cut_size(g_, a, mark_);
    LowConductanceSet out;
    out.conductance = ratio(c, g_.degree_bound(), a.size());
    out.vertices = std::move(a);
    out.minimal_exact = exact;
    return out;
  }

  void offer(std::optional<Candidate>& best, std::vector<Vertex> verts) {
    if (verts.empty() || verts.size() > half_) return;
    std::sort(verts.begin(), verts.end());
    Candidate c{std::move(verts), 0};
    c.cut = cut_size(g_, c.verts, mark_);
    if (!th_.holds(c.cut, static_cast<std::int64_t>(c.verts.size()))) return;
    if (!best || better(c, *best)) best = std::move(c);
  }

  // Every connected set of size <= small_size inside W, smallest level first.
  std::optional<Candidate> small_connected() {
    std::set<std::vector<Vertex>> level;
    for (Vertex v : w_) level.insert({v});
    for (std::size_t s = 1; s <= caps_.small_size && s <= half_ && !level.empty(); ++s) {
      std::optional<Candidate> best;
      for (const auto& set : level) offer(best, set);
      if (best) return best;
      if (s == caps_.small_size) break;
      std::set<std::vector<Vertex>> next;
      for (const auto& set : level) {
        for (Vertex v : set) {
          for (Vertex u : g_.neighbors(v)) {
            if (!in_w_[u] || std::binary_search(set.begin(), set.end(), u)) continue;
            auto grown = set;
            grown.insert(std::upper_bound(grown.begin(), grown.end(), u), u);
            next.insert(std::move(grown));
          }
        }
      }
      level.swap(next);
    }
    return std::nullopt;
  }

  std::size_t size_cap(const std::optional<Candidate>& best) const {
    std::size_t cap = std::min(half_, w_.size());
    if (best) cap = std::min(cap, best->verts.size());
    return cap;
  }

  // Grow from each seed, adding the frontier vertex that raises the cut least.
  void greedy(std::optional<Candidate>& best) {
    std::vector<Vertex> set, frontier;
    for (Vertex seed : w_) {
      const std::size_t cap = size_cap(best);
      set.assign(1, seed);
      mark_[seed] = 1;
      frontier.clear();
      std::int64_t cut = static_cast<std::int64_t>(g_.degree(seed));
      auto touch = [&](Vertex v) {
        for (Vertex u : g_.neighbors(v)) {
          if (!in_w_[u] || mark_[u]) continue;
          if (cnt_[u]++ == 0) frontier.push_back(u);
        }
      };
      touch(seed);
      bool found = th_.holds(cut, 1);
      while (!found && set.size() < cap && !frontier.empty()) {
        std::size_t pick = 0;
        std::int64_t pick_gain = std::numeric_limits<std::int64_t>::max();
        for (std::size_t i = 0; i < frontier.size(); ++i) {
          Vertex u = frontier[i];
          std::int64_t gain = static_cast<std::int64_t>(g_.degree(u)) - 2 * cnt_[u];
          if (gain < pick_gain || (gain == pick_gain && u < frontier[pick])) {
            pick = i;
            pick_gain = gain;
          }
        }
        Vertex u = frontier[pick];
        frontier[pick] = frontier.back();
        frontier.pop_back();
        cnt_[u] = 0;
        mark_[u] = 1;
        set.push_back(u);
        cut += pick_gain;
        touch(u);
        found = th_.holds(cut, static_cast<std::int64_t>(set.size()));
      }
      for (Vertex u : frontier) cnt_[u] = 0;
      for (Vertex v : set) mark_[v] = 0;
      if (found) offer(best, set);
    }
  }

  // BFS balls of increasing radius inside W.
  void balls(std::optional<Candidate>& best) {
    std::vector<Vertex> ball;
    std::vector<char> seen(g_.num_vertices(), 0);
    for (Vertex seed : w_) {
      const std::size_t cap = size_cap(best);
      ball.assign(1, seed);
      seen[seed] = 1;
      std::size_t layer_start = 0;
      while (ball.size() <= cap) {
        offer(best, ball);
        std::size_t layer_end = ball.size();
        for (std::size_t i = layer_start; i < layer_end; ++i) {
          for (Vertex u : g_.neighbors(ball[i])) {
            if (in_w_[u] && !seen[u]) {
              seen[u] = 1;
              ball.push_back(u);
            }
          }
        }
        if (ball.size() == layer_end) break;
        layer_start = layer_end;
      }
      for (Vertex v : ball) seen[v] = 0;
    }
  }

  void components(std::optional<Candidate>& best) {
    std::vector<char> seen(g_.num_vertices(), 0);
    for (Vertex seed : w_) {
      if (seen[seed]) continue;
      std::vector<Vertex> comp{seed};
      seen[seed] = 1;
      for (std::size_t i = 0; i < comp.size(); ++i) {
        for (Vertex u : g_.neighbors(comp[i])) {
          if (in_w_[u] && !seen[u]) {
            seen[u] = 1;
            comp.push_back(u);
          }
        }
      }
      offer(best, std::move(comp));
    }
  }

  LowConductanceSet reduce(std::vector<Vertex> a) {
    while (a.size() > caps_.reduce_exact) {
      bool removed = false;
      for (std::size_t i = 0; i < a.size() && !removed; ++i) {
        std::vector<Vertex> rest = a;
        rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(i));
        if (th_.holds(cut_size(g_, rest, mark_), static_cast<std::int64_t>(rest.size()))) {
          a = std::move(rest);
          removed = true;
        }
      }
      if (!removed) return finish(std::move(a), false);
    }
    LocalView lv(g_, a);
    auto mask = smallest_qualifying(lv, th_, half_);
    return finish(lv.expand(*mask), true);
  }

  const BoundedGraph& g_;
  std::vector<Vertex> w_;
  Threshold th_;
  PartitionCaps caps_;
  std::size_t half_;
  std::vector<char> in_w_;
  std::vector<char> mark_;
  std::vector<std::int64_t> cnt_;
};

// Dense type ids for the radius-k disks of g.
std::vector<std::uint32_t> type_ids(const BoundedGraph& g, std::size_t k, std::size_t* count) {
  auto types = disk_types(g, k);
  std::vector<DiskType> uniq = types;
  std::sort(uniq.begin(), uniq.end());
  uniq.erase(std::unique(uniq.begin(), uniq.end()), uniq.end());
  std::vector<std::uint32_t> ids(types.size());
  for (std::size_t v = 0; v < types.size(); ++v) {
    ids[v] = static_cast<std::uint32_t>(std::lower_bound(uniq.begin(), uniq.end(), types[v]) -
                                        uniq.begin());
  }
  if (count) *count = uniq.size();
  return ids;
}

}  // namespace

Rational to_rational(double x) {
  if (!std::isfinite(x)) throw Error(ErrorCode::kInvalidParams, "non-finite value");
  return Rational(static_cast<std::int64_t>(std::llround(x * kScale)), kScale);
}

Rational conductance(const BoundedGraph& g, std::span<const Vertex> s) {
  auto set = sorted_set(g, s);
  if (set.empty()) throw Error(ErrorCode::kEmptySet, "conductance of the empty set");
  if (set.size() > g.num_vertices() / 2) {
    throw Error(ErrorCode::kTooLarge, "conductance needs |S| <= n/2");
  }
  std::vector<char> mark(g.num_vertices(), 0);
  return ratio(cut_size(g, set, mark), g.degree_bound(), set.size());
}

ExpansionResult graph_expansion(const BoundedGraph& g, std::size_t exact_cap, std::uint64_t seed) {
  const std::size_t n = g.num_vertices();
  if (n < 2) throw Error(ErrorCode::kInvalidSize, "expansion needs n >= 2");
  const std::size_t half = n / 2;
  ExpansionResult out;
  if (n <= exact_cap && n <= 30) {
    std::vector<Vertex> all(n);
    for (std::size_t i = 0; i < n; ++i) all[i] = static_cast<Vertex>(i);
    LocalView lv(g, all);
    const std::int64_t total = std::int64_t{1} << n;
    Mask best_mask = 0;
    std::int64_t best_cut = 0;
    // Order: cut/size, then size, then mask value.
    auto less = [](std::int64_t ca, Mask a, std::int64_t cb, Mask b) {
      std::int64_t sa = std::popcount(a), sb = std::popcount(b);
      if (ca * sb != cb * sa) return ca * sb < cb * sa;
      if (sa != sb) return sa < sb;
      return a < b;
    };
#pragma omp parallel
    {
      Mask local_mask = 0;
      std::int64_t local_cut = 0;
#pragma omp for schedule(static)
      for (std::int64_t m = 1; m < total; ++m) {
        Mask mask = static_cast<Mask>(m);
        if (static_cast<std::size_t>(std::popcount(mask)) > half) continue;
        std::int64_t c = lv.cut(mask);
        if (local_mask == 0 || less(c, mask, local_cut, local_mask)) {
          local_mask = mask;
          local_cut = c;
        }
      }
#pragma omp critical
      if (local_mask != 0 && (best_mask == 0 || less(local_cut, local_mask, best_cut, best_mask))) {
        best_mask = local_mask;
        best_cut = local_cut;
      }
    }
    out.value = ratio(best_cut, g.degree_bound(), std::popcount(best_mask));
    out.witness = lv.expand(best_mask);
    out.exact = true;
    return out;
  }
  // Heuristic: components, BFS balls and greedy growth from every vertex,
  // plus greedy growth from random seed pairs.
  std::vector<char> mark(n, 0);
  bool have = false;
  auto consider = [&](std::vector<Vertex> s) {
    if (s.empty() || s.size() > half) return;
    std::sort(s.begin(), s.end());
    Rational r = ratio(cut_size(g, s, mark), g.degree_bound(), s.size());
    if (!have || r < out.value || (r == out.value && s < out.witness)) {
      out.value = r;
      out.witness = std::move(s);
      have = true;
    }
  };
  auto comps = connected_components(g);
  for (std::uint32_t c = 0; c < comps.sizes.size(); ++c) {
    std::vector<Vertex> s;
    for (Vertex v = 0; v < n; ++v) {
      if (comps.label[v] == c) s.push_back(v);
    }
    consider(std::move(s));
  }
  Rng rng(seed);
  std::vector<std::int64_t> cnt(n, 0);
  auto grow = [&](std::vector<Vertex> set) {
    std::vector<Vertex> frontier;
    for (Vertex v : set) mark[v] = 1;
    for (Vertex v : set) {
      for (Vertex u : g.neighbors(v)) {
        if (!mark[u] && cnt[u]++ == 0) frontier.push_back(u);
      }
    }
    std::vector<Vertex> prefix = set;
    for (Vertex v : set) mark[v] = 0;
    consider(prefix);
    for (Vertex v : set) mark[v] = 1;
    while (set.size() < half && !frontier.empty()) {
      std::size_t pick = 0;
      std::int64_t pick_gain = std::numeric_limits<std::int64_t>::max();
      for (std::size_t i = 0; i < frontier.size(); ++i) {
        std::int64_t gain = static_cast<std::int64_t>(g.degree(frontier[i])) - 2 * cnt[frontier[i]];
        if (gain < pick_gain || (gain == pick_gain && frontier[i] < frontier[pick])) {
          pick = i;
          pick_gain = gain;
        }
      }
      Vertex u = frontier[pick];
      frontier[pick] = frontier.back();
      frontier.pop_back();
      cnt[u] = 0;
      mark[u] = 1;
      set.push_back(u);
      for (Vertex x : g.neighbors(u)) {
        if (!mark[x] && cnt[x]++ == 0) frontier.push_back(x);
      }
      for (Vertex v : set) mark[v] = 0;
      consider(set);
      for (Vertex v : set) mark[v] = 1;
    }
    for (Vertex u : frontier) cnt[u] = 0;
    for (Vertex v : set) mark[v] = 0;
  };
  for (Vertex v = 0; v < n; ++v) grow({v});
  for (std::size_t i = 0; i < std::min<std::size_t>(n, 64); ++i) {
    Vertex a = static_cast<Vertex>(uniform_below(rng, n));
    Vertex b = static_cast<Vertex>(uniform_below(rng, n));
    if (a != b) grow({a, b});
  }
  std::vector<Vertex> ball;
  std::vector<char> seen(n, 0);
  for (Vertex v = 0; v < n; ++v) {
    ball.assign(1, v);
    seen[v] = 1;
    std::size_t start = 0;
    while (ball.size() <= half) {
      consider(ball);
      std::size_t end = ball.size();
      for (std::size_t i = start; i < end; ++i) {
        for (Vertex u : g.neighbors(ball[i])) {
          if (!seen[u]) {
            seen[u] = 1;
            ball.push_back(u);
          }
        }
      }
      if (ball.size() == end) break;
      start = end;
    }
    for (Vertex u : ball) seen[u] = 0;
  }
  out.exact = false;
  return out;
}

std::optional<LowConductanceSet> find_min_low_conductance_set(const BoundedGraph& g,
                                                              std::span<const Vertex> w,
                                                              const Rational& delta,
                                                              const PartitionCaps& caps) {
  auto set = sorted_set(g, w);
  if (set.empty()) throw Error(ErrorCode::kEmptySet, "W is empty");
  if (delta < Rational(0)) throw Error(ErrorCode::kInvalidParams, "delta must be >= 0");
  SetFinder finder(g, set, threshold(delta, g.degree_bound()), caps);
  return finder.run();
}

Partition partition_graph(const BoundedGraph& g, std::size_t k, double delta,
                          const PartitionCaps& caps) {
  if (!(delta > 0.0 && delta <= 1.0)) {
    throw Error(ErrorCode::kInvalidParams, "delta must lie in (0, 1]");
  }
  const std::size_t n = g.num_vertices();
  Partition p;
  p.k = k;
  p.delta = to_rational(delta);
  if (p.delta == Rational(0)) throw Error(ErrorCode::kInvalidParams, "delta rounds to zero");
  const Threshold th = threshold(p.delta, g.degree_bound());

  std::vector<char> in_w(n, 1);
  std::vector<Vertex> w(n);
  for (std::size_t v = 0; v < n; ++v) w[v] = static_cast<Vertex>(v);
  while (!w.empty()) {
    auto found = find_min_low_conductance_set(g, w, p.delta, caps);
    if (!found) break;
    const auto& a = found->vertices;
    for (Vertex v : a) in_w[v] = 0;
    std::int64_t moved = 0;
    for (Vertex v : a) {
      for (Vertex u : g.neighbors(v)) {
        if (in_w[u]) {
          in_w[u] = 0;
          p.separator.push_back(u);
          ++moved;
        }
      }
    }
    if (!th.holds(moved, static_cast<std::int64_t>(a.size()))) {
      throw std::logic_error("separator growth exceeds delta*d*|A|");
    }
    p.atoms.push_back(a);
    p.atom_exact.push_back(found->minimal_exact ? 1 : 0);
    std::erase_if(w, [&](Vertex v) { return !in_w[v]; });
  }
  if (!w.empty()) {
    p.atoms.push_back(w);
    p.atom_exact.push_back(1);
    p.residual_atom = true;
  }
  std::sort(p.separator.begin(), p.separator.end());

  auto ids = type_ids(g, k, &p.active_types);
  const std::int64_t m = static_cast<std::int64_t>(p.active_types);
  std::map<std::vector<std::int64_t>, std::size_t> cell_class;
  for (const auto& a : p.atoms) {
    std::vector<std::int64_t> counts(p.active_types, 0);
    for (Vertex v : a) ++counts[ids[v]];
    // floor(freq / (delta / m)) per active type.
    std::vector<std::int64_t> cell(p.active_types);
    const std::int64_t size = static_cast<std::int64_t>(a.size());
    for (std::size_t t = 0; t < counts.size(); ++t) {
      cell[t] = counts[t] * m * p.delta.denominator() / (size * p.delta.numerator());
    }
    auto [it, fresh] = cell_class.try_emplace(cell, p.classes.size());
    if (fresh) p.classes.emplace_back();
    p.class_of_atom.push_back(it->second);
    auto& cls = p.classes[it->second];
    cls.insert(cls.end(), a.begin(), a.end());
  }
  for (auto& cls : p.classes) std::sort(cls.begin(), cls.end());
  p.occupied_cells = cell_class.size();
  return p;
}

namespace {

struct ClassData {
  std::size_t index = 0;
  std::vector<Vertex> verts;
  std::vector<std::int64_t> counts;  // per type id
};

class XChecker {
 public:
  XChecker(const BoundedGraph& g, const Partition& p, std::vector<std::uint32_t> ids,
           std::size_t types)
      : g_(g), p_(p), ids_(std::move(ids)), types_(types), half_(g.num_vertices() / 2) {
    const std::int64_t num = p.delta.numerator(), den = p.delta.denominator();
    d2_num_ = num * num;
    d2_den_ = den * den;
  }

  struct Scratch {
    std::vector<char> mark;
    std::vector<std::int64_t> counts;
  };

  Scratch scratch() const {
    return {std::vector<char>(g_.num_vertices(), 0), std::vector<std::int64_t>(types_, 0)};
  }

  // Appends a row when X is relevant; returns true on a violation.
  bool check(const ClassData& c, std::span<const Vertex> x, Scratch& s,
             std::vector<XRow>& rows, std::vector<Violation>& violations) const {
    const std::int64_t size = static_cast<std::int64_t>(x.size());
    const std::int64_t cut = cut_size(g_, x, s.mark);
    const std::int64_t d = static_cast<std::int64_t>(g_.degree_bound());
    if (cut * d2_den_ > d2_num_ * d * size) return false;
    for (Vertex v : x) ++s.counts[ids_[v]];
    const std::int64_t cs = static_cast<std::int64_t>(c.verts.size());
    std::int64_t diff = 0;
    for (std::size_t t = 0; t < types_; ++t) {
      diff += std::abs(s.counts[t] * cs - c.counts[t] * size);
    }
    for (Vertex v : x) s.counts[ids_[v]] = 0;
    XRow row;
    row.cls = c.index;
    row.size = x.size();
    row.conductance = ratio(cut, g_.degree_bound(), x.size());
    row.distance = Rational(diff, size * cs);
    row.violation = diff * p_.delta.denominator() > 3 * p_.delta.numerator() * size * cs;
    if (row.violation) {
      violations.push_back({c.index, std::vector<Vertex>(x.begin(), x.end()), row.conductance,
                            row.distance});
    }
    rows.push_back(std::move(row));
    return rows.back().violation;
  }

  std::size_t half() const { return half_; }

 private:
  const BoundedGraph& g_;
  const Partition& p_;
  std::vector<std::uint32_t> ids_;
  std::size_t types_;
  std::size_t half_;
  std::int64_t d2_num_ = 0;
  std::int64_t d2_den_ = 1;
};

std::vector<std::vector<Vertex>> adversarial_candidates(const BoundedGraph& g, const Partition& p,
                                                        const ClassData& c, std::size_t budget,
                                                        std::size_t half, Rng& rng) {
  const std::size_t n = g.num_vertices();
  std::vector<std::vector<Vertex>> atoms;
  for (std::size_t j = 0; j < p.atoms.size(); ++j) {
    if (p.class_of_atom[j] == c.index) atoms.push_back(p.atoms[j]);
  }
  std::vector<char> in_class(n, 0);
  for (Vertex v : c.verts) in_class[v] = 1;
  std::vector<std::vector<Vertex>> comps;
  {
    std::vector<char> seen(n, 0);
    for (Vertex s : c.verts) {
      if (seen[s]) continue;
      std::vector<Vertex> comp{s};
      seen[s] = 1;
      for (std::size_t i = 0; i < comp.size(); ++i) {
        for (Vertex u : g.neighbors(comp[i])) {
          if (in_class[u] && !seen[u]) {
            seen[u] = 1;
            comp.push_back(u);
          }
        }
      }
      std::sort(comp.begin(), comp.end());
      comps.push_back(std::move(comp));
    }
  }
  std::vector<char> mark(n, 0);
  auto interior = [&](const std::vector<Vertex>& s, double keep_boundary) {
    for (Vertex v : s) mark[v] = 1;
    std::vector<Vertex> out;
    for (Vertex v : s) {
      bool boundary = false;
      for (Vertex u : g.neighbors(v)) boundary |= !mark[u];
      if (!boundary || (keep_boundary > 0.0 &&
                        std::uniform_real_distribution<double>(0.0, 1.0)(rng) < keep_boundary)) {
        out.push_back(v);
      }
    }
    for (Vertex v : s) mark[v] = 0;
    return out;
  };
  auto coin = [&] { return (rng() & 1) != 0; };
  auto unite = [&](const std::vector<std::vector<Vertex>>& parts) {
    std::vector<Vertex> out;
    for (const auto& part : parts) {
      if (coin()) out.insert(out.end(), part.begin(), part.end());
    }
    std::sort(out.begin(), out.end());
    return out;
  };

  std::vector<std::vector<Vertex>> out;
  auto push = [&](std::vector<Vertex> x) {
    if (!x.empty() && x.size() <= half) out.push_back(std::move(x));
  };
  push(c.verts);
  for (const auto& a : atoms) {
    push(a);
    push(interior(a, 0.0));
  }
  for (const auto& comp : comps) {
    push(comp);
    push(interior(comp, 0.0));
  }
  std::vector<char> seen(n, 0);
  const std::size_t attempts = 50 * budget + 100;
  for (std::size_t it = 0; it < attempts && out.size() < budget; ++it) {
    switch (it % 5) {
      case 0:
        push(unite(atoms));
        break;
      case 1:
        push(unite(comps));
        break;
      case 2:
        push(interior(unite(atoms), 0.5));
        break;
      case 3: {
        Vertex s = c.verts[uniform_below(rng, c.verts.size())];
        std::size_t limit = 1 + uniform_below(rng, std::min(half, c.verts.size()));
        std::vector<Vertex> ball{s};
        seen[s] = 1;
        for (std::size_t i = 0; i < ball.size() && ball.size() < limit; ++i) {
          for (Vertex u : g.neighbors(ball[i])) {
            if (in_class[u] && !seen[u] && ball.size() < limit) {
              seen[u] = 1;
              ball.push_back(u);
            }
          }
        }
        for (Vertex v : ball) seen[v] = 0;
        std::sort(ball.begin(), ball.end());
        push(std::move(ball));
        break;
      }
      default: {
        double keep = std::uniform_real_distribution<double>(0.0, 1.0)(rng);
        std::vector<Vertex> x;
        for (Vertex v : c.verts) {
          if (std::uniform_real_distribution<double>(0.0, 1.0)(rng) < keep) x.push_back(v);
        }
        push(std::move(x));
      }
    }
  }
  return out;
}

PartitionReport verify_impl(const BoundedGraph& g, const Partition& p, const XBudget& budget,
                            std::uint64_t seed, bool parallel) {
  const std::size_t n = g.num_vertices();
  PartitionReport r;
  std::vector<std::int64_t> label(n, -2);
  bool cover = true;
  for (std::size_t i = 0; i < p.classes.size(); ++i) {
    for (Vertex v : p.classes[i]) {
      if (v >= n || label[v] != -2) {
        cover = false;
        continue;
      }
      label[v] = static_cast<std::int64_t>(i);
    }
  }
  for (Vertex v : p.separator) {
    if (v >= n || label[v] != -2) {
      cover = false;
      continue;
    }
    label[v] = -1;
  }
  for (std::size_t v = 0; v < n; ++v) cover &= label[v] != -2;
  r.disjoint_cover = cover;

  r.no_cross_edges = true;
  for (const Edge& e : g.edges()) {
    if (label[e.u] >= 0 && label[e.v] >= 0 && label[e.u] != label[e.v]) r.no_cross_edges = false;
  }
  const std::int64_t t = static_cast<std::int64_t>(p.separator.size());
  r.separator_small = t * p.delta.denominator() <=
                      p.delta.numerator() * static_cast<std::int64_t>(g.degree_bound() * n);

  r.atoms_tile_classes = p.class_of_atom.size() == p.atoms.size();
  if (r.atoms_tile_classes) {
    std::vector<std::vector<Vertex>> tiled(p.classes.size());
    for (std::size_t j = 0; j < p.atoms.size(); ++j) {
      if (p.class_of_atom[j] >= p.classes.size()) {
        r.atoms_tile_classes = false;
        break;
      }
      auto& cls = tiled[p.class_of_atom[j]];
      cls.insert(cls.end(), p.atoms[j].begin(), p.atoms[j].end());
    }
    for (std::size_t i = 0; r.atoms_tile_classes && i < tiled.size(); ++i) {
      std::sort(tiled[i].begin(), tiled[i].end());
      r.atoms_tile_classes = tiled[i] == p.classes[i];
    }
  }
  if (!cover) return r;

  std::size_t types = 0;
  auto ids = type_ids(g, p.k, &types);
  XChecker checker(g, p, ids, types);
  const std::size_t half = checker.half();

  for (std::size_t i = 0; i < p.classes.size(); ++i) {
    ClassData c{i, p.classes[i], std::vector<std::int64_t>(types, 0)};
    for (Vertex v : c.verts) ++c.counts[ids[v]];
    std::vector<XRow> rows;
    std::vector<Violation> violations;
    std::size_t examined = 0;
    if (c.verts.size() <= budget.exhaustive && c.verts.size() < 63) {
      const std::int64_t total = std::int64_t{1} << c.verts.size();
#pragma omp parallel reduction(+ : examined) if (parallel)
      {
        auto s = checker.scratch();
        std::vector<XRow> lrows;
        std::vector<Violation> lviol;
        std::vector<Vertex> x;
#pragma omp for schedule(static)
        for (std::int64_t m = 1; m < total; ++m) {
          Mask mask = static_cast<Mask>(m);
          if (static_cast<std::size_t>(std::popcount(mask)) > half) continue;
          x.clear();
          for (Mask b = mask; b; b &= b - 1) x.push_back(c.verts[std::countr_zero(b)]);
          ++examined;
          checker.check(c, x, s, lrows, lviol);
        }
#pragma omp critical
        {
          rows.insert(rows.end(), lrows.begin(), lrows.end());
          violations.insert(violations.end(), lviol.begin(), lviol.end());
        }
      }
    } else {
      Rng rng(stream_seed(seed, i));
      auto xs = adversarial_candidates(g, p, c, budget.samples, half, rng);
      examined = xs.size();
      const std::int64_t count = static_cast<std::int64_t>(xs.size());
#pragma omp parallel if (parallel)
      {
        auto s = checker.scratch();
        std::vector<XRow> lrows;
        std::vector<Violation> lviol;
#pragma omp for schedule(static)
        for (std::int64_t j = 0; j < count; ++j) checker.check(c, xs[j], s, lrows, lviol);
#pragma omp critical
        {
          rows.insert(rows.end(), lrows.begin(), lrows.end());
          violations.insert(violations.end(), lviol.begin(), lviol.end());
        }
      }
    }
    r.candidates += examined;
    r.rows.insert(r.rows.end(), rows.begin(), rows.end());
    r.violations.insert(r.violations.end(), violations.begin(), violations.end());
  }
  std::sort(r.rows.begin(), r.rows.end(), [](const XRow& a, const XRow& b) {
    if (a.cls != b.cls) return a.cls < b.cls;
    if (a.size != b.size) return a.size < b.size;
    if (a.conductance != b.conductance) return a.conductance < b.conductance;
    return a.distance < b.distance;
  });
  std::sort(r.violations.begin(), r.violations.end(), [](const Violation& a, const Violation& b) {
    if (a.cls != b.cls) return a.cls < b.cls;
    return a.subset < b.subset;
  });
  r.relevant = r.rows.size();
  for (const auto& row : r.rows) r.max_distance = std::max(r.max_distance, to_double(row.distance));
  return r;
}

}  // namespace

PartitionReport verify_partition(const BoundedGraph& g, const Partition& p,
                                 const XBudget& budget, std::uint64_t seed) {
  return verify_impl(g, p, budget, seed, true);
}

namespace serial {

PartitionReport verify_partition(const BoundedGraph& g, const Partition& p,
                                 const XBudget& budget, std::uint64_t seed) {
  return verify_impl(g, p, budget, seed, false);
}

}  // namespace serial

std::string to_csv(const PartitionReport& r) {
  std::ostringstream os;
  os << "class,subset_size,conductance,l1_distance,violation_flag\n";
  for (const auto& row : r.rows) {
    os << row.cls << ',' << row.size << ',' << row.conductance.numerator() << '/'
       << row.conductance.denominator() << ',' << row.distance.numerator() << '/'
       << row.distance.denominator() << ',' << (row.violation ? 1 : 0) << '\n';
  }
  return os.str();
}

}  // namespace disklab
