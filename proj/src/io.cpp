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

#include "disklab/io.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>
#include <string>
#include <system_error>
#include <vector>

#include "disklab/error.hpp"

namespace disklab {
namespace {

[[noreturn]] void fail(std::size_t line, const std::string& what) {
  throw Error(ErrorCode::kParseError, "line " + std::to_string(line) + ": " + what);
}

// Two non-negative integers and nothing else.
bool parse_pair(const std::string& text, unsigned long long& a, unsigned long long& b) {
  std::istringstream ss(text);
  std::string x, y, extra;
  if (!(ss >> x >> y) || (ss >> extra)) return false;
  auto parse = [](const std::string& s, unsigned long long& out) {
    if (s.empty() || !std::all_of(s.begin(), s.end(), ::isdigit)) return false;
    try {
      out = std::stoull(s);
    } catch (const std::exception&) {
      return false;
    }
    return true;
  };
  return parse(x, a) && parse(y, b);
}

}  // namespace

BoundedGraph read_edge_list(std::istream& in) {
  std::string raw;
  std::size_t line_no = 0;
  bool have_header = false;
  std::size_t n = 0, d = 0;
  std::vector<Edge> edges;
  std::set<Edge> seen;
  std::vector<std::size_t> degree;
  while (std::getline(in, raw)) {
    ++line_no;
    if (!raw.empty() && raw.back() == '\r') fail(line_no, "CR line ending (expected LF)");
    const std::string text = raw.substr(0, raw.find('#'));
    if (text.find_first_not_of(" \t") == std::string::npos) continue;
    unsigned long long a = 0, b = 0;
    if (!parse_pair(text, a, b)) fail(line_no, "expected two non-negative integers");
    if (!have_header) {
      if (b < 1) fail(line_no, "degree bound must be >= 1");
      n = a;
      d = b;
      degree.assign(n, 0);
      have_header = true;
      continue;
    }
    if (a >= n || b >= n) fail(line_no, "vertex out of range [0," + std::to_string(n) + ")");
    if (a == b) fail(line_no, "self-loop at vertex " + std::to_string(a));
    const Edge e = make_edge(static_cast<Vertex>(a), static_cast<Vertex>(b));
    if (!seen.insert(e).second) {
      fail(line_no, "duplicate edge (" + std::to_string(e.u) + "," + std::to_string(e.v) + ")");
    }
    for (Vertex x : {e.u, e.v}) {
      if (++degree[x] > d) {
        fail(line_no, "vertex " + std::to_string(x) + " exceeds degree bound " + std::to_string(d));
      }
    }
    edges.push_back(e);
  }
  if (!have_header) fail(line_no, "missing header line \"n d\"");
  return BoundedGraph::build(n, d, edges);
}

BoundedGraph read_edge_list_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kParseError, "cannot open " + path.string());
  try {
    return read_edge_list(in);
  } catch (const Error& e) {
    throw Error(e.code(), path.string() + ": " + e.what());
  }
}

void write_edge_list(std::ostream& out, const BoundedGraph& g) {
  out << g.num_vertices() << ' ' << g.degree_bound() << '\n';
  for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
}

std::string to_edge_list(const BoundedGraph& g) {
  std::ostringstream out;
  write_edge_list(out, g);
  return out.str();
}

void write_file_atomic(const std::filesystem::path& path, const std::string& contents) {
  std::filesystem::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error(ErrorCode::kParseError, "cannot write " + tmp.string());
    out << contents;
    if (!out.flush()) throw Error(ErrorCode::kParseError, "write failed for " + tmp.string());
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    std::filesystem::remove(tmp, ec);
    throw Error(ErrorCode::kParseError, "cannot rename into " + path.string());
  }
}

}  // namespace disklab
