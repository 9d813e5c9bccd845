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

// Command-line front end. Every subcommand validates its inputs, computes
// the whole report in memory and only then writes it (atomically when --out
// is given). Exit status: 0 ok, 1 domain error (JSON on stderr), 2 usage.

#include <omp.h>

#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "disklab/canonical.hpp"
#include "disklab/error.hpp"
#include "disklab/frequency.hpp"
#include "disklab/generators.hpp"
#include "disklab/hyperfinite.hpp"
#include "disklab/incompat.hpp"
#include "disklab/io.hpp"
#include "disklab/kdisk.hpp"
#include "disklab/partition.hpp"
#include "disklab/property.hpp"
#include "disklab/rng.hpp"
#include "disklab/testers.hpp"
#include "json.hpp"

namespace {

using disklab::BoundedGraph;
using disklab::Rational;
using Json = nlohmann::ordered_json;

constexpr const char* kTool = "disklab";
constexpr const char* kVersion = "0.1.0";

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::string hex64(std::uint64_t x) {
  std::ostringstream os;
  os << std::hex;
  os.width(16);
  os.fill('0');
  os << x;
  return os.str();
}

std::string fraction(const Rational& r) {
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

Json graph_json(const BoundedGraph& g) {
  Json edges = Json::array();
  for (const auto& e : g.edges()) edges.push_back({e.u, e.v});
  return {{"n", g.num_vertices()}, {"d", g.degree_bound()}, {"edges", edges}};
}

Json sets_json(const std::vector<std::vector<disklab::Vertex>>& sets) {
  Json out = Json::array();
  for (const auto& s : sets) out.push_back(s);
  return out;
}

// Options shared by every subcommand.
struct Common {
  std::uint64_t seed = 0;
  std::string out;
  std::string format = "json";
  int jobs = 0;
};

struct Context {
  CLI::App* sub = nullptr;
  Common* common = nullptr;

  std::string header_line() const {
    return std::string("# tool=") + kTool + " version=" + kVersion +
           " seed=" + std::to_string(common->seed) + " config_hash=" + config_hash();
  }

  // Sorted JSON of the effective settings; --out and --jobs do not change
  // the report, so they are left out.
  std::string config_hash() const {
    nlohmann::json config = nlohmann::json::object();
    std::istringstream lines(sub->config_to_str(true, false));
    std::string line;
    while (std::getline(lines, line)) {
      const auto eq = line.find('=');
      if (eq == std::string::npos) continue;
      const std::string key = line.substr(0, eq);
      if (key == "out" || key == "jobs" || key == "seed") continue;
      config[key] = line.substr(eq + 1);
    }
    config["command"] = sub->get_name();
    config["seed"] = common->seed;
    return hex64(fnv1a(config.dump()));
  }

  Json header() const {
    return {{"tool", kTool},
            {"version", kVersion},
            {"command", sub->get_name()},
            {"seed", common->seed},
            {"config_hash", config_hash()}};
  }

  void emit(const std::string& text) const {
    if (common->out.empty()) {
      std::cout << text;
    } else {
      disklab::write_file_atomic(common->out, text);
    }
  }

  void emit_json(Json result) const {
    Json doc;
    doc["header"] = header();
    doc["result"] = std::move(result);
    emit(doc.dump(2) + "\n");
  }

  void emit_csv(const std::string& body) const { emit(header_line() + "\n" + body); }

  bool csv() const {
    if (common->format != "json" && common->format != "csv") {
      throw UsageError("--format must be json or csv");
    }
    return common->format == "csv";
  }

  void json_only() const {
    if (csv()) throw UsageError(sub->get_name() + " has no csv output");
  }
};

BoundedGraph load(const std::string& path) { return disklab::read_edge_list_file(path); }

disklab::PropertySet property_by_name(const std::string& name, std::size_t n, std::size_t d) {
  if (name == "triangles") return disklab::unions_of_triangles(n, std::max<std::size_t>(d, 2));
  if (name == "pi") return disklab::pi_property(n, d);
  throw UsageError("unknown property '" + name + "' (triangles, pi)");
}

std::vector<double> parse_list(const std::string& text, const std::string& flag) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    try {
      std::size_t used = 0;
      out.push_back(std::stod(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw UsageError(flag + ": bad number '" + item + "'");
    }
  }
  if (out.empty()) throw UsageError(flag + ": empty range");
  return out;
}

// ---------------------------------------------------------------------------

struct Args {
  std::string graph;
  std::string other;
  std::size_t k = 1;
  double delta = 0.1;
  double eps = 0.1;
  std::size_t t = 1;
  std::size_t trials = 100;
  std::size_t cap = 16;
  std::size_t samples = 100;
  std::size_t s = 3;
  std::size_t d = 3;
  std::size_t n = 0;
  std::size_t max_iters = 64;
  std::size_t k_max = 3;
  bool verify = false;
  bool exact = false;
  std::string a, b;
  std::string property = "triangles";
  std::string tester = "separated-pair";
  std::string mode = "exact";
  std::string h;
  std::vector<std::string> corpus;
  std::string eps_list;
  std::string trials_list;
  // generate
  std::string family = "cycle";
  std::size_t deg = 3;
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::size_t clique_size = 3;
  std::string core = "cycle";
};

void cmd_freq(const Context& ctx, const Args& a) {
  auto g = load(a.graph);
  auto f = disklab::frequency_vector(g, a.k);
  if (ctx.csv()) return ctx.emit_csv(disklab::to_csv(f));
  Json types = Json::array();
  for (const auto& [type, count] : f.counts) {
    types.push_back({{"type", type.hex()},
                     {"vertices", type.num_vertices},
                     {"count", count},
                     {"fraction", f.fraction(type)}});
  }
  ctx.emit_json({{"n", g.num_vertices()}, {"k", a.k}, {"support", f.support_size()}, {"types", types}});
}

void cmd_dist(const Context& ctx, const Args& a) {
  ctx.json_only();
  auto g = load(a.graph);
  auto h = load(a.other);
  auto l1 = disklab::l1_distance_exact(disklab::frequency_vector(g, a.k),
                                       disklab::frequency_vector(h, a.k));
  ctx.emit_json({{"k", a.k},
                 {"l1", fraction(l1)},
                 {"l1_value", disklab::to_double(l1)},
                 {"tv", disklab::to_double(l1) / 2}});
}

void cmd_disks(const Context& ctx, const Args& a) {
  auto g = load(a.graph);
  auto types = disklab::disk_types(g, a.k);
  if (ctx.csv()) {
    std::string body = "vertex,type\n";
    for (std::size_t v = 0; v < types.size(); ++v) {
      body += std::to_string(v) + "," + types[v].hex() + "\n";
    }
    return ctx.emit_csv(body);
  }
  Json list = Json::array();
  for (const auto& t : types) list.push_back(t.hex());
  ctx.emit_json({{"k", a.k}, {"disks", list}});
}

void cmd_incompat(const Context& ctx, const Args& a) {
  ctx.json_only();
  auto ta = disklab::DiskType::from_hex(a.a, a.d);
  auto tb = disklab::DiskType::from_hex(a.b, a.d);
  auto r = disklab::check_compatibility(ta, tb, a.d, a.cap);
  Json out = {{"incompatible", r.incompatible}, {"candidates_checked", r.candidates_checked}};
  if (r.witness) {
    out["witness"] = {{"graph", graph_json(r.witness->graph)},
                      {"u1", r.witness->u1},
                      {"u2", r.witness->u2}};
  }
  ctx.emit_json(out);
}

void cmd_generate(const Context& ctx, const Args& a) {
  disklab::GenParams p;
  p.n = a.n;
  p.d = a.d;
  p.deg = a.deg;
  p.rows = a.rows;
  p.cols = a.cols;
  p.clique_size = a.clique_size;
  p.core = disklab::parse_core_kind(a.core);
  auto g = disklab::generate(disklab::parse_family(a.family), p, ctx.common->seed);
  ctx.emit(disklab::to_edge_list(g));
}

void cmd_test_pi(const Context& ctx, const Args& a) {
  ctx.json_only();
  auto g = load(a.graph);
  auto est = disklab::estimate_acceptance(disklab::pi_tester_fn(a.eps), g, a.trials,
                                          ctx.common->seed);
  ctx.emit_json({{"eps", a.eps},
                 {"trials", est.trials},
                 {"accepts", est.accepts},
                 {"accept_rate", est.rate},
                 {"mean_queries", est.mean_queries},
                 {"max_queries", est.max_queries},
                 {"query_budget", disklab::pi_query_budget(g.degree_bound(), a.eps)},
                 {"member", disklab::is_pi_member(g)}});
}

void cmd_repair(const Context& ctx, const Args& a) {
  ctx.json_only();
  auto g = load(a.graph);
  auto stats = disklab::pi_claim_stats(g, a.eps);
  auto script = disklab::repair_to_pi(g, a.eps);
  auto fixed = disklab::apply_edits(g, script);
  const std::size_t bound = disklab::far_radius(a.eps, g.degree_bound(), g.num_vertices());
  ctx.emit_json({{"eps", a.eps},
                 {"edits", script.size()},
                 {"bound", bound},
                 {"within_bound", script.size() <= bound},
                 {"claim_hypotheses", stats.hypotheses_hold()},
                 {"member", disklab::is_pi_member(fixed)},
                 {"graph", graph_json(fixed)}});
}

disklab::Tester base_tester(const Args& a) {
  if (a.tester == "separated-pair") return disklab::separated_pair_tester(1);
  if (a.tester == "reject-isolated") return disklab::reject_if_isolated_tester(a.t);
  if (a.tester == "pi") return disklab::pi_tester_fn(a.eps);
  throw UsageError("unknown tester '" + a.tester + "' (separated-pair, reject-isolated, pi)");
}

void cmd_canonical(const Context& ctx, const Args& a) {
  ctx.json_only();
  if (a.corpus.empty()) throw UsageError("--corpus needs at least one graph");
  std::vector<BoundedGraph> corpus;
  for (const auto& path : a.corpus) corpus.push_back(load(path));
  auto tester = base_tester(a);
  auto table = a.exact ? disklab::canonicalize_tester_exact(tester, corpus, a.t)
                       : disklab::canonicalize_tester(tester, corpus, a.t, a.trials,
                                                      ctx.common->seed);
  Json entries = Json::array();
  for (const auto& [key, e] : table.entries) {
    Json hexes = Json::array();
    for (const auto& code : key) {
      disklab::DiskType type;
      type.code = code;
      hexes.push_back(type.hex());
    }
    entries.push_back({{"key", hexes},
                       {"accepts", e.accepts},
                       {"total", e.total},
                       {"probability", e.probability()},
                       {"decision", table.accepts(key) ? "accept" : "reject"}});
  }
  ctx.emit_json({{"t", table.t}, {"n", table.n}, {"mode", a.exact ? "exact" : "monte-carlo"},
                 {"entries", entries}});
}

void cmd_net_test(const Context& ctx, const Args& a) {
  ctx.json_only();
  auto g = load(a.graph);
  auto p = property_by_name(a.property, g.num_vertices(), g.degree_bound());
  disklab::NetTester net(p, disklab::far_set(p, a.eps), a.t, a.samples);
  auto est = disklab::estimate_acceptance(net.as_tester(), g, a.trials, ctx.common->seed);
  ctx.emit_json({{"property", p.name},
                 {"eps", a.eps},
                 {"t", a.t},
                 {"samples", a.samples},
                 {"trials", est.trials},
                 {"accept_rate", est.rate},
                 {"far_graphs", net.far_vectors().size()}});
}

void cmd_partition(const Context& ctx, const Args& a) {
  auto g = load(a.graph);
  auto p = disklab::partition_graph(g, a.k, a.delta);
  std::optional<disklab::PartitionReport> report;
  if (a.verify) report = disklab::verify_partition(g, p, {16, a.samples}, ctx.common->seed);
  if (ctx.csv()) {
    if (!report) throw UsageError("csv output needs --verify");
    return ctx.emit_csv(disklab::to_csv(*report));
  }
  Json out = {{"params", {{"k", p.k}, {"delta", a.delta}, {"delta_exact", fraction(p.delta)}}},
              {"classes", sets_json(p.classes)},
              {"separator", p.separator},
              {"atoms", sets_json(p.atoms)},
              {"class_of_atom", p.class_of_atom},
              {"residual_atom", p.residual_atom},
              {"active_types", p.active_types},
              {"occupied_cells", p.occupied_cells}};
  if (report) {
    out["verification"] = {{"ok", report->ok()},
                           {"disjoint_cover", report->disjoint_cover},
                           {"no_cross_edges", report->no_cross_edges},
                           {"separator_small", report->separator_small},
                           {"atoms_tile_classes", report->atoms_tile_classes},
                           {"candidates", report->candidates},
                           {"relevant", report->relevant},
                           {"violations", report->violations.size()},
                           {"max_distance", report->max_distance}};
  }
  ctx.emit_json(out);
}

disklab::HyperMode parse_mode(const std::string& mode) {
  if (mode == "exact") return disklab::HyperMode::kExact;
  if (mode == "heuristic") return disklab::HyperMode::kHeuristic;
  throw UsageError("--mode must be exact or heuristic");
}

Json decomposition_json(const disklab::Decomposition& dec) {
  Json removed = Json::array();
  for (const auto& e : dec.removed_edges) removed.push_back({e.u, e.v});
  return {{"removed_edges", removed},
          {"component_sizes", dec.component_sizes},
          {"eps_used", dec.eps_used},
          {"size_bound", dec.size_bound}};
}

void cmd_hyperfinite(const Context& ctx, const Args& a) {
  ctx.json_only();
  auto g = load(a.graph);
  auto r = disklab::check_hyperfinite(g, a.eps, a.s, parse_mode(a.mode));
  Json out = {{"eps", a.eps},
              {"s", a.s},
              {"mode", a.mode},
              {"budget", disklab::removal_budget(a.eps, g.degree_bound(), g.num_vertices())},
              {"hyperfinite", r.hyperfinite()},
              {"proven", r.proven}};
  if (r.min_removals) out["min_removals"] = *r.min_removals;
  if (r.decomposition) out["decomposition"] = decomposition_json(*r.decomposition);
  ctx.emit_json(out);
}

void cmd_dfp(const Context& ctx, const Args& a) {
  ctx.json_only();
  auto g = load(a.graph);
  auto r = disklab::dfp_search(g, a.k, a.cap);
  ctx.emit_json({{"k", a.k},
                 {"cap", a.cap},
                 {"distance", fraction(r.distance)},
                 {"distance_value", disklab::to_double(r.distance)},
                 {"below_delta", disklab::to_double(r.distance) < a.delta},
                 {"h", graph_json(r.graph)}});
}

void cmd_blowup(const Context& ctx, const Args& a) {
  ctx.json_only();
  auto g = load(a.graph);
  BoundedGraph h;
  Rational dfp_distance(0);
  if (a.h.empty()) {
    auto r = disklab::dfp_search(g, a.k, a.cap);
    h = r.graph;
    dfp_distance = r.distance;
  } else {
    h = load(a.h);
    dfp_distance = disklab::l1_distance_exact(disklab::frequency_vector(g, a.k),
                                              disklab::frequency_vector(h, a.k));
  }
  const std::size_t n = a.n == 0 ? g.num_vertices() : a.n;
  auto big = disklab::blow_up(g, h, n);
  auto dist = disklab::l1_distance_exact(disklab::frequency_vector(g, a.k),
                                         disklab::frequency_vector(big, a.k));
  ctx.emit_json({{"k", a.k},
                 {"h", graph_json(h)},
                 {"n", n},
                 {"h_distance", fraction(dfp_distance)},
                 {"distance", fraction(dist)},
                 {"distance_value", disklab::to_double(dist)},
                 {"graph", graph_json(big)}});
}

void cmd_pipeline(const Context& ctx, const Args& a) {
  auto g = load(a.graph);
  auto p = property_by_name(a.property, g.num_vertices(), g.degree_bound());
  disklab::PipelineConfig cfg;
  cfg.max_iters = a.max_iters;
  cfg.k_max = a.k_max;
  cfg.step.size_bound = a.s;
  auto r = disklab::construct_sequence(g, p, cfg);
  if (r.stuck_at) {
    throw disklab::Error(disklab::ErrorCode::kSearchCapExceeded,
                         "pipeline stuck at iteration " + std::to_string(*r.stuck_at) + " after " +
                             std::to_string(r.states.size()) + " completed iterations");
  }
  auto check = disklab::check_pipeline(g, r, cfg);
  if (ctx.csv()) return ctx.emit_csv(disklab::pipeline_csv(r));
  Json states = Json::array();
  for (const auto& st : r.states) {
    states.push_back({{"i", st.i},
                      {"eps", st.eps},
                      {"delta", st.delta},
                      {"k", st.k},
                      {"k_theoretical", st.k_theoretical},
                      {"s", st.s},
                      {"eps_prime", st.eps_prime},
                      {"delta_prime", st.delta_prime},
                      {"k_prime", st.k_prime},
                      {"drift", fraction(st.drift)},
                      {"decomposition", decomposition_json(st.decomposition)}});
  }
  ctx.emit_json({{"property", p.name},
                 {"iterations", r.states.size()},
                 {"expected_iterations",
                  disklab::expected_iterations(0.1, g.degree_bound(), g.num_vertices())},
                 {"checks",
                  {{"halving", check.halving},
                   {"k_monotone", check.k_monotone},
                   {"drift_below_delta", check.drift_below_delta},
                   {"telescoping", check.telescoping},
                   {"claim", check.claim},
                   {"stop_rule", check.stop_rule}}},
                 {"states", states},
                 {"h", graph_json(r.h)}});
}

void cmd_sweep(const Context& ctx, const Args& a) {
  auto epsilons = parse_list(a.eps_list, "--eps-list");
  std::vector<double> trial_counts =
      a.trials_list.empty() ? std::vector<double>{static_cast<double>(a.trials)}
                            : parse_list(a.trials_list, "--trials-list");
  for (double t : trial_counts) {
    if (t < 1 || t != std::floor(t)) throw UsageError("--trials-list needs positive integers");
  }
  if (ctx.common->format != "csv" && ctx.common->format != "json") {
    throw UsageError("--format must be json or csv");
  }
  auto g = load(a.graph);
  std::string body = "cell,eps,trials,seed,accept_rate,mean_queries,max_queries,query_budget\n";
  std::uint64_t cell = 0;
  for (double eps : epsilons) {
    for (double t : trial_counts) {
      const std::uint64_t seed = disklab::stream_seed(ctx.common->seed, cell);
      auto est = disklab::estimate_acceptance(disklab::pi_tester_fn(eps), g,
                                              static_cast<std::size_t>(t), seed);
      std::ostringstream row;
      row.precision(10);
      row << cell << ',' << eps << ',' << static_cast<std::size_t>(t) << ',' << seed << ','
          << est.rate << ',' << est.mean_queries << ',' << est.max_queries << ','
          << disklab::pi_query_budget(g.degree_bound(), eps) << '\n';
      body += row.str();
      ++cell;
    }
  }
  ctx.emit_csv(body);
}

int report_domain_error(const std::string& kind, const std::string& message) {
  Json err = {{"error", kind}, {"message", message}};
  std::cerr << err.dump() << "\n";
  return 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"disklab: k-disk frequencies, testers, partitions and hyperfinite constructions"};
  app.require_subcommand(1);
  Common common;
  Args args;
  if (const char* env = std::getenv("DISKLAB_SEED")) {
    try {
      common.seed = std::stoull(env);
    } catch (const std::exception&) {
      std::cerr << "DISKLAB_SEED must be a non-negative integer\n";
      return 2;
    }
  }

  std::map<CLI::App*, std::function<void(const Context&, const Args&)>> handlers;
  auto add = [&](const std::string& name, const std::string& help,
                 std::function<void(const Context&, const Args&)> fn) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_option("--seed", common.seed, "Random seed (default: $DISKLAB_SEED or 0)");
    sub->add_option("--out", common.out, "Output path (default: standard output)");
    sub->add_option("--format", common.format, "json or csv")->capture_default_str();
    sub->add_option("--jobs", common.jobs, "OpenMP threads (default: all cores)");
    handlers[sub] = std::move(fn);
    return sub;
  };
  auto graph = [&](CLI::App* sub) { sub->add_option("--graph", args.graph, "Edge-list file")->required(); };

  auto* freq = add("freq", "Radius-k disk frequency vector", cmd_freq);
  graph(freq);
  freq->add_option("--k", args.k, "Disk radius")->capture_default_str();

  auto* dist = add("dist", "l1 distance between two frequency vectors", cmd_dist);
  graph(dist);
  dist->add_option("--other", args.other, "Second edge-list file")->required();
  dist->add_option("--k", args.k, "Disk radius")->capture_default_str();

  auto* disks = add("disks", "Disk type of every vertex", cmd_disks);
  graph(disks);
  disks->add_option("--k", args.k, "Disk radius")->capture_default_str();

  auto* inc = add("incompat", "Decide whether two disk types can be adjacent roots", cmd_incompat);
  inc->add_option("--a", args.a, "First disk type (hex)")->required();
  inc->add_option("--b", args.b, "Second disk type (hex)")->required();
  inc->add_option("--d", args.d, "Degree bound")->capture_default_str();
  inc->add_option("--cap", args.cap, "Search cap on disk size")->capture_default_str();

  auto* gen = add("generate", "Write a generated graph as an edge list", cmd_generate);
  gen->add_option("--family", args.family,
                  "path, cycle, grid, disjoint_cliques, edgeless, matching, random_regular, pi_member")
      ->capture_default_str();
  gen->add_option("--n", args.n, "Vertices");
  gen->add_option("--d", args.d, "Degree bound (0: natural)")->capture_default_str();
  gen->add_option("--deg", args.deg, "Random-regular degree")->capture_default_str();
  gen->add_option("--rows", args.rows, "Grid rows");
  gen->add_option("--cols", args.cols, "Grid columns");
  gen->add_option("--clique-size", args.clique_size, "Clique size")->capture_default_str();
  gen->add_option("--core", args.core, "pi-member core: cycle or random-regular")->capture_default_str();

  auto* tpi = add("test-pi", "Acceptance rate of the two-stage tester", cmd_test_pi);
  graph(tpi);
  tpi->add_option("--eps", args.eps, "Proximity parameter")->capture_default_str();
  tpi->add_option("--trials", args.trials, "Independent runs")->capture_default_str();

  auto* rep = add("repair", "Edit a graph into the property", cmd_repair);
  graph(rep);
  rep->add_option("--eps", args.eps, "Proximity parameter")->capture_default_str();

  auto* can = add("canonical", "Canonicalize a base tester over a corpus", cmd_canonical);
  can->add_option("--corpus", args.corpus, "Edge-list files (same n)")->required();
  can->add_option("--t", args.t, "Sample size and disk radius")->capture_default_str();
  can->add_option("--trials", args.trials, "Monte Carlo trials")->capture_default_str();
  can->add_flag("--exact", args.exact, "Enumerate every sample tuple");
  can->add_option("--tester", args.tester, "separated-pair, reject-isolated or pi")->capture_default_str();
  can->add_option("--eps", args.eps, "Proximity parameter for the pi tester")->capture_default_str();

  auto* net = add("net-test", "Frequency-net tester acceptance rate", cmd_net_test);
  graph(net);
  net->add_option("--property", args.property, "triangles or pi")->capture_default_str();
  net->add_option("--eps", args.eps, "Proximity parameter")->capture_default_str();
  net->add_option("--t", args.t, "Disk radius")->capture_default_str();
  net->add_option("--samples", args.samples, "Sampled roots per run")->capture_default_str();
  net->add_option("--trials", args.trials, "Independent runs")->capture_default_str();

  auto* part = add("partition", "Low-conductance partition with separator", cmd_partition);
  graph(part);
  part->add_option("--k", args.k, "Disk radius")->capture_default_str();
  part->add_option("--delta", args.delta, "Conductance threshold")->capture_default_str();
  part->add_flag("--verify", args.verify, "Check the three partition guarantees");
  args.samples = 10000;
  part->add_option("--samples", args.samples, "Candidate subsets per large class")->capture_default_str();

  auto* hyp = add("hyperfinite", "Decide (eps, s)-hyperfiniteness", cmd_hyperfinite);
  graph(hyp);
  hyp->add_option("--eps", args.eps, "Removal fraction")->capture_default_str();
  hyp->add_option("--s", args.s, "Component size bound")->capture_default_str();
  hyp->add_option("--mode", args.mode, "exact or heuristic")->capture_default_str();

  auto* dfp = add("dfp", "Smallest-distance constant-size frequency preserver", cmd_dfp);
  graph(dfp);
  dfp->add_option("--k", args.k, "Disk radius")->capture_default_str();
  dfp->add_option("--cap", args.cap, "Largest candidate size (<= 12)")->capture_default_str();
  dfp->add_option("--delta", args.delta, "Target distance")->capture_default_str();

  auto* blow = add("blowup", "Disjoint copies of a small graph", cmd_blowup);
  graph(blow);
  blow->add_option("--small", args.h, "Small graph (default: dfp of --graph)");
  blow->add_option("--k", args.k, "Disk radius")->capture_default_str();
  blow->add_option("--cap", args.cap, "dfp size cap when --h is absent")->capture_default_str();
  blow->add_option("--n", args.n, "Output size (default: n of --graph)");

  auto* pipe = add("pipeline", "Iterated hyperfinite construction", cmd_pipeline);
  graph(pipe);
  pipe->add_option("--property", args.property, "triangles or pi")->capture_default_str();
  pipe->add_option("--max-iters", args.max_iters, "Iteration cap")->capture_default_str();
  pipe->add_option("--k-max", args.k_max, "Radius cap")->capture_default_str();
  pipe->add_option("--s", args.s, "Component size bound")->capture_default_str();

  auto* sweep = add("sweep", "Tester acceptance over a parameter grid (csv)", cmd_sweep);
  graph(sweep);
  sweep->add_option("--eps-list", args.eps_list, "Comma-separated eps values")->required();
  sweep->add_option("--trials-list", args.trials_list, "Comma-separated trial counts");
  sweep->add_option("--trials", args.trials, "Trials when --trials-list is absent")->capture_default_str();

  // Small corrections to defaults that differ per subcommand.
  args.cap = 16;
  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  CLI::App* chosen = app.get_subcommands().front();
  if (common.jobs > 0) omp_set_num_threads(common.jobs);
  Context ctx{chosen, &common};
  try {
    handlers.at(chosen)(ctx, args);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const disklab::Error& e) {
    return report_domain_error(std::string(disklab::to_string(e.code())), e.what());
  } catch (const std::exception& e) {
    return report_domain_error("Internal", e.what());
  }
  return 0;
}
