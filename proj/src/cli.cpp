#include "tourneykit/cli.hpp"

#include <atomic>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "tourneykit/connectivity.hpp"
#include "tourneykit/dominating.hpp"
#include "tourneykit/extremal.hpp"
#include "tourneykit/factors.hpp"
#include "tourneykit/generators.hpp"
#include "tourneykit/hamiltonicity.hpp"
#include "tourneykit/pipeline.hpp"
#include "tourneykit/serialize.hpp"

namespace tourneykit {

namespace {

using nlohmann::json;

constexpr int kExitTrue = 0;
constexpr int kExitCertifiedNo = 1;
constexpr int kExitUnknown = 2;
constexpr int kExitUsage = 3;

int status_exit(Status s) {
  switch (s) {
    case Status::Found: return kExitTrue;
    case Status::CertifiedNo: return kExitCertifiedNo;
    default: return kExitUnknown;
  }
}

json vertex_list(const VertexList& vs) { return json(vs); }

json paths_json(const std::vector<VertexList>& paths) {
  json out = json::array();
  for (const auto& p : paths) out.push_back(p);
  return out;
}

std::vector<int> parse_int_list(const std::string& text, const char* what) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      out.push_back(std::stoi(item));
    } catch (...) {
      throw Error("BadSpec", std::string("cannot parse ") + what + ": " + item);
    }
  }
  if (out.empty()) throw Error("BadSpec", std::string("empty ") + what);
  return out;
}

std::vector<Arc> parse_pairs(const std::string& text) {
  std::vector<Arc> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    auto dash = item.find('-');
    if (dash == std::string::npos)
      throw Error("BadSpec", "pairs look like 0-5,1-6; got: " + item);
    try {
      out.emplace_back(std::stoi(item.substr(0, dash)),
                       std::stoi(item.substr(dash + 1)));
    } catch (...) {
      throw Error("BadSpec", "cannot parse pair: " + item);
    }
  }
  return out;
}

// "0:2,1:7" -> {(0,2),(1,7)}
std::vector<Arc> parse_colon_pairs(const std::vector<std::string>& texts) {
  std::vector<Arc> out;
  for (const auto& text : texts) {
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
      auto colon = item.find(':');
      if (colon == std::string::npos)
        throw Error("BadSpec", "pins look like 0:2,1:7; got: " + item);
      try {
        out.emplace_back(std::stoi(item.substr(0, colon)),
                         std::stoi(item.substr(colon + 1)));
      } catch (...) {
        throw Error("BadSpec", "cannot parse pin: " + item);
      }
    }
  }
  return out;
}

std::uint64_t default_seed() {
  if (const char* env = std::getenv("TOURNEYKIT_SEED"))
    return std::strtoull(env, nullptr, 10);
  return 0;
}

// ---- per-verb cores (shared between CLI handlers and sweep) -------------

struct VerbOutcome {
  std::string outcome;
  json result = json::object();
  int exit_code = kExitTrue;
};

VerbOutcome hamilton_core(const Digraph& d) {
  VerbOutcome out;
  Tournament t = Tournament::validated(d);
  try {
    Cycle c = camion_cycle(t);
    out.outcome = "HamiltonianCycle";
    out.result["cycle"] = vertex_list(c.vertices);
  } catch (const NotStronglyConnectedError& e) {
    out.outcome = "NotStronglyConnected";
    out.result["witness_pair"] = {e.witness_pair.first, e.witness_pair.second};
    out.result["witness_separator"] = vertex_list(e.witness_separator);
    out.exit_code = kExitCertifiedNo;
  }
  return out;
}

VerbOutcome dominate_core(const Digraph& d, int x, int c, DomKind kind) {
  VerbOutcome out;
  DominatingStructure s = almost_dominating(d, x, c, kind);
  int deg = kind == DomKind::A ? d.out_degree(x) : d.in_degree(x);
  out.outcome = "Built";
  out.result["kind"] = kind == DomKind::A ? "A" : "B";
  out.result["path"] = vertex_list(s.path);
  out.result["endpoint"] = s.endpoint;
  out.result["uncovered"] = vertex_list(s.uncovered);
  out.result["residue_size"] = s.uncovered.size();
  out.result["c"] = s.c;
  out.result["ell"] = s.ell;
  out.result["x"] = s.x;
  out.result["degree"] = deg;
  // proven bound 2^(1-c') d + 2l as an exact rational, c' = |path|
  int shift = static_cast<int>(s.path.size()) - 1;
  if (shift <= 40) {
    long long den = 1ll << shift;
    out.result["bound"] = {{"num", deg + 2ll * s.ell * den}, {"den", den}};
  }
  out.result["bound_holds"] = s.bound_holds(deg);
  return out;
}

VerbOutcome factor_core(const Digraph& d, const FactorSpec& spec) {
  VerbOutcome out;
  Tournament t = Tournament::validated(d);
  FactorResult r = find_factor(t, spec);
  out.exit_code = status_exit(r.status);
  switch (r.status) {
    case Status::Found: {
      out.outcome = "Found";
      json cycles = json::array();
      for (const auto& c : r.factor.cycles) cycles.push_back(c.vertices);
      out.result["cycles"] = std::move(cycles);
      break;
    }
    case Status::CertifiedNo: out.outcome = "NoFactor"; break;
    default: out.outcome = "Unknown";
  }
  return out;
}

VerbOutcome kappa_core(const Digraph& d, std::optional<int> k) {
  VerbOutcome out;
  ConnectivityReport rep = connectivity_report(d);
  out.result["kappa"] = rep.kappa;
  if (rep.witness_pair) {
    out.result["witness_pair"] = {rep.witness_pair->first,
                                  rep.witness_pair->second};
    out.result["witness_separator"] = vertex_list(rep.witness_separator);
  }
  if (k) {
    bool ok = d.n() >= *k + 1 && rep.kappa >= *k;
    out.outcome = ok ? "StronglyKConnected" : "NotStronglyKConnected";
    out.exit_code = ok ? kExitTrue : kExitCertifiedNo;
  } else {
    out.outcome = "Measured";
  }
  return out;
}

// ---- report plumbing ------------------------------------------------------

json make_report(const std::string& command, const VerbOutcome& out,
                 const std::optional<std::string>& dig,
                 std::chrono::steady_clock::time_point started) {
  json rpt;
  rpt["command"] = command;
  if (dig) rpt["digest"] = *dig;
  rpt["outcome"] = out.outcome;
  rpt["result"] = out.result;
  auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                std::chrono::steady_clock::now() - started)
                .count();
  rpt["wall_ms"] = ms;
  return rpt;
}

struct SweepSpec {
  json instances;
  json run;
  json expect;
  int jobs = 1;
};

struct SweepCase {
  bool pass = false;
  json report;
  json instance;
};

VerbOutcome run_sweep_verb(const json& run, const Digraph& d) {
  const std::string verb = run.at("verb").get<std::string>();
  if (verb == "hamilton") return hamilton_core(d);
  if (verb == "kappa") {
    std::optional<int> k;
    if (run.contains("k")) k = run["k"].get<int>();
    return kappa_core(d, k);
  }
  if (verb == "dominate") {
    int x = run.value("x", 0);
    int c = run.value("c", 1);
    DomKind kind = run.value("kind", "A") == std::string("B") ? DomKind::B
                                                              : DomKind::A;
    return dominate_core(d, x, c, kind);
  }
  if (verb == "factor") {
    FactorSpec spec;
    spec.lengths = run.at("lengths").get<std::vector<int>>();
    return factor_core(d, spec);
  }
  throw Error("BadSpec", "sweep cannot run verb: " + verb);
}

bool eval_predicate(const json& expect, const Digraph& d,
                    const VerbOutcome& out) {
  const std::string pred = expect.at("predicate").get<std::string>();
  if (pred == "exit_code") return out.exit_code == expect.at("value").get<int>();
  if (pred == "outcome")
    return out.outcome == expect.at("value").get<std::string>();
  if (pred == "hamilton_iff_strongly_connected") {
    bool strong = is_strongly_connected(d);
    bool got = out.outcome == "HamiltonianCycle";
    if (got != strong) return false;
    if (got) {
      Cycle c{out.result.at("cycle").get<VertexList>()};
      return validate_cycle(d, c, d.n());
    }
    return true;
  }
  if (pred == "dominate_bound_holds")
    return out.result.value("bound_holds", false);
  throw Error("BadSpec", "unknown predicate: " + pred);
}

std::vector<Digraph> sweep_instances(const json& spec) {
  std::vector<Digraph> out;
  const std::string kind = spec.at("kind").get<std::string>();
  if (kind == "none") return out;
  if (kind == "enumerate") {
    enumerate_labeled_tournaments(
        spec.at("n").get<int>(), [&](const Tournament& t, std::uint64_t) {
          out.push_back(t);
          return true;
        });
    return out;
  }
  if (kind == "random") {
    int n = spec.at("n").get<int>();
    int count = spec.at("count").get<int>();
    std::uint64_t seed = spec.value("seed", 0ull);
    for (int i = 0; i < count; ++i)
      out.push_back(random_tournament(n, seed + static_cast<std::uint64_t>(i)));
    return out;
  }
  if (kind == "files") {
    for (const auto& p : spec.at("paths"))
      out.push_back(load_instance(p.get<std::string>()).graph);
    return out;
  }
  throw Error("BadSpec", "unknown instance kind: " + kind);
}

VerbOutcome sweep_core(const SweepSpec& spec) {
  std::vector<Digraph> instances = sweep_instances(spec.instances);
  std::vector<SweepCase> cases(instances.size());

  const int jobs =
      std::max(1, std::min<int>(spec.jobs, static_cast<int>(
                                               std::thread::hardware_concurrency())));
  std::atomic<std::size_t> cursor{0};
  auto worker = [&] {
    while (true) {
      std::size_t i = cursor.fetch_add(1);
      if (i >= instances.size()) break;
      VerbOutcome out = run_sweep_verb(spec.run, instances[i]);
      cases[i].pass = eval_predicate(spec.expect, instances[i], out);
      if (!cases[i].pass) {
        cases[i].report = {{"outcome", out.outcome}, {"result", out.result}};
        cases[i].instance = instance_to_json(instances[i]);
      }
    }
  };
  if (jobs == 1 || instances.size() <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int j = 0; j < jobs; ++j) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }

  long long failures = 0;
  json first;
  for (std::size_t i = 0; i < cases.size(); ++i) {
    if (!instances.empty() && !cases[i].pass) {
      if (failures == 0)
        first = {{"index", i},
                 {"instance", cases[i].instance},
                 {"report", cases[i].report}};
      ++failures;
    }
  }
  VerbOutcome out;
  out.outcome = failures == 0 ? "SweepPassed" : "SweepFailed";
  out.exit_code = failures == 0 ? kExitTrue : kExitCertifiedNo;
  out.result["instances"] = instances.size();
  out.result["failures"] = failures;
  if (failures > 0) out.result["first_counterexample"] = first;
  return out;
}

std::string join_args(const std::vector<std::string>& args) {
  std::string s = "tourneykit";
  for (const auto& a : args) {
    s += ' ';
    s += a;
  }
  return s;
}

void emit_instance(json& result, const Digraph& d, const json& meta,
                   const std::string& out_path) {
  json inst = instance_to_json(d, meta);
  if (!out_path.empty()) {
    std::ofstream f(out_path);
    if (!f) throw Error("BadInstance", "cannot write " + out_path);
    f << inst.dump(2) << "\n";
    result["written"] = out_path;
  } else {
    result["instance"] = inst;
  }
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  const auto started = std::chrono::steady_clock::now();

  CLI::App app{"tournament partition toolkit"};
  app.require_subcommand(1);
  bool pretty = false;
  app.add_flag("--pretty", pretty, "indent the JSON report");

  // shared options, wired per subcommand
  std::string in_path, out_path, kind_str = "A", config_path;
  std::string lengths_str, sizes_str, pairs_str;
  std::vector<std::string> pin_strs;
  int n = 0, v = 0, u = 0, len = 0, k = 0, c = 1, x = 0, q = 0, t_parts = 0;
  int spec_s = 2, spec_m = 2, spec_sp = 1, size_opt = 0;
  int jobs = 1;
  std::uint64_t seed = default_seed();
  bool strong_only = false;
  bool have_k = false;

  auto* gen_random = app.add_subcommand("gen-random", "random tournament");
  gen_random->add_option("--n", n)->required();
  gen_random->add_option("--seed", seed);
  gen_random->add_option("--out", out_path);

  auto* gen_paley = app.add_subcommand("gen-paley", "quadratic-residue tournament");
  gen_paley->add_option("--q", q)->required();
  gen_paley->add_option("--out", out_path);

  auto* gen_ext = app.add_subcommand("gen-extremal", "layered extremal tournament");
  gen_ext->add_option("--s", spec_s)->required();
  gen_ext->add_option("--m", spec_m)->required();
  gen_ext->add_option("--sprime", spec_sp)->required();
  gen_ext->add_option("--out", out_path);

  auto* enumerate = app.add_subcommand("enumerate", "count labeled tournaments");
  enumerate->add_option("--n", n)->required();
  enumerate->add_flag("--strong-only", strong_only);

  auto* hamilton = app.add_subcommand("hamilton", "Hamiltonian cycle (Camion)");
  hamilton->add_option("--in", in_path)->required();

  auto* pancyclic = app.add_subcommand("pancyclic", "cycle of given length through v (Moon)");
  pancyclic->add_option("--in", in_path)->required();
  pancyclic->add_option("--v", v)->required();
  pancyclic->add_option("--len", len)->required();

  auto* twocycles = app.add_subcommand("twocycles", "spanning pair of disjoint cycles");
  twocycles->add_option("--in", in_path)->required();
  twocycles->add_option("--v", v)->required();
  twocycles->add_option("--len", len)->required();

  auto* kappa_cmd = app.add_subcommand("kappa", "vertex connectivity");
  kappa_cmd->add_option("--in", in_path)->required();
  kappa_cmd->add_option("--k", k)->each([&](const std::string&) { have_k = true; });

  auto* pairconn = app.add_subcommand("pairconn", "pair k-connectivity certificate");
  pairconn->add_option("--in", in_path)->required();
  pairconn->add_option("--u", u)->required();
  pairconn->add_option("--v", v)->required();
  pairconn->add_option("--k", k)->required();

  auto* linked = app.add_subcommand("linked", "vertex-disjoint linking paths");
  linked->add_option("--in", in_path)->required();
  linked->add_option("--pairs", pairs_str)->required();

  auto* diameter_cmd = app.add_subcommand("diameter", "directed diameter");
  diameter_cmd->add_option("--in", in_path)->required();

  auto* dominate = app.add_subcommand("dominate", "almost dominating structure");
  dominate->add_option("--in", in_path)->required();
  dominate->add_option("--x", x)->required();
  dominate->add_option("--c", c)->required();
  dominate->add_option("--kind", kind_str)->check(CLI::IsMember({"A", "B"}));

  auto* sparse = app.add_subcommand("sparse-linkage", "verified sparse linkage pair");
  sparse->add_option("--in", in_path)->required();
  sparse->add_option("--k", k)->required();

  auto* factor = app.add_subcommand("factor", "1-factor with prescribed cycle lengths");
  factor->add_option("--in", in_path)->required();
  factor->add_option("--lengths", lengths_str)->required();
  factor->add_option("--pin", pin_strs);

  auto* partition = app.add_subcommand("partition", "strongly k-connected partition");
  partition->add_option("--in", in_path)->required();
  partition->add_option("--t", t_parts)->required();
  partition->add_option("--k", k)->required();
  partition->add_option("--sizes", sizes_str)->required();
  partition->add_option("--pin", pin_strs);

  auto* linkpaths = app.add_subcommand("linkpaths", "disjoint paths with prescribed lengths");
  linkpaths->add_option("--in", in_path)->required();
  linkpaths->add_option("--pairs", pairs_str)->required();
  linkpaths->add_option("--lengths", lengths_str)->required();

  auto* certify = app.add_subcommand("certify", "extremal property certificate");
  certify->add_option("--in", in_path)->required();
  certify->add_option("--s", spec_s);        // default from instance meta
  certify->add_option("--m", spec_m);
  certify->add_option("--sprime", spec_sp);
  certify->add_option("--k", k)->required();

  auto* sweep = app.add_subcommand("sweep", "declarative instance sweep");
  sweep->add_option("--config", config_path)->required();
  sweep->add_option("--jobs", jobs);

  // global flags remain valid after the subcommand name
  for (auto* sub : app.get_subcommands(nullptr)) sub->fallthrough();

  (void)size_opt;

  std::vector<const char*> argv;
  argv.push_back("tourneykit");
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()),
              const_cast<char**>(argv.data()));
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return kExitUsage;
  }

  std::optional<std::string> dig;
  VerbOutcome outcome;
  try {
    if (gen_random->parsed()) {
      Tournament t = random_tournament(n, seed);
      json meta{{"generator", "random"}, {"n", n}, {"seed", seed}};
      outcome.outcome = "Generated";
      emit_instance(outcome.result, t, meta, out_path);
      dig = digest_hex(t);
    } else if (gen_paley->parsed()) {
      Tournament t = paley_tournament(q);
      json meta{{"generator", "paley"}, {"q", q}};
      outcome.outcome = "Generated";
      emit_instance(outcome.result, t, meta, out_path);
      dig = digest_hex(t);
    } else if (gen_ext->parsed()) {
      ExtremalSpec spec{spec_s, spec_m, spec_sp};
      Tournament t = extremal_tournament(spec);
      json meta{{"generator", "extremal"},
                {"s", spec_s},
                {"m", spec_m},
                {"sprime", spec_sp},
                {"roles", spec.role_names()}};
      outcome.outcome = "Generated";
      emit_instance(outcome.result, t, meta, out_path);
      outcome.result["n"] = spec.n();
      outcome.result["back_arcs"] = extremal_back_arcs(spec).size();
      outcome.result["hypothesis_met"] = spec.meets_hypothesis();
      dig = digest_hex(t);
    } else if (enumerate->parsed()) {
      std::uint64_t total = 0, strong = 0;
      enumerate_labeled_tournaments(n, [&](const Tournament& t, std::uint64_t) {
        ++total;
        if (strong_only && is_strongly_connected(t)) ++strong;
        return true;
      });
      outcome.outcome = "Enumerated";
      outcome.result["count"] = total;
      if (strong_only) outcome.result["strongly_connected"] = strong;
    } else if (hamilton->parsed()) {
      Instance inst = load_instance(in_path);
      dig = digest_hex(inst.graph);
      outcome = hamilton_core(inst.graph);
    } else if (pancyclic->parsed()) {
      Instance inst = load_instance(in_path);
      dig = digest_hex(inst.graph);
      Tournament t = Tournament::validated(inst.graph);
      try {
        Cycle cyc = moon_cycle(t, v, len);
        outcome.outcome = "Cycle";
        outcome.result["cycle"] = vertex_list(cyc.vertices);
      } catch (const NotStronglyConnectedError& e) {
        outcome.outcome = "NotStronglyConnected";
        outcome.result["witness_pair"] = {e.witness_pair.first,
                                          e.witness_pair.second};
        outcome.exit_code = kExitCertifiedNo;
      }
    } else if (twocycles->parsed()) {
      Instance inst = load_instance(in_path);
      dig = digest_hex(inst.graph);
      Tournament t = Tournament::validated(inst.graph);
      TwoCycles tc = two_cycle_partition(t, v, len);
      outcome.exit_code = status_exit(tc.status);
      if (tc.status == Status::Found) {
        outcome.outcome = "Found";
        outcome.result["first"] = vertex_list(tc.first.vertices);
        outcome.result["second"] = vertex_list(tc.second.vertices);
      } else {
        outcome.outcome =
            tc.status == Status::CertifiedNo ? "NoPartition" : "Unknown";
      }
    } else if (kappa_cmd->parsed()) {
      Instance inst = load_instance(in_path);
      dig = digest_hex(inst.graph);
      outcome = kappa_core(inst.graph,
                           have_k ? std::optional<int>(k) : std::nullopt);
    } else if (pairconn->parsed()) {
      Instance inst = load_instance(in_path);
      dig = digest_hex(inst.graph);
      PairConnectivity pc = pair_k_connected(inst.graph, u, v, k);
      if (pc.connected) {
        outcome.outcome = "PairKConnected";
        outcome.result["paths"] = paths_json(pc.paths);
      } else {
        outcome.outcome = "Separated";
        outcome.result["separator"] = vertex_list(pc.separator);
        outcome.exit_code = kExitCertifiedNo;
      }
    } else if (linked->parsed()) {
      Instance inst = load_instance(in_path);
      dig = digest_hex(inst.graph);
      LinkResult lr = is_k_linked(inst.graph, parse_pairs(pairs_str));
      outcome.exit_code = status_exit(lr.status);
      if (lr.status == Status::Found) {
        outcome.outcome = "Linked";
        outcome.result["paths"] = paths_json(lr.paths.paths);
      } else {
        outcome.outcome =
            lr.status == Status::CertifiedNo ? "NotLinked" : "Unknown";
      }
    } else if (diameter_cmd->parsed()) {
      Instance inst = load_instance(in_path);
      dig = digest_hex(inst.graph);
      auto diam = diameter(inst.graph);
      outcome.outcome = "Measured";
      if (diam) outcome.result["diameter"] = *diam;
      else outcome.result["diameter"] = "Infinite";
    } else if (dominate->parsed()) {
      Instance inst = load_instance(in_path);
      dig = digest_hex(inst.graph);
      outcome = dominate_core(inst.graph, x, c,
                              kind_str == "B" ? DomKind::B : DomKind::A);
    } else if (sparse->parsed()) {
      Instance inst = load_instance(in_path);
      dig = digest_hex(inst.graph);
      SparseLinkageResult r = sparse_linkage(inst.graph, k);
      outcome.exit_code = status_exit(r.status);
      if (r.status == Status::Found) {
        outcome.outcome = "Found";
        outcome.result["A"] = vertex_list(r.pair.a);
        outcome.result["B"] = vertex_list(r.pair.b);
        outcome.result["budget"] = r.pair.budget;
        outcome.result["ell"] = r.pair.ell;
      } else if (r.status == Status::CertifiedNo) {
        outcome.outcome = "NotFoundExhaustive";
        outcome.result["alarm"] =
            "exhaustive search found no pair within budget; pairs of this "
            "size always exist, so this indicates a bug";
      } else {
        outcome.outcome = "Unknown";
      }
    } else if (factor->parsed()) {
      Instance inst = load_instance(in_path);
      dig = digest_hex(inst.graph);
      FactorSpec spec;
      spec.lengths = parse_int_list(lengths_str, "lengths");
      for (auto [ci, pv] : parse_colon_pairs(pin_strs)) spec.prescribed[ci] = pv;
      outcome = factor_core(inst.graph, spec);
    } else if (partition->parsed()) {
      Instance inst = load_instance(in_path);
      dig = digest_hex(inst.graph);
      std::vector<int> sizes = parse_int_list(sizes_str, "sizes");
      std::vector<VertexList> pins(t_parts);
      for (auto [pi, pv] : parse_colon_pairs(pin_strs)) {
        if (pi < 0 || pi >= t_parts)
          throw Error("PinConflict", "pin part index out of range");
        pins[pi].push_back(pv);
      }
      PartitionResult pr =
          partition_k_connected(inst.graph, t_parts, k, sizes, pins);
      outcome.exit_code = status_exit(pr.status);
      if (pr.status == Status::Found) {
        outcome.outcome = "Found";
        json parts = json::array();
        for (const auto& pc : pr.certificate.parts)
          parts.push_back({{"vertices", pc.part},
                           {"kappa", pc.kappa},
                           {"k_connected", pc.k_connected}});
        outcome.result["parts"] = std::move(parts);
        outcome.result["sizes"] = pr.certificate.sizes;
      } else {
        outcome.outcome =
            pr.status == Status::CertifiedNo ? "NoPartition" : "Unknown";
      }
    } else if (linkpaths->parsed()) {
      Instance inst = load_instance(in_path);
      dig = digest_hex(inst.graph);
      PathLinkSpec spec;
      spec.pairs = parse_pairs(pairs_str);
      spec.lengths = parse_int_list(lengths_str, "lengths");
      LinkPathsResult lr = linked_paths_with_lengths(inst.graph, spec);
      outcome.exit_code = status_exit(lr.status);
      if (lr.status == Status::Found) {
        outcome.outcome = "Found";
        outcome.result["paths"] = paths_json(lr.paths.paths);
      } else {
        outcome.outcome =
            lr.status == Status::CertifiedNo ? "NoSolution" : "Unknown";
      }
    } else if (certify->parsed()) {
      Instance inst = load_instance(in_path);
      dig = digest_hex(inst.graph);
      Tournament t = Tournament::validated(inst.graph);
      if (!certify->count("--s") && inst.meta.contains("s"))
        spec_s = inst.meta["s"].get<int>();
      if (!certify->count("--m") && inst.meta.contains("m"))
        spec_m = inst.meta["m"].get<int>();
      if (!certify->count("--sprime") && inst.meta.contains("sprime"))
        spec_sp = inst.meta["sprime"].get<int>();
      ExtremalSpec spec{spec_s, spec_m, spec_sp};
      ExtremalCertificate cert = certify_extremal(t, spec, k);
      bool ok = cert.kappa_ok && cert.diameter_ok && cert.layer_separator_ok &&
                (!cert.subtournament_verified || cert.subtournament_ok);
      outcome.outcome = ok ? "Certified" : "Violated";
      outcome.exit_code = ok ? kExitTrue : kExitCertifiedNo;
      outcome.result["kappa_exact"] = cert.kappa_exact;
      outcome.result["kappa_ok"] = cert.kappa_ok;
      outcome.result["diameter_exact"] = cert.diameter_exact;
      outcome.result["diameter_bound"] = {{"num", cert.diameter_bound_num},
                                          {"den", cert.diameter_bound_den}};
      outcome.result["diameter_ok"] = cert.diameter_ok;
      outcome.result["size_bound"] = {{"num", cert.size_bound_num},
                                      {"den", cert.size_bound_den}};
      outcome.result["subtournament_verified"] = cert.subtournament_verified;
      if (cert.min_k_subtournament) {
        outcome.result["min_k_subtournament"] = *cert.min_k_subtournament;
        outcome.result["min_witness"] = vertex_list(cert.min_witness);
        outcome.result["subtournament_ok"] = cert.subtournament_ok;
      }
      outcome.result["layer_separator_ok"] = cert.layer_separator_ok;
      outcome.result["hypothesis_warning"] = cert.hypothesis_warning;
    } else if (sweep->parsed()) {
      std::ifstream f(config_path);
      if (!f) throw Error("BadSpec", "cannot open config " + config_path);
      json cfg = json::parse(f, nullptr, true, true);
      SweepSpec spec;
      spec.instances = cfg.at("instances");
      spec.run = cfg.at("run");
      spec.expect = cfg.at("expect");
      spec.jobs = cfg.value("jobs", jobs);
      if (sweep->count("--jobs")) spec.jobs = jobs;
      outcome = sweep_core(spec);
    }
  } catch (const Error& e) {
    if (e.code() == "NotStronglyConnected") {
      outcome.outcome = e.code();
      outcome.exit_code = kExitCertifiedNo;
    } else {
      json rpt;
      rpt["command"] = join_args(args);
      rpt["outcome"] = "Error";
      rpt["error"] = {{"code", e.code()}, {"message", e.what()}};
      out << (pretty ? rpt.dump(2) : rpt.dump()) << "\n";
      err << e.what() << "\n";
      return kExitUsage;
    }
  } catch (const json::exception& e) {
    err << "json error: " << e.what() << "\n";
    return kExitUsage;
  }

  json rpt = make_report(join_args(args), outcome, dig, started);
  out << (pretty ? rpt.dump(2) : rpt.dump()) << "\n";
  return outcome.exit_code;
}

}  // namespace tourneykit
