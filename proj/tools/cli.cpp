#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>

#include "scs/dot.hpp"
#include "scs/errors.hpp"
#include "scs/graph.hpp"
#include "scs/instances.hpp"
#include "scs/json.hpp"
#include "scs/search.hpp"
#include "scs/solvers.hpp"
#include "scs/strings.hpp"

namespace scs::cli {
namespace {

// Raised after the result was printed when a checked property does not hold.
struct VerificationFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Context {
  std::istream& in;
  std::ostream& out;
  bool pretty = false;
};

Instance read_instance(Context& ctx, const std::string& file, bool allow_sentinel = true) {
  NormalizeOptions opts{.allow_sentinel = allow_sentinel};
  if (file == "-") return parse_instance(ctx.in, opts);
  std::ifstream f(file);
  if (!f) throw std::invalid_argument("cannot open " + file);
  return parse_instance(f, opts);
}

Json read_json(Context& ctx, const std::string& file) {
  if (file == "-") return Json::parse(ctx.in);
  std::ifstream f(file);
  if (!f) throw std::invalid_argument("cannot open " + file);
  return Json::parse(f);
}

Algorithm parse_algorithm(const std::string& name) {
  if (name == "greedy" || name == "ga") return Algorithm::greedy;
  if (name == "locally-greedy" || name == "lga") return Algorithm::locally_greedy;
  throw std::invalid_argument("unknown algorithm: " + name);
}

Metric parse_metric(const std::string& name) {
  if (name == "length") return Metric::length;
  if (name == "uniform") return Metric::uniform;
  throw std::invalid_argument("unknown metric: " + name);
}

std::uint64_t parse_seed(const std::string& spec, const std::string& prefix) {
  std::string digits = spec.substr(prefix.size());
  if (digits.empty() || !std::all_of(digits.begin(), digits.end(), ::isdigit)) {
    throw std::invalid_argument("expected " + prefix + "SEED, got " + spec);
  }
  return std::stoull(digits);
}

TieBreaker parse_tie(const std::string& spec) {
  if (spec == "lex") return tie::lexicographic();
  if (spec.rfind("random:", 0) == 0) return tie::seeded_random(parse_seed(spec, "random:"));
  throw std::invalid_argument("tie must be lex or random:SEED, got " + spec);
}

OrderPolicy parse_policy(const std::string& spec) {
  if (spec == "lex") return OrderPolicy::lexicographic();
  if (spec.rfind("random:", 0) == 0) return OrderPolicy::seeded_random(parse_seed(spec, "random:"));
  throw std::invalid_argument("policy must be lex or random:SEED, got " + spec);
}

Sym parse_symbol(const std::string& s) {
  if (s.size() != 1 || !is_printable(s[0])) {
    throw std::invalid_argument("symbol must be one printable character");
  }
  return s[0];
}

std::string scalar_text(const Json& j) {
  return j.is_string() ? j.get<std::string>() : j.dump();
}

// Flattens a JSON document into aligned "path  value" rows.
void flatten(const Json& j, const std::string& path, std::vector<std::pair<std::string, std::string>>& rows) {
  if (j.is_object() && !j.empty()) {
    for (const auto& [k, v] : j.items()) flatten(v, path.empty() ? k : path + "." + k, rows);
  } else if (j.is_array() && !j.empty() &&
             std::any_of(j.begin(), j.end(), [](const Json& e) { return e.is_structured(); })) {
    for (std::size_t i = 0; i < j.size(); ++i) flatten(j[i], path + "[" + std::to_string(i) + "]", rows);
  } else {
    rows.emplace_back(path, scalar_text(j));
  }
}

void emit(Context& ctx, const Json& j) {
  if (!ctx.pretty) {
    ctx.out << j.dump() << '\n';
    return;
  }
  std::vector<std::pair<std::string, std::string>> rows;
  flatten(j, "", rows);
  std::size_t width = 0;
  for (const auto& [k, v] : rows) width = std::max(width, k.size());
  for (const auto& [k, v] : rows) ctx.out << std::left << std::setw(int(width) + 2) << k << v << '\n';
}

std::size_t default_jobs() {
  if (const char* env = std::getenv("SCS_JOBS")) {
    std::string s(env);
    if (!s.empty() && std::all_of(s.begin(), s.end(), ::isdigit) && std::stoul(s) > 0) {
      return std::stoul(s);
    }
    throw std::invalid_argument("SCS_JOBS must be a positive integer");
  }
  return 1;
}

Json error_json(const std::string& kind, const std::string& message, int code) {
  return Json{{"error", {{"kind", kind}, {"message", message}, {"exit_code", code}}}};
}

// ---------------------------------------------------------------------------

struct SolveArgs {
  std::string algo = "greedy";
  std::string tie = "lex";
  std::string file;
};

void cmd_solve(Context& ctx, const SolveArgs& a) {
  Instance inst = read_instance(ctx, a.file);
  Algorithm algo = parse_algorithm(a.algo);
  Json j = to_json(run_greedy(inst, algo, parse_tie(a.tie)));
  j["algorithm"] = algorithm_name(algo);
  j["tie"] = a.tie;
  emit(ctx, j);
}

struct ExactArgs {
  std::string file;
  std::string symbol;
};

void cmd_exact(Context& ctx, const ExactArgs& a) {
  Instance inst = read_instance(ctx, a.file);
  if (a.symbol.empty()) {
    emit(ctx, to_json(exact_scs(inst)));
    return;
  }
  Sym p = parse_symbol(a.symbol);
  SigmaOptimum opt = exact_sigma(inst, p);
  emit(ctx, Json{{"symbol", std::string(1, p)},
                 {"count", opt.count},
                 {"perm", opt.perm},
                 {"solution", to_json(make_solution(inst, opt.perm))}});
}

struct EnumerateArgs {
  std::string algo = "greedy";
  std::size_t budget = 1'000'000;
  bool list = false;
  std::string file;
};

void cmd_enumerate(Context& ctx, const EnumerateArgs& a) {
  Instance inst = read_instance(ctx, a.file);
  Algorithm algo = parse_algorithm(a.algo);
  Enumeration e = enumerate_instantiations(inst, algo, a.budget);
  std::size_t min_len = SIZE_MAX, max_len = 0;
  std::map<Sym, std::pair<std::size_t, std::size_t>> range;
  for (const auto& s : e.solutions) {
    min_len = std::min(min_len, s.length);
    max_len = std::max(max_len, s.length);
    for (const auto& [p, c] : s.per_symbol) {
      auto [it, fresh] = range.try_emplace(p, c, c);
      if (!fresh) it->second = {std::min(it->second.first, c), std::max(it->second.second, c)};
    }
  }
  Json per_symbol = Json::object();
  for (const auto& [p, mm] : range) per_symbol[std::string(1, p)] = {{"min", mm.first}, {"max", mm.second}};
  Json j{{"algorithm", algorithm_name(algo)},
         {"instantiations", e.solutions.size()},
         {"complete", e.complete},
         {"states_visited", e.states_visited},
         {"min_length", e.solutions.empty() ? Json(nullptr) : Json(min_len)},
         {"max_length", e.solutions.empty() ? Json(nullptr) : Json(max_len)},
         {"per_symbol", per_symbol}};
  if (a.list) {
    Json sols = Json::array();
    for (const auto& s : e.solutions) sols.push_back(to_json(s));
    j["solutions"] = sols;
  }
  emit(ctx, j);
}

struct CertifyArgs {
  std::string file;
  std::string symbol;
  std::string policy = "lex";
};

Json certify_graph(const std::string& name, const WeightedDigraph& g, const OrderPolicy& policy) {
  CycleCover cover = cyc(g, policy);
  PropertyReport report = check_properties(g, cover);
  Json j{{"graph", name}, {"properties", to_json(report)},
         {"triangle", report.p2.holds}, {"monge", report.p3.holds},
         {"cyc_weight", cover_weight(g, cover)}};
  if (g.size() <= 15) {
    PathResult pr = path(g, policy);
    j["path"] = pr.path.order;
    j["diagnostics"] = to_json(analyze_trace(g, pr));
  }
  return j;
}

void cmd_certify(Context& ctx, const CertifyArgs& a) {
  Instance inst = read_instance(ctx, a.file);
  if (inst.size() > 20) throw CapacityError("certify supports at most 20 strings");
  OrderPolicy policy = parse_policy(a.policy);
  Json graphs = Json::array();
  if (a.symbol.empty()) graphs.push_back(certify_graph("overlap", overlap_graph(inst), policy));
  std::string symbols = a.symbol.empty() ? inst.alphabet() : std::string(1, parse_symbol(a.symbol));
  for (Sym p : symbols) {
    graphs.push_back(certify_graph(std::string("sigma:") + p, sigma_graph(inst, p), policy));
  }
  bool ok = std::all_of(graphs.begin(), graphs.end(), [](const Json& g) {
    bool diag = !g.contains("diagnostics") ||
                (g["diagnostics"]["laminar_ok"].get<bool>() && g["diagnostics"]["placement_ok"].get<bool>() &&
                 g["diagnostics"]["main2_ok"].get<bool>());
    return g["properties"]["pseudo_overlap"].get<bool>() && diag;
  });
  emit(ctx, Json{{"instance", to_json(inst)}, {"policy", a.policy}, {"ok", ok}, {"graphs", graphs}});
  if (!ok) throw VerificationFailure("a pseudo-overlap property or PATH diagnostic failed");
}

struct GenArgs {
  std::string family;
  std::size_t n = 0;
};

void cmd_gen(Context& ctx, const GenArgs& a) {
  Family f = parse_family(a.family);
  if (is_parametric(f) && a.n == 0) throw std::invalid_argument("--n is required for " + a.family);
  ctx.out << serialize_instance(gen_family({f, a.n}));
}

struct SentinelArgs {
  std::string file;
  std::string target;
  std::size_t max_m = 0;
  std::uint64_t max_candidates = 20'000'000;
};

void cmd_sentinelize(Context& ctx, const SentinelArgs& a) {
  Instance inst = read_instance(ctx, a.file, false);
  std::vector<MergeStep> target = a.target.empty() ? greedy_scs(inst).merge_log
                                                   : merge_log_from_json(read_json(ctx, a.target));
  SentinelParams params = find_sentinel_params(inst, target, {a.max_m, a.max_candidates});
  Instance transformed = sentinelize(inst, params);
  Json log = Json::array();
  for (const auto& s : target) log.push_back(to_json(s));
  emit(ctx, Json{{"params", to_json(params)},
                 {"instance", to_json(transformed)},
                 {"greedy_forced", is_greedy_forced(transformed)},
                 {"target", log}});
}

struct SearchArgs {
  std::size_t alphabet = 2;
  std::size_t max_strings = 3;
  std::size_t max_len = 3;
  std::string algo = "greedy";
  std::string metric = "length";
  std::string lambda;
  std::optional<std::uint64_t> random_seed;
  std::size_t samples = 1000;
  std::vector<std::string> files;
  std::optional<std::size_t> jobs;
  std::size_t budget = 1'000'000;
  std::string checkpoint;
  std::size_t checkpoint_every = 0;
  bool tsv = false;
};

void cmd_search(Context& ctx, const SearchArgs& a) {
  SearchSpace space;
  if (!a.files.empty()) {
    std::vector<Instance> instances;
    for (const auto& f : a.files) instances.push_back(read_instance(ctx, f));
    space = SearchSpace::of(std::move(instances));
  } else if (a.random_seed) {
    space = SearchSpace::random(a.alphabet, a.max_strings, a.max_len, *a.random_seed, a.samples);
  } else {
    space = SearchSpace::exhaustive(a.alphabet, a.max_strings, a.max_len);
  }
  Algorithm algo = parse_algorithm(a.algo);
  Metric metric = parse_metric(a.metric);
  SearchOptions opts;
  opts.jobs = a.jobs ? *a.jobs : default_jobs();
  if (opts.jobs == 0) throw std::invalid_argument("--jobs must be positive");
  opts.enumeration_budget = a.budget;
  opts.checkpoint_path = a.checkpoint;
  opts.checkpoint_every = a.checkpoint_every;
  if (a.tsv) opts.tsv = &ctx.out;
  if (a.lambda.empty()) {
    RatioReport r = worst_ratio(space, algo, metric, opts);
    if (!a.tsv) {
      Json j = to_json(r);
      j["algorithm"] = algorithm_name(algo);
      emit(ctx, j);
    }
    return;
  }
  Ratio lambda = parse_ratio(a.lambda);
  BoundVerdict v = verify_bound(space, algo, metric, lambda, opts);
  if (!a.tsv) {
    Json j = to_json(v);
    j["algorithm"] = algorithm_name(algo);
    j["metric"] = metric_name(metric);
    j["lambda"] = to_string(lambda);
    emit(ctx, j);
  }
  if (!v.pass) throw VerificationFailure("bound " + to_string(lambda) + " exceeded");
}

struct GraphArgs {
  std::string dot;
  std::string file;
  std::string symbol;
  bool all_edges = false;
};

void cmd_graph(Context& ctx, const GraphArgs& a) {
  Instance inst = read_instance(ctx, a.file);
  WeightedDigraph g = a.symbol.empty() ? overlap_graph(inst) : sigma_graph(inst, parse_symbol(a.symbol));
  if (a.dot == "-") {
    write_dot(ctx.out, g, {a.all_edges});
    return;
  }
  if (!a.dot.empty()) {
    std::ofstream f(a.dot);
    if (!f) throw std::invalid_argument("cannot write " + a.dot);
    write_dot(f, g, {a.all_edges});
  }
  Json weights = Json::array();
  for (std::size_t u = 0; u < g.size(); ++u) {
    Json row = Json::array();
    for (std::size_t v = 0; v < g.size(); ++v) row.push_back(g.weight(u, v));
    weights.push_back(row);
  }
  emit(ctx, Json{{"graph", a.symbol.empty() ? "overlap" : "sigma:" + a.symbol},
                 {"labels", g.labels()},
                 {"node_weights", g.node_weights()},
                 {"weights", weights},
                 {"dot", a.dot.empty() ? Json(nullptr) : Json(a.dot)}});
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Greedy shortest common superstring toolkit", "scs"};
  app.require_subcommand(1, 1);
  app.set_help_all_flag("--help-all");
  Context ctx{in, out};
  app.add_flag("--pretty", ctx.pretty, "Human-readable table instead of JSON");
  app.fallthrough();

  auto algo_check = CLI::IsMember({"greedy", "locally-greedy", "ga", "lga"});

  SolveArgs solve;
  auto* s = app.add_subcommand("solve", "Run GA or LGA with one tie-breaking rule");
  s->add_option("--algo", solve.algo)->check(algo_check);
  s->add_option("--tie", solve.tie, "lex or random:SEED");
  s->add_option("FILE", solve.file)->required();

  ExactArgs exact;
  auto* e = app.add_subcommand("exact", "Shortest superstring or minimum symbol count");
  e->add_option("FILE", exact.file)->required();
  e->add_option("--symbol", exact.symbol);

  EnumerateArgs en;
  auto* n = app.add_subcommand("enumerate", "All instantiations over every tie-breaking rule");
  n->add_option("--algo", en.algo)->check(algo_check);
  n->add_option("--budget", en.budget, "Maximum number of search states");
  n->add_flag("--list", en.list, "Include every distinct solution");
  n->add_option("FILE", en.file)->required();

  CertifyArgs cert;
  auto* c = app.add_subcommand("certify", "Pseudo-overlap properties and PATH diagnostics");
  c->add_option("FILE", cert.file)->required();
  c->add_option("--symbol", cert.symbol);
  c->add_option("--policy", cert.policy, "lex or random:SEED");

  GenArgs gen;
  auto* g = app.add_subcommand("gen", "Print an instance family");
  g->add_option("--family", gen.family)->required();
  g->add_option("--n", gen.n);

  SentinelArgs sent;
  auto* t = app.add_subcommand("sentinelize", "Force a greedy run by sentinel padding");
  t->add_option("FILE", sent.file)->required();
  t->add_option("--target", sent.target, "JSON merge log or solution");
  t->add_option("--max-m", sent.max_m);
  t->add_option("--max-candidates", sent.max_candidates);

  SearchArgs search;
  auto* r = app.add_subcommand("search", "Worst approximation ratio over an instance space");
  r->add_option("--alphabet", search.alphabet)->check(CLI::Range(1, 26));
  r->add_option("--max-strings", search.max_strings)->check(CLI::PositiveNumber);
  r->add_option("--max-len", search.max_len)->check(CLI::PositiveNumber);
  r->add_option("--algo", search.algo)->check(algo_check);
  r->add_option("--metric", search.metric)->check(CLI::IsMember({"length", "uniform"}));
  r->add_option("--lambda", search.lambda, "Verify ratio <= lambda instead of maximizing");
  r->add_option("--random", search.random_seed, "Sample instances with this seed");
  r->add_option("--samples", search.samples);
  r->add_option("--instance", search.files, "Search exactly these instance files");
  r->add_option("--jobs", search.jobs, "Worker threads (default $SCS_JOBS or 1)");
  r->add_option("--budget", search.budget, "Enumeration state budget per instance");
  r->add_option("--checkpoint", search.checkpoint);
  r->add_option("--checkpoint-every", search.checkpoint_every);
  r->add_flag("--tsv", search.tsv, "Stream per-instance TSV rows instead of JSON");

  GraphArgs graph;
  auto* h = app.add_subcommand("graph", "Overlap or symbol graph, optionally as DOT");
  h->add_option("--dot", graph.dot, "DOT output path, - for stdout");
  h->add_option("--symbol", graph.symbol);
  h->add_flag("--all-edges", graph.all_edges);
  h->add_option("FILE", graph.file)->required();

  auto fail = [&](const std::string& kind, const std::string& message, int code) {
    err << error_json(kind, message, code).dump() << '\n';
    return code;
  };

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& ex) {
    return fail("usage", ex.what(), kUsage);
  }

  try {
    if (s->parsed()) cmd_solve(ctx, solve);
    if (e->parsed()) cmd_exact(ctx, exact);
    if (n->parsed()) cmd_enumerate(ctx, en);
    if (c->parsed()) cmd_certify(ctx, cert);
    if (g->parsed()) cmd_gen(ctx, gen);
    if (t->parsed()) cmd_sentinelize(ctx, sent);
    if (r->parsed()) cmd_search(ctx, search);
    if (h->parsed()) cmd_graph(ctx, graph);
  } catch (const VerificationFailure& ex) {
    return fail("verification", ex.what(), kVerificationFailed);
  } catch (const NotFoundError& ex) {
    return fail("not_found", ex.what(), kVerificationFailed);
  } catch (const CapacityError& ex) {
    return fail("capacity", ex.what(), kCapacity);
  } catch (const Json::exception& ex) {
    return fail("usage", std::string("malformed JSON: ") + ex.what(), kUsage);
  } catch (const std::invalid_argument& ex) {
    return fail("usage", ex.what(), kUsage);
  } catch (const std::exception& ex) {
    return fail("internal", ex.what(), kUsage);
  }
  out.flush();
  return kOk;
}

}  // namespace scs::cli
