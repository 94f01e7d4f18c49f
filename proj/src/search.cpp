#include "scs/search.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <filesystem>
#include <fstream>
#include <limits>
#include <mutex>
#include <ostream>
#include <random>
#include <stdexcept>
#include <thread>

#include "scs/errors.hpp"
#include "scs/instances.hpp"
#include "scs/json.hpp"

namespace scs {

std::string to_string(const Ratio& r) {
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

Ratio parse_ratio(const std::string& text) {
  auto parse_int = [&](const std::string& s) -> std::int64_t {
    if (s.empty() || !std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; })) {
      throw std::invalid_argument("malformed ratio: " + text);
    }
    return std::stoll(s);
  };
  if (auto slash = text.find('/'); slash != std::string::npos) {
    std::int64_t den = parse_int(text.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("zero denominator: " + text);
    return Ratio(parse_int(text.substr(0, slash)), den);
  }
  if (auto dot = text.find('.'); dot != std::string::npos) {
    std::string frac = text.substr(dot + 1);
    if (frac.size() > 15) throw std::invalid_argument("too many decimals: " + text);
    std::int64_t den = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) den *= 10;
    std::int64_t whole = dot == 0 ? 0 : parse_int(text.substr(0, dot));
    return Ratio(whole * den + (frac.empty() ? 0 : parse_int(frac)), den);
  }
  return Ratio(parse_int(text));
}

SearchSpace SearchSpace::exhaustive(std::size_t alphabet, std::size_t strings, std::size_t len) {
  SearchSpace s;
  s.alphabet_size = alphabet;
  s.max_strings = strings;
  s.max_len = len;
  s.mode = Mode::exhaustive;
  return s;
}

SearchSpace SearchSpace::random(std::size_t alphabet, std::size_t strings, std::size_t len,
                                std::uint64_t seed, std::size_t samples) {
  SearchSpace s = exhaustive(alphabet, strings, len);
  s.mode = Mode::random;
  s.seed = seed;
  s.samples = samples;
  return s;
}

SearchSpace SearchSpace::of(std::vector<Instance> instances) {
  SearchSpace s;
  s.mode = Mode::fixed;
  s.fixed = std::move(instances);
  return s;
}

namespace {

constexpr std::size_t kMaxStrings = 20;
constexpr std::size_t kDefaultBatch = 4096;

void validate(const SearchSpace& space) {
  if (space.mode == SearchSpace::Mode::fixed) {
    for (const auto& inst : space.fixed) {
      if (inst.size() > kMaxStrings) {
        throw CapacityError("instance has " + std::to_string(inst.size()) +
                            " strings; the exact oracles stop at 20");
      }
    }
    return;
  }
  if (space.alphabet_size == 0 || space.alphabet_size > 26) {
    throw std::invalid_argument("alphabet size must be within 1..26");
  }
  if (space.max_strings == 0 || space.max_len == 0) {
    throw std::invalid_argument("max_strings and max_len must be positive");
  }
  if (space.max_strings > kMaxStrings) {
    throw CapacityError("max_strings " + std::to_string(space.max_strings) +
                        " exceeds the exact oracle capacity of 20");
  }
}

// All strings of length 1..max_len in length-then-lexicographic order.
std::vector<std::string> universe(std::size_t alphabet, std::size_t max_len) {
  std::vector<std::string> out;
  std::vector<std::string> layer{""};
  for (std::size_t len = 1; len <= max_len; ++len) {
    std::vector<std::string> next;
    for (const auto& prefix : layer) {
      for (std::size_t c = 0; c < alphabet; ++c) next.push_back(prefix + char('a' + c));
    }
    out.insert(out.end(), next.begin(), next.end());
    layer = std::move(next);
  }
  return out;
}

void extend(const std::vector<std::string>& words, std::size_t max_strings, std::size_t from,
            std::vector<std::string>& chosen, std::vector<Instance>& out) {
  for (std::size_t r = from; r < words.size(); ++r) {
    // Later words are never shorter, so only earlier ones can be contained.
    const std::string& w = words[r];
    if (std::any_of(chosen.begin(), chosen.end(),
                    [&](const std::string& s) { return w.find(s) != std::string::npos; })) {
      continue;
    }
    chosen.push_back(w);
    out.push_back(Instance::from_strings(chosen));
    if (chosen.size() < max_strings) extend(words, max_strings, r + 1, chosen, out);
    chosen.pop_back();
  }
}

std::string mode_name(SearchSpace::Mode m) {
  switch (m) {
    case SearchSpace::Mode::exhaustive: return "exhaustive";
    case SearchSpace::Mode::random: return "random";
    case SearchSpace::Mode::fixed: return "fixed";
  }
  return "";
}

Json space_json(const SearchSpace& space) {
  Json j{{"mode", mode_name(space.mode)},
         {"alphabet_size", space.alphabet_size},
         {"max_strings", space.max_strings},
         {"max_len", space.max_len},
         {"seed", space.seed},
         {"samples", space.samples}};
  if (space.mode == SearchSpace::Mode::fixed) {
    Json fixed = Json::array();
    for (const auto& inst : space.fixed) fixed.push_back(to_json(inst));
    j["fixed"] = fixed;
  }
  return j;
}

// Evaluates instances [begin, end) into results[i - begin] on `jobs` threads.
// Indices past *stop_after are skipped; workers lower it when `fails` holds.
template <typename Fails>
std::vector<std::optional<Evaluation>> evaluate_batch(const std::vector<Instance>& instances,
                                                      std::size_t begin, std::size_t end,
                                                      Algorithm algo, Metric metric,
                                                      const SearchOptions& options, Fails fails) {
  std::vector<std::optional<Evaluation>> results(end - begin);
  std::atomic<std::size_t> next{begin};
  std::atomic<std::size_t> stop_after{std::numeric_limits<std::size_t>::max()};
  std::exception_ptr error;
  std::mutex error_mutex;
  auto worker = [&] {
    try {
      for (std::size_t i = next++; i < end; i = next++) {
        if (i > stop_after.load()) continue;
        Evaluation e = evaluate(instances[i], algo, metric, options.enumeration_budget);
        if (fails(e)) {
          std::size_t cur = stop_after.load();
          while (i < cur && !stop_after.compare_exchange_weak(cur, i)) {
          }
        }
        results[i - begin] = std::move(e);
      }
    } catch (...) {
      std::lock_guard lock(error_mutex);
      if (!error) error = std::current_exception();
      stop_after = 0;
      next = end;
    }
  };
  std::size_t jobs = std::clamp<std::size_t>(options.jobs, 1, std::max<std::size_t>(end - begin, 1));
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (std::size_t t = 0; t < jobs; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  if (error) std::rethrow_exception(error);
  return results;
}

void write_tsv_row(std::ostream& os, std::size_t index, const Instance& inst,
                   const Evaluation& e) {
  os << index << '\t';
  for (std::size_t i = 0; i < inst.size(); ++i) os << (i ? "," : "") << inst[i];
  os << '\t' << to_string(e.ratio) << '\t' << (e.symbol ? std::string(1, *e.symbol) : "-")
     << '\t' << (e.zero_optimum ? std::string(1, *e.zero_optimum) : "-") << '\n';
}

struct Checkpoint {
  std::size_t next_index = 0;
  Json state;
};

std::string checkpoint_kind(bool bound) { return bound ? "verify_bound" : "worst_ratio"; }

Json checkpoint_header(const SearchSpace& space, Algorithm algo, Metric metric, bool bound,
                       const std::optional<Ratio>& lambda) {
  Json j{{"format", "scs-search-checkpoint"},
         {"version", 1},
         {"kind", checkpoint_kind(bound)},
         {"space", space_json(space)},
         {"algo", algorithm_name(algo)},
         {"metric", metric_name(metric)}};
  j["lambda"] = lambda ? Json(to_string(*lambda)) : Json(nullptr);
  return j;
}

std::optional<Checkpoint> load_checkpoint(const std::string& path, const Json& header) {
  if (path.empty() || !std::filesystem::exists(path)) return std::nullopt;
  std::ifstream in(path);
  Json j = Json::parse(in);
  if (j.value("format", "") != "scs-search-checkpoint" || j.value("version", 0) != 1) {
    throw std::invalid_argument("not a version 1 search checkpoint: " + path);
  }
  for (const auto& [key, value] : header.items()) {
    if (j.at(key) != value) {
      throw std::invalid_argument("checkpoint " + path + " belongs to a different search (" +
                                  key + ")");
    }
  }
  return Checkpoint{j.at("next_index").get<std::size_t>(), j.at("state")};
}

void save_checkpoint(const std::string& path, Json header, std::size_t next_index,
                     Json state) {
  header["next_index"] = next_index;
  header["state"] = std::move(state);
  std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write checkpoint " + tmp);
    out << header.dump(2) << '\n';
  }
  std::filesystem::rename(tmp, path);
}

Json symbol_json(const std::optional<Sym>& s) {
  return s ? Json(std::string(1, *s)) : Json(nullptr);
}

std::optional<Sym> symbol_from(const Json& j) {
  if (j.is_null()) return std::nullopt;
  return j.get<std::string>().at(0);
}

std::size_t batch_size(const SearchOptions& options) {
  return options.checkpoint_every ? options.checkpoint_every : kDefaultBatch;
}

}  // namespace

std::vector<Instance> enumerate_space(const SearchSpace& space) {
  validate(space);
  if (space.mode != SearchSpace::Mode::exhaustive) return materialize(space);
  std::vector<Instance> out;
  std::vector<std::string> chosen;
  extend(universe(space.alphabet_size, space.max_len), space.max_strings, 0, chosen, out);
  return out;
}

std::vector<Instance> materialize(const SearchSpace& space) {
  validate(space);
  switch (space.mode) {
    case SearchSpace::Mode::exhaustive:
      return enumerate_space(space);
    case SearchSpace::Mode::fixed:
      return space.fixed;
    case SearchSpace::Mode::random: {
      std::vector<Instance> out;
      out.reserve(space.samples);
      for (std::size_t i = 0; i < space.samples; ++i) {
        std::seed_seq seq{static_cast<std::uint32_t>(space.seed),
                          static_cast<std::uint32_t>(space.seed >> 32),
                          static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(i >> 32)};
        std::mt19937_64 rng(seq);
        std::size_t count = 1 + rng() % space.max_strings;
        out.push_back(random_instance(rng(), count, space.max_len, space.alphabet_size));
      }
      return out;
    }
  }
  return {};
}

Evaluation evaluate(const Instance& inst, Algorithm algo, Metric metric,
                    std::size_t enumeration_budget) {
  Enumeration runs = enumerate_instantiations(inst, algo, enumeration_budget);
  Evaluation e;
  e.complete = runs.complete;
  if (runs.solutions.empty()) return e;
  if (metric == Metric::length) {
    const Solution* worst = &runs.solutions.front();
    for (const auto& s : runs.solutions) {
      if (s.length > worst->length) worst = &s;
    }
    e.ratio = Ratio(static_cast<std::int64_t>(worst->length),
                    static_cast<std::int64_t>(exact_scs(inst).length));
    e.solution = *worst;
    return e;
  }
  bool have = false;
  for (Sym p : inst.alphabet()) {
    const Solution* worst = &runs.solutions.front();
    for (const auto& s : runs.solutions) {
      if (s.per_symbol.at(p) > worst->per_symbol.at(p)) worst = &s;
    }
    std::size_t count = worst->per_symbol.at(p);
    std::size_t opt = exact_sigma(inst, p).count;
    if (opt == 0) {
      if (count > 0 && !e.zero_optimum) e.zero_optimum = p;
      continue;
    }
    Ratio r(static_cast<std::int64_t>(count), static_cast<std::int64_t>(opt));
    if (!have || r > e.ratio) {
      have = true;
      e.ratio = r;
      e.symbol = p;
      e.solution = *worst;
    }
  }
  return e;
}

RatioReport worst_ratio(const SearchSpace& space, Algorithm algo, Metric metric,
                        const SearchOptions& options) {
  const std::vector<Instance> instances = materialize(space);
  RatioReport report;
  report.metric = metric;
  std::optional<std::size_t> zero_index;

  const Json header = checkpoint_header(space, algo, metric, false, std::nullopt);
  std::size_t start = 0;
  if (auto cp = load_checkpoint(options.checkpoint_path, header)) {
    start = cp->next_index;
    const Json& st = cp->state;
    report.best_ratio = parse_ratio(st.at("best_ratio").get<std::string>());
    report.exhausted = st.at("complete").get<bool>();
    if (!st.at("witness_index").is_null()) report.witness_index = st.at("witness_index").get<std::size_t>();
    report.symbol = symbol_from(st.at("symbol"));
    if (!st.at("zero_optimum_index").is_null()) {
      zero_index = st.at("zero_optimum_index").get<std::size_t>();
      report.zero_optimum_symbol = symbol_from(st.at("zero_optimum_symbol"));
    }
  }
  if (options.tsv && start == 0) *options.tsv << "index\tinstance\tratio\tsymbol\tzero_optimum\n";

  const std::size_t step = batch_size(options);
  for (std::size_t begin = start; begin < instances.size(); begin += step) {
    std::size_t end = std::min(instances.size(), begin + step);
    auto results = evaluate_batch(instances, begin, end, algo, metric, options,
                                  [](const Evaluation&) { return false; });
    for (std::size_t i = begin; i < end; ++i) {
      const Evaluation& e = *results[i - begin];
      if (options.tsv) write_tsv_row(*options.tsv, i, instances[i], e);
      report.exhausted = report.exhausted && e.complete;
      if (e.zero_optimum && !zero_index) {
        zero_index = i;
        report.zero_optimum_symbol = e.zero_optimum;
      }
      if (e.solution && (!report.witness_index || e.ratio > report.best_ratio)) {
        report.best_ratio = e.ratio;
        report.witness_index = i;
        report.symbol = e.symbol;
      }
    }
    if (!options.checkpoint_path.empty()) {
      Json state{{"best_ratio", to_string(report.best_ratio)},
                 {"complete", report.exhausted},
                 {"witness_index", report.witness_index ? Json(*report.witness_index) : Json(nullptr)},
                 {"symbol", symbol_json(report.symbol)},
                 {"zero_optimum_index", zero_index ? Json(*zero_index) : Json(nullptr)},
                 {"zero_optimum_symbol", symbol_json(report.zero_optimum_symbol)}};
      save_checkpoint(options.checkpoint_path, header, end, std::move(state));
    }
  }
  report.instances_scanned = instances.size();
  if (report.witness_index) {
    // Witnesses are rebuilt from their index so resumed runs report them too.
    const Instance& inst = instances[*report.witness_index];
    Evaluation e = evaluate(inst, algo, metric, options.enumeration_budget);
    report.witness_instance = inst;
    report.witness_solution = e.solution;
  }
  if (zero_index) report.zero_optimum_instance = instances[*zero_index];
  return report;
}

BoundVerdict verify_bound(const SearchSpace& space, Algorithm algo, Metric metric,
                          const Ratio& lambda, const SearchOptions& options) {
  const std::vector<Instance> instances = materialize(space);
  BoundVerdict verdict;
  auto fails = [&](const Evaluation& e) { return e.zero_optimum.has_value() || e.ratio > lambda; };

  const Json header = checkpoint_header(space, algo, metric, true, lambda);
  std::size_t start = 0;
  if (auto cp = load_checkpoint(options.checkpoint_path, header)) start = cp->next_index;
  if (options.tsv && start == 0) *options.tsv << "index\tinstance\tratio\tsymbol\tzero_optimum\n";

  const std::size_t step = batch_size(options);
  for (std::size_t begin = start; begin < instances.size(); begin += step) {
    std::size_t end = std::min(instances.size(), begin + step);
    auto results = evaluate_batch(instances, begin, end, algo, metric, options, fails);
    for (std::size_t i = begin; i < end; ++i) {
      const Evaluation& e = *results[i - begin];
      if (options.tsv) write_tsv_row(*options.tsv, i, instances[i], e);
      if (!fails(e)) continue;
      verdict.pass = false;
      verdict.instances_scanned = i + 1;
      verdict.counterexample = instances[i];
      verdict.counterexample_solution = e.solution;
      verdict.counterexample_index = i;
      verdict.ratio = e.ratio;
      verdict.zero_optimum = e.zero_optimum.has_value();
      verdict.symbol = e.zero_optimum ? e.zero_optimum : e.symbol;
      return verdict;
    }
    if (!options.checkpoint_path.empty()) {
      save_checkpoint(options.checkpoint_path, header, end, Json::object());
    }
  }
  verdict.instances_scanned = instances.size();
  return verdict;
}

}  // namespace scs
