#pragma once

#include <boost/rational.hpp>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "scs/solvers.hpp"
#include "scs/strings.hpp"

namespace scs {

using Ratio = boost::rational<std::int64_t>;

std::string to_string(const Ratio& r);
Ratio parse_ratio(const std::string& text);  // "p/q" or "p"

struct SearchSpace {
  enum class Mode { exhaustive, random, fixed };

  std::size_t alphabet_size = 2;
  std::size_t max_strings = 3;
  std::size_t max_len = 3;
  Mode mode = Mode::exhaustive;
  std::uint64_t seed = 0;      // random mode
  std::size_t samples = 0;     // random mode
  std::vector<Instance> fixed;  // fixed mode

  static SearchSpace exhaustive(std::size_t alphabet, std::size_t strings, std::size_t len);
  static SearchSpace random(std::size_t alphabet, std::size_t strings, std::size_t len,
                            std::uint64_t seed, std::size_t samples);
  static SearchSpace of(std::vector<Instance> instances);
};

// Every substring-free instance of the exhaustive space, in canonical order:
// strings ranked by length then lexicographically, instances as increasing
// rank sequences, each visited once.
std::vector<Instance> enumerate_space(const SearchSpace& space);
// Instance with canonical index i of a random or fixed space.
std::vector<Instance> materialize(const SearchSpace& space);

enum class Metric { length, uniform };

struct Evaluation {
  Ratio ratio{0};
  std::optional<Sym> symbol;      // uniform metric only
  std::optional<Solution> solution;
  bool complete = true;           // every instantiation enumerated
  std::optional<Sym> zero_optimum;  // symbol with optimum 0 but positive algorithm count
};

// Worst instantiation of `algo` on one instance under `metric`.
Evaluation evaluate(const Instance& inst, Algorithm algo, Metric metric,
                    std::size_t enumeration_budget = 1'000'000);

struct RatioReport {
  Ratio best_ratio{0};
  std::optional<Instance> witness_instance;
  std::optional<Solution> witness_solution;
  std::optional<std::size_t> witness_index;
  Metric metric = Metric::length;
  std::optional<Sym> symbol;
  std::size_t instances_scanned = 0;
  bool exhausted = true;  // whole space scanned and every enumeration complete
  // First instance where an optimum of 0 met a positive count; never folded
  // into best_ratio.
  std::optional<Instance> zero_optimum_instance;
  std::optional<Sym> zero_optimum_symbol;
};

struct SearchOptions {
  std::size_t jobs = 1;
  std::size_t enumeration_budget = 1'000'000;
  std::string checkpoint_path;      // empty: no checkpointing
  std::size_t checkpoint_every = 0;  // instances per batch; 0 picks a default
  std::ostream* tsv = nullptr;       // per-instance rows, canonical order
};

RatioReport worst_ratio(const SearchSpace& space, Algorithm algo, Metric metric,
                        const SearchOptions& options = {});

struct BoundVerdict {
  bool pass = true;
  std::size_t instances_scanned = 0;
  std::optional<Instance> counterexample;
  std::optional<Solution> counterexample_solution;
  std::optional<std::size_t> counterexample_index;
  Ratio ratio{0};
  std::optional<Sym> symbol;
  bool zero_optimum = false;  // counterexample has optimum 0 for `symbol`
};

// Stops at the first instance (in canonical order) whose worst instantiation
// exceeds lambda.
BoundVerdict verify_bound(const SearchSpace& space, Algorithm algo, Metric metric,
                          const Ratio& lambda, const SearchOptions& options = {});

}  // namespace scs
