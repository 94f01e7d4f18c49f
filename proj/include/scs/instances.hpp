#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "scs/solvers.hpp"
#include "scs/strings.hpp"

namespace scs {

enum class Family { intro, lga_pair, lga3, lga3_ext, uniform25, fig1, fig2 };

struct FamilySpec {
  Family family = Family::intro;
  std::size_t n = 0;  // ignored by the fixed families
};

std::string_view family_name(Family f);
Family parse_family(std::string_view name);
bool is_parametric(Family f);

// {ab^n, b^(n+1), b^n c}                          intro
// {ab^n, b^n a}                                   lga_pair
// {ab^n, b^(n+1), b^n c, b^(n-1) c^2}             lga3
// {ab^n, b^(n+1), b^n c, b^(n-1) c^2, b^(n-2) c^3} lga3_ext (n >= 2)
// plus the fixed sets uniform25, fig1 and fig2.
Instance gen_family(const FamilySpec& spec);

// s'_i = $^(m - alpha_i) c_1 $^m c_2 ... $^m c_|s_i| $^beta_i
struct SentinelParams {
  std::size_t m = 1;
  std::vector<std::size_t> alphas;
  std::vector<std::size_t> betas;
  Sym sentinel = kSentinel;

  friend bool operator==(const SentinelParams&, const SentinelParams&) = default;
};

Instance sentinelize(const Instance& inst, const SentinelParams& params);

// True when every greedy step with a positive maximum overlap has exactly one
// maximizing ordered pair.
bool is_greedy_forced(const Instance& inst);

struct SentinelSearchOptions {
  std::size_t max_m = 0;  // 0 means 4 n^2
  std::uint64_t max_candidates = 20'000'000;
};

// Smallest m, then lexicographically smallest (alphas, betas), for which the
// transformed instance is greedy-forced and its merges with a non-empty
// overlap are, index for index, the non-trivial merges of `target`.
// Throws NotFoundError when the budget runs out.
SentinelParams find_sentinel_params(const Instance& inst, std::span<const MergeStep> target,
                                    const SentinelSearchOptions& options = {});

// Checks the acceptance condition used by find_sentinel_params.
bool replicates_target(const Instance& transformed, Sym sentinel,
                       std::span<const MergeStep> target);

// Deterministic per seed: `count` strings of uniform length 1..max_len over the
// first `alphabet_size` lowercase letters, then normalized.
Instance random_instance(std::uint64_t seed, std::size_t count, std::size_t max_len,
                         std::size_t alphabet_size);

}  // namespace scs
