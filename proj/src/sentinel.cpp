#include <algorithm>
#include <stdexcept>
#include <string>

#include "scs/errors.hpp"
#include "scs/instances.hpp"

namespace scs {
namespace {

std::vector<std::string> transform_strings(const Instance& inst, const SentinelParams& p) {
  std::vector<std::string> out;
  out.reserve(inst.size());
  for (std::size_t i = 0; i < inst.size(); ++i) {
    const std::string& s = inst[i];
    std::string t(p.m - p.alphas[i], p.sentinel);
    for (std::size_t k = 0; k < s.size(); ++k) {
      if (k > 0) t.append(p.m, p.sentinel);
      t += s[k];
    }
    t.append(p.betas[i], p.sentinel);
    out.push_back(std::move(t));
  }
  return out;
}

void validate(const Instance& inst, const SentinelParams& p) {
  if (p.m == 0) throw std::invalid_argument("sentinel block length m must be positive");
  if (p.alphas.size() != inst.size() || p.betas.size() != inst.size()) {
    throw std::invalid_argument("one alpha and one beta per string expected");
  }
  for (std::size_t i = 0; i < inst.size(); ++i) {
    if (p.alphas[i] >= p.m || p.betas[i] >= p.m) {
      throw std::invalid_argument("alpha and beta must be smaller than m");
    }
  }
  if (!is_printable(p.sentinel)) throw std::invalid_argument("sentinel must be printable");
  if (inst.alphabet().find(p.sentinel) != std::string::npos) {
    throw std::invalid_argument("sentinel occurs in the instance");
  }
}

bool has_base_symbol(std::string_view s, Sym sentinel) {
  return std::any_of(s.begin(), s.end(), [&](char c) { return c != sentinel; });
}

std::vector<Piece> initial_pieces(std::vector<std::string> strings) {
  std::vector<Piece> pieces;
  for (std::size_t i = 0; i < strings.size(); ++i) pieces.push_back({std::move(strings[i]), {i}});
  return pieces;
}

void apply(std::vector<Piece>& pieces, const MergeCandidate& c) {
  Piece& left = pieces[c.left];
  left.text.append(pieces[c.right].text, c.overlap);
  left.indices.insert(left.indices.end(), pieces[c.right].indices.begin(),
                      pieces[c.right].indices.end());
  pieces.erase(pieces.begin() + static_cast<std::ptrdiff_t>(c.right));
}

// Greedy run over `pieces` that stops as soon as a positive step is ambiguous
// or `accept` rejects the chosen merge.
template <typename Accept>
bool forced_run(std::vector<Piece> pieces, Accept accept) {
  for (std::size_t step = 0; pieces.size() > 1; ++step) {
    const auto candidates = admissible_merges(pieces, Algorithm::greedy);
    if (candidates.front().overlap > 0 && candidates.size() > 1) return false;
    if (!accept(step, candidates.front())) return false;
    apply(pieces, candidates.front());
  }
  return true;
}

bool replicates(std::vector<std::string> strings, Sym sentinel, std::span<const MergeStep> target) {
  std::size_t nontrivial = 0;
  while (nontrivial < target.size() && target[nontrivial].overlap > 0) ++nontrivial;
  return forced_run(initial_pieces(std::move(strings)), [&](std::size_t step,
                                                            const MergeCandidate& c) {
    const std::string_view ov = std::string_view(c.right_piece->text).substr(0, c.overlap);
    if (step >= nontrivial) return !has_base_symbol(ov, sentinel);
    const MergeStep& want = target[step];
    return has_base_symbol(ov, sentinel) && c.left_piece->indices == want.left &&
           c.right_piece->indices == want.right;
  });
}

}  // namespace

Instance sentinelize(const Instance& inst, const SentinelParams& params) {
  validate(inst, params);
  Instance out = Instance::from_strings(transform_strings(inst, params), {.allow_sentinel = true});
  for (Sym c : inst.alphabet()) {
    for (std::size_t i = 0; i < inst.size(); ++i) {
      if (count_occurrences(out[i], c) != count_occurrences(inst[i], c)) {
        throw std::logic_error("sentinel transform changed a symbol count");
      }
    }
  }
  return out;
}

bool is_greedy_forced(const Instance& inst) {
  return forced_run(initial_pieces(inst.strings()),
                    [](std::size_t, const MergeCandidate&) { return true; });
}

bool replicates_target(const Instance& transformed, Sym sentinel,
                       std::span<const MergeStep> target) {
  if (target.size() + 1 != transformed.size()) return false;
  return replicates(transformed.strings(), sentinel, target);
}

SentinelParams find_sentinel_params(const Instance& inst, std::span<const MergeStep> target,
                                    const SentinelSearchOptions& options) {
  const std::size_t n = inst.size();
  if (target.size() + 1 != n) throw std::invalid_argument("target must merge every string");
  if (inst.alphabet().find(kSentinel) != std::string::npos) {
    throw std::invalid_argument("sentinel occurs in the instance");
  }
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (const auto& step : target) edges.emplace_back(step.tail(), step.head());
  const Solution replay = greedy_scs(inst, tie::scripted(edges));
  if (!std::equal(replay.merge_log.begin(), replay.merge_log.end(), target.begin(), target.end())) {
    throw std::invalid_argument("target is not a greedy merge log for this instance");
  }

  const std::size_t max_m = options.max_m == 0 ? 4 * n * n : options.max_m;
  std::uint64_t tried = 0;
  SentinelParams p;
  for (p.m = 1; p.m <= max_m; ++p.m) {
    // Odometer over (alphas, betas) with the last digit moving fastest.
    std::vector<std::size_t> digits(2 * n, 0);
    while (true) {
      if (++tried > options.max_candidates) {
        throw NotFoundError("sentinel parameter budget exhausted");
      }
      p.alphas.assign(digits.begin(), digits.begin() + static_cast<std::ptrdiff_t>(n));
      p.betas.assign(digits.begin() + static_cast<std::ptrdiff_t>(n), digits.end());
      if (replicates(transform_strings(inst, p), p.sentinel, target)) {
        validate(inst, p);
        return p;
      }
      std::size_t k = digits.size();
      while (k > 0 && ++digits[k - 1] == p.m) digits[--k] = 0;
      if (k == 0) break;
    }
  }
  throw NotFoundError("no sentinel parameters with m <= " + std::to_string(max_m));
}

}  // namespace scs
