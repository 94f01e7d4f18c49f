#include <algorithm>
#include <memory>
#include <random>
#include <stdexcept>
#include <string>

#include "scs/solvers.hpp"

namespace scs {
namespace {

std::vector<MergeStep> left_fold_log(const Instance& inst, const std::vector<std::size_t>& perm) {
  std::vector<MergeStep> log;
  for (std::size_t k = 1; k < perm.size(); ++k) {
    log.push_back({std::vector<std::size_t>(perm.begin(), perm.begin() + static_cast<std::ptrdiff_t>(k)),
                   {perm[k]},
                   overlap_length(inst[perm[k - 1]], inst[perm[k]])});
  }
  return log;
}

}  // namespace

Solution assemble_solution(const Instance& inst, std::vector<std::size_t> perm,
                           std::string text, std::vector<MergeStep> log) {
  Solution s;
  s.perm = std::move(perm);
  s.superstring = std::move(text);
  s.length = s.superstring.size();
  s.compression = inst.total_length() - s.length;
  for (Sym c : inst.alphabet()) s.per_symbol[c] = count_occurrences(s.superstring, c);
  s.merge_log = std::move(log);
  return s;
}

Solution make_solution(const Instance& inst, std::vector<std::size_t> perm,
                       std::vector<MergeStep> merge_log) {
  std::string text = superstring_of_permutation(inst, perm);
  if (merge_log.empty()) merge_log = left_fold_log(inst, perm);
  return assemble_solution(inst, std::move(perm), std::move(text), std::move(merge_log));
}

std::vector<MergeCandidate> admissible_merges(std::span<const Piece> pieces, Algorithm algo) {
  const std::size_t k = pieces.size();
  std::vector<std::size_t> ov(k * k, 0);
  std::size_t global = 0;
  std::vector<std::size_t> row_max(k, 0), col_max(k, 0);
  for (std::size_t a = 0; a < k; ++a) {
    for (std::size_t b = 0; b < k; ++b) {
      if (a == b) continue;
      const std::size_t o = overlap_length(pieces[a].text, pieces[b].text);
      ov[a * k + b] = o;
      global = std::max(global, o);
      row_max[a] = std::max(row_max[a], o);
      col_max[b] = std::max(col_max[b], o);
    }
  }
  std::vector<MergeCandidate> out;
  for (std::size_t a = 0; a < k; ++a) {
    for (std::size_t b = 0; b < k; ++b) {
      if (a == b) continue;
      const std::size_t o = ov[a * k + b];
      const bool ok = algo == Algorithm::greedy ? o == global
                                                : o == row_max[a] && o == col_max[b];
      if (ok) out.push_back({a, b, o, &pieces[a], &pieces[b]});
    }
  }
  std::sort(out.begin(), out.end(), [](const MergeCandidate& x, const MergeCandidate& y) {
    const auto kx = std::pair(x.left_piece->indices.front(), x.right_piece->indices.front());
    const auto ky = std::pair(y.left_piece->indices.front(), y.right_piece->indices.front());
    return kx < ky;
  });
  return out;
}

Solution run_greedy(const Instance& inst, Algorithm algo, const TieBreaker& tie) {
  std::vector<Piece> pieces;
  for (std::size_t i = 0; i < inst.size(); ++i) pieces.push_back({inst[i], {i}});
  std::vector<MergeStep> log;
  while (pieces.size() > 1) {
    const auto candidates = admissible_merges(pieces, algo);
    const std::size_t pick = tie(candidates);
    if (pick >= candidates.size()) throw std::out_of_range("tie breaker picked no candidate");
    const MergeCandidate c = candidates[pick];
    Piece merged{pieces[c.left].text + pieces[c.right].text.substr(c.overlap),
                 pieces[c.left].indices};
    merged.indices.insert(merged.indices.end(), pieces[c.right].indices.begin(),
                          pieces[c.right].indices.end());
    log.push_back({pieces[c.left].indices, pieces[c.right].indices, c.overlap});
    pieces[c.left] = std::move(merged);
    pieces.erase(pieces.begin() + static_cast<std::ptrdiff_t>(c.right));
    std::sort(pieces.begin(), pieces.end(), [](const Piece& x, const Piece& y) {
      return x.indices.front() < y.indices.front();
    });
  }
  return assemble_solution(inst, pieces[0].indices, pieces[0].text, std::move(log));
}

Solution greedy_scs(const Instance& inst, const TieBreaker& tie) {
  return run_greedy(inst, Algorithm::greedy, tie);
}

Solution locally_greedy_scs(const Instance& inst, const TieBreaker& tie) {
  return run_greedy(inst, Algorithm::locally_greedy, tie);
}

namespace tie {

TieBreaker lexicographic() {
  return [](std::span<const MergeCandidate>) -> std::size_t { return 0; };
}

TieBreaker seeded_random(std::uint64_t seed) {
  auto rng = std::make_shared<std::mt19937_64>(seed);
  return [rng](std::span<const MergeCandidate> candidates) -> std::size_t {
    std::uniform_int_distribution<std::size_t> pick(0, candidates.size() - 1);
    return pick(*rng);
  };
}

TieBreaker scripted(std::vector<std::pair<std::size_t, std::size_t>> edges) {
  auto script = std::make_shared<std::vector<std::pair<std::size_t, std::size_t>>>(std::move(edges));
  auto step = std::make_shared<std::size_t>(0);
  return [script, step](std::span<const MergeCandidate> candidates) -> std::size_t {
    if (*step >= script->size()) throw std::invalid_argument("merge script is too short");
    const auto [tail, head] = (*script)[(*step)++];
    for (std::size_t i = 0; i < candidates.size(); ++i) {
      if (candidates[i].left_piece->indices.back() == tail &&
          candidates[i].right_piece->indices.front() == head) {
        return i;
      }
    }
    throw std::invalid_argument("scripted merge (" + std::to_string(tail) + ", " +
                                std::to_string(head) + ") is not admissible");
  };
}

TieBreaker prefer(std::function<bool(const MergeCandidate&)> predicate) {
  return [predicate = std::move(predicate)](std::span<const MergeCandidate> candidates) {
    const auto it = std::find_if(candidates.begin(), candidates.end(), predicate);
    return it == candidates.end() ? std::size_t{0}
                                  : static_cast<std::size_t>(it - candidates.begin());
  };
}

}  // namespace tie
}  // namespace scs
