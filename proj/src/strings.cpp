#include "scs/strings.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <unordered_set>

#include "scs/errors.hpp"

namespace scs {
namespace {

void require_non_empty(std::string_view s, std::string_view t) {
  if (s.empty() || t.empty()) {
    throw std::invalid_argument("overlap of an empty string is undefined");
  }
}

}  // namespace

bool is_printable(Sym c) noexcept { return c >= 0x20 && c <= 0x7e; }

std::size_t overlap_length(std::string_view s, std::string_view t) {
  require_non_empty(s, t);
  // Prefix function of t + '\0' + s; its final value is the longest suffix of
  // s that is a prefix of t. The separator never occurs in printable input.
  const std::size_t total = t.size() + 1 + s.size();
  auto at = [&](std::size_t i) -> char {
    if (i < t.size()) return t[i];
    if (i == t.size()) return '\0';
    return s[i - t.size() - 1];
  };
  std::vector<std::size_t> border(total, 0);
  for (std::size_t i = 1; i < total; ++i) {
    std::size_t k = border[i - 1];
    while (k > 0 && at(i) != at(k)) k = border[k - 1];
    if (at(i) == at(k)) ++k;
    border[i] = k;
  }
  // Both remainders must stay non-empty, so walk down the border chain.
  const std::size_t limit = std::min(s.size(), t.size());
  std::size_t k = border[total - 1];
  while (k >= limit) k = border[k - 1];
  return k;
}

OverlapSplit split(std::string_view s, std::string_view t) {
  const std::size_t k = overlap_length(s, t);
  return OverlapSplit{std::string(s.substr(0, s.size() - k)),
                      std::string(t.substr(0, k)), std::string(t.substr(k))};
}

std::string merge(std::string_view s, std::string_view t) {
  const std::size_t k = overlap_length(s, t);
  std::string out(s);
  out.append(t.substr(k));
  return out;
}

std::size_t count_occurrences(std::string_view s, Sym p) noexcept {
  return static_cast<std::size_t>(std::count(s.begin(), s.end(), p));
}

Instance::Instance(std::vector<std::string> strings) : strings_(std::move(strings)) {
  for (const auto& s : strings_) alphabet_ += s;
  std::sort(alphabet_.begin(), alphabet_.end());
  alphabet_.erase(std::unique(alphabet_.begin(), alphabet_.end()), alphabet_.end());
}

std::size_t Instance::total_length() const noexcept {
  std::size_t total = 0;
  for (const auto& s : strings_) total += s.size();
  return total;
}

namespace {

void validate_symbols(std::string_view s, const NormalizeOptions& options) {
  if (s.empty()) throw std::invalid_argument("instance strings must be non-empty");
  for (char c : s) {
    if (!is_printable(c)) {
      throw std::invalid_argument("instance strings must be printable ASCII");
    }
    if (c == kSentinel && !options.allow_sentinel) {
      throw std::invalid_argument("the sentinel symbol '$' is reserved");
    }
  }
}

}  // namespace

Instance Instance::from_strings(std::vector<std::string> strings, NormalizeOptions options) {
  if (strings.empty()) throw EmptyInstanceError("instance has no strings");
  for (const auto& s : strings) validate_symbols(s, options);
  for (std::size_t i = 0; i < strings.size(); ++i) {
    for (std::size_t j = 0; j < strings.size(); ++j) {
      if (i != j && strings[j].find(strings[i]) != std::string::npos) {
        throw std::invalid_argument("instance is not substring-free: '" + strings[i] +
                                    "' occurs in '" + strings[j] + "'");
      }
    }
  }
  return Instance(std::move(strings));
}

Instance normalize(std::span<const std::string> raw, NormalizeOptions options) {
  for (const auto& s : raw) validate_symbols(s, options);
  std::vector<std::string> unique;
  std::unordered_set<std::string> seen;
  for (const auto& s : raw) {
    if (seen.insert(s).second) unique.push_back(s);
  }
  std::vector<std::string> kept;
  for (std::size_t i = 0; i < unique.size(); ++i) {
    bool contained = false;
    for (std::size_t j = 0; j < unique.size() && !contained; ++j) {
      contained = i != j && unique[j].size() > unique[i].size() &&
                  unique[j].find(unique[i]) != std::string::npos;
    }
    if (!contained) kept.push_back(unique[i]);
  }
  if (kept.empty()) throw EmptyInstanceError("instance has no strings");
  return Instance::from_strings(std::move(kept), options);
}

bool is_permutation_of(std::span<const std::size_t> perm, std::size_t n) noexcept {
  if (perm.size() != n) return false;
  std::vector<bool> hit(n, false);
  for (std::size_t i : perm) {
    if (i >= n || hit[i]) return false;
    hit[i] = true;
  }
  return true;
}

std::string superstring_of_permutation(const Instance& inst,
                                       std::span<const std::size_t> perm) {
  if (!is_permutation_of(perm, inst.size())) {
    throw std::invalid_argument("order is not a permutation of the instance indices");
  }
  std::string out = inst[perm[0]];
  for (std::size_t k = 1; k < perm.size(); ++k) {
    const std::string& next = inst[perm[k]];
    out.append(next, overlap_length(inst[perm[k - 1]], next));
  }
  return out;
}

}  // namespace scs
