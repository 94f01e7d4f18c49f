#pragma once

#include <cstddef>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace scs {

// A single alphabet symbol. Instances use printable ASCII only.
using Sym = char;

// Reserved padding symbol used by the sentinel transformation.
inline constexpr Sym kSentinel = '$';

bool is_printable(Sym c) noexcept;

// Decomposition s = pref + ov, t = ov + suff where ov is the longest string
// allowing both pref and suff to be non-empty.
struct OverlapSplit {
  std::string pref;
  std::string ov;
  std::string suff;

  std::size_t distance() const noexcept { return pref.size(); }
};

// Length of the maximal overlap of s followed by t. Linear time.
std::size_t overlap_length(std::string_view s, std::string_view t);

OverlapSplit split(std::string_view s, std::string_view t);

// Shortest string with prefix s and suffix t (s and t not nested).
std::string merge(std::string_view s, std::string_view t);

std::size_t count_occurrences(std::string_view s, Sym p) noexcept;

struct NormalizeOptions {
  bool allow_sentinel = false;
};

// A substring-free, duplicate-free, ordered set of non-empty strings.
class Instance {
 public:
  // Validates without modifying; throws std::invalid_argument when the
  // strings are not already substring-free.
  static Instance from_strings(std::vector<std::string> strings,
                               NormalizeOptions options = {});

  const std::vector<std::string>& strings() const noexcept { return strings_; }
  std::size_t size() const noexcept { return strings_.size(); }
  const std::string& operator[](std::size_t i) const { return strings_[i]; }

  // Sorted distinct symbols used by the strings.
  const std::string& alphabet() const noexcept { return alphabet_; }

  std::size_t total_length() const noexcept;

  friend bool operator==(const Instance&, const Instance&) = default;

 private:
  explicit Instance(std::vector<std::string> strings);

  std::vector<std::string> strings_;
  std::string alphabet_;
};

// Drops duplicates and strings contained in other strings, keeping the input
// order of survivors.
Instance normalize(std::span<const std::string> raw, NormalizeOptions options = {});

bool is_permutation_of(std::span<const std::size_t> perm, std::size_t n) noexcept;

// Left-fold merge of the instance strings in the given order.
std::string superstring_of_permutation(const Instance& inst,
                                       std::span<const std::size_t> perm);

// Text format: one string per line, '#' starts a comment line, blank lines
// are skipped. Parsing normalizes the set.
Instance parse_instance(std::istream& in, NormalizeOptions options = {});
Instance parse_instance(std::string_view text, NormalizeOptions options = {});
Instance load_instance(const std::string& path, NormalizeOptions options = {});
std::string serialize_instance(const Instance& inst);

}  // namespace scs
