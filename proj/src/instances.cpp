#include "scs/instances.hpp"

#include <random>
#include <stdexcept>
#include <string>

namespace scs {
namespace {

constexpr std::pair<Family, std::string_view> kNames[] = {
    {Family::intro, "intro"},         {Family::lga_pair, "lga_pair"},
    {Family::lga3, "lga3"},           {Family::lga3_ext, "lga3_ext"},
    {Family::uniform25, "uniform25"}, {Family::fig1, "fig1"},
    {Family::fig2, "fig2"}};

std::string rep(char c, std::size_t k) { return std::string(k, c); }

}  // namespace

std::string_view family_name(Family f) {
  for (const auto& [family, name] : kNames) {
    if (family == f) return name;
  }
  return "unknown";
}

Family parse_family(std::string_view name) {
  for (const auto& [family, n] : kNames) {
    if (n == name) return family;
  }
  throw std::invalid_argument("unknown family: " + std::string(name));
}

bool is_parametric(Family f) {
  return f == Family::intro || f == Family::lga_pair || f == Family::lga3 ||
         f == Family::lga3_ext;
}

Instance gen_family(const FamilySpec& spec) {
  const std::size_t n = spec.n;
  if (is_parametric(spec.family) && n == 0) {
    throw std::invalid_argument("family parameter n must be at least 1");
  }
  std::vector<std::string> s;
  switch (spec.family) {
    case Family::intro:
      s = {"a" + rep('b', n), rep('b', n + 1), rep('b', n) + "c"};
      break;
    case Family::lga_pair:
      s = {"a" + rep('b', n), rep('b', n) + "a"};
      break;
    case Family::lga3:
      s = {"a" + rep('b', n), rep('b', n + 1), rep('b', n) + "c", rep('b', n - 1) + "cc"};
      break;
    case Family::lga3_ext:
      if (n < 2) throw std::invalid_argument("lga3_ext needs n >= 2");
      s = {"a" + rep('b', n), rep('b', n + 1), rep('b', n) + "c", rep('b', n - 1) + "cc",
           rep('b', n - 2) + "ccc"};
      break;
    case Family::uniform25:
      s = {"aaaab", "aaabaa", "aabaaba", "baabaa", "abaaaa"};
      break;
    case Family::fig1:
      s = {"baacabbcaacb", "bcaacbacaaabca"};
      break;
    case Family::fig2:
      s = {"ABE", "DAB", "DFA", "ACB", "ECA", "CBD"};
      break;
  }
  return Instance::from_strings(std::move(s));
}

Instance random_instance(std::uint64_t seed, std::size_t count, std::size_t max_len,
                         std::size_t alphabet_size) {
  if (count == 0 || max_len == 0 || alphabet_size == 0 || alphabet_size > 26) {
    throw std::invalid_argument("random instance needs count, max_len >= 1 and 1..26 symbols");
  }
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> length(1, max_len);
  std::uniform_int_distribution<std::size_t> symbol(0, alphabet_size - 1);
  std::vector<std::string> raw;
  for (std::size_t i = 0; i < count; ++i) {
    std::string s(length(rng), 'a');
    for (auto& c : s) c = static_cast<char>('a' + symbol(rng));
    raw.push_back(std::move(s));
  }
  return normalize(raw);
}

}  // namespace scs
