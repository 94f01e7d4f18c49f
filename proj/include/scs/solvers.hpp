#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "scs/graph.hpp"
#include "scs/strings.hpp"

namespace scs {

// ---------------------------------------------------------------------------
// Edge orders

// Chooses a dominance respecting order of all n^2 edges. Lexicographic and
// seeded-random policies sort edges by (weight, rank) descending and only
// permute edges with equal keys. Explicit orders are taken verbatim after
// checking that no edge precedes one that strictly dominates it.
class OrderPolicy {
 public:
  enum class Kind { lexicographic, seeded_random, explicit_order };

  static OrderPolicy lexicographic();
  static OrderPolicy seeded_random(std::uint64_t seed);
  static OrderPolicy explicit_order(std::vector<EdgeRef> edges);

  Kind kind() const noexcept { return kind_; }
  std::uint64_t seed() const noexcept { return seed_; }

  std::vector<EdgeRef> order(const WeightedDigraph& g) const;

 private:
  Kind kind_ = Kind::lexicographic;
  std::uint64_t seed_ = 0;
  std::vector<EdgeRef> edges_;
};

bool is_dominance_respecting(const WeightedDigraph& g, std::span<const EdgeRef> order);

// ---------------------------------------------------------------------------
// PATH and CYC

enum class Rejection { dominated, cycle };  // R1, R2

struct RejectedEdge {
  EdgeRef edge;
  Rejection reason;
};

// Positions in the final path, first <= last.
struct Interval {
  std::size_t first = 0;
  std::size_t last = 0;

  bool contains(const Interval& o) const noexcept { return first <= o.first && o.last <= last; }
  bool disjoint(const Interval& o) const noexcept { return last < o.first || o.last < first; }
  friend bool operator==(const Interval&, const Interval&) = default;
};

struct BackEdge {
  EdgeRef edge;
  Interval span;
};

enum class NodeRole { left, middle, right };

struct PathTrace {
  std::vector<EdgeRef> included;  // inclusion order
  std::vector<RejectedEdge> rejected;
  std::vector<BackEdge> bad_back_edges;  // rejection order
  std::vector<BackEdge> culprits;        // innermost bad back edges, by position
  std::vector<EdgeRef> weak_links;       // one between each pair of successive culprits
  std::vector<Interval> blocks;          // path split at the weak links
  std::vector<NodeRole> roles;           // indexed by node
};

struct PathResult {
  HamPath path;
  PathTrace trace;
};

PathResult path(const WeightedDigraph& g, const OrderPolicy& policy);
CycleCover cyc(const WeightedDigraph& g, const OrderPolicy& policy);

// Certificate for one PATH run.
struct DiagnosticsReport {
  Weight w_bc = 0;         // total weight of the culprits' bad back edges
  Length cm_length = 0;    // ||C_m||, culprits closed into cycles
  Length shp_length = 0;   // shortest Hamiltonian path
  Length path_length = 0;  // ||PATH||
  bool laminar_ok = true;
  bool placement_ok = true;  // heads left/first-of-culprit, tails right/last-of-culprit
  bool main2_ok = true;      // w_bc - 2 ||C_m|| <= ||SHP||
};

// Throws CapacityError for graphs with more than 15 nodes.
DiagnosticsReport analyze_trace(const WeightedDigraph& g, const PathResult& result);

// ---------------------------------------------------------------------------
// Exact oracles

struct HamiltonianOptimum {
  Weight weight = 0;
  std::vector<std::size_t> order;
};

// Maximum weight Hamiltonian path by Held-Karp; throws CapacityError past `cap` nodes.
HamiltonianOptimum max_weight_hamiltonian_path(const WeightedDigraph& g, std::size_t cap = 20);
Length shortest_hamiltonian_path_length(const WeightedDigraph& g, std::size_t cap = 20);

// ---------------------------------------------------------------------------
// String-level algorithms

struct MergeStep {
  std::vector<std::size_t> left;   // instance indices in left-to-right order
  std::vector<std::size_t> right;
  std::size_t overlap = 0;

  // The overlap-graph edge this merge realises.
  std::size_t tail() const { return left.back(); }
  std::size_t head() const { return right.front(); }
  friend bool operator==(const MergeStep&, const MergeStep&) = default;
};

struct Solution {
  std::vector<std::size_t> perm;
  std::string superstring;
  std::size_t length = 0;
  std::size_t compression = 0;
  std::map<Sym, std::size_t> per_symbol;
  std::vector<MergeStep> merge_log;
};

// Completes the derived fields for a permutation; when `merge_log` is empty a
// left-fold log is synthesised.
Solution make_solution(const Instance& inst, std::vector<std::size_t> perm,
                       std::vector<MergeStep> merge_log = {});

// Solution for a string an algorithm actually built.
Solution assemble_solution(const Instance& inst, std::vector<std::size_t> perm,
                           std::string text, std::vector<MergeStep> log);

// A current string during a greedy run.
struct Piece {
  std::string text;
  std::vector<std::size_t> indices;
};

struct MergeCandidate {
  std::size_t left = 0;   // positions in the current piece list
  std::size_t right = 0;
  std::size_t overlap = 0;
  const Piece* left_piece = nullptr;
  const Piece* right_piece = nullptr;
};

// Picks one of the admissible merges; candidates come ordered by the first
// instance index of the left piece, then of the right piece.
using TieBreaker = std::function<std::size_t(std::span<const MergeCandidate>)>;

namespace tie {
TieBreaker lexicographic();
TieBreaker seeded_random(std::uint64_t seed);
// Follows the given (tail, head) edges step by step; throws
// std::invalid_argument when a scripted merge is not admissible.
TieBreaker scripted(std::vector<std::pair<std::size_t, std::size_t>> edges);
// First candidate satisfying the predicate, else the first candidate.
TieBreaker prefer(std::function<bool(const MergeCandidate&)> predicate);
}  // namespace tie

enum class Algorithm { greedy, locally_greedy };

// Admissible merges of the current pieces: all pairs of maximum overlap for
// the greedy algorithm, all locally maximal pairs for the locally greedy one.
std::vector<MergeCandidate> admissible_merges(std::span<const Piece> pieces, Algorithm algo);

Solution greedy_scs(const Instance& inst, const TieBreaker& tie = tie::lexicographic());
Solution locally_greedy_scs(const Instance& inst, const TieBreaker& tie = tie::lexicographic());
Solution run_greedy(const Instance& inst, Algorithm algo, const TieBreaker& tie);

// Shortest superstring by Held-Karp (n <= 20).
Solution exact_scs(const Instance& inst);

struct SigmaOptimum {
  std::size_t count = 0;
  std::vector<std::size_t> perm;
};

// Minimum number of occurrences of p over all superstrings (n <= 20). The
// minimum over permutations is a bound for every superstring: ordering the
// strings of any superstring by first occurrence places adjacent strings
// with at most their maximal overlap, so each placed prefix segment contains
// pref(s_i, s_{i+1}).
SigmaOptimum exact_sigma(const Instance& inst, Sym p);

struct Enumeration {
  std::vector<Solution> solutions;  // one per distinct final superstring
  bool complete = true;
  std::size_t states_visited = 0;
};

// All outcomes of the algorithm over every tie-breaking rule, by depth-first
// search over admissible merges memoized on the multiset of current strings.
Enumeration enumerate_instantiations(const Instance& inst, Algorithm algo,
                                     std::size_t budget = 1'000'000);

// Edge order that makes PATH on `g` replay the given merges: merges in log
// order, every other edge after the merge that closes it, dominance respected.
// Throws std::invalid_argument when no such order exists.
std::vector<EdgeRef> replay_order(const WeightedDigraph& g, std::span<const MergeStep> log);

}  // namespace scs
