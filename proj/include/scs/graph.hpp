#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "scs/strings.hpp"

namespace scs {

using Weight = std::uint64_t;
using Length = std::int64_t;

struct EdgeRef {
  std::size_t tail = 0;
  std::size_t head = 0;
  Weight weight = 0;

  friend bool operator==(const EdgeRef&, const EdgeRef&) = default;
};

// Complete digraph with self-loops, node weights |v| and edge weights w(u,v).
//
// An optional rank matrix refines the edge order: dominance between edges is
// decided on the pair (weight, rank) compared lexicographically. Per-symbol
// graphs store the full overlap lengths there, which is what keeps their
// greedy orders consistent with the string-level algorithms.
class WeightedDigraph {
 public:
  WeightedDigraph(std::vector<Weight> node_weights, std::vector<Weight> edge_weights,
                  std::vector<std::string> labels = {});

  WeightedDigraph with_rank(std::vector<Weight> rank) const;

  std::size_t size() const noexcept { return node_weights_.size(); }
  Weight node_weight(std::size_t v) const { return node_weights_[v]; }
  Weight weight(std::size_t u, std::size_t v) const { return edge_weights_[u * size() + v]; }
  EdgeRef edge(std::size_t u, std::size_t v) const { return {u, v, weight(u, v)}; }

  bool has_rank() const noexcept { return !rank_.empty(); }
  Weight rank(std::size_t u, std::size_t v) const {
    return rank_.empty() ? 0 : rank_[u * size() + v];
  }
  std::pair<Weight, Weight> key(std::size_t u, std::size_t v) const {
    return {weight(u, v), rank(u, v)};
  }

  const std::vector<Weight>& node_weights() const noexcept { return node_weights_; }
  const std::vector<Weight>& edge_weights() const noexcept { return edge_weights_; }
  const std::vector<Weight>& rank_weights() const noexcept { return rank_; }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  std::string label(std::size_t v) const;

  Weight total_node_weight() const noexcept;

 private:
  std::vector<Weight> node_weights_;
  std::vector<Weight> edge_weights_;
  std::vector<Weight> rank_;
  std::vector<std::string> labels_;
};

// True when a shares its tail or head with b and has a larger (weight, rank) key.
bool strictly_dominates(const WeightedDigraph& g, const EdgeRef& a, const EdgeRef& b);
bool dominates(const WeightedDigraph& g, const EdgeRef& a, const EdgeRef& b);

// w(s_i, s_j) = |ov(s_i, s_j)|, node weight |s_i|.
WeightedDigraph overlap_graph(const Instance& inst);

// Occurrence counts of p in the strings and their overlaps; ranks are the
// overlap lengths.
WeightedDigraph sigma_graph(const Instance& inst, Sym p);

Weight subgraph_weight(const WeightedDigraph& g, std::span<const EdgeRef> edges);

// Sum of node weights over `nodes` minus the edge weights; every edge must
// have both endpoints in `nodes`.
Length subgraph_length(const WeightedDigraph& g, std::span<const EdgeRef> edges,
                       std::span<const std::size_t> nodes);

// A bijection successor[v] describing a set of disjoint directed cycles.
class CycleCover {
 public:
  explicit CycleCover(std::vector<std::size_t> successor);

  std::size_t size() const noexcept { return successor_.size(); }
  std::size_t successor(std::size_t v) const { return successor_[v]; }
  const std::vector<std::size_t>& successors() const noexcept { return successor_; }

  // Orbits of the successor map, each starting at its smallest node.
  std::vector<std::vector<std::size_t>> cycles() const;
  std::vector<EdgeRef> edges(const WeightedDigraph& g) const;

  friend bool operator==(const CycleCover&, const CycleCover&) = default;

 private:
  std::vector<std::size_t> successor_;
};

struct HamPath {
  std::vector<std::size_t> order;

  std::vector<EdgeRef> edges(const WeightedDigraph& g) const;
  friend bool operator==(const HamPath&, const HamPath&) = default;
};

Weight cover_weight(const WeightedDigraph& g, const CycleCover& cover);
Length cover_length(const WeightedDigraph& g, const CycleCover& cover);
// ||C|| of one cycle given as consecutive nodes.
Length cycle_length(const WeightedDigraph& g, std::span<const std::size_t> cycle);
Weight path_weight(const WeightedDigraph& g, const HamPath& path);
Length path_length(const WeightedDigraph& g, const HamPath& path);

// |C|_p: occurrences of p in the prefix parts pref(v_i, v_{i+1}) around the cycle.
std::size_t cycle_length_sigma(const Instance& inst, std::span<const std::size_t> cycle,
                               Sym p);

// Exact maximum cycle cover weight by dynamic programming over subsets.
// Throws CapacityError past 20 nodes.
Weight max_cycle_cover_weight(const WeightedDigraph& g);

enum class Property { p1, p2, p3, p4 };

struct PropertyCheck {
  bool holds = true;
  // Nodes of the first violation: (u,v) for P1, (u,v,w) for P2,
  // (u,v,u',v') for P3, (c1,c2) for P4.
  std::vector<std::size_t> witness;
};

struct PropertyReport {
  PropertyCheck p1;
  PropertyCheck p2;
  PropertyCheck p3;
  PropertyCheck p4;
  // P4 held with strict inequality everywhere; otherwise the first tight pair.
  bool p4_strict = true;
  std::vector<std::size_t> p4_tight_witness;

  bool all_hold() const noexcept { return p1.holds && p2.holds && p3.holds && p4.holds; }
};

// Checks the four pseudo-overlap properties. `max_cover` must be a maximum
// weight cycle cover of g; for graphs up to 8 nodes this is verified.
PropertyReport check_properties(const WeightedDigraph& g, const CycleCover& max_cover);

// Re-evaluates a witness; true when it exhibits a violation of `property`.
bool is_violation(const WeightedDigraph& g, const CycleCover& max_cover, Property property,
                  std::span<const std::size_t> witness);

}  // namespace scs
