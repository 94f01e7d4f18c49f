#include "scs/graph.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

#include "scs/errors.hpp"

namespace scs {

WeightedDigraph::WeightedDigraph(std::vector<Weight> node_weights,
                                 std::vector<Weight> edge_weights,
                                 std::vector<std::string> labels)
    : node_weights_(std::move(node_weights)),
      edge_weights_(std::move(edge_weights)),
      labels_(std::move(labels)) {
  const std::size_t n = node_weights_.size();
  if (n == 0) throw std::invalid_argument("graph needs at least one node");
  if (edge_weights_.size() != n * n) {
    throw std::invalid_argument("edge weight matrix must be n x n");
  }
  if (!labels_.empty() && labels_.size() != n) {
    throw std::invalid_argument("one label per node expected");
  }
}

WeightedDigraph WeightedDigraph::with_rank(std::vector<Weight> rank) const {
  if (rank.size() != edge_weights_.size()) {
    throw std::invalid_argument("rank matrix must be n x n");
  }
  WeightedDigraph g = *this;
  g.rank_ = std::move(rank);
  return g;
}

std::string WeightedDigraph::label(std::size_t v) const {
  return labels_.empty() ? "v" + std::to_string(v) : labels_[v];
}

Weight WeightedDigraph::total_node_weight() const noexcept {
  Weight total = 0;
  for (Weight w : node_weights_) total += w;
  return total;
}

bool dominates(const WeightedDigraph& g, const EdgeRef& a, const EdgeRef& b) {
  return (a.tail == b.tail || a.head == b.head) && g.key(a.tail, a.head) >= g.key(b.tail, b.head);
}

bool strictly_dominates(const WeightedDigraph& g, const EdgeRef& a, const EdgeRef& b) {
  return (a.tail == b.tail || a.head == b.head) && g.key(a.tail, a.head) > g.key(b.tail, b.head);
}

WeightedDigraph overlap_graph(const Instance& inst) {
  const std::size_t n = inst.size();
  std::vector<Weight> nodes(n);
  std::vector<Weight> edges(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    nodes[i] = inst[i].size();
    for (std::size_t j = 0; j < n; ++j) edges[i * n + j] = overlap_length(inst[i], inst[j]);
  }
  return WeightedDigraph(std::move(nodes), std::move(edges), inst.strings());
}

WeightedDigraph sigma_graph(const Instance& inst, Sym p) {
  const std::size_t n = inst.size();
  std::vector<Weight> nodes(n);
  std::vector<Weight> edges(n * n);
  std::vector<Weight> lengths(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    nodes[i] = count_occurrences(inst[i], p);
    for (std::size_t j = 0; j < n; ++j) {
      const std::size_t k = overlap_length(inst[i], inst[j]);
      lengths[i * n + j] = k;
      edges[i * n + j] = count_occurrences(std::string_view(inst[j]).substr(0, k), p);
    }
  }
  return WeightedDigraph(std::move(nodes), std::move(edges), inst.strings())
      .with_rank(std::move(lengths));
}

Weight subgraph_weight(const WeightedDigraph& g, std::span<const EdgeRef> edges) {
  Weight total = 0;
  for (const auto& e : edges) {
    if (e.tail >= g.size() || e.head >= g.size()) {
      throw std::invalid_argument("edge endpoint outside the graph");
    }
    total += g.weight(e.tail, e.head);
  }
  return total;
}

Length subgraph_length(const WeightedDigraph& g, std::span<const EdgeRef> edges,
                       std::span<const std::size_t> nodes) {
  std::vector<bool> in_set(g.size(), false);
  Length total = 0;
  for (std::size_t v : nodes) {
    if (v >= g.size()) throw std::invalid_argument("node outside the graph");
    if (in_set[v]) continue;
    in_set[v] = true;
    total += static_cast<Length>(g.node_weight(v));
  }
  for (const auto& e : edges) {
    if (e.tail >= g.size() || e.head >= g.size() || !in_set[e.tail] || !in_set[e.head]) {
      throw std::invalid_argument("edge endpoint outside the node set");
    }
  }
  return total - static_cast<Length>(subgraph_weight(g, edges));
}

CycleCover::CycleCover(std::vector<std::size_t> successor) : successor_(std::move(successor)) {
  if (!is_permutation_of(successor_, successor_.size())) {
    throw std::invalid_argument("successor map is not a bijection");
  }
}

std::vector<std::vector<std::size_t>> CycleCover::cycles() const {
  std::vector<std::vector<std::size_t>> out;
  std::vector<bool> seen(size(), false);
  for (std::size_t start = 0; start < size(); ++start) {
    if (seen[start]) continue;
    auto& cycle = out.emplace_back();
    for (std::size_t v = start; !seen[v]; v = successor_[v]) {
      seen[v] = true;
      cycle.push_back(v);
    }
  }
  return out;
}

std::vector<EdgeRef> CycleCover::edges(const WeightedDigraph& g) const {
  std::vector<EdgeRef> out;
  for (std::size_t v = 0; v < size(); ++v) out.push_back(g.edge(v, successor_[v]));
  return out;
}

std::vector<EdgeRef> HamPath::edges(const WeightedDigraph& g) const {
  std::vector<EdgeRef> out;
  for (std::size_t i = 1; i < order.size(); ++i) out.push_back(g.edge(order[i - 1], order[i]));
  return out;
}

Weight cover_weight(const WeightedDigraph& g, const CycleCover& cover) {
  return subgraph_weight(g, cover.edges(g));
}

Length cover_length(const WeightedDigraph& g, const CycleCover& cover) {
  return static_cast<Length>(g.total_node_weight()) - static_cast<Length>(cover_weight(g, cover));
}

Length cycle_length(const WeightedDigraph& g, std::span<const std::size_t> cycle) {
  Length total = 0;
  for (std::size_t i = 0; i < cycle.size(); ++i) {
    const std::size_t next = cycle[(i + 1) % cycle.size()];
    total += static_cast<Length>(g.node_weight(cycle[i])) -
             static_cast<Length>(g.weight(cycle[i], next));
  }
  return total;
}

Weight path_weight(const WeightedDigraph& g, const HamPath& path) {
  return subgraph_weight(g, path.edges(g));
}

Length path_length(const WeightedDigraph& g, const HamPath& path) {
  return subgraph_length(g, path.edges(g), path.order);
}

std::size_t cycle_length_sigma(const Instance& inst, std::span<const std::size_t> cycle, Sym p) {
  std::size_t total = 0;
  for (std::size_t i = 0; i < cycle.size(); ++i) {
    const std::string& from = inst[cycle[i]];
    const std::string& to = inst[cycle[(i + 1) % cycle.size()]];
    const std::size_t d = from.size() - overlap_length(from, to);
    total += count_occurrences(std::string_view(from).substr(0, d), p);
  }
  return total;
}

Weight max_cycle_cover_weight(const WeightedDigraph& g) {
  const std::size_t n = g.size();
  if (n > 20) throw CapacityError("cycle cover oracle supports at most 20 nodes");
  // best[mask]: tails 0..popcount(mask)-1 matched to the heads in mask.
  const std::size_t full = std::size_t{1} << n;
  std::vector<Weight> best(full, 0);
  std::vector<bool> reached(full, false);
  reached[0] = true;
  for (std::size_t mask = 0; mask < full; ++mask) {
    if (!reached[mask]) continue;
    const auto tail = static_cast<std::size_t>(std::popcount(mask));
    if (tail == n) continue;
    for (std::size_t head = 0; head < n; ++head) {
      if (mask & (std::size_t{1} << head)) continue;
      const std::size_t next = mask | (std::size_t{1} << head);
      const Weight w = best[mask] + g.weight(tail, head);
      if (!reached[next] || w > best[next]) {
        best[next] = w;
        reached[next] = true;
      }
    }
  }
  return best[full - 1];
}

}  // namespace scs
