#include <algorithm>
#include <numeric>
#include <queue>
#include <random>
#include <stdexcept>

#include "scs/solvers.hpp"

namespace scs {

OrderPolicy OrderPolicy::lexicographic() { return OrderPolicy{}; }

OrderPolicy OrderPolicy::seeded_random(std::uint64_t seed) {
  OrderPolicy p;
  p.kind_ = Kind::seeded_random;
  p.seed_ = seed;
  return p;
}

OrderPolicy OrderPolicy::explicit_order(std::vector<EdgeRef> edges) {
  OrderPolicy p;
  p.kind_ = Kind::explicit_order;
  p.edges_ = std::move(edges);
  return p;
}

namespace {

std::vector<EdgeRef> sorted_edges(const WeightedDigraph& g) {
  std::vector<EdgeRef> edges;
  edges.reserve(g.size() * g.size());
  for (std::size_t u = 0; u < g.size(); ++u) {
    for (std::size_t v = 0; v < g.size(); ++v) edges.push_back(g.edge(u, v));
  }
  std::stable_sort(edges.begin(), edges.end(), [&](const EdgeRef& a, const EdgeRef& b) {
    return g.key(a.tail, a.head) > g.key(b.tail, b.head);
  });
  return edges;
}

}  // namespace

std::vector<EdgeRef> OrderPolicy::order(const WeightedDigraph& g) const {
  switch (kind_) {
    case Kind::lexicographic:
      return sorted_edges(g);
    case Kind::seeded_random: {
      auto edges = sorted_edges(g);
      std::mt19937_64 rng(seed_);
      auto group = edges.begin();
      while (group != edges.end()) {
        const auto key = g.key(group->tail, group->head);
        auto end = std::find_if(group, edges.end(), [&](const EdgeRef& e) {
          return g.key(e.tail, e.head) != key;
        });
        std::shuffle(group, end, rng);
        group = end;
      }
      return edges;
    }
    case Kind::explicit_order: {
      const std::size_t n = g.size();
      if (edges_.size() != n * n) {
        throw std::invalid_argument("explicit order must list all n^2 edges");
      }
      std::vector<bool> seen(n * n, false);
      std::vector<EdgeRef> edges;
      edges.reserve(edges_.size());
      for (const auto& e : edges_) {
        if (e.tail >= n || e.head >= n || seen[e.tail * n + e.head]) {
          throw std::invalid_argument("explicit order must list every edge exactly once");
        }
        seen[e.tail * n + e.head] = true;
        edges.push_back(g.edge(e.tail, e.head));
      }
      if (!is_dominance_respecting(g, edges)) {
        throw std::invalid_argument("explicit order is not dominance respecting");
      }
      return edges;
    }
  }
  return {};
}

bool is_dominance_respecting(const WeightedDigraph& g, std::span<const EdgeRef> order) {
  const std::size_t n = g.size();
  std::vector<std::size_t> pos(n * n, 0);
  for (std::size_t i = 0; i < order.size(); ++i) pos[order[i].tail * n + order[i].head] = i;
  for (const auto& a : order) {
    const std::size_t pa = pos[a.tail * n + a.head];
    for (std::size_t x = 0; x < n; ++x) {
      // Edges sharing the tail, then edges sharing the head.
      if (g.key(a.tail, x) < g.key(a.tail, a.head) && pos[a.tail * n + x] < pa) return false;
      if (g.key(x, a.head) < g.key(a.tail, a.head) && pos[x * n + a.head] < pa) return false;
    }
  }
  return true;
}

std::vector<EdgeRef> replay_order(const WeightedDigraph& g, std::span<const MergeStep> log) {
  const std::size_t n = g.size();
  if (log.size() + 1 != n) {
    throw std::invalid_argument("replay needs a complete merge log");
  }
  const std::size_t none = log.size() + 1;

  // Step after which each edge can no longer be included (0: never open).
  std::vector<std::size_t> closed_at(n * n, none);
  std::vector<bool> out_used(n, false), in_used(n, false);
  std::vector<std::size_t> component(n);
  std::iota(component.begin(), component.end(), 0);
  std::vector<std::size_t> merge_at(n * n, none);
  auto close_dead = [&](std::size_t step) {
    for (std::size_t u = 0; u < n; ++u) {
      for (std::size_t v = 0; v < n; ++v) {
        if (closed_at[u * n + v] != none || merge_at[u * n + v] != none) continue;
        if (out_used[u] || in_used[v] || component[u] == component[v]) {
          closed_at[u * n + v] = step;
        }
      }
    }
  };
  close_dead(0);
  for (std::size_t k = 0; k < log.size(); ++k) {
    const std::size_t u = log[k].tail();
    const std::size_t v = log[k].head();
    if (u >= n || v >= n || out_used[u] || in_used[v] || component[u] == component[v]) {
      throw std::invalid_argument("merge log does not describe a Hamiltonian path");
    }
    merge_at[u * n + v] = k;
    out_used[u] = true;
    in_used[v] = true;
    const std::size_t from = component[v];
    for (auto& c : component) {
      if (c == from) c = component[u];
    }
    close_dead(k + 1);
  }

  // Precedence graph over edges, then a deterministic topological sort.
  const std::size_t m = n * n;
  std::vector<std::vector<std::size_t>> after(m);
  std::vector<std::size_t> indegree(m, 0);
  auto require = [&](std::size_t before, std::size_t later) {
    after[before].push_back(later);
    ++indegree[later];
  };
  std::vector<std::size_t> merge_edge(log.size());
  for (std::size_t k = 0; k < log.size(); ++k) merge_edge[k] = log[k].tail() * n + log[k].head();
  for (std::size_t k = 1; k < log.size(); ++k) require(merge_edge[k - 1], merge_edge[k]);
  for (std::size_t e = 0; e < m; ++e) {
    if (closed_at[e] != none && closed_at[e] > 0) require(merge_edge[closed_at[e] - 1], e);
  }
  for (std::size_t a = 0; a < m; ++a) {
    const EdgeRef ea = g.edge(a / n, a % n);
    for (std::size_t b = 0; b < m; ++b) {
      if (a != b && strictly_dominates(g, ea, g.edge(b / n, b % n))) require(a, b);
    }
  }
  auto later_first = [&](std::size_t a, std::size_t b) {
    const auto ka = g.key(a / n, a % n);
    const auto kb = g.key(b / n, b % n);
    return ka != kb ? ka < kb : a > b;
  };
  std::priority_queue<std::size_t, std::vector<std::size_t>, decltype(later_first)> ready(
      later_first);
  for (std::size_t e = 0; e < m; ++e) {
    if (indegree[e] == 0) ready.push(e);
  }
  std::vector<EdgeRef> order;
  while (!ready.empty()) {
    const std::size_t e = ready.top();
    ready.pop();
    order.push_back(g.edge(e / n, e % n));
    for (std::size_t next : after[e]) {
      if (--indegree[next] == 0) ready.push(next);
    }
  }
  if (order.size() != m) {
    throw std::invalid_argument("merge log admits no dominance respecting order");
  }
  return order;
}

}  // namespace scs
