#include <algorithm>
#include <bit>
#include <cstdint>
#include <limits>
#include <string>

#include "scs/errors.hpp"
#include "scs/solvers.hpp"

namespace scs {
namespace {

// Held-Karp over (subset, last node). Unreached states hold -1.
template <typename Value>
HamiltonianOptimum held_karp(const WeightedDigraph& g) {
  const std::size_t n = g.size();
  const std::size_t full = std::size_t{1} << n;
  std::vector<Value> best(full * n, Value{-1});
  auto at = [&](std::size_t mask, std::size_t last) -> Value& { return best[mask * n + last]; };
  for (std::size_t v = 0; v < n; ++v) at(std::size_t{1} << v, v) = 0;
  for (std::size_t mask = 1; mask < full; ++mask) {
    for (std::size_t last = 0; last < n; ++last) {
      const Value here = at(mask, last);
      if (here < 0) continue;
      for (std::size_t next = 0; next < n; ++next) {
        const std::size_t bit = std::size_t{1} << next;
        if (mask & bit) continue;
        const Value w = here + static_cast<Value>(g.weight(last, next));
        Value& slot = at(mask | bit, next);
        if (w > slot) slot = w;
      }
    }
  }
  std::size_t last = 0;
  for (std::size_t v = 1; v < n; ++v) {
    if (at(full - 1, v) > at(full - 1, last)) last = v;
  }
  HamiltonianOptimum opt;
  opt.weight = static_cast<Weight>(at(full - 1, last));
  std::vector<std::size_t> reversed{last};
  std::size_t mask = full - 1;
  while (std::popcount(mask) > 1) {
    const Value target = at(mask, last);
    const std::size_t rest = mask & ~(std::size_t{1} << last);
    for (std::size_t prev = 0; prev < n; ++prev) {
      if (!(rest & (std::size_t{1} << prev)) || at(rest, prev) < 0) continue;
      if (at(rest, prev) + static_cast<Value>(g.weight(prev, last)) == target) {
        reversed.push_back(prev);
        last = prev;
        mask = rest;
        break;
      }
    }
  }
  opt.order.assign(reversed.rbegin(), reversed.rend());
  return opt;
}

}  // namespace

HamiltonianOptimum max_weight_hamiltonian_path(const WeightedDigraph& g, std::size_t cap) {
  if (g.size() > cap) {
    throw CapacityError("exact Hamiltonian path supports at most " + std::to_string(cap) +
                        " nodes");
  }
  Weight largest = 0;
  for (Weight w : g.edge_weights()) largest = std::max(largest, w);
  if (largest * g.size() < static_cast<Weight>(std::numeric_limits<std::int32_t>::max())) {
    return held_karp<std::int32_t>(g);
  }
  return held_karp<std::int64_t>(g);
}

Length shortest_hamiltonian_path_length(const WeightedDigraph& g, std::size_t cap) {
  return static_cast<Length>(g.total_node_weight()) -
         static_cast<Length>(max_weight_hamiltonian_path(g, cap).weight);
}

Solution exact_scs(const Instance& inst) {
  auto opt = max_weight_hamiltonian_path(overlap_graph(inst));
  return make_solution(inst, std::move(opt.order));
}

SigmaOptimum exact_sigma(const Instance& inst, Sym p) {
  const WeightedDigraph g = sigma_graph(inst, p);
  auto opt = max_weight_hamiltonian_path(g);
  return {static_cast<std::size_t>(g.total_node_weight() - opt.weight), std::move(opt.order)};
}

}  // namespace scs
