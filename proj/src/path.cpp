#include <algorithm>
#include <cassert>
#include <numeric>
#include <stdexcept>

#include "scs/solvers.hpp"

namespace scs {
namespace {

class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }
  std::size_t find(std::size_t x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) { parent_[find(a)] = find(b); }

 private:
  std::vector<std::size_t> parent_;
};

constexpr std::size_t kNone = static_cast<std::size_t>(-1);

#ifndef NDEBUG
// Under a dominance respecting order a used endpoint means domination.
bool dominated_by_chosen(const WeightedDigraph& g, const EdgeRef& e,
                         const std::vector<std::size_t>& succ,
                         const std::vector<std::size_t>& pred) {
  return (succ[e.tail] != kNone && g.key(e.tail, succ[e.tail]) >= g.key(e.tail, e.head)) ||
         (pred[e.head] != kNone && g.key(pred[e.head], e.head) >= g.key(e.tail, e.head));
}
#endif

void fill_structure(const WeightedDigraph& g, const std::vector<std::size_t>& pos,
                    PathResult& result) {
  auto& trace = result.trace;
  const auto& order = result.path.order;
  const std::size_t n = g.size();

  for (const auto& r : trace.rejected) {
    if (r.reason != Rejection::cycle) continue;
    assert(pos[r.edge.head] <= pos[r.edge.tail]);
    trace.bad_back_edges.push_back({r.edge, {pos[r.edge.head], pos[r.edge.tail]}});
  }

  for (const auto& b : trace.bad_back_edges) {
    const bool innermost = std::none_of(
        trace.bad_back_edges.begin(), trace.bad_back_edges.end(),
        [&](const BackEdge& o) { return !(o.span == b.span) && b.span.contains(o.span); });
    if (innermost) trace.culprits.push_back(b);
  }
  std::sort(trace.culprits.begin(), trace.culprits.end(),
            [](const BackEdge& a, const BackEdge& b) { return a.span.first < b.span.first; });

  // Inclusion time of the path edge leaving position p.
  std::vector<std::size_t> included_at(n, kNone);
  for (std::size_t t = 0; t < trace.included.size(); ++t) {
    included_at[pos[trace.included[t].tail]] = t;
  }

  std::vector<std::size_t> cuts;  // a weak link leaves position p
  for (std::size_t c = 1; c < trace.culprits.size(); ++c) {
    const std::size_t from = trace.culprits[c - 1].span.last;
    const std::size_t to = trace.culprits[c].span.first;
    std::size_t best = from;
    for (std::size_t p = from; p < to; ++p) {
      if (included_at[p] > included_at[best]) best = p;
    }
    if (from >= to) continue;  // overlapping culprits only arise from a broken order
    cuts.push_back(best);
    trace.weak_links.push_back(g.edge(order[best], order[best + 1]));
  }

  trace.roles.assign(n, NodeRole::left);
  std::size_t start = 0;
  for (std::size_t b = 0; b <= cuts.size(); ++b) {
    const std::size_t end = b < cuts.size() ? cuts[b] : n - 1;
    trace.blocks.push_back({start, end});
    if (b < trace.culprits.size()) {
      const Interval core = trace.culprits[b].span;
      for (std::size_t p = start; p <= end; ++p) {
        trace.roles[order[p]] = p < core.first   ? NodeRole::left
                                : p <= core.last ? NodeRole::middle
                                                 : NodeRole::right;
      }
    }
    start = end + 1;
  }
}

}  // namespace

PathResult path(const WeightedDigraph& g, const OrderPolicy& policy) {
  const std::size_t n = g.size();
  if (n == 0) throw std::invalid_argument("PATH needs at least one node");
  const auto edges = policy.order(g);
  // A single node is already a Hamiltonian path; its self-loop is not scanned.
  if (n == 1) return PathResult{HamPath{{0}}, {}};
  std::vector<std::size_t> succ(n, kNone), pred(n, kNone);
  DisjointSets components(n);
  PathResult result;
  auto& trace = result.trace;

  for (const auto& e : edges) {
    if (succ[e.tail] != kNone || pred[e.head] != kNone) {
      assert(dominated_by_chosen(g, e, succ, pred));
      trace.rejected.push_back({e, Rejection::dominated});
    } else if (components.find(e.tail) == components.find(e.head)) {
      trace.rejected.push_back({e, Rejection::cycle});
    } else {
      succ[e.tail] = e.head;
      pred[e.head] = e.tail;
      components.unite(e.tail, e.head);
      trace.included.push_back(e);
    }
  }

  std::size_t v = 0;
  while (pred[v] != kNone) v = pred[v];
  std::vector<std::size_t> pos(n, kNone);
  for (; v != kNone; v = succ[v]) {
    pos[v] = result.path.order.size();
    result.path.order.push_back(v);
  }
  if (result.path.order.size() != n) throw std::logic_error("PATH did not span the graph");
  fill_structure(g, pos, result);
  return result;
}

CycleCover cyc(const WeightedDigraph& g, const OrderPolicy& policy) {
  const std::size_t n = g.size();
  std::vector<std::size_t> succ(n, kNone), pred(n, kNone);
  for (const auto& e : policy.order(g)) {
    if (succ[e.tail] != kNone || pred[e.head] != kNone) continue;
    succ[e.tail] = e.head;
    pred[e.head] = e.tail;
  }
  return CycleCover(std::move(succ));
}

}  // namespace scs
