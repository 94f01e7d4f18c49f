#include <stdexcept>

#include "scs/graph.hpp"

namespace scs {
namespace {

bool p1_violated(const WeightedDigraph& g, std::size_t u, std::size_t v) {
  return g.node_weight(u) < g.weight(u, v) || g.node_weight(u) < g.weight(v, u);
}

// |u| - w(u,v) + |v| - w(v,w) >= |u| - w(u,w), rearranged to stay unsigned.
bool p2_violated(const WeightedDigraph& g, std::size_t u, std::size_t v, std::size_t w) {
  return g.node_weight(v) + g.weight(u, w) < g.weight(u, v) + g.weight(v, w);
}

bool p3_violated(const WeightedDigraph& g, std::size_t u, std::size_t v, std::size_t u2,
                 std::size_t v2) {
  const auto top = g.key(u, v);
  if (top < g.key(u, v2) || top < g.key(u2, v)) return false;
  return g.weight(u, v) + g.weight(u2, v2) < g.weight(u, v2) + g.weight(u2, v);
}

struct CycleIndex {
  std::vector<std::size_t> cycle_of;
  std::vector<Length> length;
};

CycleIndex index_cycles(const WeightedDigraph& g, const CycleCover& cover) {
  CycleIndex idx{std::vector<std::size_t>(g.size()), {}};
  const auto cycles = cover.cycles();
  for (std::size_t c = 0; c < cycles.size(); ++c) {
    for (std::size_t v : cycles[c]) idx.cycle_of[v] = c;
    idx.length.push_back(cycle_length(g, cycles[c]));
  }
  return idx;
}

// Signed slack of P4 for the pair: (||C1|| + ||C2||) - w(c1,c2).
Length p4_slack(const WeightedDigraph& g, const CycleIndex& idx, std::size_t c1, std::size_t c2) {
  return idx.length[idx.cycle_of[c1]] + idx.length[idx.cycle_of[c2]] -
         static_cast<Length>(g.weight(c1, c2));
}

void require_cover(const WeightedDigraph& g, const CycleCover& cover) {
  if (cover.size() != g.size()) {
    throw std::invalid_argument("cycle cover does not match the graph size");
  }
}

}  // namespace

PropertyReport check_properties(const WeightedDigraph& g, const CycleCover& max_cover) {
  require_cover(g, max_cover);
  const std::size_t n = g.size();
  if (n <= 8 && cover_weight(g, max_cover) != max_cycle_cover_weight(g)) {
    throw std::invalid_argument("cycle cover is not of maximum weight");
  }

  PropertyReport report;
  auto fail = [](PropertyCheck& check, std::vector<std::size_t> witness) {
    if (!check.holds) return;
    check.holds = false;
    check.witness = std::move(witness);
  };

  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = 0; v < n; ++v) {
      if (p1_violated(g, u, v)) fail(report.p1, {u, v});
      for (std::size_t w = 0; w < n; ++w) {
        if (p2_violated(g, u, v, w)) fail(report.p2, {u, v, w});
      }
    }
  }

  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = 0; v < n; ++v) {
      for (std::size_t u2 = 0; u2 < n && report.p3.holds; ++u2) {
        for (std::size_t v2 = 0; v2 < n; ++v2) {
          if (p3_violated(g, u, v, u2, v2)) {
            fail(report.p3, {u, v, u2, v2});
            break;
          }
        }
      }
    }
  }

  const CycleIndex idx = index_cycles(g, max_cover);
  for (std::size_t c1 = 0; c1 < n; ++c1) {
    for (std::size_t c2 = 0; c2 < n; ++c2) {
      if (idx.cycle_of[c1] == idx.cycle_of[c2]) continue;
      const Length slack = p4_slack(g, idx, c1, c2);
      if (slack < 0) fail(report.p4, {c1, c2});
      if (slack <= 0 && report.p4_strict) {
        report.p4_strict = false;
        report.p4_tight_witness = {c1, c2};
      }
    }
  }
  return report;
}

bool is_violation(const WeightedDigraph& g, const CycleCover& max_cover, Property property,
                  std::span<const std::size_t> witness) {
  for (std::size_t v : witness) {
    if (v >= g.size()) return false;
  }
  switch (property) {
    case Property::p1:
      return witness.size() == 2 && p1_violated(g, witness[0], witness[1]);
    case Property::p2:
      return witness.size() == 3 && p2_violated(g, witness[0], witness[1], witness[2]);
    case Property::p3:
      return witness.size() == 4 &&
             p3_violated(g, witness[0], witness[1], witness[2], witness[3]);
    case Property::p4: {
      require_cover(g, max_cover);
      if (witness.size() != 2) return false;
      const CycleIndex idx = index_cycles(g, max_cover);
      return idx.cycle_of[witness[0]] != idx.cycle_of[witness[1]] &&
             p4_slack(g, idx, witness[0], witness[1]) < 0;
    }
  }
  return false;
}

}  // namespace scs
