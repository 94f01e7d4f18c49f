#include <algorithm>

#include "scs/errors.hpp"
#include "scs/solvers.hpp"

namespace scs {

DiagnosticsReport analyze_trace(const WeightedDigraph& g, const PathResult& result) {
  if (g.size() > 15) throw CapacityError("trace analysis supports at most 15 nodes");
  const auto& trace = result.trace;
  const auto& order = result.path.order;
  DiagnosticsReport report;

  const auto& bad = trace.bad_back_edges;
  for (std::size_t a = 0; a < bad.size(); ++a) {
    for (std::size_t b = a + 1; b < bad.size(); ++b) {
      const Interval x = bad[a].span;
      const Interval y = bad[b].span;
      if (!(x.disjoint(y) || x.contains(y) || y.contains(x))) report.laminar_ok = false;
    }
  }

  auto starts_culprit = [&](std::size_t v) {
    return std::any_of(trace.culprits.begin(), trace.culprits.end(),
                       [&](const BackEdge& c) { return order[c.span.first] == v; });
  };
  auto ends_culprit = [&](std::size_t v) {
    return std::any_of(trace.culprits.begin(), trace.culprits.end(),
                       [&](const BackEdge& c) { return order[c.span.last] == v; });
  };
  for (const auto& b : bad) {
    const bool head_ok = trace.roles[b.edge.head] == NodeRole::left || starts_culprit(b.edge.head);
    const bool tail_ok = trace.roles[b.edge.tail] == NodeRole::right || ends_culprit(b.edge.tail);
    if (!head_ok || !tail_ok) report.placement_ok = false;
  }

  for (const auto& c : trace.culprits) {
    std::vector<std::size_t> cycle(order.begin() + static_cast<std::ptrdiff_t>(c.span.first),
                                   order.begin() + static_cast<std::ptrdiff_t>(c.span.last) + 1);
    report.w_bc += c.edge.weight;
    report.cm_length += cycle_length(g, cycle);
  }
  report.shp_length = shortest_hamiltonian_path_length(g, 15);
  report.path_length = path_length(g, result.path);
  report.main2_ok = static_cast<Length>(report.w_bc) - 2 * report.cm_length <= report.shp_length;
  return report;
}

}  // namespace scs
