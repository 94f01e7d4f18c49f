#pragma once

#include <iosfwd>

#include "scs/graph.hpp"

namespace scs {

struct DotOptions {
  bool all_edges = false;  // include zero-weight edges, drawn thin and dashed
};

// Graphviz digraph; node labels carry the node weight, positive edges their weight.
void write_dot(std::ostream& os, const WeightedDigraph& g, const DotOptions& options = {});

}  // namespace scs
