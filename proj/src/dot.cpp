#include "scs/dot.hpp"

#include <ostream>
#include <string>

namespace scs {
namespace {

std::string quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + '"';
}

}  // namespace

void write_dot(std::ostream& os, const WeightedDigraph& g, const DotOptions& options) {
  os << "digraph overlap {\n  node [shape=box];\n";
  for (std::size_t v = 0; v < g.size(); ++v) {
    os << "  n" << v << " [label=" << quote(g.label(v) + " (" + std::to_string(g.node_weight(v)) + ")")
       << "];\n";
  }
  for (std::size_t u = 0; u < g.size(); ++u) {
    for (std::size_t v = 0; v < g.size(); ++v) {
      Weight w = g.weight(u, v);
      if (w == 0 && !options.all_edges) continue;
      os << "  n" << u << " -> n" << v;
      if (w == 0) {
        os << " [style=dashed, penwidth=0.5];\n";
      } else {
        os << " [label=\"" << w << "\", penwidth=" << 1 + w << "];\n";
      }
    }
  }
  os << "}\n";
}

}  // namespace scs
