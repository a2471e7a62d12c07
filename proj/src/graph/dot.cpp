#include <sstream>

#include "conglab/graph.hpp"

namespace conglab {

std::string to_dot(const CongruenceDigraph& g) {
  std::ostringstream os;
  os << "digraph congruences {\n  node [shape=box, fontname=\"Helvetica\"];\n";
  for (std::size_t v = 0; v < g.vertex_count(); ++v) os << "  v" << v + 1 << " [label=\"" << g.mask_of(v).to_string() << "\"];\n";
  for (const auto& e : g.edges())
    os << "  v" << e.from.low_word() << " -> v" << e.to.low_word() << " [label=\"" << edge_label(e)
       << "\", style=" << (e.good ? "solid" : "dashed") << "];\n";
  os << "}\n";
  return os.str();
}

}  // namespace conglab
