// Build the edge flip graph of a convex hexagon, print its size (the Catalan
// number C4 = 14), and export it as DOT for graphviz.

#include <iostream>

#include "fliplab/export.hpp"
#include "fliplab/generators.hpp"

int main() {
  using namespace fliplab;
  PointSet ps = convex_gon(6);
  FlipGraph g = build_edge_flip_graph(ps, 10);
  std::cerr << "triangulations: " << g.nodes.size()
            << ", flips: " << g.edge_count()
            << ", connectivity: " << vertex_connectivity(to_simple_graph(g))
            << "\n";
  std::cout << export_graph(g, ExportFormat::Dot);
}
