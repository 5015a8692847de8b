// Decide regularity for every triangulation of a point set and print a
// height-function witness or a certificate of impossibility for each.

#include <iostream>

#include "fliplab/export.hpp"
#include "fliplab/generators.hpp"

int main(int argc, char** argv) {
  using namespace fliplab;
  // twisted double-gons are the smallest sets here with non-regular
  // triangulations; pass a k to try larger ones
  int k = argc > 1 ? std::atoi(argv[1]) : 3;
  PointSet ps = twisted_double_gon(k);
  FlipGraph g = build_edge_flip_graph(ps, 12);
  int regular = 0;
  for (size_t i = 0; i < g.nodes.size(); ++i) {
    RegularityResult r = is_regular_triangulation(g.nodes[i]);
    regular += r.regular;
    std::cout << "triangulation " << i << ": "
              << (r.regular ? "regular" : "NOT regular") << "\n"
              << regularity_json(r).dump(2) << "\n";
  }
  std::cout << regular << " of " << g.nodes.size() << " are regular\n";
}
