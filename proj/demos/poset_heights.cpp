// Walk the subdivision poset of a random point set: print each node's slack
// and height, and find a chain of perfect coarsenings from some triangulation
// up to the trivial subdivision.

#include <iostream>

#include "fliplab/generators.hpp"
#include "fliplab/regularity.hpp"
#include "fliplab/subdivision.hpp"

int main(int argc, char** argv) {
  using namespace fliplab;
  unsigned seed = argc > 1 ? std::strtoul(argv[1], nullptr, 10) : 7;
  PointSet ps = random_points(6, seed, 1000);
  Poset po = build_poset(ps, 8);
  std::cout << "nodes: " << po.nodes.size() << ", max height: " << po.height_max
            << " (slack of the trivial subdivision: "
            << slack(trivial_subdivision(ps)) << ")\n";
  for (size_t i = 0; i < po.nodes.size(); ++i)
    std::cout << "node " << i << ": slack " << po.node_slack[i] << ", height "
              << po.height[i] << ", covers "
              << po.coarsenings[i].size() << " node(s)\n";

  Triangulation t = seed_full_triangulation(ps, ps.all_mask());
  PerfectChain chain = perfect_chain_to_trivial(Subdivision{t.g}, 8);
  if (!chain.found) {
    std::cout << "no perfect chain from the seeded triangulation\n";
    return 0;
  }
  std::cout << "perfect chain of length " << chain.chain.size() - 1
            << " from a triangulation to the trivial subdivision:\n";
  for (const Subdivision& s : chain.chain)
    std::cout << "  slack " << slack(s) << ": " << canonical_key(s) << "\n";
}
