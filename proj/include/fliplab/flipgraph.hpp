#pragma once

// Flip graph enumeration (edge flips / bistellar flips), links of
// triangulations with compatibility classification, simultaneous
// flippability, and refinement subgraphs.

#include <algorithm>
#include <array>
#include <map>
#include <queue>
#include <set>
#include <string>
#include <vector>

#include "fliplab/connectivity.hpp"
#include "fliplab/subdivision.hpp"

namespace fliplab {

struct FlipGraph {
  enum class Kind { Edge, Bistellar };
  Kind kind = Kind::Edge;
  const PointSet* ps = nullptr;
  std::vector<Triangulation> nodes;  // sorted by canonical key
  std::map<std::string, int> index;
  // adjacency with the label of the flip leading to the neighbor
  std::vector<std::vector<std::pair<int, std::string>>> adj;

  int id_of(const Triangulation& t) const {
    auto it = index.find(canonical_key(t));
    return it == index.end() ? -1 : it->second;
  }
  bool adjacent(int u, int v) const {
    for (const auto& [w, lbl] : adj[u])
      if (w == v) return true;
    return false;
  }
  long long edge_count() const {
    long long tot = 0;
    for (const auto& a : adj) tot += static_cast<long long>(a.size());
    return tot / 2;
  }
};

namespace detail {

inline std::string label_of(const Edge& e) {
  return "flip " + std::to_string(e.a) + "-" + std::to_string(e.b);
}
inline std::string label_of(const FlipElement& x) { return x.label(); }

template <typename FlipRange, typename Apply>
FlipGraph build_flip_graph(const PointSet& ps, FlipGraph::Kind kind,
                           const Triangulation& seed, FlipRange flips,
                           Apply apply) {
  std::map<std::string, int> bfs_index;
  std::vector<Triangulation> bfs_nodes;
  std::vector<std::vector<std::pair<int, std::string>>> bfs_adj;
  std::queue<int> todo;
  bfs_index[canonical_key(seed)] = 0;
  bfs_nodes.push_back(seed);
  bfs_adj.emplace_back();
  todo.push(0);
  while (!todo.empty()) {
    int id = todo.front();
    todo.pop();
    Triangulation cur = bfs_nodes[id];
    for (const auto& x : flips(cur)) {
      Triangulation nxt = apply(cur, x);
      std::string key = canonical_key(nxt);
      auto [it, fresh] = bfs_index.try_emplace(key, static_cast<int>(bfs_nodes.size()));
      if (fresh) {
        bfs_nodes.push_back(std::move(nxt));
        bfs_adj.emplace_back();
        todo.push(it->second);
      }
      bfs_adj[id].emplace_back(it->second, label_of(x));
    }
  }
  // renumber by sorted canonical key for deterministic output
  FlipGraph g;
  g.kind = kind;
  g.ps = &ps;
  std::vector<int> order(bfs_nodes.size());
  for (size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    return canonical_key(bfs_nodes[a]) < canonical_key(bfs_nodes[b]);
  });
  std::vector<int> newid(bfs_nodes.size());
  for (size_t i = 0; i < order.size(); ++i) newid[order[i]] = static_cast<int>(i);
  g.nodes.resize(bfs_nodes.size());
  g.adj.resize(bfs_nodes.size());
  for (size_t i = 0; i < bfs_nodes.size(); ++i) {
    g.nodes[newid[i]] = std::move(bfs_nodes[i]);
    for (auto& [v, lbl] : bfs_adj[i]) g.adj[newid[i]].emplace_back(newid[v], lbl);
  }
  for (size_t i = 0; i < g.nodes.size(); ++i) {
    g.index[canonical_key(g.nodes[i])] = static_cast<int>(i);
    std::sort(g.adj[i].begin(), g.adj[i].end());
  }
  return g;
}

}  // namespace detail

inline FlipGraph build_edge_flip_graph(const PointSet& ps, int cap = 10) {
  if (ps.n() > cap)
    throw CapExceededError("n=" + std::to_string(ps.n()) + " exceeds cap " +
                           std::to_string(cap));
  return detail::build_flip_graph(
      ps, FlipGraph::Kind::Edge, seed_full_triangulation(ps, ps.all_mask()),
      [](const Triangulation& t) { return flippable_edges(t); },
      [](const Triangulation& t, const Edge& e) { return edge_flip(t, e); });
}

inline FlipGraph build_bistellar_flip_graph(const PointSet& ps, int cap = 8) {
  if (ps.n() > cap)
    throw CapExceededError("n=" + std::to_string(ps.n()) + " exceeds cap " +
                           std::to_string(cap));
  return detail::build_flip_graph(
      ps, FlipGraph::Kind::Bistellar, seed_full_triangulation(ps, ps.hull_mask),
      [](const Triangulation& t) { return flippable_elements(t); },
      [](const Triangulation& t, const FlipElement& x) {
        return apply_bistellar_flip(t, x);
      });
}

inline SimpleGraph to_simple_graph(const FlipGraph& g) {
  SimpleGraph s(static_cast<int>(g.nodes.size()));
  for (size_t u = 0; u < g.adj.size(); ++u)
    for (const auto& [v, lbl] : g.adj[u])
      if (static_cast<int>(u) < v) s.add_edge(static_cast<int>(u), v);
  return s;
}

// --- refinements of a subdivision -------------------------------------------

// One way to triangulate a region: the subset of its bystanders that gets
// used, plus the inserted edges (global indices; region boundary edges are
// already part of the subdivision).
struct RegionFill {
  std::uint64_t used_bystanders = 0;
  std::vector<Edge> added_edges;  // sorted
};

// All triangulation fills of one region (over all bystander subsets).
inline std::vector<RegionFill> region_fills(const PointSet& ps, const Region& r) {
  std::vector<RegionFill> out;
  const int bcount = static_cast<int>(r.bystanders.size());
  for (std::uint64_t sub = 0; sub < (std::uint64_t{1} << bcount); ++sub) {
    std::vector<int> gidx = r.boundary;
    std::uint64_t used = 0;
    for (int i = 0; i < bcount; ++i)
      if ((sub >> i) & 1) {
        gidx.push_back(r.bystanders[i]);
        used |= std::uint64_t{1} << r.bystanders[i];
      }
    std::vector<Point> pts;
    for (int gi : gidx) pts.push_back(ps[gi]);
    PointSet local = assert_general_position(pts);
    for (const Triangulation& lt :
         enumerate_triangulations_on(local, local.all_mask(), kMaxPoints)) {
      RegionFill f;
      f.used_bystanders = used;
      for (const Edge& le : inner_edges(lt.g))
        f.added_edges.emplace_back(gidx[le.a], gidx[le.b]);
      std::sort(f.added_edges.begin(), f.added_edges.end());
      out.push_back(std::move(f));
    }
  }
  return out;
}

// All triangulations refining s (elements of the refinement set of s):
// the product of independent region fills.
inline std::vector<Triangulation> refinements(const Subdivision& s) {
  auto regs = regions_of(s);
  std::uint64_t base_verts = s.g.verts;
  for (int b : s.bystanders()) base_verts &= ~(std::uint64_t{1} << b);

  std::vector<Triangulation> acc;
  acc.push_back(Triangulation{PlaneGraph{s.g.ps, base_verts, s.g.edges}});
  for (const Region& r : regs) {
    if (r.slack() == 0) continue;
    auto fills = region_fills(*s.g.ps, r);
    std::vector<Triangulation> next;
    for (const Triangulation& partial : acc)
      for (const RegionFill& f : fills) {
        Triangulation t = partial;
        t.g.verts |= f.used_bystanders;
        for (const Edge& e : f.added_edges) t.g.insert_edge(e);
        next.push_back(std::move(t));
      }
    acc = std::move(next);
  }
  return acc;
}

// --- links and compatibility -------------------------------------------------

enum class Compatibility {
  Independent,
  WeaklyIndependent,
  CompatiblePartial,
  Incompatible
};

// Orders a refinement set of a slack-2 subdivision into its 4- or 5-cycle,
// starting at `start` if provided.
inline std::vector<Triangulation> order_cycle(std::vector<Triangulation> tris,
                                              const Triangulation* start = nullptr) {
  auto adjacent = [](const Triangulation& a, const Triangulation& b) {
    // one bistellar flip apart: vertex sets equal and edge symdiff 2, or
    // vertex sets differ by one point of degree 3
    if (a.g.verts == b.g.verts) {
      std::vector<Edge> diff;
      std::set_symmetric_difference(a.g.edges.begin(), a.g.edges.end(),
                                    b.g.edges.begin(), b.g.edges.end(),
                                    std::back_inserter(diff));
      return diff.size() == 2;
    }
    std::uint64_t d = a.g.verts ^ b.g.verts;
    if (std::popcount(d) != 1) return false;
    std::vector<Edge> diff;
    std::set_symmetric_difference(a.g.edges.begin(), a.g.edges.end(),
                                  b.g.edges.begin(), b.g.edges.end(),
                                  std::back_inserter(diff));
    return diff.size() == 3;
  };
  const int m = static_cast<int>(tris.size());
  std::vector<Triangulation> cyc;
  std::vector<char> used(m, 0);
  int cur = 0;
  if (start)
    for (int i = 0; i < m; ++i)
      if (tris[i] == *start) cur = i;
  cyc.push_back(tris[cur]);
  used[cur] = 1;
  for (int step = 1; step < m; ++step) {
    int nxt = -1;
    for (int i = 0; i < m; ++i)
      if (!used[i] && adjacent(cyc.back(), tris[i])) nxt = i;
    if (nxt < 0) throw GeomError("refinement set is not a cycle");
    used[nxt] = 1;
    cyc.push_back(tris[nxt]);
  }
  if (!adjacent(cyc.back(), cyc.front()))
    throw GeomError("refinement set is not a cycle");
  return cyc;
}

// The two triangles incident to an inner edge, as sorted vertex triples.
inline std::pair<std::array<int, 3>, std::array<int, 3>> edge_triangles(
    const Triangulation& t, const Edge& e) {
  auto [w1, w2] = opposite_apexes(t, e);
  std::array<int, 3> t1{e.a, e.b, w1}, t2{e.a, e.b, w2};
  std::sort(t1.begin(), t1.end());
  std::sort(t2.begin(), t2.end());
  return {t1, t2};
}

// All coarsenings of T with slack <= 2 (closure under direct coarsenings;
// every intermediate on a chain to a slack-2 node itself has slack <= 2).
inline std::vector<Subdivision> small_slack_coarsenings(const Triangulation& t) {
  std::map<std::string, int> seen;
  std::vector<Subdivision> nodes;
  std::queue<int> todo;
  Subdivision s0 = as_subdivision(t);
  seen[canonical_key(s0)] = 0;
  nodes.push_back(std::move(s0));
  todo.push(0);
  while (!todo.empty()) {
    int id = todo.front();
    todo.pop();
    Subdivision cur = nodes[id];
    if (slack(cur) >= 2) continue;
    for (CoarseningStep& step : direct_coarsenings(cur)) {
      if (slack(step.result) > 2) continue;
      std::string key = canonical_key(step.result);
      if (!seen.contains(key)) {
        seen[key] = static_cast<int>(nodes.size());
        nodes.push_back(std::move(step.result));
        todo.push(static_cast<int>(nodes.size()) - 1);
      }
    }
  }
  return nodes;
}

struct CompatibilityResult {
  Compatibility kind;
  std::vector<Triangulation> cycle;  // witness 4-/5-cycle through T (if any)
};

enum class LinkKind { Full, Partial };

// Full-kind classification of two flippable edges: disjoint territories =
// independent (4-cycle); shared triangle with convex pentagon union =
// weakly independent (5-cycle); otherwise incompatible.
inline CompatibilityResult classify_full(const Triangulation& t, const Edge& e,
                                         const Edge& f) {
  auto [e1, e2] = edge_triangles(t, e);
  auto [f1, f2] = edge_triangles(t, f);
  bool share = (e1 == f1) || (e1 == f2) || (e2 == f1) || (e2 == f2);
  if (!share) {
    Triangulation te = edge_flip(t, e);
    Triangulation tf = edge_flip(t, f);
    Triangulation tef = edge_flip(te, f);
    return {Compatibility::Independent, {t, te, tef, tf}};
  }
  // shared triangle: weakly independent iff f stays flippable after e
  Triangulation te = edge_flip(t, e);
  bool weak = false;
  for (const Edge& g2 : flippable_edges(te)) weak |= (g2 == f);
  if (!weak) return {Compatibility::Incompatible, {}};
  Subdivision s{PlaneGraph{t.g.ps, t.g.verts, t.g.edges}};
  s.g.erase_edge(e);
  s.g.erase_edge(f);
  auto ref = refinements(s);
  return {Compatibility::WeaklyIndependent, order_cycle(std::move(ref), &t)};
}

// Partial-kind: x and y are compatible iff some slack-2 coarsening of T is
// refined by T, T[x] and T[y]; the refinement set of that coarsening is the
// witness cycle.
inline CompatibilityResult classify_partial(const Triangulation& t,
                                            const FlipElement& x,
                                            const FlipElement& y) {
  Triangulation tx = apply_bistellar_flip(t, x);
  Triangulation ty = apply_bistellar_flip(t, y);
  for (const Subdivision& s : small_slack_coarsenings(t)) {
    if (slack(s) != 2) continue;
    if (!triangulation_refines(tx, s) || !triangulation_refines(ty, s)) continue;
    return {Compatibility::CompatiblePartial,
            order_cycle(refinements(s), &t)};
  }
  return {Compatibility::Incompatible, {}};
}

inline CompatibilityResult compatibility_classify(const Triangulation& t,
                                                  const FlipElement& x,
                                                  const FlipElement& y,
                                                  LinkKind kind) {
  if (kind == LinkKind::Full) {
    if (x.kind != FlipElement::Kind::EdgeFlip ||
        y.kind != FlipElement::Kind::EdgeFlip)
      throw GeomError("full-kind compatibility is defined for edge flips");
    return classify_full(t, x.edge, y.edge);
  }
  return classify_partial(t, x, y);
}

struct Link {
  LinkKind kind;
  Triangulation center;
  std::vector<FlipElement> nodes;
  struct LinkEdge {
    int u, v;      // indices into nodes
    int weight;    // 2 or 3
    std::vector<Triangulation> cycle;  // witness through the center
  };
  std::vector<LinkEdge> edges;
};

inline Link link_of(const Triangulation& t, LinkKind kind) {
  Link link{kind, t, {}, {}};
  if (kind == LinkKind::Full) {
    for (const Edge& e : flippable_edges(t))
      link.nodes.push_back({FlipElement::Kind::EdgeFlip, e, -1});
    for (size_t i = 0; i < link.nodes.size(); ++i)
      for (size_t j = i + 1; j < link.nodes.size(); ++j) {
        auto res = classify_full(t, link.nodes[i].edge, link.nodes[j].edge);
        if (res.kind == Compatibility::Independent)
          link.edges.push_back({static_cast<int>(i), static_cast<int>(j), 2,
                                std::move(res.cycle)});
        else if (res.kind == Compatibility::WeaklyIndependent)
          link.edges.push_back({static_cast<int>(i), static_cast<int>(j), 3,
                                std::move(res.cycle)});
      }
    return link;
  }
  link.nodes = flippable_elements(t);
  // map neighbor key -> element index
  std::map<std::string, int> nb;
  for (size_t i = 0; i < link.nodes.size(); ++i)
    nb[canonical_key(apply_bistellar_flip(t, link.nodes[i]))] =
        static_cast<int>(i);
  std::set<std::pair<int, int>> seen_pairs;
  for (const Subdivision& s : small_slack_coarsenings(t)) {
    if (slack(s) != 2) continue;
    auto ref = refinements(s);
    std::vector<int> members;
    for (const Triangulation& r : ref) {
      auto it = nb.find(canonical_key(r));
      if (it != nb.end()) members.push_back(it->second);
    }
    if (members.size() != 2)
      throw GeomError("slack-2 coarsening with " +
                      std::to_string(members.size()) +
                      " neighbors of the center");
    int u = std::min(members[0], members[1]);
    int v = std::max(members[0], members[1]);
    if (!seen_pairs.insert({u, v}).second)
      throw GeomError("duplicate witness for a link edge");
    link.edges.push_back(
        {u, v, static_cast<int>(ref.size()) - 2, order_cycle(std::move(ref), &t)});
  }
  return link;
}

inline SimpleGraph link_to_simple(const Link& l) {
  SimpleGraph g(static_cast<int>(l.nodes.size()));
  for (const auto& e : l.edges) g.add_edge(e.u, e.v);
  return g;
}

// --- simultaneous flippability -----------------------------------------------

// Maximum set of pairwise independently flippable edges (exact max clique on
// the independence relation).
inline std::vector<Edge> max_simultaneously_flippable(const Triangulation& t,
                                                      int cap = 40) {
  auto fl = flippable_edges(t);
  const int m = static_cast<int>(fl.size());
  if (m > cap) throw CapExceededError("too many flippable edges");
  std::vector<std::uint64_t> compat(m, 0);
  for (int i = 0; i < m; ++i) {
    auto [a1, a2] = edge_triangles(t, fl[i]);
    for (int j = i + 1; j < m; ++j) {
      auto [b1, b2] = edge_triangles(t, fl[j]);
      bool share = (a1 == b1) || (a1 == b2) || (a2 == b1) || (a2 == b2);
      if (!share) {
        compat[i] |= std::uint64_t{1} << j;
        compat[j] |= std::uint64_t{1} << i;
      }
    }
  }
  std::uint64_t best = 0;
  // branch and bound over candidate sets
  auto rec = [&](auto&& self, std::uint64_t cur, std::uint64_t cand) -> void {
    if (std::popcount(cur) + std::popcount(cand) <= std::popcount(best)) return;
    if (cand == 0) {
      if (std::popcount(cur) > std::popcount(best)) best = cur;
      return;
    }
    int v = std::countr_zero(cand);
    std::uint64_t bit = std::uint64_t{1} << v;
    self(self, cur | bit, cand & compat[v] & ~bit);
    self(self, cur, cand & ~bit);
  };
  rec(rec, 0, m == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << m) - 1);
  std::vector<Edge> out;
  for (int i = 0; i < m; ++i)
    if ((best >> i) & 1) out.push_back(fl[i]);
  return out;
}

// --- refinement subgraphs ------------------------------------------------------

struct InducedSubgraph {
  std::vector<int> node_ids;  // ids in the flip graph
  SimpleGraph graph;
};

inline InducedSubgraph refinement_subgraph(const FlipGraph& g,
                                           const Subdivision& s) {
  InducedSubgraph out;
  std::map<int, int> local;
  for (size_t i = 0; i < g.nodes.size(); ++i)
    if (triangulation_refines(g.nodes[i], s)) {
      local[static_cast<int>(i)] = static_cast<int>(out.node_ids.size());
      out.node_ids.push_back(static_cast<int>(i));
    }
  out.graph = SimpleGraph(static_cast<int>(out.node_ids.size()));
  for (int u : out.node_ids)
    for (const auto& [v, lbl] : g.adj[u])
      if (u < v && local.contains(v)) out.graph.add_edge(local[u], local[v]);
  return out;
}

// Checks that the refinement subgraph of a full subdivision in the edge flip
// graph is the Cartesian product of its regions' polygon flip graphs: nodes
// correspond to tuples of region fills, and adjacency = one coordinate
// changes by a single edge flip.
inline bool verify_product_structure(const FlipGraph& g, const Subdivision& s) {
  if (g.kind != FlipGraph::Kind::Edge || !s.full()) return false;
  auto regs = regions_of(s);
  std::vector<std::vector<RegionFill>> factors;
  for (const Region& r : regs)
    if (r.slack() > 0) factors.push_back(region_fills(*s.g.ps, r));

  // factor adjacency: two fills one edge flip apart
  auto fill_adjacent = [](const RegionFill& a, const RegionFill& b) {
    std::vector<Edge> diff;
    std::set_symmetric_difference(a.added_edges.begin(), a.added_edges.end(),
                                  b.added_edges.begin(), b.added_edges.end(),
                                  std::back_inserter(diff));
    return diff.size() == 2;
  };

  // enumerate tuples (odometer)
  std::vector<size_t> tuple(factors.size(), 0);
  std::vector<std::vector<size_t>> tuples;
  while (true) {
    tuples.push_back(tuple);
    size_t k = 0;
    while (k < factors.size() && ++tuple[k] == factors[k].size()) tuple[k++] = 0;
    if (k == factors.size()) break;
  }

  auto key_of_tuple = [&](const std::vector<size_t>& tp) {
    Triangulation t{PlaneGraph{s.g.ps, s.g.verts, s.g.edges}};
    for (size_t k = 0; k < factors.size(); ++k)
      for (const Edge& e : factors[k][tp[k]].added_edges) t.g.insert_edge(e);
    return canonical_key(t);
  };

  std::map<std::vector<size_t>, int> gid;
  for (const auto& tp : tuples) {
    auto it = g.index.find(key_of_tuple(tp));
    if (it == g.index.end()) return false;
    gid[tp] = it->second;
  }
  auto induced = refinement_subgraph(g, s);
  if (induced.node_ids.size() != tuples.size()) return false;

  long long product_edges = 0;
  for (const auto& tp : tuples)
    for (size_t k = 0; k < factors.size(); ++k)
      for (size_t alt = 0; alt < factors[k].size(); ++alt) {
        if (alt == tp[k] || !fill_adjacent(factors[k][tp[k]], factors[k][alt]))
          continue;
        auto tp2 = tp;
        tp2[k] = alt;
        if (!g.adjacent(gid[tp], gid[tp2])) return false;
        ++product_edges;
      }
  product_edges /= 2;
  long long induced_edges = 0;
  for (const auto& a : induced.graph.adj) induced_edges += a.size();
  induced_edges /= 2;
  return product_edges == induced_edges;
}

}  // namespace fliplab
