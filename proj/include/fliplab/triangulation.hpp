#pragma once

// Full and partial triangulations: deterministic seeding, flippability,
// edge flips and bistellar flips (insert/remove a degree-3 inner point).

#include <array>
#include <bit>
#include <optional>
#include <string>
#include <vector>

#include "fliplab/planegraph.hpp"

namespace fliplab {

struct Triangulation {
  PlaneGraph g;

  bool full() const { return g.verts == g.ps->all_mask(); }
  int n_verts() const { return std::popcount(g.verts); }
  // points of the base set not used by this (partial) triangulation
  std::vector<int> skipped() const {
    std::vector<int> out;
    for (int i : g.ps->inner)
      if (!g.in_verts(i)) out.push_back(i);
    return out;
  }
  friend bool operator==(const Triangulation&, const Triangulation&) = default;
};

inline std::string canonical_key(const Triangulation& t) {
  return canonical_key(t.g);
}

inline bool is_hull_edge(const PointSet& ps, const Edge& e) {
  if (!ps.is_hull(e.a) || !ps.is_hull(e.b)) return false;
  for (int k = 0; k < ps.h(); ++k) {
    Edge he(ps.hull[k], ps.hull[(k + 1) % ps.h()]);
    if (he == e) return true;
  }
  return false;
}

inline std::vector<Edge> inner_edges(const PlaneGraph& g) {
  std::vector<Edge> out;
  auto he = hull_edges(*g.ps);
  for (const Edge& e : g.edges)
    if (!std::binary_search(he.begin(), he.end(), e)) out.push_back(e);
  return out;
}

// Deterministic triangulation of `verts`: fan of the hull from its first
// vertex, then incremental insertion of the remaining vertices in index
// order (each lands strictly inside a triangle of the partial result).
inline Triangulation seed_full_triangulation(const PointSet& ps,
                                             std::uint64_t verts) {
  if ((verts & ps.hull_mask) != ps.hull_mask)
    throw GeomError("seed triangulation needs all hull vertices");
  PlaneGraph g{&ps, verts, {}};
  for (const Edge& e : hull_edges(ps)) g.insert_edge(e);

  std::vector<std::array<int, 3>> tris;
  for (int k = 1; k + 1 < ps.h(); ++k) {
    tris.push_back({ps.hull[0], ps.hull[k], ps.hull[k + 1]});
    if (k + 1 < ps.h() - 1) g.insert_edge(Edge(ps.hull[0], ps.hull[k + 1]));
  }
  for (int p = 0; p < ps.n(); ++p) {
    if (!((verts >> p) & 1) || ps.is_hull(p)) continue;
    bool found = false;
    for (size_t ti = 0; ti < tris.size(); ++ti) {
      auto [a, b, c] = tris[ti];
      std::vector<int> cyc{a, b, c};
      if (!strictly_inside_convex(ps, cyc, p)) continue;
      tris.erase(tris.begin() + ti);
      tris.push_back({a, b, p});
      tris.push_back({b, c, p});
      tris.push_back({c, a, p});
      g.insert_edge(Edge(a, p));
      g.insert_edge(Edge(b, p));
      g.insert_edge(Edge(c, p));
      found = true;
      break;
    }
    if (!found) throw GeomError("insertion point not inside any triangle");
  }
  return Triangulation{std::move(g)};
}

// Inner edges that are locked at neither endpoint; exactly the edges whose
// territory is a convex quadrilateral.
inline std::vector<Edge> flippable_edges(const Triangulation& t) {
  std::vector<Edge> out;
  for (const Edge& e : inner_edges(t.g))
    if (locked_endpoints(t.g, e).empty()) out.push_back(e);
  return out;
}

// The two apexes of the triangles on either side of edge e (triangulations
// only: faces are triangles).
inline std::pair<int, int> opposite_apexes(const Triangulation& t, const Edge& e) {
  auto rot = rotation_system(t.g);
  auto apex = [&](int u, int v) {  // apex of the face left of u->v
    const auto& nb = rot[v];
    int deg = static_cast<int>(nb.size());
    for (int i = 0; i < deg; ++i)
      if (nb[i] == u) return nb[(i + deg - 1) % deg];
    throw GeomError("edge not in graph");
  };
  return {apex(e.a, e.b), apex(e.b, e.a)};
}

inline Triangulation edge_flip(const Triangulation& t, const Edge& e) {
  if (!t.g.has_edge(e) || is_hull_edge(*t.g.ps, e) ||
      !locked_endpoints(t.g, e).empty())
    throw NotFlippableError("edge " + std::to_string(e.a) + "-" +
                            std::to_string(e.b) + " is not flippable");
  auto [w1, w2] = opposite_apexes(t, e);
  Triangulation out = t;
  out.g.erase_edge(e);
  out.g.insert_edge(Edge(w1, w2));
  return out;
}

struct FlipElement {
  enum class Kind { EdgeFlip, InsertPoint, RemovePoint };
  Kind kind;
  Edge edge{0, 1};  // meaningful for EdgeFlip
  int point = -1;   // meaningful for Insert/RemovePoint

  std::string label() const {
    switch (kind) {
      case Kind::EdgeFlip:
        return "flip " + std::to_string(edge.a) + "-" + std::to_string(edge.b);
      case Kind::InsertPoint:
        return "insert " + std::to_string(point);
      default:
        return "remove " + std::to_string(point);
    }
  }
  friend bool operator==(const FlipElement&, const FlipElement&) = default;
  friend auto operator<=>(const FlipElement&, const FlipElement&) = default;
};

// All bistellar flips available at t: flippable inner edges, removable
// degree-3 inner vertices, and insertable skipped points.
inline std::vector<FlipElement> flippable_elements(const Triangulation& t) {
  std::vector<FlipElement> out;
  for (const Edge& e : flippable_edges(t))
    out.push_back({FlipElement::Kind::EdgeFlip, e, -1});
  auto deg = degrees(t.g);
  for (int p : t.g.ps->inner) {
    if (t.g.in_verts(p)) {
      if (deg[p] == 3) out.push_back({FlipElement::Kind::RemovePoint, Edge(0, 1), p});
    } else {
      out.push_back({FlipElement::Kind::InsertPoint, Edge(0, 1), p});
    }
  }
  return out;
}

inline Triangulation apply_bistellar_flip(const Triangulation& t,
                                          const FlipElement& x) {
  switch (x.kind) {
    case FlipElement::Kind::EdgeFlip:
      return edge_flip(t, x.edge);
    case FlipElement::Kind::InsertPoint: {
      int p = x.point;
      if (t.g.in_verts(p) || t.g.ps->is_hull(p))
        throw NotFlippableError("point " + std::to_string(p) + " not skipped");
      for (const Region& r : regions_of_graph(t.g)) {
        if (r.boundary.size() != 3 ||
            !strictly_inside_convex(*t.g.ps, r.boundary, p))
          continue;
        Triangulation out = t;
        out.g.verts |= std::uint64_t{1} << p;
        for (int v : r.boundary) out.g.insert_edge(Edge(v, p));
        return out;
      }
      throw NotFlippableError("no triangle contains point " + std::to_string(p));
    }
    default: {
      int p = x.point;
      if (!t.g.in_verts(p) || t.g.ps->is_hull(p))
        throw NotFlippableError("point " + std::to_string(p) + " not removable");
      Triangulation out = t;
      std::vector<Edge> inc;
      for (const Edge& e : t.g.edges)
        if (e.incident(p)) inc.push_back(e);
      if (inc.size() != 3)
        throw NotFlippableError("point " + std::to_string(p) +
                                " has degree != 3");
      for (const Edge& e : inc) out.g.erase_edge(e);
      out.g.verts &= ~(std::uint64_t{1} << p);
      return out;
    }
  }
}

// Structural validation: subdivision validity + all faces triangles +
// the edge/region count formulas 3N-3-h and 2N-2-h.
inline std::vector<std::string> validate(const Triangulation& t) {
  auto out = validate_subdivision_graph(t.g);
  auto deg = degrees(t.g);
  for (int v = 0; v < t.g.ps->n(); ++v)
    if (t.g.in_verts(v) && deg[v] == 0)
      out.push_back("isolated vertex " + std::to_string(v) +
                    " in a triangulation");
  if (!out.empty()) return out;
  const int N = t.n_verts(), h = t.g.ps->h();
  if (static_cast<int>(t.g.edges.size()) != 3 * N - 3 - h)
    out.push_back("edge count " + std::to_string(t.g.edges.size()) +
                  " != 3N-3-h = " + std::to_string(3 * N - 3 - h));
  auto regs = regions_of_graph(t.g);
  if (static_cast<int>(regs.size()) != 2 * N - 2 - h)
    out.push_back("region count " + std::to_string(regs.size()) +
                  " != 2N-2-h = " + std::to_string(2 * N - 2 - h));
  for (const Region& r : regs)
    if (r.boundary.size() != 3)
      out.push_back("non-triangular region");
  return out;
}

}  // namespace fliplab
