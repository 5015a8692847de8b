#pragma once

// Plane graphs on a general-position point set: rotation systems in exact CCW
// order, face (region) extraction, lock tests, validation shared by
// triangulations and subdivisions.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "fliplab/geom.hpp"

namespace fliplab {

struct Edge {
  int a, b;  // a < b always
  Edge(int u, int v) : a(u < v ? u : v), b(u < v ? v : u) {}
  int other(int v) const { return v == a ? b : a; }
  bool incident(int v) const { return v == a || v == b; }
  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

class NotFlippableError : public GeomError {
 public:
  using GeomError::GeomError;
};

class ConvexityViolationError : public GeomError {
 public:
  using GeomError::GeomError;
};

class CapExceededError : public GeomError {
 public:
  using GeomError::GeomError;
};

// Straight-line graph on a subset of a PointSet. `verts` may include isolated
// vertices (bystanders of a subdivision). Edges are kept sorted and unique.
struct PlaneGraph {
  const PointSet* ps = nullptr;
  std::uint64_t verts = 0;
  std::vector<Edge> edges;

  bool in_verts(int i) const { return (verts >> i) & 1; }
  bool has_edge(const Edge& e) const {
    return std::binary_search(edges.begin(), edges.end(), e);
  }
  void insert_edge(const Edge& e) {
    auto it = std::lower_bound(edges.begin(), edges.end(), e);
    if (it == edges.end() || *it != e) edges.insert(it, e);
  }
  void erase_edge(const Edge& e) {
    auto it = std::lower_bound(edges.begin(), edges.end(), e);
    if (it != edges.end() && *it == e) edges.erase(it);
  }
  std::vector<int> vertex_list() const {
    std::vector<int> out;
    for (int i = 0; i < ps->n(); ++i)
      if (in_verts(i)) out.push_back(i);
    return out;
  }
  friend bool operator==(const PlaneGraph& x, const PlaneGraph& y) {
    return x.verts == y.verts && x.edges == y.edges;
  }
};

inline std::vector<Edge> hull_edges(const PointSet& ps) {
  std::vector<Edge> out;
  for (int k = 0; k < ps.h(); ++k)
    out.emplace_back(ps.hull[k], ps.hull[(k + 1) % ps.h()]);
  std::sort(out.begin(), out.end());
  return out;
}

// CCW comparison of the directions center->a, center->b, starting from the
// positive x-axis. Exact; ties cannot occur in general position.
inline bool ccw_dir_less(const Point& center, const Point& a, const Point& b) {
  auto half = [&](const Point& p) {
    return (p.y > center.y || (p.y == center.y && p.x > center.x)) ? 0 : 1;
  };
  int ha = half(a), hb = half(b);
  if (ha != hb) return ha < hb;
  return orient(center, a, b) > 0;
}

// rotation[v] = neighbors of v in CCW radial order (empty if v isolated).
inline std::vector<std::vector<int>> rotation_system(const PlaneGraph& g) {
  std::vector<std::vector<int>> rot(g.ps->n());
  for (const Edge& e : g.edges) {
    rot[e.a].push_back(e.b);
    rot[e.b].push_back(e.a);
  }
  const auto& P = g.ps->points;
  for (int v = 0; v < g.ps->n(); ++v)
    std::sort(rot[v].begin(), rot[v].end(),
              [&](int i, int j) { return ccw_dir_less(P[v], P[i], P[j]); });
  return rot;
}

inline std::vector<int> degrees(const PlaneGraph& g) {
  std::vector<int> deg(g.ps->n(), 0);
  for (const Edge& e : g.edges) ++deg[e.a], ++deg[e.b];
  return deg;
}

struct Region {
  std::vector<int> boundary;    // CCW vertex cycle
  std::vector<int> bystanders;  // isolated vertices strictly inside
  int slack() const {
    return static_cast<int>(boundary.size() + bystanders.size()) - 3;
  }
  bool active() const { return slack() > 0; }
};

inline bool strictly_inside_convex(const PointSet& ps,
                                   const std::vector<int>& ccw_cycle, int p) {
  const int m = static_cast<int>(ccw_cycle.size());
  for (int i = 0; i < m; ++i)
    if (orient(ps[ccw_cycle[i]], ps[ccw_cycle[(i + 1) % m]], ps[p]) <= 0)
      return false;
  return true;
}

// Sign of the signed area of an index cycle (+1 = CCW).
inline int cycle_area_sign(const PointSet& ps, const std::vector<int>& cyc) {
  __int128 a = 0;
  const int m = static_cast<int>(cyc.size());
  for (int i = 0; i < m; ++i) {
    const Point &p = ps[cyc[i]], &q = ps[cyc[(i + 1) % m]];
    a += static_cast<__int128>(p.x) * q.y - static_cast<__int128>(q.x) * p.y;
  }
  return a > 0 ? 1 : a < 0 ? -1 : 0;
}

// All bounded faces of a connected-on-its-edges plane graph, as CCW cycles,
// with bystanders (isolated members of `verts`) assigned to their containing
// region. Throws ConvexityViolationError on a non-convex or non-simple
// bounded face. The caller is responsible for non-crossing edges; use
// validate_subdivision_graph for the full check.
inline std::vector<Region> regions_of_graph(const PlaneGraph& g) {
  auto rot = rotation_system(g);
  const int n = g.ps->n();
  std::vector<std::map<int, int>> pos(n);
  for (int v = 0; v < n; ++v)
    for (int i = 0; i < static_cast<int>(rot[v].size()); ++i)
      pos[v][rot[v][i]] = i;

  // visited[v][i]: directed edge v -> rot[v][i] already traced
  std::vector<std::vector<char>> visited(n);
  for (int v = 0; v < n; ++v) visited[v].assign(rot[v].size(), 0);

  std::vector<Region> regions;
  int outer_faces = 0;
  for (int u = 0; u < n; ++u)
    for (int i = 0; i < static_cast<int>(rot[u].size()); ++i) {
      if (visited[u][i]) continue;
      // trace face left of (u -> rot[u][i])
      std::vector<int> cycle;
      int cu = u, cv = rot[u][i];
      visited[u][i] = 1;
      cycle.push_back(u);
      while (true) {
        int idx = pos[cv].at(cu);
        int deg = static_cast<int>(rot[cv].size());
        int nxt = (idx + deg - 1) % deg;
        int w = rot[cv][nxt];
        if (visited[cv][nxt]) break;  // closed the cycle
        visited[cv][nxt] = 1;
        cycle.push_back(cv);
        cu = cv;
        cv = w;
      }
      if (cycle_area_sign(*g.ps, cycle) <= 0) {
        ++outer_faces;
        continue;
      }
      // bounded face: must be a simple strictly convex polygon
      const int m = static_cast<int>(cycle.size());
      if (m < 3)
        throw ConvexityViolationError("degenerate face of length " +
                                      std::to_string(m));
      for (int k = 0; k < m; ++k)
        for (int l = k + 1; l < m; ++l)
          if (cycle[k] == cycle[l])
            throw ConvexityViolationError("non-simple face (repeated vertex " +
                                          std::to_string(cycle[k]) + ")");
      for (int k = 0; k < m; ++k)
        if (orient(g.ps->points[cycle[k]], g.ps->points[cycle[(k + 1) % m]],
                   g.ps->points[cycle[(k + 2) % m]]) <= 0)
          throw ConvexityViolationError("reflex vertex " +
                                        std::to_string(cycle[(k + 1) % m]));
      regions.push_back(Region{std::move(cycle), {}});
    }
  (void)outer_faces;

  // assign bystanders
  auto deg = degrees(g);
  for (int v = 0; v < n; ++v) {
    if (!g.in_verts(v) || deg[v] != 0) continue;
    bool placed = false;
    for (Region& r : regions)
      if (strictly_inside_convex(*g.ps, r.boundary, v)) {
        r.bystanders.push_back(v);
        placed = true;
        break;
      }
    if (!placed)
      throw ConvexityViolationError("isolated vertex " + std::to_string(v) +
                                    " not inside any bounded region");
  }
  return regions;
}

// Endpoints of e at which e is locked: removing e would leave a radial gap
// >= pi there. Degree-1/2 endpoints always lock.
inline std::vector<int> locked_endpoints(const PlaneGraph& g, const Edge& e) {
  auto rot = rotation_system(g);
  std::vector<int> out;
  for (int p : {e.a, e.b}) {
    const auto& nb = rot[p];
    const int deg = static_cast<int>(nb.size());
    if (deg <= 2) {
      out.push_back(p);
      continue;
    }
    int q = e.other(p);
    int idx = -1;
    for (int i = 0; i < deg; ++i)
      if (nb[i] == q) idx = i;
    int a = nb[(idx + deg - 1) % deg];  // CCW predecessor of q around p
    int b = nb[(idx + 1) % deg];        // CCW successor
    // gap from direction a CCW to direction b spans q; >= pi iff b lies
    // non-left of the line p->a
    if (orient(g.ps->points[p], g.ps->points[a], g.ps->points[b]) < 0)
      out.push_back(p);
  }
  return out;
}

inline bool edge_connected(const PlaneGraph& g) {
  auto deg = degrees(g);
  std::vector<std::vector<int>> adj(g.ps->n());
  for (const Edge& e : g.edges) {
    adj[e.a].push_back(e.b);
    adj[e.b].push_back(e.a);
  }
  int start = -1, count = 0;
  for (int v = 0; v < g.ps->n(); ++v)
    if (deg[v] > 0) {
      if (start < 0) start = v;
      ++count;
    }
  if (start < 0) return true;
  std::vector<char> seen(g.ps->n(), 0);
  std::vector<int> stack{start};
  seen[start] = 1;
  int reached = 0;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    ++reached;
    for (int w : adj[v])
      if (!seen[w]) seen[w] = 1, stack.push_back(w);
  }
  return reached == count;
}

// Full validity check for a subdivision-style plane graph: edges inside
// `verts`, hull present, non-crossing, edge-connected, all bounded faces
// simple strictly convex, bystanders inner and placeable. Returns violations
// (empty = valid).
inline std::vector<std::string> validate_subdivision_graph(const PlaneGraph& g) {
  std::vector<std::string> out;
  const PointSet& ps = *g.ps;
  for (const Edge& e : g.edges)
    if (!g.in_verts(e.a) || !g.in_verts(e.b))
      out.push_back("edge " + std::to_string(e.a) + "-" + std::to_string(e.b) +
                    " leaves the vertex set");
  if ((g.verts & ps.hull_mask) != ps.hull_mask)
    out.push_back("vertex set misses hull points");
  for (const Edge& he : hull_edges(ps))
    if (!g.has_edge(he))
      out.push_back("missing hull edge " + std::to_string(he.a) + "-" +
                    std::to_string(he.b));
  for (size_t i = 0; i < g.edges.size(); ++i)
    for (size_t j = i + 1; j < g.edges.size(); ++j) {
      const Edge &e = g.edges[i], &f = g.edges[j];
      if (segments_cross(ps[e.a], ps[e.b], ps[f.a], ps[f.b]))
        out.push_back("edges " + std::to_string(e.a) + "-" + std::to_string(e.b) +
                      " and " + std::to_string(f.a) + "-" + std::to_string(f.b) +
                      " cross");
    }
  auto deg = degrees(g);
  for (int v = 0; v < ps.n(); ++v) {
    if (deg[v] > 0 && !g.in_verts(v))
      out.push_back("edge endpoint " + std::to_string(v) + " not in vertex set");
    if (g.in_verts(v) && deg[v] == 0 && ps.is_hull(v))
      out.push_back("hull vertex " + std::to_string(v) + " is isolated");
  }
  if (!out.empty()) return out;
  if (!edge_connected(g)) {
    out.push_back("edge graph is disconnected");
    return out;
  }
  try {
    auto regs = regions_of_graph(g);
    // Euler check: V - E + F = 2 over the connected edge graph
    int vni = 0;
    for (int v = 0; v < ps.n(); ++v)
      if (deg[v] > 0) ++vni;
    long long F = static_cast<long long>(regs.size()) + 1;
    if (vni - static_cast<long long>(g.edges.size()) + F != 2)
      out.push_back("Euler formula violated");
  } catch (const ConvexityViolationError& e) {
    out.push_back(e.what());
  }
  return out;
}

// Canonical, injective, construction-order-independent key.
inline std::string canonical_key(const PlaneGraph& g) {
  std::string s = "v";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%016llx",
                static_cast<unsigned long long>(g.verts));
  s += buf;
  for (const Edge& e : g.edges) {
    std::snprintf(buf, sizeof buf, ";%d-%d", e.a, e.b);
    s += buf;
  }
  return s;
}

}  // namespace fliplab
