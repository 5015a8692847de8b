#pragma once

// Subdivisions (plane graphs with convex regions, possibly with isolated
// "bystander" vertices), the refinement partial order, slack, coarseners,
// and the poset of all subdivisions of a point set.

#include <bit>
#include <cstdint>
#include <map>
#include <optional>
#include <queue>
#include <string>
#include <vector>

#include "fliplab/triangulation.hpp"

namespace fliplab {

struct Subdivision {
  PlaneGraph g;

  // inner vertices present but isolated
  std::vector<int> bystanders() const {
    auto deg = degrees(g);
    std::vector<int> out;
    for (int v : g.ps->inner)
      if (g.in_verts(v) && deg[v] == 0) out.push_back(v);
    return out;
  }
  // inner vertices with positive degree
  std::vector<int> involved_inner() const {
    auto deg = degrees(g);
    std::vector<int> out;
    for (int v : g.ps->inner)
      if (g.in_verts(v) && deg[v] > 0) out.push_back(v);
    return out;
  }
  bool full() const {
    return g.verts == g.ps->all_mask() && bystanders().empty();
  }
  bool is_triangulation() const {
    auto regs = regions_of_graph(g);
    for (const Region& r : regs)
      if (r.active()) return false;
    return true;
  }
  friend bool operator==(const Subdivision&, const Subdivision&) = default;
};

inline std::string canonical_key(const Subdivision& s) {
  return canonical_key(s.g);
}

inline Subdivision trivial_subdivision(const PointSet& ps) {
  PlaneGraph g{&ps, ps.all_mask(), hull_edges(ps)};
  return Subdivision{std::move(g)};
}

inline Subdivision as_subdivision(const Triangulation& t) {
  return Subdivision{t.g};
}

// A triangulation viewed inside the poset: T <= S in refinement order.
inline bool triangulation_refines(const Triangulation& t, const Subdivision& s) {
  if ((t.g.verts & ~s.g.verts) != 0) return false;  // V(T) must be inside V(S)
  for (const Edge& e : s.g.edges)
    if (!t.g.has_edge(e)) return false;
  return true;
}

inline std::vector<std::string> validate(const Subdivision& s) {
  return validate_subdivision_graph(s.g);
}

inline std::vector<Region> regions_of(const Subdivision& s) {
  return regions_of_graph(s.g);
}

// Sum of region slacks; cross-checked against the closed formula
// 3|V| - 3 - h - |E| - 2*(#bystanders).
inline int slack(const Subdivision& s) {
  int total = 0;
  for (const Region& r : regions_of(s)) total += r.slack();
  const int V = std::popcount(s.g.verts);
  const int by = static_cast<int>(s.bystanders().size());
  const int closed = 3 * V - 3 - s.g.ps->h() -
                     static_cast<int>(s.g.edges.size()) - 2 * by;
  if (total != closed)
    throw GeomError("slack mismatch: region sum " + std::to_string(total) +
                    " vs closed form " + std::to_string(closed));
  return total;
}

// Per-region ceil(slack/2), summed ("refined slack").
inline int refined_slack(const Subdivision& s) {
  int total = 0;
  for (const Region& r : regions_of(s)) total += (r.slack() + 1) / 2;
  return total;
}

// s1 <= s2: s1 refines s2 (s2 is coarser: more vertices, fewer edges).
inline bool is_refinement(const Subdivision& s1, const Subdivision& s2) {
  if ((s1.g.verts & ~s2.g.verts) != 0) return false;
  for (const Edge& e : s2.g.edges)
    if (!s1.g.has_edge(e)) return false;
  return true;
}

// Greatest lower bound candidate (V1 n V2, E1 u E2), i.e. the coarsest
// common refinement; its refinement set is the intersection of the two
// refinement sets. Empty when the union graph is not a valid subdivision
// (then nothing refines both).
inline std::optional<Subdivision> meet(const Subdivision& s1,
                                       const Subdivision& s2) {
  PlaneGraph g{s1.g.ps, s1.g.verts & s2.g.verts, s1.g.edges};
  for (const Edge& e : s2.g.edges) g.insert_edge(e);
  // drop isolated vertices that fell out of the vertex set is not needed:
  // verts is the intersection, edges may reference vertices outside it,
  // which validate flags.
  Subdivision m{std::move(g)};
  if (!validate(m).empty()) return std::nullopt;
  return m;
}

inline bool edge_locked(const PlaneGraph& g, const Edge& e) {
  return !locked_endpoints(g, e).empty();
}

struct Coarsener {
  std::uint64_t points = 0;          // subset of involved inner vertices
  std::vector<Edge> incident_edges;  // E_U
  int increment = 0;                 // |E_U| - 2|U|
  bool is_prime = false;
  bool is_perfect = false;
};

namespace detail {
inline std::vector<Edge> incident_edge_set(const PlaneGraph& g,
                                           std::uint64_t pts) {
  std::vector<Edge> out;
  for (const Edge& e : g.edges)
    if (((pts >> e.a) & 1) || ((pts >> e.b) & 1)) out.push_back(e);
  return out;
}

inline PlaneGraph remove_edges(const PlaneGraph& g,
                               const std::vector<Edge>& es) {
  PlaneGraph out = g;
  for (const Edge& e : es) out.erase_edge(e);
  return out;
}
}  // namespace detail

// U is a coarsener: incident to >= 1 edge and isolating it leaves a valid
// subdivision.
inline bool is_coarsener(const Subdivision& s, std::uint64_t pts) {
  if (pts == 0 || (pts & ~s.g.verts) || (pts & s.g.ps->hull_mask)) return false;
  auto eu = detail::incident_edge_set(s.g, pts);
  if (eu.empty()) return false;
  Subdivision cand{detail::remove_edges(s.g, eu)};
  return validate(cand).empty();
}

// All inclusion-minimal coarseners whose incident edges are all locked.
// Definitional subset enumeration; the involved inner vertex count is tiny
// at the scales this library targets.
inline std::vector<Coarsener> prime_coarseners(const Subdivision& s) {
  auto inv = s.involved_inner();
  const int m = static_cast<int>(inv.size());
  std::vector<std::uint64_t> found;  // all coarseners, by point mask
  for (std::uint64_t sub = 1; sub < (std::uint64_t{1} << m); ++sub) {
    std::uint64_t pts = 0;
    for (int i = 0; i < m; ++i)
      if ((sub >> i) & 1) pts |= std::uint64_t{1} << inv[i];
    if (is_coarsener(s, pts)) found.push_back(pts);
  }
  std::vector<Coarsener> out;
  for (std::uint64_t pts : found) {
    bool minimal = true;
    for (std::uint64_t other : found)
      if (other != pts && (other & ~pts) == 0) minimal = false;
    if (!minimal) continue;
    Coarsener c;
    c.points = pts;
    c.incident_edges = detail::incident_edge_set(s.g, pts);
    c.increment = static_cast<int>(c.incident_edges.size()) -
                  2 * std::popcount(pts);
    bool all_locked = true;
    for (const Edge& e : c.incident_edges)
      if (!edge_locked(s.g, e)) all_locked = false;
    c.is_prime = all_locked;  // minimality already established
    c.is_perfect = c.is_prime && c.increment == 1;
    if (c.is_prime) out.push_back(c);
  }
  return out;
}

struct CoarseningStep {
  Subdivision result;
  std::string label;
};

// All direct coarsenings (Hasse covers above s): add one skipped point,
// remove one unlocked edge, or isolate one prime coarsener.
inline std::vector<CoarseningStep> direct_coarsenings(const Subdivision& s) {
  std::vector<CoarseningStep> out;
  for (int p = 0; p < s.g.ps->n(); ++p) {
    if (s.g.in_verts(p)) continue;
    Subdivision c = s;
    c.g.verts |= std::uint64_t{1} << p;
    out.push_back({std::move(c), "add " + std::to_string(p)});
  }
  for (const Edge& e : inner_edges(s.g)) {
    if (edge_locked(s.g, e)) continue;
    Subdivision c = s;
    c.g.erase_edge(e);
    out.push_back({std::move(c),
                   "drop " + std::to_string(e.a) + "-" + std::to_string(e.b)});
  }
  for (const Coarsener& u : prime_coarseners(s)) {
    Subdivision c{detail::remove_edges(s.g, u.incident_edges)};
    std::string lbl = "isolate";
    for (int v = 0; v < s.g.ps->n(); ++v)
      if ((u.points >> v) & 1) lbl += " " + std::to_string(v);
    out.push_back({std::move(c), std::move(lbl)});
  }
  return out;
}

// Direct coarsenings that raise the slack by exactly 1.
inline std::vector<CoarseningStep> perfect_coarsenings(const Subdivision& s) {
  const int d = slack(s);
  std::vector<CoarseningStep> out;
  for (CoarseningStep& step : direct_coarsenings(s))
    if (slack(step.result) == d + 1) out.push_back(std::move(step));
  return out;
}

// All partial triangulations of ps: BFS closure under bistellar flips from
// the hull-only triangulation. Cross-validated elsewhere against a
// brute-force oracle.
inline std::vector<Triangulation> enumerate_partial_triangulations(
    const PointSet& ps, int cap = 8) {
  if (ps.n() > cap)
    throw CapExceededError("n=" + std::to_string(ps.n()) + " exceeds cap " +
                           std::to_string(cap));
  std::map<std::string, int> seen;
  std::vector<Triangulation> nodes;
  std::queue<int> todo;
  Triangulation seed = seed_full_triangulation(ps, ps.hull_mask);
  seen[canonical_key(seed)] = 0;
  nodes.push_back(std::move(seed));
  todo.push(0);
  while (!todo.empty()) {
    int id = todo.front();
    todo.pop();
    Triangulation cur = nodes[id];
    for (const FlipElement& x : flippable_elements(cur)) {
      Triangulation nxt = apply_bistellar_flip(cur, x);
      std::string key = canonical_key(nxt);
      if (!seen.contains(key)) {
        seen[key] = static_cast<int>(nodes.size());
        nodes.push_back(std::move(nxt));
        todo.push(static_cast<int>(nodes.size()) - 1);
      }
    }
  }
  return nodes;
}

// All full triangulations on the given vertex set: BFS under edge flips.
inline std::vector<Triangulation> enumerate_triangulations_on(
    const PointSet& ps, std::uint64_t verts, int cap = 10) {
  if (ps.n() > cap)
    throw CapExceededError("n=" + std::to_string(ps.n()) + " exceeds cap " +
                           std::to_string(cap));
  std::map<std::string, int> seen;
  std::vector<Triangulation> nodes;
  std::queue<int> todo;
  Triangulation seed = seed_full_triangulation(ps, verts);
  seen[canonical_key(seed)] = 0;
  nodes.push_back(std::move(seed));
  todo.push(0);
  while (!todo.empty()) {
    int id = todo.front();
    todo.pop();
    Triangulation cur = nodes[id];
    for (const Edge& e : flippable_edges(cur)) {
      Triangulation nxt = edge_flip(cur, e);
      std::string key = canonical_key(nxt);
      if (!seen.contains(key)) {
        seen[key] = static_cast<int>(nodes.size());
        nodes.push_back(std::move(nxt));
        todo.push(static_cast<int>(nodes.size()) - 1);
      }
    }
  }
  return nodes;
}

// The Hasse diagram of the refinement order on all subdivisions of ps,
// built by BFS upward from all partial triangulations via direct
// coarsenings. height = longest chain down to a triangulation.
struct Poset {
  std::vector<Subdivision> nodes;
  std::map<std::string, int> index;              // canonical key -> node id
  std::vector<std::vector<int>> coarsenings;     // Hasse: node -> covers above
  std::vector<std::vector<int>> refinements;     // Hasse: node -> covers below
  std::vector<int> node_slack;
  std::vector<int> height;
  int height_max = 0;  // = height of the trivial subdivision

  int id_of(const Subdivision& s) const {
    auto it = index.find(canonical_key(s));
    return it == index.end() ? -1 : it->second;
  }
};

inline Poset build_poset(const PointSet& ps, int cap = 8) {
  if (ps.n() > cap)
    throw CapExceededError("n=" + std::to_string(ps.n()) + " exceeds cap " +
                           std::to_string(cap));
  Poset po;
  auto add_node = [&](Subdivision s) {
    std::string key = canonical_key(s);
    auto it = po.index.find(key);
    if (it != po.index.end()) return it->second;
    int id = static_cast<int>(po.nodes.size());
    po.index.emplace(std::move(key), id);
    po.nodes.push_back(std::move(s));
    po.coarsenings.emplace_back();
    po.refinements.emplace_back();
    return id;
  };

  std::queue<int> todo;
  for (Triangulation& t : enumerate_partial_triangulations(ps, cap))
    todo.push(add_node(as_subdivision(t)));
  std::vector<char> expanded;
  while (!todo.empty()) {
    int id = todo.front();
    todo.pop();
    if (id < static_cast<int>(expanded.size()) && expanded[id]) continue;
    if (id >= static_cast<int>(expanded.size())) expanded.resize(id + 1, 0);
    if (expanded[id]) continue;
    expanded[id] = 1;
    Subdivision cur = po.nodes[id];
    for (CoarseningStep& step : direct_coarsenings(cur)) {
      int cid = add_node(std::move(step.result));
      po.coarsenings[id].push_back(cid);
      po.refinements[cid].push_back(id);
      if (cid >= static_cast<int>(expanded.size()) || !expanded[cid])
        todo.push(cid);
    }
  }

  const int m = static_cast<int>(po.nodes.size());
  po.node_slack.resize(m);
  for (int i = 0; i < m; ++i) po.node_slack[i] = slack(po.nodes[i]);

  // longest chain from a minimal element (triangulation), by memoized DFS
  po.height.assign(m, -1);
  std::vector<int> stack;
  for (int i = 0; i < m; ++i) {
    if (po.height[i] >= 0) continue;
    stack.push_back(i);
    while (!stack.empty()) {
      int v = stack.back();
      if (po.height[v] >= 0) {
        stack.pop_back();
        continue;
      }
      bool ready = true;
      int best = 0;
      for (int r : po.refinements[v]) {
        if (po.height[r] < 0) {
          stack.push_back(r);
          ready = false;
        } else {
          best = std::max(best, po.height[r] + 1);
        }
      }
      if (ready) {
        po.height[v] = best;
        stack.pop_back();
      }
    }
  }
  po.height_max = 0;
  for (int i = 0; i < m; ++i) po.height_max = std::max(po.height_max, po.height[i]);
  return po;
}

// All full subdivisions: BFS from full triangulations, removing one unlocked
// inner edge at a time (coarsening within the bystander-free world).
inline std::vector<Subdivision> enumerate_full_subdivisions(const PointSet& ps,
                                                            int cap = 8) {
  if (ps.n() > cap)
    throw CapExceededError("n=" + std::to_string(ps.n()) + " exceeds cap " +
                           std::to_string(cap));
  std::map<std::string, int> seen;
  std::vector<Subdivision> nodes;
  std::queue<int> todo;
  for (Triangulation& t : enumerate_triangulations_on(ps, ps.all_mask(), cap)) {
    Subdivision s = as_subdivision(t);
    std::string key = canonical_key(s);
    if (!seen.contains(key)) {
      seen[key] = static_cast<int>(nodes.size());
      nodes.push_back(std::move(s));
      todo.push(static_cast<int>(nodes.size()) - 1);
    }
  }
  auto deg_ok = [](const Subdivision& s) {
    auto deg = degrees(s.g);
    for (int v = 0; v < s.g.ps->n(); ++v)
      if (deg[v] == 0) return false;
    return true;
  };
  while (!todo.empty()) {
    int id = todo.front();
    todo.pop();
    Subdivision cur = nodes[id];
    for (const Edge& e : inner_edges(cur.g)) {
      if (edge_locked(cur.g, e)) continue;
      Subdivision nxt = cur;
      nxt.g.erase_edge(e);
      if (!deg_ok(nxt)) continue;
      std::string key = canonical_key(nxt);
      if (!seen.contains(key)) {
        seen[key] = static_cast<int>(nodes.size());
        nodes.push_back(std::move(nxt));
        todo.push(static_cast<int>(nodes.size()) - 1);
      }
    }
  }
  return nodes;
}

// --- Unoriented Edges audit -------------------------------------------------

class NotWellOrientedError : public GeomError {
 public:
  int point;
  NotWellOrientedError(int p, const std::string& why)
      : GeomError("not well-oriented at point " + std::to_string(p) + ": " + why),
        point(p) {}
};

struct UnorientAudit {
  std::vector<int> indegree_histogram;  // C_i
  int slack = 0;                        // D
  int refined_slack = 0;                // D*
  int unoriented = 0;
  bool well_oriented = false;
  bool bound_exact_applicable = false;  // C_i = 0 for i >= 4
  bool bound_exact_holds = false;   // unoriented == n-3-C3-D+(C1+2C0)
  bool bound_half_holds = false;    // 2*unoriented >= n-4-(D+D*), if well-oriented
};

// Audits a partial orientation of the inner edges of a full subdivision:
// heads maps an inner edge to the endpoint it is directed to (absent =
// unoriented). If require_well_oriented, a violation of the two
// well-orientedness rules throws NotWellOrientedError.
inline UnorientAudit unoriented_edges_audit(const Subdivision& s,
                                            const std::map<Edge, int>& heads,
                                            bool require_well_oriented = false) {
  const PointSet& ps = *s.g.ps;
  if (!s.full()) throw GeomError("audit requires a full subdivision");
  auto inn = inner_edges(s.g);
  std::vector<int> indeg(ps.n(), 0);
  int unoriented = 0;
  for (const Edge& e : inn) {
    auto it = heads.find(e);
    if (it == heads.end()) {
      ++unoriented;
    } else {
      if (!e.incident(it->second)) throw GeomError("head not an endpoint");
      ++indeg[it->second];
    }
  }
  // well-orientedness
  bool well = true;
  int offender = -1;
  std::string why;
  for (const auto& [e, head] : heads)
    if (ps.is_hull(head)) {
      well = false;
      offender = head;
      why = "edge directed to a hull point";
    }
  auto rot = rotation_system(s.g);
  for (int p = 0; p < ps.n() && well; ++p) {
    if (indeg[p] <= 1) continue;
    const auto& nb = rot[p];
    const int deg = static_cast<int>(nb.size());
    std::vector<int> in_pos;
    for (int i = 0; i < deg; ++i) {
      Edge e(p, nb[i]);
      auto it = heads.find(e);
      if (it != heads.end() && it->second == p) in_pos.push_back(i);
    }
    bool ok;
    if (in_pos.size() == 2)
      ok = (in_pos[1] - in_pos[0] == 1) || (in_pos[0] == 0 && in_pos[1] == deg - 1);
    else
      ok = static_cast<int>(in_pos.size()) == deg;  // pairwise consecutive
    if (!ok) {
      well = false;
      offender = p;
      why = "incoming edges not radially consecutive";
    }
  }
  if (require_well_oriented && !well)
    throw NotWellOrientedError(offender, why);

  UnorientAudit a;
  a.well_oriented = well;
  a.slack = slack(s);
  a.refined_slack = refined_slack(s);
  a.unoriented = unoriented;
  int maxdeg = 0;
  for (int p : ps.inner) maxdeg = std::max(maxdeg, indeg[p]);
  a.indegree_histogram.assign(maxdeg + 1, 0);
  for (int p : ps.inner) ++a.indegree_histogram[indeg[p]];
  const int n = ps.n();
  int c0 = a.indegree_histogram[0];
  int c1 = maxdeg >= 1 ? a.indegree_histogram[1] : 0;
  int c3 = maxdeg >= 3 ? a.indegree_histogram[3] : 0;
  a.bound_exact_applicable = maxdeg <= 3;
  if (a.bound_exact_applicable)
    a.bound_exact_holds =
        unoriented == n - 3 - c3 - a.slack + (c1 + 2 * c0);
  if (well)
    a.bound_half_holds = 2 * unoriented >= n - 4 - (a.slack + a.refined_slack);
  return a;
}

// The standard orientation: every locked inner edge directed to one locking
// endpoint (smallest index if both lock).
inline std::map<Edge, int> lock_orientation(const Subdivision& s) {
  std::map<Edge, int> heads;
  for (const Edge& e : inner_edges(s.g)) {
    auto locks = locked_endpoints(s.g, e);
    if (!locks.empty()) heads[e] = locks.front();
  }
  return heads;
}

}  // namespace fliplab
