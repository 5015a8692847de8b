#pragma once

// Deterministic point-set constructors: convex gons, twisted double-gons
// (verified against their five defining conditions), the nested-triangles
// configuration with concurrent or non-concurrent spoke lines, and seeded
// random sets. Every output is validated, never trusted.

#include <algorithm>
#include <array>
#include <cmath>
#include <random>
#include <vector>

#include "fliplab/subdivision.hpp"

namespace fliplab {

class ConstructionFailedError : public GeomError {
 public:
  using GeomError::GeomError;
};

class ExhaustedRetriesError : public GeomError {
 public:
  using GeomError::GeomError;
};

inline PointSet convex_gon(int n) {
  if (n < 3) throw GeomError("convex_gon needs n >= 3");
  for (int attempt = 0; attempt < 64; ++attempt) {
    double r = static_cast<double>(1 << 20) + attempt * 9973.0;
    std::vector<Point> pts;
    for (int i = 0; i < n; ++i) {
      double a = 2 * M_PI * i / n + 0.37;
      pts.push_back({static_cast<Coord>(std::llround(r * std::cos(a))),
                     static_cast<Coord>(std::llround(r * std::sin(a)))});
    }
    try {
      PointSet ps = assert_general_position(pts);
      if (ps.h() == n) return ps;
    } catch (const GeomError&) {
    }
  }
  throw ConstructionFailedError("convex_gon: retries exhausted");
}

inline PointSet random_points(int n, unsigned seed, long long box = 1000) {
  if (n < 3 || box < n) throw GeomError("random_points needs n >= 3, box >= n");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long long> d(0, box);
  for (int attempt = 0; attempt < 10000; ++attempt) {
    std::vector<Point> pts;
    for (int i = 0; i < n; ++i) pts.push_back({d(rng), d(rng)});
    try {
      return assert_general_position(pts);
    } catch (const GeomError&) {
    }
  }
  throw ExhaustedRetriesError("random_points: box too small for general position");
}

namespace detail {

// p is extreme within the given index set (p included) iff the directions to
// all other members fit an open half-plane.
inline bool extreme_in(const PointSet& ps, const std::vector<int>& members, int p) {
  std::vector<Dir> dirs;
  for (int q : members)
    if (q != p) dirs.push_back(direction(ps[p], ps[q]));
  return fits_open_halfplane(dirs);
}

inline bool strictly_inside_triangle(const PointSet& ps, int a, int b, int c, int q) {
  int o = orient(ps[a], ps[b], ps[c]);
  return o != 0 && orient(ps[a], ps[b], ps[q]) == o &&
         orient(ps[b], ps[c], ps[q]) == o && orient(ps[c], ps[a], ps[q]) == o;
}

// The five defining conditions of a twisted double-gon with points
// p_0..p_{k-1} (indices 0..k-1) and q_0..q_{k-1} (indices k..2k-1).
inline bool twisted_conditions_hold(const PointSet& ps, int k) {
  if (ps.h() != k) return false;  // (I)
  for (int i = 0; i < k; ++i)
    if (ps.is_hull(k + i) || !ps.is_hull(i)) return false;
  std::vector<int> qs;
  for (int i = 0; i < k; ++i) qs.push_back(k + i);
  auto all_except = [&](std::vector<int> drop) {
    std::vector<int> members;
    for (int v = 0; v < ps.n(); ++v)
      if (std::find(drop.begin(), drop.end(), v) == drop.end()) members.push_back(v);
    return members;
  };
  for (int i = 0; i < k; ++i) {
    int q = k + i, prev_p = (i + k - 1) % k, prev_q = k + (i + k - 1) % k;
    int next_q = k + (i + 1) % k;
    if (!extreme_in(ps, qs, q)) return false;                          // (II)
    if (!extreme_in(ps, all_except({i}), q)) return false;             // (III)
    if (!extreme_in(ps, all_except({prev_p, prev_q}), q)) return false;  // (IV)
    if (!strictly_inside_triangle(ps, prev_q, i, next_q, q)) return false;  // (V)
  }
  return true;
}

}  // namespace detail

// n = 2k points: a convex k-gon with one inner point twisted off each hull
// vertex, satisfying the five double-gon conditions (re-verified exactly).
inline PointSet twisted_double_gon(int k) {
  if (k < 3) throw GeomError("twisted_double_gon needs k >= 3");
  const double alpha = 2 * M_PI / k;
  // clockwise twist, depth shrinking with k (the hull gets flatter)
  for (int radius_step = 0; radius_step < 4; ++radius_step) {
    double r = 1e6 + radius_step * 330007.0;
    for (double dfrac : {-0.06, -0.1, -0.15, -0.2, -0.25, -0.3, -0.35, -0.4})
      for (double eps : {0.05, 0.08, 0.1, 0.12, 0.15, 0.2, 0.25, 0.3, 0.35, 0.4, 0.45}) {
          double delta = dfrac * alpha;
          std::vector<Point> pts;
          for (int i = 0; i < k; ++i) {
            double a = alpha * i + 0.2;
            pts.push_back({static_cast<Coord>(std::llround(r * std::cos(a))),
                           static_cast<Coord>(std::llround(r * std::sin(a)))});
          }
          for (int i = 0; i < k; ++i) {
            double a = alpha * i + 0.2 + delta;
            double rq = (1 - eps) * r;
            pts.push_back({static_cast<Coord>(std::llround(rq * std::cos(a))),
                           static_cast<Coord>(std::llround(rq * std::sin(a)))});
          }
          try {
            PointSet ps = assert_general_position(pts);
            if (detail::twisted_conditions_hold(ps, k)) return ps;
          } catch (const GeomError&) {
          }
      }
  }
  throw ConstructionFailedError("twisted_double_gon: no parameters satisfied "
                                "the defining conditions");
}

// The hull-plus-windmill subdivision of a twisted double-gon: hull edges,
// one spoke q_i p_i per house, and the inner gon ring. Slack n-3.
inline Subdivision twisted_square(const PointSet& ps) {
  const int k = ps.n() / 2;
  PlaneGraph g{&ps, ps.all_mask(), hull_edges(ps)};
  for (int i = 0; i < k; ++i) {
    g.insert_edge(Edge(i, k + i));
    g.insert_edge(Edge(k + i, k + (i + 1) % k));
  }
  Subdivision s{std::move(g)};
  if (!validate(s).empty())
    throw ConstructionFailedError("twisted_square: subdivision invalid");
  return s;
}

// Nested triangles: outer p_0,p_1,p_2 (indices 0-2), inner q_i (indices
// 3-5) with q_i on segment c..p_i for a common center c when concurrent;
// the non-concurrent variant nudges q_2 off its line while preserving the
// orientation of every point triple.
inline PointSet mother_example(bool concurrent) {
  std::vector<Point> pts{{0, 84}, {-84, -60}, {96, -48},
                         {0, 42}, {-63, -45}, {40, -20}};
  if (!concurrent) pts[5] = {41, -20};
  PointSet ps = assert_general_position(pts);

  // exact concurrency determinant of the three spoke lines p_i q_i
  auto line = [&](int p, int q) {
    return std::array<long long, 3>{
        ps[q].y - ps[p].y, ps[p].x - ps[q].x,
        ps[q].x * ps[p].y - ps[p].x * ps[q].y};
  };
  auto l0 = line(0, 3), l1 = line(1, 4), l2 = line(2, 5);
  __int128 det = static_cast<__int128>(l0[0]) * (static_cast<__int128>(l1[1]) * l2[2] - static_cast<__int128>(l1[2]) * l2[1]) -
                 static_cast<__int128>(l0[1]) * (static_cast<__int128>(l1[0]) * l2[2] - static_cast<__int128>(l1[2]) * l2[0]) +
                 static_cast<__int128>(l0[2]) * (static_cast<__int128>(l1[0]) * l2[1] - static_cast<__int128>(l1[1]) * l2[0]);
  if (concurrent != (det == 0))
    throw ConstructionFailedError("mother_example: concurrency check failed");
  return ps;
}

// The three protagonists over a mother_example point set: the windmill
// subdivision S and its two cyclic refinements.
struct MotherFamily {
  PointSet ps;
  Subdivision square;
  Triangulation t1, t2;
};

inline MotherFamily mother_family(bool concurrent) {
  MotherFamily f{mother_example(concurrent), {}, {}, {}};
  const PointSet& ps = f.ps;
  PlaneGraph g{&ps, ps.all_mask(), hull_edges(ps)};
  for (int i = 0; i < 3; ++i) {
    g.insert_edge(Edge(i, 3 + i));
    g.insert_edge(Edge(3 + i, 3 + (i + 1) % 3));
  }
  f.square = Subdivision{g};
  if (!validate(f.square).empty() || slack(f.square) != 3)
    throw ConstructionFailedError("mother_family: windmill subdivision invalid");
  PlaneGraph g1 = g, g2 = g;
  for (int i = 0; i < 3; ++i) {
    g1.insert_edge(Edge(3 + i, (i + 1) % 3));  // q_i p_{i+1}
    g2.insert_edge(Edge(i, 3 + (i + 1) % 3));  // p_i q_{i+1}
  }
  f.t1 = Triangulation{std::move(g1)};
  f.t2 = Triangulation{std::move(g2)};
  if (!validate(f.t1).empty() || !validate(f.t2).empty())
    throw ConstructionFailedError("mother_family: refinements invalid");
  return f;
}

}  // namespace fliplab
