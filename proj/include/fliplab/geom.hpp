#pragma once

// Exact integer geometric predicates. Coordinates are bounded by 2^30 so that
// the 3x3 orientation determinant fits comfortably in signed 128-bit.

#include <algorithm>
#include <cassert>
#include <cstdint>
#include <iosfwd>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace fliplab {

using Coord = std::int64_t;
inline constexpr Coord kCoordBound = Coord{1} << 30;
inline constexpr int kMaxPoints = 64;  // vertex subsets are uint64_t bitmasks

struct Point {
  Coord x = 0;
  Coord y = 0;
  friend bool operator==(const Point&, const Point&) = default;
  friend auto operator<=>(const Point&, const Point&) = default;
};

class GeomError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DuplicatePointError : public GeomError {
 public:
  int i, j;
  DuplicatePointError(int i_, int j_)
      : GeomError("duplicate points at indices " + std::to_string(i_) + " and " +
                  std::to_string(j_)),
        i(i_), j(j_) {}
};

class CollinearTripleError : public GeomError {
 public:
  int i, j, k;
  CollinearTripleError(int i_, int j_, int k_)
      : GeomError("collinear triple (" + std::to_string(i_) + "," + std::to_string(j_) +
                  "," + std::to_string(k_) + ")"),
        i(i_), j(j_), k(k_) {}
};

inline bool coord_in_bounds(const Point& p) {
  return p.x >= -kCoordBound && p.x <= kCoordBound && p.y >= -kCoordBound &&
         p.y <= kCoordBound;
}

// Sign of the determinant |q-p r-p|: +1 if r is strictly left of the directed
// line p->q, -1 if strictly right, 0 if collinear. Exact.
inline int orient(const Point& p, const Point& q, const Point& r) {
  assert(coord_in_bounds(p) && coord_in_bounds(q) && coord_in_bounds(r));
  __int128 det = static_cast<__int128>(q.x - p.x) * (r.y - p.y) -
                 static_cast<__int128>(q.y - p.y) * (r.x - p.x);
  return det > 0 ? 1 : det < 0 ? -1 : 0;
}

// Closed segments ab and cd intersect in a point that is not a shared
// endpoint. Endpoints are assumed to come from a general-position set, so
// the only degeneracy we must accept is a shared endpoint.
inline bool segments_cross(const Point& a, const Point& b, const Point& c,
                           const Point& d) {
  if (a == c || a == d || b == c || b == d) return false;
  int o1 = orient(a, b, c), o2 = orient(a, b, d);
  int o3 = orient(c, d, a), o4 = orient(c, d, b);
  if (o1 * o2 < 0 && o3 * o4 < 0) return true;  // proper crossing
  // With general-position endpoints an endpoint can only touch the other
  // segment if it IS one of its endpoints, handled above. Still, treat a
  // zero orientation conservatively: an endpoint strictly inside the other
  // segment counts as a crossing.
  auto on_segment = [](const Point& s, const Point& t, const Point& p) {
    return orient(s, t, p) == 0 && std::min(s.x, t.x) <= p.x && p.x <= std::max(s.x, t.x) &&
           std::min(s.y, t.y) <= p.y && p.y <= std::max(s.y, t.y);
  };
  return on_segment(a, b, c) || on_segment(a, b, d) || on_segment(c, d, a) ||
         on_segment(c, d, b);
}

// Convex hull as CCW index cycle starting at the lexicographically smallest
// point. Monotone chain; throws CollinearTripleError if three hull candidates
// are collinear (general-position violation on the hull).
inline std::vector<int> convex_hull(const std::vector<Point>& pts) {
  const int n = static_cast<int>(pts.size());
  if (n < 3) throw GeomError("convex_hull needs at least 3 points");
  std::vector<int> idx(n);
  for (int i = 0; i < n; ++i) idx[i] = i;
  std::sort(idx.begin(), idx.end(),
            [&](int a, int b) { return pts[a] < pts[b]; });

  auto build = [&](bool upper) {
    std::vector<int> chain;
    for (int k = 0; k < n; ++k) {
      int i = idx[upper ? n - 1 - k : k];
      while (chain.size() >= 2) {
        int o = orient(pts[chain[chain.size() - 2]], pts[chain.back()], pts[i]);
        if (o == 0)
          throw CollinearTripleError(chain[chain.size() - 2], chain.back(), i);
        if (o > 0) break;  // strict left turn kept
        chain.pop_back();
      }
      chain.push_back(i);
    }
    return chain;
  };
  std::vector<int> lower = build(false), upper = build(true);
  lower.pop_back();
  upper.pop_back();
  lower.insert(lower.end(), upper.begin(), upper.end());
  return lower;  // starts at lexicographic min by construction
}

struct PointSet {
  std::vector<Point> points;
  std::vector<int> hull;    // CCW cycle starting at lexicographic minimum
  std::vector<int> inner;   // non-extreme indices, increasing
  std::uint64_t hull_mask = 0;
  std::uint64_t inner_mask = 0;

  int n() const { return static_cast<int>(points.size()); }
  int h() const { return static_cast<int>(hull.size()); }
  std::uint64_t all_mask() const {
    return n() == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n()) - 1;
  }
  bool is_hull(int i) const { return (hull_mask >> i) & 1; }
  const Point& operator[](int i) const { return points[i]; }
};

// Validates general position (no duplicates, no collinear triple) and builds
// the hull/inner classification. O(n^3), deliberately definitional.
inline PointSet assert_general_position(const std::vector<Point>& pts) {
  const int n = static_cast<int>(pts.size());
  if (n < 3) throw GeomError("need at least 3 points");
  if (n > kMaxPoints) throw GeomError("point sets are limited to 64 points");
  for (const Point& p : pts)
    if (!coord_in_bounds(p)) throw GeomError("coordinate exceeds 2^30 bound");
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (pts[i] == pts[j]) throw DuplicatePointError(i, j);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int k = j + 1; k < n; ++k)
        if (orient(pts[i], pts[j], pts[k]) == 0) throw CollinearTripleError(i, j, k);

  PointSet ps;
  ps.points = pts;
  ps.hull = convex_hull(pts);
  for (int i : ps.hull) ps.hull_mask |= std::uint64_t{1} << i;
  for (int i = 0; i < n; ++i)
    if (!ps.is_hull(i)) {
      ps.inner.push_back(i);
      ps.inner_mask |= std::uint64_t{1} << i;
    }
  return ps;
}

// Direction vector (difference of two bounded points).
struct Dir {
  Coord x = 0;
  Coord y = 0;
};

inline Dir direction(const Point& from, const Point& to) {
  return {to.x - from.x, to.y - from.y};
}

// True iff all (nonzero) direction vectors fit in some open half-plane
// {v : n.v > 0}. Exact radial-gap test.
inline bool fits_open_halfplane(std::vector<Dir> dirs) {
  if (dirs.empty()) return true;
  auto cross = [](const Dir& a, const Dir& b) {
    __int128 c = static_cast<__int128>(a.x) * b.y - static_cast<__int128>(a.y) * b.x;
    return c > 0 ? 1 : c < 0 ? -1 : 0;
  };
  auto dot_sign = [](const Dir& a, const Dir& b) {
    __int128 d = static_cast<__int128>(a.x) * b.x + static_cast<__int128>(a.y) * b.y;
    return d > 0 ? 1 : d < 0 ? -1 : 0;
  };
  // radial sort (CCW from positive x-axis), then collapse equal directions
  auto half = [](const Dir& d) { return (d.y > 0 || (d.y == 0 && d.x > 0)) ? 0 : 1; };
  std::sort(dirs.begin(), dirs.end(), [&](const Dir& a, const Dir& b) {
    if (half(a) != half(b)) return half(a) < half(b);
    return cross(a, b) > 0;
  });
  std::vector<Dir> uniq;
  for (const Dir& d : dirs)
    if (uniq.empty() || !(cross(uniq.back(), d) == 0 && dot_sign(uniq.back(), d) > 0))
      uniq.push_back(d);
  if (uniq.size() == 1) return true;
  // some cyclic gap must exceed pi
  for (size_t i = 0; i < uniq.size(); ++i)
    if (cross(uniq[i], uniq[(i + 1) % uniq.size()]) < 0) return true;
  return false;
}

// --- point-set IO -----------------------------------------------------------

// Text form: one "x y" pair per line, '#' starts a comment.
inline std::vector<Point> parse_point_file(const std::string& text) {
  std::vector<Point> pts;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (auto pos = line.find('#'); pos != std::string::npos) line.erase(pos);
    std::istringstream ls(line);
    long long x, y;
    if (ls >> x >> y) {
      pts.push_back({x, y});
    } else {
      std::istringstream check(line);
      std::string junk;
      if (check >> junk) throw GeomError("bad point file line: " + line);
    }
  }
  return pts;
}

inline std::string format_point_file(const std::vector<Point>& pts) {
  std::ostringstream out;
  for (const Point& p : pts) out << p.x << ' ' << p.y << '\n';
  return out.str();
}

}  // namespace fliplab
