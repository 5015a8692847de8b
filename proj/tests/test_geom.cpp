#include <catch2/catch_amalgamated.hpp>

#include "fliplab/geom.hpp"
#include "oracles.hpp"

using namespace fliplab;

TEST_CASE("orient basics") {
  CHECK(orient({0, 0}, {1, 0}, {0, 1}) == 1);
  CHECK(orient({0, 0}, {1, 1}, {2, 2}) == 0);
  CHECK(orient({0, 0}, {0, 1}, {1, 0}) == -1);
}

TEST_CASE("orient antisymmetry on random triples") {
  auto ps = oracles::random_point_set(12, 7, 100000);
  for (int i = 0; i < ps.n(); ++i)
    for (int j = 0; j < ps.n(); ++j)
      for (int k = 0; k < ps.n(); ++k) {
        if (i == j || j == k || i == k) continue;
        int o = orient(ps[i], ps[j], ps[k]);
        CHECK(o == -orient(ps[j], ps[i], ps[k]));
        CHECK(o == -orient(ps[i], ps[k], ps[j]));
      }
}

TEST_CASE("orient is exact at the coordinate bound") {
  Point a{-kCoordBound, -kCoordBound}, b{kCoordBound, kCoordBound};
  CHECK(orient(a, b, Point{kCoordBound - 1, kCoordBound}) == 1);
  CHECK(orient(a, b, Point{kCoordBound, kCoordBound - 1}) == -1);
  CHECK(orient(a, b, Point{0, 0}) == 0);
}

TEST_CASE("segments_cross") {
  CHECK(segments_cross({0, 0}, {2, 2}, {0, 2}, {2, 0}));
  CHECK_FALSE(segments_cross({0, 0}, {2, 2}, {2, 2}, {4, 0}));  // shared endpoint
  CHECK_FALSE(segments_cross({0, 0}, {1, 0}, {0, 2}, {1, 2}));
  // symmetry in segments and endpoint order
  auto ps = oracles::random_point_set(8, 3);
  for (int a = 0; a < 8; ++a)
    for (int b = a + 1; b < 8; ++b)
      for (int c = 0; c < 8; ++c)
        for (int d = c + 1; d < 8; ++d) {
          if (Edge(a, b) == Edge(c, d)) continue;
          bool x = segments_cross(ps[a], ps[b], ps[c], ps[d]);
          CHECK(x == segments_cross(ps[c], ps[d], ps[a], ps[b]));
          CHECK(x == segments_cross(ps[b], ps[a], ps[d], ps[c]));
        }
}

TEST_CASE("convex hull: square and center") {
  std::vector<Point> sq{{0, 0}, {10, 0}, {10, 10}, {0, 10}};
  auto hull = convex_hull(sq);
  REQUIRE(hull.size() == 4);
  CHECK(hull[0] == 0);  // lexicographic minimum first
  auto ps = assert_general_position(
      std::vector<Point>{{0, 0}, {10, 0}, {10, 10}, {0, 10}, {5, 6}});
  CHECK(ps.h() == 4);
  CHECK(ps.inner == std::vector<int>{4});
}

TEST_CASE("convex hull matches definitional oracle on random sets") {
  for (unsigned seed = 0; seed < 1000; ++seed) {
    int n = 4 + static_cast<int>(seed % 9);  // up to 12
    auto ps = oracles::random_point_set(n, seed);
    CHECK(ps.hull == oracles::brute_force_hull(ps.points));
  }
}

TEST_CASE("assert_general_position rejections") {
  CHECK_THROWS_AS(assert_general_position(
                      std::vector<Point>{{0, 0}, {1, 1}, {2, 2}, {0, 5}}),
                  CollinearTripleError);
  CHECK_THROWS_AS(
      assert_general_position(std::vector<Point>{{0, 0}, {1, 2}, {0, 0}}),
      DuplicatePointError);
  auto tri = assert_general_position(std::vector<Point>{{0, 0}, {4, 0}, {0, 4}});
  CHECK(tri.n() == 3);
  CHECK(tri.h() == 3);
  try {
    assert_general_position(std::vector<Point>{{0, 0}, {1, 1}, {2, 2}, {0, 5}});
    FAIL("expected throw");
  } catch (const CollinearTripleError& e) {
    CHECK(e.i == 0);
    CHECK(e.j == 1);
    CHECK(e.k == 2);
  }
}

TEST_CASE("point file round trip") {
  std::string text = "# demo\n0 0\n4 0  # corner\n0 4\n";
  auto pts = parse_point_file(text);
  REQUIRE(pts.size() == 3);
  CHECK(pts[1] == Point{4, 0});
  auto again = parse_point_file(format_point_file(pts));
  CHECK(again == pts);
  CHECK_THROWS_AS(parse_point_file("1 banana\n"), GeomError);
}
