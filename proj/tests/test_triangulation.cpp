#include <catch2/catch_amalgamated.hpp>

#include "fliplab/triangulation.hpp"
#include "oracles.hpp"

using namespace fliplab;

namespace {
PointSet convex4() {
  return assert_general_position(
      std::vector<Point>{{0, 0}, {10, 1}, {11, 10}, {1, 11}});
}
PointSet triangle_center() {
  return assert_general_position(
      std::vector<Point>{{0, 0}, {12, 0}, {3, 12}, {4, 4}});
}
}  // namespace

TEST_CASE("seed triangulation of a convex 4-gon") {
  auto ps = convex4();
  auto t = seed_full_triangulation(ps, ps.all_mask());
  CHECK(t.g.edges.size() == 5);  // 3*4-3-4
  CHECK(validate(t).empty());
  CHECK(regions_of_graph(t.g).size() == 2);
  auto t2 = seed_full_triangulation(ps, ps.all_mask());
  CHECK(canonical_key(t) == canonical_key(t2));
}

TEST_CASE("seed triangulation with interior point") {
  auto ps = triangle_center();
  auto t = seed_full_triangulation(ps, ps.all_mask());
  CHECK(t.g.edges.size() == 6);  // 3*4-3-3
  CHECK(regions_of_graph(t.g).size() == 3);
  CHECK(validate(t).empty());
}

TEST_CASE("flippable edges: quadrilateral diagonal") {
  auto ps = convex4();
  auto t = seed_full_triangulation(ps, ps.all_mask());
  auto fl = flippable_edges(t);
  REQUIRE(fl.size() == 1);
  CHECK_FALSE(is_hull_edge(ps, fl[0]));
}

TEST_CASE("triangle plus centered interior point has no flippable edge") {
  auto ps = triangle_center();
  auto t = seed_full_triangulation(ps, ps.all_mask());
  CHECK(flippable_edges(t).empty());  // matches ceil(4/2-2) = 0 tightness
}

TEST_CASE("edge flip involution and two-flip algebra") {
  auto ps = oracles::random_point_set(7, 11);
  auto t = seed_full_triangulation(ps, ps.all_mask());
  for (const Edge& e : flippable_edges(t)) {
    auto te = edge_flip(t, e);
    CHECK(validate(te).empty());
    // symmetric difference is {e, ebar}
    std::vector<Edge> diff;
    std::set_symmetric_difference(t.g.edges.begin(), t.g.edges.end(),
                                  te.g.edges.begin(), te.g.edges.end(),
                                  std::back_inserter(diff));
    REQUIRE(diff.size() == 2);
    Edge ebar = diff[0] == e ? diff[1] : diff[0];
    CHECK(edge_flip(te, ebar) == t);  // flip back
    for (const Edge& f : flippable_edges(te)) {
      if (f == ebar) continue;
      auto tef = edge_flip(te, f);
      std::vector<Edge> lost;
      std::set_difference(t.g.edges.begin(), t.g.edges.end(),
                          tef.g.edges.begin(), tef.g.edges.end(),
                          std::back_inserter(lost));
      std::vector<Edge> sym;
      std::set_symmetric_difference(t.g.edges.begin(), t.g.edges.end(),
                                    tef.g.edges.begin(), tef.g.edges.end(),
                                    std::back_inserter(sym));
      CHECK(sym.size() == 4);  // never back to t after two distinct flips
      if (e != f) {
        // E(T) \ E(T[e,f]) = {e,f} when f existed in t
        bool f_in_t = t.g.has_edge(f);
        if (f_in_t) CHECK(lost == std::vector<Edge>({std::min(e, f), std::max(e, f)}));
      }
    }
  }
}

TEST_CASE("bistellar flips: insert/remove involution") {
  auto ps = triangle_center();
  auto hullt = seed_full_triangulation(ps, ps.hull_mask);
  auto elems = flippable_elements(hullt);
  REQUIRE(elems.size() == 1);  // (h-3) + (n-h) = 0 + 1
  CHECK(elems[0].kind == FlipElement::Kind::InsertPoint);
  auto ins = apply_bistellar_flip(hullt, elems[0]);
  CHECK(validate(ins).empty());
  CHECK(ins.n_verts() == 4);
  auto rem = apply_bistellar_flip(
      ins, FlipElement{FlipElement::Kind::RemovePoint, Edge(0, 1), 3});
  CHECK(rem == hullt);
}

TEST_CASE("hull-only triangulation has exactly n-3 flip elements") {
  for (unsigned seed : {1u, 2u, 3u}) {
    auto ps = oracles::random_point_set(7, seed);
    auto t = seed_full_triangulation(ps, ps.hull_mask);
    CHECK(flippable_elements(t).size() == static_cast<size_t>(ps.n() - 3));
  }
}

TEST_CASE("random flip walks keep triangulations valid") {
  auto ps = oracles::random_point_set(9, 5);
  auto t = seed_full_triangulation(ps, ps.all_mask());
  std::mt19937 rng(42);
  for (int step = 0; step < 100; ++step) {
    auto fl = flippable_edges(t);
    REQUIRE_FALSE(fl.empty());
    t = edge_flip(t, fl[rng() % fl.size()]);
    REQUIRE(validate(t).empty());
  }
}

TEST_CASE("flip symmetry: e flippable in T[f] iff f flippable in T[e]") {
  auto ps = oracles::random_point_set(8, 17);
  auto t = seed_full_triangulation(ps, ps.all_mask());
  auto fl = flippable_edges(t);
  auto contains = [](const std::vector<Edge>& v, const Edge& e) {
    return std::find(v.begin(), v.end(), e) != v.end();
  };
  for (const Edge& e : fl)
    for (const Edge& f : fl) {
      if (e == f) continue;
      bool lhs = contains(flippable_edges(edge_flip(t, f)), e);
      bool rhs = contains(flippable_edges(edge_flip(t, e)), f);
      CHECK(lhs == rhs);
    }
}

TEST_CASE("insertion target triangle is unique") {
  auto ps = oracles::random_point_set(8, 23);
  auto t = seed_full_triangulation(ps, ps.hull_mask);
  for (int p : ps.inner) {
    int containing = 0;
    for (const Region& r : regions_of_graph(t.g))
      if (strictly_inside_convex(ps, r.boundary, p)) ++containing;
    CHECK(containing == 1);
  }
}
