#include <catch2/catch_amalgamated.hpp>

#include "fliplab/generators.hpp"
#include "fliplab/regularity.hpp"
#include "oracles.hpp"

using namespace fliplab;

namespace {
PointSet triangle_center() {
  return assert_general_position(
      std::vector<Point>{{0, 0}, {12, 0}, {3, 12}, {4, 4}});
}

HeightFunction paraboloid(const PointSet& ps) {
  HeightFunction w;
  for (int i = 0; i < ps.n(); ++i)
    w.h[i] = Rat(ps[i].x) * ps[i].x + Rat(ps[i].y) * ps[i].y;
  return w;
}

HeightFunction linear(const PointSet& ps, long a, long b, long c) {
  HeightFunction w;
  for (int i = 0; i < ps.n(); ++i) w.h[i] = a * Rat(ps[i].x) + b * Rat(ps[i].y) + c;
  return w;
}

// flip to the Delaunay triangulation under the paraboloid lift
Triangulation delaunay(const PointSet& ps) {
  auto t = seed_full_triangulation(ps, ps.all_mask());
  auto w = paraboloid(ps);
  bool changed = true;
  while (changed) {
    changed = false;
    for (const Edge& e : inner_edges(t.g)) {
      auto [w1, w2] = opposite_apexes(t, e);
      if (evaluate(above_row(ps, e.a, e.b, w1, w2), w) < 0) {
        t = edge_flip(t, e);
        changed = true;
        break;
      }
    }
  }
  return t;
}

// stacked: hull triangle, then successive point insertions
Triangulation stacked(const PointSet& ps) {
  REQUIRE(ps.h() == 3);
  auto t = seed_full_triangulation(ps, ps.hull_mask);
  for (int p : ps.inner)
    t = apply_bistellar_flip(t, FlipElement{FlipElement::Kind::InsertPoint,
                                            Edge(0, 1), p});
  return t;
}
}  // namespace

TEST_CASE("above_row agrees with the circumcircle test") {
  auto ps = assert_general_position(
      std::vector<Point>{{0, 0}, {2, 0}, {1, -1}, {1, 2}});
  // under the paraboloid, q above plane(a,b,c) iff q outside circumcircle
  auto w = paraboloid(ps);
  CHECK(evaluate(above_row(ps, 0, 1, 2, 3), w) > 0);   // (1,2) outside
  // circle through (0,0),(2,0),(1,-2): center (1,-3/4), radius 5/4
  auto ps2 = assert_general_position(
      std::vector<Point>{{0, 0}, {2, 0}, {1, -2}, {1, -1}});
  CHECK(evaluate(above_row(ps2, 0, 1, 2, 3), paraboloid(ps2)) < 0);  // inside
}

TEST_CASE("compliant dimension") {
  auto ps = oracles::random_point_set(6, 3);
  // triangulation: every height function is compliant
  auto t = seed_full_triangulation(ps, ps.all_mask());
  auto cs = compliant_dim(as_subdivision(t));
  CHECK(cs.dim == std::popcount(t.g.verts));
  // trivial subdivision: only the linear functions
  CHECK(compliant_dim(trivial_subdivision(ps)).dim == 3);
  // general lower bound over all full subdivisions
  for (const Subdivision& s : enumerate_full_subdivisions(ps, 8)) {
    auto c = compliant_dim(s);
    CHECK(c.dim >= static_cast<int>(c.vars.size()) - slack(s));
  }
}

TEST_CASE("trivial subdivision and convex sets are regular") {
  auto ps = oracles::random_point_set(6, 11);
  CHECK(is_regular_subdivision(trivial_subdivision(ps)).regular);
  auto gon = convex_gon(6);
  for (const Triangulation& t : enumerate_triangulations_on(gon, gon.all_mask())) {
    CHECK(is_regular_triangulation(t).regular);
    CHECK(is_regular_subdivision(as_subdivision(t)).regular);
  }
}

TEST_CASE("stacked triangulations are regular with a perfect chain") {
  auto ps = assert_general_position(std::vector<Point>{
      {0, 0}, {100, 4}, {4, 100}, {30, 30}, {25, 10}});
  auto t = stacked(ps);
  CHECK(is_regular_triangulation(t).regular);
  auto chain = perfect_chain_to_trivial(as_subdivision(t));
  CHECK(chain.found);
  CHECK(chain.chain.size() == static_cast<size_t>(ps.n() - 3 + 1));
}

TEST_CASE("Delaunay triangulation: paraboloid heights give all-valley labels") {
  auto ps = oracles::random_point_set(8, 19);
  auto t = delaunay(ps);
  CHECK(validate(t).empty());
  auto labels = omega_labeling(as_subdivision(t), paraboloid(ps));
  for (const auto& [e, lb] : labels) CHECK(lb == FoldLabel::Valley);
  CHECK(is_regular_triangulation(t).regular);
  // linear heights are compliant with everything and label all edges flat
  auto flat = omega_labeling(as_subdivision(t), linear(ps, 2, -3, 7));
  for (const auto& [e, lb] : flat) CHECK(lb == FoldLabel::Flat);
}

TEST_CASE("labeling validity") {
  auto ps = triangle_center();
  auto s = as_subdivision(seed_full_triangulation(ps, ps.all_mask()));
  SECTION("all-flat labeling is valid") {
    EdgeLabeling all0;
    for (const Edge& e : inner_edges(s.g)) all0[e] = FoldLabel::Flat;
    CHECK(valid_labeling_check(s, all0).valid);
  }
  SECTION("mixed labels at a degree-3 vertex are pointed") {
    auto inn = inner_edges(s.g);
    REQUIRE(inn.size() == 3);
    EdgeLabeling lab{{inn[0], FoldLabel::Mountain},
                     {inn[1], FoldLabel::Valley},
                     {inn[2], FoldLabel::Valley}};
    auto r = valid_labeling_check(s, lab);
    CHECK_FALSE(r.valid);
    CHECK(r.alpha_pointed == 3);
  }
  SECTION("labelings from compliant heights are valid") {
    auto ps2 = oracles::random_point_set(7, 23);
    auto t = delaunay(ps2);
    auto s2 = as_subdivision(t);
    CHECK(valid_labeling_check(s2, omega_labeling(s2, paraboloid(ps2))).valid);
    auto witness = is_regular_triangulation(t).witness;
    CHECK(valid_labeling_check(s2, omega_labeling(s2, witness)).valid);
  }
}

TEST_CASE("non-compliant heights are rejected") {
  auto ps = convex_gon(5);
  auto s = trivial_subdivision(ps);
  HeightFunction w = linear(ps, 1, 1, 0);
  w.h[2] += 1;  // break coplanarity of the single region
  CHECK_THROWS_AS(omega_labeling(s, w), NotCompliantError);
}

TEST_CASE("nested triangles: concurrent variant") {
  auto fam = mother_family(true);
  CHECK(is_regular_subdivision(fam.square).regular);
  CHECK_FALSE(is_regular_triangulation(fam.t1).regular);
  CHECK_FALSE(is_regular_triangulation(fam.t2).regular);
}

TEST_CASE("nested triangles: non-concurrent variant") {
  auto fam = mother_family(false);
  CHECK_FALSE(is_regular_subdivision(fam.square).regular);
  bool r1 = is_regular_triangulation(fam.t1).regular;
  bool r2 = is_regular_triangulation(fam.t2).regular;
  CHECK(r1 != r2);
}

TEST_CASE("twisted double-gon k=3: non-regular triangulation exists") {
  auto ps = twisted_double_gon(3);
  bool found_nonregular = false;
  for (const Triangulation& t : enumerate_triangulations_on(ps, ps.all_mask(), 8))
    if (!is_regular_triangulation(t).regular) found_nonregular = true;
  CHECK(found_nonregular);
  // the windmill subdivision has no perfect chain to trivial
  CHECK_FALSE(perfect_chain_to_trivial(twisted_square(ps)).found);
}

TEST_CASE("twisted double-gon k=3: proper subsets are all regular") {
  auto ps = twisted_double_gon(3);
  for (std::uint64_t sub = 0; sub < (1u << 6); ++sub) {
    if (std::popcount(sub) < 3 || sub == ps.all_mask()) continue;
    std::vector<Point> pts;
    for (int i = 0; i < 6; ++i)
      if ((sub >> i) & 1) pts.push_back(ps[i]);
    PointSet local = assert_general_position(pts);
    for (const Triangulation& t :
         enumerate_triangulations_on(local, local.all_mask(), 8))
      CHECK(is_regular_triangulation(t).regular);
  }
}

TEST_CASE("perfect chains exist for convex subdivisions") {
  auto gon = convex_gon(6);
  for (const Triangulation& t : enumerate_triangulations_on(gon, gon.all_mask()))
    CHECK(perfect_chain_to_trivial(as_subdivision(t)).found);
}
