#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <set>

#include "fliplab/subdivision.hpp"
#include "oracles.hpp"

using namespace fliplab;

namespace {
PointSet square_center() {
  return assert_general_position(
      std::vector<Point>{{0, 0}, {10, 0}, {10, 10}, {0, 10}, {5, 6}});
}
PointSet triangle_center() {
  return assert_general_position(
      std::vector<Point>{{0, 0}, {12, 0}, {3, 12}, {4, 4}});
}
PointSet convex_poly(int n) {
  // points on a tight parabola-like arc bent into convex position
  std::vector<Point> pts;
  for (int i = 0; i < n; ++i) {
    double a = 2 * 3.14159265358979 * i / n;
    pts.push_back({static_cast<Coord>(std::llround(1000 + 997 * std::cos(a + 0.1))),
                   static_cast<Coord>(std::llround(1000 + 991 * std::sin(a + 0.1)))});
  }
  return assert_general_position(pts);
}
std::set<std::string> key_set(const auto& items) {
  std::set<std::string> keys;
  for (const auto& x : items) keys.insert(canonical_key(x));
  return keys;
}
}  // namespace

TEST_CASE("trivial subdivision: slack n-3, one region, inner bystanders") {
  for (unsigned seed : {1u, 4u, 9u}) {
    auto ps = oracles::random_point_set(7, seed);
    auto s = trivial_subdivision(ps);
    CHECK(validate(s).empty());
    CHECK(slack(s) == ps.n() - 3);
    CHECK(regions_of(s).size() == 1);
    CHECK(s.bystanders() == ps.inner);
    CHECK(s.full() == ps.inner.empty());  // full = all points, no bystanders
    CHECK(s.is_triangulation() == (ps.n() == 3));
  }
}

TEST_CASE("refinement order basics") {
  auto ps = square_center();
  auto t = seed_full_triangulation(ps, ps.all_mask());
  auto s = as_subdivision(t);
  auto triv = trivial_subdivision(ps);
  CHECK(is_refinement(s, s));
  CHECK(is_refinement(s, triv));
  CHECK_FALSE(is_refinement(triv, s));
  CHECK(triangulation_refines(t, triv));
  // a hull-only triangulation also refines the trivial subdivision
  auto th = seed_full_triangulation(ps, ps.hull_mask);
  CHECK(triangulation_refines(th, triv));
}

TEST_CASE("meet: coarsest common refinement") {
  auto ps = square_center();
  auto triv = trivial_subdivision(ps);
  auto t = as_subdivision(seed_full_triangulation(ps, ps.all_mask()));
  SECTION("with the trivial subdivision") {
    auto m = meet(t, triv);
    REQUIRE(m.has_value());
    CHECK(canonical_key(*m) == canonical_key(t));
  }
  SECTION("crossing diagonals have no common refinement") {
    PlaneGraph a{&ps, ps.hull_mask, hull_edges(ps)};
    a.insert_edge(Edge(0, 2));
    PlaneGraph b{&ps, ps.hull_mask, hull_edges(ps)};
    b.insert_edge(Edge(1, 3));
    CHECK_FALSE(meet(Subdivision{a}, Subdivision{b}).has_value());
  }
  SECTION("distinct triangulations are minimal: no common refinement") {
    auto ps5 = convex_poly(5);
    auto t1 = seed_full_triangulation(ps5, ps5.all_mask());
    auto t2 = edge_flip(t1, flippable_edges(t1)[0]);
    CHECK_FALSE(meet(as_subdivision(t1), as_subdivision(t2)).has_value());
  }
  SECTION("two slack-1 coarsenings of T meet in T") {
    auto ps5 = convex_poly(5);
    auto t1 = seed_full_triangulation(ps5, ps5.all_mask());
    auto fl = flippable_edges(t1);
    REQUIRE(fl.size() >= 2);
    Subdivision s1 = as_subdivision(t1), s2 = as_subdivision(t1);
    s1.g.erase_edge(fl[0]);
    s2.g.erase_edge(fl[1]);
    auto m = meet(s1, s2);
    REQUIRE(m.has_value());
    CHECK(canonical_key(*m) == canonical_key(as_subdivision(t1)));
  }
}

TEST_CASE("partial triangulation enumeration matches the oracle") {
  for (unsigned seed : {2u, 5u, 8u}) {
    auto ps = oracles::random_point_set(6, seed);
    auto fast = enumerate_partial_triangulations(ps);
    auto slow = oracles::all_partial_triangulations_oracle(ps);
    CHECK(fast.size() == slow.size());
    std::set<std::string> slow_keys;
    for (auto& g : slow) slow_keys.insert(canonical_key(g));
    CHECK(key_set(fast) == slow_keys);
    for (auto& t : fast) CHECK(validate(t).empty());
  }
  // convex position: partial = full, Catalan numbers
  CHECK(enumerate_partial_triangulations(convex_poly(5)).size() == 5);
  CHECK(enumerate_partial_triangulations(convex_poly(6)).size() == 14);
}

TEST_CASE("poset nodes are exactly the valid subdivisions") {
  for (unsigned seed : {3u, 6u}) {
    auto ps = oracles::random_point_set(5, seed);
    auto po = build_poset(ps);
    auto oracle = oracles::all_subdivisions_oracle(ps);
    CHECK(po.nodes.size() == oracle.size());
    CHECK(key_set(po.nodes) == key_set(oracle));
  }
}

TEST_CASE("poset structure: covers, heights, extremes") {
  auto ps = oracles::random_point_set(6, 12);
  auto po = build_poset(ps);
  int triv_id = po.id_of(trivial_subdivision(ps));
  REQUIRE(triv_id >= 0);
  CHECK(po.coarsenings[triv_id].empty());  // unique maximum
  CHECK(po.height[triv_id] == po.height_max);
  int minimal = 0;
  for (size_t i = 0; i < po.nodes.size(); ++i) {
    for (int c : po.coarsenings[i]) {
      CHECK(is_refinement(po.nodes[i], po.nodes[c]));
      CHECK(po.node_slack[c] > po.node_slack[i]);
      CHECK(po.height[c] > po.height[i]);
    }
    if (po.refinements[i].empty()) {
      ++minimal;
      CHECK(po.nodes[i].is_triangulation());
      CHECK(po.height[i] == 0);
    }
  }
  CHECK(minimal ==
        static_cast<int>(enumerate_partial_triangulations(ps).size()));
  // reachability through covers agrees with the order relation
  const int m = static_cast<int>(po.nodes.size());
  std::vector<std::vector<char>> reach(m, std::vector<char>(m, 0));
  for (int i = 0; i < m; ++i) reach[i][i] = 1;
  // nodes sorted topologically by height for the closure
  std::vector<int> order(m);
  for (int i = 0; i < m; ++i) order[i] = i;
  std::sort(order.begin(), order.end(),
            [&](int a, int b) { return po.height[a] < po.height[b]; });
  for (int v : order)
    for (int r : po.refinements[v])
      for (int x = 0; x < m; ++x) reach[x][v] |= reach[x][r];
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      CHECK(static_cast<bool>(reach[i][j]) ==
            is_refinement(po.nodes[i], po.nodes[j]));
}

TEST_CASE("prime coarsener of a triangle with center: perfect") {
  auto ps = triangle_center();
  auto s = as_subdivision(seed_full_triangulation(ps, ps.all_mask()));
  auto pcs = prime_coarseners(s);
  REQUIRE(pcs.size() == 1);
  CHECK(pcs[0].points == (std::uint64_t{1} << 3));
  CHECK(pcs[0].incident_edges.size() == 3);
  CHECK(pcs[0].increment == 1);
  CHECK(pcs[0].is_perfect);
  auto steps = direct_coarsenings(s);
  REQUIRE(steps.size() == 1);  // no skipped points, no unlocked inner edges
  CHECK(steps[0].label == "isolate 3");
  CHECK(slack(steps[0].result) == 1);
  CHECK(perfect_coarsenings(s).size() == 1);
}

TEST_CASE("direct coarsenings of a convex-quad triangulation") {
  auto ps = convex_poly(4);
  auto s = as_subdivision(seed_full_triangulation(ps, ps.all_mask()));
  auto steps = direct_coarsenings(s);
  REQUIRE(steps.size() == 1);  // drop the diagonal
  CHECK(canonical_key(steps[0].result) ==
        canonical_key(trivial_subdivision(ps)));
}

TEST_CASE("coarsener membership is definitional") {
  auto ps = oracles::random_point_set(6, 20);
  auto full = enumerate_full_subdivisions(ps, 8);
  for (const Subdivision& s : full) {
    CHECK(validate(s).empty());
    CHECK(s.full());
    // prime coarseners are coarseners, minimal, locked
    for (const Coarsener& c : prime_coarseners(s)) {
      CHECK(is_coarsener(s, c.points));
      for (const Edge& e : c.incident_edges) CHECK(edge_locked(s.g, e));
      for (std::uint64_t sub = (c.points - 1) & c.points; sub;
           sub = (sub - 1) & c.points)
        CHECK_FALSE(is_coarsener(s, sub));
    }
    // every direct coarsening is valid and strictly coarser
    for (const CoarseningStep& st : direct_coarsenings(s)) {
      CHECK(validate(st.result).empty());
      CHECK(is_refinement(s, st.result));
      CHECK(canonical_key(st.result) != canonical_key(s));
    }
  }
}

TEST_CASE("full subdivision enumeration contains all full triangulations") {
  auto ps = oracles::random_point_set(6, 30);
  auto full = enumerate_full_subdivisions(ps, 8);
  auto tris = enumerate_triangulations_on(ps, ps.all_mask());
  auto keys = key_set(full);
  for (const Triangulation& t : tris)
    CHECK(keys.contains(canonical_key(t)));
  // oracle cross-check: full subdivisions = valid subdivisions using all
  // points with no bystanders
  int expect = 0;
  for (const Subdivision& s : oracles::all_subdivisions_oracle(ps))
    if (s.full()) ++expect;
  CHECK(static_cast<int>(full.size()) == expect);
}

TEST_CASE("unoriented edges audit on a triangle with center") {
  auto ps = triangle_center();
  auto s = as_subdivision(seed_full_triangulation(ps, ps.all_mask()));
  auto heads = lock_orientation(s);
  REQUIRE(heads.size() == 3);
  for (auto& [e, h] : heads) CHECK(h == 3);
  auto a = unoriented_edges_audit(s, heads, true);
  CHECK(a.well_oriented);
  CHECK(a.unoriented == 0);
  CHECK(a.indegree_histogram == std::vector<int>{0, 0, 0, 1});
  CHECK(a.slack == 0);
  CHECK(a.bound_exact_applicable);
  CHECK(a.bound_exact_holds);
  CHECK(a.bound_half_holds);
}

TEST_CASE("audit rejects heads on hull points") {
  auto ps = triangle_center();
  auto s = as_subdivision(seed_full_triangulation(ps, ps.all_mask()));
  std::map<Edge, int> heads{{Edge(0, 3), 0}};
  CHECK_THROWS_AS(unoriented_edges_audit(s, heads, true),
                  NotWellOrientedError);
  auto a = unoriented_edges_audit(s, heads, false);
  CHECK_FALSE(a.well_oriented);
}

TEST_CASE("lock orientation satisfies the counting bounds on random sets") {
  for (unsigned seed : {7u, 14u, 21u}) {
    auto ps = oracles::random_point_set(7, seed);
    for (const Triangulation& t : enumerate_triangulations_on(ps, ps.all_mask())) {
      auto s = as_subdivision(t);
      auto a = unoriented_edges_audit(s, lock_orientation(s));
      if (a.bound_exact_applicable) CHECK(a.bound_exact_holds);
      if (a.well_oriented) CHECK(a.bound_half_holds);
    }
  }
}

TEST_CASE("caps are enforced") {
  auto ps = oracles::random_point_set(9, 2);
  CHECK_THROWS_AS(enumerate_partial_triangulations(ps, 8), CapExceededError);
  CHECK_THROWS_AS(build_poset(ps, 8), CapExceededError);
  CHECK_THROWS_AS(enumerate_triangulations_on(ps, ps.all_mask(), 8),
                  CapExceededError);
}
