#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "fliplab/simplex.hpp"

using namespace fliplab;

TEST_CASE("rref, rank, nullspace, rowspan") {
  RatMat m{{1, 2, 3}, {2, 4, 6}, {1, 0, 1}};
  CHECK(rank(m) == 2);
  auto ns = nullspace(m, 3);
  REQUIRE(ns.size() == 1);
  // check the kernel vector annihilates every row
  for (const auto& row : m) {
    Rat dot = 0;
    for (int j = 0; j < 3; ++j) dot += row[j] * ns[0][j];
    CHECK(dot == 0);
  }
  CHECK(in_rowspan(m, RatVec{2, 2, 4}));        // row0 + row2
  CHECK_FALSE(in_rowspan(m, RatVec{0, 0, 1}));
}

TEST_CASE("textbook LP") {
  // max 3x + 5y st x <= 4, 2y <= 12, 3x + 2y <= 18
  RatMat A{{1, 0}, {0, 2}, {3, 2}};
  RatVec b{4, 12, 18};
  RatVec c{3, 5};
  auto r = solve_lp(A, b, c);
  REQUIRE(r.status == LpResult::Status::Optimal);
  CHECK(r.objective == 36);
  CHECK(r.x == RatVec{2, 6});
}

TEST_CASE("unbounded LP detected") {
  RatMat A{{-1, 0}};
  RatVec b{1};
  RatVec c{1, 1};
  auto r = solve_lp(A, b, c);
  CHECK(r.status == LpResult::Status::Unbounded);
}

TEST_CASE("degenerate LP terminates (Bland)") {
  // classic cycling-prone example (Beale); Bland's rule must terminate
  RatMat A{{Rat(1, 4), -8, -1, 9},
           {Rat(1, 2), -12, Rat(-1, 2), 3},
           {0, 0, 1, 0}};
  RatVec b{0, 0, 1};
  RatVec c{Rat(3, 4), -20, Rat(1, 2), -6};
  auto r = solve_lp(A, b, c);
  REQUIRE(r.status == LpResult::Status::Optimal);
  CHECK(r.objective == Rat(1, 20) * 25);  // = 5/4
}

TEST_CASE("random LPs: strong duality and feasibility certify optimality") {
  std::mt19937 rng(7);
  auto coin = [&](int span) { return static_cast<int>(rng() % (2 * span + 1)) - span; };
  int optimal_seen = 0;
  for (int trial = 0; trial < 300; ++trial) {
    int n = 1 + static_cast<int>(rng() % 4);
    int m = 1 + static_cast<int>(rng() % 5);
    RatMat A(m, RatVec(n));
    RatVec b(m), c(n);
    for (int i = 0; i < m; ++i) {
      for (int j = 0; j < n; ++j) A[i][j] = coin(5);
      b[i] = static_cast<int>(rng() % 10);
    }
    for (int j = 0; j < n; ++j) c[j] = coin(5);
    auto r = solve_lp(A, b, c);
    if (r.status != LpResult::Status::Optimal) continue;
    ++optimal_seen;
    // primal feasibility
    Rat cx = 0;
    for (int j = 0; j < n; ++j) {
      CHECK(r.x[j] >= 0);
      cx += c[j] * r.x[j];
    }
    for (int i = 0; i < m; ++i) {
      Rat ax = 0;
      for (int j = 0; j < n; ++j) ax += A[i][j] * r.x[j];
      CHECK(ax <= b[i]);
    }
    CHECK(cx == r.objective);
    // dual feasibility: y >= 0 and A^T y >= c
    Rat yb = 0;
    for (int i = 0; i < m; ++i) {
      CHECK(r.y[i] >= 0);
      yb += r.y[i] * b[i];
    }
    for (int j = 0; j < n; ++j) {
      Rat aty = 0;
      for (int i = 0; i < m; ++i) aty += A[i][j] * r.y[i];
      CHECK(aty >= c[j]);
    }
    // strong duality
    CHECK(yb == r.objective);
  }
  CHECK(optimal_seen > 100);
}
