#pragma once

// Exact rational simplex (dense tableau, Bland's rule) for
//   maximize c.x  subject to  Ax <= b, x >= 0,  with b >= 0
// so the all-slack basis is feasible and no phase 1 is needed.
// Returns the primal optimum and the dual values read off the slack
// columns, which together certify optimality (c.x* = y*.b).

#include <stdexcept>
#include <vector>

#include "fliplab/linalg.hpp"

namespace fliplab {

struct LpResult {
  enum class Status { Optimal, Unbounded };
  Status status = Status::Optimal;
  Rat objective = 0;
  RatVec x;  // primal solution
  RatVec y;  // dual values per constraint, >= 0
};

inline LpResult solve_lp(const RatMat& A, const RatVec& b, const RatVec& c) {
  const int m = static_cast<int>(A.size());
  const int n = static_cast<int>(c.size());
  for (const Rat& bi : b)
    if (bi < 0) throw std::invalid_argument("solve_lp requires b >= 0");

  // tableau: m constraint rows over [x | slacks | rhs], then the cost row
  const int cols = n + m + 1;
  RatMat T(m + 1, RatVec(cols, 0));
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < n; ++j) T[i][j] = A[i][j];
    T[i][n + i] = 1;
    T[i][cols - 1] = b[i];
  }
  for (int j = 0; j < n; ++j) T[m][j] = c[j];

  std::vector<int> basis(m);
  for (int i = 0; i < m; ++i) basis[i] = n + i;

  while (true) {
    int enter = -1;  // Bland: smallest improving column
    for (int j = 0; j < n + m; ++j)
      if (T[m][j] > 0) {
        enter = j;
        break;
      }
    if (enter < 0) break;
    int leave = -1;
    Rat best_ratio = 0;
    for (int i = 0; i < m; ++i) {
      if (T[i][enter] <= 0) continue;
      Rat ratio = T[i][cols - 1] / T[i][enter];
      if (leave < 0 || ratio < best_ratio ||
          (ratio == best_ratio && basis[i] < basis[leave])) {
        leave = i;
        best_ratio = ratio;
      }
    }
    if (leave < 0) {
      LpResult r;
      r.status = LpResult::Status::Unbounded;
      return r;
    }
    // pivot on (leave, enter)
    Rat inv = 1 / T[leave][enter];
    for (int j = 0; j < cols; ++j) T[leave][j] *= inv;
    for (int i = 0; i <= m; ++i) {
      if (i == leave || T[i][enter] == 0) continue;
      Rat f = T[i][enter];
      for (int j = 0; j < cols; ++j) T[i][j] -= f * T[leave][j];
    }
    basis[leave] = enter;
  }

  LpResult r;
  r.objective = -T[m][cols - 1];
  r.x.assign(n, 0);
  for (int i = 0; i < m; ++i)
    if (basis[i] < n) r.x[basis[i]] = T[i][cols - 1];
  r.y.assign(m, 0);
  for (int i = 0; i < m; ++i) r.y[i] = -T[m][n + i];
  return r;
}

}  // namespace fliplab
