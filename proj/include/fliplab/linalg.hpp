#pragma once

// Small exact rational linear algebra: reduced row echelon form, rank,
// nullspace, rowspan membership. Sizes here are tiny, so no pivoting
// heuristics beyond "first nonzero".

#include <gmpxx.h>

#include <vector>

namespace fliplab {

using Rat = mpq_class;
using RatVec = std::vector<Rat>;
using RatMat = std::vector<RatVec>;

// In-place reduced row echelon form; returns the pivot columns.
inline std::vector<int> rref(RatMat& m) {
  std::vector<int> pivots;
  if (m.empty()) return pivots;
  const int rows = static_cast<int>(m.size());
  const int cols = static_cast<int>(m[0].size());
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int pr = -1;
    for (int i = r; i < rows; ++i)
      if (m[i][c] != 0) {
        pr = i;
        break;
      }
    if (pr < 0) continue;
    std::swap(m[r], m[pr]);
    Rat inv = 1 / m[r][c];
    for (int j = c; j < cols; ++j) m[r][j] *= inv;
    for (int i = 0; i < rows; ++i) {
      if (i == r || m[i][c] == 0) continue;
      Rat f = m[i][c];
      for (int j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

inline int rank(RatMat m) { return static_cast<int>(rref(m).size()); }

// Basis of {x : Mx = 0} for an ncols-variable system.
inline RatMat nullspace(RatMat m, int ncols) {
  auto pivots = rref(m);
  std::vector<char> is_pivot(ncols, 0);
  for (int c : pivots) is_pivot[c] = 1;
  RatMat basis;
  for (int fc = 0; fc < ncols; ++fc) {
    if (is_pivot[fc]) continue;
    RatVec v(ncols, 0);
    v[fc] = 1;
    for (size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m[r][fc];
    basis.push_back(std::move(v));
  }
  return basis;
}

// True iff v is a linear combination of the rows of m.
inline bool in_rowspan(RatMat m, RatVec v) {
  auto pivots = rref(m);
  for (size_t r = 0; r < pivots.size(); ++r) {
    if (v[pivots[r]] == 0) continue;
    Rat f = v[pivots[r]];
    for (size_t j = 0; j < v.size(); ++j) v[j] -= f * m[r][j];
  }
  for (const Rat& x : v)
    if (x != 0) return false;
  return true;
}

}  // namespace fliplab
