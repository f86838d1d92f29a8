#pragma once

#include <vector>

#include "shilab/errors.hpp"
#include "shilab/rational.hpp"

namespace shilab {

/**
 * Decides whether `target` lies in the cone of nonnegative rational
 * combinations of `gens`, by a phase-one simplex over exact rationals.
 *
 * The system is  A x = b, x >= 0  with the generators as the columns of A.
 * One artificial variable per row gives a trivially feasible start; Bland's
 * rule guarantees termination, and feasibility of the original system is
 * equivalent to driving the artificial objective to zero.  Everything is a
 * cpp_rational, so the answer is exact — membership on the boundary of the
 * cone is decided correctly.
 */
inline bool in_nonneg_span(const std::vector<Vec>& gens, const Vec& target) {
  const std::size_t m = target.size();
  const std::size_t n = gens.size();
  for (const Vec& g : gens)
    if (g.size() != m) throw Error("generator/target dimension mismatch");

  // Tableau: columns [0, n) structural, [n, n+m) artificial, last column b.
  std::vector<Vec> t(m, Vec(n + m + 1, Rat(0)));
  for (std::size_t i = 0; i < m; ++i) {
    bool flip = target[i] < 0;
    for (std::size_t j = 0; j < n; ++j) t[i][j] = flip ? -gens[j][i] : gens[j][i];
    t[i][n + i] = 1;
    t[i][n + m] = flip ? -target[i] : target[i];
  }
  std::vector<std::size_t> basis(m);
  for (std::size_t i = 0; i < m; ++i) basis[i] = n + i;

  // Phase-one cost row for minimizing the artificial sum: z_j = c_j - sum of
  // basic-cost-weighted column entries; artificials cost 1, structurals 0.
  Vec z(n + m + 1, Rat(0));
  for (std::size_t j = 0; j <= n + m; ++j) {
    Rat s = 0;
    for (std::size_t i = 0; i < m; ++i) s += t[i][j];
    z[j] = (j >= n && j < n + m ? Rat(1) : Rat(0)) - s;
  }

  for (;;) {
    // Bland: entering column = smallest index with negative reduced cost.
    std::size_t enter = n + m;
    for (std::size_t j = 0; j < n + m; ++j)
      if (z[j] < 0) {
        enter = j;
        break;
      }
    if (enter == n + m) break;  // optimal

    // Ratio test, ties broken by smallest basis index (Bland again).
    std::size_t leave = m;
    Rat best = 0;
    for (std::size_t i = 0; i < m; ++i) {
      if (t[i][enter] <= 0) continue;
      Rat ratio = t[i][n + m] / t[i][enter];
      if (leave == m || ratio < best || (ratio == best && basis[i] < basis[leave])) {
        leave = i;
        best = ratio;
      }
    }
    if (leave == m) throw Error("internal: unbounded phase-one simplex");

    // Pivot on (leave, enter).
    Rat piv = t[leave][enter];
    for (std::size_t j = 0; j <= n + m; ++j) t[leave][j] /= piv;
    for (std::size_t i = 0; i < m; ++i) {
      if (i == leave || t[i][enter] == 0) continue;
      Rat f = t[i][enter];
      for (std::size_t j = 0; j <= n + m; ++j) t[i][j] -= f * t[leave][j];
    }
    if (z[enter] != 0) {
      Rat f = z[enter];
      for (std::size_t j = 0; j <= n + m; ++j) z[j] -= f * t[leave][j];
    }
    basis[leave] = enter;
  }

  // Feasible iff no artificial variable carries value anymore.
  Rat residual = 0;
  for (std::size_t i = 0; i < m; ++i)
    if (basis[i] >= n) residual += t[i][n + m];
  return residual == 0;
}

}  // namespace shilab
