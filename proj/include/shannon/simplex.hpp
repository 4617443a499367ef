#pragma once

// Exact tableau simplex with Bland's rule for packing LPs
//
//   maximize c·y  subject to  A y <= b,  y >= 0,  with b >= 0,
//
// so the slack basis is feasible and no phase one is needed. The dual
// (minimize b·w subject to Aᵀw >= c, w >= 0) is read off the final objective
// row.

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "shannon/rational.hpp"

namespace shannon {

struct PackingSolution {
  Rational optimum;
  std::vector<Rational> primal;  // y, one per column of A
  std::vector<Rational> dual;    // w, one per row of A
  std::size_t pivots = 0;
};

inline PackingSolution solve_packing_lp(const std::vector<std::vector<Rational>>& a,
                                        const std::vector<Rational>& b,
                                        const std::vector<Rational>& c) {
  const std::size_t rows = a.size();
  const std::size_t cols = c.size();
  if (b.size() != rows) throw std::invalid_argument("packing LP: b has wrong length");
  for (const auto& row : a)
    if (row.size() != cols) throw std::invalid_argument("packing LP: ragged matrix");
  for (const auto& bi : b)
    if (sgn(bi) < 0) throw std::invalid_argument("packing LP: negative right-hand side");

  // Columns 0..cols-1 structural, cols..cols+rows-1 slack, last = rhs.
  const std::size_t width = cols + rows + 1;
  std::vector<std::vector<Rational>> t(rows, std::vector<Rational>(width));
  std::vector<std::size_t> basis(rows);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) t[i][j] = a[i][j];
    t[i][cols + i] = 1;
    t[i][width - 1] = b[i];
    basis[i] = cols + i;
  }
  // Reduced costs z_j - c_j; optimal when all are >= 0.
  std::vector<Rational> z(width);
  for (std::size_t j = 0; j < cols; ++j) z[j] = -c[j];

  PackingSolution sol;
  while (true) {
    std::size_t enter = width;
    for (std::size_t j = 0; j + 1 < width; ++j) {
      if (sgn(z[j]) < 0) {
        enter = j;
        break;
      }
    }
    if (enter == width) break;

    std::size_t leave = rows;
    Rational best_ratio;
    for (std::size_t i = 0; i < rows; ++i) {
      if (sgn(t[i][enter]) <= 0) continue;
      Rational ratio = t[i][width - 1] / t[i][enter];
      if (leave == rows || ratio < best_ratio ||
          (ratio == best_ratio && basis[i] < basis[leave])) {
        leave = i;
        best_ratio = ratio;
      }
    }
    if (leave == rows) throw std::runtime_error("packing LP is unbounded");

    const Rational pivot = t[leave][enter];
    for (auto& x : t[leave]) x /= pivot;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == leave || sgn(t[i][enter]) == 0) continue;
      const Rational f = t[i][enter];
      for (std::size_t j = 0; j < width; ++j)
        if (sgn(t[leave][j]) != 0) t[i][j] -= f * t[leave][j];
    }
    if (sgn(z[enter]) != 0) {
      const Rational f = z[enter];
      for (std::size_t j = 0; j < width; ++j)
        if (sgn(t[leave][j]) != 0) z[j] -= f * t[leave][j];
    }
    basis[leave] = enter;
    ++sol.pivots;
  }

  sol.optimum = z[width - 1];
  sol.primal.assign(cols, Rational(0));
  for (std::size_t i = 0; i < rows; ++i)
    if (basis[i] < cols) sol.primal[basis[i]] = t[i][width - 1];
  sol.dual.resize(rows);
  for (std::size_t i = 0; i < rows; ++i) sol.dual[i] = z[cols + i];
  return sol;
}

}  // namespace shannon
