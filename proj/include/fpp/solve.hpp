#pragma once

#include <cstddef>
#include <vector>

#include "fpp/int_matrix.hpp"

namespace fpp {

/// Verdict of an exact linear solve. When `consistent`, `solution` is one
/// witness with a * solution = b exactly (free unknowns set to zero).
struct SolveResult {
  bool consistent = false;
  RatVector solution;
};

/// Rank by fraction-free (Bareiss) elimination; the matrix stays integral
/// throughout.
inline std::size_t fraction_free_rank(const IntMatrix& input) {
  IntMatrix a = input;
  const std::size_t r = a.rows(), c = a.cols();
  Int prev = 1;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < c && rank < r; ++col) {
    std::size_t piv = rank;
    while (piv < r && a.at(piv, col) == 0) ++piv;
    if (piv == r) continue;
    if (piv != rank) a.swap_rows(rank, piv);
    for (std::size_t i = rank + 1; i < r; ++i) {
      for (std::size_t j = col + 1; j < c; ++j)
        a.at(i, j) = (a.at(i, j) * a.at(rank, col) - a.at(i, col) * a.at(rank, j)) / prev;
      a.at(i, col) = 0;
    }
    prev = a.at(rank, col);
    ++rank;
  }
  return rank;
}

inline SolveResult solve_rational(const IntMatrix& a, const RatVector& b) {
  if (a.rows() != b.size()) throw std::invalid_argument("solve_rational: row count != rhs length");
  const std::size_t r = a.rows(), c = a.cols();

  // Consistency verdict by rank comparison on integral matrices; scaling the
  // rhs column by the common denominator does not change the rank.
  const Int scale = lcm_denominators(b);
  IntMatrix aug(r, c + 1);
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < c; ++j) aug.at(i, j) = a.at(i, j);
    Rat scaled = b[i] * Rat(scale);
    aug.at(i, c) = numerator(scaled);
  }
  SolveResult res;
  res.consistent = fraction_free_rank(a) == fraction_free_rank(aug);
  if (!res.consistent) return res;

  // One witness via rational row reduction, free unknowns pinned to zero.
  std::vector<RatVector> m(r, RatVector(c + 1, Rat(0)));
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < c; ++j) m[i][j] = Rat(a.at(i, j));
    m[i][c] = b[i];
  }
  std::vector<std::size_t> pivot_col;
  std::size_t row = 0;
  for (std::size_t col = 0; col < c && row < r; ++col) {
    std::size_t piv = row;
    while (piv < r && m[piv][col] == 0) ++piv;
    if (piv == r) continue;
    std::swap(m[piv], m[row]);
    const Rat inv = Rat(1) / m[row][col];
    for (std::size_t j = col; j <= c; ++j) m[row][j] *= inv;
    for (std::size_t i = 0; i < r; ++i) {
      if (i == row || m[i][col] == 0) continue;
      const Rat f = m[i][col];
      for (std::size_t j = col; j <= c; ++j) m[i][j] -= f * m[row][j];
    }
    pivot_col.push_back(col);
    ++row;
  }

  res.solution.assign(c, Rat(0));
  for (std::size_t i = 0; i < pivot_col.size(); ++i) res.solution[pivot_col[i]] = m[i][c];

  // a * x = b must hold exactly; anything else is a programming error.
  for (std::size_t i = 0; i < r; ++i) {
    Rat acc(0);
    for (std::size_t j = 0; j < c; ++j) acc += Rat(a.at(i, j)) * res.solution[j];
    if (acc != b[i]) throw std::logic_error("solve_rational: witness check failed");
  }
  return res;
}

}  // namespace fpp
