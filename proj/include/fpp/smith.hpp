#pragma once

#include <algorithm>
#include <cstddef>
#include <vector>

#include "fpp/int_matrix.hpp"

namespace fpp {

/// Smith normal form left * input * right = diag(divisors).
/// Divisors are nonnegative and form a divisibility chain d1 | d2 | ...;
/// both transforms are unimodular.
struct SnfResult {
  std::vector<Int> divisors;  // length min(rows, cols)
  IntMatrix left;             // rows x rows
  IntMatrix right;            // cols x cols

  IntMatrix diagonal(std::size_t rows, std::size_t cols) const {
    IntMatrix d(rows, cols);
    for (std::size_t i = 0; i < divisors.size(); ++i) d.at(i, i) = divisors[i];
    return d;
  }
};

namespace detail {

inline Int int_abs(const Int& v) { return v < 0 ? -v : v; }

// Position of an entry with smallest nonzero |value| in the trailing block.
inline bool find_pivot(const IntMatrix& a, std::size_t t, std::size_t& pi, std::size_t& pj) {
  bool found = false;
  Int best = 0;
  for (std::size_t i = t; i < a.rows(); ++i)
    for (std::size_t j = t; j < a.cols(); ++j) {
      const Int& v = a.at(i, j);
      if (v == 0) continue;
      if (!found || int_abs(v) < best) {
        found = true;
        best = int_abs(v);
        pi = i;
        pj = j;
      }
    }
  return found;
}

}  // namespace detail

inline SnfResult smith_normal_form(const IntMatrix& input) {
  const std::size_t r = input.rows(), c = input.cols();
  IntMatrix a = input;
  IntMatrix left = IntMatrix::identity(r);
  IntMatrix right = IntMatrix::identity(c);
  const std::size_t n = std::min(r, c);

  for (std::size_t t = 0; t < n; ++t) {
    std::size_t pi = t, pj = t;
    if (!detail::find_pivot(a, t, pi, pj)) break;
    if (pi != t) {
      a.swap_rows(t, pi);
      left.swap_rows(t, pi);
    }
    if (pj != t) {
      a.swap_cols(t, pj);
      right.swap_cols(t, pj);
    }

    for (;;) {
      // Euclidean reduction of column t below the pivot.
      bool touched = false;
      for (std::size_t i = t + 1; i < r; ++i) {
        if (a.at(i, t) == 0) continue;
        Int q = floor_div(a.at(i, t), a.at(t, t));
        if (q != 0) {
          a.add_row(i, t, -q);
          left.add_row(i, t, -q);
        }
        if (a.at(i, t) != 0) {  // remainder becomes the smaller pivot
          a.swap_rows(t, i);
          left.swap_rows(t, i);
          touched = true;
        }
      }
      // Same for row t to the right of the pivot.
      for (std::size_t j = t + 1; j < c; ++j) {
        if (a.at(t, j) == 0) continue;
        Int q = floor_div(a.at(t, j), a.at(t, t));
        if (q != 0) {
          a.add_col(j, t, -q);
          right.add_col(j, t, -q);
        }
        if (a.at(t, j) != 0) {
          a.swap_cols(t, j);
          right.swap_cols(t, j);
          touched = true;
        }
      }
      if (touched) continue;

      // Pivot must divide every entry of the trailing block, otherwise fold
      // the offending row in and reduce again.
      bool chain_ok = true;
      for (std::size_t i = t + 1; i < r && chain_ok; ++i)
        for (std::size_t j = t + 1; j < c && chain_ok; ++j)
          if (a.at(i, j) % a.at(t, t) != 0) {
            a.add_row(t, i, 1);
            left.add_row(t, i, 1);
            chain_ok = false;
          }
      if (chain_ok) break;
    }

    if (a.at(t, t) < 0) {
      a.negate_row(t);
      left.negate_row(t);
    }
  }

  SnfResult res;
  res.divisors.reserve(n);
  for (std::size_t i = 0; i < n; ++i) res.divisors.push_back(a.at(i, i));
  res.left = std::move(left);
  res.right = std::move(right);
  return res;
}

/// Row-style Hermite basis: the returned rows are a triangular basis of the
/// lattice spanned by the input rows (zero rows dropped).
inline IntMatrix hermite_row_basis(const IntMatrix& input) {
  IntMatrix a = input;
  const std::size_t r = a.rows(), c = a.cols();
  std::size_t rank = 0;
  for (std::size_t col = 0; col < c && rank < r; ++col) {
    // gcd-reduce the column entries at or below `rank` to one survivor
    for (;;) {
      std::size_t nonzero = r;
      bool multiple = false;
      for (std::size_t i = rank; i < r; ++i) {
        if (a.at(i, col) == 0) continue;
        if (nonzero == r) {
          nonzero = i;
        } else {
          multiple = true;
          std::size_t hi = i, lo = nonzero;
          if (detail::int_abs(a.at(hi, col)) < detail::int_abs(a.at(lo, col))) std::swap(hi, lo);
          Int q = a.at(hi, col) / a.at(lo, col);
          a.add_row(hi, lo, -q);
          break;
        }
      }
      if (!multiple) {
        if (nonzero == r) break;  // column is zero from `rank` down
        if (nonzero != rank) a.swap_rows(rank, nonzero);
        if (a.at(rank, col) < 0) a.negate_row(rank);
        for (std::size_t k = 0; k < rank; ++k) {
          Int q = floor_div(a.at(k, col), a.at(rank, col));
          if (q != 0) a.add_row(k, rank, -q);
        }
        ++rank;
        break;
      }
    }
  }
  IntMatrix basis(rank, c);
  for (std::size_t i = 0; i < rank; ++i)
    for (std::size_t j = 0; j < c; ++j) basis.at(i, j) = a.at(i, j);
  return basis;
}

}  // namespace fpp
