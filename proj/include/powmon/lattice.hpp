#pragma once

// Integer row reduction: echelon forms with unimodular transforms, Hermite
// normal form, integer kernels and lattice membership.

#include "powmon/integer.hpp"

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

namespace powmon::lattice {

using Row = std::vector<Integer>;
using Matrix = std::vector<Row>;

namespace detail {

inline void subtract_multiple(Row& target, const Row& source, const Integer& q) {
  if (q == 0) return;
  for (std::size_t j = 0; j < target.size(); ++j) target[j] -= q * source[j];
}

inline void negate(Row& row) {
  for (auto& x : row) x = -x;
}

inline bool is_zero(const Row& row) {
  return std::all_of(row.begin(), row.end(), [](const Integer& x) { return x == 0; });
}

}  // namespace detail

/// Result of integer row reduction: `transform * input == echelon`, with
/// `transform` unimodular. Rows `rank..` of `echelon` are zero, so rows
/// `rank..` of `transform` span the left kernel of the input.
struct Echelon {
  Matrix echelon;
  Matrix transform;
  std::vector<std::size_t> pivot_columns;
  std::size_t rank = 0;
};

/// Reduces `rows` (all of equal width `columns`) to Hermite normal form:
/// positive pivots, entries above a pivot reduced into [0, pivot).
inline Echelon echelonize(Matrix rows, std::size_t columns) {
  const std::size_t m = rows.size();
  for (const auto& r : rows)
    if (r.size() != columns) throw std::invalid_argument("echelonize: ragged matrix");

  Matrix u(m, Row(m, 0));
  for (std::size_t i = 0; i < m; ++i) u[i][i] = 1;

  Echelon out;
  std::size_t r = 0;
  for (std::size_t col = 0; col < columns && r < m; ++col) {
    // Euclid on the column below r until a single nonzero entry remains.
    for (;;) {
      std::size_t best = m;
      for (std::size_t i = r; i < m; ++i) {
        if (rows[i][col] == 0) continue;
        if (best == m || abs(rows[i][col]) < abs(rows[best][col])) best = i;
      }
      if (best == m) break;
      std::swap(rows[r], rows[best]);
      std::swap(u[r], u[best]);
      bool done = true;
      for (std::size_t i = r + 1; i < m; ++i) {
        if (rows[i][col] == 0) continue;
        Integer q = floor_div(rows[i][col], rows[r][col]);
        detail::subtract_multiple(rows[i], rows[r], q);
        detail::subtract_multiple(u[i], u[r], q);
        if (rows[i][col] != 0) done = false;
      }
      if (done) break;
    }
    if (rows[r][col] == 0) continue;
    if (rows[r][col] < 0) {
      detail::negate(rows[r]);
      detail::negate(u[r]);
    }
    for (std::size_t i = 0; i < r; ++i) {
      Integer q = floor_div(rows[i][col], rows[r][col]);
      detail::subtract_multiple(rows[i], rows[r], q);
      detail::subtract_multiple(u[i], u[r], q);
    }
    out.pivot_columns.push_back(col);
    ++r;
  }
  out.rank = r;
  out.echelon = std::move(rows);
  out.transform = std::move(u);
  return out;
}

/// Canonical basis (Hermite normal form, nonzero rows only) of the lattice
/// spanned by `rows`.
inline Matrix hermite_normal_form(const Matrix& rows, std::size_t columns) {
  Echelon e = echelonize(rows, columns);
  e.echelon.resize(e.rank);
  return e.echelon;
}

/// Basis of {x in Z^c : M x = 0} for an r x c matrix M given by its rows,
/// in Hermite normal form.
inline Matrix integer_kernel(const Matrix& m, std::size_t columns) {
  // Left kernel of M^T.
  Matrix transposed(columns, Row(m.size(), 0));
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < columns; ++j) transposed[j][i] = m[i][j];
  Echelon e = echelonize(std::move(transposed), m.size());
  Matrix kernel(e.transform.begin() + static_cast<std::ptrdiff_t>(e.rank), e.transform.end());
  return hermite_normal_form(kernel, columns);
}

/// Membership of `v` in the lattice whose Hermite basis is `hnf`.
inline bool lattice_contains(const Matrix& hnf, Row v) {
  std::size_t next_col = 0;
  for (const Row& row : hnf) {
    std::size_t pivot = 0;
    while (pivot < row.size() && row[pivot] == 0) ++pivot;
    for (std::size_t j = next_col; j < pivot; ++j)
      if (v[j] != 0) return false;
    if (v[pivot] % row[pivot] != 0) return false;
    detail::subtract_multiple(v, row, v[pivot] / row[pivot]);
    next_col = pivot + 1;
  }
  return detail::is_zero(v);
}

}  // namespace powmon::lattice
