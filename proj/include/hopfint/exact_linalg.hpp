#pragma once

// Exact rank / kernel / solve over Q.
//
// Rows are cleared of denominators and eliminated fraction-free over Z:
// r <- a*r - b*p with a, b the cofactors of the two leading entries, followed
// by division by the row content. Rows are stored sparsely, so tensor-power
// operators (mostly zeros) stay cheap.

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "hopfint/matrix.hpp"
#include "hopfint/scalar.hpp"

namespace hopfint {

/// Sorted (column, value) pairs with nonzero values.
using SparseRow = std::vector<std::pair<std::size_t, Integer>>;

namespace detail {

inline void make_primitive(SparseRow& row) {
  if (row.empty()) return;
  Integer g = abs(row.front().second);
  for (std::size_t i = 1; i < row.size() && g != 1; ++i) g = gcd(g, row[i].second);
  if (row.front().second < 0) g = -g;
  if (g != 1)
    for (auto& [c, v] : row) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
}

// a*row - b*pivot
inline SparseRow combine(const SparseRow& row, const Integer& a, const SparseRow& pivot,
                         const Integer& b) {
  SparseRow out;
  out.reserve(row.size() + pivot.size());
  std::size_t i = 0, j = 0;
  while (i < row.size() || j < pivot.size()) {
    if (j == pivot.size() || (i < row.size() && row[i].first < pivot[j].first)) {
      out.emplace_back(row[i].first, a * row[i].second);
      ++i;
    } else if (i == row.size() || pivot[j].first < row[i].first) {
      out.emplace_back(pivot[j].first, -b * pivot[j].second);
      ++j;
    } else {
      Integer v = a * row[i].second - b * pivot[j].second;
      if (v != 0) out.emplace_back(row[i].first, std::move(v));
      ++i;
      ++j;
    }
  }
  return out;
}

// Eliminates column `col` of `row` using `pivot` (whose leading column is col).
inline SparseRow eliminate(const SparseRow& row, const Integer& row_entry, const SparseRow& pivot) {
  const Integer& lead = pivot.front().second;
  Integer g = gcd(lead, row_entry);
  Integer a = lead / g;
  Integer b = row_entry / g;
  SparseRow out = combine(row, a, pivot, b);
  make_primitive(out);
  return out;
}

inline const Integer* entry_at(const SparseRow& row, std::size_t col) {
  auto it = std::lower_bound(row.begin(), row.end(), col,
                             [](const auto& e, std::size_t c) { return e.first < c; });
  return (it != row.end() && it->first == col) ? &it->second : nullptr;
}

}  // namespace detail

/// Converts a dense rational row into a primitive integer row spanning the
/// same line.
inline SparseRow to_integer_row(std::span<const Scalar> dense) {
  Integer den_lcm = 1;
  for (const auto& x : dense)
    if (sgn(x) != 0) den_lcm = lcm(den_lcm, x.get_den());
  SparseRow row;
  for (std::size_t c = 0; c < dense.size(); ++c) {
    if (sgn(dense[c]) == 0) continue;
    Integer v = dense[c].get_num() * (den_lcm / dense[c].get_den());
    row.emplace_back(c, std::move(v));
  }
  detail::make_primitive(row);
  return row;
}

/// Incremental row echelon form over Z. Rows can be fed one at a time, which
/// lets large stacked systems be assembled lazily.
class RowEchelon {
 public:
  explicit RowEchelon(std::size_t cols) : cols_(cols) {}

  std::size_t cols() const { return cols_; }
  std::size_t rank() const { return pivots_.size(); }
  bool full() const { return pivots_.size() == cols_; }

  /// Returns true when the row was independent of the rows seen so far.
  bool add_row(SparseRow row) {
    if (!row.empty() && row.back().first >= cols_) throw Error("row index out of range");
    std::size_t scan_from = 0;
    while (true) {
      auto it = std::lower_bound(row.begin(), row.end(), scan_from,
                                 [](const auto& e, std::size_t c) { return e.first < c; });
      for (; it != row.end(); ++it)
        if (pivots_.count(it->first)) break;
      if (it == row.end()) break;
      const std::size_t col = it->first;
      row = detail::eliminate(row, it->second, pivots_.at(col));
      scan_from = col + 1;
    }
    if (row.empty()) return false;
    detail::make_primitive(row);
    const std::size_t lead = row.front().first;
    pivots_.emplace(lead, std::move(row));
    return true;
  }

  bool add_row(std::span<const Scalar> dense) {
    if (dense.size() != cols_) throw Error("row length mismatch");
    return add_row(to_integer_row(dense));
  }

  /// Pivot rows keyed by leading column, each reduced so that no other pivot
  /// column carries a nonzero entry.
  std::map<std::size_t, SparseRow> reduced() const {
    std::map<std::size_t, SparseRow> rows = pivots_;
    for (auto p = rows.rbegin(); p != rows.rend(); ++p) {
      const std::size_t col = p->first;
      for (auto& [other_col, other] : rows) {
        if (other_col >= col) break;
        if (const Integer* e = detail::entry_at(other, col)) other = detail::eliminate(other, *e, p->second);
      }
    }
    return rows;
  }

  std::vector<Vector> kernel_basis() const {
    const auto rows = reduced();
    std::vector<Vector> basis;
    for (std::size_t free = 0; free < cols_; ++free) {
      if (rows.count(free)) continue;
      Vector v(cols_);
      v[free] = 1;
      for (const auto& [col, row] : rows)
        if (const Integer* e = detail::entry_at(row, free)) {
          Scalar x(-*e, row.front().second);
          x.canonicalize();
          v[col] = x;
        }
      basis.push_back(std::move(v));
    }
    return basis;
  }

 private:
  std::size_t cols_;
  std::map<std::size_t, SparseRow> pivots_;
};

inline std::size_t rank(const Matrix& m) {
  // Feed whichever side is shorter; rank(m) = rank(m^T).
  const bool by_rows = m.rows() <= m.cols();
  const Matrix t = by_rows ? Matrix{} : m.transpose();
  const Matrix& src = by_rows ? m : t;
  RowEchelon ech(src.cols());
  for (std::size_t r = 0; r < src.rows() && !ech.full(); ++r) ech.add_row(src.row(r));
  return ech.rank();
}

/// Basis of the right null space {v : m v = 0}.
inline std::vector<Vector> kernel_basis(const Matrix& m) {
  RowEchelon ech(m.cols());
  for (std::size_t r = 0; r < m.rows() && !ech.full(); ++r) ech.add_row(m.row(r));
  return ech.kernel_basis();
}

/// dim(sum of column spaces) of matrices sharing a row count.
inline std::size_t column_span_rank(std::span<const Matrix> ms) {
  if (ms.empty()) return 0;
  const std::size_t rows = ms.front().rows();
  RowEchelon ech(rows);
  for (const auto& m : ms) {
    if (m.rows() != rows) throw Error("column_span_rank: mismatched row counts");
    for (std::size_t c = 0; c < m.cols() && !ech.full(); ++c) ech.add_row(m.column(c));
  }
  return ech.rank();
}

/// Some x with a x = b, or nullopt when the system is inconsistent. The
/// result is checked by substitution before it is returned.
inline std::optional<Vector> solve(const Matrix& a, std::span<const Scalar> b) {
  if (b.size() != a.rows()) throw Error("solve: right-hand side length mismatch");
  const std::size_t n = a.cols();
  RowEchelon ech(n + 1);
  Vector aug(n + 1);
  for (std::size_t r = 0; r < a.rows(); ++r) {
    std::copy(a.row(r).begin(), a.row(r).end(), aug.begin());
    aug[n] = b[r];
    ech.add_row(aug);
  }
  const auto rows = ech.reduced();
  if (rows.count(n)) return std::nullopt;
  Vector x(n);
  for (const auto& [col, row] : rows)
    if (const Integer* e = detail::entry_at(row, n)) {
      Scalar v(*e, row.front().second);
      v.canonicalize();
      x[col] = v;
    }
  const Vector check = a.apply(x);
  for (std::size_t r = 0; r < check.size(); ++r)
    if (check[r] != b[r]) throw Error("solve: substitution check failed");
  return x;
}

/// Fraction-free (Bareiss) determinant.
inline Scalar determinant(const Matrix& m) {
  if (!m.is_square()) throw Error("determinant of non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  std::vector<std::vector<Integer>> a(n, std::vector<Integer>(n));
  Scalar scale = 1;
  for (std::size_t r = 0; r < n; ++r) {
    Integer den_lcm = 1;
    for (std::size_t c = 0; c < n; ++c) den_lcm = lcm(den_lcm, m(r, c).get_den());
    for (std::size_t c = 0; c < n; ++c) a[r][c] = m(r, c).get_num() * (den_lcm / m(r, c).get_den());
    scale /= Scalar(den_lcm);
  }
  Integer prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t swap = k + 1;
      while (swap < n && a[swap][k] == 0) ++swap;
      if (swap == n) return 0;
      std::swap(a[k], a[swap]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        a[i][j] = a[i][j] * a[k][k] - a[i][k] * a[k][j];
        mpz_divexact(a[i][j].get_mpz_t(), a[i][j].get_mpz_t(), prev.get_mpz_t());
      }
    }
    prev = a[k][k];
  }
  Scalar det(a[n - 1][n - 1]);
  return det * scale * sign;
}

/// Inverse via one reduction of [m | I]; nullopt when singular.
inline std::optional<Matrix> inverse(const Matrix& m) {
  if (!m.is_square()) throw Error("inverse of non-square matrix");
  const std::size_t n = m.rows();
  RowEchelon ech(2 * n);
  Vector aug(2 * n);
  for (std::size_t r = 0; r < n; ++r) {
    std::fill(aug.begin(), aug.end(), Scalar(0));
    std::copy(m.row(r).begin(), m.row(r).end(), aug.begin());
    aug[n + r] = 1;
    ech.add_row(aug);
  }
  const auto rows = ech.reduced();
  Matrix inv(n, n);
  for (const auto& [col, row] : rows) {
    if (col >= n) return std::nullopt;
    for (const auto& [c, v] : row)
      if (c >= n) {
        Scalar x(v, row.front().second);
        x.canonicalize();
        inv(col, c - n) = x;
      }
  }
  return inv;
}

}  // namespace hopfint
