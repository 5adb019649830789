#pragma once

// Exact dense linear algebra over a field scalar (Rational) and lattice
// routines over the integers.

#include "cohint/scalar.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace cohint {

template <typename Scalar>
struct Echelon {
  Matrix<Scalar> rows;                 // nonzero rows of the reduced row echelon form
  std::vector<Eigen::Index> pivots;    // pivot column of each row
  Eigen::Index rank() const { return rows.rows(); }
};

/// Gauss-Jordan elimination; zero rows are dropped from the result.
template <typename Scalar, typename Derived>
Echelon<Scalar> rref(const Eigen::MatrixBase<Derived>& input) {
  Matrix<Scalar> a = input.template cast<Scalar>();
  const Eigen::Index m = a.rows(), n = a.cols();
  std::vector<Eigen::Index> pivots;
  Eigen::Index r = 0;
  for (Eigen::Index c = 0; c < n && r < m; ++c) {
    Eigen::Index piv = -1;
    for (Eigen::Index i = r; i < m; ++i)
      if (a(i, c) != 0) { piv = i; break; }
    if (piv < 0) continue;
    if (piv != r) a.row(piv).swap(a.row(r));
    const Scalar inv = Scalar(1) / a(r, c);
    for (Eigen::Index j = c; j < n; ++j) a(r, j) *= inv;
    for (Eigen::Index i = 0; i < m; ++i) {
      if (i == r || a(i, c) == 0) continue;
      const Scalar f = a(i, c);
      for (Eigen::Index j = c; j < n; ++j)
        if (a(r, j) != 0) a(i, j) -= f * a(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  Echelon<Scalar> out;
  out.rows = a.topRows(r);
  out.pivots = std::move(pivots);
  return out;
}

template <typename Scalar, typename Derived>
Eigen::Index rank(const Eigen::MatrixBase<Derived>& a) {
  return rref<Scalar>(a).rank();
}

/// Rows form a basis of { x : a x = 0 }.
template <typename Scalar, typename Derived>
Matrix<Scalar> nullspace(const Eigen::MatrixBase<Derived>& a) {
  const Echelon<Scalar> e = rref<Scalar>(a);
  const Eigen::Index n = a.cols();
  std::vector<bool> is_pivot(static_cast<std::size_t>(n), false);
  for (auto p : e.pivots) is_pivot[static_cast<std::size_t>(p)] = true;
  std::vector<Eigen::Index> free_cols;
  for (Eigen::Index j = 0; j < n; ++j)
    if (!is_pivot[static_cast<std::size_t>(j)]) free_cols.push_back(j);
  Matrix<Scalar> out = Matrix<Scalar>::Zero(static_cast<Eigen::Index>(free_cols.size()), n);
  for (std::size_t k = 0; k < free_cols.size(); ++k) {
    const Eigen::Index f = free_cols[k];
    out(static_cast<Eigen::Index>(k), f) = Scalar(1);
    for (Eigen::Index i = 0; i < e.rank(); ++i)
      out(static_cast<Eigen::Index>(k), e.pivots[static_cast<std::size_t>(i)]) = -e.rows(i, f);
  }
  return out;
}

template <typename Scalar, typename Derived>
Matrix<Scalar> inverse(const Eigen::MatrixBase<Derived>& a) {
  const Eigen::Index n = a.rows();
  if (a.cols() != n) throw InternalError("inverse of a non-square matrix");
  Matrix<Scalar> aug(n, 2 * n);
  aug.leftCols(n) = a.template cast<Scalar>();
  aug.rightCols(n) = Matrix<Scalar>::Identity(n, n);
  const Echelon<Scalar> e = rref<Scalar>(aug);
  if (e.rank() < n || e.pivots[static_cast<std::size_t>(n - 1)] != n - 1)
    throw InternalError("matrix is singular");
  return e.rows.rightCols(n);
}

/// Coordinates of v in the row space of an echelon basis, if v lies in it.
template <typename Scalar, typename Derived>
std::optional<Vector<Scalar>> coordinates(const Echelon<Scalar>& basis,
                                          const Eigen::MatrixBase<Derived>& v) {
  Vector<Scalar> coords(basis.rank());
  Vector<Scalar> rest = v.template cast<Scalar>();
  for (Eigen::Index i = 0; i < basis.rank(); ++i) {
    coords(i) = rest(basis.pivots[static_cast<std::size_t>(i)]);
    if (coords(i) != 0) rest -= coords(i) * basis.rows.row(i).transpose();
  }
  for (Eigen::Index j = 0; j < rest.size(); ++j)
    if (rest(j) != 0) return std::nullopt;
  return coords;
}

template <typename Scalar, typename Derived>
Scalar determinant(const Eigen::MatrixBase<Derived>& input) {
  Matrix<Scalar> a = input.template cast<Scalar>();
  const Eigen::Index n = a.rows();
  Scalar det(1);
  for (Eigen::Index c = 0; c < n; ++c) {
    Eigen::Index piv = -1;
    for (Eigen::Index i = c; i < n; ++i)
      if (a(i, c) != 0) { piv = i; break; }
    if (piv < 0) return Scalar(0);
    if (piv != c) { a.row(piv).swap(a.row(c)); det = -det; }
    det *= a(c, c);
    for (Eigen::Index i = c + 1; i < n; ++i) {
      if (a(i, c) == 0) continue;
      const Scalar f = a(i, c) / a(c, c);
      for (Eigen::Index j = c; j < n; ++j) a(i, j) -= f * a(c, j);
    }
  }
  return det;
}

template <typename Scalar>
Matrix<Scalar> stack_rows(const Matrix<Scalar>& top, const Matrix<Scalar>& bottom) {
  if (top.rows() == 0) return bottom;
  if (bottom.rows() == 0) return top;
  Matrix<Scalar> out(top.rows() + bottom.rows(), top.cols());
  out << top, bottom;
  return out;
}

// ---------------------------------------------------------------------------
// Integer lattices. Entries stay tiny for the inputs this library targets, but
// every operation is overflow-checked rather than silently wrapping.

Integer checked_add(Integer a, Integer b);
Integer checked_mul(Integer a, Integer b);
Integer gcd_of(const IntVector& v);

/// Floor division for signed integers.
Integer floor_div(Integer a, Integer b);

/// Rows form a Z-basis of the saturated lattice { x in Z^n : a x = 0 }.
IntMatrix integer_kernel(const IntMatrix& a);

/// Row Hermite normal form of a full-row-rank integer matrix: positive pivots,
/// entries above each pivot reduced into [0, pivot).
IntMatrix row_hermite(const IntMatrix& a);

/// Divides by the gcd and makes the first nonzero coordinate positive.
/// Returns the scale s with v == s * primitive (s may be negative).
std::pair<IntVector, Integer> primitive_part(const IntVector& v);

}  // namespace cohint
