#include "cohint/linalg.hpp"

#include <numeric>

namespace cohint {

Integer checked_add(Integer a, Integer b) {
  Integer out;
  if (__builtin_add_overflow(a, b, &out)) throw InternalError("integer overflow in lattice arithmetic");
  return out;
}

Integer checked_mul(Integer a, Integer b) {
  Integer out;
  if (__builtin_mul_overflow(a, b, &out)) throw InternalError("integer overflow in lattice arithmetic");
  return out;
}

Integer gcd_of(const IntVector& v) {
  Integer g = 0;
  for (Eigen::Index i = 0; i < v.size(); ++i) g = std::gcd(g, v(i));
  return g;
}

Integer floor_div(Integer a, Integer b) {
  Integer q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

namespace {

// col_j -= f * col_k, on both the working matrix and the transform.
void column_axpy(IntMatrix& h, IntMatrix& u, Eigen::Index j, Eigen::Index k, Integer f) {
  if (f == 0) return;
  for (Eigen::Index i = 0; i < h.rows(); ++i) h(i, j) = checked_add(h(i, j), -checked_mul(f, h(i, k)));
  for (Eigen::Index i = 0; i < u.rows(); ++i) u(i, j) = checked_add(u(i, j), -checked_mul(f, u(i, k)));
}

void row_axpy(IntMatrix& h, Eigen::Index j, Eigen::Index k, Integer f) {
  if (f == 0) return;
  for (Eigen::Index c = 0; c < h.cols(); ++c) h(j, c) = checked_add(h(j, c), -checked_mul(f, h(k, c)));
}

}  // namespace

IntMatrix integer_kernel(const IntMatrix& a) {
  const Eigen::Index n = a.cols();
  IntMatrix h = a;
  IntMatrix u = IntMatrix::Identity(n, n);
  Eigen::Index c = 0;
  for (Eigen::Index r = 0; r < h.rows() && c < n; ++r) {
    // Euclid across columns c..n-1 of row r until only column c is nonzero.
    while (true) {
      Eigen::Index best = -1;
      for (Eigen::Index j = c; j < n; ++j)
        if (h(r, j) != 0 && (best < 0 || std::abs(h(r, j)) < std::abs(h(r, best)))) best = j;
      if (best < 0) break;
      if (best != c) {
        h.col(best).swap(h.col(c));
        u.col(best).swap(u.col(c));
      }
      bool done = true;
      for (Eigen::Index j = c + 1; j < n; ++j) {
        if (h(r, j) == 0) continue;
        column_axpy(h, u, j, c, h(r, j) / h(r, c));
        if (h(r, j) != 0) done = false;
      }
      if (done) break;
    }
    if (h(r, c) != 0) ++c;
  }
  IntMatrix out(n - c, n);
  for (Eigen::Index j = c; j < n; ++j) out.row(j - c) = u.col(j).transpose();
  return out;
}

IntMatrix row_hermite(const IntMatrix& a) {
  IntMatrix h = a;
  const Eigen::Index m = h.rows(), n = h.cols();
  Eigen::Index r = 0;
  for (Eigen::Index c = 0; c < n && r < m; ++c) {
    while (true) {
      Eigen::Index best = -1;
      for (Eigen::Index i = r; i < m; ++i)
        if (h(i, c) != 0 && (best < 0 || std::abs(h(i, c)) < std::abs(h(best, c)))) best = i;
      if (best < 0) break;
      if (best != r) h.row(best).swap(h.row(r));
      bool done = true;
      for (Eigen::Index i = r + 1; i < m; ++i) {
        if (h(i, c) == 0) continue;
        row_axpy(h, i, r, h(i, c) / h(r, c));
        if (h(i, c) != 0) done = false;
      }
      if (done) break;
    }
    if (h(r, c) == 0) continue;
    if (h(r, c) < 0) h.row(r) = -h.row(r);
    for (Eigen::Index i = 0; i < r; ++i) row_axpy(h, i, r, floor_div(h(i, c), h(r, c)));
    ++r;
  }
  if (r < m) throw InternalError("row_hermite expects full row rank");
  return h;
}

std::pair<IntVector, Integer> primitive_part(const IntVector& v) {
  const Integer g = gcd_of(v);
  if (g == 0) return {v, 0};
  Integer s = g;
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if (v(i) != 0) {
      if (v(i) < 0) s = -g;
      break;
    }
  }
  IntVector p = v / s;
  return {p, s};
}

}  // namespace cohint
