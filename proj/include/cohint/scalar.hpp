#pragma once

#include <boost/multiprecision/eigen.hpp>
#include <boost/multiprecision/gmp.hpp>

#include <Eigen/Core>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace cohint {

// Exact rationals with expression templates disabled so the type plays well
// inside Eigen expressions.
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;
using Integer = std::int64_t;

template <typename Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using IntMatrix = Matrix<Integer>;
using IntVector = Vector<Integer>;
using RatMatrix = Matrix<Rational>;
using RatVector = Vector<Rational>;

/// Malformed or inconsistent user data (CLI exit code 1).
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A mathematical invariant that must hold failed at runtime (CLI exit code 3).
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

inline std::string to_string(const Rational& q) { return q.str(); }

template <typename Derived>
RatMatrix to_rational(const Eigen::MatrixBase<Derived>& m) {
  RatMatrix out(m.rows(), m.cols());
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) out(i, j) = Rational(m(i, j));
  return out;
}

/// Casts a rational matrix whose entries are all integral; throws otherwise.
inline IntMatrix to_integer(const RatMatrix& m) {
  IntMatrix out(m.rows(), m.cols());
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      if (denominator(m(i, j)) != 1)
        throw InternalError("expected an integral matrix entry, got " + m(i, j).str());
      out(i, j) = numerator(m(i, j)).convert_to<Integer>();
    }
  }
  return out;
}

/// Lexicographic comparison of two equally shaped dense objects.
template <typename A, typename B>
bool lex_less(const Eigen::DenseBase<A>& a, const Eigen::DenseBase<B>& b) {
  if (a.rows() != b.rows()) return a.rows() < b.rows();
  if (a.cols() != b.cols()) return a.cols() < b.cols();
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      if (a(i, j) < b(i, j)) return true;
      if (b(i, j) < a(i, j)) return false;
    }
  return false;
}

template <typename A, typename B>
bool dense_equal(const Eigen::DenseBase<A>& a, const Eigen::DenseBase<B>& b) {
  return a.rows() == b.rows() && a.cols() == b.cols() && (a.derived() == b.derived());
}

}  // namespace cohint
