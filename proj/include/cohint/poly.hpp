#pragma once

#include "cohint/linalg.hpp"
#include "cohint/lattice.hpp"
#include "cohint/weyl.hpp"

#include <map>
#include <stdexcept>
#include <vector>

namespace cohint {

using Exponent = std::vector<int>;

/// Graded-lex order with x1 > x2 > ... ; the comparator sorts the leading
/// monomial first.
struct GradedLexGreater {
  bool operator()(const Exponent& a, const Exponent& b) const;
};

class NotDivisible : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Sparse multivariate polynomial with rational coefficients.
class Poly {
 public:
  using Terms = std::map<Exponent, Rational, GradedLexGreater>;

  explicit Poly(int nvars = 0) : nvars_(nvars) {}
  static Poly constant(int nvars, const Rational& c);
  static Poly monomial(const Exponent& e, const Rational& c = Rational(1));
  static Poly variable(int nvars, int i);
  static Poly linear(const IntVector& coeffs);
  static Poly linear(const RatVector& coeffs);

  int nvars() const { return nvars_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  /// Total degree; -1 for the zero polynomial.
  int degree() const;
  bool is_homogeneous(int d) const;
  Rational coefficient(const Exponent& e) const;
  Rational evaluate(const RatVector& point) const;

  void add_term(const Exponent& e, const Rational& c);

  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Rational& c);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(Poly a, const Rational& c) { return a *= c; }
  friend Poly operator*(const Rational& c, Poly a) { return a *= c; }
  friend Poly operator*(const Poly& a, const Poly& b);
  Poly operator-() const { return *this * Rational(-1); }
  friend bool operator==(const Poly& a, const Poly& b) { return a.nvars_ == b.nvars_ && a.terms_ == b.terms_; }
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

  std::string str() const;

 private:
  int nvars_;
  Terms terms_;
};

Poly pow(const Poly& f, int k);

/// f(A x): each variable x_i becomes sum_j A(i,j) x_j.
Poly compose_linear(const Poly& f, const RatMatrix& a);

/// The character action of w: f(x) -> f(w^T x), so a linear form alpha maps
/// to w alpha.
Poly substitute(const WeylElement& w, const Poly& f);

/// Quotient q with q * ell == f; throws NotDivisible on a nonzero remainder.
Poly exact_divide(const Poly& f, const Poly& ell);

/// Ratio of products of integer linear forms, times a rational scalar.
struct KernelForm {
  std::vector<Weight> numerator;
  std::vector<Weight> denominator;
  Rational scalar = 1;

  int degree() const { return static_cast<int>(numerator.size()) - static_cast<int>(denominator.size()); }
  Rational evaluate(const RatVector& point) const;
  std::string str() const;
};

/// Sum over the listed elements of w(f k), computed over the least common
/// multiple of the transformed denominators and cleared by exact division.
/// Throws InternalError if the sum is not a polynomial.
Poly kernel_sum(const Poly& f, const KernelForm& k, const WeylGroup& w, const std::vector<std::size_t>& elements);

/// Monomials of the given degree in descending graded-lex order.
std::vector<Exponent> monomials(int nvars, int degree);

/// Row-reduced basis of a space of homogeneous polynomials of one degree.
class GradedBasis {
 public:
  GradedBasis() = default;
  GradedBasis(int nvars, int degree);

  int nvars() const { return nvars_; }
  int degree() const { return degree_; }
  Eigen::Index dim() const { return echelon_.rank(); }
  const std::vector<Exponent>& monomial_order() const { return monomials_; }
  const Echelon<Rational>& echelon() const { return echelon_; }

  RatVector coefficients(const Poly& f) const;
  Poly to_poly(const RatVector& v) const;
  Poly row(Eigen::Index i) const;
  std::vector<Poly> polys() const;
  bool contains(const Poly& f) const;
  /// Coordinates of f in this basis; throws InternalError if f lies outside.
  RatVector coordinates_of(const Poly& f) const;

  void set_rows(const RatMatrix& rows);

 private:
  int nvars_ = 0;
  int degree_ = 0;
  std::vector<Exponent> monomials_;
  std::map<Exponent, Eigen::Index> position_;
  Echelon<Rational> echelon_;
};

/// RREF span; throws InputError if some vector is not homogeneous of the degree.
GradedBasis rref_span(const std::vector<Poly>& vectors, int degree, int nvars);

/// A maximal linearly independent subset, chosen greedily in order.
std::vector<Weight> independent_subset(const std::vector<Weight>& forms, int nvars);

/// All products of the given linear forms of total degree p, one per exponent.
std::vector<Poly> form_monomials(const std::vector<Poly>& forms, int degree, int nvars);

/// (1/|H|) sum over H of w(f).
Poly average(const Poly& f, const Subgroup& h);

/// Basis of Sym^p(span U)^H; throws InputError if span U is not H-stable.
GradedBasis invariant_basis(const Subgroup& h, int degree, const std::vector<Weight>& u, int nvars);

/// <f, g>_B = sum_c (f o B)_c g_c c!, the pairing induced multiplicatively from B.
Rational inner_product(const Poly& f, const Poly& g, const RatMatrix& b);

/// B-orthogonal complement of sub inside ambient (same degree).
GradedBasis orthogonal_complement(const GradedBasis& sub, const GradedBasis& ambient, const RatMatrix& b);

}  // namespace cohint
