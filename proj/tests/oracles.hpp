#pragma once

// Independent brute-force computations used to cross-check the engine. They
// share only the basic data types with the library.

#include "cohint/document.hpp"
#include "cohint/integrality.hpp"

#include <set>
#include <string>
#include <vector>

namespace oracle {

using cohint::Exponent;
using cohint::IntMatrix;
using cohint::Poly;
using cohint::RatMatrix;
using cohint::RatVector;
using cohint::Rational;

inline cohint::Stratification strata_of(const std::string& key) {
  const cohint::InputDocument d = cohint::catalog_emit(key);
  return cohint::enumerate_strata(d.group(), d.rep());
}

inline std::size_t stratum_with_rep(const cohint::Stratification& st, const cohint::Cocharacter& rep) {
  for (const auto& s : st.strata)
    if (s.rep == rep) return s.index;
  throw std::logic_error("no stratum with that representative");
}

// Group closure by repeated products, independent of the sorted enumeration.
inline std::vector<IntMatrix> closure(int rank, const std::vector<IntMatrix>& gens) {
  auto key = [](const IntMatrix& m) { return std::vector<long>(m.data(), m.data() + m.size()); };
  std::vector<IntMatrix> elems{IntMatrix::Identity(rank, rank)};
  std::set<std::vector<long>> seen{key(elems[0])};
  for (std::size_t i = 0; i < elems.size(); ++i)
    for (const auto& g : gens) {
      IntMatrix m = g * elems[i];
      if (seen.insert(key(m)).second) elems.push_back(m);
    }
  return elems;
}

inline std::vector<Exponent> all_monomials(int nvars, int degree) {
  std::vector<Exponent> out;
  Exponent e(static_cast<std::size_t>(nvars), 0);
  auto rec = [&](auto&& self, int i, int left) -> void {
    if (i == nvars - 1) {
      e[static_cast<std::size_t>(i)] = left;
      out.push_back(e);
      return;
    }
    for (int k = left; k >= 0; --k) {
      e[static_cast<std::size_t>(i)] = k;
      self(self, i + 1, left - k);
    }
  };
  if (nvars == 0) {
    if (degree == 0) out.push_back(e);
    return out;
  }
  rec(rec, 0, degree);
  return out;
}

// f(M^T x) expanded term by term.
inline Poly act(const IntMatrix& m, const Poly& f) {
  const int n = static_cast<int>(m.rows());
  std::vector<Poly> images;
  for (int i = 0; i < n; ++i) {
    Poly l(n);
    for (int j = 0; j < n; ++j)
      if (m(j, i) != 0) {
        Exponent e(static_cast<std::size_t>(n), 0);
        e[static_cast<std::size_t>(j)] = 1;
        l += Poly::monomial(e, Rational(m(j, i)));
      }
    images.push_back(l);
  }
  Poly out(n);
  for (const auto& [e, c] : f.terms()) {
    Poly t = Poly::constant(n, c);
    for (int i = 0; i < n; ++i)
      for (int k = 0; k < e[static_cast<std::size_t>(i)]; ++k) t = t * images[static_cast<std::size_t>(i)];
    out += t;
  }
  return out;
}

// dim Sym^p(t*)^W as the average trace of W on the monomial basis.
inline Rational invariant_dimension(int rank, const std::vector<IntMatrix>& gens, int p) {
  const auto group = closure(rank, gens);
  Rational total = 0;
  for (const auto& m : group)
    for (const auto& e : all_monomials(rank, p)) total += act(m, Poly::monomial(e)).coefficient(e);
  return total / Rational(static_cast<long>(group.size()));
}

inline RatMatrix echelon_of(RatMatrix a) {
  Eigen::Index r = 0;
  for (Eigen::Index c = 0; c < a.cols() && r < a.rows(); ++c) {
    Eigen::Index piv = r;
    while (piv < a.rows() && a(piv, c) == 0) ++piv;
    if (piv == a.rows()) continue;
    a.row(r).swap(a.row(piv));
    const Rational lead = a(r, c);
    for (Eigen::Index j = 0; j < a.cols(); ++j) a(r, j) /= lead;
    for (Eigen::Index i = 0; i < a.rows(); ++i)
      if (i != r && a(i, c) != 0) {
        const Rational f = a(i, c);
        for (Eigen::Index j = 0; j < a.cols(); ++j) a(i, j) -= f * a(r, j);
      }
    ++r;
  }
  return a.topRows(r);
}

inline Eigen::Index rank_of(const RatMatrix& a) { return echelon_of(a).rows(); }

// Number of distinct subspaces cut out by subsets of the hyperplanes of all
// nonzero V and g weights. Each subspace is keyed by the echelon form of its
// annihilator.
inline std::size_t flat_count(const cohint::GroupData& g, const cohint::RepresentationData& v) {
  std::vector<cohint::Weight> normals;
  for (const auto* ws : {&g.g_weights, &v.v_weights})
    for (const auto& e : ws->entries())
      if (!e.weight.is_zero()) normals.push_back(e.weight);
  const int n = g.rank;
  std::set<std::vector<std::string>> seen;
  const std::size_t k = normals.size();
  for (std::size_t mask = 0; mask < (std::size_t{1} << k); ++mask) {
    RatMatrix a(0, n);
    for (std::size_t i = 0; i < k; ++i)
      if (mask >> i & 1) {
        a.conservativeResize(a.rows() + 1, n);
        for (int j = 0; j < n; ++j) a(a.rows() - 1, j) = Rational(normals[i].coords(j));
      }
    const RatMatrix e = echelon_of(a);
    std::vector<std::string> key;
    for (Eigen::Index i = 0; i < e.rows(); ++i)
      for (Eigen::Index j = 0; j < e.cols(); ++j) key.push_back(e(i, j).str());
    seen.insert(key);
  }
  return seen.size();
}

inline Rational form_at(const cohint::Weight& a, const RatVector& x) {
  Rational s = 0;
  for (Eigen::Index i = 0; i < x.size(); ++i) s += Rational(a.coords(i)) * x(i);
  return s;
}

// Direct evaluation of sum_w f(M_w^T x) k(M_w^T x) with no division of polynomials.
inline Rational kernel_sum_at(const Poly& f, const cohint::KernelForm& k, const cohint::WeylGroup& w,
                              const std::vector<std::size_t>& elements, const RatVector& x) {
  Rational total = 0;
  for (std::size_t i : elements) {
    const RatVector y = cohint::to_rational(w[i].matrix).transpose() * x;
    Rational v = f.evaluate(y) * k.scalar;
    for (const auto& a : k.numerator) v *= form_at(a, y);
    for (const auto& a : k.denominator) v /= form_at(a, y);
    total += v;
  }
  return total;
}

// Five points with small distinct coordinates on which no listed form vanishes.
inline std::vector<RatVector> sample_points(int rank, const std::vector<cohint::Weight>& forms) {
  std::vector<RatVector> out;
  for (long seed = 1; out.size() < 5; ++seed) {
    RatVector x(rank);
    for (int i = 0; i < rank; ++i) x(i) = Rational((seed * 7 + i * 13) % 23 + 1, i + 2);
    bool ok = true;
    for (const auto& a : forms) ok = ok && form_at(a, x) != 0;
    if (ok) out.push_back(x);
  }
  return out;
}

inline Poly product_of(const std::vector<cohint::Weight>& forms, int n) {
  Poly p = Poly::constant(n, 1);
  for (const auto& a : forms) p = p * Poly::linear(a.coords);
  return p;
}

// The sign s with w(k) = s k, found by cross-multiplying numerators and
// denominators as polynomials; 0 if neither sign works.
inline int symbolic_sign(const cohint::KernelForm& k, const IntMatrix& m, int n) {
  const Poly num = product_of(k.numerator, n), den = product_of(k.denominator, n);
  const Poly lhs = act(m, num) * den;
  const Poly rhs = num * act(m, den);
  if (lhs == rhs) return 1;
  if (lhs == -rhs) return -1;
  return 0;
}

inline RatMatrix rows_of(const std::vector<Poly>& polys, int n, int degree) {
  const auto mons = all_monomials(n, degree);
  RatMatrix m(static_cast<Eigen::Index>(polys.size()), static_cast<Eigen::Index>(mons.size()));
  for (std::size_t i = 0; i < polys.size(); ++i)
    for (std::size_t j = 0; j < mons.size(); ++j)
      m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = polys[i].coefficient(mons[j]);
  return m;
}

inline Eigen::Index span_dim(const std::vector<Poly>& polys, int n, int degree) {
  if (polys.empty()) return 0;
  return rank_of(rows_of(polys, n, degree));
}

// dim of (images of all inductions from strictly smaller strata) intersected
// with the polynomials in the zero-set forms of the target, in degree p.
inline Eigen::Index j_dimension(const cohint::Stratification& st, std::size_t lambda, int p) {
  const int n = st.weyl->rank();
  const cohint::Stratum& target = st.strata[lambda];
  std::vector<Poly> images;
  for (const auto& mu : st.strata) {
    if (mu.index == lambda || !st.order[mu.index][lambda]) continue;
    const int q = p - cohint::kernel(mu, target).degree();
    if (q < 0) continue;
    const cohint::Subgroup h =
        cohint::intersect(cohint::point_stabilizer(*st.weyl, mu.rep), cohint::point_stabilizer(*st.weyl, target.rep));
    for (const auto& e : all_monomials(n, q)) {
      Poly f(n);
      for (std::size_t i : h.members) f += act((*st.weyl)[i].matrix, Poly::monomial(e));
      if (f.is_zero()) continue;
      const Poly g = cohint::induct(st, f, mu, target);
      if (!g.is_zero()) images.push_back(g);
    }
  }
  std::vector<Poly> pure;
  std::vector<Poly> forms;
  for (const auto& e : target.zero_v.entries())
    if (!e.weight.is_zero()) forms.push_back(Poly::linear(e.weight.coords));
  for (const auto& e : target.zero_g.entries())
    if (!e.weight.is_zero()) forms.push_back(Poly::linear(e.weight.coords));
  // Every product of p zero-set forms spans Sym^p(U).
  std::vector<Poly> layer{Poly::constant(n, 1)};
  for (int d = 0; d < p; ++d) {
    std::vector<Poly> next;
    for (const auto& a : layer)
      for (const auto& l : forms) next.push_back(a * l);
    layer = std::move(next);
  }
  if (p == 0 || !forms.empty()) pure = layer;
  std::vector<Poly> both = images;
  both.insert(both.end(), pure.begin(), pure.end());
  return span_dim(images, n, p) + span_dim(pure, n, p) - span_dim(both, n, p);
}

}  // namespace oracle
