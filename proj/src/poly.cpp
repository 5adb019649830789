#include "cohint/poly.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace cohint {

namespace {

int total(const Exponent& e) { return std::accumulate(e.begin(), e.end(), 0); }

Rational factorial_product(const Exponent& e) {
  Rational out = 1;
  for (int k : e)
    for (int j = 2; j <= k; ++j) out *= j;
  return out;
}

}  // namespace

bool GradedLexGreater::operator()(const Exponent& a, const Exponent& b) const {
  const int da = total(a), db = total(b);
  if (da != db) return da > db;
  return a > b;
}

Poly Poly::constant(int nvars, const Rational& c) {
  Poly p(nvars);
  p.add_term(Exponent(static_cast<std::size_t>(nvars), 0), c);
  return p;
}

Poly Poly::monomial(const Exponent& e, const Rational& c) {
  Poly p(static_cast<int>(e.size()));
  p.add_term(e, c);
  return p;
}

Poly Poly::variable(int nvars, int i) {
  Exponent e(static_cast<std::size_t>(nvars), 0);
  e[static_cast<std::size_t>(i)] = 1;
  return monomial(e);
}

Poly Poly::linear(const IntVector& coeffs) { return linear(RatVector(to_rational(coeffs))); }

Poly Poly::linear(const RatVector& coeffs) {
  const int n = static_cast<int>(coeffs.size());
  Poly p(n);
  for (int i = 0; i < n; ++i) {
    Exponent e(static_cast<std::size_t>(n), 0);
    e[static_cast<std::size_t>(i)] = 1;
    p.add_term(e, coeffs(i));
  }
  return p;
}

int Poly::degree() const { return terms_.empty() ? -1 : total(terms_.begin()->first); }

bool Poly::is_homogeneous(int d) const {
  return std::all_of(terms_.begin(), terms_.end(), [d](const auto& t) { return total(t.first) == d; });
}

Rational Poly::coefficient(const Exponent& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Rational(0) : it->second;
}

Rational Poly::evaluate(const RatVector& point) const {
  Rational out = 0;
  for (const auto& [e, c] : terms_) {
    Rational t = c;
    for (std::size_t i = 0; i < e.size(); ++i)
      for (int k = 0; k < e[i]; ++k) t *= point(static_cast<Eigen::Index>(i));
    out += t;
  }
  return out;
}

void Poly::add_term(const Exponent& e, const Rational& c) {
  if (static_cast<int>(e.size()) != nvars_) throw InternalError("monomial has the wrong number of variables");
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Poly& Poly::operator+=(const Poly& o) {
  if (o.nvars_ != nvars_) throw InternalError("adding polynomials in different variables");
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  if (o.nvars_ != nvars_) throw InternalError("subtracting polynomials in different variables");
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

Poly& Poly::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& t : terms_) t.second *= c;
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  if (a.nvars_ != b.nvars_) throw InternalError("multiplying polynomials in different variables");
  Poly out(a.nvars_);
  Exponent e(static_cast<std::size_t>(a.nvars_));
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      out.add_term(e, ca * cb);
    }
  }
  return out;
}

std::string Poly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    const bool constant_term = total(e) == 0;
    Rational mag = c < 0 ? Rational(-c) : c;
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    bool wrote = false;
    if (mag != 1 || constant_term) {
      os << mag.str();
      wrote = true;
    }
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (wrote) os << "*";
      os << "x" << (i + 1);
      if (e[i] > 1) os << "^" << e[i];
      wrote = true;
    }
  }
  return os.str();
}

Poly pow(const Poly& f, int k) {
  Poly out = Poly::constant(f.nvars(), 1);
  for (int i = 0; i < k; ++i) out = out * f;
  return out;
}

Poly compose_linear(const Poly& f, const RatMatrix& a) {
  const int n = f.nvars();
  std::vector<std::vector<Poly>> powers(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) powers[static_cast<std::size_t>(i)].push_back(Poly::constant(n, 1));
  auto power_of = [&](int i, int k) -> const Poly& {
    auto& cache = powers[static_cast<std::size_t>(i)];
    while (static_cast<int>(cache.size()) <= k) cache.push_back(cache.back() * Poly::linear(RatVector(a.row(i).transpose())));
    return cache[static_cast<std::size_t>(k)];
  };
  Poly out(n);
  for (const auto& [e, c] : f.terms()) {
    Poly t = Poly::constant(n, c);
    for (int i = 0; i < n; ++i)
      if (e[static_cast<std::size_t>(i)] > 0) t = t * power_of(i, e[static_cast<std::size_t>(i)]);
    out += t;
  }
  return out;
}

Poly substitute(const WeylElement& w, const Poly& f) {
  return compose_linear(f, RatMatrix(to_rational(w.matrix).transpose()));
}

Poly exact_divide(const Poly& f, const Poly& ell) {
  if (ell.is_zero() || ell.degree() != 1 || !ell.is_homogeneous(1))
    throw InternalError("exact_divide expects a nonzero linear form");
  const auto& [lead_e, lead_c] = *ell.terms().begin();
  const auto j = static_cast<std::size_t>(std::find(lead_e.begin(), lead_e.end(), 1) - lead_e.begin());
  Poly rest = f;
  Poly q(f.nvars());
  while (!rest.is_zero()) {
    const auto& [e, c] = *rest.terms().begin();
    if (e[j] == 0) throw NotDivisible("polynomial is not divisible by " + ell.str());
    Exponent qe = e;
    --qe[j];
    const Poly t = Poly::monomial(qe, c / lead_c);
    q += t;
    rest -= t * ell;
  }
  return q;
}

Rational KernelForm::evaluate(const RatVector& point) const {
  Rational out = scalar;
  for (const auto& a : numerator) out *= Poly::linear(a.coords).evaluate(point);
  for (const auto& a : denominator) out /= Poly::linear(a.coords).evaluate(point);
  return out;
}

std::string KernelForm::str() const {
  auto product = [](const std::vector<Weight>& ws) {
    if (ws.empty()) return std::string("1");
    std::string s;
    for (const auto& a : ws) s += "(" + Poly::linear(a.coords).str() + ")";
    return s;
  };
  std::string s = scalar == 1 ? "" : scalar.str() + "*";
  return s + product(numerator) + "/" + product(denominator);
}

namespace {

// Kernel as scalar * prod P^e over primitive forms P.
struct FactoredKernel {
  Rational scalar = 1;
  std::map<Weight, int> exponents;

  void absorb(const Weight& alpha, int sign) {
    auto [prim, s] = primitive_part(alpha.coords);
    if (s == 0) throw InternalError("kernel contains the zero linear form");
    Rational factor(s);
    scalar = sign > 0 ? scalar * factor : scalar / factor;
    int& e = exponents[Weight(prim)];
    e += sign;
    if (e == 0) exponents.erase(Weight(prim));
  }
};

}  // namespace

Poly kernel_sum(const Poly& f, const KernelForm& k, const WeylGroup& w, const std::vector<std::size_t>& elements) {
  const int n = w.rank();
  FactoredKernel base;
  for (const auto& a : k.numerator) base.absorb(a, +1);
  for (const auto& a : k.denominator) base.absorb(a, -1);
  base.scalar *= k.scalar;

  struct Term {
    Rational coef;
    Poly image;
    std::map<Weight, int> exponents;
  };
  std::vector<Term> terms;
  std::map<Weight, int> lcm;
  for (std::size_t idx : elements) {
    const WeylElement& e = w[idx];
    Term t{base.scalar, substitute(e, f), {}};
    FactoredKernel moved;
    for (const auto& [prim, exp] : base.exponents) {
      const Weight image = char_action(e, prim);
      for (int i = 0; i < std::abs(exp); ++i) moved.absorb(image, exp > 0 ? +1 : -1);
    }
    t.coef *= moved.scalar;
    t.exponents = moved.exponents;
    for (const auto& [prim, exp] : t.exponents)
      if (exp < 0) lcm[prim] = std::max(lcm[prim], -exp);
    terms.push_back(std::move(t));
  }

  std::map<Weight, std::vector<Poly>> power_cache;
  auto power_of = [&](const Weight& prim, int e) -> const Poly& {
    auto& cache = power_cache[prim];
    if (cache.empty()) cache.push_back(Poly::constant(n, 1));
    while (static_cast<int>(cache.size()) <= e) cache.push_back(cache.back() * Poly::linear(prim.coords));
    return cache[static_cast<std::size_t>(e)];
  };

  Poly numerator(n);
  for (const Term& t : terms) {
    Poly term = t.image * t.coef;
    std::map<Weight, int> shifted = lcm;
    for (const auto& [prim, exp] : t.exponents) shifted[prim] += exp;
    for (const auto& [prim, exp] : shifted)
      if (exp > 0) term = term * power_of(prim, exp);
    numerator += term;
  }
  try {
    for (const auto& [prim, exp] : lcm) {
      const Poly ell = Poly::linear(prim.coords);
      for (int i = 0; i < exp; ++i) numerator = exact_divide(numerator, ell);
    }
  } catch (const NotDivisible& e) {
    throw InternalError(std::string("kernel sum is not a polynomial: ") + e.what());
  }
  return numerator;
}

std::vector<Exponent> monomials(int nvars, int degree) {
  std::vector<Exponent> out;
  if (degree < 0) return out;
  Exponent e(static_cast<std::size_t>(nvars), 0);
  if (nvars == 0) {
    if (degree == 0) out.push_back(e);
    return out;
  }
  // Descending lexicographic order of compositions of degree into nvars parts.
  auto rec = [&](auto&& self, std::size_t i, int remaining) -> void {
    if (i + 1 == e.size()) {
      e[i] = remaining;
      out.push_back(e);
      return;
    }
    for (int k = remaining; k >= 0; --k) {
      e[i] = k;
      self(self, i + 1, remaining - k);
    }
  };
  rec(rec, 0, degree);
  return out;
}

GradedBasis::GradedBasis(int nvars, int degree) : nvars_(nvars), degree_(degree), monomials_(monomials(nvars, degree)) {
  for (std::size_t i = 0; i < monomials_.size(); ++i) position_.emplace(monomials_[i], static_cast<Eigen::Index>(i));
  echelon_.rows = RatMatrix(0, static_cast<Eigen::Index>(monomials_.size()));
}

RatVector GradedBasis::coefficients(const Poly& f) const {
  RatVector v = RatVector::Zero(static_cast<Eigen::Index>(monomials_.size()));
  for (const auto& [e, c] : f.terms()) {
    auto it = position_.find(e);
    if (it == position_.end()) throw InputError("polynomial is not homogeneous of degree " + std::to_string(degree_));
    v(it->second) = c;
  }
  return v;
}

Poly GradedBasis::to_poly(const RatVector& v) const {
  Poly p(nvars_);
  for (Eigen::Index i = 0; i < v.size(); ++i) p.add_term(monomials_[static_cast<std::size_t>(i)], v(i));
  return p;
}

Poly GradedBasis::row(Eigen::Index i) const { return to_poly(echelon_.rows.row(i).transpose()); }

std::vector<Poly> GradedBasis::polys() const {
  std::vector<Poly> out;
  for (Eigen::Index i = 0; i < dim(); ++i) out.push_back(row(i));
  return out;
}

bool GradedBasis::contains(const Poly& f) const {
  if (f.is_zero()) return true;
  if (!f.is_homogeneous(degree_)) return false;
  return coordinates(echelon_, coefficients(f)).has_value();
}

RatVector GradedBasis::coordinates_of(const Poly& f) const {
  auto c = coordinates(echelon_, coefficients(f));
  if (!c) throw InternalError("polynomial " + f.str() + " lies outside the graded subspace");
  return *c;
}

void GradedBasis::set_rows(const RatMatrix& rows) { echelon_ = rref<Rational>(rows); }

GradedBasis rref_span(const std::vector<Poly>& vectors, int degree, int nvars) {
  GradedBasis b(nvars, degree);
  RatMatrix m(static_cast<Eigen::Index>(vectors.size()), static_cast<Eigen::Index>(b.monomial_order().size()));
  for (std::size_t i = 0; i < vectors.size(); ++i) {
    if (!vectors[i].is_homogeneous(degree))
      throw InputError("rref_span: vector is not homogeneous of degree " + std::to_string(degree));
    m.row(static_cast<Eigen::Index>(i)) = b.coefficients(vectors[i]).transpose();
  }
  b.set_rows(m);
  return b;
}

std::vector<Weight> independent_subset(const std::vector<Weight>& forms, int nvars) {
  std::vector<Weight> out;
  RatMatrix m(0, nvars);
  for (const auto& f : forms) {
    if (f.is_zero()) continue;
    RatMatrix trial(m.rows() + 1, nvars);
    trial << m, to_rational(f.coords.transpose());
    if (rank<Rational>(trial) == trial.rows()) {
      m = trial;
      out.push_back(f);
    }
  }
  return out;
}

std::vector<Poly> form_monomials(const std::vector<Poly>& forms, int degree, int nvars) {
  std::vector<Poly> out;
  const int k = static_cast<int>(forms.size());
  for (const Exponent& e : monomials(k, degree)) {
    Poly p = Poly::constant(nvars, 1);
    for (int i = 0; i < k; ++i) p = p * pow(forms[static_cast<std::size_t>(i)], e[static_cast<std::size_t>(i)]);
    out.push_back(std::move(p));
  }
  return out;
}

Poly average(const Poly& f, const Subgroup& h) {
  Poly out(f.nvars());
  for (std::size_t i : h.members) out += substitute((*h.parent)[i], f);
  return out * Rational(1, static_cast<long>(h.order()));
}

GradedBasis invariant_basis(const Subgroup& h, int degree, const std::vector<Weight>& u, int nvars) {
  const std::vector<Weight> basis = independent_subset(u, nvars);
  if (!basis.empty()) {
    RatMatrix span(static_cast<Eigen::Index>(basis.size()), nvars);
    for (std::size_t i = 0; i < basis.size(); ++i) span.row(static_cast<Eigen::Index>(i)) = to_rational(basis[i].coords.transpose());
    const Echelon<Rational> e = rref<Rational>(span);
    for (std::size_t idx : h.members)
      for (const auto& b : basis)
        if (!coordinates(e, to_rational(char_action((*h.parent)[idx], b).coords)))
          throw InputError("invariant_basis: the span of the linear forms is not stable under the subgroup");
  }
  std::vector<Poly> forms;
  for (const auto& b : basis) forms.push_back(Poly::linear(b.coords));
  std::vector<Poly> averaged;
  for (const Poly& m : form_monomials(forms, degree, nvars)) averaged.push_back(average(m, h));
  return rref_span(averaged, degree, nvars);
}

Rational inner_product(const Poly& f, const Poly& g, const RatMatrix& b) {
  const Poly fb = compose_linear(f, b);
  Rational out = 0;
  for (const auto& [e, c] : g.terms()) {
    const Rational a = fb.coefficient(e);
    if (a != 0) out += a * c * factorial_product(e);
  }
  return out;
}

GradedBasis orthogonal_complement(const GradedBasis& sub, const GradedBasis& ambient, const RatMatrix& b) {
  if (sub.degree() != ambient.degree() || sub.nvars() != ambient.nvars())
    throw InputError("orthogonal_complement: degree or variable mismatch");
  const std::vector<Poly> subs = sub.polys();
  const std::vector<Poly> amb = ambient.polys();
  for (const Poly& s : subs)
    if (!ambient.contains(s)) throw InputError("orthogonal_complement: subspace is not contained in the ambient space");
  std::vector<Poly> sub_b;
  for (const Poly& s : subs) sub_b.push_back(compose_linear(s, b));

  RatMatrix gram(static_cast<Eigen::Index>(subs.size()), static_cast<Eigen::Index>(amb.size()));
  for (std::size_t i = 0; i < subs.size(); ++i) {
    for (std::size_t j = 0; j < amb.size(); ++j) {
      Rational v = 0;
      for (const auto& [e, c] : amb[j].terms()) {
        const Rational a = sub_b[i].coefficient(e);
        if (a != 0) v += a * c * factorial_product(e);
      }
      gram(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = v;
    }
  }
  const RatMatrix kernel = subs.empty() ? RatMatrix(RatMatrix::Identity(static_cast<Eigen::Index>(amb.size()),
                                                                        static_cast<Eigen::Index>(amb.size())))
                                        : nullspace<Rational>(gram);
  GradedBasis out(ambient.nvars(), ambient.degree());
  out.set_rows(kernel * ambient.echelon().rows);
  return out;
}

}  // namespace cohint
