#include "cohint/integrality.hpp"

#include <algorithm>
#include <set>

namespace cohint {

InductionKernel kernel(const Stratum& mu, const Stratum& target) {
  InductionKernel k;
  k.source_rep = mu.rep;
  k.target = target.index;
  for (const auto& e : target.zero_v.entries())
    if (pairing(mu.rep, e.weight) < 0)
      for (int i = 0; i < e.multiplicity; ++i) k.form.numerator.push_back(e.weight);
  for (const auto& e : target.zero_g.entries())
    if (pairing(mu.rep, e.weight) < 0)
      for (int i = 0; i < e.multiplicity; ++i) k.form.denominator.push_back(e.weight);
  return k;
}

Poly induct(const Stratification& st, const Poly& f, const Stratum& mu, const Stratum& target) {
  const WeylGroup& w = *st.weyl;
  const Subgroup upper = point_stabilizer(w, target.rep);
  const Subgroup h = intersect(point_stabilizer(w, mu.rep), upper);
  for (std::size_t i : h.members)
    if (substitute(w[i], f) != f)
      throw InputError("induct: input polynomial is not invariant under the stabilizer of the source representative");
  return kernel_sum(f, kernel(mu, target).form, w, coset_representatives(h, upper));
}

namespace {

// Integer points (1, m, m^2, ...) on which every listed linear form is nonzero.
std::vector<RatVector> generic_points(const std::vector<Weight>& forms, int rank, std::size_t count) {
  std::vector<RatVector> out;
  for (long m = 2; out.size() < count; ++m) {
    RatVector x(rank);
    Rational c = 1;
    for (int i = 0; i < rank; ++i) {
      x(i) = c;
      c *= m;
    }
    const bool ok = std::all_of(forms.begin(), forms.end(),
                                [&](const Weight& a) { return Poly::linear(a.coords).evaluate(x) != 0; });
    if (ok) out.push_back(x);
  }
  return out;
}

}  // namespace

EpsilonCharacter epsilon(const Stratification& st, const Stratum& lambda, const Subgroup& w_lambda) {
  const WeylGroup& w = *st.weyl;
  const KernelForm k = kernel(lambda, st.strata[st.top]).form;
  std::vector<Weight> forms;
  for (std::size_t i : w_lambda.members) {
    for (const auto& a : k.numerator) forms.push_back(char_action(w[i], a));
    for (const auto& a : k.denominator) forms.push_back(char_action(w[i], a));
  }
  const std::vector<RatVector> points = generic_points(forms, w.rank(), 2);

  EpsilonCharacter eps;
  for (std::size_t i : w_lambda.members) {
    const RatMatrix mt = to_rational(w[i].matrix).transpose();
    std::vector<Rational> values;
    for (const RatVector& x : points) values.push_back(k.evaluate(x) / k.evaluate(RatVector(mt * x)));
    if (values[0] != values[1])
      throw InternalError("epsilon assertion failure: w(k)/k is not constant for element " + std::to_string(i));
    if (values[0] != 1 && values[0] != -1)
      throw InternalError("epsilon assertion failure: value " + values[0].str() + " for element " + std::to_string(i));
    eps.values[i] = values[0] == 1 ? 1 : -1;
  }
  for (std::size_t a : w_lambda.members)
    for (std::size_t b : w_lambda.members)
      if (eps.values.at(w.multiply(a, b)) != eps.values.at(a) * eps.values.at(b))
        throw InternalError("epsilon assertion failure: character is not multiplicative");
  return eps;
}

std::vector<Weight> zero_set_forms(const Stratum& s) {
  std::vector<Weight> out;
  for (const auto& e : s.zero_v.entries())
    if (!e.weight.is_zero()) out.push_back(e.weight);
  for (const auto& e : s.zero_g.entries())
    if (!e.weight.is_zero()) out.push_back(e.weight);
  return out;
}

std::vector<Poly> complement_forms(const Stratum& s, const RatMatrix& b) {
  const int n = static_cast<int>(b.rows());
  const std::vector<Weight> u = independent_subset(zero_set_forms(s), n);
  RatMatrix constraints(static_cast<Eigen::Index>(u.size()), n);
  for (std::size_t i = 0; i < u.size(); ++i)
    constraints.row(static_cast<Eigen::Index>(i)) = to_rational(u[i].coords.transpose()) * b;
  const RatMatrix c = u.empty() ? RatMatrix(RatMatrix::Identity(n, n)) : nullspace<Rational>(constraints);
  std::vector<Poly> out;
  for (Eigen::Index i = 0; i < c.rows(); ++i) out.push_back(Poly::linear(RatVector(c.row(i).transpose())));
  return out;
}

GradedBasis j_graded(const Stratification& st, std::size_t lambda, int p) {
  const WeylGroup& w = *st.weyl;
  const int n = w.rank();
  const Stratum& target = st.strata[lambda];
  std::vector<Poly> forms;
  for (const auto& u : independent_subset(zero_set_forms(target), n)) forms.push_back(Poly::linear(u.coords));
  std::vector<Poly> generators;
  for (const Stratum& mu : st.strata) {
    if (mu.index == lambda || !st.order[mu.index][lambda]) continue;
    const KernelForm k = kernel(mu, target).form;
    const int q = p - k.degree();
    if (q < 0) continue;
    for (const Poly& m : form_monomials(forms, q, n)) {
      Poly g = kernel_sum(m, k, w, st.w_upper[lambda].members);
      if (!g.is_zero()) generators.push_back(std::move(g));
    }
  }
  return rref_span(generators, p, n);
}

Eigen::Index BpsSpace::total_dim() const {
  Eigen::Index t = 0;
  for (const auto& piece : pieces) t += piece.dim();
  return t;
}

BpsSpace bps_space(const Stratification& st, std::size_t lambda, const RatMatrix& b) {
  const WeylGroup& w = *st.weyl;
  const int n = w.rank();
  const Stratum& s = st.strata[lambda];
  const std::vector<Weight> u = zero_set_forms(s);
  BpsSpace out;
  out.stratum = lambda;
  out.max_degree = s.dims.dim_V_fixed / 2;
  for (int p = 0; p <= out.max_degree; ++p) {
    const GradedBasis ambient = invariant_basis(st.w_upper[lambda], p, u, n);
    const GradedBasis sub = j_graded(st, lambda, p);
    out.ambient_dims.push_back(ambient.dim());
    out.j_dims.push_back(sub.dim());
    out.pieces.push_back(orthogonal_complement(sub, ambient, b));
  }
  for (int p = out.max_degree + 1; p <= out.max_degree + 2; ++p) {
    const GradedBasis ambient = invariant_basis(st.w_upper[lambda], p, u, n);
    const GradedBasis sub = j_graded(st, lambda, p);
    if (sub.dim() != ambient.dim())
      throw InternalError("J does not fill the invariants of stratum " + std::to_string(lambda) + " in degree " +
                          std::to_string(p));
  }

  for (std::size_t idx : st.w_lower[lambda].members) {
    std::vector<RatMatrix> mats;
    for (const GradedBasis& piece : out.pieces) {
      RatMatrix m(piece.dim(), piece.dim());
      for (Eigen::Index j = 0; j < piece.dim(); ++j) m.col(j) = piece.coordinates_of(substitute(w[idx], piece.row(j)));
      mats.push_back(std::move(m));
    }
    out.w_matrices.emplace(idx, std::move(mats));
  }

  const int lo = s.dims.dim_G_fixed - s.dims.dim_V_fixed, hi = s.dims.dim_G_fixed;
  for (int p = 0; p <= out.max_degree; ++p) {
    const Eigen::Index d = out.pieces[static_cast<std::size_t>(p)].dim();
    if (d == 0) continue;
    const int i = 2 * p - s.dims.d_lambda;
    if (i < lo || i > hi) throw InternalError("BPS piece outside the allowed shifted degree range");
    out.dt_table[i] = d;
    out.euler += (i % 2 == 0 ? 1 : -1) * static_cast<long>(d);
  }
  return out;
}

namespace {

// Matrix of the cocharacter action of w on the flat, in an echelon basis.
RatMatrix flat_action(const WeylElement& w, const Flat& flat) {
  if (flat.dim() == 0) return RatMatrix(0, 0);
  const Echelon<Rational> e = rref<Rational>(to_rational(flat.basis));
  const RatMatrix cochar = to_rational(w.cochar);
  RatMatrix m(flat.dim(), flat.dim());
  for (Eigen::Index j = 0; j < flat.dim(); ++j) {
    auto c = coordinates(e, RatVector(cochar * e.rows.row(j).transpose()));
    if (!c) throw InternalError("Weyl element does not preserve the flat");
    m.col(j) = *c;
  }
  return m;
}

Rational trace(const RatMatrix& m) {
  Rational t = 0;
  for (Eigen::Index i = 0; i < m.rows(); ++i) t += m(i, i);
  return t;
}

}  // namespace

std::vector<Rational> isotypic_series(const Stratification& st, const BpsSpace& bps, const EpsilonCharacter& eps,
                                      int cutoff) {
  std::vector<Rational> out(static_cast<std::size_t>(std::max(cutoff + 1, 0)));
  if (cutoff < 0) return out;
  const WeylGroup& w = *st.weyl;
  const Stratum& s = st.strata[bps.stratum];
  const Subgroup& lower = st.w_lower[bps.stratum];
  for (std::size_t idx : lower.members) {
    const std::vector<Rational> series = inverse_det_series(flat_action(w[idx], s.flat), cutoff);
    const std::vector<RatMatrix>& mats = bps.w_matrices.at(idx);
    const Rational sign(eps(idx));  // eps(w)^-1 == eps(w)
    for (int a = 0; a <= std::min(cutoff, bps.max_degree); ++a) {
      const Rational tr = trace(mats[static_cast<std::size_t>(a)]);
      if (tr == 0) continue;
      for (int m = a; m <= cutoff; ++m) out[static_cast<std::size_t>(m)] += sign * tr * series[static_cast<std::size_t>(m - a)];
    }
  }
  const Rational order(static_cast<long>(lower.order()));
  for (auto& c : out) c /= order;
  return out;
}

std::vector<Rational> target_series(const WeylGroup& w, int cutoff) {
  std::vector<WeightedMatrix> elements;
  for (const auto& e : w.elements()) elements.push_back({to_rational(e.matrix), Rational(1)});
  return molien_coefficients(elements, cutoff);
}

Analysis::Analysis(Stratification st) : st_(std::move(st)), form_(averaged_form(*st_.weyl)) {}

Analysis::Analysis(const GroupData& group, const RepresentationData& rep, std::size_t group_cap)
    : Analysis(enumerate_strata(group, rep, group_cap)) {}

const BpsSpace& Analysis::bps(std::size_t stratum) {
  auto it = bps_.find(stratum);
  if (it == bps_.end()) it = bps_.emplace(stratum, bps_space(st_, stratum, form_)).first;
  return it->second;
}

const EpsilonCharacter& Analysis::eps(std::size_t stratum) {
  auto it = eps_.find(stratum);
  if (it == eps_.end()) it = eps_.emplace(stratum, epsilon(st_, st_.strata[stratum], st_.w_lower[stratum])).first;
  return it->second;
}

const std::vector<Rational>& Analysis::isotypic(std::size_t stratum, int cutoff) {
  auto it = iso_.find(stratum);
  if (it == iso_.end() || static_cast<int>(it->second.size()) < cutoff + 1) {
    std::vector<Rational> s = isotypic_series(st_, bps(stratum), eps(stratum), cutoff);
    iso_[stratum] = std::move(s);
    it = iso_.find(stratum);
  }
  return it->second;
}

int Analysis::default_max_degree() const {
  int m = 0;
  for (const auto& s : st_.strata) m = std::max(m, s.dims.dim_V_fixed / 2);
  return m + 2;
}

HilbertLedger verify_hilbert(Analysis& a, int max_degree) {
  const Stratification& st = a.strat();
  const std::vector<Rational> target = target_series(a.weyl(), max_degree);
  HilbertLedger ledger;
  for (int p = 0; p <= max_degree; ++p) {
    HilbertLine line;
    line.degree = p;
    line.target = target[static_cast<std::size_t>(p)];
    line.assembled = 0;
    for (std::size_t o = 0; o < st.orbits.size(); ++o) {
      const std::size_t lam = st.orbit_representative(o);
      const int m = p - st.strata[lam].dims.r_lambda;
      if (m < 0) continue;
      line.assembled += a.isotypic(lam, max_degree - st.strata[lam].dims.r_lambda)[static_cast<std::size_t>(m)];
    }
    line.ok = line.target == line.assembled;
    ledger.pass = ledger.pass && line.ok;
    ledger.lines.push_back(line);
  }
  return ledger;
}

std::vector<AssembledVector> assemble_degree(Analysis& a, int p) {
  const Stratification& st = a.strat();
  const WeylGroup& w = a.weyl();
  const int n = w.rank();
  std::vector<AssembledVector> out;
  for (std::size_t o = 0; o < st.orbits.size(); ++o) {
    const std::size_t lam = st.orbit_representative(o);
    const Stratum& s = st.strata[lam];
    const int budget = p - s.dims.r_lambda;
    if (budget < 0) continue;
    const BpsSpace& bps = a.bps(lam);
    const EpsilonCharacter& eps = a.eps(lam);
    const Subgroup& lower = st.w_lower[lam];
    const std::vector<Poly> cforms = complement_forms(s, a.form());
    for (int deg_a = 0; deg_a <= std::min(budget, bps.max_degree); ++deg_a) {
      const GradedBasis& piece = bps.pieces[static_cast<std::size_t>(deg_a)];
      if (piece.dim() == 0) continue;
      const int deg_b = budget - deg_a;
      std::vector<Poly> projected;
      for (const Poly& pv : piece.polys()) {
        for (const Poly& m : form_monomials(cforms, deg_b, n)) {
          const Poly v = pv * m;
          Poly proj(n);
          for (std::size_t idx : lower.members) proj += substitute(w[idx], v) * Rational(eps(idx));
          proj *= Rational(1, static_cast<long>(lower.order()));
          projected.push_back(std::move(proj));
        }
      }
      const GradedBasis span = rref_span(projected, budget, n);
      for (const Poly& v : span.polys()) {
        AssembledVector av;
        av.orbit_rep = lam;
        av.bps_degree = deg_a;
        av.extra_degree = deg_b;
        av.source = v;
        av.image = induct(st, v, s, st.strata[st.top]);
        out.push_back(std::move(av));
      }
    }
  }
  return out;
}

IsomorphismLedger verify_isomorphism(Analysis& a, int max_degree) {
  const WeylGroup& w = a.weyl();
  const int n = w.rank();
  IsomorphismLedger ledger;
  std::vector<Weight> coordinates_forms;
  for (int i = 0; i < n; ++i) {
    IntVector e = IntVector::Zero(n);
    e(i) = 1;
    coordinates_forms.emplace_back(e);
  }
  for (int p = 0; p <= max_degree; ++p) {
    IsomorphismLine line;
    line.degree = p;
    const GradedBasis target = invariant_basis(whole_group(w), p, coordinates_forms, n);
    line.target_dim = target.dim();
    std::vector<Poly> images;
    bool inside = true;
    for (const AssembledVector& v : assemble_degree(a, p)) {
      images.push_back(v.image);
      inside = inside && target.contains(v.image);
    }
    line.assembled = static_cast<Eigen::Index>(images.size());
    line.rank = rref_span(images, p, n).dim();
    line.ok = inside && line.assembled == line.target_dim && line.rank == line.target_dim;
    ledger.pass = ledger.pass && line.ok;
    ledger.lines.push_back(line);
  }
  return ledger;
}

AssociativityLedger verify_associativity(Analysis& a, std::size_t max_chains, int max_poly_degree) {
  const Stratification& st = a.strat();
  const WeylGroup& w = a.weyl();
  const int n = w.rank();
  AssociativityLedger ledger;
  std::size_t chains = 0;
  const std::size_t count = st.strata.size();
  for (std::size_t s1 = 0; s1 < count && chains < max_chains; ++s1) {
    for (std::size_t s2 = 0; s2 < count && chains < max_chains; ++s2) {
      if (!st.order[s1][s2]) continue;
      for (std::size_t s3 = 0; s3 < count && chains < max_chains; ++s3) {
        if (!st.order[s2][s3]) continue;
        ++chains;
        Stratum aligned = st.strata[s1];
        aligned.rep = align_representative(st, st.strata[s1], st.strata[s2].rep);
        const Subgroup stab = point_stabilizer(w, aligned.rep);
        for (int d = 0; d <= max_poly_degree; ++d) {
          // First monomial of degree d whose average over the stabilizer is nonzero.
          std::optional<Poly> f;
          for (const Exponent& e : monomials(n, d)) {
            Poly g = average(Poly::monomial(e), stab);
            if (!g.is_zero()) {
              f = std::move(g);
              break;
            }
          }
          if (!f) continue;
          AssociativitySample sample;
          sample.s1 = s1;
          sample.s2 = s2;
          sample.s3 = s3;
          sample.aligned = aligned.rep;
          sample.f = *f;
          sample.direct = induct(st, *f, aligned, st.strata[s3]);
          sample.composed = induct(st, induct(st, *f, aligned, st.strata[s2]), st.strata[s2], st.strata[s3]);
          sample.ok = sample.direct == sample.composed;
          ledger.pass = ledger.pass && sample.ok;
          ledger.samples.push_back(std::move(sample));
        }
      }
    }
  }
  return ledger;
}

HilbertLedger verify_hilbert(const GroupData& group, const RepresentationData& rep, int max_degree) {
  Analysis a(group, rep);
  return verify_hilbert(a, max_degree);
}

IsomorphismLedger verify_isomorphism(const GroupData& group, const RepresentationData& rep, int max_degree) {
  Analysis a(group, rep);
  return verify_isomorphism(a, max_degree);
}

}  // namespace cohint
