#pragma once

// Property checks over the catalog, shared by the unit suite and the
// acceptance binary. Each returns ok plus a witness string on failure.

#include "oracles.hpp"
#include "cohint/report.hpp"

#include <sstream>

namespace props {

struct Outcome {
  bool ok = true;
  std::size_t checks = 0;
  std::string witness;

  void expect(bool cond, const std::string& what) {
    ++checks;
    if (!cond && ok) {
      ok = false;
      witness = what;
    }
  }
};

inline std::vector<std::string> keys() { return cohint::catalog_keys(); }

inline cohint::Analysis analysis_of(const std::string& key) {
  const cohint::InputDocument d = cohint::catalog_emit(key);
  return cohint::Analysis(d.group(), d.rep());
}

// 2 deg(out) - d_target == 2 deg(in) - d_source for every pair mu <= lambda
// and invariant inputs of degree <= 2.
inline Outcome degree_preservation() {
  Outcome out;
  for (const auto& key : keys()) {
    const auto st = oracle::strata_of(key);
    const int n = st.weyl->rank();
    for (const auto& mu : st.strata)
      for (const auto& lam : st.strata) {
        if (!st.order[mu.index][lam.index]) continue;
        const auto h = cohint::intersect(cohint::point_stabilizer(*st.weyl, mu.rep),
                                         cohint::point_stabilizer(*st.weyl, lam.rep));
        for (int d = 0; d <= 2; ++d)
          for (const auto& e : cohint::monomials(n, d)) {
            const cohint::Poly f = cohint::average(cohint::Poly::monomial(e), h);
            if (f.is_zero()) continue;
            const cohint::Poly g = cohint::induct(st, f, mu, lam);
            if (g.is_zero()) continue;
            out.expect(g.is_homogeneous(g.degree()) &&
                           2 * g.degree() - lam.dims.d_lambda == 2 * d - mu.dims.d_lambda,
                       key + ": " + std::to_string(mu.index) + " -> " + std::to_string(lam.index) + " on " + f.str());
          }
      }
  }
  return out;
}

inline Outcome associativity(std::size_t& chains) {
  Outcome out;
  chains = 0;
  for (const auto& key : keys()) {
    auto a = analysis_of(key);
    const auto ledger = cohint::verify_associativity(a);
    std::set<std::tuple<std::size_t, std::size_t, std::size_t>> seen;
    for (const auto& s : ledger.samples) {
      seen.insert({s.s1, s.s2, s.s3});
      out.expect(s.ok && s.direct == s.composed, key + ": chain " + std::to_string(s.s1) + "," + std::to_string(s.s2) +
                                                     "," + std::to_string(s.s3) + " on " + s.f.str());
    }
    chains += seen.size();
  }
  out.expect(chains >= 20, "fewer than 20 chains sampled");
  return out;
}

// epsilon is +-1, multiplicative, agrees with the symbolic sign of the kernel,
// and induct(w f) == epsilon(w) induct(f) into the top stratum.
inline Outcome epsilon_and_equivariance() {
  Outcome out;
  for (const auto& key : keys()) {
    auto a = analysis_of(key);
    const auto& st = a.strat();
    const auto& w = a.weyl();
    const int n = w.rank();
    const auto& top = st.strata[st.top];
    for (const auto& orbit : st.orbits) {
      const auto& lam = st.strata[orbit.front()];
      const auto& eps = a.eps(lam.index);
      const auto k = cohint::kernel(lam, top).form;
      const auto& lower = st.w_lower[lam.index];
      for (std::size_t x : lower.members) {
        const int e = eps(x);
        out.expect(e == 1 || e == -1, key + ": epsilon value");
        out.expect(oracle::symbolic_sign(k, w[x].matrix, n) == e, key + ": symbolic sign at element " + std::to_string(x));
        for (std::size_t y : lower.members)
          out.expect(eps(w.multiply(x, y)) == e * eps(y), key + ": multiplicativity");
      }
      const auto& upper = st.w_upper[lam.index];
      for (int d = 0; d <= 3; ++d) {
        std::vector<cohint::Poly> fs;
        for (const auto& m : cohint::monomials(n, d)) {
          cohint::Poly f = cohint::average(cohint::Poly::monomial(m), upper);
          if (!f.is_zero()) fs.push_back(f);
        }
        for (const auto& f : fs) {
          const cohint::Poly base = cohint::induct(st, f, lam, top);
          for (std::size_t x : lower.members) {
            const cohint::Poly moved = cohint::induct(st, cohint::substitute(w[x], f), lam, top);
            out.expect(moved == base * cohint::Rational(eps(x)),
                       key + ": twisted equivariance at stratum " + std::to_string(lam.index) + ", f = " + f.str());
          }
        }
      }
    }
  }
  return out;
}

// The Hilbert identity and the rank test agree, degree by degree, and both pass.
inline Outcome hilbert_matches_rank(int max_degree = 8) {
  Outcome out;
  for (const auto& key : keys()) {
    auto a = analysis_of(key);
    const auto h = cohint::verify_hilbert(a, max_degree);
    const auto iso = cohint::verify_isomorphism(a, max_degree);
    for (int p = 0; p <= max_degree; ++p) {
      const auto& hl = h.lines[static_cast<std::size_t>(p)];
      const auto& il = iso.lines[static_cast<std::size_t>(p)];
      out.expect(hl.ok == il.ok, key + ": ledgers disagree in degree " + std::to_string(p));
      out.expect(hl.ok && il.ok, key + ": degree " + std::to_string(p) + " fails");
      out.expect(hl.target == oracle::invariant_dimension(a.weyl().rank(), a.strat().group.weyl_generators, p),
                 key + ": Molien coefficient in degree " + std::to_string(p));
    }
  }
  return out;
}

inline Outcome j_graded_oracle(int max_p = 3) {
  Outcome out;
  for (const auto& key : keys()) {
    const auto st = oracle::strata_of(key);
    if (st.weyl->rank() > 2) continue;
    for (const auto& s : st.strata)
      for (int p = 0; p <= max_p; ++p)
        out.expect(cohint::j_graded(st, s.index, p).dim() == oracle::j_dimension(st, s.index, p),
                   key + ": stratum " + std::to_string(s.index) + ", p = " + std::to_string(p));
  }
  return out;
}

// kernel_sum against direct evaluation, for every kernel between comparable
// strata and each averaged monomial of degree <= 2, summed over the whole
// pointwise stabilizer of the target.
inline Outcome kernel_sum_evaluation() {
  Outcome out;
  for (const auto& key : keys()) {
    const auto st = oracle::strata_of(key);
    const auto& w = *st.weyl;
    const int n = w.rank();
    for (const auto& mu : st.strata)
      for (const auto& lam : st.strata) {
        if (!st.order[mu.index][lam.index]) continue;
        const auto k = cohint::kernel(mu, lam).form;
        const auto& elems = st.w_upper[lam.index].members;
        std::vector<cohint::Weight> forms;
        for (std::size_t i : elems)
          for (const auto& a : k.denominator) forms.push_back(cohint::char_action(w[i], a));
        const auto points = oracle::sample_points(n, forms);
        const auto h = cohint::intersect(cohint::point_stabilizer(w, mu.rep), st.w_upper[lam.index]);
        for (int d = 0; d <= 2; ++d)
          for (const auto& e : cohint::monomials(n, d)) {
            const cohint::Poly f = cohint::average(cohint::Poly::monomial(e), h);
            const cohint::Poly s = cohint::kernel_sum(f, k, w, elems);
            for (const auto& x : points)
              out.expect(s.evaluate(x) == oracle::kernel_sum_at(f, k, w, elems, x),
                         key + ": kernel " + k.str() + " on " + f.str());
          }
      }
  }
  return out;
}

inline Outcome json_determinism() {
  Outcome out;
  for (const auto& key : keys()) {
    cohint::RunOptions o;
    o.command = "verify";
    o.catalog_key = key;
    o.max_degree = 4;
    out.expect(cohint::run(o).report.dump() == cohint::run(o).report.dump(), key + ": verify report differs between runs");
  }
  return out;
}

}  // namespace props
