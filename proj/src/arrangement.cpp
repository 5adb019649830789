#include "cohint/arrangement.hpp"

#include "cohint/linalg.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <set>

namespace cohint {

namespace {

struct FlatLess {
  bool operator()(const IntMatrix& a, const IntMatrix& b) const { return lex_less(a, b); }
};

bool vanishes_on(const IntMatrix& basis, const Weight& alpha) {
  for (Eigen::Index i = 0; i < basis.rows(); ++i) {
    Integer s = 0;
    for (Eigen::Index j = 0; j < basis.cols(); ++j) s = checked_add(s, checked_mul(basis(i, j), alpha.coords(j)));
    if (s != 0) return false;
  }
  return true;
}

WeightMultiset vanishing(const WeightMultiset& ws, const IntMatrix& basis) {
  WeightMultiset out;
  for (const auto& e : ws.entries())
    if (vanishes_on(basis, e.weight)) out.add(e.weight, e.multiplicity);
  return out;
}

IntMatrix flat_of(const std::vector<Weight>& normals, int rank) {
  IntMatrix a(static_cast<Eigen::Index>(normals.size()), rank);
  for (std::size_t i = 0; i < normals.size(); ++i) a.row(static_cast<Eigen::Index>(i)) = normals[i].coords.transpose();
  return row_hermite(integer_kernel(a));
}

std::vector<Weight> collect_hyperplanes(const GroupData& group, const RepresentationData& rep) {
  std::set<Weight> out;
  for (const WeightMultiset* ws : {&rep.v_weights, &group.g_weights})
    for (const auto& e : ws->entries())
      if (!e.weight.is_zero()) out.insert(Weight(primitive_part(e.weight.coords).first));
  return {out.begin(), out.end()};
}

}  // namespace

ZeroSets zero_sets(const GroupData& group, const RepresentationData& rep, const Cocharacter& lambda) {
  ZeroSets z;
  for (const auto& e : rep.v_weights.entries())
    if (pairing(lambda, e.weight) == 0) z.v.push_back(e.weight);
  for (const auto& e : group.g_weights.entries())
    if (pairing(lambda, e.weight) == 0) z.g.push_back(e.weight);
  return z;
}

ZeroSets zero_sets(const Stratum& s) { return ZeroSets{s.zero_v.support(), s.zero_g.support()}; }

Cocharacter representative_cocharacter(const Flat& flat, const ZeroSets& target, const GroupData& group,
                                       const RepresentationData& rep) {
  const Eigen::Index n = flat.basis.cols();
  if (flat.dim() == 0) return Cocharacter(IntVector::Zero(n));
  for (Integer m = 1;; ++m) {
    IntVector lambda = IntVector::Zero(n);
    Integer c = 1;
    for (Eigen::Index i = 0; i < flat.basis.rows(); ++i) {
      for (Eigen::Index j = 0; j < n; ++j) lambda(j) = checked_add(lambda(j), checked_mul(c, flat.basis(i, j)));
      c = checked_mul(c, m);
    }
    const Cocharacter candidate(lambda);
    if (zero_sets(group, rep, candidate) == target) return candidate;
  }
}

bool leq(const Stratum& a, const Stratum& b) {
  const ZeroSets za = zero_sets(a), zb = zero_sets(b);
  return std::includes(zb.v.begin(), zb.v.end(), za.v.begin(), za.v.end()) &&
         std::includes(zb.g.begin(), zb.g.end(), za.g.begin(), za.g.end());
}

Stratification enumerate_strata(const GroupData& group, const RepresentationData& rep, std::size_t group_cap) {
  if (!is_weakly_symmetric(rep)) throw InputError("representation is not weakly symmetric");
  const int n = group.rank;
  Stratification st;
  st.group = group;
  st.rep = rep;
  st.weyl = std::make_shared<const WeylGroup>(WeylGroup::enumerate(n, group.weyl_generators, group_cap));
  st.hyperplanes = collect_hyperplanes(group, rep);

  // Closure of the full space under intersection with each hyperplane.
  std::map<IntMatrix, std::vector<Weight>, FlatLess> flats;
  std::deque<IntMatrix> queue;
  const IntMatrix full = flat_of({}, n);
  flats.emplace(full, std::vector<Weight>{});
  queue.push_back(full);
  while (!queue.empty()) {
    const IntMatrix basis = queue.front();
    queue.pop_front();
    std::vector<Weight> normals;
    for (const Weight& h : st.hyperplanes)
      if (vanishes_on(basis, h)) normals.push_back(h);
    for (const Weight& h : st.hyperplanes) {
      if (vanishes_on(basis, h)) continue;
      std::vector<Weight> next = normals;
      next.push_back(h);
      IntMatrix b = flat_of(next, n);
      if (flats.emplace(b, next).second) queue.push_back(std::move(b));
    }
  }

  std::vector<IntMatrix> ordered;
  for (const auto& [basis, normals] : flats) ordered.push_back(basis);
  std::stable_sort(ordered.begin(), ordered.end(), [](const IntMatrix& a, const IntMatrix& b) {
    if (a.rows() != b.rows()) return a.rows() > b.rows();
    return lex_less(a, b);
  });

  std::map<IntMatrix, std::size_t, FlatLess> index_of;
  for (std::size_t i = 0; i < ordered.size(); ++i) {
    Stratum s;
    s.index = i;
    s.flat.basis = ordered[i];
    s.zero_v = vanishing(rep.v_weights, ordered[i]);
    s.zero_g = vanishing(group.g_weights, ordered[i]);
    index_of.emplace(ordered[i], i);
    st.strata.push_back(std::move(s));
  }
  st.generic = 0;
  st.top = st.strata.size() - 1;
  for (auto& s : st.strata) {
    s.rep = s.index == st.top ? Cocharacter(IntVector::Zero(n))
                              : representative_cocharacter(s.flat, zero_sets(s), group, rep);
    s.dims = numeric_invariants(group, rep, s.rep);
  }

  const std::size_t count = st.strata.size();
  st.order.assign(count, std::vector<bool>(count, false));
  for (std::size_t a = 0; a < count; ++a)
    for (std::size_t b = 0; b < count; ++b) st.order[a][b] = leq(st.strata[a], st.strata[b]);

  const WeylGroup& w = *st.weyl;
  st.action.assign(w.order(), std::vector<std::size_t>(count));
  for (const auto& e : w.elements()) {
    for (const auto& s : st.strata) {
      IntMatrix image = (e.cochar * s.flat.basis.transpose()).transpose();
      auto it = index_of.find(s.flat.dim() == 0 ? image : row_hermite(image));
      if (it == index_of.end()) throw InternalError("Weyl group image of a flat is not a flat of the arrangement");
      st.action[e.index][s.index] = it->second;
    }
  }

  st.orbit_of.assign(count, count);
  for (std::size_t s = 0; s < count; ++s) {
    if (st.orbit_of[s] != count) continue;
    std::set<std::size_t> members;
    for (std::size_t g = 0; g < w.order(); ++g) members.insert(st.action[g][s]);
    const std::size_t id = st.orbits.size();
    for (std::size_t m : members) st.orbit_of[m] = id;
    st.orbits.emplace_back(members.begin(), members.end());
  }

  for (const auto& s : st.strata) {
    st.w_lower.push_back(set_stabilizer(w, s.zero_v.support(), s.zero_g.support()));
    st.w_upper.push_back(point_stabilizer(w, s.rep));
  }
  return st;
}

Cocharacter align_representative(const Stratification& strat, const Stratum& child, const Cocharacter& parent_rep) {
  const ZeroSets zc = zero_sets(child);
  const ZeroSets zp = zero_sets(strat.group, strat.rep, parent_rep);
  ZeroSets target;
  std::set_intersection(zc.v.begin(), zc.v.end(), zp.v.begin(), zp.v.end(), std::back_inserter(target.v));
  std::set_intersection(zc.g.begin(), zc.g.end(), zp.g.begin(), zp.g.end(), std::back_inserter(target.g));
  if (zp == target) return parent_rep;

  auto signs_match = [&](const Cocharacter& nu) {
    for (const WeightMultiset* ws : {&strat.rep.v_weights, &strat.group.g_weights}) {
      for (const auto& e : ws->entries()) {
        const Integer p = pairing(parent_rep, e.weight);
        const Integer q = pairing(nu, e.weight);
        if (p != 0 && ((p > 0) != (q > 0) || q == 0)) return false;
      }
    }
    return true;
  };
  for (Integer b = 1; b <= (Integer(1) << 40); b *= 2) {
    for (Integer a : {Integer(1), Integer(-1)}) {
      const Cocharacter nu(IntVector(a * child.rep.coords + b * parent_rep.coords));
      if (signs_match(nu) && zero_sets(strat.group, strat.rep, nu) == target) return nu;
    }
  }
  throw InternalError("align_representative: no admissible cocharacter found");
}

}  // namespace cohint
