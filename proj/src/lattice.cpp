#include "cohint/lattice.hpp"

#include "cohint/linalg.hpp"

#include <algorithm>
#include <map>

namespace cohint {

namespace {

IntVector from_list(std::initializer_list<Integer> c) {
  IntVector v(static_cast<Eigen::Index>(c.size()));
  Eigen::Index i = 0;
  for (Integer x : c) v(i++) = x;
  return v;
}

}  // namespace

Weight::Weight(std::initializer_list<Integer> c) : coords(from_list(c)) {}
Cocharacter::Cocharacter(std::initializer_list<Integer> c) : coords(from_list(c)) {}

WeightMultiset::WeightMultiset(const std::vector<WeightEntry>& entries) {
  for (const auto& e : entries) add(e.weight, e.multiplicity);
}

void WeightMultiset::add(const Weight& w, int multiplicity) {
  if (multiplicity < 1) throw InputError("weight multiplicities must be positive");
  auto it = std::lower_bound(entries_.begin(), entries_.end(), w,
                             [](const WeightEntry& e, const Weight& x) { return e.weight < x; });
  if (it != entries_.end() && it->weight == w) {
    it->multiplicity += multiplicity;
  } else {
    entries_.insert(it, WeightEntry{w, multiplicity});
  }
}

int WeightMultiset::total() const {
  int t = 0;
  for (const auto& e : entries_) t += e.multiplicity;
  return t;
}

int WeightMultiset::multiplicity(const Weight& w) const {
  auto it = std::lower_bound(entries_.begin(), entries_.end(), w,
                             [](const WeightEntry& e, const Weight& x) { return e.weight < x; });
  return (it != entries_.end() && it->weight == w) ? it->multiplicity : 0;
}

std::vector<Weight> WeightMultiset::support() const {
  std::vector<Weight> out;
  out.reserve(entries_.size());
  for (const auto& e : entries_) out.push_back(e.weight);
  return out;
}

std::vector<Weight> WeightMultiset::expanded() const {
  std::vector<Weight> out;
  for (const auto& e : entries_)
    for (int k = 0; k < e.multiplicity; ++k) out.push_back(e.weight);
  return out;
}

WeightMultiset WeightMultiset::negated() const {
  WeightMultiset out;
  for (const auto& e : entries_) out.add(-e.weight, e.multiplicity);
  return out;
}

WeightMultiset WeightMultiset::transformed(const IntMatrix& m) const {
  WeightMultiset out;
  for (const auto& e : entries_) out.add(Weight(IntVector(m * e.weight.coords)), e.multiplicity);
  return out;
}

bool operator==(const WeightMultiset& a, const WeightMultiset& b) {
  if (a.entries_.size() != b.entries_.size()) return false;
  for (std::size_t i = 0; i < a.entries_.size(); ++i) {
    if (!(a.entries_[i].weight == b.entries_[i].weight)) return false;
    if (a.entries_[i].multiplicity != b.entries_[i].multiplicity) return false;
  }
  return true;
}

std::string to_string(SymmetryClass c) {
  switch (c) {
    case SymmetryClass::Symmetric: return "symmetric";
    case SymmetryClass::WeaklySymmetric: return "weakly symmetric";
    case SymmetryClass::NotWeaklySymmetric: return "not weakly symmetric";
  }
  return "unknown";
}

Integer pairing(const Cocharacter& lambda, const Weight& alpha) {
  if (lambda.rank() != alpha.rank())
    throw InputError("pairing of a rank " + std::to_string(lambda.rank()) + " cocharacter with a rank " +
                     std::to_string(alpha.rank()) + " weight");
  Integer s = 0;
  for (Eigen::Index i = 0; i < lambda.rank(); ++i) s = checked_add(s, checked_mul(lambda.coords(i), alpha.coords(i)));
  return s;
}

SymmetryClass symmetry_class(const RepresentationData& rep) {
  const WeightMultiset& ws = rep.v_weights;
  if (ws == ws.negated()) return SymmetryClass::Symmetric;
  // Compare multisets of primitive rays (signed).
  std::map<Weight, int> rays;
  for (const auto& e : ws.entries()) {
    if (e.weight.is_zero()) continue;
    rays[Weight(IntVector(e.weight.coords / gcd_of(e.weight.coords)))] += e.multiplicity;
  }
  for (const auto& [ray, mult] : rays) {
    auto it = rays.find(-ray);
    if (it == rays.end() || it->second != mult) return SymmetryClass::NotWeaklySymmetric;
  }
  return SymmetryClass::WeaklySymmetric;
}

Slices slice_weights(const WeightMultiset& ws, const Cocharacter& lambda) {
  Slices s;
  for (const auto& e : ws.entries()) {
    const Integer p = pairing(lambda, e.weight);
    (p < 0 ? s.neg : p == 0 ? s.zero : s.pos).add(e.weight, e.multiplicity);
  }
  return s;
}

NumericInvariants numeric_invariants(const GroupData& group, const RepresentationData& rep,
                                     const Cocharacter& lambda) {
  if (!is_weakly_symmetric(rep)) throw InputError("representation is not weakly symmetric");
  const Slices v = slice_weights(rep.v_weights, lambda);
  const Slices g = slice_weights(group.g_weights, lambda);
  NumericInvariants out;
  out.dim_V_fixed = v.zero.total();
  out.dim_G_fixed = g.zero.total();
  out.d_lambda = out.dim_V_fixed - out.dim_G_fixed;
  out.r_lambda = v.pos.total() - g.pos.total();
  const int d0 = rep.v_weights.total() - group.g_weights.total();
  if (out.d_lambda + 2 * out.r_lambda != d0)
    throw InternalError("d_lambda + 2 r_lambda differs from dim V - dim G");
  return out;
}

std::vector<std::string> check_lattice_data(const GroupData& group, const RepresentationData& rep) {
  std::vector<std::string> warnings;
  const int n = group.rank;
  if (n < 1) throw InputError("rank must be positive");
  auto check_ranks = [n](const WeightMultiset& ws, const std::string& what) {
    for (const auto& e : ws.entries())
      if (e.weight.rank() != n) throw InputError(what + " weight has length " + std::to_string(e.weight.rank()) +
                                                 ", expected " + std::to_string(n));
  };
  check_ranks(group.g_weights, "g_weights");
  check_ranks(rep.v_weights, "v_weights");
  for (std::size_t i = 0; i < group.weyl_generators.size(); ++i) {
    const IntMatrix& m = group.weyl_generators[i];
    const std::string where = "weyl_generators[" + std::to_string(i) + "]";
    if (m.rows() != n || m.cols() != n) throw InputError(where + " is not " + std::to_string(n) + "x" + std::to_string(n));
    const Rational det = determinant<Rational>(to_rational(m));
    if (det != 1 && det != -1) throw InputError(where + " is not invertible over the integers");
    if (!(group.g_weights.transformed(m) == group.g_weights)) throw InputError("g_weights not stable under " + where);
    if (!(rep.v_weights.transformed(m) == rep.v_weights)) throw InputError("v_weights not stable under " + where);
  }
  if (group.g_weights.multiplicity(Weight(IntVector::Zero(n))) != n)
    throw InputError("g_weights must contain the zero weight with multiplicity equal to the rank");
  if (!(group.g_weights == group.g_weights.negated())) throw InputError("g_weights are not symmetric under negation");
  for (const auto& e : group.g_weights.entries())
    if (!e.weight.is_zero() && e.multiplicity > 1)
      warnings.push_back("nonzero g weight with multiplicity " + std::to_string(e.multiplicity));
  return warnings;
}

}  // namespace cohint
