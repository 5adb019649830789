#pragma once

#include "cohint/lattice.hpp"
#include "cohint/weyl.hpp"

#include <memory>
#include <vector>

namespace cohint {

/// A rational subspace of cocharacter space, stored as the row Hermite normal
/// form of a saturated integer basis.
struct Flat {
  IntMatrix basis;
  int dim() const { return static_cast<int>(basis.rows()); }
  friend bool operator==(const Flat& a, const Flat& b) { return dense_equal(a.basis, b.basis); }
};

struct Stratum {
  std::size_t index = 0;
  Flat flat;
  WeightMultiset zero_v;  // weights of V vanishing on the flat
  WeightMultiset zero_g;  // weights of g vanishing on the flat
  Cocharacter rep;
  NumericInvariants dims;
};

struct Stratification {
  GroupData group;
  RepresentationData rep;
  std::shared_ptr<const WeylGroup> weyl;
  std::vector<Weight> hyperplanes;  // primitive normals, one per hyperplane
  std::vector<Stratum> strata;
  std::vector<std::vector<bool>> order;             // order[a][b] == leq(a, b)
  std::vector<std::vector<std::size_t>> action;     // action[w][s] = image stratum
  std::vector<std::size_t> orbit_of;                // orbit id of each stratum
  std::vector<std::vector<std::size_t>> orbits;     // members, least index first
  std::vector<Subgroup> w_lower;                    // setwise stabilizers
  std::vector<Subgroup> w_upper;                    // pointwise stabilizers of representatives
  std::size_t top = 0;                              // stratum of the zero cocharacter
  std::size_t generic = 0;                          // stratum of the full space

  std::size_t orbit_representative(std::size_t orbit) const { return orbits[orbit].front(); }
};

/// Zero sets of an arbitrary cocharacter, as sorted supports.
struct ZeroSets {
  std::vector<Weight> v, g;
  friend bool operator==(const ZeroSets& a, const ZeroSets& b) { return a.v == b.v && a.g == b.g; }
};

ZeroSets zero_sets(const GroupData& group, const RepresentationData& rep, const Cocharacter& lambda);
ZeroSets zero_sets(const Stratum& s);

/// Throws InputError for data that is not weakly symmetric.
Stratification enumerate_strata(const GroupData& group, const RepresentationData& rep,
                                 std::size_t group_cap = kDefaultGroupCap);

/// First lambda = sum c_i b_i with c = (1, M, M^2, ...) whose zero sets equal
/// the given ones; the zero flat yields the zero cocharacter.
Cocharacter representative_cocharacter(const Flat& flat, const ZeroSets& target, const GroupData& group,
                                       const RepresentationData& rep);

bool leq(const Stratum& a, const Stratum& b);

/// nu = a * child.rep + b * parent_rep with b > 0, agreeing in sign with
/// parent_rep wherever parent_rep does not vanish, and vanishing exactly on
/// the intersection of the two zero sets.
Cocharacter align_representative(const Stratification& strat, const Stratum& child, const Cocharacter& parent_rep);

}  // namespace cohint
