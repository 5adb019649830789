#pragma once

#include "cohint/scalar.hpp"

#include <string>
#include <utility>
#include <vector>

namespace cohint {

/// A character of the maximal torus, in the fixed lattice basis.
struct Weight {
  IntVector coords;

  Weight() = default;
  explicit Weight(IntVector c) : coords(std::move(c)) {}
  Weight(std::initializer_list<Integer> c);

  Eigen::Index rank() const { return coords.size(); }
  bool is_zero() const { return coords.isZero(); }
  Weight operator-() const { return Weight(IntVector(-coords)); }
  friend bool operator==(const Weight& a, const Weight& b) { return dense_equal(a.coords, b.coords); }
  friend bool operator<(const Weight& a, const Weight& b) { return lex_less(a.coords, b.coords); }
};

/// A one-parameter subgroup of the maximal torus, in the dual basis.
struct Cocharacter {
  IntVector coords;

  Cocharacter() = default;
  explicit Cocharacter(IntVector c) : coords(std::move(c)) {}
  Cocharacter(std::initializer_list<Integer> c);

  Eigen::Index rank() const { return coords.size(); }
  bool is_zero() const { return coords.isZero(); }
  friend bool operator==(const Cocharacter& a, const Cocharacter& b) { return dense_equal(a.coords, b.coords); }
  friend bool operator<(const Cocharacter& a, const Cocharacter& b) { return lex_less(a.coords, b.coords); }
};

struct WeightEntry {
  Weight weight;
  int multiplicity = 1;
};

/// Weights with multiplicities, aggregated and sorted lexicographically.
class WeightMultiset {
 public:
  WeightMultiset() = default;
  explicit WeightMultiset(const std::vector<WeightEntry>& entries);

  const std::vector<WeightEntry>& entries() const { return entries_; }
  bool empty() const { return entries_.empty(); }
  int total() const;
  int multiplicity(const Weight& w) const;
  std::vector<Weight> support() const;
  /// Each weight repeated according to its multiplicity.
  std::vector<Weight> expanded() const;

  void add(const Weight& w, int multiplicity = 1);
  WeightMultiset negated() const;
  /// Image under a matrix acting on characters.
  WeightMultiset transformed(const IntMatrix& m) const;

  friend bool operator==(const WeightMultiset& a, const WeightMultiset& b);

 private:
  std::vector<WeightEntry> entries_;
};

struct GroupData {
  std::string name;
  int rank = 0;
  std::vector<IntMatrix> weyl_generators;
  WeightMultiset g_weights;
};

struct RepresentationData {
  WeightMultiset v_weights;
};

enum class SymmetryClass { Symmetric, WeaklySymmetric, NotWeaklySymmetric };

std::string to_string(SymmetryClass c);

struct Slices {
  WeightMultiset neg, zero, pos;
};

struct NumericInvariants {
  int dim_V_fixed = 0;
  int dim_G_fixed = 0;
  int d_lambda = 0;
  int r_lambda = 0;
};

Integer pairing(const Cocharacter& lambda, const Weight& alpha);

SymmetryClass symmetry_class(const RepresentationData& rep);

inline bool is_weakly_symmetric(const RepresentationData& rep) {
  return symmetry_class(rep) != SymmetryClass::NotWeaklySymmetric;
}

Slices slice_weights(const WeightMultiset& ws, const Cocharacter& lambda);

/// Throws InputError unless rep is weakly symmetric; throws InternalError if
/// the identity d_lambda + 2 r_lambda = dim V - dim G fails.
NumericInvariants numeric_invariants(const GroupData& group, const RepresentationData& rep,
                                     const Cocharacter& lambda);

/// Structural checks on group and representation data that do not need the
/// enumerated Weyl group. Returns warnings; throws InputError on violations.
std::vector<std::string> check_lattice_data(const GroupData& group, const RepresentationData& rep);

}  // namespace cohint
