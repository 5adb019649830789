#pragma once

#include "cohint/lattice.hpp"

#include <cstddef>
#include <vector>

namespace cohint {

inline constexpr std::size_t kDefaultGroupCap = 10080;

struct WeylElement {
  IntMatrix matrix;  // action on characters
  IntMatrix cochar;  // inverse transpose, action on cocharacters
  std::size_t index = 0;
};

class WeylGroup {
 public:
  /// Breadth-first closure of the generators; elements are ordered
  /// lexicographically by matrix entries. Throws InputError past the cap.
  static WeylGroup enumerate(int rank, const std::vector<IntMatrix>& generators,
                             std::size_t cap = kDefaultGroupCap);

  int rank() const { return rank_; }
  std::size_t order() const { return elements_.size(); }
  const std::vector<WeylElement>& elements() const { return elements_; }
  const WeylElement& operator[](std::size_t i) const { return elements_[i]; }
  std::size_t identity() const { return identity_; }
  std::size_t multiply(std::size_t a, std::size_t b) const { return table_[a * order() + b]; }
  std::size_t inverse(std::size_t a) const { return inverse_[a]; }

 private:
  int rank_ = 0;
  std::vector<WeylElement> elements_;
  std::vector<std::size_t> table_;
  std::vector<std::size_t> inverse_;
  std::size_t identity_ = 0;
};

/// Subset of an enumerated group, stored as sorted element indices.
struct Subgroup {
  const WeylGroup* parent = nullptr;
  std::vector<std::size_t> members;

  std::size_t order() const { return members.size(); }
  bool contains(std::size_t i) const;
  bool is_closed() const;
};

Subgroup whole_group(const WeylGroup& w);
Subgroup intersect(const Subgroup& a, const Subgroup& b);

Cocharacter cochar_action(const WeylElement& w, const Cocharacter& lambda);
Weight char_action(const WeylElement& w, const Weight& alpha);

Subgroup point_stabilizer(const WeylGroup& w, const Cocharacter& lambda);

/// Elements mapping each of the given weight sets onto itself.
Subgroup set_stabilizer(const WeylGroup& w, const std::vector<Weight>& zero_v, const std::vector<Weight>& zero_g);

/// One representative of each left coset kH inside K: the identity for H
/// itself, the least index for the others.
std::vector<std::size_t> coset_representatives(const Subgroup& h, const Subgroup& k);

/// (1/|W|) sum of w^T w over the group, acting on characters.
RatMatrix averaged_form(const WeylGroup& w);

/// Coefficients c_0..c_cutoff of det(I - q m) as a polynomial in q.
std::vector<Rational> det_one_minus_qm(const RatMatrix& m);

/// Power series 1/det(I - q m) up to q^cutoff.
std::vector<Rational> inverse_det_series(const RatMatrix& m, int cutoff);

struct WeightedMatrix {
  RatMatrix matrix;
  Rational weight;
};

/// c_p with sum_p c_p q^p = (1/N) sum_i s_i / det(I - q M_i).
std::vector<Rational> molien_coefficients(const std::vector<WeightedMatrix>& elements, int cutoff);

}  // namespace cohint
