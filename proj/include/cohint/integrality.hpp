#pragma once

#include "cohint/arrangement.hpp"
#include "cohint/poly.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace cohint {

struct InductionKernel {
  Cocharacter source_rep;
  std::size_t target = 0;
  KernelForm form;
  int degree() const { return form.degree(); }
};

/// Numerator: V weights vanishing on the target flat that pair negatively with
/// mu.rep; denominator: the same for g weights.
InductionKernel kernel(const Stratum& mu, const Stratum& target);

/// Coset sum of w(f k) over W^target / (Stab(mu.rep) cap W^target). Throws
/// InputError if f is not invariant under that intersection.
Poly induct(const Stratification& st, const Poly& f, const Stratum& mu, const Stratum& target);

struct EpsilonCharacter {
  std::map<std::size_t, int> values;  // W_lambda member index -> +1 or -1
  int operator()(std::size_t w) const { return values.at(w); }
};

EpsilonCharacter epsilon(const Stratification& st, const Stratum& lambda, const Subgroup& w_lambda);

/// Nonzero linear forms spanning the annihilator of the flat.
std::vector<Weight> zero_set_forms(const Stratum& s);

/// Basis of a B-orthogonal complement of the zero-set span inside all linear forms.
std::vector<Poly> complement_forms(const Stratum& s, const RatMatrix& b);

/// Invariant part of the module generated by kernels from strictly smaller strata, in degree p.
GradedBasis j_graded(const Stratification& st, std::size_t lambda, int p);

struct BpsSpace {
  std::size_t stratum = 0;
  int max_degree = 0;                      // floor(dim V^lambda / 2)
  std::vector<GradedBasis> pieces;         // index = polynomial degree p
  std::vector<Eigen::Index> ambient_dims;  // dim Sym^p(U)^{W^lambda}
  std::vector<Eigen::Index> j_dims;
  std::map<std::size_t, std::vector<RatMatrix>> w_matrices;  // W_lambda member -> matrix per degree
  std::map<int, Eigen::Index> dt_table;    // shifted degree 2p - d_lambda -> dimension (nonzero only)
  long euler = 0;

  Eigen::Index total_dim() const;
  Eigen::Index dim_at(int p) const { return p >= 0 && p <= max_degree ? pieces[static_cast<std::size_t>(p)].dim() : 0; }
};

BpsSpace bps_space(const Stratification& st, std::size_t lambda, const RatMatrix& b);

/// Graded dimensions of the epsilon-isotypic part of P tensor Sym(flat dual).
std::vector<Rational> isotypic_series(const Stratification& st, const BpsSpace& bps, const EpsilonCharacter& eps,
                                      int cutoff);

/// Hilbert series of Sym(t*)^W up to q^cutoff.
std::vector<Rational> target_series(const WeylGroup& w, int cutoff);

/// Caches per-stratum results over one stratification.
class Analysis {
 public:
  explicit Analysis(Stratification st);
  Analysis(const GroupData& group, const RepresentationData& rep, std::size_t group_cap = kDefaultGroupCap);

  const Stratification& strat() const { return st_; }
  const WeylGroup& weyl() const { return *st_.weyl; }
  const RatMatrix& form() const { return form_; }
  const BpsSpace& bps(std::size_t stratum);
  const EpsilonCharacter& eps(std::size_t stratum);
  const std::vector<Rational>& isotypic(std::size_t stratum, int cutoff);
  /// max over strata of floor(dim V^lambda / 2) + 2.
  int default_max_degree() const;

 private:
  Stratification st_;
  RatMatrix form_;
  std::map<std::size_t, BpsSpace> bps_;
  std::map<std::size_t, EpsilonCharacter> eps_;
  std::map<std::size_t, std::vector<Rational>> iso_;
};

struct HilbertLine {
  int degree = 0;
  Rational target;
  Rational assembled;
  bool ok = false;
};

struct HilbertLedger {
  std::vector<HilbertLine> lines;
  bool pass = true;
};

HilbertLedger verify_hilbert(Analysis& a, int max_degree);

struct AssembledVector {
  std::size_t orbit_rep = 0;
  int bps_degree = 0;   // a
  int extra_degree = 0; // b
  Poly source;
  Poly image;
};

/// Epsilon-projected basis of each summand in target degree p, pushed to the top stratum.
std::vector<AssembledVector> assemble_degree(Analysis& a, int p);

struct IsomorphismLine {
  int degree = 0;
  Eigen::Index target_dim = 0;
  Eigen::Index assembled = 0;
  Eigen::Index rank = 0;
  bool ok = false;
};

struct IsomorphismLedger {
  std::vector<IsomorphismLine> lines;
  bool pass = true;
};

IsomorphismLedger verify_isomorphism(Analysis& a, int max_degree);

struct AssociativitySample {
  std::size_t s1 = 0, s2 = 0, s3 = 0;
  Cocharacter aligned;
  Poly f;
  Poly direct;
  Poly composed;
  bool ok = false;
};

struct AssociativityLedger {
  std::vector<AssociativitySample> samples;
  bool pass = true;
};

/// Every chain s1 <= s2 <= s3 (up to max_chains), each with invariant test
/// polynomials of degree 0..max_poly_degree.
AssociativityLedger verify_associativity(Analysis& a, std::size_t max_chains = 64, int max_poly_degree = 3);

HilbertLedger verify_hilbert(const GroupData& group, const RepresentationData& rep, int max_degree);
IsomorphismLedger verify_isomorphism(const GroupData& group, const RepresentationData& rep, int max_degree);

}  // namespace cohint
