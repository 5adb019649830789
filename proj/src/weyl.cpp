#include "cohint/weyl.hpp"

#include "cohint/linalg.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

namespace cohint {

namespace {

struct MatrixLess {
  bool operator()(const IntMatrix& a, const IntMatrix& b) const { return lex_less(a, b); }
};

}  // namespace

WeylGroup WeylGroup::enumerate(int rank, const std::vector<IntMatrix>& generators, std::size_t cap) {
  const IntMatrix id = IntMatrix::Identity(rank, rank);
  std::set<IntMatrix, MatrixLess> seen{id};
  std::deque<IntMatrix> queue{id};
  while (!queue.empty()) {
    const IntMatrix m = queue.front();
    queue.pop_front();
    for (const IntMatrix& g : generators) {
      IntMatrix p = g * m;
      if (seen.insert(p).second) {
        if (seen.size() > cap) throw InputError("group not finite within cap " + std::to_string(cap));
        queue.push_back(std::move(p));
      }
    }
  }

  WeylGroup w;
  w.rank_ = rank;
  std::map<IntMatrix, std::size_t, MatrixLess> position;
  for (const IntMatrix& m : seen) {
    position.emplace(m, w.elements_.size());
    w.elements_.push_back(WeylElement{m, IntMatrix(), w.elements_.size()});
  }
  const std::size_t n = w.elements_.size();
  w.identity_ = position.at(id);
  w.table_.resize(n * n);
  w.inverse_.resize(n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      const std::size_t c = position.at(w.elements_[a].matrix * w.elements_[b].matrix);
      w.table_[a * n + b] = c;
      if (c == w.identity_) w.inverse_[a] = b;
    }
  }
  for (std::size_t a = 0; a < n; ++a) w.elements_[a].cochar = w.elements_[w.inverse_[a]].matrix.transpose();
  return w;
}

bool Subgroup::contains(std::size_t i) const { return std::binary_search(members.begin(), members.end(), i); }

bool Subgroup::is_closed() const {
  if (!contains(parent->identity())) return false;
  for (std::size_t a : members)
    for (std::size_t b : members)
      if (!contains(parent->multiply(a, b))) return false;
  return true;
}

Subgroup whole_group(const WeylGroup& w) {
  Subgroup s{&w, {}};
  for (std::size_t i = 0; i < w.order(); ++i) s.members.push_back(i);
  return s;
}

Subgroup intersect(const Subgroup& a, const Subgroup& b) {
  Subgroup s{a.parent, {}};
  std::set_intersection(a.members.begin(), a.members.end(), b.members.begin(), b.members.end(),
                        std::back_inserter(s.members));
  return s;
}

Cocharacter cochar_action(const WeylElement& w, const Cocharacter& lambda) {
  return Cocharacter(IntVector(w.cochar * lambda.coords));
}

Weight char_action(const WeylElement& w, const Weight& alpha) { return Weight(IntVector(w.matrix * alpha.coords)); }

Subgroup point_stabilizer(const WeylGroup& w, const Cocharacter& lambda) {
  Subgroup s{&w, {}};
  for (const auto& e : w.elements())
    if (cochar_action(e, lambda) == lambda) s.members.push_back(e.index);
  return s;
}

Subgroup set_stabilizer(const WeylGroup& w, const std::vector<Weight>& zero_v, const std::vector<Weight>& zero_g) {
  const std::set<Weight> sv(zero_v.begin(), zero_v.end());
  const std::set<Weight> sg(zero_g.begin(), zero_g.end());
  auto preserves = [](const WeylElement& e, const std::set<Weight>& s) {
    return std::all_of(s.begin(), s.end(), [&](const Weight& a) { return s.count(char_action(e, a)) > 0; });
  };
  Subgroup out{&w, {}};
  for (const auto& e : w.elements())
    if (preserves(e, sv) && preserves(e, sg)) out.members.push_back(e.index);
  return out;
}

std::vector<std::size_t> coset_representatives(const Subgroup& h, const Subgroup& k) {
  for (std::size_t x : h.members)
    if (!k.contains(x)) throw InputError("coset_representatives: subgroup is not contained in the ambient group");
  const WeylGroup& w = *k.parent;
  std::vector<bool> covered(w.order(), false);
  std::vector<std::size_t> reps;
  std::vector<std::size_t> order{w.identity()};
  for (std::size_t g : k.members)
    if (g != w.identity()) order.push_back(g);
  for (std::size_t g : order) {
    if (covered[g]) continue;
    reps.push_back(g);
    for (std::size_t x : h.members) covered[w.multiply(g, x)] = true;
  }
  return reps;
}

RatMatrix averaged_form(const WeylGroup& w) {
  RatMatrix b = RatMatrix::Zero(w.rank(), w.rank());
  for (const auto& e : w.elements()) {
    const RatMatrix m = to_rational(e.matrix);
    b += m.transpose() * m;
  }
  return b / Rational(static_cast<long>(w.order()));
}

std::vector<Rational> det_one_minus_qm(const RatMatrix& m) {
  // Faddeev-LeVerrier: det(tI - M) = sum c_k t^(n-k), so det(I - qM) = sum c_k q^k.
  const Eigen::Index n = m.rows();
  std::vector<Rational> c(static_cast<std::size_t>(n + 1));
  c[0] = 1;
  RatMatrix mk = RatMatrix::Zero(n, n);
  for (Eigen::Index k = 1; k <= n; ++k) {
    mk = m * mk;
    for (Eigen::Index i = 0; i < n; ++i) mk(i, i) += c[static_cast<std::size_t>(k - 1)];
    const RatMatrix prod = m * mk;
    Rational tr = 0;
    for (Eigen::Index i = 0; i < n; ++i) tr += prod(i, i);
    c[static_cast<std::size_t>(k)] = -tr / Rational(static_cast<long>(k));
  }
  return c;
}

std::vector<Rational> inverse_det_series(const RatMatrix& m, int cutoff) {
  const std::vector<Rational> d = det_one_minus_qm(m);
  std::vector<Rational> s(static_cast<std::size_t>(cutoff + 1));
  for (int p = 0; p <= cutoff; ++p) {
    Rational acc = p == 0 ? Rational(1) : Rational(0);
    for (int k = 1; k <= p && k < static_cast<int>(d.size()); ++k)
      acc -= d[static_cast<std::size_t>(k)] * s[static_cast<std::size_t>(p - k)];
    s[static_cast<std::size_t>(p)] = acc;  // d[0] == 1
  }
  return s;
}

std::vector<Rational> molien_coefficients(const std::vector<WeightedMatrix>& elements, int cutoff) {
  std::vector<Rational> out(static_cast<std::size_t>(std::max(cutoff + 1, 0)));
  if (elements.empty() || cutoff < 0) return out;
  for (const auto& e : elements) {
    if (e.weight == 0) continue;
    const std::vector<Rational> s = inverse_det_series(e.matrix, cutoff);
    for (std::size_t p = 0; p < out.size(); ++p) out[p] += e.weight * s[p];
  }
  const Rational n(static_cast<long>(elements.size()));
  for (auto& c : out) c /= n;
  return out;
}

}  // namespace cohint
