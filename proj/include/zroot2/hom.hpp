#pragma once

#include <cstddef>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "zroot2/matrix.hpp"
#include "zroot2/ring.hpp"
#include "zroot2/rng.hpp"
#include "zroot2/seqgroup.hpp"
#include "zroot2/small_elements.hpp"

namespace zroot2 {

// Additive-group endomorphism of Z[2^(1/n)]: an n x n integer matrix acting
// on coefficient vectors. Column j is the image of the basis element
// 2^(j/n). Module homomorphisms (multiplications by a ring element) are
// exactly the matrices commuting with regular_rep(2^(1/n)).
class GroupHom {
 public:
  GroupHom(RingParams params, IntMatrix m) : matrix_(std::move(m)) {
    if (matrix_.rows() != static_cast<std::size_t>(params.degree) || !matrix_.is_square())
      throw std::invalid_argument("GroupHom: matrix must be degree x degree");
  }

  static GroupHom identity(RingParams params) {
    return GroupHom(params, IntMatrix::identity(params.degree));
  }
  static GroupHom multiplication_by(const RingElem& x) {
    return GroupHom(x.params(), regular_rep(x));
  }
  static GroupHom zero(RingParams params) {
    return GroupHom(params, IntMatrix(params.degree, params.degree));
  }

  int degree() const { return static_cast<int>(matrix_.rows()); }
  RingParams params() const { return RingParams(degree()); }
  const IntMatrix& matrix() const { return matrix_; }

  friend bool operator==(const GroupHom&, const GroupHom&) = default;

  friend GroupHom operator+(const GroupHom& g, const GroupHom& h) {
    return GroupHom(g.params(), g.matrix_ + h.matrix_);
  }
  // Composition g after h.
  friend GroupHom operator*(const GroupHom& g, const GroupHom& h) {
    return GroupHom(g.params(), g.matrix_ * h.matrix_);
  }

 private:
  IntMatrix matrix_;
};

inline RingElem apply_hom(const GroupHom& h, const RingElem& x) {
  if (h.degree() != x.degree()) throw std::invalid_argument("apply_hom: degree mismatch");
  const int n = x.degree();
  std::vector<Int> v(n, Int(0));
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) v[r] += h.matrix().at(r, c) * x.coeffs()[c];
  return RingElem(x.params(), std::move(v));
}

// True iff h commutes with multiplication by 2^(1/n) (equivalently with
// every regular representation), i.e. h is itself multiplication by the ring
// element given by its first column.
inline bool is_module_hom(const GroupHom& h) {
  const IntMatrix s = regular_rep(RingElem::root(h.params()));
  return h.matrix() * s == s * h.matrix();
}

// Witness for the unbounded-blowup property of non-module homomorphisms:
// the least k with |u^k| < epsilon and |theta(u^k)| > big_n, where
// u = 2^(1/n) - 1. Both comparisons are exact.
struct EpsilonWitness {
  long k;
  RingElem x;
  RingElem image;
};

inline EpsilonWitness epsilon_witness(const GroupHom& theta, const Rat& epsilon, const Rat& big_n) {
  if (sgn(epsilon) <= 0) throw std::invalid_argument("epsilon_witness: epsilon must be > 0");
  if (sgn(big_n) <= 0) throw std::invalid_argument("epsilon_witness: N must be > 0");
  if (is_module_hom(theta))
    throw std::invalid_argument("epsilon_witness: theta is a module homomorphism; no witness exists");

  SmallElementStream stream(theta.params());
  while (stream.k() <= kSmallElementCap) {
    const RingElem& x = stream.value();
    if (compare_abs(x, epsilon) == std::strong_ordering::less) {
      RingElem image = apply_hom(theta, x);
      if (compare_abs(image, big_n) == std::strong_ordering::greater) {
        // Post-verify the exact comparisons before handing the witness out.
        if (compare_abs(x, epsilon) != std::strong_ordering::less ||
            compare_abs(image, big_n) != std::strong_ordering::greater)
          throw std::runtime_error("epsilon_witness: post-verification failed (internal error)");
        return {stream.k(), x, std::move(image)};
      }
    }
    stream.advance();
  }
  throw std::runtime_error(
      "epsilon_witness: iteration cap " + std::to_string(kSmallElementCap) +
      " reached without a witness (internal error; growth for degree > 2 is heuristic)");
}

// a |-> sum over entries of phi_i(a_i), for a finite list of
// (index, endomorphism) pairs with strictly increasing indices.
class Functional {
 public:
  using Entry = std::pair<std::size_t, GroupHom>;

  Functional(RingParams params, std::vector<Entry> entries)
      : params_(params), entries_(std::move(entries)) {
    std::size_t prev = 0;
    bool first = true;
    for (const Entry& e : entries_) {
      if (e.second.degree() != params_.degree)
        throw std::invalid_argument("Functional: entry degree mismatch");
      if (!first && e.first <= prev)
        throw std::invalid_argument("Functional: indices must be strictly increasing");
      prev = e.first;
      first = false;
    }
  }

  static Functional empty(RingParams params) { return Functional(params, {}); }

  RingParams params() const { return params_; }
  const std::vector<Entry>& entries() const { return entries_; }

 private:
  RingParams params_;
  std::vector<Entry> entries_;
};

inline RingElem eval_functional(const Functional& f, const FinSeq& a) {
  if (f.params() != a.params()) throw std::invalid_argument("eval_functional: degree mismatch");
  RingElem acc = RingElem::zero(f.params());
  for (const auto& [index, hom] : f.entries()) acc += apply_hom(hom, a.term(index));
  return acc;
}

// Row-finite matrix of endomorphisms: finitely many nonzero entries overall
// (hence per row), acting on finitely supported sequences.
class RowFiniteMatrix {
 public:
  using Key = std::pair<std::size_t, std::size_t>;  // (row, col)

  explicit RowFiniteMatrix(RingParams params) : params_(params) {}

  RingParams params() const { return params_; }
  const std::map<Key, GroupHom>& entries() const { return entries_; }

  void set(std::size_t row, std::size_t col, GroupHom h) {
    if (h.degree() != params_.degree)
      throw std::invalid_argument("RowFiniteMatrix: entry degree mismatch");
    if (h.matrix().is_zero())
      entries_.erase({row, col});
    else
      entries_.insert_or_assign({row, col}, std::move(h));
  }

 private:
  RingParams params_;
  std::map<Key, GroupHom> entries_;
};

inline FinSeq apply_row_finite(const RowFiniteMatrix& m, const FinSeq& a) {
  if (m.params() != a.params()) throw std::invalid_argument("apply_row_finite: degree mismatch");
  std::size_t max_row = 0;
  for (const auto& [key, hom] : m.entries())
    if (key.first + 1 > max_row) max_row = key.first + 1;
  std::vector<RingElem> out(max_row, RingElem::zero(m.params()));
  for (const auto& [key, hom] : m.entries()) {
    const RingElem term = a.term(key.second);
    if (!term.is_zero()) out[key.first] += apply_hom(hom, term);
  }
  return FinSeq(m.params(), std::move(out));
}

// (g . h)[m][n] = sum_k g[m][k] o h[k][n]; finite since both are.
inline RowFiniteMatrix compose_row_finite(const RowFiniteMatrix& g, const RowFiniteMatrix& h) {
  if (g.params() != h.params()) throw std::invalid_argument("compose_row_finite: degree mismatch");
  std::map<RowFiniteMatrix::Key, IntMatrix> acc;
  for (const auto& [gk, ghom] : g.entries())
    for (const auto& [hk, hhom] : h.entries()) {
      if (gk.second != hk.first) continue;
      const RowFiniteMatrix::Key key{gk.first, hk.second};
      auto it = acc.find(key);
      if (it == acc.end())
        acc.emplace(key, ghom.matrix() * hhom.matrix());
      else
        it->second = it->second + ghom.matrix() * hhom.matrix();
    }
  RowFiniteMatrix out(g.params());
  for (auto& [key, m] : acc) out.set(key.first, key.second, GroupHom(g.params(), std::move(m)));
  return out;
}

// One stage of the recursive unboundedness construction: a diagonal entry
// beta[row][col] that is not a module homomorphism, plus the finitely many
// earlier-column entries beta[row][col_l] in the same row. Entries in later
// columns are zero by construction, which the shape of this type enforces.
struct WitnessStage {
  std::size_t row;
  std::size_t col;
  GroupHom diagonal;
  std::vector<GroupHom> priors;  // priors[l] acts on the stage-l witness, l < this stage
};

class WitnessInstance {
 public:
  WitnessInstance(RingParams params, std::vector<WitnessStage> stages, std::vector<Rat> targets)
      : params_(params), stages_(std::move(stages)), targets_(std::move(targets)) {
    if (targets_.size() != stages_.size())
      throw std::invalid_argument("WitnessInstance: one target per stage required");
    for (std::size_t k = 0; k < stages_.size(); ++k) {
      const WitnessStage& s = stages_[k];
      if (s.diagonal.degree() != params_.degree)
        throw std::invalid_argument("WitnessInstance: diagonal degree mismatch");
      if (is_module_hom(s.diagonal))
        throw std::invalid_argument("WitnessInstance: diagonal at stage " + std::to_string(k) +
                                    " is a module homomorphism");
      if (s.priors.size() != k)
        throw std::invalid_argument("WitnessInstance: stage " + std::to_string(k) + " needs " +
                                    std::to_string(k) + " prior entries");
      for (const GroupHom& p : s.priors)
        if (p.degree() != params_.degree)
          throw std::invalid_argument("WitnessInstance: prior degree mismatch");
      if (k > 0) {
        if (s.row <= stages_[k - 1].row || s.col <= stages_[k - 1].col)
          throw std::invalid_argument("WitnessInstance: rows and cols must be strictly increasing");
        if (targets_[k] <= targets_[k - 1])
          throw std::invalid_argument("WitnessInstance: targets must be strictly increasing");
      }
      if (sgn(targets_[k]) <= 0)
        throw std::invalid_argument("WitnessInstance: targets must be positive");
    }
  }

  RingParams params() const { return params_; }
  const std::vector<WitnessStage>& stages() const { return stages_; }
  const std::vector<Rat>& targets() const { return targets_; }

 private:
  RingParams params_;
  std::vector<WitnessStage> stages_;
  std::vector<Rat> targets_;
};

// Recursively chooses x_k with |x_k| < 1 while each partial row sum
// beta[row_k][col_k](x_k) + sum_{l<k} beta[row_k][col_l](x_l) exceeds
// targets[k]. Stage k only has to outgrow a rational upper bound for the
// prior terms, which the interval enclosure provides; looseness in that
// bound only makes the witness stronger.
inline std::vector<RingElem> unboundedness_witness(const WitnessInstance& w) {
  std::vector<RingElem> xs;
  xs.reserve(w.stages().size());
  const Rat one(1);
  for (std::size_t k = 0; k < w.stages().size(); ++k) {
    const WitnessStage& stage = w.stages()[k];
    RingElem prior_sum = RingElem::zero(w.params());
    for (std::size_t l = 0; l < k; ++l) prior_sum += apply_hom(stage.priors[l], xs[l]);
    Rat needed = w.targets()[k];
    if (!prior_sum.is_zero()) needed += abs_upper_bound(prior_sum);
    EpsilonWitness ew = epsilon_witness(stage.diagonal, one, needed);
    // Exact post-check of the row-sum growth this stage promises.
    RingElem row_sum = ew.image + prior_sum;
    if (compare_abs(ew.x, one) != std::strong_ordering::less ||
        compare_abs(row_sum, w.targets()[k]) != std::strong_ordering::greater)
      throw std::runtime_error("unboundedness_witness: stage post-check failed (internal error)");
    xs.push_back(std::move(ew.x));
  }
  return xs;
}

inline GroupHom random_group_hom(RingParams params, long bound, Rng& rng) {
  IntMatrix m(params.degree, params.degree);
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) m.at(r, c) = rng.uniform(-bound, bound);
  return GroupHom(params, std::move(m));
}

inline GroupHom random_non_module_hom(RingParams params, long bound, Rng& rng) {
  for (int attempt = 0; attempt < 1000; ++attempt) {
    GroupHom h = random_group_hom(params, bound, rng);
    if (!is_module_hom(h)) return h;
  }
  throw std::runtime_error("random_non_module_hom: could not sample (internal error)");
}

inline RowFiniteMatrix random_row_finite(RingParams params, long bound, Rng& rng) {
  RowFiniteMatrix m(params);
  const long entries = rng.uniform(0, 6);
  for (long i = 0; i < entries; ++i)
    m.set(static_cast<std::size_t>(rng.uniform(0, 5)), static_cast<std::size_t>(rng.uniform(0, 5)),
          random_group_hom(params, bound, rng));
  return m;
}

}  // namespace zroot2
