#pragma once

#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

#include "zroot2/ring.hpp"
#include "zroot2/rng.hpp"

namespace zroot2 {

// Finitely supported sequence over Z[2^(1/n)] -- the testable dense model of
// the group A of bounded sequences. Finite support makes every element
// bounded (and summable), so no boundedness side conditions appear anywhere.
//
// Trailing zeros are trimmed on construction, so equality of sequences is
// plain list equality.
class FinSeq {
 public:
  explicit FinSeq(RingParams params) : params_(params) {}

  FinSeq(RingParams params, std::vector<RingElem> terms) : params_(params), terms_(std::move(terms)) {
    for (const RingElem& t : terms_)
      if (t.degree() != params_.degree)
        throw std::invalid_argument("FinSeq: term degree mismatch");
    trim();
  }

  static FinSeq zero(RingParams params) { return FinSeq(params); }

  // value * e_k: the sequence supported at index k only.
  static FinSeq basis(RingParams params, std::size_t k, RingElem value) {
    std::vector<RingElem> terms(k + 1, RingElem::zero(params));
    terms[k] = std::move(value);
    return FinSeq(params, std::move(terms));
  }

  RingParams params() const { return params_; }
  int degree() const { return params_.degree; }

  // One past the last nonzero index; 0 for the zero sequence.
  std::size_t support() const { return terms_.size(); }
  const std::vector<RingElem>& terms() const { return terms_; }

  // Term at any index; zero beyond the stored support.
  RingElem term(std::size_t k) const {
    if (k < terms_.size()) return terms_[k];
    return RingElem::zero(params_);
  }

  bool is_zero() const { return terms_.empty(); }

  friend bool operator==(const FinSeq&, const FinSeq&) = default;

  friend FinSeq operator+(const FinSeq& a, const FinSeq& b) {
    if (a.params_ != b.params_) throw std::invalid_argument("sequence add: degree mismatch");
    const std::size_t n = a.support() > b.support() ? a.support() : b.support();
    std::vector<RingElem> terms;
    terms.reserve(n);
    for (std::size_t k = 0; k < n; ++k) terms.push_back(a.term(k) + b.term(k));
    return FinSeq(a.params_, std::move(terms));
  }

  friend FinSeq operator-(const FinSeq& a) {
    std::vector<RingElem> terms;
    terms.reserve(a.support());
    for (const RingElem& t : a.terms_) terms.push_back(-t);
    return FinSeq(a.params_, std::move(terms));
  }

  friend FinSeq operator-(const FinSeq& a, const FinSeq& b) { return a + (-b); }

 private:
  void trim() {
    while (!terms_.empty() && terms_.back().is_zero()) terms_.pop_back();
  }

  RingParams params_;
  std::vector<RingElem> terms_;
};

// (a, b) |-> (b, a_0, a_1, ...): the embedding realizing A + Z[2^(1/n)] ~ A.
inline FinSeq shift_embed(const RingElem& b, const FinSeq& a) {
  if (b.degree() != a.degree()) throw std::invalid_argument("shift_embed: degree mismatch");
  std::vector<RingElem> terms;
  terms.reserve(a.support() + 1);
  terms.push_back(b);
  for (const RingElem& t : a.terms()) terms.push_back(t);
  return FinSeq(a.params(), std::move(terms));
}

// Exact inverse of shift_embed: returns (a_0, tail).
inline std::pair<RingElem, FinSeq> shift_extract(const FinSeq& a) {
  std::vector<RingElem> tail;
  if (a.support() > 1) tail.assign(a.terms().begin() + 1, a.terms().end());
  return {a.term(0), FinSeq(a.params(), std::move(tail))};
}

// (a, b) |-> (a_0, b_0, a_1, b_1, ...): the A + A ~ A isomorphism.
inline FinSeq interleave(const FinSeq& a, const FinSeq& b) {
  if (a.params() != b.params()) throw std::invalid_argument("interleave: degree mismatch");
  const std::size_t n = a.support() > b.support() ? a.support() : b.support();
  std::vector<RingElem> terms;
  terms.reserve(2 * n);
  for (std::size_t k = 0; k < n; ++k) {
    terms.push_back(a.term(k));
    terms.push_back(b.term(k));
  }
  return FinSeq(a.params(), std::move(terms));
}

inline std::pair<FinSeq, FinSeq> deinterleave(const FinSeq& s) {
  std::vector<RingElem> a, b;
  for (std::size_t k = 0; k < s.support(); ++k) {
    if (k % 2 == 0)
      a.push_back(s.term(k));
    else
      b.push_back(s.term(k));
  }
  return {FinSeq(s.params(), std::move(a)), FinSeq(s.params(), std::move(b))};
}

// theta(b) = (b_0*a_0, (b_0+b_1)*a_1, (b_0+b_1+b_2)*a_2, ...): the partial-sum
// scaling of a fixed sequence a. Beyond the support of a every term is a
// multiple of a_k = 0, so finite support is preserved.
inline FinSeq theta_los(const FinSeq& a, const FinSeq& b) {
  if (a.params() != b.params()) throw std::invalid_argument("theta: degree mismatch");
  RingElem prefix = RingElem::zero(a.params());
  std::vector<RingElem> terms;
  terms.reserve(a.support());
  for (std::size_t k = 0; k < a.support(); ++k) {
    prefix += b.term(k);
    terms.push_back(prefix * a.term(k));
  }
  return FinSeq(a.params(), std::move(terms));
}

inline RingElem random_ring_elem(RingParams params, long coeff_bound, Rng& rng) {
  std::vector<Int> v(params.degree);
  for (Int& c : v) c = rng.uniform(-coeff_bound, coeff_bound);
  return RingElem(params, std::move(v));
}

inline FinSeq random_finseq(RingParams params, std::size_t max_support, long coeff_bound, Rng& rng) {
  const std::size_t n = static_cast<std::size_t>(rng.uniform(0, static_cast<long>(max_support)));
  std::vector<RingElem> terms;
  terms.reserve(n);
  for (std::size_t k = 0; k < n; ++k) terms.push_back(random_ring_elem(params, coeff_bound, rng));
  return FinSeq(params, std::move(terms));
}

}  // namespace zroot2
