#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "zroot2/interval.hpp"
#include "zroot2/matrix.hpp"
#include "zroot2/types.hpp"

namespace zroot2 {

// The ring Z[2^(1/n)] for a fixed degree n >= 2; n = 2 gives Z[sqrt(2)].
struct RingParams {
  int degree;

  explicit RingParams(int n) : degree(n) {
    if (n < 2) throw std::invalid_argument("RingParams: degree must be >= 2, got " + std::to_string(n));
  }

  friend bool operator==(const RingParams&, const RingParams&) = default;
};

// Element of Z[2^(1/n)] as the coefficient vector (c_0, ..., c_{n-1}) of
// sum(c_i * 2^(i/n)). The powers 2^(i/n), 0 <= i < n, are linearly
// independent over Q, so the representation is unique and equality is
// coefficient equality.
class RingElem {
 public:
  RingElem() = default;  // empty placeholder, degree 0

  RingElem(RingParams params, std::vector<Int> coeffs) : coeffs_(std::move(coeffs)) {
    if (static_cast<int>(coeffs_.size()) != params.degree)
      throw std::invalid_argument("RingElem: expected " + std::to_string(params.degree) +
                                  " coefficients, got " + std::to_string(coeffs_.size()));
  }

  static RingElem zero(RingParams params) {
    return RingElem(params, std::vector<Int>(params.degree, Int(0)));
  }
  static RingElem one(RingParams params) { return integer(params, Int(1)); }
  static RingElem integer(RingParams params, Int c) {
    std::vector<Int> v(params.degree, Int(0));
    v[0] = std::move(c);
    return RingElem(params, std::move(v));
  }
  // The generator 2^(1/n).
  static RingElem root(RingParams params) {
    std::vector<Int> v(params.degree, Int(0));
    v[1] = 1;
    return RingElem(params, std::move(v));
  }

  int degree() const { return static_cast<int>(coeffs_.size()); }
  RingParams params() const { return RingParams(degree()); }
  const std::vector<Int>& coeffs() const { return coeffs_; }

  bool is_zero() const {
    for (const Int& c : coeffs_)
      if (c != 0) return false;
    return true;
  }

  // True iff the element lies in Z, i.e. c_i = 0 for all i >= 1.
  bool is_rational_integer() const {
    for (std::size_t i = 1; i < coeffs_.size(); ++i)
      if (coeffs_[i] != 0) return false;
    return true;
  }

  friend bool operator==(const RingElem&, const RingElem&) = default;

 private:
  std::vector<Int> coeffs_;
};

namespace detail {
inline void check_same_ring(const RingElem& x, const RingElem& y, const char* op) {
  if (x.degree() != y.degree())
    throw std::invalid_argument(std::string(op) + ": degree mismatch (" +
                                std::to_string(x.degree()) + " vs " + std::to_string(y.degree()) + ")");
}
}  // namespace detail

inline RingElem operator+(const RingElem& x, const RingElem& y) {
  detail::check_same_ring(x, y, "ring add");
  std::vector<Int> v(x.coeffs());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] += y.coeffs()[i];
  return RingElem(x.params(), std::move(v));
}

inline RingElem operator-(const RingElem& x) {
  std::vector<Int> v(x.coeffs());
  for (Int& c : v) c = -c;
  return RingElem(x.params(), std::move(v));
}

inline RingElem operator-(const RingElem& x, const RingElem& y) { return x + (-y); }

// Product reduced via (2^(1/n))^n = 2: every overflow power folds back with
// an extra factor of 2.
inline RingElem operator*(const RingElem& x, const RingElem& y) {
  detail::check_same_ring(x, y, "ring mul");
  const int n = x.degree();
  std::vector<Int> v(n, Int(0));
  for (int i = 0; i < n; ++i) {
    const Int& xi = x.coeffs()[i];
    if (xi == 0) continue;
    for (int j = 0; j < n; ++j) {
      const Int& yj = y.coeffs()[j];
      if (yj == 0) continue;
      int k = i + j;
      if (k < n)
        v[k] += xi * yj;
      else
        v[k - n] += 2 * xi * yj;
    }
  }
  return RingElem(RingParams(n), std::move(v));
}

inline RingElem& operator+=(RingElem& x, const RingElem& y) { return x = x + y; }
inline RingElem& operator*=(RingElem& x, const RingElem& y) { return x = x * y; }

// Multiplication-by-x in the power basis: column j holds the coefficients of
// x * 2^(j/n). An injective ring homomorphism into n x n integer matrices.
inline IntMatrix regular_rep(const RingElem& x) {
  const int n = x.degree();
  IntMatrix m(n, n);
  for (int j = 0; j < n; ++j)
    for (int r = 0; r < n; ++r) {
      // coefficient r of x * 2^(j/n)
      if (r >= j)
        m.at(r, j) = x.coeffs()[r - j];
      else
        m.at(r, j) = 2 * x.coeffs()[n + r - j];
    }
  return m;
}

// Field norm up to the standard sign convention: det of the regular
// representation. Multiplicative, and zero iff x = 0.
inline Int norm(const RingElem& x) { return determinant(regular_rep(x)); }

// Largest k with x divisible by 2^k (coefficientwise, i.e. by the rational
// integer 2); nullopt encodes +infinity for x = 0.
inline std::optional<unsigned long> two_adic_valuation(const RingElem& x) {
  std::optional<unsigned long> best;
  for (const Int& c : x.coeffs()) {
    auto v = two_adic_valuation(c);
    if (!v) continue;
    if (!best || *v < *best) best = v;
  }
  return best;
}

// Enclosure of the real embedding sum(c_i * 2^(i/n)), refined to at least
// the given bisection depth for the 2^(1/n) interval.
inline RatInterval real_enclosure(const RingElem& x, unsigned long steps = 32) {
  Root2Enclosure enc(x.degree());
  enc.refine(steps);
  return enc.evaluate(x.coeffs());
}

// Rational upper bound for |x| in the real embedding, rounded outward.
inline Rat abs_upper_bound(const RingElem& x, unsigned long steps = 32) {
  return real_enclosure(x, steps).abs().hi;
}

// Exact trichotomy of |real embedding of x| against a rational bound >= 0.
//
// Equality is decided algebraically first: |x| equals a rational iff x is a
// rational integer with matching absolute value (otherwise the value is
// irrational). The remaining cases are settled by refining the interval
// enclosure until it excludes the bound; x != +-bound guarantees a nonzero
// algebraic separation, hence termination.
inline std::strong_ordering compare_abs(const RingElem& x, const Rat& bound) {
  if (sgn(bound) < 0) throw std::invalid_argument("compare_abs: bound must be >= 0");
  if (x.is_zero()) return sgn(bound) == 0 ? std::strong_ordering::equal : std::strong_ordering::less;
  if (sgn(bound) == 0) return std::strong_ordering::greater;
  if (x.is_rational_integer()) {
    Rat ax(abs(x.coeffs()[0]));
    if (ax < bound) return std::strong_ordering::less;
    if (ax > bound) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }
  Root2Enclosure enc(x.degree());
  unsigned long steps = 8;
  constexpr int kMaxRounds = 64;
  for (int round = 0; round < kMaxRounds; ++round) {
    enc.refine(steps);
    steps = enc.steps();  // double the total depth each round
    RatInterval a = enc.evaluate(x.coeffs()).abs();
    if (a.hi < bound) return std::strong_ordering::less;
    if (a.lo > bound) return std::strong_ordering::greater;
  }
  throw std::runtime_error("compare_abs: enclosure refinement did not separate the values");
}

}  // namespace zroot2
