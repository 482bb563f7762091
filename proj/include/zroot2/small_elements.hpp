#pragma once

#include <stdexcept>
#include <utility>

#include "zroot2/ring.hpp"

namespace zroot2 {

// Iteration guard for the small-element searches. The powers of
// 2^(1/n) - 1 shrink geometrically, so reaching this is a bug, not a
// data-dependent condition.
inline constexpr long kSmallElementCap = 1000000;

// The unit-like generator u = 2^(1/n) - 1, with 0 < u < 1.
inline RingElem root_minus_one(RingParams params) {
  return RingElem::root(params) - RingElem::one(params);
}

// (2^(1/n) - 1)^k, computed by exact ring multiplication. Nonzero for all k,
// and strictly decreasing in absolute value as k grows. k = 0 returns the
// unit 1 by convention.
inline RingElem small_element(RingParams params, long k) {
  if (k < 0) throw std::invalid_argument("small_element: k must be >= 0");
  RingElem result = RingElem::one(params);
  RingElem base = root_minus_one(params);
  long e = k;
  while (e > 0) {
    if (e & 1) result *= base;
    base *= base;
    e >>= 1;
  }
  return result;
}

// Emits (k, u^k) for k = 1, 2, 3, ... by one exact multiplication per step.
class SmallElementStream {
 public:
  explicit SmallElementStream(RingParams params)
      : k_(1), unit_(root_minus_one(params)), value_(unit_) {}

  long k() const { return k_; }
  const RingElem& value() const { return value_; }

  void advance() {
    value_ *= unit_;
    ++k_;
  }

 private:
  long k_;
  RingElem unit_;
  RingElem value_;
};

// Smallest k >= 1 with |u^k| < epsilon, together with u^k. Terminates for
// every epsilon > 0 since |u|^k -> 0.
inline std::pair<long, RingElem> find_small(RingParams params, const Rat& epsilon) {
  if (sgn(epsilon) <= 0) throw std::invalid_argument("find_small: epsilon must be > 0");
  SmallElementStream stream(params);
  while (stream.k() <= kSmallElementCap) {
    if (compare_abs(stream.value(), epsilon) == std::strong_ordering::less)
      return {stream.k(), stream.value()};
    stream.advance();
  }
  throw std::runtime_error("find_small: iteration cap reached (internal error)");
}

}  // namespace zroot2
