#pragma once

#include <stdexcept>
#include <vector>

#include "zroot2/types.hpp"

namespace zroot2 {

// Closed rational interval [lo, hi]. Endpoints are exact, so interval
// arithmetic here incurs no rounding at all.
struct RatInterval {
  Rat lo;
  Rat hi;

  RatInterval() : lo(0), hi(0) {}
  RatInterval(Rat l, Rat h) : lo(std::move(l)), hi(std::move(h)) {
    if (lo > hi) throw std::logic_error("RatInterval: lo > hi");
  }

  Rat width() const { return hi - lo; }
  bool contains_zero() const { return sgn(lo) <= 0 && sgn(hi) >= 0; }

  RatInterval operator+(const RatInterval& o) const { return {lo + o.lo, hi + o.hi}; }

  // Scaling by an exact rational constant.
  RatInterval scaled(const Rat& c) const {
    if (sgn(c) >= 0) return {lo * c, hi * c};
    return {hi * c, lo * c};
  }

  // Enclosure of |t| for t in [lo, hi].
  RatInterval abs() const {
    if (sgn(lo) >= 0) return *this;
    if (sgn(hi) <= 0) return {-hi, -lo};
    Rat m = -lo;
    if (hi > m) m = hi;
    return {Rat(0), m};
  }
};

// Rational enclosure of 2^(1/n), refined by bisection on t^n - 2 starting
// from [1, 2]. Each refine() halves the width per step.
class Root2Enclosure {
 public:
  explicit Root2Enclosure(int degree) : degree_(degree), lo_(1), hi_(2), steps_(0) {
    if (degree < 2) throw std::invalid_argument("Root2Enclosure: degree must be >= 2");
  }

  void refine(unsigned long steps) {
    for (unsigned long s = 0; s < steps; ++s) {
      Rat mid = (lo_ + hi_) / 2;
      // mid is rational, 2^(1/n) is not, so mid^n == 2 cannot happen.
      if (pow_int(mid, degree_) < 2)
        lo_ = mid;
      else
        hi_ = mid;
    }
    steps_ += steps;
  }

  unsigned long steps() const { return steps_; }
  int degree() const { return degree_; }
  RatInterval interval() const { return {lo_, hi_}; }

  // Enclosure of sum(c_i * 2^(i/n)). Powers stay in [1, 2^i] > 0, so the
  // endpoint products below are monotone and exact.
  RatInterval evaluate(const std::vector<Int>& coeffs) const {
    RatInterval acc(Rat(0), Rat(0));
    Rat plo(1), phi(1);
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
      if (i > 0) {
        plo *= lo_;
        phi *= hi_;
      }
      if (coeffs[i] != 0) acc = acc + RatInterval(plo, phi).scaled(Rat(coeffs[i]));
    }
    return acc;
  }

 private:
  static Rat pow_int(const Rat& t, int n) {
    Rat r(1);
    for (int i = 0; i < n; ++i) r *= t;
    return r;
  }

  int degree_;
  Rat lo_, hi_;
  unsigned long steps_;
};

}  // namespace zroot2
