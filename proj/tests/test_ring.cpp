#include <catch2/catch_amalgamated.hpp>

#include "oracles.hpp"
#include "zroot2/ring.hpp"
#include "zroot2/rng.hpp"
#include "zroot2/seqgroup.hpp"

using namespace zroot2;

namespace {
RingElem elem2(long a, long b) { return RingElem(RingParams(2), {Int(a), Int(b)}); }
}  // namespace

TEST_CASE("ring parameters require degree >= 2") {
  CHECK_THROWS_AS(RingParams(1), std::invalid_argument);
  CHECK_THROWS_AS(RingParams(0), std::invalid_argument);
  CHECK_NOTHROW(RingParams(2));
}

TEST_CASE("coefficient vector length is pinned to the degree") {
  CHECK_THROWS_AS(RingElem(RingParams(2), {Int(1)}), std::invalid_argument);
  CHECK_THROWS_AS(RingElem(RingParams(3), {Int(1), Int(2)}), std::invalid_argument);
}

TEST_CASE("worked products in Z[sqrt 2]") {
  RingElem p = elem2(1, 1) * elem2(1, -1);  // (1+sqrt2)(1-sqrt2)
  CHECK(p == elem2(-1, 0));
  CHECK(p == oracles::poly_expansion_mul(elem2(1, 1), elem2(1, -1)));

  RingElem q = elem2(3, -2) * elem2(3, 2);  // (3-2sqrt2)(3+2sqrt2)
  CHECK(q == elem2(1, 0));
  CHECK(q == oracles::poly_expansion_mul(elem2(3, -2), elem2(3, 2)));
}

TEST_CASE("additive identity and inverses") {
  Rng rng(1);
  RingParams params(2);
  for (int t = 0; t < 50; ++t) {
    RingElem x = random_ring_elem(params, 1000, rng);
    CHECK(x + RingElem::zero(params) == x);
    CHECK(x + (-x) == RingElem::zero(params));
  }
}

TEST_CASE("arithmetic rejects mixed degrees") {
  RingElem x = elem2(1, 2);
  RingElem y(RingParams(3), {Int(1), Int(0), Int(0)});
  CHECK_THROWS_AS(x + y, std::invalid_argument);
  CHECK_THROWS_AS(x * y, std::invalid_argument);
}

TEST_CASE("norm matches the closed forms and worked values") {
  CHECK(norm(elem2(3, -2)) == 1);
  CHECK(norm(RingElem::zero(RingParams(2))) == 0);
  CHECK(norm(RingElem::root(RingParams(2))) == -2);

  Rng rng(2);
  for (int t = 0; t < 200; ++t) {
    RingElem x = random_ring_elem(RingParams(2), 200, rng);
    CHECK(norm(x) == oracles::norm_degree2(x));
    RingElem y = random_ring_elem(RingParams(3), 50, rng);
    CHECK(norm(y) == oracles::norm_degree3(y));
  }
}

TEST_CASE("norm is multiplicative and vanishes only at zero") {
  for (int degree = 2; degree <= 5; ++degree) {
    Rng rng(3 + degree);
    RingParams params(degree);
    for (int t = 0; t < 200; ++t) {
      RingElem x = random_ring_elem(params, 50, rng);
      RingElem y = random_ring_elem(params, 50, rng);
      CHECK(norm(x * y) == norm(x) * norm(y));
      CHECK((norm(x) == 0) == x.is_zero());
    }
  }
}

TEST_CASE("regular representation worked values") {
  IntMatrix s = regular_rep(RingElem::root(RingParams(2)));
  CHECK(s.at(0, 0) == 0);
  CHECK(s.at(0, 1) == 2);
  CHECK(s.at(1, 0) == 1);
  CHECK(s.at(1, 1) == 0);
  CHECK(regular_rep(RingElem::one(RingParams(4))) == IntMatrix::identity(4));
}

TEST_CASE("regular representation is a ring homomorphism") {
  for (int degree = 2; degree <= 5; ++degree) {
    Rng rng(10 + degree);
    RingParams params(degree);
    for (int t = 0; t < 100; ++t) {
      RingElem x = random_ring_elem(params, 50, rng);
      RingElem y = random_ring_elem(params, 50, rng);
      CHECK(regular_rep(x + y) == regular_rep(x) + regular_rep(y));
      CHECK(regular_rep(x * y) == regular_rep(x) * regular_rep(y));
    }
  }
}

TEST_CASE("ring axioms hold exactly on random triples") {
  for (int degree : {2, 3, 5}) {
    Rng rng(20 + degree);
    RingParams params(degree);
    for (int t = 0; t < 100; ++t) {
      RingElem x = random_ring_elem(params, 100, rng);
      RingElem y = random_ring_elem(params, 100, rng);
      RingElem z = random_ring_elem(params, 100, rng);
      CHECK((x + y) + z == x + (y + z));
      CHECK(x + y == y + x);
      CHECK((x * y) * z == x * (y * z));
      CHECK(x * y == y * x);
      CHECK(x * (y + z) == x * y + x * z);
    }
  }
}

TEST_CASE("compare_abs worked values") {
  CHECK(compare_abs(elem2(17, -12), Rat(1, 10)) == std::strong_ordering::less);
  CHECK(compare_abs(RingElem::zero(RingParams(2)), Rat(0)) == std::strong_ordering::equal);
  CHECK(compare_abs(elem2(-1, 1), Rat(1, 2)) == std::strong_ordering::less);
  CHECK(compare_abs(elem2(-1, 1), Rat(2, 5)) == std::strong_ordering::greater);
}

TEST_CASE("compare_abs edge cases and errors") {
  CHECK(compare_abs(elem2(0, 1), Rat(0)) == std::strong_ordering::greater);
  CHECK(compare_abs(RingElem::zero(RingParams(2)), Rat(5)) == std::strong_ordering::less);
  CHECK(compare_abs(elem2(-7, 0), Rat(7)) == std::strong_ordering::equal);
  CHECK_THROWS_AS(compare_abs(elem2(1, 0), Rat(-1)), std::invalid_argument);
}

TEST_CASE("compare_abs agrees with the long-double oracle at safe margins") {
  Rng rng(31);
  int decided = 0;
  for (int t = 0; t < 1000; ++t) {
    const int degree = static_cast<int>(rng.uniform(2, 5));
    RingElem x = random_ring_elem(RingParams(degree), 1000, rng);
    Rat bound(rng.uniform(0, 20000), rng.uniform(1, 1000));
    bound.canonicalize();
    const long double value = std::fabs(oracles::real_value(x));
    const long double fb = static_cast<long double>(bound.get_d());
    if (std::fabs(value - fb) <= 1e-6L) continue;
    ++decided;
    auto cmp = compare_abs(x, bound);
    if (value < fb)
      CHECK(cmp == std::strong_ordering::less);
    else
      CHECK(cmp == std::strong_ordering::greater);
  }
  CHECK(decided > 900);
}

TEST_CASE("compare_abs equality implies a rational integer") {
  Rng rng(32);
  for (int t = 0; t < 200; ++t) {
    RingElem x = random_ring_elem(RingParams(2), 50, rng);
    Rat bound(rng.uniform(0, 100), rng.uniform(1, 10));
    bound.canonicalize();
    if (compare_abs(x, bound) == std::strong_ordering::equal) CHECK(x.is_rational_integer());
  }
  CHECK(compare_abs(elem2(4, 0), Rat(4)) == std::strong_ordering::equal);
}

TEST_CASE("compare_abs separates values at very tight margins") {
  // |(sqrt2 - 1)^40| is around 5e-16; squeeze it between two nearby
  // rationals obtained from its own enclosure. The comparison has to refine
  // far past the default depth to decide these.
  RingParams params(2);
  RingElem x = RingElem::one(params);
  for (int k = 0; k < 40; ++k) x = x * (RingElem::root(params) - RingElem::one(params));
  RatInterval enc = real_enclosure(x, 80);
  Rat below = enc.abs().lo * Rat(999999, 1000000);
  Rat above = enc.abs().hi * Rat(1000001, 1000000);
  CHECK(compare_abs(x, below) == std::strong_ordering::greater);
  CHECK(compare_abs(x, above) == std::strong_ordering::less);
}

TEST_CASE("enclosures tighten with refinement and contain the long-double value") {
  Rng rng(33);
  for (int t = 0; t < 50; ++t) {
    const int degree = static_cast<int>(rng.uniform(2, 5));
    RingElem x = random_ring_elem(RingParams(degree), 1000, rng);
    RatInterval coarse = real_enclosure(x, 8);
    RatInterval fine = real_enclosure(x, 40);
    CHECK(fine.width() <= coarse.width());
    const double v = static_cast<double>(oracles::real_value(x));
    CHECK(coarse.lo.get_d() <= v + 1e-9);
    CHECK(coarse.hi.get_d() >= v - 1e-9);
  }
}

TEST_CASE("two-adic valuation") {
  CHECK(two_adic_valuation(elem2(4, 8)) == 2);
  CHECK(two_adic_valuation(elem2(1, 2)) == 0);
  CHECK_FALSE(two_adic_valuation(RingElem::zero(RingParams(2))).has_value());
  CHECK(two_adic_valuation(RingElem(RingParams(3), {Int(0), Int(4), Int(16)})) == 2);
}
