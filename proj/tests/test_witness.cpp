#include <catch2/catch_amalgamated.hpp>

#include "zroot2/witness.hpp"

using namespace zroot2;

namespace {

const RingParams kP2(2);

RingElem elem2(long a, long b) { return RingElem(kP2, {Int(a), Int(b)}); }

void check_roundtrip_and_additivity(const IsoWitness& w, long trials, std::uint64_t seed) {
  const IsoWitness inv = w.inverted();
  CHECK(inv.source() == w.target());
  CHECK(inv.target() == w.source());
  Rng rng(seed);
  for (long t = 0; t < trials; ++t) {
    Element e = random_element(w.source(), 16, 1000000, rng);
    Element f = random_element(w.source(), 16, 1000000, rng);
    Element image = w.apply(e);
    CHECK(image.shape() == w.target());
    CHECK(inv.apply(image) == e);
    CHECK(w.apply(e + f) == image + w.apply(f));
  }
}

}  // namespace

TEST_CASE("primitive witnesses round-trip exactly") {
  check_roundtrip_and_additivity(shift_witness(kP2), 100, 41);
  check_roundtrip_and_additivity(interleave_witness(kP2), 100, 42);
  check_roundtrip_and_additivity(split_witness(kP2), 100, 43);
  check_roundtrip_and_additivity(absorb_free_witness(kP2), 100, 44);
  check_roundtrip_and_additivity(split_witness(RingParams(3)), 50, 45);
}

TEST_CASE("identity witness leaves elements unchanged") {
  Shape shape = Shape::pair(Shape::seq(kP2), Shape::free(3));
  IsoWitness id = IsoWitness::identity(kP2, shape);
  Rng rng(46);
  for (int t = 0; t < 20; ++t) {
    Element e = random_element(shape, 8, 1000, rng);
    CHECK(id.apply(e) == e);
  }
}

TEST_CASE("split packs free coordinates in the power basis") {
  // (3, -4) packs to 3 - 4*sqrt2, which then shifts in as the head term.
  IsoWitness absorb = absorb_free_witness(kP2);
  FinSeq a(kP2, {RingElem::integer(kP2, 5), RingElem::integer(kP2, 6)});
  Element e = Element::pair(Element::seq(a), Element::free({Int(3), Int(-4)}));
  Element out = absorb.apply(e);
  REQUIRE(out.kind() == Shape::Kind::Seq);
  CHECK(out.as_seq() == FinSeq(kP2, {elem2(3, -4), elem2(5, 0), elem2(6, 0)}));
}

TEST_CASE("corner chains reduce to the expected shapes") {
  // Degree 2: two copies of B collapse to A, three copies to B, four to A.
  CHECK(corner_witness(1, kP2).witness.target() == Shape::seq(kP2));
  CHECK(corner_witness(2, kP2).witness.target() == Shape::pair(Shape::seq(kP2), Shape::free(1)));
  CHECK(corner_witness(3, kP2).witness.target() == Shape::seq(kP2));
  // Degree 3: four copies of B collapse to B.
  RingParams p3(3);
  CHECK(corner_witness(3, p3).witness.target() == Shape::pair(Shape::seq(p3), Shape::free(1)));
  CHECK(corner_witness(2, p3).witness.target() == Shape::seq(p3));
  // n + 1 below the degree leaves free coordinates behind.
  CHECK(corner_witness(1, p3).witness.target() == Shape::pair(Shape::seq(p3), Shape::free(2)));
}

TEST_CASE("corner witnesses round-trip on random elements") {
  for (long n = 1; n <= 3; ++n)
    check_roundtrip_and_additivity(corner_witness(n, kP2).witness, 100, 50 + n);
  check_roundtrip_and_additivity(corner_witness(3, RingParams(3)).witness, 30, 54);
}

TEST_CASE("corner chains generalize to higher degrees and copy counts") {
  RingParams p3(3), p4(4);
  CHECK(corner_witness(5, p3).witness.target() == Shape::seq(p3));  // 6 = 3 * 2 copies
  CHECK(corner_witness(6, p4).witness.target() ==
        Shape::pair(Shape::seq(p4), Shape::free(3)));  // 7 mod 4 = 3 coordinates left
  CHECK(corner_witness(4, p4).witness.target() ==
        Shape::pair(Shape::seq(p4), Shape::free(1)));  // 5 copies of B collapse to B
  check_roundtrip_and_additivity(corner_witness(5, p3).witness, 15, 56);
  check_roundtrip_and_additivity(corner_witness(4, p4).witness, 15, 57);
}

TEST_CASE("corner witness maps zero to zero and reports its transcript") {
  CornerWitness cw = corner_witness(2, kP2);
  CHECK_FALSE(cw.transcript.empty());
  CHECK(cw.transcript.size() == cw.witness.moves().size());

  // The zero element of B + B + B.
  auto zero_b = [] {
    return Element::pair(Element::seq(FinSeq::zero(kP2)), Element::free({Int(0)}));
  };
  Element zero = Element::pair(zero_b(), Element::pair(zero_b(), zero_b()));
  Element out = cw.witness.apply(zero);
  Element expected = Element::pair(Element::seq(FinSeq::zero(kP2)), Element::free({Int(0)}));
  CHECK(out == expected);
}

TEST_CASE("corner witness rejects n < 1") {
  CHECK_THROWS_AS(corner_witness(0, kP2), std::invalid_argument);
}

TEST_CASE("composition type-checks shapes") {
  IsoWitness shift = shift_witness(kP2);
  IsoWitness interleave = interleave_witness(kP2);
  CHECK_THROWS_AS(shift.then(interleave), std::invalid_argument);

  // unshift then shift is a valid composite and is the identity.
  IsoWitness inv = shift.inverted();
  IsoWitness round = inv.then(shift);
  CHECK(round.source() == round.target());
  Rng rng(55);
  Element e = Element::seq(random_finseq(kP2, 10, 1000, rng));
  CHECK(round.apply(e) == e);
}

TEST_CASE("witness application validates the element shape") {
  IsoWitness w = shift_witness(kP2);
  CHECK_THROWS_AS(w.apply(Element::seq(FinSeq::zero(kP2))), std::invalid_argument);
}

TEST_CASE("witness lookup by name") {
  CHECK(build_witness("shift", 1, kP2).target() == Shape::seq(kP2));
  CHECK(build_witness("corner", 2, kP2).source() ==
        Shape::pair(Shape::pair(Shape::seq(kP2), Shape::free(1)),
                    Shape::pair(Shape::pair(Shape::seq(kP2), Shape::free(1)),
                                Shape::pair(Shape::seq(kP2), Shape::free(1)))));
  CHECK_THROWS_AS(build_witness("bogus", 1, kP2), std::invalid_argument);
}

TEST_CASE("moves reject shapes they do not match") {
  Shape seq = Shape::seq(kP2);
  CHECK_THROWS_AS(shape_after_move(seq, {Move::Prim::Interleave, false, {}, 0}),
                  std::invalid_argument);
  CHECK_THROWS_AS(shape_after_move(seq, {Move::Prim::Swap, false, {}, 0}), std::invalid_argument);
  Shape free3 = Shape::free(3);
  CHECK_THROWS_AS(shape_after_move(free3, {Move::Prim::MergeFree, true, {}, 3}),
                  std::invalid_argument);
  CHECK(shape_after_move(free3, {Move::Prim::MergeFree, true, {}, 1}) ==
        Shape::pair(Shape::free(1), Shape::free(2)));
}
