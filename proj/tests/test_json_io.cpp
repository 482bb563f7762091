#include <catch2/catch_amalgamated.hpp>

#include "zroot2/json_io.hpp"

using namespace zroot2;

namespace {
const RingParams kP2(2);
}

TEST_CASE("rational parsing") {
  CHECK(rational_from_string("1/5") == Rat(1, 5));
  CHECK(rational_from_string("10") == Rat(10));
  CHECK(rational_from_string("-6/4") == Rat(-3, 2));
  CHECK(rational_from_string("3/-6") == Rat(-1, 2));
  CHECK_THROWS_AS(rational_from_string("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(rational_from_string("x"), std::invalid_argument);
  CHECK_THROWS_AS(rational_from_string(""), std::invalid_argument);
}

TEST_CASE("ring element round trip and example encoding") {
  RingElem x(kP2, {Int(17), Int(-12)});
  Json j = to_json(x);
  CHECK(j.at("degree") == 2);
  CHECK(j.at("coeffs") == Json::array({"17", "-12"}));
  CHECK(ring_elem_from_json(j) == x);

  Rng rng(90);
  for (int t = 0; t < 50; ++t) {
    RingElem e = random_ring_elem(RingParams(static_cast<int>(rng.uniform(2, 5))), 1000000, rng);
    CHECK(ring_elem_from_json(to_json(e)) == e);
  }
}

TEST_CASE("malformed ring elements name the offending field") {
  CHECK_THROWS_WITH(ring_elem_from_json(Json{{"coeffs", Json::array({"1", "2"})}}),
                    Catch::Matchers::ContainsSubstring("degree"));
  CHECK_THROWS_WITH(ring_elem_from_json(Json{{"degree", 2}}),
                    Catch::Matchers::ContainsSubstring("coeffs"));
  CHECK_THROWS_WITH(ring_elem_from_json(Json{{"degree", 2}, {"coeffs", Json::array({"1", "zz"})}}),
                    Catch::Matchers::ContainsSubstring("coeffs[1]"));
}

TEST_CASE("group hom round trip and validation") {
  Rng rng(91);
  for (int t = 0; t < 50; ++t) {
    GroupHom h = random_group_hom(kP2, 1000, rng);
    CHECK(group_hom_from_json(to_json(h)) == h);
  }
  CHECK_THROWS_WITH(
      group_hom_from_json(Json{{"degree", 2}, {"matrix", Json::array({Json::array({"1", "2"})})}}),
      Catch::Matchers::ContainsSubstring("degree x degree"));
  CHECK_THROWS_WITH(group_hom_from_json(Json{
                        {"degree", 2},
                        {"matrix", Json::array({Json::array({"1", "2"}), Json::array({"3"})})}}),
                    Catch::Matchers::ContainsSubstring("rectangular"));
}

TEST_CASE("sequence round trip") {
  Rng rng(92);
  for (int t = 0; t < 50; ++t) {
    FinSeq s = random_finseq(kP2, 10, 100000, rng);
    CHECK(fin_seq_from_json(to_json(s)) == s);
  }
  FinSeq s = fin_seq_from_json(
      Json{{"degree", 2}, {"terms", Json::array({Json::array({"1", "0"}), Json::array({"0", "0"})})}});
  CHECK(s.support() == 1);  // trailing zero trimmed on ingestion
}

TEST_CASE("integer matrix round trip") {
  Rng rng(93);
  for (int t = 0; t < 30; ++t) {
    IntMatrix m(static_cast<std::size_t>(rng.uniform(1, 4)), static_cast<std::size_t>(rng.uniform(1, 4)));
    for (std::size_t r = 0; r < m.rows(); ++r)
      for (std::size_t c = 0; c < m.cols(); ++c) m.at(r, c) = rng.uniform(-1000000, 1000000);
    CHECK(int_matrix_from_json(to_json(m)) == m);
  }
  // Row-free matrices collapse to 0 x 0 on the wire.
  IntMatrix empty = int_matrix_from_json(Json{{"matrix", Json::array()}});
  CHECK(empty.rows() == 0);
  CHECK(empty.cols() == 0);
  CHECK_THROWS_WITH(int_matrix_from_json(Json::object()), Catch::Matchers::ContainsSubstring("matrix"));
}

TEST_CASE("module matrix round trip") {
  Rng rng(94);
  for (int t = 0; t < 30; ++t) {
    const int degree = static_cast<int>(rng.uniform(2, 4));
    ModuleMatrix m = random_module_matrix(RingParams(degree), 2, 3, 50, rng);
    ModuleMatrix back = module_matrix_from_json(to_json(m));
    CHECK(back.rows() == m.rows());
    CHECK(back.cols() == m.cols());
    bool equal = true;
    for (std::size_t r = 0; r < m.rows(); ++r)
      for (std::size_t c = 0; c < m.cols(); ++c) equal = equal && back.at(r, c) == m.at(r, c);
    CHECK(equal);
  }
}

TEST_CASE("witness instance round trip") {
  IntMatrix proj(2, 2);
  proj.at(0, 0) = 1;
  GroupHom diagonal(kP2, proj);
  std::vector<WitnessStage> stages;
  stages.push_back({0, 0, diagonal, {}});
  stages.push_back({2, 3, diagonal, {GroupHom::identity(kP2)}});
  WitnessInstance w(kP2, std::move(stages), {Rat(1), Rat(7, 2)});

  WitnessInstance back = witness_instance_from_json(to_json(w));
  CHECK(back.stages().size() == 2);
  CHECK(back.stages()[1].row == 2);
  CHECK(back.stages()[1].col == 3);
  CHECK(back.stages()[1].priors.size() == 1);
  CHECK(back.targets() == std::vector<Rat>{Rat(1), Rat(7, 2)});
}

TEST_CASE("file loading reports missing files and parse failures") {
  CHECK_THROWS_WITH(load_json_file("/nonexistent/zroot2.json"),
                    Catch::Matchers::ContainsSubstring("cannot open"));
}
