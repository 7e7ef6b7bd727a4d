#include "specforge/json_io.hpp"

#include "specforge/factorizer.hpp"
#include "specforge/ladder.hpp"
#include "specforge/measure.hpp"
#include "specforge/spectrum.hpp"
#include "specforge/tiling.hpp"

#include <doctest.h>
#include <json.hpp>

#include <string>

using namespace specforge;

TEST_CASE("measure round trips") {
  SUBCASE("uniform grid") {
    DiscreteMeasure m = uniform_on_grid(BigInt(6));
    CHECK(measure_from_json(measure_to_json(m)) == m);
  }

  SUBCASE("non-uniform weights") {
    DiscreteMeasure m(std::vector<Atom>{
        {Point{Rational(0)}, Rational(1, 3)},
        {Point{Rational(1, 2)}, Rational(2, 3)}});
    DiscreteMeasure back = measure_from_json(measure_to_json(m));
    CHECK(back == m);
    CHECK(back.atom(1).weight == Rational(2, 3));
  }

  SUBCASE("two dimensions") {
    DiscreteMeasure m =
        product(uniform_on_grid(BigInt(2)), uniform_on_grid(BigInt(3)));
    DiscreteMeasure back = measure_from_json(measure_to_json(m));
    CHECK(back == m);
    CHECK(back.dim() == 2);
  }
}

TEST_CASE("spectrum round trips") {
  SUBCASE("finite") {
    Spectrum s = Spectrum::finite1d({-3, 0, 5});
    CHECK(spectrum_from_json(spectrum_to_json(s)) == s);
  }

  SUBCASE("periodic") {
    Spectrum s = Spectrum::periodic1d({0, 2}, 4);
    Spectrum back = spectrum_from_json(spectrum_to_json(s));
    CHECK(back == s);
    CHECK(back.period.value() == 4);
  }

  SUBCASE("two dimensions") {
    Spectrum s = product_spectrum(
        {Spectrum::finite1d({0, 1}), Spectrum::finite1d({0, 4})});
    Spectrum back = spectrum_from_json(spectrum_to_json(s));
    CHECK(back == s);
    CHECK(back.dim == 2);
  }
}

TEST_CASE("factor spec round trips") {
  SUBCASE("type II") {
    FactorSpec spec;
    spec.ladder = {2, 3, 2};
    spec.side = Side::even;
    spec.level = 1;
    FactorSpec back = factor_spec_from_json(factor_spec_to_json(spec));
    CHECK(back.ladder == spec.ladder);
    CHECK(back.type == DecompositionType::type2);
    CHECK(back.side == Side::even);
    CHECK(back.level == 1);
    CHECK_FALSE(back.tail_on.has_value());
  }

  SUBCASE("type I with tail") {
    FactorSpec spec;
    spec.ladder = {2, 3, 4, 5};
    spec.type = DecompositionType::type1;
    spec.side = Side::odd;
    spec.level = 2;
    spec.tail_on = Side::even;
    FactorSpec back = factor_spec_from_json(factor_spec_to_json(spec));
    CHECK(back.type == DecompositionType::type1);
    CHECK(back.tail_on.has_value());
    CHECK(*back.tail_on == Side::even);
    CHECK_NOTHROW(back.validate());
  }
}

TEST_CASE("set pair and grid mask round trips") {
  SetPair sp{{0, 1, 4, 5}, {0, 2}, 8};
  SetPair back = set_pair_from_json(set_pair_to_json(sp));
  CHECK(back.A == sp.A);
  CHECK(back.B == sp.B);
  CHECK(back.n == sp.n);

  GridMask g;
  g.m = 4;
  g.cells = {true, false, true, true};
  GridMask gb = grid_mask_from_json(grid_mask_to_json(g));
  CHECK(gb.m == g.m);
  CHECK(gb.cells == g.cells);
}

TEST_CASE("translate systems serialize with exact offsets") {
  TranslateSystem t =
      extract_translates(GridMask{4, {true, false, true}},
                         GridMask{4, {true, true, true, true}});
  auto j = nlohmann::json::parse(translate_system_to_json(t));
  CHECK(j.at("count").get<std::int64_t>() == 2);
  REQUIRE(j.at("offsets").size() == 2);
  CHECK(j.at("offsets")[0].get<std::string>() == "0");
  CHECK(j.at("offsets")[1].get<std::string>() == "1/4");
}

TEST_CASE("measure pair documents") {
  DiscreteMeasure p = uniform_on_grid(BigInt(2));
  DiscreteMeasure q(std::vector<Atom>{
      {Point{Rational(0)}, Rational(1, 2)},
      {Point{Rational(1, 4)}, Rational(1, 2)}});
  std::string doc = std::string("{\"p\": ") + measure_to_json(p) +
                    ", \"q\": " + measure_to_json(q) + "}";
  auto [bp, bq] = measure_pair_from_json(doc);
  CHECK(bp == p);
  CHECK(bq == q);

  CHECK_THROWS_AS(measure_pair_from_json("{\"p\": {}}"),
                  std::invalid_argument);
}

TEST_CASE("malformed documents are rejected") {
  CHECK_THROWS_AS(measure_from_json("{"), std::invalid_argument);
  CHECK_THROWS_AS(measure_from_json("[1, 2]"), std::invalid_argument);
  CHECK_THROWS_AS(measure_from_json("{\"atoms\": [{\"pos\": [\"0\"]}]}"),
                  std::exception);
  CHECK_THROWS_AS(spectrum_from_json("{\"nope\": 1}"), std::invalid_argument);
  CHECK_THROWS_AS(spectrum_from_json("{\"base\": [\"x\"]}"),
                  std::invalid_argument);
  CHECK_THROWS_AS(grid_mask_from_json("{\"m\": 2, \"cells\": \"10a\"}"),
                  std::invalid_argument);
  CHECK_THROWS_AS(set_pair_from_json("{\"A\": [0]}"), std::exception);
}

TEST_CASE("ladder entry limits") {
  CHECK_THROWS_AS(
      factor_spec_from_json("{\"ladder\": [2, 1], \"type\": \"II\"}"),
      std::invalid_argument);
  CHECK_THROWS_AS(
      factor_spec_from_json("{\"ladder\": [8589934592], \"type\": \"II\"}"),
      std::invalid_argument);
  FactorSpec ok = factor_spec_from_json("{\"ladder\": [2, 7], \"type\": \"II\"}");
  CHECK(ok.ladder == Ladder{2, 7});
  CHECK(ok.side == Side::odd);
}
