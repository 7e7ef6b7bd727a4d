#include <doctest.h>

#include <vector>

#include <specforge/factorizer.hpp>

#include "support.hpp"

using namespace specforge;
using test_support::ladder_family;
using test_support::ordered_factorizations;
using test_support::ref_convolve;

namespace {

Rational R(long long n, long long d = 1) { return Rational(n, d); }

DiscreteMeasure set_measure(const std::vector<std::int64_t>& S, std::int64_t n) {
  std::vector<Atom> atoms;
  for (std::int64_t s : S)
    atoms.push_back({{R(s, n)}, R(1, static_cast<long long>(S.size()))});
  return DiscreteMeasure(std::move(atoms));
}

Assignment alternating(std::size_t len, Side start) {
  Assignment a;
  for (std::size_t i = 0; i < len; ++i) {
    a.labels.push_back((i % 2 == 0) == (start == Side::odd) ? Side::odd
                                                            : Side::even);
  }
  return a;
}

}  // namespace

TEST_CASE("peeling recovers the ladder, coarsest factor first") {
  SUBCASE("two dyadic sides") {
    LadderWithSides r =
        factor_uniform_pair(set_measure({0, 1}, 4), set_measure({0, 2}, 4));
    CHECK(r.ladder == Ladder{2, 2});
    CHECK(r.first_side == PairSide::A);

    LadderWithSides sw =
        factor_uniform_pair(set_measure({0, 2}, 4), set_measure({0, 1}, 4));
    CHECK(sw.ladder == Ladder{2, 2});
    CHECK(sw.first_side == PairSide::B);
  }

  SUBCASE("one-sided pair") {
    LadderWithSides r = factor_uniform_pair(DiscreteMeasure::point_mass_zero(),
                                            uniform_on_grid(5));
    CHECK(r.ladder == Ladder{5});
    CHECK(r.first_side == PairSide::B);

    LadderWithSides sw = factor_uniform_pair(uniform_on_grid(5),
                                             DiscreteMeasure::point_mass_zero());
    CHECK(sw.ladder == Ladder{5});
    CHECK(sw.first_side == PairSide::A);
  }

  SUBCASE("degenerate pair of point masses") {
    LadderWithSides r = factor_uniform_pair(DiscreteMeasure::point_mass_zero(),
                                            DiscreteMeasure::point_mass_zero());
    CHECK(r.ladder.empty());
    CHECK(r.first_side == PairSide::A);
  }

  SUBCASE("mixed entry sizes") {
    auto [p, q] = expand_pair({2, 3}, alternating(2, Side::odd));
    LadderWithSides r = factor_uniform_pair(p, q);
    CHECK(r.ladder == Ladder{2, 3});
    CHECK(r.first_side == PairSide::B);
  }

  SUBCASE("non-complementary inputs are rejected") {
    DiscreteMeasure half = set_measure({0, 1}, 2);
    CHECK_THROWS_AS(factor_uniform_pair(half, half), std::invalid_argument);
    CHECK_THROWS_AS(
        factor_uniform_pair(set_measure({0, 1}, 4), set_measure({0, 1}, 4)),
        std::invalid_argument);
    DiscreteMeasure skew =
        DiscreteMeasure({{{R(0)}, R(1, 3)}, {{R(1, 2)}, R(2, 3)}});
    CHECK_THROWS_AS(factor_uniform_pair(skew, set_measure({0, 1}, 4)),
                    std::invalid_argument);
  }
}

TEST_CASE("set pairs factor and expand back") {
  SUBCASE("examples") {
    LadderWithSides r = factor_sets({{0, 1}, {0, 2}, 4});
    CHECK(r.ladder == Ladder{2, 2});
    CHECK(r.first_side == PairSide::A);

    LadderWithSides r2 = factor_sets({{0, 1, 4, 5}, {0, 2}, 8});
    CHECK(r2.ladder == Ladder{2, 2, 2});
    CHECK(r2.first_side == PairSide::A);

    LadderWithSides r3 = factor_sets({{0}, {0}, 1});
    CHECK(r3.ladder.empty());

    LadderWithSides r4 = factor_sets({{0, 2}, {0, 1}, 4});
    CHECK(r4.ladder == Ladder{2, 2});
    CHECK(r4.first_side == PairSide::B);
  }

  SUBCASE("expansion inverts factorization") {
    for (const SetPair& sp :
         {SetPair{{0, 1}, {0, 2}, 4}, SetPair{{0, 1, 4, 5}, {0, 2}, 8},
          SetPair{{0, 3, 6}, {0, 1, 2}, 9}}) {
      SetPair back = expand_to_sets(factor_sets(sp));
      CHECK(back.A == sp.A);
      CHECK(back.B == sp.B);
      CHECK(back.n == sp.n);
    }
  }

  SUBCASE("invalid set pairs are rejected") {
    CHECK_THROWS_AS(factor_sets({{0, 1}, {0, 3}, 4}), std::invalid_argument);
    CHECK_THROWS_AS(factor_sets({{0, 1}, {0, 2}, 5}), std::invalid_argument);
    CHECK_THROWS_AS(factor_sets({{0, 1}, {0, 1}, 4}), std::invalid_argument);
    CHECK_THROWS_AS(factor_sets({{1, 2}, {0, 2}, 4}), std::invalid_argument);
  }
}

TEST_CASE("round trips across the ladder family") {
  for (const Ladder& l : ladder_family(256)) {
    for (Side start : {Side::odd, Side::even}) {
      auto [p, q] = expand_pair(l, alternating(l.size(), start));
      LadderWithSides r = factor_uniform_pair(p, q);
      CHECK(r.ladder == l);
      // p always collects the odd-labeled factors; the units digit belongs
      // to the last label.
      const Side last = alternating(l.size(), start).labels.back();
      CHECK(r.first_side == (last == Side::odd ? PairSide::A : PairSide::B));
    }
  }
}

TEST_CASE("arbitrary assignments match their canonicalization") {
  for (const Ladder& l : ladder_family(32)) {
    const std::size_t L = l.size();
    for (std::size_t mask = 0; mask < (std::size_t(1) << L); ++mask) {
      Assignment a;
      for (std::size_t i = 0; i < L; ++i)
        a.labels.push_back((mask >> i) & 1 ? Side::even : Side::odd);
      auto [p, q] = expand_pair(l, a);
      LadderWithSides r = factor_uniform_pair(p, q);
      CanonicalizeResult c = canonicalize(l, a);
      CHECK(r.ladder == c.ladder);
      if (!c.ladder.empty()) {
        const Side last_label = a.labels.back();
        CHECK(r.first_side ==
              (last_label == Side::odd ? PairSide::A : PairSide::B));
      }
    }
  }
}

TEST_CASE("brute-force enumeration of complementary set pairs") {
  std::vector<SetPair> one = enumerate_complementary_pairs(1);
  REQUIRE(one.size() == 1);
  CHECK(one[0].A == std::vector<std::int64_t>{0});
  CHECK(one[0].B == std::vector<std::int64_t>{0});

  std::vector<SetPair> four = enumerate_complementary_pairs(4);
  REQUIRE(four.size() == 4);
  CHECK(four[0].A == std::vector<std::int64_t>{0});
  CHECK(four[0].B == std::vector<std::int64_t>{0, 1, 2, 3});
  CHECK(four[1].A == std::vector<std::int64_t>{0, 1});
  CHECK(four[1].B == std::vector<std::int64_t>{0, 2});
  CHECK(four[2].A == std::vector<std::int64_t>{0, 1, 2, 3});
  CHECK(four[2].B == std::vector<std::int64_t>{0});
  CHECK(four[3].A == std::vector<std::int64_t>{0, 2});
  CHECK(four[3].B == std::vector<std::int64_t>{0, 1});

  CHECK(enumerate_complementary_pairs(5).size() == 2);
  CHECK(enumerate_complementary_pairs(7).size() == 2);

  for (std::int64_t n = 2; n <= 20; ++n) {
    CHECK(enumerate_complementary_pairs(n).size() ==
          static_cast<std::size_t>(2 * ordered_factorizations(n)));
  }

  CHECK_THROWS_AS(enumerate_complementary_pairs(0), std::invalid_argument);
  CHECK_THROWS_AS(enumerate_complementary_pairs(65), std::invalid_argument);
}

TEST_CASE("enumerated pairs all round trip through the factorizer") {
  for (std::int64_t n : {6, 12, 16, 24}) {
    for (const SetPair& sp : enumerate_complementary_pairs(n)) {
      SetPair back = expand_to_sets(factor_sets(sp));
      CHECK(back.A == sp.A);
      CHECK(back.B == sp.B);
    }
  }
}

TEST_CASE("weight symmetry about the support midpoint") {
  CHECK(symmetry_check(set_measure({0, 1}, 4)));
  CHECK(symmetry_check(uniform_on_grid(5)));
  CHECK(symmetry_check(DiscreteMeasure::point_mass_zero()));
  CHECK_FALSE(symmetry_check(
      DiscreteMeasure({{{R(0)}, R(1, 3)}, {{R(1, 2)}, R(2, 3)}})));
  // symmetric weights on an asymmetric support
  CHECK_FALSE(symmetry_check(DiscreteMeasure(
      {{{R(0)}, R(1, 3)}, {{R(1, 3)}, R(1, 3)}, {{R(1)}, R(1, 3)}})));
  // non-uniform but symmetric
  CHECK(symmetry_check(DiscreteMeasure(
      {{{R(0)}, R(1, 4)}, {{R(1, 2)}, R(1, 2)}, {{R(1)}, R(1, 4)}})));
}

TEST_CASE("support bounds from the first spectral gap") {
  DiscreteMeasure centered =
      DiscreteMeasure({{{R(-1, 8)}, R(1, 2)}, {{R(1, 8)}, R(1, 2)}});
  CHECK(support_bound_check(centered, 2));

  DiscreteMeasure tight =
      DiscreteMeasure({{{R(-1, 20)}, R(1, 2)}, {{R(1, 20)}, R(1, 2)}});
  CHECK_FALSE(support_bound_check(tight, 2));

  DiscreteMeasure offset =
      DiscreteMeasure({{{R(0)}, R(1, 2)}, {{R(1, 4)}, R(1, 2)}});
  CHECK_FALSE(support_bound_check(offset, 2));  // not centered

  CHECK_THROWS_AS(support_bound_check(centered, 0), std::invalid_argument);
}
