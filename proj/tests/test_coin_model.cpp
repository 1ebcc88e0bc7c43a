#include "doctest.h"

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "coinfrac/arith.hpp"
#include "coinfrac/coin_set.hpp"
#include "coinfrac/rational.hpp"

using namespace coinfrac;

TEST_CASE("checked arithmetic") {
    CHECK(checked_add(2, 3) == 5);
    CHECK(checked_mul(-4, 5) == -20);
    CHECK_THROWS_AS(checked_add(INT64_MAX, 1), std::overflow_error);
    CHECK_THROWS_AS(checked_mul(INT64_MAX / 2 + 1, 2), std::overflow_error);

    CHECK(checked_pow(2, 0) == 1);
    CHECK(checked_pow(2, 62) == (std::int64_t{1} << 62));
    CHECK(checked_pow(10, 18) == 1'000'000'000'000'000'000);
    CHECK_THROWS_AS(checked_pow(2, 63), std::range_error);
    CHECK_THROWS_AS(checked_pow(-2, 3), std::domain_error);
}

TEST_CASE("binomial against Pascal's triangle") {
    std::vector<std::vector<std::int64_t>> pascal{{1}};
    for (int n = 1; n <= 40; ++n) {
        std::vector<std::int64_t> row(static_cast<std::size_t>(n) + 1, 1);
        for (int k = 1; k < n; ++k)
            row[static_cast<std::size_t>(k)] = pascal.back()[static_cast<std::size_t>(k - 1)] +
                                               pascal.back()[static_cast<std::size_t>(k)];
        pascal.push_back(row);
    }
    for (int n = 0; n <= 40; ++n)
        for (int k = 0; k <= n; ++k)
            CHECK(binomial(n, k) ==
                  pascal[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)]);

    CHECK(binomial(5, 9) == 0);
    CHECK(binomial(66, 33) == 7219428434016265740); // largest central coefficient in range
    CHECK_THROWS_AS(binomial(67, 33), std::range_error);
    CHECK_THROWS_AS(binomial(-1, 0), std::domain_error);
}

TEST_CASE("rational normalization and arithmetic") {
    CHECK(Rational(6, 4) == Rational(3, 2));
    CHECK(Rational(1, -2) == Rational(-1, 2));
    CHECK(Rational(0, 7) == Rational(0));
    CHECK(Rational(5).den() == 1);
    CHECK_THROWS_AS(Rational(1, 0), std::domain_error);

    CHECK(Rational(1, 2) + Rational(1, 3) == Rational(5, 6));
    CHECK(Rational(1, 2) - Rational(1, 3) == Rational(1, 6));
    CHECK(Rational(2, 3) * Rational(3, 4) == Rational(1, 2));
    CHECK(-Rational(3, 7) == Rational(-3, 7));

    CHECK(Rational(1, 3) < Rational(1, 2));
    CHECK(Rational(-1, 2) < Rational(-1, 3));
    CHECK(Rational(7, 7) == Rational(1));

    CHECK(Rational(5, 6).translated(2) == Rational(17, 6));
    CHECK(Rational(3, 4).scaled_down(3) == Rational(1, 4));
    CHECK(Rational(1, 2).to_double() == doctest::Approx(0.5));
    CHECK(Rational(22, 4).str() == "11/2");
    CHECK(Rational(-8, 2).str() == "-4");

    CHECK_THROWS_AS(Rational(INT64_MAX, 1) + Rational(INT64_MAX, 1), std::overflow_error);
}

TEST_CASE("coin set canonicalization") {
    const CoinSet set({{10, 1}, {1, 2}, {10, 2}});
    REQUIRE(set.entries().size() == 2);
    CHECK(set.entries()[0] == CoinEntry{1, 2});
    CHECK(set.entries()[1] == CoinEntry{10, 3});
    CHECK(set.amount() == 32);
    CHECK_FALSE(set.empty());

    CHECK(CoinSet().amount() == 0);
    CHECK(CoinSet().empty());

    CHECK_THROWS_AS(CoinSet({{0, 1}}), std::invalid_argument);
    CHECK_THROWS_AS(CoinSet({{-3, 1}}), std::invalid_argument);
    CHECK_THROWS_AS(CoinSet({{1, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(CoinSet({{INT64_MAX / 2, 4}}), std::range_error);
}

TEST_CASE("coin set text form") {
    const CoinSet set = CoinSet::parse("1:4,5:1,10:2,25:1,50:1");
    CHECK(set.amount() == 104);
    CHECK(set.format() == "1:4,5:1,10:2,25:1,50:1");
    CHECK(CoinSet::parse(set.format()) == set);

    CHECK(CoinSet::parse("10:1,1:2") == CoinSet({{1, 2}, {10, 1}}));
    CHECK(CoinSet::parse("") == CoinSet());
    CHECK(CoinSet::parse(CoinSet().format()) == CoinSet());

    CHECK_THROWS_AS(CoinSet::parse("1"), std::invalid_argument);
    CHECK_THROWS_AS(CoinSet::parse("1:"), std::invalid_argument);
    CHECK_THROWS_AS(CoinSet::parse("a:2"), std::invalid_argument);
    CHECK_THROWS_AS(CoinSet::parse("1:2,,3:1"), std::invalid_argument);
    CHECK_THROWS_AS(CoinSet::parse("0:2"), std::invalid_argument);
}

TEST_CASE("geometric family") {
    const GeometricFamilySpec binary(2, 1, 6);
    CHECK(binary.scale_power() == 64);
    CHECK(binary.amount() == 63);
    const CoinSet coins = make_geometric(binary);
    REQUIRE(coins.entries().size() == 6);
    CHECK(coins.entries()[0] == CoinEntry{1, 1});
    CHECK(coins.entries()[5] == CoinEntry{32, 1});
    CHECK(coins.amount() == 63);

    const GeometricFamilySpec ternary(3, 3, 4);
    CHECK(ternary.amount() == 120);
    CHECK(make_geometric(ternary) == CoinSet({{1, 3}, {3, 3}, {9, 3}, {27, 3}}));

    CHECK(GeometricFamilySpec(5, 2, 0).amount() == 0);
    CHECK(make_geometric(GeometricFamilySpec(5, 2, 0)) == CoinSet());

    CHECK_THROWS_AS(GeometricFamilySpec(1, 1, 3), std::invalid_argument);
    CHECK_THROWS_AS(GeometricFamilySpec(2, 0, 3), std::invalid_argument);
    CHECK_THROWS_AS(GeometricFamilySpec(2, 1, -1), std::invalid_argument);
    CHECK_THROWS_AS(GeometricFamilySpec(2, 1, 63), std::range_error);
    CHECK_THROWS_AS(GeometricFamilySpec(2, std::int64_t{1} << 61, 10), std::range_error);
}

TEST_CASE("cent reference set") {
    const CoinSet cent = make_cent();
    CHECK(cent.amount() == 104);
    CHECK(cent == CoinSet({{1, 4}, {5, 1}, {10, 2}, {25, 1}, {50, 1}}));
}
