#include "doctest.h"

#include <cmath>
#include <cstdint>
#include <limits>
#include <random>
#include <set>
#include <vector>

#include "coinfrac/analysis.hpp"
#include "coinfrac/enumerate.hpp"
#include "coinfrac/ifs.hpp"
#include "test_util.hpp"

using namespace coinfrac;

namespace {

std::vector<std::vector<double>> random_cloud(std::size_t n, int dim, double lo, double hi) {
    std::uniform_real_distribution<double> coord(lo, hi);
    std::vector<std::vector<double>> out(n, std::vector<double>(static_cast<std::size_t>(dim)));
    for (auto& point : out)
        for (auto& x : point)
            x = coord(testutil::rng());
    return out;
}

RationalPointSet random_rational_set(std::size_t n, int dim, std::int64_t den) {
    std::uniform_int_distribution<std::int64_t> num(0, den);
    RationalPointSet out;
    out.dim = dim;
    while (out.points.size() < n) {
        RationalPoint point;
        for (int i = 0; i < dim; ++i)
            point.emplace_back(num(testutil::rng()), den);
        out.points[point] += 1;
    }
    return out;
}

std::vector<std::vector<double>> to_doubles(const RationalPointSet& set) {
    std::vector<std::vector<double>> out;
    for (const auto& [point, mult] : set.points) {
        std::vector<double> p;
        for (const auto& coord : point)
            p.push_back(coord.to_double());
        out.push_back(std::move(p));
    }
    return out;
}

double min_pairwise_gap(const RationalPointSet& set) {
    const auto pts = to_doubles(set);
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < pts.size(); ++i)
        for (std::size_t j = i + 1; j < pts.size(); ++j) {
            double d2 = 0;
            for (std::size_t k = 0; k < pts[i].size(); ++k)
                d2 += (pts[i][k] - pts[j][k]) * (pts[i][k] - pts[j][k]);
            best = std::min(best, d2);
        }
    return std::sqrt(best);
}

} // namespace

TEST_CASE("hausdorff distance basics") {
    const std::vector<std::vector<double>> zero{{0.0}};
    const std::vector<std::vector<double>> one{{1.0}};
    CHECK(hausdorff_distance(zero, one) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(hausdorff_distance(zero, zero) == 0.0);

    // Asymmetric inclusion: the one-sided distances differ, the metric
    // takes the larger.
    const std::vector<std::vector<double>> pair{{0.0}, {10.0}};
    CHECK(hausdorff_distance(zero, pair) == doctest::Approx(10.0).epsilon(1e-15));
    CHECK(hausdorff_distance(pair, zero) == doctest::Approx(10.0).epsilon(1e-15));

    CHECK_THROWS_AS(hausdorff_distance({}, one), std::domain_error);
    CHECK_THROWS_AS(hausdorff_distance(one, {{1.0, 2.0}}), std::domain_error);
}

TEST_CASE("hausdorff distance is a metric") {
    for (int trial = 0; trial < 20; ++trial) {
        const int dim = 1 + trial % 3;
        const auto a = random_cloud(30, dim, -1.0, 1.0);
        const auto b = random_cloud(25, dim, -1.0, 1.0);
        const auto c = random_cloud(35, dim, -1.0, 1.0);
        const double ab = hausdorff_distance(a, b);
        const double ba = hausdorff_distance(b, a);
        const double ac = hausdorff_distance(a, c);
        const double bc = hausdorff_distance(b, c);
        CHECK(ab == ba);
        CHECK(ab >= 0.0);
        CHECK(hausdorff_distance(a, a) == 0.0);
        CHECK(ac <= ab + bc + 1e-12);
    }
}

TEST_CASE("grid index agrees with the exhaustive path") {
    SUBCASE("uniform clouds around the switch-over size") {
        for (const std::size_t n : {40UL, 400UL, 2000UL})
            for (const int dim : {1, 2, 3}) {
                const auto a = random_cloud(n, dim, 0.0, 1.0);
                const auto b = random_cloud(n + 17, dim, 0.2, 1.3);
                CHECK(detail::hausdorff_indexed(a, b) == detail::hausdorff_exhaustive(a, b));
            }
    }
    SUBCASE("clustered cloud with a far outlier") {
        auto a = random_cloud(500, 2, 0.0, 0.001);
        a.push_back({50.0, -3.0});
        const auto b = random_cloud(300, 2, -0.5, 0.5);
        CHECK(detail::hausdorff_indexed(a, b) == detail::hausdorff_exhaustive(a, b));
        CHECK(detail::hausdorff_indexed(b, a) == detail::hausdorff_exhaustive(b, a));
    }
    SUBCASE("identical coordinates collapse to one cell") {
        const std::vector<std::vector<double>> a(64, {1.0, 1.0});
        const std::vector<std::vector<double>> b{{1.0, 1.0}, {2.0, 1.0}};
        CHECK(detail::hausdorff_indexed(a, b) == doctest::Approx(1.0).epsilon(1e-15));
    }
    SUBCASE("large clouds take the indexed path in the public entry") {
        const auto a = random_cloud(11'000, 2, 0.0, 1.0);
        const auto b = random_cloud(10'500, 2, 0.1, 1.1);
        CHECK(hausdorff_distance(a, b) == detail::hausdorff_exhaustive(a, b));
    }
}

TEST_CASE("rational point sets measure like their double images") {
    const auto a = random_rational_set(40, 3, 64);
    const auto b = random_rational_set(50, 3, 81);
    CHECK(hausdorff_distance(a, b) ==
          detail::hausdorff_exhaustive(to_doubles(a), to_doubles(b)));

    RationalPointSet empty;
    empty.dim = 3;
    CHECK_THROWS_AS(hausdorff_distance(a, empty), std::domain_error);
}

TEST_CASE("successive scaled levels contract geometrically") {
    double previous = 0.0;
    for (std::int64_t m = 1; m <= 8; ++m) {
        const GeometricFamilySpec level(2, 1, m);
        const GeometricFamilySpec next(2, 1, m + 1);
        const double d = hausdorff_distance(scale(construct_inductive(level, 3), level),
                                            scale(construct_inductive(next, 3), next));
        const double bound = std::sqrt(2.0) * std::pow(2.0, -static_cast<double>(m));
        CHECK(d <= bound);
        if (m > 1)
            CHECK(d * 2.0 <= previous * (1.0 + 1e-12)); // normalized sequence non-increasing
        previous = d;
    }
}

TEST_CASE("the induced set map is a contraction") {
    for (int trial = 0; trial < 10; ++trial)
        for (std::int64_t r = 2; r <= 4; ++r) {
            const IfsSystem system = make_ifs(GeometricFamilySpec(r, 2, 1), 3);
            const auto a = random_rational_set(20, 3, 60);
            const auto b = random_rational_set(24, 3, 60);
            const double before = hausdorff_distance(a, b);
            const double after = hausdorff_distance(apply_ifs(system, a), apply_ifs(system, b));
            CHECK(after <= before / static_cast<double>(r) + 1e-12);
        }
}

TEST_CASE("similarity dimension") {
    const DimensionResult gasket = similarity_dimension(2, 1);
    CHECK(gasket.defined);
    CHECK(gasket.map_count == 3);
    CHECK(gasket.inverse_ratio == 2);
    CHECK(gasket.value == doctest::Approx(std::log(3.0) / std::log(2.0)).epsilon(1e-12));
    CHECK(gasket.value == doctest::Approx(1.5849625007).epsilon(1e-9));

    CHECK(similarity_dimension(3, 2).value ==
          doctest::Approx(std::log(6.0) / std::log(3.0)).epsilon(1e-12));

    const DimensionResult overlap = similarity_dimension(3, 3);
    CHECK_FALSE(overlap.defined);
    CHECK(std::isnan(overlap.value));
    CHECK(overlap.map_count == 10);

    // Two players: the map count drops to c+1.
    const DimensionResult cantor = similarity_dimension(3, 1, 2);
    CHECK(cantor.defined);
    CHECK(cantor.map_count == 2);
    CHECK(cantor.value == doctest::Approx(std::log(2.0) / std::log(3.0)).epsilon(1e-12));

    for (std::int64_t r = 2; r <= 50; ++r)
        for (std::int64_t c = 1; c <= r - 1; ++c) {
            const DimensionResult d = similarity_dimension(r, c);
            CHECK(d.defined);
            CHECK(d.value > 0.0);
            CHECK(d.value < 2.0);
        }
}

TEST_CASE("cantor dimension") {
    CHECK(cantor_dimension(3).value == doctest::Approx(0.6309297536).epsilon(1e-9));
    CHECK(cantor_dimension(2).value == 1.0);
    CHECK(cantor_dimension(4).value == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(cantor_dimension(3).defined);
    CHECK(cantor_dimension(3).map_count == 2);
}

TEST_CASE("ramification classes") {
    CHECK(classify(5, 3) == RamificationClass::TotallyDisconnected);
    CHECK(classify(4, 3) == RamificationClass::FinitelyRamified);
    CHECK(classify(3, 3) == RamificationClass::InfinitelyRamified);
    CHECK(classify(2, 1) == RamificationClass::FinitelyRamified);
    CHECK(classify(10, 2) == RamificationClass::TotallyDisconnected);
    CHECK(to_string(RamificationClass::TotallyDisconnected) == "TotallyDisconnected");
    CHECK(to_string(RamificationClass::FinitelyRamified) == "FinitelyRamified");
    CHECK(to_string(RamificationClass::InfinitelyRamified) == "InfinitelyRamified");
}

TEST_CASE("classification matches observed merging") {
    // Below the touching threshold copies never share a point, so the
    // count multiplies exactly and no multiplicity exceeds one.
    for (std::int64_t m = 1; m <= 3; ++m) {
        const GeometricFamilySpec spec(5, 3, m);
        const DivisionSet divisions = construct_inductive(spec, 3);
        std::int64_t expected = 1;
        for (std::int64_t i = 0; i < m; ++i)
            expected *= 10;
        CHECK(static_cast<std::int64_t>(divisions.size()) == expected);
        CHECK(divisions.max_multiplicity() == 1);

        // Gap bounded below: exactly sqrt(2) * 5^-m at these levels.
        const double gap = min_pairwise_gap(scale(divisions, spec));
        CHECK(gap == doctest::Approx(std::sqrt(2.0) * std::pow(5.0, -static_cast<double>(m)))
                         .epsilon(1e-12));
    }

    // At the threshold copies still avoid sharing lattice points.
    const DivisionSet gasket = construct_inductive(GeometricFamilySpec(3, 2, 4), 3);
    CHECK(gasket.size() == 1296);
    CHECK(gasket.max_multiplicity() == 1);

    // Above it they overlap: points merge and multiplicities grow.
    const DivisionSet overlap = construct_inductive(GeometricFamilySpec(3, 3, 2), 3);
    CHECK(overlap.size() < 100);
    CHECK(overlap.max_multiplicity() > 1);
}

TEST_CASE("cantor coordinate map") {
    CHECK(cantor_phi(2, {0, 12}) == Rational(0));
    CHECK(cantor_phi(2, {4, 8}) == Rational(8, 9));
    CHECK(cantor_phi(1, {1, 0}) == Rational(2, 3));
    CHECK_THROWS_AS(cantor_phi(2, {5, 0}), std::domain_error);
    CHECK_THROWS_AS(cantor_phi(2, {-1, 5}), std::domain_error);
    CHECK_THROWS_AS(cantor_phi(0, {0, 0}), std::domain_error);
}

TEST_CASE("cantor digit strings") {
    CHECK(is_cantor_digit_string(Rational(0), 3));
    CHECK(is_cantor_digit_string(Rational(1), 3));
    CHECK(is_cantor_digit_string(Rational(8, 9), 3));
    CHECK_FALSE(is_cantor_digit_string(Rational(1, 3), 3));
    CHECK_FALSE(is_cantor_digit_string(Rational(7, 9), 3));
    CHECK(is_cantor_digit_string(Rational(2, 27), 3));
    CHECK_THROWS_AS(is_cantor_digit_string(Rational(1, 2), 3), std::domain_error);
    CHECK_THROWS_AS(is_cantor_digit_string(Rational(-1, 3), 3), std::domain_error);
    CHECK_THROWS_AS(is_cantor_digit_string(Rational(4, 3), 3), std::domain_error);

    // Base 2 admits every digit, so any dyadic rational in range passes.
    CHECK(is_cantor_digit_string(Rational(3, 8), 2));
    CHECK(is_cantor_digit_string(Rational(5, 16), 2));
}

TEST_CASE("phi image is the doubled subset-sum set") {
    const std::vector<Rational> m3_image{Rational(0),      Rational(2, 27),  Rational(6, 27),
                                         Rational(8, 27),  Rational(18, 27), Rational(20, 27),
                                         Rational(24, 27), Rational(26, 27)};

    for (std::int64_t m = 1; m <= 10; ++m) {
        const GeometricFamilySpec spec(3, 1, m);
        const DivisionSet divisions = enumerate_divisions(make_geometric(spec), 2);

        std::set<Rational> image;
        for (const auto& [point, mult] : divisions.points) {
            const Rational phi = cantor_phi(m, point);
            CHECK(is_cantor_digit_string(phi, 3));
            image.insert(phi);
        }

        // Independent reconstruction: subset sums of {1, 3, ..., 3^(m-1)}.
        std::set<Rational> expected;
        const std::int64_t denom = spec.scale_power();
        for (std::uint32_t mask = 0; mask < (1u << m); ++mask) {
            std::int64_t sum = 0;
            std::int64_t power = 1;
            for (std::int64_t bit = 0; bit < m; ++bit, power *= 3)
                if (mask & (1u << bit))
                    sum += power;
            expected.insert(Rational(2 * sum, denom));
        }
        CHECK(image == expected);
        CHECK(image.size() == (1ULL << m));

        if (m == 3)
            CHECK(image == std::set<Rational>(m3_image.begin(), m3_image.end()));
    }
}
