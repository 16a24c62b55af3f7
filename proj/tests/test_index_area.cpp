#include <random>

#include <catch2/catch_amalgamated.hpp>

#include "generators.hpp"
#include "neckstretch/index_area.hpp"
#include "neckstretch/validate.hpp"

using namespace neckstretch;

namespace {

ComponentSpec top(long long d, long long e, std::vector<HomologyClass> classes) {
    ComponentSpec c;
    c.level_kind = LevelKind::top;
    c.degree = d;
    c.exceptional = e;
    for (auto cls : classes) c.ends.push_back({Sign::negative, cls, true});
    return c;
}

} // namespace

TEST_CASE("top index formula on the named curves", "[index_area]") {
    // degree-0 plane on a (1,0) geodesic
    CHECK(index_top(1, 0, 0, std::vector<HomologyClass>{{1, 0}}).index == 1);
    // degree-1 plane on a (-1,0) geodesic with one exceptional intersection
    CHECK(index_top(1, 1, 1, std::vector<HomologyClass>{{-1, 0}}).index == 1);
    // closed fiber
    CHECK(index_top(0, 1, 1, std::vector<HomologyClass>{}).index == 2);
    CHECK(index_top(0, 1, 1, std::vector<HomologyClass>{}).formula_tag == LevelKind::top);

    // section family: no ends, e = d - 1, index 4d
    for (long long d = 1; d <= 10; ++d)
        CHECK(index_top(0, d, d - 1, std::vector<HomologyClass>{}).index == 4 * d);

    CHECK_THROWS_AS(index_top(2, 0, 0, std::vector<HomologyClass>{{1, 0}}), length_mismatch);
}

TEST_CASE("neck and bottom index formulas", "[index_area]") {
    CHECK(index_neck(1, 1).index == 1);
    CHECK(index_neck(2, 0).index == 2);
    CHECK(index_neck(1, 0).index == 0);
    CHECK(index_neck(0, 1).index == -1);
    CHECK_THROWS_AS(index_neck(0, 0), std::invalid_argument);

    CHECK(index_bottom(2).index == 2);
    CHECK(index_bottom(1).index == 0);
    CHECK(index_bottom(3).index == 4);
    CHECK_THROWS_AS(index_bottom(0), std::invalid_argument);
}

TEST_CASE("top areas match the closed-form values", "[index_area]") {
    const Rational R(5, 2);
    CHECK(area_top(top(1, 1, {}), R).area == Rational(3, 2)); // closed fiber: R - 1
    CHECK(area_top(top(0, 0, {{1, 0}}), Rational(17, 3)).area == Rational(1)); // R-independent
    CHECK(area_top(top(0, 0, {{1, 0}}), R).area == Rational(1));
    CHECK(area_top(top(1, 1, {{-1, 0}}), R).area == Rational(1, 2)); // R - 2

    ComponentSpec cyl;
    cyl.level_kind = LevelKind::neck;
    CHECK_THROWS_AS(area_top(cyl, R), wrong_level);
}

TEST_CASE("class areas", "[index_area]") {
    const Rational R(5, 2);
    CHECK(class_area(1, 1, R) == R - Rational(1));
    CHECK(class_area(0, 0, R) == Rational(0));
    for (long long d = 1; d <= 8; ++d)
        CHECK(class_area(d, d - 1, R) == Rational(d) * R - Rational(d) + Rational(1));
}

TEST_CASE("constrained index subtracts two per point", "[index_area]") {
    for (long long d = 1; d <= 10; ++d) CHECK(constrained_index(4 * d, 2 * d) == 0);
    CHECK(constrained_index(2, 1) == 0);
    CHECK(constrained_index(2, 0) == 2);
    CHECK_THROWS_AS(constrained_index(2, -1), std::invalid_argument);
}

TEST_CASE("closed top curves have index 2 c1 - 2", "[index_area]") {
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<long long> deg(0, 9), exc(0, 9);
    for (int i = 0; i < 300; ++i) {
        const long long d = deg(rng), e = exc(rng);
        const long long c1 = 3 * d - e;
        CHECK(index_top(0, d, e, std::vector<HomologyClass>{}).index == 2 * c1 - 2);
    }
}

TEST_CASE("area sum rule: top areas add up to the class area", "[index_area]") {
    std::mt19937_64 rng(12);
    for (int i = 0; i < 200; ++i) {
        const auto b = testgen::random_building(rng);
        REQUIRE(validate_building(b).passed());
        const Rational R = testgen::random_rational(rng, -40, 40, 12);
        Rational total(0);
        for (const auto& c : b.components)
            if (c.level_kind == LevelKind::top) total += area_top(c, R).area;
        CHECK(total == class_area(b.total_degree, b.total_exceptional, R));
    }
}
