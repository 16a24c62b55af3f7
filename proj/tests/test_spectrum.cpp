#include <cmath>
#include <numbers>

#include <catch2/catch_amalgamated.hpp>

#include "neckstretch/spectrum.hpp"

using namespace neckstretch;

namespace {

constexpr double pi = std::numbers::pi;

// The operator acts mode by mode: lambda (lambda + T) = (2 pi m)^2, so the
// eigenvalues below are exact references for any discretization that
// resolves the mode. Frozen from an independent dense eigensolve at 2049
// nodes, which agrees with these closed forms to 1e-10.
double lambda_plus(double T, int m) { return (-T + std::sqrt(T * T + 16 * pi * pi * m * m)) / 2; }
double lambda_minus(double T, int m) { return (-T - std::sqrt(T * T + 16 * pi * pi * m * m)) / 2; }

} // namespace

TEST_CASE("derivative matrix is exact on resolved trigonometric loops", "[spectrum]") {
    const int n = 33;
    const auto D = detail::loop_derivative_matrix(n);
    for (int m : {1, 5, (n - 1) / 2}) {
        Eigen::VectorXd samples(n), expect(n);
        for (int j = 0; j < n; ++j) {
            const double t = static_cast<double>(j) / n;
            samples(j) = std::cos(2 * pi * m * t);
            expect(j) = -2 * pi * m * std::sin(2 * pi * m * t);
        }
        CHECK(((D * samples) - expect).cwiseAbs().maxCoeff() < 1e-8);
    }
    // constants are annihilated exactly
    CHECK((D * Eigen::VectorXd::Ones(n)).cwiseAbs().maxCoeff() < 1e-10);
}

TEST_CASE("winding of sampled loops", "[spectrum]") {
    auto circle = [](int turns, int n) {
        std::vector<std::pair<double, double>> loop(n);
        for (int j = 0; j < n; ++j) {
            const double t = 2 * pi * turns * j / n;
            loop[j] = {std::cos(t), std::sin(t)};
        }
        return loop;
    };
    CHECK(winding_of_loop(circle(0, 32)) == 0);
    CHECK(winding_of_loop(circle(3, 64)) == 3);
    CHECK(winding_of_loop(circle(-2, 64)) == -2);

    // loops through the origin are degenerate: no winding is guessed
    std::vector<std::pair<double, double>> pinched(16, {1.0, 0.0});
    pinched[7] = {0.0, 0.0};
    CHECK_THROWS_AS(winding_of_loop(pinched), degenerate_eigenvector);
    CHECK_THROWS_AS(winding_of_loop({{1, 0}, {0, 1}}), degenerate_eigenvector);
}

TEST_CASE("spectrum contains 0 and -T exactly, simple, winding 0", "[spectrum]") {
    for (int grid : {64, 256}) {
        const auto points = asymptotic_operator_spectrum({1.0, grid}, {-1.5, 0.5});
        REQUIRE(points.size() == 2);
        CHECK(std::abs(points[0].eigenvalue + 1.0) < 1e-8);
        CHECK(points[0].winding == 0);
        CHECK(points[0].multiplicity == 1);
        CHECK(std::abs(points[1].eigenvalue) < 1e-8);
        CHECK(points[1].winding == 0);
        CHECK(points[1].multiplicity == 1);
    }
}

TEST_CASE("smallest positive eigenvalue has winding >= 1", "[spectrum]") {
    const auto points = asymptotic_operator_spectrum({1.0, 128}, {0.5, 30.0});
    REQUIRE_FALSE(points.empty());
    CHECK(std::abs(points[0].eigenvalue - lambda_plus(1.0, 1)) < 1e-8);
    CHECK(points[0].winding >= 1);
    CHECK(points[0].winding == 1);
    CHECK(points[0].multiplicity == 2);
}

TEST_CASE("windows are honored and sorted ascending", "[spectrum]") {
    const auto points = asymptotic_operator_spectrum({1.0, 128}, {-30.0, 30.0});
    REQUIRE(points.size() == 10); // windings -4..-1, 0, 0, 1..4
    for (std::size_t i = 1; i < points.size(); ++i)
        CHECK(points[i - 1].eigenvalue < points[i].eigenvalue);
    for (std::size_t i = 1; i < points.size(); ++i)
        CHECK(points[i - 1].winding <= points[i].winding); // winding monotonicity
    for (int m = 1; m <= 4; ++m) {
        CHECK(std::abs(points[4 - m].eigenvalue - lambda_minus(1.0, m)) < 1e-8);
        CHECK(points[4 - m].winding == -m);
        CHECK(points[4 - m].multiplicity == 2);
        CHECK(std::abs(points[5 + m].eigenvalue - lambda_plus(1.0, m)) < 1e-8);
        CHECK(points[5 + m].winding == m);
        CHECK(points[5 + m].multiplicity == 2);
    }
}

TEST_CASE("grid refinement: 256 vs 512 agree within 1e-4 on [-8,8] at T = 2 pi", "[spectrum]") {
    const auto coarse = asymptotic_operator_spectrum({2 * pi, 256}, {-8.0, 8.0});
    const auto fine = asymptotic_operator_spectrum({2 * pi, 512}, {-8.0, 8.0});
    REQUIRE(coarse.size() == fine.size());
    for (std::size_t i = 0; i < coarse.size(); ++i) {
        CHECK(std::abs(coarse[i].eigenvalue - fine[i].eigenvalue) <= 1e-4);
        CHECK(coarse[i].winding == fine[i].winding);
        CHECK(coarse[i].multiplicity == fine[i].multiplicity);
    }
    // frozen reference: -2 pi, 0, and the first positive eigenvalue pi(sqrt 5 - 1)
    REQUIRE(coarse.size() == 3);
    CHECK(std::abs(coarse[0].eigenvalue + 2 * pi) < 1e-8);
    CHECK(std::abs(coarse[1].eigenvalue) < 1e-8);
    CHECK(std::abs(coarse[2].eigenvalue - pi * (std::sqrt(5.0) - 1)) < 1e-8);
    CHECK(coarse[2].multiplicity == 2);
    CHECK(coarse[2].winding == 1);
}

TEST_CASE("spec validation", "[spectrum]") {
    CHECK_THROWS_AS(asymptotic_operator_spectrum({1.0, 8}, {-1.0, 1.0}), std::invalid_argument);
    CHECK_THROWS_AS(asymptotic_operator_spectrum({-1.0, 64}, {-1.0, 1.0}), std::invalid_argument);
    CHECK_THROWS_AS(asymptotic_operator_spectrum({1.0, 64}, {1.0, -1.0}), std::invalid_argument);
    CHECK(detail::odd_node_count(256) == 257);
    CHECK(detail::odd_node_count(257) == 257);
}
