#include "hbflow/errors.hpp"
#include "hbflow/numerics.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

using namespace hbflow;

namespace {
const num::tolerance tight{1e-14, 1e-13, 200};
}

TEST_CASE("find_root: linear function") {
    const double x = num::find_root([](double t) { return t - 0.5; }, 0.0, 1.0);
    CHECK(x == doctest::Approx(0.5).epsilon(1e-12));
}

TEST_CASE("find_root: cube root of two") {
    const double x =
        num::find_root([](double t) { return t * t * t - 2.0; }, 1.0, 2.0, tight);
    CHECK(std::abs(x - std::cbrt(2.0)) <= 1e-12);
}

TEST_CASE("find_root: no sign change raises bracket error") {
    CHECK_THROWS_AS(
        num::find_root([](double t) { return t * t + 1.0; }, 0.0, 1.0),
        bracket_error);
}

TEST_CASE("find_root: iteration cap raises convergence error with best iterate") {
    const num::tolerance starved{1e-300, 0.0, 3};
    try {
        num::find_root([](double t) { return std::tanh(4.0 * (t - 0.3)); }, 0.0,
                       1.0, starved);
        FAIL("expected convergence_error");
    } catch (const convergence_error& e) {
        CHECK(e.best_estimate >= 0.0);
        CHECK(e.best_estimate <= 1.0);
    }
}

TEST_CASE("find_root: result stays inside the bracket") {
    std::mt19937 rng(20240811u);
    std::uniform_real_distribution<double> root_at(0.05, 0.95);
    std::uniform_real_distribution<double> scale(0.5, 3.0);
    for (int k = 0; k < 50; ++k) {
        const double c = root_at(rng);
        const double a = scale(rng);
        const double x = num::find_root(
            [&](double t) { return a * (t - c) * (1.0 + 0.3 * std::sin(5.0 * t)); },
            0.0, 1.0);
        CHECK(x >= 0.0);
        CHECK(x <= 1.0);
        CHECK(x == doctest::Approx(c).epsilon(1e-9));
    }
}

TEST_CASE("integrate: constant") {
    const double v = num::integrate([](double) { return 1.0; }, 0.0, 1.0);
    CHECK(v == doctest::Approx(1.0).epsilon(1e-13));
}

TEST_CASE("integrate: inverse square-root endpoint singularity") {
    const double v =
        num::integrate([](double x) { return 1.0 / std::sqrt(x); }, 0.0, 1.0);
    CHECK(v == doctest::Approx(2.0).epsilon(1e-9));
}

TEST_CASE("integrate: quarter-circle kernel") {
    const double z0 = 0.7;
    const double v = num::integrate(
        [&](double z) { return std::sqrt(z0 * z0 - z * z); }, 0.0, z0);
    CHECK(v == doctest::Approx(std::numbers::pi * z0 * z0 / 4.0).epsilon(1e-10));
}

TEST_CASE("integrate: reversed limits flip the sign") {
    const double fwd = num::integrate([](double x) { return x * x; }, 0.0, 1.0);
    const double rev = num::integrate([](double x) { return x * x; }, 1.0, 0.0);
    CHECK(fwd == doctest::Approx(1.0 / 3.0).epsilon(1e-12));
    CHECK(rev == doctest::Approx(-fwd).epsilon(1e-12));
}

TEST_CASE("integrate: additive across a split point") {
    std::mt19937 rng(77031u);
    std::uniform_real_distribution<double> mid(0.1, 0.9);
    const auto f = [](double x) { return std::sin(3.0 * x) + x * x; };
    const double whole = num::integrate(f, 0.0, 1.0);
    for (int k = 0; k < 10; ++k) {
        const double c = mid(rng);
        const double split = num::integrate(f, 0.0, c) + num::integrate(f, c, 1.0);
        CHECK(split == doctest::Approx(whole).epsilon(1e-10));
    }
}

TEST_CASE("integrate: starved budget raises quadrature error with partial estimate") {
    const num::tolerance starved{1e-30, 1e-30, 1};
    try {
        num::integrate([](double x) { return 1.0 / std::sqrt(x); }, 0.0, 1.0,
                       starved);
        FAIL("expected quadrature_error");
    } catch (const quadrature_error& e) {
        CHECK(e.partial_estimate == doctest::Approx(2.0).epsilon(0.05));
        CHECK(e.error_estimate > 0.0);
    }
}

TEST_CASE("derivative: quadratic") {
    const double d =
        num::derivative([](double x) { return x * x; }, 1.0, 1e-6);
    CHECK(std::abs(d - 2.0) <= 1e-9);
}

TEST_CASE("derivative: constant is exactly zero") {
    const double d = num::derivative([](double) { return 4.25; }, 0.3, 1e-6);
    CHECK(d == 0.0);
}

TEST_CASE("derivative: sine") {
    const double d = num::derivative([](double x) { return std::sin(x); }, 0.3);
    CHECK(std::abs(d - std::cos(0.3)) <= 1e-10);
}
