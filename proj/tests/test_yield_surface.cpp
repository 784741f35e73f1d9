#include "hbflow/errors.hpp"
#include "hbflow/numerics.hpp"
#include "hbflow/yield_surface.hpp"

#include <doctest.h>

#include <cmath>
#include <random>

using namespace hbflow;

TEST_CASE("z0_of_r: r = 0 gives exactly 1") {
    for (double B : {0.01, 1.0, 10.0})
        for (double n : {0.25, 1.0, 1.5})
            CHECK(z0_of_r(fluid_params(B, n, 0.1), 0.0) == 1.0);
}

TEST_CASE("z0_of_r: Bingham fluid at mid-radius") {
    // root of (1-z)^3/3 - (1-z)^2 + 0.5 z = 0, bisection oracle
    const fluid_params p(1.0, 1.0, 0.1);
    CHECK(z0_of_r(p, 0.5) ==
          doctest::Approx(0.46709037924491326).epsilon(1e-12));
    CHECK(std::abs(z0_equation_residual(p, 0.5, z0_of_r(p, 0.5))) <= 1e-10);
}

TEST_CASE("z0_of_r: stiff-fluid limit approaches the plate") {
    const fluid_params p(1e6, 0.5, 0.1);
    const double z0 = z0_of_r(p, 1.0);
    CHECK(std::abs(z0 - 1.0) <= 1e-2);
    CHECK(z0 == doctest::Approx(0.99988553621929233).epsilon(1e-10));
}

TEST_CASE("z0_of_r: B = 0 has no yield surface") {
    CHECK_THROWS_AS(z0_of_r(fluid_params(0.0, 1.0, 0.1), 0.5), parameter_error);
}

TEST_CASE("z0_of_r: radius outside the disk") {
    const fluid_params p(1.0, 1.0, 0.1);
    CHECK_THROWS_AS(z0_of_r(p, -0.1), std::domain_error);
    CHECK_THROWS_AS(z0_of_r(p, 1.5), std::domain_error);
}

TEST_CASE("z0_of_r: strictly decreasing on a fine grid, tiny residuals") {
    for (double n : {0.5, 1.0}) {
        const fluid_params p(1.0, n, 0.1);
        double prev = z0_of_r(p, 0.0);
        for (int i = 1; i <= 100; ++i) {
            const double r = i / 100.0;
            const double z0 = z0_of_r(p, r);
            CHECK(z0 < prev);
            CHECK(std::abs(z0_equation_residual(p, r, z0)) <= 1e-10);
            prev = z0;
        }
    }
}

TEST_CASE("z0_prime: negative and matching finite differences") {
    for (auto [B, n, r] : {std::tuple{1.0, 1.0, 0.5}, {1.0, 0.5, 0.9}}) {
        const fluid_params p(B, n, 0.1);
        const double z0 = z0_of_r(p, r);
        const double zp = z0_prime(p, r, z0);
        CHECK(zp < 0.0);
        const double fd =
            num::derivative([&](double rr) { return z0_of_r(p, rr); }, r);
        CHECK(zp == doctest::Approx(fd).epsilon(1e-6));
    }
}

TEST_CASE("z0_prime: known value at B = 1, n = 1, r = 0.5") {
    const fluid_params p(1.0, 1.0, 0.1);
    CHECK(z0_prime(p, 0.5, z0_of_r(p, 0.5)) ==
          doctest::Approx(-0.36439436301385036).epsilon(1e-12));
}

TEST_CASE("z0_prime: singular at the axis") {
    const fluid_params p(1.0, 1.0, 0.1);
    CHECK_THROWS_AS(z0_prime(p, 0.0, 1.0), std::domain_error);
}

TEST_CASE("r_of_z0: vanishes at z0 = 1 and inverts z0_of_r") {
    const fluid_params p(2.0, 0.5, 0.1);
    CHECK(r_of_z0(p, 1.0) == 0.0);
    const double z0 = z0_of_r(p, 0.3);
    CHECK(z0 == doctest::Approx(0.63263419809387711).epsilon(1e-12));
    CHECK(std::abs(r_of_z0(p, z0) - 0.3) <= 1e-9);
}

TEST_CASE("r_of_z0: hand-evaluated Bingham form (1-z0)^2(2+z0)/(3 z0)") {
    const fluid_params p(1.0, 1.0, 0.1);
    CHECK(r_of_z0(p, 0.5) == doctest::Approx(5.0 / 12.0).epsilon(1e-14));
}

TEST_CASE("r_of_z0: rejects non-positive heights") {
    const fluid_params p(1.0, 1.0, 0.1);
    CHECK_THROWS_AS(r_of_z0(p, 0.0), std::domain_error);
    CHECK_THROWS_AS(r_of_z0(p, -0.2), std::domain_error);
}

TEST_CASE("dr_dz0: negative, matches finite differences, inverts z0_prime") {
    const fluid_params p(1.0, 1.0, 0.1);
    const double d = dr_dz0(p, 0.5);
    CHECK(d < 0.0);
    const double fd =
        num::derivative([&](double s) { return r_of_z0(p, s); }, 0.5);
    CHECK(d == doctest::Approx(fd).epsilon(1e-6));

    const fluid_params q(2.0, 0.5, 0.1);
    const double z0 = z0_of_r(q, 0.4);
    CHECK(dr_dz0(q, z0) * z0_prime(q, 0.4, z0) ==
          doctest::Approx(1.0).epsilon(1e-6));
}

TEST_CASE("dr_dz0: domain limited to (0,1)") {
    const fluid_params p(1.0, 1.0, 0.1);
    CHECK_THROWS_AS(dr_dz0(p, 0.0), std::domain_error);
    CHECK_THROWS_AS(dr_dz0(p, 1.0), std::domain_error);
}

TEST_CASE("z0_edge: frozen value and growth with B") {
    CHECK(z0_edge(fluid_params(1.0, 1.0, 0.1)) ==
          doctest::Approx(0.33987688662318255).epsilon(1e-12));
    CHECK(z0_edge(fluid_params(1e6, 0.5, 0.1)) ==
          doctest::Approx(1.0).epsilon(1e-2));
    CHECK(z0_edge(fluid_params(10.0, 0.5, 0.1)) >
          z0_edge(fluid_params(0.1, 0.5, 0.1)));
}

TEST_CASE("yield_point: consistent bundle") {
    const fluid_params p(2.0, 0.5, 0.1);
    const yield_surface_point y = yield_point(p, 0.8);
    CHECK(y.r == 0.8);
    CHECK(y.z0 == doctest::Approx(0.53844937876370946).epsilon(1e-12));
    CHECK(y.z0_prime < 0.0);
    CHECK(std::abs(z0_equation_residual(p, y.r, y.z0)) <= 1e-10);
    CHECK_THROWS_AS(yield_point(p, 0.0), std::domain_error);
}

TEST_CASE("round-trip r -> z0 -> r across random parameters") {
    std::mt19937 rng(52804u);
    std::uniform_real_distribution<double> logB(-2.0, 1.0);
    std::uniform_real_distribution<double> nd(0.25, 1.5);
    std::uniform_real_distribution<double> rd(0.01, 1.0);
    for (int k = 0; k < 60; ++k) {
        const double B = std::pow(10.0, logB(rng));
        const fluid_params p(B, nd(rng), 0.1);
        const double r = rd(rng);
        const double z0 = z0_of_r(p, r);
        CHECK(z0 > 0.0);
        CHECK(z0 <= 1.0);
        CHECK(std::abs(z0_equation_residual(p, r, z0)) <= 1e-10);
        CHECK(std::abs(r_of_z0(p, z0) - r) <= 1e-9);
    }
}
