#include "hbflow/errors.hpp"
#include "hbflow/force.hpp"
#include "hbflow/leading_order.hpp"
#include "hbflow/numerics.hpp"
#include "hbflow/yield_surface.hpp"

#include <doctest.h>

#include <cmath>

using namespace hbflow;

TEST_CASE("plug_velocity: zero on the axis, known interior value") {
    const fluid_params p(1.0, 1.0, 0.1);
    CHECK(plug_velocity(p, 0.0) == 0.0);
    // B(1-z0)^2/(2 z0) with z0 from the cubic oracle
    CHECK(plug_velocity(p, 0.5) ==
          doctest::Approx(0.30400183402666725).epsilon(1e-12));
}

TEST_CASE("plug_velocity: mass flux through a cylinder of radius r") {
    const fluid_params p(2.0, 0.5, 0.1);
    const double r = 0.7;
    const double z0 = z0_of_r(p, r);
    const double flux =
        num::integrate([&](double z) { return u_zero(p, r, z); }, 0.0, z0) +
        num::integrate([&](double z) { return u_zero(p, r, z); }, z0, 1.0);
    CHECK(std::abs(flux - r / 2.0) <= 1e-8);
}

TEST_CASE("plug_velocity_prime: finite-difference agreement and positivity") {
    for (auto [B, n, r] : {std::tuple{1.0, 1.0, 0.5}, {5.0, 0.25, 0.8}}) {
        const fluid_params p(B, n, 0.1);
        const double up = plug_velocity_prime(p, r);
        const double fd =
            num::derivative([&](double rr) { return plug_velocity(p, rr); }, r);
        CHECK(up == doctest::Approx(fd).epsilon(1e-6));
        CHECK(up > 0.0);
    }
    const fluid_params p(1.0, 1.0, 0.1);
    for (int i = 1; i <= 10; ++i)
        CHECK(plug_velocity_prime(p, i / 10.0) > 0.0);
    CHECK_THROWS_AS(plug_velocity_prime(p, 0.0), std::domain_error);
}

TEST_CASE("u_zero: no-slip at the plate, plug value at the surface") {
    const fluid_params p(1.0, 1.0, 0.1);
    CHECK(u_zero(p, 0.5, 1.0) == 0.0);
    const double z0 = z0_of_r(p, 0.5);
    CHECK(u_zero(p, 0.5, z0) == plug_velocity(p, 0.5));
    CHECK(u_zero(p, 0.5, 0.5 * z0) == plug_velocity(p, 0.5));
}

TEST_CASE("u_zero: shear-layer profile value") {
    const fluid_params p(1.0, 1.0, 0.1);
    const double z0 = z0_of_r(p, 0.5);
    CHECK(u_zero(p, 0.5, (1.0 + z0) / 2.0) ==
          doctest::Approx(0.22800137552000049).epsilon(1e-12));
}

TEST_CASE("u_zero: decreasing across the shear layer, domain checks") {
    const fluid_params p(2.0, 0.5, 0.1);
    const double z0 = z0_of_r(p, 0.6);
    double prev = u_zero(p, 0.6, z0);
    for (int i = 1; i <= 20; ++i) {
        const double z = z0 + (1.0 - z0) * i / 20.0;
        const double u = u_zero(p, 0.6, z);
        CHECK(u <= prev + 1e-15);
        prev = u;
    }
    CHECK_THROWS_AS(u_zero(p, 0.6, -0.01), std::domain_error);
    CHECK_THROWS_AS(u_zero(p, 0.6, 1.01), std::domain_error);
}

TEST_CASE("leading_stress: symmetry plane, yield condition, plate value") {
    const fluid_params p(2.0, 0.5, 0.1);
    CHECK(leading_stress(p, 0.6, 0.0).tau_rz0 == 0.0);
    const double z0 = z0_of_r(p, 0.6);
    CHECK(z0 == doctest::Approx(0.56708104718893471).epsilon(1e-12));
    CHECK(leading_stress(p, 0.6, z0).tau_rz0 ==
          doctest::Approx(-2.0).epsilon(1e-14));
    CHECK(leading_stress(p, 0.6, 1.0).tau_rz0 ==
          doctest::Approx(-2.0 / z0).epsilon(1e-12));
    CHECK(leading_stress(p, 0.6, 0.3).p0_prime ==
          doctest::Approx(-2.0 / z0).epsilon(1e-12));
}

TEST_CASE("leading_stress: sub-yield inside the plug, super-yield outside") {
    const fluid_params p(1.0, 0.5, 0.1);
    const double z0 = z0_of_r(p, 0.5);
    CHECK(std::abs(leading_stress(p, 0.5, 0.9 * z0).tau_rz0) < p.B);
    CHECK(std::abs(leading_stress(p, 0.5, z0 + 0.9 * (1 - z0)).tau_rz0) > p.B);
    CHECK_THROWS_AS(leading_stress(p, 0.5, 1.2), std::domain_error);
}

TEST_CASE("sample_leading: region tagging and bounds") {
    const fluid_params p(1.0, 0.5, 0.1);
    const double z0 = z0_of_r(p, 0.5);
    CHECK(sample_leading(p, 0.5, 0.5 * z0).region == flow_region::pseudo_plug);
    CHECK(sample_leading(p, 0.5, z0 + 0.5 * (1 - z0)).region ==
          flow_region::shear);
    const field_sample s = sample_leading(p, 0.5, 0.8);
    CHECK(s.tau_rz0 <= 0.0);
    CHECK(std::abs(s.tau_rz0) <= p.B / z0 + 1e-14);
    CHECK(s.p0_prime_val == doctest::Approx(-p.B / z0).epsilon(1e-12));
}

TEST_CASE("pressure_zero: edge value is the scaled edge constant") {
    const fluid_params p(1.0, 0.5, 0.1);
    CHECK(pressure_zero(p, 1.0) ==
          doctest::Approx(p.eps * edge_pressure_pR(p)).epsilon(1e-12));
}

TEST_CASE("pressure_zero: matches the direct radial quadrature") {
    for (auto [B, n] : {std::pair{1.0, 0.5}, {0.01, 0.25}, {10.0, 1.5}}) {
        const fluid_params p(B, n, 0.1);
        for (double r : {0.2, 0.5, 0.8})
            CHECK(std::abs(pressure_zero(p, r) - pressure_zero_rform(p, r)) <=
                  1e-8);
    }
}

TEST_CASE("pressure_zero: frozen value and monotone decay") {
    const fluid_params p(1.0, 1.0, 0.1);
    CHECK(pressure_zero(p, 0.5) ==
          doctest::Approx(1.319746453236311).epsilon(1e-8));
    const fluid_params q(1.0, 0.5, 0.1);
    CHECK(pressure_zero(q, 0.2) > pressure_zero(q, 0.8));
}

TEST_CASE("zero-order flux constraint across the parameter grid") {
    for (auto [B, n] : {std::pair{1.0, 1.0}, {2.0, 0.5}, {0.1, 1.5}}) {
        const fluid_params p(B, n, 0.1);
        for (double r : {0.1, 0.4, 0.7, 1.0}) {
            const double z0 = z0_of_r(p, r);
            const double flux =
                num::integrate([&](double z) { return u_zero(p, r, z); }, 0.0,
                               z0) +
                num::integrate([&](double z) { return u_zero(p, r, z); }, z0,
                               1.0);
            CHECK(std::abs(flux - r / 2.0) <= 1e-8);
        }
    }
}

TEST_CASE("velocity is flat at the yield surface (one-sided difference)") {
    const double h = 1e-6;
    // shear-rate ~ h^m just above the surface, so the difference quotient
    // decays like h^m/(1+m): ~1e-6 at n=1, far smaller for n < 1
    const fluid_params p(1.0, 1.0, 0.1);
    const double z0 = z0_of_r(p, 0.5);
    const double dudz = (u_zero(p, 0.5, z0 + h) - u_zero(p, 0.5, z0)) / h;
    CHECK(std::abs(dudz) <= 2e-6);

    const fluid_params q(1.0, 0.5, 0.1);
    const double w0 = z0_of_r(q, 0.5);
    const double dwdz = (u_zero(q, 0.5, w0 + h) - u_zero(q, 0.5, w0)) / h;
    CHECK(std::abs(dwdz) <= 1e-6);
}
