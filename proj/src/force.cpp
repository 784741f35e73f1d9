#include "hbflow/force.hpp"
#include "hbflow/errors.hpp"
#include "hbflow/first_order.hpp"
#include "hbflow/leading_order.hpp"
#include "hbflow/numerics.hpp"
#include "hbflow/yield_surface.hpp"

#include "detail.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace hbflow {

namespace {
constexpr double pi = std::numbers::pi;
}

double edge_pressure_pR(const fluid_params& p) {
    const detail::core_point c = detail::core_at(p, 1.0);
    return p.B * pi * c.z0 * (2.0 * c.u0p + c.u0) / (2.0 * c.eta);
}

double sigma_rr(const fluid_params& p, double r, double z) {
    if (r <= 0.0 || r > 1.0)
        throw std::domain_error("sigma_rr: r must lie in (0, 1]");
    if (z < 0.0 || z > 1.0)
        throw std::domain_error("sigma_rr: z must lie in [0, 1]");
    const detail::core_point c = detail::core_at(p, r);
    double s = -pressure_zero(p, r) - p.eps * p1_of_r(p, r);
    if (z < c.z0) {
        const double sq = std::sqrt(std::max(c.z0 * c.z0 - z * z, 0.0));
        s += p.eps * (2.0 * p.B / (c.eta * c.z0)) * (2.0 * c.u0p + c.u0_over_r) * sq;
    }
    return s;
}

double force_zero(const fluid_params& p) {
    return pi * num::integrate(
                    [&](double r) {
                        if (r <= 0.0) return 0.0; // integrand vanishes like r^2
                        return p.B * r * r / z0_of_r(p, r);
                    },
                    0.0, 1.0);
}

double force_zero_z0form(const fluid_params& p) {
    const double m = p.m;
    const double a = z0_edge(p);
    const double c3 = (m + 1.0) * (m + 1.0) * (m + 1.0) * (m + 2.0) * (m + 2.0) *
                      (m + 2.0);
    const auto f = [&](double s) {
        return std::pow(1.0 - s, 3.0 * m + 2.0) * (m + 1.0 + s) * (m + 1.0 + s) *
               (2.0 * s * s + 2.0 * m * s + m + m * m) /
               (std::pow(s, 3.0 * m + 2.0) * c3);
    };
    return 8.0 * pi * std::pow(p.B, 3.0 * m + 1.0) * num::integrate(f, a, 1.0);
}

double force_first(const fluid_params& p) {
    return -pi * num::integrate(
                     [&](double r) { return p1_prime(p, r) * r * r; }, r_min,
                     1.0, detail::fd_quad_tol());
}

double force_first_closed(const fluid_params& p) {
    const detail::core_point e = detail::core_at(p, 1.0);
    const double edge = e.z0 * e.u0 * (2.0 * e.u0 + e.u0p) / e.eta;
    const double bulk = num::integrate(
        [&](double r) {
            if (r <= 0.0) return 0.0;
            const detail::core_point c = detail::core_at(p, r);
            return c.eta * c.z0 * r;
        },
        0.0, 1.0);
    return pi * pi * p.B * (edge - 0.5 * bulk);
}

force_breakdown total_force(const fluid_params& p) {
    force_breakdown out;
    out.eps = p.eps;
    out.F0 = force_zero(p);
    out.F1 = force_first(p);
    out.p_R = edge_pressure_pR(p);
    out.F_total = out.F0 + p.eps * out.F1 + p.eps * pi * out.p_R;
    return out;
}

} // namespace hbflow
