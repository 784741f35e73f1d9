#include "hbflow/leading_order.hpp"
#include "hbflow/errors.hpp"
#include "hbflow/force.hpp"
#include "hbflow/numerics.hpp"
#include "hbflow/yield_surface.hpp"

#include "detail.hpp"

#include <cmath>
#include <stdexcept>

namespace hbflow {

double plug_velocity(const fluid_params& p, double r) {
    return detail::u0_from_z0(p, z0_of_r(p, r));
}

double plug_velocity_prime(const fluid_params& p, double r) {
    if (r <= 0.0)
        throw std::domain_error("plug_velocity_prime: singular at r = 0");
    const double z0 = z0_of_r(p, r);
    return detail::du0_dz0(p, z0) * z0_prime(p, r, z0);
}

double u_zero(const fluid_params& p, double r, double z) {
    if (z < 0.0 || z > 1.0)
        throw std::domain_error("u_zero: z must lie in [0, 1]");
    const double z0 = z0_of_r(p, r);
    if (z <= z0) return detail::u0_from_z0(p, z0);
    return std::pow(p.B / z0, p.m) / (1.0 + p.m) *
           (std::pow(1.0 - z0, 1.0 + p.m) - std::pow(z - z0, 1.0 + p.m));
}

leading_stress_t leading_stress(const fluid_params& p, double r, double z) {
    if (z < 0.0 || z > 1.0)
        throw std::domain_error("leading_stress: z must lie in [0, 1]");
    if (r < 0.0 || r > 1.0)
        throw std::domain_error("leading_stress: r must lie in [0, 1]");
    const double z0 = z0_of_r(p, r); // r = 0 gives z0 = 1: tau = -Bz, p0' = -B
    return {-p.B * z / z0, -p.B / z0};
}

field_sample sample_leading(const fluid_params& p, double r, double z) {
    if (z < 0.0 || z > 1.0)
        throw std::domain_error("sample_leading: z must lie in [0, 1]");
    const double z0 = z0_of_r(p, r);
    field_sample s;
    s.r = r;
    s.z = z;
    s.u0_val = (z <= z0) ? detail::u0_from_z0(p, z0)
                         : std::pow(p.B / z0, p.m) / (1.0 + p.m) *
                               (std::pow(1.0 - z0, 1.0 + p.m) -
                                std::pow(z - z0, 1.0 + p.m));
    s.tau_rz0 = -p.B * z / z0;
    s.p0_prime_val = -p.B / z0;
    s.region = (z < z0) ? flow_region::pseudo_plug : flow_region::shear;
    return s;
}

double pressure_zero(const fluid_params& p, double r) {
    if (r < 0.0 || r > 1.0)
        throw std::domain_error("pressure_zero: r must lie in [0, 1]");
    const double m = p.m;
    const double s_lo = z0_edge(p);
    const double s_hi = z0_of_r(p, r);
    const double integral = num::integrate(
        [&](double s) {
            return std::pow(1.0 - s, m) *
                   (2.0 * s * s + 2.0 * m * s + m + m * m) /
                   (std::pow(s, m + 2.0) * (m + 1.0) * (m + 2.0));
        },
        s_lo, s_hi);
    return 2.0 * std::pow(p.B, m + 1.0) * integral + p.eps * edge_pressure_pR(p);
}

double pressure_zero_rform(const fluid_params& p, double r) {
    if (r < 0.0 || r > 1.0)
        throw std::domain_error("pressure_zero_rform: r must lie in [0, 1]");
    const double integral =
        num::integrate([&](double rho) { return p.B / z0_of_r(p, rho); }, r, 1.0);
    return integral + p.eps * edge_pressure_pR(p);
}

} // namespace hbflow
