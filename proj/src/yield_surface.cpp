#include "hbflow/yield_surface.hpp"
#include "hbflow/errors.hpp"
#include "hbflow/numerics.hpp"

#include <cmath>
#include <stdexcept>

namespace hbflow {

double z0_equation_residual(const fluid_params& p, double r, double z0) {
    const double m = p.m;
    return std::pow(1.0 - z0, 2.0 + m) / (2.0 + m) - std::pow(1.0 - z0, 1.0 + m) +
           std::pow(z0 / p.B, m) * (r / 2.0) * (1.0 + m);
}

double z0_of_r(const fluid_params& p, double r) {
    if (p.B == 0.0)
        throw parameter_error("B = 0: degenerate fluid has no yield surface "
                              "(pure power-law limit is out of scope)");
    if (r < 0.0 || r > 1.0)
        throw std::domain_error("z0_of_r: r must lie in [0, 1]");
    if (r == 0.0) return 1.0;

    const auto f = [&](double z) { return z0_equation_residual(p, r, z); };

    // The residual is strictly increasing in z0, so one bracket suffices;
    // scan as a fallback in case an extreme (B, n) defeats the endpoints.
    double lo = 1e-14, hi = 1.0;
    if ((f(lo) > 0.0) == (f(hi) > 0.0)) {
        bool found = false;
        double flo = f(lo);
        for (int k = 1; k <= 64; ++k) {
            const double x = lo + (hi - lo) * (static_cast<double>(k) / 64.0);
            const double fx = f(x);
            if ((flo > 0.0) != (fx > 0.0) || fx == 0.0) {
                hi = x;
                found = true;
                break;
            }
            lo = x;
            flo = fx;
        }
        if (!found)
            throw bracket_error("z0_of_r: no sign change located in (0, 1]");
    }

    // Near-machine x-accuracy independent of the process-wide root tolerance:
    // the inverse-map consistency (|r_of_z0(z0_of_r(r)) - r| <= 1e-9) needs it
    // at extreme parameter corners.
    num::tolerance tight{1e-15, 4e-16, 200};
    return num::find_root(f, lo, hi, tight);
}

double z0_prime(const fluid_params& p, double r, double z0) {
    (void)r;
    if (z0 >= 1.0)
        throw std::domain_error("z0_prime: singular at z0 = 1 (r = 0)");
    if (z0 <= 0.0)
        throw std::domain_error("z0_prime: z0 must lie in (0, 1)");
    const double n = p.n, m = p.m;
    return -(n + 1.0) * (2.0 * n + 1.0) * std::pow(z0, 1.0 + m) /
           (2.0 * std::pow(p.B, m) * std::pow(1.0 - z0, m) *
            (2.0 * n * n * z0 * z0 + 2.0 * n * z0 + 1.0 + n));
}

double r_of_z0(const fluid_params& p, double z0) {
    if (z0 <= 0.0 || z0 > 1.0)
        throw std::domain_error("r_of_z0: z0 must lie in (0, 1]");
    const double m = p.m;
    return 2.0 * std::pow(p.B, m) * std::pow(1.0 - z0, m + 1.0) * (m + 1.0 + z0) /
           (std::pow(z0, m) * (m + 1.0) * (m + 2.0));
}

double dr_dz0(const fluid_params& p, double z0) {
    if (z0 <= 0.0 || z0 >= 1.0)
        throw std::domain_error("dr_dz0: z0 must lie strictly inside (0, 1)");
    const double m = p.m;
    return -2.0 * std::pow(p.B, m) * std::pow(1.0 - z0, m) *
           (2.0 * z0 * z0 + 2.0 * m * z0 + m + m * m) /
           (std::pow(z0, m + 1.0) * (m + 1.0) * (m + 2.0));
}

double z0_edge(const fluid_params& p) { return z0_of_r(p, 1.0); }

yield_surface_point yield_point(const fluid_params& p, double r) {
    if (r <= 0.0)
        throw std::domain_error("yield_point: dz0/dr is singular at r = 0");
    yield_surface_point pt;
    pt.r = r;
    pt.z0 = z0_of_r(p, r);
    pt.z0_prime = z0_prime(p, r, pt.z0);
    return pt;
}

} // namespace hbflow
