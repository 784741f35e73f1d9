#include "hbflow/first_order.hpp"
#include "hbflow/errors.hpp"
#include "hbflow/numerics.hpp"
#include "hbflow/yield_surface.hpp"

#include "detail.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace hbflow {

namespace {

constexpr double pi = std::numbers::pi;

// d/dr of an arbitrary radial profile built from the core bundle, using the
// shared step rule. Central stencil inside the domain; second-order one-sided
// backward stencil at the rim where r + h would leave (0, 1].
template <typename F>
double d_dr(const F& f, double r) {
    const double h = detail::radial_step(r);
    if (r + h <= 1.0)
        return (f(r + h) - f(r - h)) / (2.0 * h);
    return (3.0 * f(r) - 4.0 * f(r - h) + f(r - 2.0 * h)) / (2.0 * h);
}

double phi_profile(const fluid_params& p, double rr) {
    const detail::core_point c = detail::core_at(p, rr);
    return c.z0 / c.eta * (2.0 * c.u0p + c.u0_over_r);
}

double psi_profile(const fluid_params& p, double rr) {
    const detail::core_point c = detail::core_at(p, rr);
    return (2.0 * c.u0p + c.u0_over_r) / (c.eta * c.z0);
}

void require_radius(double r, const char* who) {
    if (r <= 1e-8 || r > 1.0)
        throw std::domain_error(std::string(who) +
                                ": r out of range (series regime below 1e-8)");
}

double g_from_core(const fluid_params& p, const detail::core_point& c) {
    const double dphi = d_dr([&](double rr) { return phi_profile(p, rr); }, c.r);
    const double corr = c.z0 / (c.eta * c.r) * (c.u0p - c.u0_over_r);
    return -pi * p.B / 2.0 * (dphi + corr);
}

double p1_prime_from_core(const fluid_params& p, const detail::core_point& c, double g) {
    return -pi * p.B * c.eta * c.z0p / 2.0 - 2.0 * g * c.u0p;
}

} // namespace

double eta_of_r(const fluid_params& p, double r) {
    if (r <= 0.0 || r > 1.0)
        throw std::domain_error("eta_of_r: r must lie in (0, 1]");
    return detail::core_at(p, r).eta;
}

double g_of_r(const fluid_params& p, double r) {
    require_radius(r, "g_of_r");
    return g_from_core(p, detail::core_at(p, r));
}

double p1_prime(const fluid_params& p, double r) {
    require_radius(r, "p1_prime");
    const detail::core_point c = detail::core_at(p, r);
    return p1_prime_from_core(p, c, g_from_core(p, c));
}

double p1_of_r(const fluid_params& p, double r) {
    if (r <= 0.0 || r > 1.0)
        throw std::domain_error("p1_of_r: r must lie in (0, 1]");
    const double lo = std::max(r, r_min); // frozen below the divergent regime
    if (lo >= 1.0) return 0.0;
    const double v = num::integrate(
        [&](double rho) { return p1_prime(p, rho); }, lo, 1.0,
        detail::fd_quad_tol());
    return (v == 0.0) ? 0.0 : -v;
}

first_order_coefficients first_order_at(const fluid_params& p, double r) {
    require_radius(r, "first_order_at");
    const detail::core_point c = detail::core_at(p, r);
    first_order_coefficients fc;
    fc.r = r;
    fc.eta = c.eta;
    fc.g = g_from_core(p, c);
    fc.p1_prime = p1_prime_from_core(p, c, fc.g);
    fc.p1 = p1_of_r(p, r);
    return fc;
}

double u_first_shear(const fluid_params& p, double r, double z) {
    require_radius(r, "u_first_shear");
    const detail::core_point c = detail::core_at(p, r);
    if (z < c.z0 || z > 1.0)
        throw std::domain_error("u_first_shear: shear branch needs z in [z0, 1]");
    const double n = p.n, m = p.m;
    const double g = g_from_core(p, c);
    const double pp = p1_prime_from_core(p, c, g);
    const double kappa = std::pow(p.B / c.z0, m - 1.0);
    const double w = std::pow(z - c.z0, m);
    const double w1 = std::pow(1.0 - c.z0, m);
    return kappa * (pp / (n + 1.0) * (w * (z + n * c.z0) - w1 * (1.0 + n * c.z0)) +
                    g * (w - w1));
}

double u_first_plug(const fluid_params& p, double r, double z) {
    require_radius(r, "u_first_plug");
    const detail::core_point c = detail::core_at(p, r);
    if (z < 0.0 || z > c.z0)
        throw std::domain_error("u_first_plug: plug branch needs z in [0, z0]");
    const double n = p.n, m = p.m;
    const double g = g_from_core(p, c);
    const double pp = p1_prime_from_core(p, c, g);
    const double kappa = std::pow(p.B / c.z0, m - 1.0);
    const double s = std::sqrt(std::max(c.z0 * c.z0 - z * z, 0.0));
    const double w1 = std::pow(1.0 - c.z0, m);
    return c.eta * s -
           kappa * (pp * w1 * (1.0 + n * c.z0) / (n + 1.0) + g * w1);
}

double u_first(const fluid_params& p, double r, double z) {
    require_radius(r, "u_first");
    if (z < 0.0 || z > 1.0)
        throw std::domain_error("u_first: z must lie in [0, 1]");
    const double z0 = z0_of_r(p, r);
    return (z < z0) ? u_first_plug(p, r, z) : u_first_shear(p, r, z);
}

double tau_rz_first_shear(const fluid_params& p, double r, double z) {
    require_radius(r, "tau_rz_first_shear");
    const detail::core_point c = detail::core_at(p, r);
    const double g = g_from_core(p, c);
    return z * p1_prime_from_core(p, c, g) + g;
}

double tau_rz_first_plug(const fluid_params& p, double r, double z) {
    require_radius(r, "tau_rz_first_plug");
    const detail::core_point c = detail::core_at(p, r);
    if (z < 0.0 || z > c.z0)
        throw std::domain_error("tau_rz_first_plug: plug branch needs z in [0, z0]");
    const double g = g_from_core(p, c);
    const double pp = p1_prime_from_core(p, c, g);
    const double s = std::sqrt(std::max(c.z0 * c.z0 - z * z, 0.0));
    const double asz = std::asin(std::min(z / c.z0, 1.0));
    const double dpsi = d_dr([&](double rr) { return psi_profile(p, rr); }, r);
    const double psi = (2.0 * c.u0p + c.u0_over_r) / (c.eta * c.z0);
    return -p.B * (z * s + c.z0 * c.z0 * asz) *
               (dpsi + (c.u0p - c.u0_over_r) / (r * c.eta * c.z0)) -
           2.0 * p.B * psi * c.z0 * c.z0p * asz + pp * z;
}

double tau_rz_first(const fluid_params& p, double r, double z) {
    require_radius(r, "tau_rz_first");
    if (z < 0.0 || z > 1.0)
        throw std::domain_error("tau_rz_first: z must lie in [0, 1]");
    const double z0 = z0_of_r(p, r);
    return (z < z0) ? tau_rz_first_plug(p, r, z) : tau_rz_first_shear(p, r, z);
}

double p_first_plug(const fluid_params& p, double r, double z) {
    require_radius(r, "p_first_plug");
    const detail::core_point c = detail::core_at(p, r);
    if (z < 0.0 || z > c.z0)
        throw std::domain_error("p_first_plug: valid only inside the plug "
                                "(shear region has p^{s,1} = p1(r))");
    const double s = std::sqrt(std::max(c.z0 * c.z0 - z * z, 0.0));
    return -(2.0 * p.B / (c.eta * c.z0)) * (c.u0p + c.u0_over_r) * s + p1_of_r(p, r);
}

double flow_rate_residual_first(const fluid_params& p, double r) {
    require_radius(r, "flow_rate_residual_first");
    const detail::core_point c = detail::core_at(p, r);
    const double n = p.n, m = p.m;
    const double g = g_from_core(p, c);
    const double pp = p1_prime_from_core(p, c, g);
    const double kappa = std::pow(p.B / c.z0, m - 1.0);
    const double w1 = std::pow(1.0 - c.z0, m);
    return c.eta * pi * c.z0 * c.z0 / 4.0 -
           kappa * w1 *
               (pp * (2.0 * n * n * c.z0 * c.z0 + 2.0 * n * c.z0 + n + 1.0) /
                    ((n + 1.0) * (2.0 * n + 1.0)) +
                g * (n * c.z0 + 1.0) / (n + 1.0));
}

double plug_yield_residual(const fluid_params& p, double r, double z) {
    if (r <= 0.0 || r > 1.0)
        throw std::domain_error("plug_yield_residual: r must lie in (0, 1]");
    const detail::core_point c = detail::core_at(p, r);
    if (z < 0.0 || z > c.z0)
        throw std::domain_error("plug_yield_residual: point must lie inside the plug");
    const double s = std::sqrt(std::max(c.z0 * c.z0 - z * z, 0.0));
    const double pref = 2.0 * p.B / (c.eta * c.z0);
    const double trr = pref * c.u0p * s;
    const double ttt = pref * c.u0_over_r * s;
    const double trz = -p.B * z / c.z0;
    return trr * trr + ttt * ttt + trr * ttt + trz * trz - p.B * p.B;
}

double plate_stress(const fluid_params& p, double r) {
    if (r <= r_min || r > 1.0)
        throw std::domain_error("plate_stress: r must lie in (r_min, 1]; "
                                "use plate_stress_series toward the axis");
    const detail::core_point c = detail::core_at(p, r);
    const double g = g_from_core(p, c);
    const double pp = p1_prime_from_core(p, c, g);
    return p.B / c.z0 - p.eps * (pp + g);
}

series_pair plate_stress_series(const fluid_params& p, double r) {
    if (r <= 0.0)
        throw std::domain_error("plate_stress_series: r must be positive");
    const double n = p.n, B = p.B;
    const double q = n / (n + 1.0);
    series_pair out;
    out.tau0_series =
        -B - std::pow(r * B * (n + 1.0) / (2.0 * n), q) -
        std::pow(B * (n + 1.0) / n, (n - 1.0) / (n + 1.0)) *
            ((3.0 * n + 1.0) / (2.0 * n + 1.0)) * std::pow(r / 2.0, 2.0 * q);
    out.tau1_series = std::sqrt(3.0) * pi * std::pow(B, q) / 4.0 *
                      std::pow(2.0 * n / (r * (n + 1.0)), 1.0 / (n + 1.0));
    return out;
}

std::optional<double> find_r0(const fluid_params& p) {
    // Plate stress minus B changes sign from negative (near the axis, where
    // the first-order term dominates) to positive; scan log-spaced radii so
    // small crossings are resolved, then polish with the bracketing solver.
    const auto excess = [&](double r) { return plate_stress(p, r) - p.B; };
    const int scan_points = 600;
    const double lo = r_min * 1.0001, hi = 1.0;
    double prev_r = lo;
    double prev_v = excess(prev_r);
    for (int i = 1; i <= scan_points; ++i) {
        const double r =
            lo * std::pow(hi / lo, static_cast<double>(i) / scan_points);
        const double v = excess(r);
        if (prev_v == 0.0) return prev_r;
        if ((prev_v < 0.0) != (v < 0.0))
            return num::find_root(excess, prev_r, r);
        prev_r = r;
        prev_v = v;
    }
    return std::nullopt; // fully yielded at the plate: valid for small eps*B
}

} // namespace hbflow
