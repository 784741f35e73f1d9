#include "hbflow/params.hpp"
#include "hbflow/errors.hpp"

#include <cmath>

namespace hbflow {

namespace {

void require_positive(double v, const char* field) {
    if (!(v > 0.0) || !std::isfinite(v))
        throw parameter_error(std::string("parameter '") + field + "' must be positive and finite");
}

} // namespace

fluid_params::fluid_params(double B_, double n_, double eps_, double Re_)
    : B(B_), n(n_), eps(eps_), Re(Re_), m(1.0 / n_) {
    if (!(B >= 0.0) || !std::isfinite(B))
        throw parameter_error("Bingham number B must be >= 0 and finite");
    if (!(n > 0.0) || !std::isfinite(n))
        throw parameter_error("power-law index n must be > 0 and finite");
    if (!(eps > 0.0 && eps < 1.0))
        throw parameter_error("aspect ratio eps must lie in (0, 1)");
    if (!(Re >= 0.0) || !std::isfinite(Re))
        throw parameter_error("Reynolds number Re must be >= 0 and finite");
}

fluid_params nondimensionalize(const dimensional_inputs& d) {
    require_positive(d.R_hat, "R_hat");
    require_positive(d.H_hat, "H_hat");
    require_positive(d.W_hat, "W_hat");
    require_positive(d.mu_hat, "mu_hat");
    require_positive(d.rho_hat, "rho_hat");
    require_positive(d.n, "n");
    if (!(d.tau0_hat >= 0.0) || !std::isfinite(d.tau0_hat))
        throw parameter_error("parameter 'tau0_hat' must be >= 0 and finite");
    if (!(d.H_hat < d.R_hat))
        throw parameter_error("half-gap H_hat must be smaller than the disk radius R_hat");

    const double eps = d.H_hat / d.R_hat;
    const double U = d.W_hat * d.R_hat / d.H_hat; // radial velocity scale
    const double B = d.tau0_hat * d.H_hat / (d.mu_hat * U);
    const double Re = d.rho_hat * d.W_hat * d.R_hat / d.mu_hat;
    return fluid_params(B, d.n, eps, Re);
}

fluid_params validate(const fluid_params& p, std::string* warning) {
    // Re-run the constructor checks (callers may have aggregate-copied).
    fluid_params checked(p.B, p.n, p.eps, p.Re);
    if (warning != nullptr) {
        warning->clear();
        if (p.Re > 0.1)
            *warning = "Re = " + std::to_string(p.Re) +
                       " stretches the creeping-flow assumption (Re << 1); results are "
                       "formally valid only in the inertialess limit";
    }
    return checked;
}

} // namespace hbflow
