#ifndef HBFLOW_PARAMS_HPP
#define HBFLOW_PARAMS_HPP

#include <string>

namespace hbflow {

/// Dimensional description of the squeeze-flow configuration.
/// All quantities in SI-consistent units; the consistency index mu_hat
/// has units Pa·s^n.
struct dimensional_inputs {
    double R_hat;    ///< disk radius [m]
    double H_hat;    ///< half-gap [m]
    double W_hat;    ///< plate approach speed [m/s]
    double mu_hat;   ///< consistency index [Pa·s^n]
    double tau0_hat; ///< yield stress [Pa]
    double rho_hat;  ///< density [kg/m^3]
    double n;        ///< power-law index [-]
};

/// Dimensionless problem parameters. Immutable after construction;
/// the constructor enforces B >= 0, n > 0, 0 < eps < 1, Re >= 0 and
/// derives m = 1/n.
struct fluid_params {
    double B;   ///< Bingham number
    double n;   ///< power-law index
    double eps; ///< aspect ratio (half-gap / radius)
    double Re;  ///< Reynolds number (kept for reporting; unused by the solution)
    double m;   ///< derived exponent 1/n

    fluid_params(double B_, double n_, double eps_, double Re_ = 0.0);
};

/// Map dimensional inputs to the dimensionless parameter set:
/// eps = H/R, U = W R/H, B = tau0 H / (mu U), Re = rho W R / mu.
/// Throws parameter_error naming the offending field on non-positive input
/// (tau0_hat = 0 is allowed and yields B = 0).
fluid_params nondimensionalize(const dimensional_inputs& d);

/// Re-validate a parameter set. Returns it unchanged on success; if the
/// creeping-flow assumption is stretched (Re > 0.1) and `warning` is
/// non-null, a human-readable note is stored there (the run proceeds).
fluid_params validate(const fluid_params& p, std::string* warning = nullptr);

} // namespace hbflow

#endif
