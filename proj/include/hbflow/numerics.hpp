#ifndef HBFLOW_NUMERICS_HPP
#define HBFLOW_NUMERICS_HPP

#include <functional>

namespace hbflow::num {

/// Shared tolerance bundle for the scalar solvers.
struct tolerance {
    double abs_tol = 1e-12;
    double rel_tol = 1e-10;
    int max_iter = 200;
};

/// Process-wide default used by root-finding call sites that do not pass an
/// explicit tolerance (the CLI's --tol-root lands here). Mutate before
/// launching work; not synchronized.
tolerance& default_root_tol();

/// Process-wide default for quadrature call sites (--tol-quad).
tolerance& default_quad_tol();

/// Find x in [lo, hi] with f(x) = 0 by Brent's method (inverse quadratic /
/// secant steps with a bisection fallback, so the bracket never degrades).
/// Stops when the bracket width <= abs_tol + rel_tol·|x| (plus a machine
/// guard), which keeps x-accuracy bounded even when the residual scale is
/// far below abs_tol. Throws bracket_error if f(lo)·f(hi) > 0,
/// convergence_error (carrying the best iterate) if max_iter is exhausted.
double find_root(const std::function<double(double)>& f, double lo, double hi,
                 const tolerance& tol = default_root_tol());

/// Adaptive Gauss–Kronrod 7/15 quadrature of f over [a, b]. Globally
/// refines the worst interval first until the summed error estimate is
/// <= max(abs_tol, rel_tol·|result|). Handles integrable endpoint
/// singularities (x−a)^{−α}, α < 1, by refinement toward the endpoint
/// (Kronrod nodes are interior, so endpoints are never evaluated).
/// Throws quadrature_error (carrying the partial estimate) if the interval
/// budget is exhausted first.
double integrate(const std::function<double(double)>& f, double a, double b,
                 const tolerance& tol = default_quad_tol());

/// Central difference (f(x+h) − f(x−h)) / (2h). If h <= 0 the default step
/// max(1e-6, 1e-6·|x|) is used.
double derivative(const std::function<double(double)>& f, double x, double h = 0.0);

} // namespace hbflow::num

#endif
