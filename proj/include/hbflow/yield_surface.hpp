#ifndef HBFLOW_YIELD_SURFACE_HPP
#define HBFLOW_YIELD_SURFACE_HPP

#include "hbflow/params.hpp"

namespace hbflow {

/// Local description of the pseudo-yield surface.
struct yield_surface_point {
    double r;        ///< radius, in [0,1]
    double z0;       ///< pseudo-yield height, in (0,1]
    double z0_prime; ///< dz0/dr, <= 0
};

/// Left-hand side of the implicit equation defining z0(r):
///   (1−z0)^{2+m}/(2+m) − (1−z0)^{1+m} + (z0/B)^m (r/2)(1+m),  m = 1/n.
/// Strictly increasing in z0 on (0,1] for fixed r > 0, so the root below is
/// unique. Exposed for residual checks.
double z0_equation_residual(const fluid_params& p, double r, double z0);

/// Height of the pseudo-yield surface at radius r. The unique root of the
/// equation above in (0,1]; r = 0 returns exactly 1. Solved to near-machine
/// bracket width regardless of the process-wide root tolerance, because the
/// inverse-map consistency checks need x-accuracy ~1e-9 at extreme (B,n).
/// Throws parameter_error for B = 0 (no yield surface; the pure power-law
/// limit is not modeled) and bracket_error if the root is not enclosed.
double z0_of_r(const fluid_params& p, double r);

/// Analytic derivative dz0/dr evaluated at a consistent (r, z0) pair:
///   z0' = −(n+1)(2n+1) z0^{1+m} / [2 B^m (1−z0)^m (2n²z0² + 2n z0 + 1 + n)].
/// Strictly negative. Throws std::domain_error at z0 = 1 (r = 0), where the
/// derivative is singular.
double z0_prime(const fluid_params& p, double r, double z0);

/// Closed-form inverse map r(z0) (change of variables for the pressure and
/// force quadratures):
///   r = 2 B^m (1−z0)^{m+1} (m+1+z0) / [z0^m (m+1)(m+2)].
/// Throws std::domain_error for z0 <= 0.
double r_of_z0(const fluid_params& p, double z0);

/// Analytic derivative dr/dz0 of the inverse map:
///   dr/dz0 = −2 B^m (1−z0)^m (2z0² + 2m z0 + m + m²) / [z0^{m+1} (m+1)(m+2)].
/// Strictly negative on (0,1). Throws std::domain_error outside (0,1).
double dr_dz0(const fluid_params& p, double z0);

/// z0 evaluated at the disk edge r = 1 (needed by the edge pressure constant
/// and the closed-form forces).
double z0_edge(const fluid_params& p);

/// Bundle (r, z0(r), z0'(r)) in one call. r = 0 is rejected because z0' is
/// singular there.
yield_surface_point yield_point(const fluid_params& p, double r);

} // namespace hbflow

#endif
